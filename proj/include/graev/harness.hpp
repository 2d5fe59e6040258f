#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graev/space.hpp"
#include "graev/words.hpp"

namespace graev {

/// SplitMix64 (Steele, Lea, Flood 2014): state advances by the golden-gamma
/// constant and each output is a finalizer hash of the state. Portable and
/// fully specified here, so any run replays from its seed on any platform;
/// nearby seeds yield decorrelated streams, letting campaign instance i use
/// seed + i directly.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

std::vector<Value> default_value_pool();  // {1/8, 1/4, 1/2, 3/4, 1}

/// Reproducibility contract: identical configs produce identical instance
/// streams and identical campaign reports.
struct InstanceConfig {
  std::uint64_t seed = 1;
  int n_points = 5;
  int max_word_len = 10;
  std::vector<Value> value_pool = default_value_pool();
  ExtensionScheme scheme = ExtensionScheme::sz;
  std::uint64_t instances = 100;
};

/// Random dendrogram with heights drawn from the value pool (strictly
/// decreasing toward the leaves), converted to a space; always valid.
/// cap_diameter restricts the pool to values <= 1 for schemes that need it.
UltraMetricSpace random_space(const InstanceConfig& config, SplitMix64& rng,
                              bool cap_diameter = false);

/// Uniform letters, random length <= max_len (config.max_word_len when -1),
/// reduced.
Word random_word(const InstanceConfig& config, const UltraMetricSpace& space,
                 SplitMix64& rng, int max_len = -1);

/// Reduced word of exactly the requested length (each letter avoids
/// cancelling its predecessor).
Word random_reduced_word(int length, const UltraMetricSpace& space,
                         SplitMix64& rng);

/// Raw word that reduces to the identity, built either as u u^-1 or by
/// repeatedly inserting cancelling pairs and identity symbols.
RawWord random_trivial_raw(const InstanceConfig& config,
                           const UltraMetricSpace& space, SplitMix64& rng);

/// Mixed sample for ball/subgroup checks: the identity, random words, and
/// products of conjugated epsilon-generators (elements of the closure by
/// construction).
std::vector<Word> sample_words_for_ball_check(const UltraMetricSpace& space,
                                              const Value& epsilon,
                                              std::size_t count,
                                              std::uint64_t seed);

struct Counterexample {
  std::uint64_t instance = 0;  // replay: SplitMix64(config.seed offset + instance)
  std::string detail;
};

struct PropertyStats {
  std::string id;
  std::uint64_t checks = 0;
  std::uint64_t passes = 0;
  std::optional<Counterexample> first_failure;

  bool ok() const { return checks == passes && !first_failure; }
};

struct CampaignReport {
  InstanceConfig config;
  std::vector<PropertyStats> properties;

  bool all_pass() const;
  std::string to_text() const;
};

/// Property ids accepted by run_campaign, in canonical order:
///   dp_vs_oracle      dp and reference values equal the enumeration oracle,
///                     witnesses valid (schemes per config, words <= 12)
///   coincidence       graev_distance == dhat under the unit extension
///   delta_geq_dhat    one-sided: graev_distance >= dhat
///   delta_leq_dhat    one-sided: graev_distance <= dhat
///   metric_axioms     ultra-metric axioms for both metrics
///   invariance        two-sided invariance for both metrics
///   extension         delta_u extends d on X-bar; dhat extends d on X u {e}
///   maximality        every match cost of w dominates dhat(w, e)
///   ball_subgroup     open ball at epsilon equals the generator closure
///   cancellation_match trivial words yield pointwise-inverse matches
/// Properties that need diameter <= 1 or a fixed scheme arrange that
/// themselves; the config scheme drives the scheme-agnostic ones.
const std::vector<std::string>& campaign_property_ids();

/// Runs each selected property over config.instances independent instances;
/// instance i of property p is generated from SplitMix64 seeded by a value
/// derived from (config.seed, p, i), so any failure replays from the report
/// alone. Exact comparisons throughout. Instances are evaluated in parallel;
/// the merge is order-independent (counts commute, first counterexample is
/// chosen by instance index). Throws argument_error for unknown ids.
CampaignReport run_campaign(const InstanceConfig& config,
                            const std::vector<std::string>& properties);

struct BenchRow {
  int length = 0;
  double ms_dp = 0.0;         // parallel kernel
  double ms_reference = -1.0; // serial reference; < 0 when skipped
  double growth = 0.0;        // log(t/t_prev) / log(n/n_prev), 0 for first row
};

/// Times graev_identity_distance on one random reduced word per length.
std::vector<BenchRow> bench_dp(const std::vector<int>& lengths,
                               const UltraMetricSpace& space,
                               std::uint64_t seed, bool include_reference);

}  // namespace graev
