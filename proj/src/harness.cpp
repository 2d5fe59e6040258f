#include "graev/harness.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "graev/graev_metric.hpp"
#include "graev/match.hpp"
#include "graev/subgroup.hpp"
#include "graev/szhat.hpp"

namespace graev {

std::vector<Value> default_value_pool() {
  return {Value(1, 8), Value(1, 4), Value(1, 2), Value(3, 4), Value(1)};
}

namespace {

std::string point_name(int i) {
  static constexpr char kNames[] = "abcdfghijklmnopqrstuvwxyz";  // no 'e'
  if (i < 25) return std::string(1, kNames[i]);
  return "p" + std::to_string(i);
}

void shuffle_ints(std::vector<int>& v, SplitMix64& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
}

// Random dendrogram over the given points. `allowance` is the exclusive
// upper bound on the pool index usable for this subtree's root, which keeps
// heights strictly decreasing toward the leaves; when it reaches 0 every
// child must be a leaf, so the node splits into singletons.
Dendrogram::Node random_tree(std::vector<int> pts,
                             const std::vector<Value>& pool, int allowance,
                             SplitMix64& rng) {
  if (pts.size() == 1) {
    Dendrogram::Node leaf;
    leaf.leaf = point_name(pts[0]);
    return leaf;
  }
  const int hi = static_cast<int>(rng.below(static_cast<std::uint64_t>(allowance)));
  shuffle_ints(pts, rng);
  const size_t m = pts.size();
  size_t parts = (hi == 0) ? m : 2 + rng.below(m - 1);
  // Choose parts-1 distinct cut positions among the m-1 gaps.
  std::vector<int> gaps;
  for (size_t g = 1; g < m; ++g) gaps.push_back(static_cast<int>(g));
  shuffle_ints(gaps, rng);
  std::vector<int> cuts(gaps.begin(), gaps.begin() + (parts - 1));
  cuts.push_back(0);
  cuts.push_back(static_cast<int>(m));
  std::sort(cuts.begin(), cuts.end());

  Dendrogram::Node node;
  node.height = pool[static_cast<size_t>(hi)];
  for (size_t c = 0; c + 1 < cuts.size(); ++c) {
    std::vector<int> group(pts.begin() + cuts[c], pts.begin() + cuts[c + 1]);
    node.children.push_back(random_tree(std::move(group), pool, hi, rng));
  }
  return node;
}

std::vector<Value> usable_pool(const InstanceConfig& config,
                               bool cap_diameter) {
  std::vector<Value> pool = config.value_pool;
  std::erase_if(pool, [&](const Value& v) {
    return !(v > Value(0)) || (cap_diameter && v > Value(1));
  });
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.empty())
    throw argument_error("random_space: empty value pool" +
                         std::string(cap_diameter ? " after diameter cap" : ""));
  return pool;
}

}  // namespace

UltraMetricSpace random_space(const InstanceConfig& config, SplitMix64& rng,
                              bool cap_diameter) {
  if (config.n_points < 1)
    throw argument_error("random_space: n_points must be >= 1");
  const std::vector<Value> pool = usable_pool(config, cap_diameter);
  std::vector<int> pts;
  for (int i = 0; i < config.n_points; ++i) pts.push_back(i);
  Dendrogram tree;
  tree.root = random_tree(std::move(pts), pool,
                          static_cast<int>(pool.size()), rng);
  return from_dendrogram(tree);
}

Word random_word(const InstanceConfig& config, const UltraMetricSpace& space,
                 SplitMix64& rng, int max_len) {
  if (max_len < 0) max_len = config.max_word_len;
  const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
  RawWord raw;
  raw.alphabet_size = space.size();
  for (int i = 0; i < len; ++i)
    raw.symbols.emplace_back(
        Letter{static_cast<int>(rng.below(static_cast<std::uint64_t>(space.size()))),
               rng.coin() ? +1 : -1});
  return reduce(raw);
}

Word random_reduced_word(int length, const UltraMetricSpace& space,
                         SplitMix64& rng) {
  const int symbols = 2 * space.size();
  std::vector<Letter> letters;
  letters.reserve(static_cast<size_t>(length));
  int forbidden = -1;  // symbol id that would cancel the previous letter
  for (int i = 0; i < length; ++i) {
    const int choices = symbols - (forbidden >= 0 ? 1 : 0);
    int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(choices)));
    if (forbidden >= 0 && s >= forbidden) ++s;
    const Letter l{s / 2, (s % 2 == 0) ? +1 : -1};
    letters.push_back(l);
    forbidden = 2 * l.point + (l.sign < 0 ? 0 : 1);  // id of l.inverse()
  }
  return Word(std::move(letters), space.size());
}

RawWord random_trivial_raw(const InstanceConfig& config,
                           const UltraMetricSpace& space, SplitMix64& rng) {
  RawWord raw;
  raw.alphabet_size = space.size();
  const auto random_letter = [&] {
    return Letter{static_cast<int>(rng.below(static_cast<std::uint64_t>(space.size()))),
                  rng.coin() ? +1 : -1};
  };
  if (rng.coin()) {
    // u followed by its formal inverse, with a few identity symbols thrown in.
    const int m = 1 + static_cast<int>(rng.below(
                          static_cast<std::uint64_t>(std::max(1, config.max_word_len / 2))));
    std::vector<Letter> u;
    for (int i = 0; i < m; ++i) u.push_back(random_letter());
    for (const Letter& l : u) raw.symbols.emplace_back(l);
    for (auto it = u.rbegin(); it != u.rend(); ++it)
      raw.symbols.emplace_back(it->inverse());
    const int sprinkles = static_cast<int>(rng.below(3));
    for (int i = 0; i < sprinkles; ++i)
      raw.symbols.insert(raw.symbols.begin() +
                             static_cast<long>(rng.below(raw.symbols.size() + 1)),
                         std::nullopt);
  } else {
    // Repeated insertion of cancelling pairs (and occasional identity
    // symbols) at random positions; every trivial word arises this way.
    const int steps = 1 + static_cast<int>(rng.below(
                              static_cast<std::uint64_t>(std::max(1, config.max_word_len / 2))));
    for (int s = 0; s < steps; ++s) {
      const size_t pos = rng.below(raw.symbols.size() + 1);
      if (rng.below(4) == 0) {
        raw.symbols.insert(raw.symbols.begin() + static_cast<long>(pos),
                           std::nullopt);
      } else {
        const Letter l = random_letter();
        const auto it = raw.symbols.insert(
            raw.symbols.begin() + static_cast<long>(pos), Symbol(l.inverse()));
        raw.symbols.insert(it, Symbol(l));
      }
    }
  }
  assert(reduce(raw).is_identity());
  return raw;
}

std::vector<Word> sample_words_for_ball_check(const UltraMetricSpace& space,
                                              const Value& epsilon,
                                              std::size_t count,
                                              std::uint64_t seed) {
  SplitMix64 rng(seed);
  InstanceConfig config;
  config.n_points = space.size();
  config.max_word_len = 12;
  const EpsilonRelation rel = epsilon_relation(space, epsilon);
  const std::vector<Word> gens = generators(rel, GeneratorKind::j2);
  std::vector<Word> sample;
  sample.push_back(Word::identity(space.size()));
  while (sample.size() < count) {
    if (gens.empty() || rng.coin()) {
      sample.push_back(random_word(config, space, rng));
      continue;
    }
    // Product of conjugated generators: a closure element by construction.
    Word acc = Word::identity(space.size());
    const int factors = 1 + static_cast<int>(rng.below(3));
    for (int f = 0; f < factors; ++f) {
      Word g = gens[rng.below(gens.size())];
      if (rng.coin()) g = inverse(g);
      const Word u = random_word(config, space, rng, 3);
      acc = multiply(acc, conjugate(u, g));
    }
    sample.push_back(acc);
  }
  return sample;
}

// ---------------------------------------------------------------------------
// Campaign
// ---------------------------------------------------------------------------

namespace {

struct PropertyOutcome {
  std::uint64_t checks = 0;
  std::uint64_t passes = 0;
  std::optional<std::string> fail_detail;
};

// Collects assertion results for one instance of one property.
class Checker {
 public:
  explicit Checker(PropertyOutcome& out) : out_(out) {}

  void check(bool ok, const std::function<std::string()>& detail) {
    ++out_.checks;
    if (ok) {
      ++out_.passes;
    } else if (!out_.fail_detail) {
      out_.fail_detail = detail();
    }
  }

 private:
  PropertyOutcome& out_;
};

InstanceConfig sized(const InstanceConfig& config, SplitMix64& rng) {
  InstanceConfig c = config;
  c.n_points = 1 + static_cast<int>(rng.below(
                       static_cast<std::uint64_t>(config.n_points)));
  return c;
}

AlphabetMetric instance_metric(const InstanceConfig& config,
                               const UltraMetricSpace& space, SplitMix64& rng) {
  if (config.scheme == ExtensionScheme::sz)
    return extend_alphabet(space, ExtensionScheme::sz);
  return extend_alphabet(space, ExtensionScheme::graev,
                         static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(space.size()))));
}

std::string describe_word(const Word& w, const UltraMetricSpace& space) {
  return print_word(w, space.points());
}

void prop_dp_vs_oracle(const InstanceConfig& config, SplitMix64& rng,
                       Checker& ck) {
  const InstanceConfig local = sized(config, rng);
  const bool needs_cap = config.scheme == ExtensionScheme::sz;
  const UltraMetricSpace space = random_space(local, rng, needs_cap);
  const AlphabetMetric am = instance_metric(config, space, rng);
  const Word w = random_word(config, space, rng,
                             std::min(config.max_word_len, 12));
  const GraevResult oracle =
      graev_identity_distance(w, am, DistanceMethod::oracle, 14);
  const GraevResult dp = graev_identity_distance(w, am, DistanceMethod::dp);
  const GraevResult ref = graev_identity_distance_reference(w, am);
  const auto ctx = [&] {
    return "word " + describe_word(w, space) + ": oracle=" +
           oracle.value.str() + " dp=" + dp.value.str() + " ref=" +
           ref.value.str();
  };
  ck.check(dp.value == oracle.value, ctx);
  ck.check(ref.value == oracle.value, ctx);
  for (const GraevResult* r : {&oracle, &dp, &ref}) {
    const bool valid =
        w.is_identity() ||
        (is_match(r->witness) && match_cost(w, r->witness, am) == r->value);
    ck.check(valid, [&] { return "invalid witness for " + ctx(); });
  }
}

struct CoincidenceSample {
  UltraMetricSpace space;
  AlphabetMetric am;
  ThresholdChain chain;
  Word v, w;
  Value delta, hat;
};

CoincidenceSample coincidence_sample(const InstanceConfig& config,
                                     SplitMix64& rng) {
  const InstanceConfig local = sized(config, rng);
  UltraMetricSpace space = random_space(local, rng, /*cap_diameter=*/true);
  AlphabetMetric am = extend_alphabet(space, ExtensionScheme::sz);
  ThresholdChain chain = threshold_chain(space);
  Word v = random_word(config, space, rng);
  Word w = random_word(config, space, rng);
  const Value delta = graev_distance(v, w, am).value;
  const Value hat = dhat(v, w, space, chain);
  return {std::move(space), std::move(am), std::move(chain),
          std::move(v),     std::move(w),  delta,
          hat};
}

void prop_coincidence(const InstanceConfig& config, SplitMix64& rng,
                      Checker& ck) {
  const CoincidenceSample s = coincidence_sample(config, rng);
  ck.check(s.delta == s.hat, [&] {
    return "delta_u(" + describe_word(s.v, s.space) + ", " +
           describe_word(s.w, s.space) + ") = " + s.delta.str() +
           " but dhat = " + s.hat.str();
  });
}

void prop_delta_geq_dhat(const InstanceConfig& config, SplitMix64& rng,
                         Checker& ck) {
  const CoincidenceSample s = coincidence_sample(config, rng);
  ck.check(s.delta >= s.hat, [&] {
    return "delta_u = " + s.delta.str() + " < dhat = " + s.hat.str() +
           " on (" + describe_word(s.v, s.space) + ", " +
           describe_word(s.w, s.space) + ")";
  });
}

void prop_delta_leq_dhat(const InstanceConfig& config, SplitMix64& rng,
                         Checker& ck) {
  const CoincidenceSample s = coincidence_sample(config, rng);
  ck.check(s.delta <= s.hat, [&] {
    return "delta_u = " + s.delta.str() + " > dhat = " + s.hat.str() +
           " on (" + describe_word(s.v, s.space) + ", " +
           describe_word(s.w, s.space) + ")";
  });
}

void prop_metric_axioms(const InstanceConfig& config, SplitMix64& rng,
                        Checker& ck) {
  const InstanceConfig local = sized(config, rng);
  const bool needs_cap = config.scheme == ExtensionScheme::sz;
  const UltraMetricSpace space = random_space(local, rng, needs_cap);
  const AlphabetMetric am = instance_metric(config, space, rng);
  const Word u = random_word(config, space, rng);
  const Word v = random_word(config, space, rng);
  const Word w = random_word(config, space, rng);
  const auto delta = [&](const Word& a, const Word& b) {
    return graev_distance(a, b, am).value;
  };
  ck.check(delta(u, v) == delta(v, u),
           [&] { return "delta_u symmetry fails"; });
  ck.check(delta(u, u).is_zero(), [&] { return "delta_u(u,u) != 0"; });
  ck.check(u == v || !delta(u, v).is_zero(),
           [&] { return "delta_u(u,v) = 0 for distinct words"; });
  ck.check(delta(u, w) <= max(delta(u, v), delta(v, w)), [&] {
    return "delta_u strong triangle fails on " + describe_word(u, space) +
           ", " + describe_word(v, space) + ", " + describe_word(w, space);
  });

  const UltraMetricSpace capped =
      config.scheme == ExtensionScheme::sz
          ? space
          : random_space(local, rng, /*cap_diameter=*/true);
  const ThresholdChain chain = threshold_chain(capped);
  const Word a = random_word(config, capped, rng);
  const Word b = random_word(config, capped, rng);
  const Word c = random_word(config, capped, rng);
  const auto hat = [&](const Word& x, const Word& y) {
    return dhat(x, y, capped, chain);
  };
  ck.check(hat(a, b) == hat(b, a), [&] { return "dhat symmetry fails"; });
  ck.check(hat(a, a).is_zero(), [&] { return "dhat(a,a) != 0"; });
  ck.check(a == b || !hat(a, b).is_zero(),
           [&] { return "dhat(a,b) = 0 for distinct words"; });
  ck.check(hat(a, c) <= max(hat(a, b), hat(b, c)),
           [&] { return "dhat strong triangle fails"; });
}

void prop_invariance(const InstanceConfig& config, SplitMix64& rng,
                     Checker& ck) {
  const InstanceConfig local = sized(config, rng);
  const bool needs_cap = config.scheme == ExtensionScheme::sz;
  const UltraMetricSpace space = random_space(local, rng, needs_cap);
  const AlphabetMetric am = instance_metric(config, space, rng);
  const Word u = random_word(config, space, rng);
  const Word v = random_word(config, space, rng);
  const Word w = random_word(config, space, rng);
  const auto delta = [&](const Word& a, const Word& b) {
    return graev_distance(a, b, am).value;
  };
  const Value base = delta(v, w);
  ck.check(delta(multiply(u, v), multiply(u, w)) == base,
           [&] { return "delta_u left invariance fails"; });
  ck.check(delta(multiply(v, u), multiply(w, u)) == base,
           [&] { return "delta_u right invariance fails"; });

  const UltraMetricSpace capped =
      config.scheme == ExtensionScheme::sz
          ? space
          : random_space(local, rng, /*cap_diameter=*/true);
  const ThresholdChain chain = threshold_chain(capped);
  const Word a = random_word(config, capped, rng);
  const Word b = random_word(config, capped, rng);
  const Word t = random_word(config, capped, rng);
  const Value hbase = dhat(a, b, capped, chain);
  ck.check(dhat(multiply(t, a), multiply(t, b), capped, chain) == hbase,
           [&] { return "dhat left invariance fails"; });
  ck.check(dhat(multiply(a, t), multiply(b, t), capped, chain) == hbase,
           [&] { return "dhat right invariance fails"; });
}

void prop_extension(const InstanceConfig& config, SplitMix64& rng,
                    Checker& ck) {
  const InstanceConfig local = sized(config, rng);
  const bool needs_cap = config.scheme == ExtensionScheme::sz;
  const UltraMetricSpace space = random_space(local, rng, needs_cap);
  const AlphabetMetric am = instance_metric(config, space, rng);
  const int n = space.size();
  std::vector<Symbol> symbols;
  symbols.emplace_back(std::nullopt);
  for (int i = 0; i < n; ++i) symbols.emplace_back(Letter{i, +1});
  for (int i = 0; i < n; ++i) symbols.emplace_back(Letter{i, -1});
  const auto as_word = [&](const Symbol& s) {
    return s ? Word({*s}, n) : Word::identity(n);
  };
  for (const Symbol& s : symbols)
    for (const Symbol& t : symbols) {
      const Value got = graev_distance(as_word(s), as_word(t), am).value;
      const Value want = am.dist(s, t);
      ck.check(got == want, [&] {
        return "delta_u does not extend d on X-bar: got " + got.str() +
               ", metric says " + want.str();
      });
    }

  const UltraMetricSpace capped =
      config.scheme == ExtensionScheme::sz
          ? space
          : random_space(local, rng, /*cap_diameter=*/true);
  const ThresholdChain chain = threshold_chain(capped);
  const int m = capped.size();
  for (int i = 0; i < m; ++i) {
    const Word x({Letter{i, +1}}, m);
    ck.check(dhat(x, Word::identity(m), capped, chain) == Value(1),
             [&] { return "dhat(x, e) != 1"; });
    for (int j = 0; j < m; ++j) {
      const Word y({Letter{j, +1}}, m);
      ck.check(dhat(x, y, capped, chain) == capped.dist(i, j), [&] {
        return "dhat does not extend d on X: dhat(" + capped.name(i) + "," +
               capped.name(j) + ") != " + capped.dist(i, j).str();
      });
    }
  }
}

void prop_maximality(const InstanceConfig& config, SplitMix64& rng,
                     Checker& ck) {
  const InstanceConfig local = sized(config, rng);
  const UltraMetricSpace space = random_space(local, rng, /*cap_diameter=*/true);
  const AlphabetMetric am = extend_alphabet(space, ExtensionScheme::sz);
  const ThresholdChain chain = threshold_chain(space);
  const Word w = random_word(config, space, rng,
                             std::min(config.max_word_len, 10));
  if (w.is_identity()) {
    ck.check(true, [] { return ""; });
    return;
  }
  const Value hat = dhat(w, Word::identity(space.size()), space, chain);
  bool all = true;
  Value bad(0);
  enumerate_matches(w.length(), [&](const Match& theta) {
    const Value c = match_cost(w, theta, am);
    if (c < hat) {
      all = false;
      bad = c;
    }
  });
  ck.check(all, [&] {
    return "match cost " + bad.str() + " below dhat(w,e) = " + hat.str() +
           " for w = " + describe_word(w, space);
  });
}

void prop_ball_subgroup(const InstanceConfig& config, SplitMix64& rng,
                        Checker& ck) {
  const InstanceConfig local = sized(config, rng);
  const UltraMetricSpace space = random_space(local, rng);
  const int basepoint =
      static_cast<int>(rng.below(static_cast<std::uint64_t>(space.size())));
  for (const Value& eps : sweep_epsilons(space)) {
    const std::vector<Word> sample =
        sample_words_for_ball_check(space, eps, 12, rng.next());
    const BallCheckReport report =
        ball_subgroup_equivalence(space, eps, sample, basepoint);
    ck.check(report.ok(), [&] {
      const auto& c = report.counterexamples.front();
      return "ball/closure mismatch at epsilon = " + eps.str() + ": word " +
             describe_word(c.word, space) + " has delta_u = " +
             c.delta.str() + " but in_closure = " +
             (c.in_closure ? "true" : "false");
    });
  }
}

void prop_cancellation_match(const InstanceConfig& config, SplitMix64& rng,
                             Checker& ck) {
  const InstanceConfig local = sized(config, rng);
  const UltraMetricSpace space = random_space(local, rng);
  const RawWord raw = random_trivial_raw(config, space, rng);
  const auto theta = cancellation_match(raw);
  if (!theta) {
    ck.check(false, [&] {
      return "no match returned for trivial word " +
             print_raw_word(raw, space.points());
    });
    return;
  }
  bool pointwise = is_match(*theta);
  for (int i = 0; i < raw.length() && pointwise; ++i) {
    const Symbol& here = raw.symbols[static_cast<size_t>(i)];
    const Symbol& there = raw.symbols[static_cast<size_t>((*theta)(i))];
    pointwise = (there == symbol_inverse(here));
  }
  ck.check(pointwise, [&] {
    return "cancellation match violates x_theta(i) = x_i^-1 on " +
           print_raw_word(raw, space.points());
  });

  // A nontrivial word must yield no match.
  const Word w = random_word(config, space, rng);
  if (!w.is_identity())
    ck.check(!cancellation_match(w.raw()).has_value(), [&] {
      return "cancellation_match returned a match for nontrivial " +
             describe_word(w, space);
    });
}

using PropertyFn = void (*)(const InstanceConfig&, SplitMix64&, Checker&);

struct PropertyEntry {
  const char* id;
  PropertyFn fn;
};

constexpr PropertyEntry kProperties[] = {
    {"dp_vs_oracle", prop_dp_vs_oracle},
    {"coincidence", prop_coincidence},
    {"delta_geq_dhat", prop_delta_geq_dhat},
    {"delta_leq_dhat", prop_delta_leq_dhat},
    {"metric_axioms", prop_metric_axioms},
    {"invariance", prop_invariance},
    {"extension", prop_extension},
    {"maximality", prop_maximality},
    {"ball_subgroup", prop_ball_subgroup},
    {"cancellation_match", prop_cancellation_match},
};

std::uint64_t property_stream_seed(std::uint64_t seed, size_t property_index,
                                   std::uint64_t instance) {
  SplitMix64 base(seed + 0x9E3779B97F4A7C15ULL * (property_index + 1));
  return base.next() + instance;
}

}  // namespace

const std::vector<std::string>& campaign_property_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : kProperties) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

bool CampaignReport::all_pass() const {
  for (const auto& p : properties)
    if (!p.ok()) return false;
  return true;
}

std::string CampaignReport::to_text() const {
  std::ostringstream os;
  os << "campaign: seed=" << config.seed << " instances=" << config.instances
     << " points<=" << config.n_points << " max_word_len=" << config.max_word_len
     << " scheme=" << to_string(config.scheme) << "\n";
  for (const auto& p : properties) {
    os << "  " << p.id << ": " << p.passes << "/" << p.checks
       << (p.ok() ? " pass" : " FAIL") << "\n";
    if (p.first_failure)
      os << "    first failure at instance " << p.first_failure->instance
         << ": " << p.first_failure->detail << "\n";
  }
  os << (all_pass() ? "all properties passed" : "FAILURES PRESENT") << "\n";
  return os.str();
}

CampaignReport run_campaign(const InstanceConfig& config,
                            const std::vector<std::string>& properties) {
  std::vector<size_t> selected;
  for (const std::string& id : properties) {
    bool found = false;
    for (size_t k = 0; k < std::size(kProperties); ++k)
      if (id == kProperties[k].id) {
        selected.push_back(k);
        found = true;
        break;
      }
    if (!found) throw argument_error("run_campaign: unknown property '" + id + "'");
  }

  CampaignReport report;
  report.config = config;
  const std::int64_t instances = static_cast<std::int64_t>(config.instances);
  for (size_t s = 0; s < selected.size(); ++s) {
    const PropertyEntry& entry = kProperties[selected[s]];
    std::vector<PropertyOutcome> outcomes(static_cast<size_t>(instances));
    // Instances are independent and individually seeded, so the loop can run
    // in any order on any number of threads.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < instances; ++i) {
      SplitMix64 rng(property_stream_seed(config.seed, selected[s],
                                          static_cast<std::uint64_t>(i)));
      Checker ck(outcomes[static_cast<size_t>(i)]);
      entry.fn(config, rng, ck);
    }
    PropertyStats stats;
    stats.id = entry.id;
    for (std::int64_t i = 0; i < instances; ++i) {
      const PropertyOutcome& o = outcomes[static_cast<size_t>(i)];
      stats.checks += o.checks;
      stats.passes += o.passes;
      if (o.fail_detail && !stats.first_failure)
        stats.first_failure =
            Counterexample{static_cast<std::uint64_t>(i), *o.fail_detail};
    }
    report.properties.push_back(std::move(stats));
  }
  return report;
}

std::vector<BenchRow> bench_dp(const std::vector<int>& lengths,
                               const UltraMetricSpace& space,
                               std::uint64_t seed, bool include_reference) {
  const AlphabetMetric am =
      space.diameter() <= Value(1)
          ? extend_alphabet(space, ExtensionScheme::sz)
          : extend_alphabet(space, ExtensionScheme::graev, 0);
  SplitMix64 rng(seed);
  std::vector<BenchRow> rows;
  const auto time_ms = [](const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
  };
  for (const int len : lengths) {
    const Word w = random_reduced_word(len, space, rng);
    BenchRow row;
    row.length = len;
    row.ms_dp = time_ms([&] { graev_identity_distance(w, am); });
    if (include_reference)
      row.ms_reference = time_ms([&] { graev_identity_distance_reference(w, am); });
    if (!rows.empty() && rows.back().ms_dp > 0 && row.ms_dp > 0)
      row.growth = std::log(row.ms_dp / rows.back().ms_dp) /
                   std::log(static_cast<double>(len) / rows.back().length);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace graev
