#include "graev/harness.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "graev/io.hpp"
#include "graev/space.hpp"

using namespace graev;

TEST_SUITE_BEGIN("harness");

TEST_CASE("random_space is reproducible and always valid") {
  InstanceConfig config;
  config.seed = 7;
  config.n_points = 6;
  SplitMix64 a(config.seed), b(config.seed);
  const UltraMetricSpace s1 = random_space(config, a);
  const UltraMetricSpace s2 = random_space(config, b);
  CHECK(format_space(s1) == format_space(s2));

  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    InstanceConfig local = config;
    local.n_points = 1 + static_cast<int>(rng.below(6));
    const UltraMetricSpace s = random_space(local, rng);
    std::vector<std::vector<Value>> matrix(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i)
      for (int j = 0; j < s.size(); ++j)
        matrix[static_cast<size_t>(i)].push_back(s.dist(i, j));
    CHECK(validate_ultrametric(matrix).ok());
  }
}

TEST_CASE("random_space corner cases") {
  InstanceConfig config;
  config.n_points = 1;
  SplitMix64 rng(1);
  CHECK(random_space(config, rng).size() == 1);

  config.value_pool = {Value(2)};
  CHECK_THROWS_AS(random_space(config, rng, /*cap_diameter=*/true),
                  argument_error);
  config.value_pool.clear();
  CHECK_THROWS_AS(random_space(config, rng), argument_error);
}

TEST_CASE("random words are deterministic and trivial mode reduces to e") {
  InstanceConfig config;
  config.n_points = 4;
  config.max_word_len = 12;
  SplitMix64 rng(5);
  const UltraMetricSpace s = random_space(config, rng);

  SplitMix64 r1(11), r2(11);
  CHECK(random_word(config, s, r1) == random_word(config, s, r2));

  for (int trial = 0; trial < 100; ++trial) {
    CHECK(reduce(random_trivial_raw(config, s, rng)).is_identity());
    const int len = 1 + static_cast<int>(rng.below(30));
    const Word w = random_reduced_word(len, s, rng);
    CHECK(w.length() == len);
  }
}

TEST_CASE("campaign runs every property") {
  InstanceConfig config;
  config.seed = 7;
  config.n_points = 4;
  config.max_word_len = 8;
  config.instances = 8;
  const CampaignReport report = run_campaign(config, campaign_property_ids());
  CHECK(report.all_pass());
  CHECK(report.properties.size() == campaign_property_ids().size());
  for (const auto& p : report.properties) {
    CHECK(p.checks > 0);
    CHECK(p.checks == p.passes);
  }
}

TEST_CASE("campaign reports are byte-identical across runs") {
  InstanceConfig config;
  config.seed = 3;
  config.n_points = 4;
  config.instances = 6;
  const std::vector<std::string> props = {"coincidence", "metric_axioms",
                                          "cancellation_match"};
  const auto r1 = run_campaign(config, props);
  const auto r2 = run_campaign(config, props);
  CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
  CHECK(r1.to_text() == r2.to_text());
}

TEST_CASE("campaign rejects unknown properties and accepts the empty set") {
  InstanceConfig config;
  config.instances = 1;
  CHECK_THROWS_AS(run_campaign(config, {"bogus"}), argument_error);
  const CampaignReport empty = run_campaign(config, {});
  CHECK(empty.properties.empty());
  CHECK(empty.all_pass());
}

TEST_CASE("campaign with one instance runs exactly one coincidence check") {
  InstanceConfig config;
  config.seed = 7;
  config.instances = 1;
  const CampaignReport report = run_campaign(config, {"coincidence"});
  REQUIRE(report.properties.size() == 1);
  CHECK(report.properties[0].checks == 1);
  CHECK(report.properties[0].passes == 1);
}

TEST_CASE("bench_dp returns timings per length") {
  InstanceConfig config;
  config.n_points = 4;
  SplitMix64 rng(17);
  const UltraMetricSpace s = random_space(config, rng);
  const auto rows = bench_dp({24, 48}, s, 1, /*include_reference=*/true);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].length == 24);
  CHECK(rows[1].length == 48);
  CHECK(rows[0].ms_dp >= 0.0);
  CHECK(rows[1].ms_reference >= 0.0);
}

TEST_SUITE_END();
