#include "graev/subgroup.hpp"

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "graev/graev_metric.hpp"
#include "graev/harness.hpp"

using namespace graev;
using testing::W;
using testing::desk_space;

TEST_SUITE_BEGIN("subgroup");

TEST_CASE("generators on the desk space") {
  const UltraMetricSpace s = desk_space();
  const EpsilonRelation rel = epsilon_relation(s, Value(1, 2));
  const auto j2 = generators(rel, GeneratorKind::j2);
  REQUIRE(j2.size() == 2);
  CHECK(j2[0] == W("a^-1 b", s));
  CHECK(j2[1] == W("b^-1 a", s));
  const auto j2star = generators(rel, GeneratorKind::j2star);
  REQUIRE(j2star.size() == 2);
  CHECK(j2star[0] == W("a b^-1", s));
  CHECK(j2star[1] == W("b a^-1", s));

  // epsilon at or below the smallest positive distance relates nothing.
  CHECK(generators(epsilon_relation(s, Value(1, 4)), GeneratorKind::j2).empty());
  CHECK(generators(epsilon_relation(s, Value(1, 8)), GeneratorKind::j2).empty());
  CHECK_THROWS_AS(epsilon_relation(s, Value(0)), argument_error);
}

TEST_CASE("in_normal_closure basics") {
  const UltraMetricSpace s = desk_space();
  const EpsilonRelation rel = epsilon_relation(s, Value(1, 2));
  CHECK(in_normal_closure(W("a^-1 b", s), rel));
  CHECK(in_normal_closure(Word::identity(3), rel));
  CHECK_FALSE(in_normal_closure(W("a", s), rel));
  CHECK_FALSE(in_normal_closure(W("c", s), rel));
  // Normality: conjugates stay inside.
  CHECK(in_normal_closure(conjugate(W("c", s), W("a^-1 b", s)), rel));
  CHECK(in_normal_closure(conjugate(W("c b a", s), W("b^-1 a", s)), rel));
}

TEST_CASE("kernel is a normal subgroup") {
  const UltraMetricSpace s = desk_space();
  const EpsilonRelation rel = epsilon_relation(s, Value(1, 2));
  const auto gens = generators(rel, GeneratorKind::j2);
  InstanceConfig config;
  config.n_points = 3;
  config.max_word_len = 6;
  SplitMix64 rng(61);
  const auto random_member = [&] {
    Word acc = Word::identity(3);
    const int factors = 1 + static_cast<int>(rng.below(3));
    for (int f = 0; f < factors; ++f) {
      Word g = gens[rng.below(gens.size())];
      if (rng.coin()) g = inverse(g);
      acc = multiply(acc, conjugate(random_word(config, s, rng), g));
    }
    return acc;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const Word g = random_member();
    const Word h = random_member();
    const Word w = random_word(config, s, rng);
    CHECK(in_normal_closure(g, rel));
    CHECK(in_normal_closure(multiply(g, h), rel));
    CHECK(in_normal_closure(inverse(g), rel));
    CHECK(in_normal_closure(conjugate(w, g), rel));
  }
}

TEST_CASE("j2 and j2star generate the same normal closure") {
  InstanceConfig config;
  config.n_points = 5;
  SplitMix64 rng(62);
  for (int trial = 0; trial < 25; ++trial) {
    InstanceConfig local = config;
    local.n_points = 2 + static_cast<int>(rng.below(4));
    const UltraMetricSpace s = random_space(local, rng);
    for (const Value& eps : sweep_epsilons(s)) {
      const EpsilonRelation rel = epsilon_relation(s, eps);
      for (const Word& g : generators(rel, GeneratorKind::j2star))
        CHECK(in_normal_closure(g, rel));
      for (const Word& g : generators(rel, GeneratorKind::j2))
        CHECK(in_normal_closure(inverse(g), rel));
    }
  }
}

TEST_CASE("ball_subgroup_equivalence on the desk space") {
  const UltraMetricSpace s = desk_space();
  const std::vector<Word> sample = {W("a^-1 b", s), W("a", s),
                                    Word::identity(3), W("c a^-1 b c^-1", s),
                                    W("a b", s)};
  const BallCheckReport report =
      ball_subgroup_equivalence(s, Value(1, 2), sample, 0);
  CHECK(report.ok());
  CHECK(report.words_checked == sample.size());

  // delta_u(a^-1 b, e) = 1/4 < 1/2 and the closure contains a^-1 b.
  const AlphabetMetric am = extend_alphabet(s, ExtensionScheme::graev, 0);
  CHECK(graev_distance(W("a^-1 b", s), Word::identity(3), am).value ==
        Value(1, 4));
  CHECK(graev_distance(W("a", s), Word::identity(3), am).value == Value(1));

  CHECK_THROWS_AS(ball_subgroup_equivalence(s, Value(1), sample, 0),
                  argument_error);
  CHECK_THROWS_AS(ball_subgroup_equivalence(s, Value(3, 2), sample, 0),
                  argument_error);
}

TEST_CASE("ball_subgroup_equivalence across sweeps, basepoints and spaces") {
  InstanceConfig config;
  config.n_points = 4;
  config.max_word_len = 8;
  SplitMix64 rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    InstanceConfig local = config;
    local.n_points = 1 + static_cast<int>(rng.below(4));
    const UltraMetricSpace s = random_space(local, rng);
    for (const Value& eps : sweep_epsilons(s)) {
      const auto sample = sample_words_for_ball_check(s, eps, 25, rng.next());
      for (int basepoint = 0; basepoint < s.size(); ++basepoint) {
        const BallCheckReport report =
            ball_subgroup_equivalence(s, eps, sample, basepoint);
        CHECK(report.ok());
        if (!report.ok()) {
          const auto& c = report.counterexamples.front();
          MESSAGE("eps=" << eps.str() << " word="
                         << print_word(c.word, s.points())
                         << " delta=" << c.delta.str()
                         << " in_closure=" << c.in_closure);
        }
      }
    }
  }
}

TEST_CASE("sweep_epsilons covers values and midpoints below 1") {
  const UltraMetricSpace s = desk_space();
  const auto sweep = sweep_epsilons(s);
  const std::vector<Value> expected = {Value(1, 8), Value(1, 4), Value(3, 8),
                                       Value(1, 2), Value(3, 4)};
  CHECK(sweep == expected);
  for (const Value& eps : sweep) {
    CHECK(eps > Value(0));
    CHECK(eps < Value(1));
  }
}

TEST_SUITE_END();
