#include "graev/words.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "graev/harness.hpp"
#include "graev/space.hpp"

using namespace graev;
using testing::RW;
using testing::W;
using testing::desk_space;

TEST_SUITE_BEGIN("words");

TEST_CASE("reduce") {
  const UltraMetricSpace s = desk_space();
  CHECK(reduce(RW("a a^-1", s)).is_identity());
  CHECK(reduce(RW("a b^-1 b c", s)) == W("a c", s));
  CHECK(reduce(RW("e a e", s)) == W("a", s));
  CHECK(reduce(RW("e", s)).is_identity());
  CHECK(reduce(RW("b a a^-1 b^-1", s)).is_identity());
}

TEST_CASE("reduce is idempotent and length-non-increasing") {
  const UltraMetricSpace s = desk_space();
  InstanceConfig config;
  config.n_points = 3;
  config.max_word_len = 16;
  SplitMix64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    RawWord raw;
    raw.alphabet_size = s.size();
    const int len = static_cast<int>(rng.below(17));
    for (int i = 0; i < len; ++i) {
      if (rng.below(5) == 0)
        raw.symbols.emplace_back(std::nullopt);
      else
        raw.symbols.emplace_back(Letter{static_cast<int>(rng.below(3)),
                                        rng.coin() ? +1 : -1});
    }
    const Word once = reduce(raw);
    CHECK(once.length() <= raw.length());
    CHECK(reduce(once.raw()) == once);
    // Word invariant: no e symbols, no adjacent inverse pairs.
    for (int i = 1; i < once.length(); ++i)
      CHECK_FALSE(once.letter(i) == once.letter(i - 1).inverse());
  }
}

TEST_CASE("word construction rejects unreduced sequences") {
  CHECK_THROWS_AS(Word({{0, +1}, {0, -1}}, 3), argument_error);
  CHECK_THROWS_AS(Word({{5, +1}}, 3), argument_error);
  CHECK_THROWS_AS(Word({{0, 2}}, 3), argument_error);
}

TEST_CASE("multiply and inverse") {
  const UltraMetricSpace s = desk_space();
  CHECK(multiply(W("a b", s), W("b^-1 c", s)) == W("a c", s));
  CHECK(inverse(W("a b^-1", s)) == W("b a^-1", s));
  CHECK(multiply(W("a b", s), inverse(W("a b", s))).is_identity());
  CHECK_THROWS_AS(multiply(W("a", s), Word::identity(5)), argument_error);
}

TEST_CASE("group laws hold on random words") {
  const UltraMetricSpace s = desk_space();
  InstanceConfig config;
  config.n_points = 3;
  config.max_word_len = 8;
  SplitMix64 rng(22);
  const Word e = Word::identity(s.size());
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_word(config, s, rng);
    const Word v = random_word(config, s, rng);
    const Word w = random_word(config, s, rng);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, e) == u);
    CHECK(multiply(e, u) == u);
    CHECK(multiply(u, inverse(u)).is_identity());
    CHECK(multiply(inverse(u), u).is_identity());
    CHECK(inverse(inverse(u)) == u);
  }
}

TEST_CASE("conjugation identity w t s^-1 w^-1 = (ws) s^-1 t (ws)^-1") {
  const UltraMetricSpace s = desk_space();
  InstanceConfig config;
  config.n_points = 3;
  config.max_word_len = 6;
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(config, s, rng);
    const Word t = random_word(config, s, rng);
    const Word sw = random_word(config, s, rng);
    const Word lhs =
        multiply(multiply(multiply(w, t), inverse(sw)), inverse(w));
    const Word ws = multiply(w, sw);
    const Word rhs =
        multiply(multiply(multiply(ws, inverse(sw)), t), inverse(ws));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("alpha") {
  const UltraMetricSpace s = desk_space();
  CHECK(alpha(W("a b^-1", s)) == 0);
  CHECK(alpha(W("a c^-1 b", s)) == 1);
  CHECK(alpha(Word::identity(3)) == 0);

  InstanceConfig config;
  config.n_points = 3;
  SplitMix64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_word(config, s, rng);
    const Word v = random_word(config, s, rng);
    CHECK(alpha(multiply(u, v)) == alpha(u) + alpha(v));
    CHECK(alpha(inverse(u)) == -alpha(u));
  }
}

TEST_CASE("map_word relabels and reduces") {
  const UltraMetricSpace s = desk_space();
  const Partition merge_ab = ball_partition(s, Value(1, 4), PartitionMode::closed);
  CHECK(map_word(W("a b^-1 a b^-1", s), merge_ab).is_identity());

  const Word image = map_word(W("a b^-1 c", s), merge_ab);
  REQUIRE(image.length() == 1);
  CHECK(image.letter(0).point == merge_ab.class_index(2));
  CHECK(image.alphabet_size() == 2);

  const Partition discrete = ball_partition(s, Value(0), PartitionMode::closed);
  InstanceConfig config;
  config.n_points = 3;
  SplitMix64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const Word u = random_word(config, s, rng);
    const Word v = random_word(config, s, rng);
    CHECK(map_word(u, discrete) == u);  // identity relabeling
    CHECK(map_word(multiply(u, v), merge_ab) ==
          multiply(map_word(u, merge_ab), map_word(v, merge_ab)));
    CHECK(map_word(inverse(u), merge_ab) == inverse(map_word(u, merge_ab)));
  }
}

TEST_CASE("parse and print round-trip") {
  const UltraMetricSpace s = desk_space();
  CHECK(print_word(W("a b^-1 c", s), s.points()) == "a b^-1 c");
  CHECK(print_word(Word::identity(3), s.points()) == "e");
  CHECK(W("e", s).is_identity());
  CHECK_THROWS_AS(W("a d", s), argument_error);

  InstanceConfig config;
  config.n_points = 3;
  config.max_word_len = 10;
  SplitMix64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_word(config, s, rng);
    CHECK(parse_word(print_word(u, s.points()), s.points()) == u);
  }
}

TEST_SUITE_END();
