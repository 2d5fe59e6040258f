#pragma once

#include <string>
#include <vector>

#include "graev/space.hpp"
#include "graev/words.hpp"

namespace graev::testing {

// Three points with d(a,b) = 1/4 and d(a,c) = d(b,c) = 1/2; small enough to
// enumerate everything by hand, rich enough to have two merge levels.
inline UltraMetricSpace desk_space() {
  const Value q(1, 4), h(1, 2), z(0);
  return UltraMetricSpace::from_matrix(
      {"a", "b", "c"},
      {{z, q, h}, {q, z, h}, {h, h, z}});
}

// Two points at distance 3: diameter > 1, for exercising the graev scheme
// away from the unit regime.
inline UltraMetricSpace far_pair_space() {
  const Value z(0), three(3);
  return UltraMetricSpace::from_matrix({"a", "b"}, {{z, three}, {three, z}});
}

inline Word W(const std::string& text, const UltraMetricSpace& space) {
  return parse_word(text, space.points());
}

inline RawWord RW(const std::string& text, const UltraMetricSpace& space) {
  return parse_raw_word(text, space.points());
}

}  // namespace graev::testing
