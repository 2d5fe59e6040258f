#pragma once

#include <vector>

#include "graev/space.hpp"
#include "graev/words.hpp"

namespace graev {

/// Sorted distinct distance values 0 = t_0 < t_1 < ... < t_m of a space,
/// each with its closed-ball partition. The partitions coarsen monotonically
/// and end in a single class; open-ball partitions step only at these values
/// (the open partition at radius r equals the closed partition at the largest
/// value strictly below r), which is what makes the d-hat infimum computable
/// by finite scan.
struct ThresholdChain {
  std::vector<Value> thresholds;
  std::vector<Partition> partitions;

  int size() const { return static_cast<int>(thresholds.size()); }
};

ThresholdChain threshold_chain(const UltraMetricSpace& space);

/// The Savchenko-Zarichnyi ultra-metric d-hat on F(X) for diameter <= 1:
/// 1 when the exponent sums differ, otherwise the smallest threshold t at
/// which the quotient images of v and w coincide, which equals
/// inf{r > 0 : F(q_r)(v) = F(q_r)(w)} over open-ball quotients.
/// Throws diameter_error when diameter > 1.
Value dhat(const Word& v, const Word& w, const UltraMetricSpace& space,
           const ThresholdChain& chain);
Value dhat(const Word& v, const Word& w, const UltraMetricSpace& space);

}  // namespace graev
