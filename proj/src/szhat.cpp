#include "graev/szhat.hpp"

namespace graev {

ThresholdChain threshold_chain(const UltraMetricSpace& space) {
  ThresholdChain chain;
  chain.thresholds = space.distance_values();
  chain.partitions.reserve(chain.thresholds.size());
  for (const Value& t : chain.thresholds)
    chain.partitions.emplace_back(space, t, PartitionMode::closed);
  return chain;
}

Value dhat(const Word& v, const Word& w, const UltraMetricSpace& space,
           const ThresholdChain& chain) {
  if (space.diameter() > Value(1))
    throw diameter_error("dhat requires diameter <= 1 (diameter is " +
                         space.diameter().str() + ")");
  if (v.alphabet_size() != space.size() || w.alphabet_size() != space.size())
    throw argument_error("dhat: word alphabet does not match the space");
  if (alpha(v) != alpha(w)) return Value(1);
  // The set {r : quotient images agree} is upward closed and the open-ball
  // partition changes only at distance values, so the infimum is the first
  // chain threshold at which the images coincide. Equal exponent sums
  // guarantee agreement at the final single-class partition.
  for (int k = 0; k < chain.size(); ++k) {
    const Partition& part = chain.partitions[static_cast<size_t>(k)];
    if (map_word(v, part) == map_word(w, part))
      return chain.thresholds[static_cast<size_t>(k)];
  }
  throw error("dhat: threshold scan exhausted (internal bug)");
}

Value dhat(const Word& v, const Word& w, const UltraMetricSpace& space) {
  return dhat(v, w, space, threshold_chain(space));
}

}  // namespace graev
