#pragma once

#include "graev/match.hpp"
#include "graev/space.hpp"
#include "graev/words.hpp"

namespace graev {

/// Distance value together with a witnessing match over the positions of the
/// reduced word it was computed on (v^-1 w for two-word distances).
struct GraevResult {
  Value value;
  Match witness;
};

enum class DistanceMethod {
  oracle,  // enumerate all matches, capped
  dp,      // interval dynamic program (parallel kernel)
};

/// delta_u(w, e) = min over matches theta of rho(w, w^theta).
///
/// The dp method runs an interval recurrence over the min-max semiring:
///   D[i..j] = min( max(d(x_i,e), D[i+1..j]),
///                  min_{k in (i..j]} max(d(x_k, x_i^-1), D[i+1..k-1], D[k+1..j]) )
/// with D[empty] = 0; noncrossing matches decompose exactly this way, so the
/// table minimum equals the oracle minimum. Distances are interned into dense
/// rank codes first (min/max only ever copy values), and rows of equal
/// interval length are filled in parallel. Witness reconstruction backtracks
/// with a deterministic tie-break: fixed point first, then the smallest
/// pairing partner.
GraevResult graev_identity_distance(const Word& w, const AlphabetMetric& am,
                                    DistanceMethod method = DistanceMethod::dp,
                                    int oracle_cap = 0);

/// Serial reference implementation of the same recurrence, computed directly
/// on exact rational values. Kept for differential testing and benchmarking
/// against the parallel kernel; both produce identical values and witnesses.
GraevResult graev_identity_distance_reference(const Word& w,
                                              const AlphabetMetric& am);

/// Graev ultra-metric delta_u(v,w), computed as delta_u(v^-1 w, e); the
/// metric is two-sided invariant, so this is exact. Extends the alphabet
/// metric: for single letters, graev_distance(x, y) = d(x, y).
GraevResult graev_distance(const Word& v, const Word& w,
                           const AlphabetMetric& am,
                           DistanceMethod method = DistanceMethod::dp,
                           int oracle_cap = 0);

}  // namespace graev
