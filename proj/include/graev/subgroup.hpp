#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graev/space.hpp"
#include "graev/words.hpp"

namespace graev {

/// The equivalence relation {(x,y) : d(x,y) < epsilon} on the point set,
/// carried as the open partition at radius epsilon.
struct EpsilonRelation {
  Value epsilon;
  Partition relation;
};

EpsilonRelation epsilon_relation(const UltraMetricSpace& space,
                                 const Value& epsilon);

enum class GeneratorKind { j2, j2star };

/// j2: (x,y) -> x^-1 y; j2star: (x,y) -> x y^-1, over all related ordered
/// pairs with x != y, in point order.
std::vector<Word> generators(const EpsilonRelation& rel, GeneratorKind kind);

/// Membership in the normal closure of the j2 generators, decided through the
/// quotient homomorphism it is the kernel of: w is in the closure iff its
/// quotient image reduces to the identity.
bool in_normal_closure(const Word& w, const EpsilonRelation& rel);

struct BallCheckCounterexample {
  Word word;
  Value delta;      // graev_distance(word, e)
  bool in_closure;  // quotient image trivial
};

struct BallCheckReport {
  Value epsilon;
  int basepoint = 0;
  std::size_t words_checked = 0;
  std::vector<BallCheckCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Checks, word by word, that the open Graev ball B(e, epsilon) coincides
/// with the normal closure of the epsilon-relation generators:
///   graev_distance(w, e) < epsilon  <=>  in_normal_closure(w, rel).
/// Requires 0 < epsilon < 1 (argument_error otherwise); the Graev extension
/// at `basepoint` supplies the metric side.
BallCheckReport ball_subgroup_equivalence(const UltraMetricSpace& space,
                                          const Value& epsilon,
                                          const std::vector<Word>& sample,
                                          int basepoint = 0);

/// Sweep values covering every distinct open relation below 1: the positive
/// distance values < 1 plus midpoints between consecutive distance values
/// (and between the largest value and 1). Sorted, distinct.
std::vector<Value> sweep_epsilons(const UltraMetricSpace& space);

}  // namespace graev
