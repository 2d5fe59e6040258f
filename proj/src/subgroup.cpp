#include "graev/subgroup.hpp"

#include <algorithm>

#include "graev/graev_metric.hpp"

namespace graev {

EpsilonRelation epsilon_relation(const UltraMetricSpace& space,
                                 const Value& epsilon) {
  if (!(epsilon > Value(0)))
    throw argument_error("epsilon_relation: epsilon must be positive");
  return {epsilon, ball_partition(space, epsilon, PartitionMode::open)};
}

std::vector<Word> generators(const EpsilonRelation& rel, GeneratorKind kind) {
  const int n = rel.relation.size();
  std::vector<Word> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !rel.relation.same_class(x, y)) continue;
      if (kind == GeneratorKind::j2)
        out.emplace_back(std::vector<Letter>{{x, -1}, {y, +1}}, n);
      else
        out.emplace_back(std::vector<Letter>{{x, +1}, {y, -1}}, n);
    }
  return out;
}

bool in_normal_closure(const Word& w, const EpsilonRelation& rel) {
  return map_word(w, rel.relation).is_identity();
}

BallCheckReport ball_subgroup_equivalence(const UltraMetricSpace& space,
                                          const Value& epsilon,
                                          const std::vector<Word>& sample,
                                          int basepoint) {
  if (!(epsilon < Value(1)))
    throw argument_error(
        "ball_subgroup_equivalence: requires epsilon < 1 (got " +
        epsilon.str() + ")");
  const AlphabetMetric am =
      extend_alphabet(space, ExtensionScheme::graev, basepoint);
  const EpsilonRelation rel = epsilon_relation(space, epsilon);
  BallCheckReport report;
  report.epsilon = epsilon;
  report.basepoint = basepoint;
  for (const Word& w : sample) {
    const Value delta = graev_distance(w, Word::identity(space.size()), am).value;
    const bool in_ball = delta < epsilon;
    const bool in_closure = in_normal_closure(w, rel);
    ++report.words_checked;
    if (in_ball != in_closure)
      report.counterexamples.push_back({w, delta, in_closure});
  }
  return report;
}

std::vector<Value> sweep_epsilons(const UltraMetricSpace& space) {
  const std::vector<Value> vals = space.distance_values();  // sorted, has 0
  std::vector<Value> out;
  for (size_t k = 0; k < vals.size(); ++k) {
    if (!vals[k].is_zero() && vals[k] < Value(1)) out.push_back(vals[k]);
    if (k + 1 < vals.size()) out.push_back(midpoint(vals[k], vals[k + 1]));
  }
  if (vals.back() < Value(1)) out.push_back(midpoint(vals.back(), Value(1)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [](const Value& v) {
    return !(v > Value(0)) || !(v < Value(1));
  });
  return out;
}

}  // namespace graev
