#include "graev/space.hpp"

#include <algorithm>
#include <set>

namespace graev {

std::string to_string(ExtensionScheme s) {
  return s == ExtensionScheme::sz ? "sz" : "graev";
}

namespace {

std::string point_label(int i, const std::vector<std::string>& names) {
  if (i >= 0 && static_cast<size_t>(i) < names.size())
    return "'" + names[static_cast<size_t>(i)] + "'";
  return "#" + std::to_string(i);
}

}  // namespace

std::string MatrixIssue::describe(const std::vector<std::string>& names) const {
  switch (kind) {
    case Kind::not_square:
      return "matrix is not square (row " + std::to_string(i) + " has " +
             std::to_string(j) + " entries, expected " + std::to_string(k) +
             ")";
    case Kind::not_symmetric:
      return "matrix is not symmetric at (" + point_label(i, names) + ", " +
             point_label(j, names) + "): " + lhs.str() + " vs " + rhs.str();
    case Kind::nonzero_diagonal:
      return "nonzero diagonal at " + point_label(i, names) + ": " + lhs.str();
    case Kind::negative_entry:
      return "negative entry at (" + point_label(i, names) + ", " +
             point_label(j, names) + "): " + lhs.str();
    case Kind::zero_off_diagonal:
      return "zero distance between distinct points (" + point_label(i, names) +
             ", " + point_label(j, names) + ")";
    case Kind::triangle:
      return "strong triangle inequality fails at (" + point_label(i, names) +
             ", " + point_label(j, names) + ", " + point_label(k, names) +
             "): d = " + lhs.str() + " > max = " + rhs.str();
  }
  return "unknown issue";
}

ValidationResult validate_ultrametric(
    const std::vector<std::vector<Value>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[static_cast<size_t>(i)].size()) != n)
      return {MatrixIssue{MatrixIssue::Kind::not_square, i,
                          static_cast<int>(matrix[static_cast<size_t>(i)].size()),
                          n, Value(), Value()}};
  }
  const auto at = [&](int i, int j) -> const Value& {
    return matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
  };
  for (int i = 0; i < n; ++i) {
    if (!at(i, i).is_zero())
      return {MatrixIssue{MatrixIssue::Kind::nonzero_diagonal, i, i, -1,
                          at(i, i), Value()}};
    for (int j = 0; j < n; ++j) {
      if (at(i, j).negative())
        return {MatrixIssue{MatrixIssue::Kind::negative_entry, i, j, -1,
                            at(i, j), Value()}};
      if (j > i && at(i, j) != at(j, i))
        return {MatrixIssue{MatrixIssue::Kind::not_symmetric, i, j, -1,
                            at(i, j), at(j, i)}};
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j).is_zero())
        return {MatrixIssue{MatrixIssue::Kind::zero_off_diagonal, i, j, -1,
                            Value(0), Value(0)}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Value bound = max(at(i, j), at(j, k));
        if (at(i, k) > bound)
          return {MatrixIssue{MatrixIssue::Kind::triangle, i, j, k, at(i, k),
                              bound}};
      }
    }
  return {};
}

UltraMetricSpace UltraMetricSpace::from_matrix(
    std::vector<std::string> points,
    const std::vector<std::vector<Value>>& matrix) {
  if (points.size() != matrix.size())
    throw structural_error("space: " + std::to_string(points.size()) +
                           " points but " + std::to_string(matrix.size()) +
                           " matrix rows");
  std::set<std::string> seen;
  for (const auto& p : points) {
    if (p.empty()) throw structural_error("space: empty point name");
    if (p == "e") throw structural_error("space: point name 'e' is reserved");
    if (!seen.insert(p).second)
      throw structural_error("space: duplicate point name '" + p + "'");
  }
  const ValidationResult check = validate_ultrametric(matrix);
  if (!check.ok())
    throw structural_error("space: " + check.issue->describe(points));
  const size_t n = points.size();
  std::vector<Value> flat(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) flat[i * n + j] = matrix[i][j];
  return UltraMetricSpace(std::move(points), std::move(flat));
}

std::optional<int> UltraMetricSpace::index(const std::string& name) const {
  for (size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Value UltraMetricSpace::diameter() const {
  Value d(0);
  for (const Value& v : dist_) d = max(d, v);
  return d;
}

std::vector<Value> UltraMetricSpace::distance_values() const {
  std::vector<Value> vals(dist_.begin(), dist_.end());
  vals.push_back(Value(0));  // present even for the empty matrix corner case
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

namespace {

// Collects leaf indices while filling cross-child distances with the node
// height; checks strict height decrease toward the leaves.
void walk_dendrogram(const Dendrogram::Node& node, const Value* parent_height,
                     std::vector<std::string>& names,
                     std::vector<std::vector<Value>>& dist,
                     std::vector<int>& out_leaves) {
  if (node.is_leaf()) {
    if (node.leaf.empty())
      throw structural_error("dendrogram: leaf with empty name");
    names.push_back(node.leaf);
    const int idx = static_cast<int>(names.size()) - 1;
    for (auto& row : dist) row.emplace_back();
    dist.emplace_back(names.size());
    out_leaves.push_back(idx);
    return;
  }
  if (!(node.height > Value(0)))
    throw structural_error("dendrogram: non-positive height " +
                           node.height.str());
  if (parent_height && !(node.height < *parent_height))
    throw structural_error("dendrogram: height " + node.height.str() +
                           " does not decrease below " + parent_height->str());
  std::vector<int> mine;
  for (const auto& child : node.children) {
    std::vector<int> child_leaves;
    walk_dendrogram(child, &node.height, names, dist, child_leaves);
    for (int a : mine)
      for (int b : child_leaves) {
        dist[static_cast<size_t>(a)][static_cast<size_t>(b)] = node.height;
        dist[static_cast<size_t>(b)][static_cast<size_t>(a)] = node.height;
      }
    mine.insert(mine.end(), child_leaves.begin(), child_leaves.end());
  }
  out_leaves.insert(out_leaves.end(), mine.begin(), mine.end());
}

}  // namespace

UltraMetricSpace from_dendrogram(const Dendrogram& tree) {
  std::vector<std::string> names;
  std::vector<std::vector<Value>> dist;
  std::vector<int> leaves;
  walk_dendrogram(tree.root, nullptr, names, dist, leaves);
  return UltraMetricSpace::from_matrix(std::move(names), dist);
}

Partition::Partition(const UltraMetricSpace& space, const Value& threshold,
                     PartitionMode mode)
    : threshold_(threshold), mode_(mode) {
  if (threshold.negative())
    throw argument_error("ball_partition: negative threshold");
  if (mode == PartitionMode::open && threshold.is_zero())
    throw argument_error("ball_partition: open mode requires radius > 0");
  const int n = space.size();
  class_of_.resize(static_cast<size_t>(n));
  const auto related = [&](int p, int q) {
    const Value& d = space.dist(p, q);
    return mode == PartitionMode::closed ? d <= threshold : d < threshold;
  };
  // The strong triangle inequality makes both relations transitive, so the
  // class of p is exactly its ball; the representative is the first point
  // related to p.
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) {
      if (related(p, q)) {
        class_of_[static_cast<size_t>(p)] = q;
        break;
      }
    }
  }
  for (int p = 0; p < n; ++p)
    if (class_of_[static_cast<size_t>(p)] == p) reps_.push_back(p);
}

int Partition::class_index(int point) const {
  const int rep = class_rep(point);
  const auto it = std::lower_bound(reps_.begin(), reps_.end(), rep);
  return static_cast<int>(it - reps_.begin());
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) return false;
  for (int p = 0; p < size(); ++p)
    if (!coarser.same_class(p, class_rep(p))) return false;
  return true;
}

Partition ball_partition(const UltraMetricSpace& space, const Value& threshold,
                         PartitionMode mode) {
  return Partition(space, threshold, mode);
}

std::vector<Value> AlphabetMetric::symbol_values() const {
  std::vector<Value> vals;
  vals.push_back(Value(0));
  const int n = base_.size();
  for (int i = 0; i < n; ++i) {
    vals.push_back(to_e_[static_cast<size_t>(i)]);
    for (int j = i + 1; j < n; ++j) vals.push_back(base_.dist(i, j));
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

AlphabetMetric extend_alphabet(const UltraMetricSpace& space,
                               ExtensionScheme scheme, int basepoint) {
  const int n = space.size();
  std::vector<Value> to_e(static_cast<size_t>(n));
  if (scheme == ExtensionScheme::sz) {
    if (space.diameter() > Value(1))
      throw diameter_error(
          "sz extension requires diameter <= 1 (diameter is " +
          space.diameter().str() + ")");
    for (auto& v : to_e) v = Value(1);
    basepoint = -1;
  } else {
    if (basepoint < 0 || basepoint >= n)
      throw argument_error("graev extension: basepoint out of range");
    for (int i = 0; i < n; ++i)
      to_e[static_cast<size_t>(i)] = max(space.dist(i, basepoint), Value(1));
  }
  AlphabetMetric am(space, scheme, basepoint, std::move(to_e));
  if (2 * n + 1 <= 65) {
    const ValidationResult check = validate_alphabet_metric(am);
    if (!check.ok())
      throw structural_error("extend_alphabet: extension is not an ultra-metric: " +
                             check.issue->describe());
  }
  return am;
}

ValidationResult validate_alphabet_metric(const AlphabetMetric& am) {
  const int n = am.base().size();
  std::vector<Symbol> symbols;
  symbols.emplace_back(std::nullopt);
  for (int i = 0; i < n; ++i) symbols.emplace_back(Letter{i, +1});
  for (int i = 0; i < n; ++i) symbols.emplace_back(Letter{i, -1});
  const size_t m = symbols.size();
  std::vector<std::vector<Value>> matrix(m, std::vector<Value>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      matrix[i][j] = am.dist(symbols[i], symbols[j]);
  return validate_ultrametric(matrix);
}

}  // namespace graev
