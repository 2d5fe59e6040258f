#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graev/value.hpp"
#include "graev/words.hpp"

namespace graev {

enum class PartitionMode { closed, open };  // closed: d <= t, open: d < r
enum class ExtensionScheme { sz, graev };

std::string to_string(ExtensionScheme s);

/// One problem found while validating a distance matrix. Indices refer to
/// matrix rows/columns in point order; `describe` renders a message with
/// point names when available.
struct MatrixIssue {
  enum class Kind {
    not_square,
    not_symmetric,
    nonzero_diagonal,
    negative_entry,
    zero_off_diagonal,
    triangle,
  };
  Kind kind;
  int i = -1, j = -1, k = -1;
  Value lhs, rhs;  // offending value and the bound it violates, if meaningful

  std::string describe(const std::vector<std::string>& names = {}) const;
};

struct ValidationResult {
  std::optional<MatrixIssue> issue;
  bool ok() const { return !issue.has_value(); }
};

/// Checks shape, symmetry, zero diagonal, non-negativity, then the strong
/// triangle inequality dist(x,z) <= max(dist(x,y), dist(y,z)) over all
/// triples, reporting the first violation in point order.
ValidationResult validate_ultrametric(
    const std::vector<std::vector<Value>>& matrix);

/// Finite ultra-metric space: ordered distinct point names plus an exact
/// distance matrix satisfying the strong triangle inequality. Immutable.
class UltraMetricSpace {
 public:
  /// Validates and builds; throws structural_error with the issue location.
  static UltraMetricSpace from_matrix(
      std::vector<std::string> points,
      const std::vector<std::vector<Value>>& matrix);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(int i) const { return points_[static_cast<size_t>(i)]; }
  std::optional<int> index(const std::string& name) const;

  const Value& dist(int i, int j) const {
    return dist_[static_cast<size_t>(i) * points_.size() +
                 static_cast<size_t>(j)];
  }
  Value diameter() const;
  /// Sorted distinct distance values; always contains 0.
  std::vector<Value> distance_values() const;

 private:
  UltraMetricSpace(std::vector<std::string> pts, std::vector<Value> flat)
      : points_(std::move(pts)), dist_(std::move(flat)) {}

  std::vector<std::string> points_;
  std::vector<Value> dist_;  // size() x size(), row-major
};

/// Rooted height-labeled tree; leaves carry point names, internal nodes carry
/// heights that strictly decrease toward the leaves. Every finite
/// ultra-metric space arises from one, which makes this the canonical random
/// instance generator.
struct Dendrogram {
  struct Node {
    Value height;                // internal nodes only
    std::vector<Node> children;  // empty <=> leaf
    std::string leaf;            // leaf name

    bool is_leaf() const { return children.empty(); }
  };
  Node root;
};

/// dist(x,y) = height of the least common ancestor. Throws structural_error
/// on non-monotone heights, non-positive heights, or duplicate leaf names.
UltraMetricSpace from_dendrogram(const Dendrogram& tree);

/// Equivalence classes of "d <= t" (closed) or "d < r" (open); both relations
/// are transitive on an ultra-metric space. Class ids are the minimal point
/// index per class, so all outputs are deterministic.
class Partition {
 public:
  Partition(const UltraMetricSpace& space, const Value& threshold,
            PartitionMode mode);

  int size() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return static_cast<int>(reps_.size()); }
  /// Minimal point index in the class of `point`.
  int class_rep(int point) const { return class_of_[static_cast<size_t>(point)]; }
  /// Dense class id in [0, num_classes), ordered by representative.
  int class_index(int point) const;
  const std::vector<int>& reps() const { return reps_; }
  bool same_class(int p, int q) const { return class_rep(p) == class_rep(q); }
  /// True if every class of *this is contained in a class of `coarser`.
  bool refines(const Partition& coarser) const;

  const Value& threshold() const { return threshold_; }
  PartitionMode mode() const { return mode_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  std::vector<int> class_of_;
  std::vector<int> reps_;
  Value threshold_;
  PartitionMode mode_;
};

Partition ball_partition(const UltraMetricSpace& space, const Value& threshold,
                         PartitionMode mode);

/// The metric d extended to the group alphabet X-bar = X u X^-1 u {e}.
/// Both schemes satisfy d(x^-1,y^-1) = d(x,y), d(x,e) = d(x^-1,e) and
/// d(x^-1,y) = d(x,y^-1) = max{d(x,e), d(y,e)}; they differ in d(.,e):
///   graev (with basepoint x0):  d(x,e) = max{d(x,x0), 1}
///   sz (requires diameter <= 1): d(x,e) = 1
class AlphabetMetric {
 public:
  const UltraMetricSpace& base() const { return base_; }
  ExtensionScheme scheme() const { return scheme_; }
  int basepoint() const { return basepoint_; }  // -1 for sz

  const Value& to_identity(int point) const {
    return to_e_[static_cast<size_t>(point)];
  }

  Value dist(const Letter& a, const Letter& b) const {
    if (a.sign == b.sign) return base_.dist(a.point, b.point);
    return max(to_identity(a.point), to_identity(b.point));
  }

  Value dist(const Symbol& a, const Symbol& b) const {
    if (!a && !b) return Value(0);
    if (!a) return to_identity(b->point);
    if (!b) return to_identity(a->point);
    return dist(*a, *b);
  }

  /// Sorted distinct values the metric can take over X-bar, including 0.
  std::vector<Value> symbol_values() const;

 private:
  friend AlphabetMetric extend_alphabet(const UltraMetricSpace&,
                                        ExtensionScheme, int);
  UltraMetricSpace base_;
  ExtensionScheme scheme_ = ExtensionScheme::sz;
  int basepoint_ = -1;
  std::vector<Value> to_e_;

  AlphabetMetric(UltraMetricSpace base, ExtensionScheme scheme, int basepoint,
                 std::vector<Value> to_e)
      : base_(std::move(base)),
        scheme_(scheme),
        basepoint_(basepoint),
        to_e_(std::move(to_e)) {}
};

/// Builds the extension and, for small alphabets, verifies that the result is
/// an ultra-metric on all of X-bar. Throws diameter_error (sz with diameter
/// > 1) or argument_error (basepoint out of range).
AlphabetMetric extend_alphabet(const UltraMetricSpace& space,
                               ExtensionScheme scheme, int basepoint = 0);

/// Strong-triangle validation over the full symbol set X-bar.
ValidationResult validate_alphabet_metric(const AlphabetMetric& am);

}  // namespace graev
