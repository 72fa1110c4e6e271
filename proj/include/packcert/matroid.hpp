// Independence-oracle matroids and Edmonds' matroid partition (union)
// algorithm with rank-formula certificates.
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "packcert/graph.hpp"

namespace packcert {

using ElementId = int;

/// A matroid on ground set 0..ground_size()-1 given by an independence test.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual int ground_size() const = 0;
  virtual bool is_independent(std::span<const ElementId> elements) const = 0;

  /// Greedy rank; concrete oracles override when a direct formula exists.
  virtual int rank(std::span<const ElementId> elements) const;

  /// For independent I and x not in I with I+x dependent: the unique circuit
  /// of I+x minus x, sorted. Empty when I+x is independent.
  virtual std::vector<ElementId> circuit(std::span<const ElementId> independent, ElementId x) const;

  int full_rank() const;
};

/// Forest matroid of a graph; elements are edge ids.
class GraphicMatroid : public MatroidOracle {
 public:
  explicit GraphicMatroid(Graph g) : graph_(std::move(g)) {}

  int ground_size() const override { return graph_.num_edges(); }
  bool is_independent(std::span<const ElementId> elements) const override;
  int rank(std::span<const ElementId> elements) const override;
  std::vector<ElementId> circuit(std::span<const ElementId> independent, ElementId x) const override;

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

/// Elements grouped into classes, at most capacity[c] chosen from class c.
/// Elements with class -1 are loops.
class PartitionMatroid : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<int> class_of, std::vector<int> capacity);

  int ground_size() const override { return static_cast<int>(class_of_.size()); }
  bool is_independent(std::span<const ElementId> elements) const override;
  int rank(std::span<const ElementId> elements) const override;

 private:
  std::vector<int> class_of_;
  std::vector<int> capacity_;
};

/// U(r, n): every set of size at most r is independent.
class UniformMatroid : public MatroidOracle {
 public:
  UniformMatroid(int n, int r);
  static UniformMatroid free(int n) { return UniformMatroid(n, n); }

  int ground_size() const override { return n_; }
  bool is_independent(std::span<const ElementId> elements) const override;
  int rank(std::span<const ElementId> elements) const override;

 private:
  int n_;
  int r_;
};

/// Wrappers below keep a reference to the base oracle; the caller keeps it
/// alive.

/// Independent sets of the base with at most `bound` elements.
class TruncatedMatroid : public MatroidOracle {
 public:
  TruncatedMatroid(const MatroidOracle& base, int bound);

  int ground_size() const override { return base_.ground_size(); }
  bool is_independent(std::span<const ElementId> elements) const override;
  int rank(std::span<const ElementId> elements) const override;

 private:
  const MatroidOracle& base_;
  int bound_;
};

/// Restriction to an allowed subset on the same ground set; disallowed
/// elements become loops. Deletion is restriction to the complement.
class RestrictedMatroid : public MatroidOracle {
 public:
  RestrictedMatroid(const MatroidOracle& base, std::vector<bool> allowed);

  int ground_size() const override { return base_.ground_size(); }
  bool is_independent(std::span<const ElementId> elements) const override;
  int rank(std::span<const ElementId> elements) const override;

 private:
  const MatroidOracle& base_;
  std::vector<bool> allowed_;
};

/// Contraction by an independent set C: I is independent iff I misses C
/// and I+C is independent in the base. Elements of C become loops.
class ContractedMatroid : public MatroidOracle {
 public:
  ContractedMatroid(const MatroidOracle& base, std::vector<ElementId> contracted);

  int ground_size() const override { return base_.ground_size(); }
  bool is_independent(std::span<const ElementId> elements) const override;

 private:
  const MatroidOracle& base_;
  std::vector<ElementId> contracted_;
  std::vector<bool> in_contracted_;
};

RestrictedMatroid deletion(const MatroidOracle& base, std::span<const ElementId> removed);

/// k references to the same oracle, the usual input for k-fold packing.
std::vector<const MatroidOracle*> copies(const MatroidOracle& m, int k);

// ---------------------------------------------------------------------------
// Matroid union.

inline constexpr int kUnused = -1;

/// Assignment of every ground element to a part 0..parts-1 or kUnused.
struct Labeling {
  int parts = 0;
  std::vector<int> part_of;

  std::vector<std::vector<ElementId>> classes() const;
  std::vector<ElementId> labeled() const;
  std::vector<ElementId> unused() const;
  int labeled_count() const;
};

/// Thrown when an oracle violates the matroid axioms during augmentation.
class OracleInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct UnionResult {
  Labeling labeling;
  int rank = 0;
  /// X with |S - X| + sum_i r_i(X) = rank: the elements reachable from
  /// unlabeled elements in the final exchange graph.
  std::vector<ElementId> certificate;
};

/// Maximum union-independent set, each labeled class independent in its
/// matroid. With weights, elements are inserted in decreasing weight order
/// (ties by lower id), which yields a maximum-weight basis of the union.
UnionResult matroid_union_max(std::span<const MatroidOracle* const> matroids,
                              std::span<const double> weights = {});

/// Same algorithm, restricted to the listed elements (others stay unused and
/// are ignored by the certificate).
UnionResult matroid_union_max_on(std::span<const MatroidOracle* const> matroids,
                                 std::span<const ElementId> order);

struct BasisPacking {
  bool packed = false;
  Labeling labeling;  // class i is a basis of M_i when packed
  /// Otherwise X with |X| < sum_i t_i(X), t_i the co-rank of M_i.
  std::vector<ElementId> deficient_set;
};
BasisPacking pack_bases(std::span<const MatroidOracle* const> matroids);

struct IndependentCover {
  bool covered = false;
  Labeling labeling;  // total labeling when covered
  /// Otherwise X with |X| > sum_i r_i(X).
  std::vector<ElementId> violating_set;
};
IndependentCover cover_by_independent(std::span<const MatroidOracle* const> matroids);

/// min |X cap B| over bases B = r(S) - r(S - X).
int corank(const MatroidOracle& m, std::span<const ElementId> x);

/// Every labeled class independent in its matroid.
bool verify_labeling(std::span<const MatroidOracle* const> matroids, const Labeling& labeling);

}  // namespace packcert
