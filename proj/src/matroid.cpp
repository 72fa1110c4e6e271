#include "packcert/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace packcert {

int MatroidOracle::rank(std::span<const ElementId> elements) const {
  std::vector<ElementId> basis;
  for (ElementId e : elements) {
    basis.push_back(e);
    if (!is_independent(basis)) basis.pop_back();
  }
  return static_cast<int>(basis.size());
}

std::vector<ElementId> MatroidOracle::circuit(std::span<const ElementId> independent, ElementId x) const {
  std::vector<ElementId> set(independent.begin(), independent.end());
  set.push_back(x);
  if (is_independent(set)) return {};
  std::vector<ElementId> result;
  std::vector<ElementId> swapped;
  for (std::size_t i = 0; i < independent.size(); ++i) {
    swapped.clear();
    for (std::size_t j = 0; j < independent.size(); ++j) {
      if (j != i) swapped.push_back(independent[j]);
    }
    swapped.push_back(x);
    if (is_independent(swapped)) result.push_back(independent[i]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

int MatroidOracle::full_rank() const {
  std::vector<ElementId> all(static_cast<std::size_t>(ground_size()));
  std::iota(all.begin(), all.end(), 0);
  return rank(all);
}

bool GraphicMatroid::is_independent(std::span<const ElementId> elements) const {
  return is_forest(graph_, elements);
}

int GraphicMatroid::rank(std::span<const ElementId> elements) const {
  UnionFind uf(graph_.num_nodes());
  int r = 0;
  for (ElementId e : elements) r += uf.unite(graph_.edge(e).u, graph_.edge(e).v);
  return r;
}

std::vector<ElementId> GraphicMatroid::circuit(std::span<const ElementId> independent, ElementId x) const {
  const int n = graph_.num_nodes();
  std::vector<std::vector<std::pair<NodeId, ElementId>>> adj(n);
  for (ElementId e : independent) {
    if (e == x) return {};
    const Edge& ed = graph_.edge(e);
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  const NodeId from = graph_.edge(x).u;
  const NodeId to = graph_.edge(x).v;
  std::vector<ElementId> via(n, -1);
  std::vector<NodeId> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<NodeId> queue;
  queue.push(from);
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const NodeId u = queue.front();
    queue.pop();
    for (auto [w, e] : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        via[w] = e;
        queue.push(w);
      }
    }
  }
  if (!seen[to]) return {};
  std::vector<ElementId> path;
  for (NodeId w = to; w != from; w = parent[w]) path.push_back(via[w]);
  std::sort(path.begin(), path.end());
  return path;
}

PartitionMatroid::PartitionMatroid(std::vector<int> class_of, std::vector<int> capacity)
    : class_of_(std::move(class_of)), capacity_(std::move(capacity)) {
  for (int c : class_of_) {
    if (c < -1 || c >= static_cast<int>(capacity_.size())) throw InputError("partition matroid: bad class");
  }
  for (int cap : capacity_) {
    if (cap < 0) throw InputError("partition matroid: negative capacity");
  }
}

bool PartitionMatroid::is_independent(std::span<const ElementId> elements) const {
  std::vector<int> used(capacity_.size(), 0);
  std::vector<bool> seen(class_of_.size(), false);
  for (ElementId e : elements) {
    if (seen[e]) return false;
    seen[e] = true;
    const int c = class_of_[e];
    if (c < 0 || ++used[c] > capacity_[c]) return false;
  }
  return true;
}

int PartitionMatroid::rank(std::span<const ElementId> elements) const {
  std::vector<int> used(capacity_.size(), 0);
  std::vector<bool> seen(class_of_.size(), false);
  int r = 0;
  for (ElementId e : elements) {
    if (seen[e]) continue;
    seen[e] = true;
    const int c = class_of_[e];
    if (c >= 0 && used[c] < capacity_[c]) {
      ++used[c];
      ++r;
    }
  }
  return r;
}

UniformMatroid::UniformMatroid(int n, int r) : n_(n), r_(r) {
  if (n < 0 || r < 0) throw InputError("uniform matroid: negative parameter");
}

bool UniformMatroid::is_independent(std::span<const ElementId> elements) const {
  std::vector<ElementId> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
         static_cast<int>(sorted.size()) <= r_;
}

int UniformMatroid::rank(std::span<const ElementId> elements) const {
  std::vector<ElementId> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  return std::min(r_, static_cast<int>(distinct));
}

TruncatedMatroid::TruncatedMatroid(const MatroidOracle& base, int bound) : base_(base), bound_(bound) {
  if (bound < 0) throw InputError("truncation: negative bound");
}

bool TruncatedMatroid::is_independent(std::span<const ElementId> elements) const {
  return static_cast<int>(elements.size()) <= bound_ && base_.is_independent(elements);
}

int TruncatedMatroid::rank(std::span<const ElementId> elements) const {
  return std::min(bound_, base_.rank(elements));
}

RestrictedMatroid::RestrictedMatroid(const MatroidOracle& base, std::vector<bool> allowed)
    : base_(base), allowed_(std::move(allowed)) {
  if (static_cast<int>(allowed_.size()) != base.ground_size()) {
    throw InputError("restriction: mask size differs from ground set");
  }
}

bool RestrictedMatroid::is_independent(std::span<const ElementId> elements) const {
  for (ElementId e : elements) {
    if (!allowed_[e]) return false;
  }
  return base_.is_independent(elements);
}

int RestrictedMatroid::rank(std::span<const ElementId> elements) const {
  std::vector<ElementId> kept;
  for (ElementId e : elements) {
    if (allowed_[e]) kept.push_back(e);
  }
  return base_.rank(kept);
}

ContractedMatroid::ContractedMatroid(const MatroidOracle& base, std::vector<ElementId> contracted)
    : base_(base), contracted_(std::move(contracted)), in_contracted_(base.ground_size(), false) {
  if (!base_.is_independent(contracted_)) throw InputError("contraction: contracted set is dependent");
  for (ElementId e : contracted_) in_contracted_[e] = true;
}

bool ContractedMatroid::is_independent(std::span<const ElementId> elements) const {
  std::vector<ElementId> joined(contracted_);
  for (ElementId e : elements) {
    if (in_contracted_[e]) return false;
    joined.push_back(e);
  }
  return base_.is_independent(joined);
}

RestrictedMatroid deletion(const MatroidOracle& base, std::span<const ElementId> removed) {
  std::vector<bool> allowed(base.ground_size(), true);
  for (ElementId e : removed) allowed.at(e) = false;
  return RestrictedMatroid(base, std::move(allowed));
}

std::vector<const MatroidOracle*> copies(const MatroidOracle& m, int k) {
  return std::vector<const MatroidOracle*>(static_cast<std::size_t>(std::max(0, k)), &m);
}

std::vector<std::vector<ElementId>> Labeling::classes() const {
  std::vector<std::vector<ElementId>> out(parts);
  for (std::size_t e = 0; e < part_of.size(); ++e) {
    if (part_of[e] != kUnused) out[part_of[e]].push_back(static_cast<ElementId>(e));
  }
  return out;
}

std::vector<ElementId> Labeling::labeled() const {
  std::vector<ElementId> out;
  for (std::size_t e = 0; e < part_of.size(); ++e) {
    if (part_of[e] != kUnused) out.push_back(static_cast<ElementId>(e));
  }
  return out;
}

std::vector<ElementId> Labeling::unused() const {
  std::vector<ElementId> out;
  for (std::size_t e = 0; e < part_of.size(); ++e) {
    if (part_of[e] == kUnused) out.push_back(static_cast<ElementId>(e));
  }
  return out;
}

int Labeling::labeled_count() const {
  return static_cast<int>(std::count_if(part_of.begin(), part_of.end(), [](int p) { return p != kUnused; }));
}

namespace {

/// State of one matroid-partition run: the current classes and the exchange
/// digraph queries against them.
class PartitionRun {
 public:
  explicit PartitionRun(std::span<const MatroidOracle* const> matroids) : matroids_(matroids) {
    if (matroids.empty()) {
      ground_ = 0;
    } else {
      ground_ = matroids.front()->ground_size();
      for (const MatroidOracle* m : matroids) {
        if (m->ground_size() != ground_) throw InputError("matroid union: ground sets differ");
      }
    }
    labeling_.parts = static_cast<int>(matroids.size());
    labeling_.part_of.assign(ground_, kUnused);
    classes_.resize(matroids.size());
  }

  int ground() const { return ground_; }

  bool insert(ElementId source) {
    std::vector<ElementId> parent(ground_, -2);
    std::queue<ElementId> queue;
    queue.push(source);
    parent[source] = -1;
    while (!queue.empty()) {
      const ElementId x = queue.front();
      queue.pop();
      if (const int sink_class = insertable_class(x); sink_class != kUnused) {
        augment(x, sink_class, parent);
        return true;
      }
      for (ElementId y : out_neighbours(x)) {
        if (parent[y] == -2) {
          parent[y] = x;
          queue.push(y);
        }
      }
    }
    return false;
  }

  std::vector<ElementId> reachable_from_unlabeled(std::span<const ElementId> considered) {
    std::vector<bool> seen(ground_, false);
    std::queue<ElementId> queue;
    for (ElementId e : considered) {
      if (labeling_.part_of[e] == kUnused && !seen[e]) {
        seen[e] = true;
        queue.push(e);
      }
    }
    while (!queue.empty()) {
      const ElementId x = queue.front();
      queue.pop();
      for (ElementId y : out_neighbours(x)) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push(y);
        }
      }
    }
    std::vector<ElementId> out;
    for (ElementId e = 0; e < ground_; ++e) {
      if (seen[e]) out.push_back(e);
    }
    return out;
  }

  Labeling& labeling() { return labeling_; }

 private:
  int insertable_class(ElementId x) {
    for (int i = 0; i < labeling_.parts; ++i) {
      if (labeling_.part_of[x] == i) continue;
      auto& cls = classes_[i];
      cls.push_back(x);
      const bool ok = matroids_[i]->is_independent(cls);
      cls.pop_back();
      if (ok) return i;
    }
    return kUnused;
  }

  // y such that x may replace y in y's class.
  std::vector<ElementId> out_neighbours(ElementId x) {
    std::vector<ElementId> out;
    for (int i = 0; i < labeling_.parts; ++i) {
      if (labeling_.part_of[x] == i) continue;
      auto c = matroids_[i]->circuit(classes_[i], x);
      out.insert(out.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void augment(ElementId last, int sink_class, const std::vector<ElementId>& parent) {
    std::vector<int> touched{sink_class};
    int target = sink_class;
    for (ElementId x = last; x != -1; x = parent[x]) {
      const int old = labeling_.part_of[x];
      if (old != kUnused) {
        auto& cls = classes_[old];
        cls.erase(std::find(cls.begin(), cls.end(), x));
        touched.push_back(old);
      }
      classes_[target].push_back(x);
      labeling_.part_of[x] = target;
      target = old;
    }
    for (int i : touched) {
      if (!matroids_[i]->is_independent(classes_[i])) {
        throw OracleInconsistency("matroid union: class " + std::to_string(i) +
                                  " became dependent after augmentation; oracle violates the matroid axioms");
      }
    }
  }

  std::span<const MatroidOracle* const> matroids_;
  int ground_ = 0;
  Labeling labeling_;
  std::vector<std::vector<ElementId>> classes_;
};

}  // namespace

UnionResult matroid_union_max_on(std::span<const MatroidOracle* const> matroids,
                                 std::span<const ElementId> order) {
  PartitionRun run(matroids);
  int rank = 0;
  for (ElementId e : order) {
    if (e < 0 || e >= run.ground()) throw InputError("matroid union: element out of range");
    if (run.labeling().part_of[e] != kUnused) continue;
    if (run.insert(e)) ++rank;
  }
  UnionResult result;
  result.certificate = run.reachable_from_unlabeled(order);
  result.labeling = std::move(run.labeling());
  result.rank = rank;
  return result;
}

UnionResult matroid_union_max(std::span<const MatroidOracle* const> matroids, std::span<const double> weights) {
  const int ground = matroids.empty() ? 0 : matroids.front()->ground_size();
  std::vector<ElementId> order(ground);
  std::iota(order.begin(), order.end(), 0);
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != ground) throw InputError("matroid union: weight vector size");
    std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) { return weights[a] > weights[b]; });
  }
  return matroid_union_max_on(matroids, order);
}

BasisPacking pack_bases(std::span<const MatroidOracle* const> matroids) {
  UnionResult u = matroid_union_max(matroids);
  int target = 0;
  for (const MatroidOracle* m : matroids) target += m->full_rank();
  BasisPacking out;
  out.packed = u.rank == target;
  out.labeling = std::move(u.labeling);
  if (!out.packed) {
    std::vector<bool> reach(out.labeling.part_of.size(), false);
    for (ElementId e : u.certificate) reach[e] = true;
    for (std::size_t e = 0; e < reach.size(); ++e) {
      if (!reach[e]) out.deficient_set.push_back(static_cast<ElementId>(e));
    }
  }
  return out;
}

IndependentCover cover_by_independent(std::span<const MatroidOracle* const> matroids) {
  UnionResult u = matroid_union_max(matroids);
  IndependentCover out;
  out.covered = u.rank == static_cast<int>(u.labeling.part_of.size());
  out.labeling = std::move(u.labeling);
  if (!out.covered) out.violating_set = std::move(u.certificate);
  return out;
}

int corank(const MatroidOracle& m, std::span<const ElementId> x) {
  std::vector<bool> in(m.ground_size(), false);
  for (ElementId e : x) in.at(e) = true;
  std::vector<ElementId> rest;
  for (ElementId e = 0; e < m.ground_size(); ++e) {
    if (!in[e]) rest.push_back(e);
  }
  return m.full_rank() - m.rank(rest);
}

bool verify_labeling(std::span<const MatroidOracle* const> matroids, const Labeling& labeling) {
  if (labeling.parts != static_cast<int>(matroids.size())) return false;
  const auto classes = labeling.classes();
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    if (static_cast<int>(labeling.part_of.size()) != matroids[i]->ground_size()) return false;
    if (!matroids[i]->is_independent(classes[i])) return false;
  }
  return true;
}

}  // namespace packcert
