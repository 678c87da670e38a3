#include "dynsubmax/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace dynsubmax {
namespace {

// Minimal union-find for acyclicity tests over small edge subsets.
class UnionFind {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_[x] = x;
      return x;
    }
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    return true;
  }

 private:
  std::unordered_map<int, int> parent_;
};

}  // namespace

UniformMatroid::UniformMatroid(int k) : k_(k) {
  if (k < 0) throw std::invalid_argument("uniform matroid: negative rank");
}

bool UniformMatroid::independent(const ElementSet& s) const {
  return s.size() <= static_cast<std::size_t>(k_);
}

PartitionMatroid::PartitionMatroid(std::map<ElementId, int> block_of,
                                   std::vector<int> capacities)
    : block_of_(std::move(block_of)), capacities_(std::move(capacities)) {
  std::vector<int> block_sizes(capacities_.size(), 0);
  for (const auto& [id, b] : block_of_) {
    if (id < 0) throw std::invalid_argument("partition matroid: negative element id");
    if (b < 0 || b >= static_cast<int>(capacities_.size())) {
      throw std::invalid_argument("partition matroid: element " + std::to_string(id) +
                                  " references unknown block " + std::to_string(b));
    }
    ++block_sizes[static_cast<std::size_t>(b)];
  }
  rank_ = 0;
  for (std::size_t b = 0; b < capacities_.size(); ++b) {
    if (capacities_[b] < 0) {
      throw std::invalid_argument("partition matroid: negative capacity");
    }
    rank_ += std::min(capacities_[b], block_sizes[b]);
  }
}

bool PartitionMatroid::independent(const ElementSet& s) const {
  std::vector<int> used(capacities_.size(), 0);
  for (ElementId e : s) {
    auto it = block_of_.find(e);
    if (it == block_of_.end()) {
      throw std::out_of_range("partition matroid: unknown element id " +
                              std::to_string(e));
    }
    const auto b = static_cast<std::size_t>(it->second);
    if (++used[b] > capacities_[b]) return false;
  }
  return true;
}

ElementSet PartitionMatroid::ground() const {
  ElementSet g;
  for (const auto& [id, b] : block_of_) g.insert(id);
  return g;
}

GraphicMatroid::GraphicMatroid(std::vector<std::tuple<int, int, ElementId>> edges) {
  UnionFind uf;
  int acyclic = 0;
  std::unordered_map<int, bool> seen_vertex;
  for (const auto& [u, v, id] : edges) {
    if (id < 0) throw std::invalid_argument("graphic matroid: negative edge id");
    if (u < 0 || v < 0) {
      throw std::invalid_argument("graphic matroid: negative vertex in edge " +
                                  std::to_string(id));
    }
    if (!edge_of_.emplace(id, std::make_pair(u, v)).second) {
      throw std::invalid_argument("graphic matroid: duplicate edge id " +
                                  std::to_string(id));
    }
    seen_vertex[u] = seen_vertex[v] = true;
    if (uf.unite(u, v)) ++acyclic;
  }
  num_vertices_ = static_cast<int>(seen_vertex.size());
  rank_ = acyclic;
}

bool GraphicMatroid::independent(const ElementSet& s) const {
  UnionFind uf;
  for (ElementId e : s) {
    auto it = edge_of_.find(e);
    if (it == edge_of_.end()) {
      throw std::out_of_range("graphic matroid: unknown edge id " + std::to_string(e));
    }
    if (!uf.unite(it->second.first, it->second.second)) return false;
  }
  return true;
}

ElementSet GraphicMatroid::ground() const {
  ElementSet g;
  for (const auto& [id, uv] : edge_of_) g.insert(id);
  return g;
}

}  // namespace dynsubmax
