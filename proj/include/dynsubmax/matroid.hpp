#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "dynsubmax/elements.hpp"

namespace dynsubmax {

// A matroid given by its independence predicate. rank() is the size of the
// largest independent set and is a declared parameter, not a billed query.
class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual bool independent(const ElementSet& s) const = 0;
  virtual int rank() const = 0;
};

// Query-counted handle; one independence test = one billed query.
class MatroidOracle {
 public:
  explicit MatroidOracle(std::shared_ptr<const Matroid> m) : m_(std::move(m)) {
    if (!m_) throw std::invalid_argument("matroid oracle: null matroid");
  }

  bool is_independent(const ElementSet& s) const {
    ++queries_;
    return m_->independent(s);
  }

  int rank() const { return m_->rank(); }
  std::uint64_t queries() const { return queries_; }
  void reset_queries() { queries_ = 0; }

  MatroidOracle fresh_handle() const { return MatroidOracle(m_); }

  const std::shared_ptr<const Matroid>& matroid() const { return m_; }

 private:
  std::shared_ptr<const Matroid> m_;
  mutable std::uint64_t queries_ = 0;
};

// Independent iff |S| <= k.
class UniformMatroid : public Matroid {
 public:
  explicit UniformMatroid(int k);
  bool independent(const ElementSet& s) const override;
  int rank() const override { return k_; }

 private:
  int k_;
};

// Independent iff each block contributes at most its capacity.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::map<ElementId, int> block_of, std::vector<int> capacities);
  bool independent(const ElementSet& s) const override;
  int rank() const override { return rank_; }

  ElementSet ground() const;

 private:
  std::map<ElementId, int> block_of_;
  std::vector<int> capacities_;
  int rank_;
};

// Elements are edges of a graph; independent iff the edge subset is acyclic
// (checked with a union-find, no recursion).
class GraphicMatroid : public Matroid {
 public:
  // Edges as (u, v, element id).
  explicit GraphicMatroid(std::vector<std::tuple<int, int, ElementId>> edges);
  bool independent(const ElementSet& s) const override;
  int rank() const override { return rank_; }

  ElementSet ground() const;

 private:
  std::map<ElementId, std::pair<int, int>> edge_of_;
  int num_vertices_;
  int rank_;
};

}  // namespace dynsubmax
