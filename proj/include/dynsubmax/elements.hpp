#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <unordered_map>
#include <vector>

#include "dynsubmax/rng.hpp"

namespace dynsubmax {

// Ground-set members carry stable nonnegative ids; re-insertion after a
// deletion reuses the same id.
using ElementId = int;

// Small value-semantics set of element ids. Kept sorted so iteration order is
// deterministic and equality is structural.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids) : ids_(ids) { normalize(); }

  static ElementSet from(std::vector<ElementId> ids) {
    ElementSet s;
    s.ids_ = std::move(ids);
    s.normalize();
    return s;
  }

  bool contains(ElementId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
  }

  // Returns false if e was already present.
  bool insert(ElementId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it != ids_.end() && *it == e) return false;
    ids_.insert(it, e);
    return true;
  }

  bool erase(ElementId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it == ids_.end() || *it != e) return false;
    ids_.erase(it);
    return true;
  }

  ElementSet plus(ElementId e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }

  ElementSet minus(ElementId e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<ElementId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<ElementId> ids_;
};

// Set with O(1) insert/erase/contains and O(1) uniform sampling; backs the
// per-level survivor pools, where deletions and uniform draws must not touch
// the oracles.
class RandomSet {
 public:
  bool insert(ElementId e) {
    if (pos_.count(e)) return false;
    pos_.emplace(e, items_.size());
    items_.push_back(e);
    return true;
  }

  bool erase(ElementId e) {
    auto it = pos_.find(e);
    if (it == pos_.end()) return false;
    const std::size_t i = it->second;
    const ElementId last = items_.back();
    items_[i] = last;
    pos_[last] = i;
    items_.pop_back();
    pos_.erase(it);
    return true;
  }

  bool contains(ElementId e) const { return pos_.count(e) > 0; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<ElementId>& items() const { return items_; }

  ElementId sample(Rng& rng) const {
    return items_[uniform_below(rng, items_.size())];
  }

  ElementSet to_element_set() const { return ElementSet::from(items_); }

  void clear() {
    items_.clear();
    pos_.clear();
  }

 private:
  std::vector<ElementId> items_;
  std::unordered_map<ElementId, std::size_t> pos_;
};

// Consumes a RandomSet copy as a lazily drawn uniform permutation: each pop is
// a sample without replacement, which matches permuting up front in
// distribution without shuffling the whole pool.
class PermutationDraw {
 public:
  explicit PermutationDraw(std::vector<ElementId> items) : items_(std::move(items)) {}

  bool empty() const { return items_.empty(); }

  ElementId pop(Rng& rng) {
    const std::size_t i = uniform_below(rng, items_.size());
    const ElementId e = items_[i];
    items_[i] = items_.back();
    items_.pop_back();
    return e;
  }

 private:
  std::vector<ElementId> items_;
};

}  // namespace dynsubmax
