#pragma once

#include <map>
#include <memory>
#include <vector>

#include "dynsubmax/elements.hpp"
#include "dynsubmax/matroid.hpp"
#include "dynsubmax/submodular.hpp"

namespace dynsubmax::testutil {

// All subsets of `ground`, by mask order. Only for tiny ground sets.
inline std::vector<ElementSet> all_subsets(const ElementSet& ground) {
  const auto& ids = ground.ids();
  std::vector<ElementSet> subsets;
  subsets.reserve(1u << ids.size());
  for (unsigned mask = 0; mask < (1u << ids.size()); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (1u << i)) s.insert(ids[i]);
    }
    subsets.push_back(std::move(s));
  }
  return subsets;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  for (ElementId e : a) {
    if (!b.contains(e)) return false;
  }
  return true;
}

// Counts raw calls into value(), independent of any oracle handle counters.
class CountingFunction : public SubmodularFunction {
 public:
  explicit CountingFunction(std::shared_ptr<const SubmodularFunction> inner)
      : inner_(std::move(inner)) {}

  double value(const ElementSet& s) const override {
    ++calls;
    return inner_->value(s);
  }

  mutable std::uint64_t calls = 0;

 private:
  std::shared_ptr<const SubmodularFunction> inner_;
};

// f over elements 1, 2 covering {0,1} and {1,2} of a 3-item universe; the
// running example for coverage marginals.
inline std::shared_ptr<const CoverageFunction> overlap_coverage() {
  return std::make_shared<CoverageFunction>(
      3, std::map<ElementId, std::vector<int>>{{1, {0, 1}}, {2, {1, 2}}});
}

// Triangle graph on vertices 0,1,2 with edge ids 1,2,3.
inline std::shared_ptr<const GraphicMatroid> triangle_matroid() {
  return std::make_shared<GraphicMatroid>(
      std::vector<std::tuple<int, int, ElementId>>{{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
}

}  // namespace dynsubmax::testutil
