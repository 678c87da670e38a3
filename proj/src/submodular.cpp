#include "dynsubmax/submodular.hpp"

#include <algorithm>
#include <string>

namespace dynsubmax {

CoverageFunction::CoverageFunction(int universe_size,
                                   std::map<ElementId, std::vector<int>> covers,
                                   std::vector<double> item_weights)
    : universe_size_(universe_size),
      covers_(std::move(covers)),
      item_weights_(std::move(item_weights)) {
  if (universe_size_ < 0) {
    throw std::invalid_argument("coverage: negative universe size");
  }
  if (item_weights_.empty()) {
    item_weights_.assign(static_cast<std::size_t>(universe_size_), 1.0);
  }
  if (item_weights_.size() != static_cast<std::size_t>(universe_size_)) {
    throw std::invalid_argument("coverage: weights length != universe size");
  }
  for (double w : item_weights_) {
    if (w < 0.0) throw std::invalid_argument("coverage: negative item weight");
  }
  for (const auto& [id, items] : covers_) {
    if (id < 0) throw std::invalid_argument("coverage: negative element id");
    for (int item : items) {
      if (item < 0 || item >= universe_size_) {
        throw std::invalid_argument("coverage: item " + std::to_string(item) +
                                    " outside universe");
      }
    }
  }
}

double CoverageFunction::value(const ElementSet& s) const {
  std::vector<int> items;
  for (ElementId e : s) {
    auto it = covers_.find(e);
    if (it == covers_.end()) {
      throw std::out_of_range("coverage: unknown element id " + std::to_string(e));
    }
    items.insert(items.end(), it->second.begin(), it->second.end());
  }
  double total = 0.0;
  if (items.size() <= 256) {
    // Union by sorting; cost independent of the universe size, which matters
    // when benchmark universes are large but solution sets are small.
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    for (int item : items) total += item_weights_[static_cast<std::size_t>(item)];
    return total;
  }
  std::vector<bool> covered(static_cast<std::size_t>(universe_size_), false);
  for (int item : items) {
    if (!covered[static_cast<std::size_t>(item)]) {
      covered[static_cast<std::size_t>(item)] = true;
      total += item_weights_[static_cast<std::size_t>(item)];
    }
  }
  return total;
}

ElementSet CoverageFunction::ground() const {
  ElementSet g;
  for (const auto& [id, items] : covers_) g.insert(id);
  return g;
}

ModularFunction::ModularFunction(std::map<ElementId, double> values)
    : values_(std::move(values)) {
  for (const auto& [id, v] : values_) {
    if (id < 0) throw std::invalid_argument("modular: negative element id");
    if (v < 0.0) throw std::invalid_argument("modular: negative value");
  }
}

double ModularFunction::value(const ElementSet& s) const {
  double total = 0.0;
  for (ElementId e : s) {
    auto it = values_.find(e);
    if (it == values_.end()) {
      throw std::out_of_range("modular: unknown element id " + std::to_string(e));
    }
    total += it->second;
  }
  return total;
}

ElementSet ModularFunction::ground() const {
  ElementSet g;
  for (const auto& [id, v] : values_) g.insert(id);
  return g;
}

}  // namespace dynsubmax
