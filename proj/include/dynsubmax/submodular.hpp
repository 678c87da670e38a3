#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "dynsubmax/elements.hpp"

namespace dynsubmax {

// A monotone, normalized (f(emptyset) = 0) submodular set function. Concrete
// families are immutable; all mutability lives in the oracle handles below.
class SubmodularFunction {
 public:
  virtual ~SubmodularFunction() = default;
  virtual double value(const ElementSet& s) const = 0;
};

// Query-counted handle to a shared function. One evaluate = one billed query.
// A marginal gain costs two queries, or one when the caller supplies a cached
// f(S). Each structure that needs separate accounting owns its own handle.
class SubmodularOracle {
 public:
  explicit SubmodularOracle(std::shared_ptr<const SubmodularFunction> fn)
      : fn_(std::move(fn)) {
    if (!fn_) throw std::invalid_argument("submodular oracle: null function");
  }

  double evaluate(const ElementSet& s) const {
    ++queries_;
    return fn_->value(s);
  }

  double marginal_gain(const ElementSet& s, ElementId e) const {
    if (s.contains(e)) {
      throw std::invalid_argument("marginal_gain: element already in set");
    }
    const double with = evaluate(s.plus(e));
    return with - evaluate(s);
  }

  double marginal_gain_cached(const ElementSet& s, ElementId e,
                              double cached_value) const {
    if (s.contains(e)) {
      throw std::invalid_argument("marginal_gain: element already in set");
    }
    return evaluate(s.plus(e)) - cached_value;
  }

  std::uint64_t queries() const { return queries_; }
  void reset_queries() { queries_ = 0; }

  // Same function, fresh zeroed counter.
  SubmodularOracle fresh_handle() const { return SubmodularOracle(fn_); }

  const std::shared_ptr<const SubmodularFunction>& function() const { return fn_; }

 private:
  std::shared_ptr<const SubmodularFunction> fn_;
  mutable std::uint64_t queries_ = 0;
};

// Weighted coverage: f(S) = total weight of the universe items covered by S.
// Monotone submodular by construction, and integer-valued under unit weights,
// which keeps acceptance comparisons exact.
class CoverageFunction : public SubmodularFunction {
 public:
  CoverageFunction(int universe_size, std::map<ElementId, std::vector<int>> covers,
                   std::vector<double> item_weights = {});

  double value(const ElementSet& s) const override;

  ElementSet ground() const;
  int universe_size() const { return universe_size_; }
  const std::map<ElementId, std::vector<int>>& covers() const { return covers_; }
  const std::vector<double>& item_weights() const { return item_weights_; }

 private:
  int universe_size_;
  std::map<ElementId, std::vector<int>> covers_;
  std::vector<double> item_weights_;
};

// Modular (additive) function: f(S) = sum of per-element values.
class ModularFunction : public SubmodularFunction {
 public:
  explicit ModularFunction(std::map<ElementId, double> values);

  double value(const ElementSet& s) const override;

  ElementSet ground() const;
  const std::map<ElementId, double>& values() const { return values_; }

 private:
  std::map<ElementId, double> values_;
};

}  // namespace dynsubmax
