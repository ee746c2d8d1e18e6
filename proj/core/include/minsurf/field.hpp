// ScalarField: a named, pure evaluation map from points of R^n to second-order
// jets, with an optional domain guard (points where the field is undefined or
// numerically untrustworthy) and an optional weight annotation describing the
// expected 1-Laplacian eigenrelation.
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "minsurf/jet.hpp"

namespace minsurf {

struct WeightSpec {
  enum class Kind { zero, radial, generic };
  Kind kind = Kind::generic;
  double lambda = 0.0;  // radial: one_laplacian(f) = lambda * |x|^2 * f

  static WeightSpec zero() { return {Kind::zero, 0.0}; }
  static WeightSpec radial(double lambda) { return {Kind::radial, lambda}; }
  static WeightSpec generic() { return {Kind::generic, 0.0}; }
};

class ScalarField {
 public:
  using Evaluator = std::function<Jet2(std::span<const double>)>;
  // true means the point is excluded from sampling.
  using Guard = std::function<bool(std::span<const double>)>;

  ScalarField() = default;
  ScalarField(int dim, std::string name, Evaluator eval, Guard guard = {},
              std::optional<WeightSpec> weight = {})
      : dim_(dim),
        name_(std::move(name)),
        eval_(std::move(eval)),
        guard_(std::move(guard)),
        weight_(weight) {}

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::optional<WeightSpec>& weight() const { return weight_; }

  Jet2 eval(std::span<const double> x) const;
  bool excluded(std::span<const double> x) const;

  ScalarField with_weight(WeightSpec w) const {
    ScalarField f = *this;
    f.weight_ = w;
    return f;
  }
  ScalarField with_name(std::string n) const {
    ScalarField f = *this;
    f.name_ = std::move(n);
    return f;
  }

 private:
  int dim_ = 0;
  std::string name_;
  Evaluator eval_;
  Guard guard_;
  std::optional<WeightSpec> weight_;
};

}  // namespace minsurf
