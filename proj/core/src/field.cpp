#include "minsurf/field.hpp"

#include <sstream>
#include <stdexcept>

namespace minsurf {

Jet2 ScalarField::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    std::ostringstream os;
    os << "field '" << name_ << "': point has dimension " << x.size() << ", expected "
       << dim_;
    throw std::invalid_argument(os.str());
  }
  return eval_(x);
}

bool ScalarField::excluded(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) return true;
  return guard_ ? guard_(x) : false;
}

}  // namespace minsurf
