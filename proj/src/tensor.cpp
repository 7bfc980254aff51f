#include "casa/tensor.hpp"

#include <cmath>
#include <sstream>

namespace casa {

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double Tensor::max_abs_diff(const Tensor& o) const {
  if (!same_shape(o)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (int i = 0; i < numel(); ++i) m = std::max(m, std::fabs(data_[i] - o.data_[i]));
  return m;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
  os << ")";
  return os.str();
}

}  // namespace casa
