#include "grid.hpp"

#include <cmath>

namespace bihmap {

GridDomain::GridDomain(int dim, int nodes_per_axis, double half_width, const Point& origin)
    : dim_(dim), nodes_(nodes_per_axis), half_width_(half_width), origin_(origin) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw InvalidArgument("unsupported dimension m=" + std::to_string(dim) +
                          " (supported range 2..6)");
  }
  if (nodes_per_axis < 8) {
    throw InvalidArgument("nodes_per_axis must be >= 8");
  }
  if (!(half_width > 0.0)) {
    throw InvalidArgument("half_width must be positive");
  }
  h_ = 2.0 * half_width_ / (nodes_ - 1);
  total_ = 1;
  for (int a = 0; a < dim_; ++a) total_ *= static_cast<std::size_t>(nodes_);
  std::size_t s = 1;
  for (int a = dim_ - 1; a >= 0; --a) {
    strides_[a] = s;
    s *= static_cast<std::size_t>(nodes_);
  }
}

Index GridDomain::nearest_node(const Point& x) const {
  Index idx{};
  for (int a = 0; a < dim_; ++a) {
    int i = static_cast<int>(std::lround((x[a] - lo(a)) / h_));
    idx[a] = std::min(std::max(i, 0), nodes_ - 1);
  }
  return idx;
}

bool GridDomain::operator==(const GridDomain& o) const {
  if (dim_ != o.dim_ || nodes_ != o.nodes_ || half_width_ != o.half_width_) return false;
  for (int a = 0; a < dim_; ++a) {
    if (origin_[a] != o.origin_[a]) return false;
  }
  return true;
}

double dist2(const Point& a, const Point& b, int m) {
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double norm2(const Point& a, int m) {
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += a[i] * a[i];
  return s;
}

}  // namespace bihmap
