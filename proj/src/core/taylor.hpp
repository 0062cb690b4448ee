#pragma once

#include <array>
#include <vector>

#include "grid.hpp"

namespace bihmap {

// Truncated multivariate Taylor expansion to order 4 in m variables, with
// full (redundant) symmetric tensors. Small m makes the dense layout cheap,
// and the generic Leibniz/composition rules keep every oracle jet exact.
class TaylorScalar {
 public:
  TaylorScalar() = default;
  TaylorScalar(int m, double value);

  static TaylorScalar variable(int m, int axis, double value);
  static TaylorScalar constant(int m, double value) { return TaylorScalar(m, value); }

  int dim() const { return m_; }
  double value() const { return v_; }
  double grad(int i) const { return g_[i]; }
  double hess(int i, int j) const { return h_[i * m_ + j]; }
  double third(int i, int j, int k) const { return t3_[(i * m_ + j) * m_ + k]; }
  double fourth(int i, int j, int k, int l) const {
    return t4_[((i * m_ + j) * m_ + k) * m_ + l];
  }

  TaylorScalar operator+(const TaylorScalar& o) const;
  TaylorScalar operator-(const TaylorScalar& o) const;
  TaylorScalar operator*(const TaylorScalar& o) const;
  TaylorScalar operator*(double c) const;
  TaylorScalar operator+(double c) const;
  TaylorScalar operator-() const { return *this * -1.0; }

  // composition with a univariate function given by derivatives
  // derivs[k] = d^k u / dx^k evaluated at this->value()
  TaylorScalar compose(const std::array<double, 5>& derivs) const;

  TaylorScalar sqrt_() const;
  TaylorScalar rsqrt() const;   // x^{-1/2}
  TaylorScalar recip() const;   // 1/x
  TaylorScalar sin_() const;
  TaylorScalar cos_() const;

 private:
  int m_ = 0;
  double v_ = 0.0;
  std::vector<double> g_, h_, t3_, t4_;
};

}  // namespace bihmap
