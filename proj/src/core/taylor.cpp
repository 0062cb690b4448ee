#include "taylor.hpp"

#include <cmath>

namespace bihmap {

TaylorScalar::TaylorScalar(int m, double value) : m_(m), v_(value) {
  g_.assign(m, 0.0);
  h_.assign(static_cast<std::size_t>(m) * m, 0.0);
  t3_.assign(static_cast<std::size_t>(m) * m * m, 0.0);
  t4_.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
}

TaylorScalar TaylorScalar::variable(int m, int axis, double value) {
  TaylorScalar t(m, value);
  t.g_[axis] = 1.0;
  return t;
}

TaylorScalar TaylorScalar::operator+(const TaylorScalar& o) const {
  TaylorScalar r = *this;
  r.v_ += o.v_;
  for (std::size_t i = 0; i < g_.size(); ++i) r.g_[i] += o.g_[i];
  for (std::size_t i = 0; i < h_.size(); ++i) r.h_[i] += o.h_[i];
  for (std::size_t i = 0; i < t3_.size(); ++i) r.t3_[i] += o.t3_[i];
  for (std::size_t i = 0; i < t4_.size(); ++i) r.t4_[i] += o.t4_[i];
  return r;
}

TaylorScalar TaylorScalar::operator-(const TaylorScalar& o) const {
  TaylorScalar r = *this;
  r.v_ -= o.v_;
  for (std::size_t i = 0; i < g_.size(); ++i) r.g_[i] -= o.g_[i];
  for (std::size_t i = 0; i < h_.size(); ++i) r.h_[i] -= o.h_[i];
  for (std::size_t i = 0; i < t3_.size(); ++i) r.t3_[i] -= o.t3_[i];
  for (std::size_t i = 0; i < t4_.size(); ++i) r.t4_[i] -= o.t4_[i];
  return r;
}

TaylorScalar TaylorScalar::operator*(double c) const {
  TaylorScalar r = *this;
  r.v_ *= c;
  for (auto& x : r.g_) x *= c;
  for (auto& x : r.h_) x *= c;
  for (auto& x : r.t3_) x *= c;
  for (auto& x : r.t4_) x *= c;
  return r;
}

TaylorScalar TaylorScalar::operator+(double c) const {
  TaylorScalar r = *this;
  r.v_ += c;
  return r;
}

TaylorScalar TaylorScalar::operator*(const TaylorScalar& o) const {
  const int m = m_;
  TaylorScalar r(m, v_ * o.v_);
  // Leibniz by index positions: D_S f * D_{S^c} g over subsets of positions
  for (int i = 0; i < m; ++i) {
    r.g_[i] = g_[i] * o.v_ + v_ * o.g_[i];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      r.h_[i * m + j] = h_[i * m + j] * o.v_ + g_[i] * o.g_[j] + g_[j] * o.g_[i] +
                        v_ * o.h_[i * m + j];
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        double s = third(i, j, k) * o.v_ + v_ * o.third(i, j, k);
        s += h_[i * m + j] * o.g_[k] + h_[i * m + k] * o.g_[j] + h_[j * m + k] * o.g_[i];
        s += g_[i] * o.h_[j * m + k] + g_[j] * o.h_[i * m + k] + g_[k] * o.h_[i * m + j];
        r.t3_[(static_cast<std::size_t>(i) * m + j) * m + k] = s;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          double s = fourth(i, j, k, l) * o.v_ + v_ * o.fourth(i, j, k, l);
          s += third(i, j, k) * o.g_[l] + third(i, j, l) * o.g_[k] + third(i, k, l) * o.g_[j] +
               third(j, k, l) * o.g_[i];
          s += g_[i] * o.third(j, k, l) + g_[j] * o.third(i, k, l) + g_[k] * o.third(i, j, l) +
               g_[l] * o.third(i, j, k);
          s += hess(i, j) * o.hess(k, l) + hess(i, k) * o.hess(j, l) + hess(i, l) * o.hess(j, k);
          r.t4_[((static_cast<std::size_t>(i) * m + j) * m + k) * m + l] = s;
        }
      }
    }
  }
  return r;
}

TaylorScalar TaylorScalar::compose(const std::array<double, 5>& d) const {
  const int m = m_;
  TaylorScalar b = *this;
  b.v_ = 0.0;  // nilpotent part
  TaylorScalar acc(m, d[0]);
  TaylorScalar pw = b;
  double fact = 1.0;
  for (int k = 1; k <= 4; ++k) {
    fact *= k;
    acc = acc + pw * (d[k] / fact);
    if (k < 4) pw = pw * b;
  }
  return acc;
}

TaylorScalar TaylorScalar::sqrt_() const {
  const double u = v_;
  const double s = std::sqrt(u);
  return compose({s, 0.5 / s, -0.25 / (s * u), 0.375 / (s * u * u), -0.9375 / (s * u * u * u)});
}

TaylorScalar TaylorScalar::rsqrt() const {
  const double u = v_;
  const double s = 1.0 / std::sqrt(u);
  return compose({s, -0.5 * s / u, 0.75 * s / (u * u), -1.875 * s / (u * u * u),
                  6.5625 * s / (u * u * u * u)});
}

TaylorScalar TaylorScalar::recip() const {
  const double u = v_;
  return compose({1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u), -6.0 / (u * u * u * u),
                  24.0 / (u * u * u * u * u)});
}

TaylorScalar TaylorScalar::sin_() const {
  const double s = std::sin(v_), c = std::cos(v_);
  return compose({s, c, -s, -c, s});
}

TaylorScalar TaylorScalar::cos_() const {
  const double s = std::sin(v_), c = std::cos(v_);
  return compose({c, -s, -c, s, c});
}

}  // namespace bihmap
