#pragma once

#include <cmath>
#include <span>

#include "grid.hpp"

namespace bihmap {

// Subcell sample offsets for partial-volume weights: 3 points per axis at
// {-h/3, 0, +h/3}, equal weights. Cached per (m, h) pattern as unit offsets.
const std::vector<std::array<double, kMaxDim>>& subcell_offsets(int m);

// Scalar samples on a grid (for the ball_integral/shell_integral operations).
struct GridScalar {
  GridScalar(GridDomain g, double fill = 0.0)
      : domain(std::move(g)), values(domain.total_nodes(), fill) {}
  GridDomain domain;
  std::vector<double> values;
};

namespace detail {

// Iterates nodes whose cell can intersect B_r(x) and calls
// fn(idx, flat, weight) for weight > 0. Throws GeometryError if the quadrature
// support leaves the box.
template <typename Fn>
void for_each_ball_weight(const GridDomain& g, const Point& x, double r, Fn&& fn) {
  const int m = g.dim();
  const double h = g.spacing();
  const double reach = h * std::sqrt(static_cast<double>(m)) / 3.0;
  if (r + reach > g.boundary_distance(x) + 1e-12) {
    throw GeometryError("ball not contained in domain (needs radius + h*sqrt(m)/3 margin)");
  }
  Index ilo{}, ihi{};
  for (int a = 0; a < m; ++a) {
    ilo[a] = std::max(0, static_cast<int>(std::ceil((x[a] - r - reach - g.lo(a)) / h - 1e-12)));
    ihi[a] = std::min(g.nodes_per_axis(),
                      static_cast<int>(std::floor((x[a] + r + reach - g.lo(a)) / h + 1e-12)) + 1);
  }
  const auto& subs = subcell_offsets(m);
  const double r2 = r * r;
  for_each_node_in(g, ilo, ihi, [&](const Index& idx, std::size_t flat) {
    Point p = g.node_point(idx);
    double d2 = dist2(p, x, m);
    const double d = std::sqrt(d2);
    if (d + reach <= r) {
      fn(idx, flat, 1.0);
      return;
    }
    if (d - reach >= r) return;
    int inside = 0;
    for (const auto& s : subs) {
      double q = 0.0;
      for (int a = 0; a < m; ++a) {
        const double t = p[a] + h * s[a] - x[a];
        q += t * t;
      }
      if (q <= r2) ++inside;
    }
    if (inside > 0) fn(idx, flat, static_cast<double>(inside) / static_cast<double>(subs.size()));
  });
}

}  // namespace detail

// sum_nodes g(node) * w(node) * h^m, w the partial-volume weight of the
// node's cell inside B_r(x).
template <typename G>
double ball_integral_fn(const GridDomain& g, const Point& x, double r, G&& fn) {
  if (r < 2.0 * g.spacing()) throw GeometryError("ball radius below the 2h quadrature floor");
  PairwiseAccumulator acc;
  detail::for_each_ball_weight(g, x, r, [&](const Index& idx, std::size_t flat, double w) {
    acc.add(fn(idx, flat) * w);
  });
  double hm = 1.0;
  for (int a = 0; a < g.dim(); ++a) hm *= g.spacing();
  return acc.total() * hm;
}

namespace detail {

// weights of the outer ball minus the inner ball; both passes emit nodes in
// increasing flat order, so a sorted merge gives the difference band.
template <typename Fn>
void for_each_annulus_weight(const GridDomain& g, const Point& x, double inner, double outer,
                             Fn&& fn) {
  std::vector<std::pair<std::size_t, double>> wo, wi;
  for_each_ball_weight(g, x, outer,
                       [&](const Index&, std::size_t flat, double w) { wo.emplace_back(flat, w); });
  for_each_ball_weight(g, x, inner,
                       [&](const Index&, std::size_t flat, double w) { wi.emplace_back(flat, w); });
  std::size_t j = 0;
  for (const auto& [flat, w] : wo) {
    double dw = w;
    while (j < wi.size() && wi[j].first < flat) ++j;
    if (j < wi.size() && wi[j].first == flat) dw -= wi[j].second;
    if (dw != 0.0) fn(g.unflat(flat), flat, dw);
  }
}

}  // namespace detail

// shell-differenced surface integral over the sphere of radius r:
// (ball(r + h/2) - ball(r - h/2)) / h, evaluated as a single weight-difference
// pass so the integrand is only touched on the annulus band.
template <typename G>
double shell_integral_fn(const GridDomain& g, const Point& x, double r, G&& fn) {
  const double h = g.spacing();
  if (r < 2.0 * h) throw GeometryError("shell radius below the 2h quadrature floor");
  PairwiseAccumulator acc;
  detail::for_each_annulus_weight(g, x, r - 0.5 * h, r + 0.5 * h,
                                  [&](const Index& idx, std::size_t flat, double dw) {
                                    acc.add(fn(idx, flat) * dw);
                                  });
  double hm = 1.0;
  for (int a = 0; a < g.dim(); ++a) hm *= h;
  return acc.total() * hm / h;
}

// annulus integral over B_t(x) \ B_s(x) via weight difference
template <typename G>
double annulus_integral_fn(const GridDomain& g, const Point& x, double s, double t, G&& fn) {
  const double h = g.spacing();
  if (s < 2.0 * h || t <= s) throw GeometryError("bad annulus radii");
  PairwiseAccumulator acc;
  detail::for_each_annulus_weight(g, x, s, t,
                                  [&](const Index& idx, std::size_t flat, double dw) {
                                    acc.add(fn(idx, flat) * dw);
                                  });
  double hm = 1.0;
  for (int a = 0; a < g.dim(); ++a) hm *= g.spacing();
  return acc.total() * hm;
}

// spec-facing wrappers on sampled scalar fields
double ball_integral(const GridScalar& gsc, const Point& x, double r);
double shell_integral(const GridScalar& gsc, const Point& x, double r);

// volume of the m-ball of radius r (for oracles/tests)
double unit_ball_volume(int m);
double unit_sphere_area(int m);  // area of S^{m-1} in R^m

}  // namespace bihmap
