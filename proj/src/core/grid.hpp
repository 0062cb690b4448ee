#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "util.hpp"

namespace bihmap {

constexpr int kMaxDim = 6;
constexpr int kMinDim = 2;

using Index = std::array<int, kMaxDim>;  // only first m entries used
using Point = std::array<double, kMaxDim>;

// Axis-aligned box [origin - half_width, origin + half_width]^m with a
// uniform node lattice, nodes_per_axis per axis, h = 2*half_width/(N-1).
class GridDomain {
 public:
  GridDomain(int dim, int nodes_per_axis, double half_width, const Point& origin);

  int dim() const { return dim_; }
  int nodes_per_axis() const { return nodes_; }
  double half_width() const { return half_width_; }
  double spacing() const { return h_; }
  const Point& origin() const { return origin_; }

  std::size_t total_nodes() const { return total_; }
  std::size_t stride(int axis) const { return strides_[axis]; }

  double coord(int axis, int i) const { return origin_[axis] - half_width_ + h_ * i; }
  double lo(int axis) const { return origin_[axis] - half_width_; }
  double hi(int axis) const { return origin_[axis] + half_width_; }

  Point node_point(const Index& idx) const {
    Point p{};
    for (int a = 0; a < dim_; ++a) p[a] = coord(a, idx[a]);
    return p;
  }

  std::size_t flat(const Index& idx) const {
    std::size_t f = 0;
    for (int a = 0; a < dim_; ++a) f += static_cast<std::size_t>(idx[a]) * strides_[a];
    return f;
  }

  Index unflat(std::size_t f) const {
    Index idx{};
    for (int a = 0; a < dim_; ++a) {
      idx[a] = static_cast<int>(f / strides_[a]);
      f %= strides_[a];
    }
    return idx;
  }

  // layers separating the node from the box boundary (0 on the boundary)
  int boundary_depth(const Index& idx) const {
    int d = nodes_ - 1;
    for (int a = 0; a < dim_; ++a) {
      d = std::min(d, std::min(idx[a], nodes_ - 1 - idx[a]));
    }
    return d;
  }

  bool contains(const Point& x, double margin = 0.0) const {
    for (int a = 0; a < dim_; ++a) {
      if (x[a] < lo(a) + margin || x[a] > hi(a) - margin) return false;
    }
    return true;
  }

  // distance from x to the box boundary, minimum over axes
  double boundary_distance(const Point& x) const {
    double d = half_width_ * 2;
    for (int a = 0; a < dim_; ++a) {
      d = std::min(d, std::min(x[a] - lo(a), hi(a) - x[a]));
    }
    return d;
  }

  // nearest node index to x, clamped to the lattice
  Index nearest_node(const Point& x) const;

  bool operator==(const GridDomain& o) const;

 private:
  int dim_;
  int nodes_;
  double half_width_;
  Point origin_;
  double h_;
  std::size_t total_;
  std::array<std::size_t, kMaxDim> strides_;
};

// Odometer iteration over a sub-box [lo, hi) of indices. Calls fn(idx, flat).
template <typename Fn>
void for_each_node_in(const GridDomain& g, const Index& lo, const Index& hi, Fn&& fn) {
  const int m = g.dim();
  Index idx = lo;
  for (int a = 0; a < m; ++a) {
    if (lo[a] >= hi[a]) return;
  }
  for (;;) {
    fn(idx, g.flat(idx));
    int a = m - 1;
    for (;;) {
      if (++idx[a] < hi[a]) break;
      idx[a] = lo[a];
      if (--a < 0) return;
    }
  }
}

template <typename Fn>
void for_each_node(const GridDomain& g, Fn&& fn) {
  Index lo{};
  Index hi{};
  for (int a = 0; a < g.dim(); ++a) hi[a] = g.nodes_per_axis();
  for_each_node_in(g, lo, hi, fn);
}

double dist2(const Point& a, const Point& b, int m);
double norm2(const Point& a, int m);

}  // namespace bihmap
