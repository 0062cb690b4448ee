#pragma once

#include <string>
#include <vector>

#include "grid.hpp"

namespace bihmap {

// Unit-vector-valued samples on a GridDomain: the discretized map
// f : box -> S^n, values in R^{n+1}, node-major with components contiguous.
class SphereField {
 public:
  SphereField(GridDomain domain, int target_dim);

  const GridDomain& domain() const { return domain_; }
  int target_dim() const { return n_; }
  int components() const { return n_ + 1; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  double* node(std::size_t flat) { return values_.data() + flat * static_cast<std::size_t>(n_ + 1); }
  const double* node(std::size_t flat) const {
    return values_.data() + flat * static_cast<std::size_t>(n_ + 1);
  }

  // max |1 - |value|| over nodes
  double max_norm_defect() const;

  // normalizes all nodes; throws if any node norm deviates from 1 by more
  // than `tolerance' (or is zero)
  void renormalize(double tolerance);

  // |values[i]| = 1 within 1e-9 everywhere
  void check_invariants() const;

  // Multilinear interpolation at x (inside the box). If renorm is set and the
  // interpolant is nonzero, the result is scaled to unit length.
  std::vector<double> sample(const Point& x, bool renorm) const;

  void sample_into(const Point& x, bool renorm, double* out) const;

 private:
  GridDomain domain_;
  int n_;
  std::vector<double> values_;
};

// Binary field format "BHF1": magic, little-endian u32 m, n, nodes_per_axis,
// f64 origin[m], f64 half_width, then f64 values row-major, components
// contiguous per node.
void save_field(const SphereField& field, const std::string& path);
SphereField load_field(const std::string& path);

// In-place target rotation f -> R f (R given row-major (n+1)x(n+1)).
void rotate_target(SphereField& field, const std::vector<double>& rot);

// Deterministic random rotation of R^{c} (Gram-Schmidt on Gaussian columns).
std::vector<double> random_rotation(int c, Rng& rng);

}  // namespace bihmap
