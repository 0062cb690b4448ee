#pragma once

#include <vector>

#include "field.hpp"

namespace bihmap {

// Compact 5/7/9/11-point Laplacian (compose of one-dimensional second
// differences). Output layout matches field values; entries are complete only
// at nodes at least one layer from the boundary.
void laplacian_field(const SphereField& field, std::vector<double>& out);

// same operator applied to an arbitrary node-major buffer with `comps`
// components per node
void laplacian_buffer(const GridDomain& g, int comps, const std::vector<double>& in,
                      std::vector<double>& out);

// discrete bienergy: sum over nodes at least `collar` layers from the
// boundary of |Delta f|^2 h^m
double energy(const SphereField& field, int collar = 2);

// |P_f(Delta^2 f)| per node (tangential Euler-Lagrange residual); valid from
// depth 2. Returns the scalar field and the max over depth >= collar nodes.
struct ElResidual {
  std::vector<double> magnitude;  // per node
  double max_interior = 0.0;
};
ElResidual el_residual(const SphereField& field, int collar = 2);

struct MinimizeConfig {
  int max_iters = 2000;
  double step0 = -1.0;  // <= 0: defaults to h^4
  double armijo_c = 1e-4;
  double armijo_shrink = 0.5;
  double el_tolerance = 1e-5;
  int collar_width = 2;
  std::uint64_t seed = 0;
};

struct TraceRow {
  int iteration;
  double energy;
  double step;
  double max_residual;
};

struct ConvergenceTrace {
  std::vector<TraceRow> rows;
  bool converged = false;
  bool stalled = false;
  double final_energy = 0.0;
  double final_residual = 0.0;
};

// Projected gradient descent with Armijo backtracking on the bienergy.
// Direction -P_f(Delta^2 f); after each step every node is renormalized; the
// frozen collar is never modified. The trial step doubles after each accepted
// step so smooth error is not stuck at the first backtracked scale.
ConvergenceTrace minimize(SphereField& field, const SphereField& boundary,
                          const MinimizeConfig& cfg);

// deterministic random unit-vector interior initialization (collar kept)
void randomize_interior(SphereField& field, int collar, Rng& rng);

}  // namespace bihmap
