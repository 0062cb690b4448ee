#include "energy.hpp"

#include <cmath>

namespace bihmap {

void laplacian_buffer(const GridDomain& g, int comps, const std::vector<double>& in,
                      std::vector<double>& out) {
  const int m = g.dim();
  const int N = g.nodes_per_axis();
  const double ih2 = 1.0 / (g.spacing() * g.spacing());
  const std::size_t total = g.total_nodes();
  out.assign(total * comps, 0.0);
  const std::size_t nlines = total / static_cast<std::size_t>(N);
  const std::size_t line_doubles = static_cast<std::size_t>(N) * comps;

  parallel_for_chunks(nlines, 256, [&](std::size_t lb, std::size_t le) {
    for (std::size_t line = lb; line < le; ++line) {
      // outer multi-index over the first m-1 axes
      std::size_t rem = line;
      Index oidx{};
      std::size_t base = 0;
      for (int a = 0; a < m - 1; ++a) {
        const std::size_t s = g.stride(a) / static_cast<std::size_t>(N);
        oidx[a] = static_cast<int>(rem / s);
        rem %= s;
        base += static_cast<std::size_t>(oidx[a]) * g.stride(a);
      }
      const double* src = in.data() + base * comps;
      double* dst = out.data() + base * comps;
      // contributions from the outer axes (valid only if the outer index is
      // interior along that axis)
      for (int a = 0; a < m - 1; ++a) {
        if (oidx[a] < 1 || oidx[a] > N - 2) continue;
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(g.stride(a)) * comps;
        for (std::size_t k = 0; k < line_doubles; ++k) {
          dst[k] += (src[k + off] - 2.0 * src[k] + src[k - off]) * ih2;
        }
      }
      // last axis
      for (int i = 1; i <= N - 2; ++i) {
        const std::size_t o = static_cast<std::size_t>(i) * comps;
        for (int c = 0; c < comps; ++c) {
          dst[o + c] += (src[o + comps + c] - 2.0 * src[o + c] + src[o - comps + c]) * ih2;
        }
      }
    }
  });
}

void laplacian_field(const SphereField& field, std::vector<double>& out) {
  laplacian_buffer(field.domain(), field.components(), field.values(), out);
}

namespace {

double hm_of(const GridDomain& g) {
  double hm = 1.0;
  for (int a = 0; a < g.dim(); ++a) hm *= g.spacing();
  return hm;
}

// sum over nodes of depth >= collar of |buf(node)|^2, deterministic
double interior_sq_sum(const GridDomain& g, int comps, const std::vector<double>& buf,
                       int collar) {
  const int N = g.nodes_per_axis();
  const std::size_t nlines = g.total_nodes() / static_cast<std::size_t>(N);
  return parallel_sum_chunks(nlines, 256, [&](std::size_t lb, std::size_t le) {
    PairwiseAccumulator acc;
    for (std::size_t line = lb; line < le; ++line) {
      std::size_t rem = line;
      std::size_t base = 0;
      bool outer_ok = true;
      for (int a = 0; a < g.dim() - 1; ++a) {
        const std::size_t s = g.stride(a) / static_cast<std::size_t>(N);
        const int ia = static_cast<int>(rem / s);
        rem %= s;
        base += static_cast<std::size_t>(ia) * g.stride(a);
        if (ia < collar || ia > N - 1 - collar) outer_ok = false;
      }
      if (!outer_ok) continue;
      const double* src = buf.data() + base * comps;
      for (int i = collar; i <= N - 1 - collar; ++i) {
        double s = 0.0;
        for (int c = 0; c < comps; ++c) {
          const double v = src[static_cast<std::size_t>(i) * comps + c];
          s += v * v;
        }
        acc.add(s);
      }
    }
    return acc.total();
  });
}

}  // namespace

double energy(const SphereField& field, int collar) {
  if (collar < 1) throw InvalidArgument("energy collar must be >= 1");
  std::vector<double> lap;
  laplacian_field(field, lap);
  return interior_sq_sum(field.domain(), field.components(), lap, collar) * hm_of(field.domain());
}

ElResidual el_residual(const SphereField& field, int collar) {
  const GridDomain& g = field.domain();
  const int comps = field.components();
  std::vector<double> lap, bilap;
  laplacian_field(field, lap);
  laplacian_buffer(g, comps, lap, bilap);
  ElResidual out;
  out.magnitude.assign(g.total_nodes(), 0.0);
  const int N = g.nodes_per_axis();
  double worst = 0.0;
  for_each_node(g, [&](const Index& idx, std::size_t flat) {
    const int depth = g.boundary_depth(idx);
    if (depth < 2) return;
    const double* f = field.node(flat);
    const double* b = bilap.data() + flat * comps;
    double dot = 0.0;
    for (int c = 0; c < comps; ++c) dot += b[c] * f[c];
    double s = 0.0;
    for (int c = 0; c < comps; ++c) {
      const double t = b[c] - dot * f[c];
      s += t * t;
    }
    const double mag = std::sqrt(s);
    out.magnitude[flat] = mag;
    if (depth >= collar && mag > worst) worst = mag;
  });
  (void)N;
  out.max_interior = worst;
  return out;
}

void randomize_interior(SphereField& field, int collar, Rng& rng) {
  const GridDomain& g = field.domain();
  const int comps = field.components();
  for_each_node(g, [&](const Index& idx, std::size_t flat) {
    if (g.boundary_depth(idx) < collar) return;
    double* v = field.node(flat);
    double s = 0.0;
    for (int c = 0; c < comps; ++c) {
      v[c] = rng.next_normal();
      s += v[c] * v[c];
    }
    s = std::sqrt(s);
    if (s == 0.0) {
      v[0] = 1.0;
      for (int c = 1; c < comps; ++c) v[c] = 0.0;
    } else {
      for (int c = 0; c < comps; ++c) v[c] /= s;
    }
  });
}

ConvergenceTrace minimize(SphereField& field, const SphereField& boundary,
                          const MinimizeConfig& cfg) {
  const GridDomain& g = field.domain();
  if (!(g == boundary.domain()) || field.target_dim() != boundary.target_dim()) {
    throw InvalidArgument("minimize: initial and boundary must share domain and target");
  }
  if (cfg.collar_width < 2) throw InvalidArgument("collar_width must be >= 2");
  const int collar = cfg.collar_width;
  const int comps = field.components();
  const std::size_t total = g.total_nodes();
  const double hm = hm_of(g);

  // freeze the collar to the boundary data
  for_each_node(g, [&](const Index& idx, std::size_t flat) {
    if (g.boundary_depth(idx) >= collar) return;
    const double* b = boundary.node(flat);
    double* v = field.node(flat);
    for (int c = 0; c < comps; ++c) v[c] = b[c];
  });

  std::vector<double> lap, grad, cand, candlap;
  double E = energy(field, collar);
  if (!std::isfinite(E)) throw ComputeError("non-finite energy at start of minimize");

  ConvergenceTrace trace;
  const double h4 = std::pow(g.spacing(), 4);
  double step = cfg.step0 > 0.0 ? cfg.step0 : h4;
  double res = 0.0;

  cand.assign(total * comps, 0.0);
  for (int it = 0; it < cfg.max_iters; ++it) {
    laplacian_field(field, lap);
    laplacian_buffer(g, comps, lap, grad);
    // tangential projection, zero outside the movable interior
    double worst = 0.0;
    for_each_node(g, [&](const Index& idx, std::size_t flat) {
      double* q = grad.data() + flat * comps;
      if (g.boundary_depth(idx) < collar) {
        for (int c = 0; c < comps; ++c) q[c] = 0.0;
        return;
      }
      const double* f = field.node(flat);
      double dot = 0.0;
      for (int c = 0; c < comps; ++c) dot += q[c] * f[c];
      double s = 0.0;
      for (int c = 0; c < comps; ++c) {
        q[c] -= dot * f[c];
        s += q[c] * q[c];
      }
      worst = std::max(worst, s);
    });
    res = std::sqrt(worst);
    trace.rows.push_back({it, E, step, res});
    if (res <= cfg.el_tolerance) {
      trace.converged = true;
      break;
    }
    double gdot = 0.0;
    for (double q : grad) gdot += q * q;
    gdot *= hm;

    step = std::min(step * 2.0, 1e12 * h4);
    bool accepted = false;
    while (step > 1e-30 * h4) {
      for (std::size_t i = 0; i < total; ++i) {
        const double* f = field.values().data() + i * comps;
        const double* q = grad.data() + i * comps;
        double* o = cand.data() + i * comps;
        double s = 0.0;
        for (int c = 0; c < comps; ++c) {
          o[c] = f[c] - step * q[c];
          s += o[c] * o[c];
        }
        const double inv = 1.0 / std::sqrt(s);
        for (int c = 0; c < comps; ++c) o[c] *= inv;
      }
      laplacian_buffer(g, comps, cand, candlap);
      const double Ec = interior_sq_sum(g, comps, candlap, collar) * hm;
      if (!std::isfinite(Ec)) throw ComputeError("non-finite energy during line search");
      if (Ec <= E - cfg.armijo_c * step * 2.0 * gdot) {
        accepted = true;
        E = Ec;
        field.values().swap(cand);
        break;
      }
      step *= cfg.armijo_shrink;
    }
    if (!accepted) {
      trace.stalled = true;
      break;
    }
  }
  trace.final_energy = E;
  trace.final_residual = res;
  return trace;
}

}  // namespace bihmap
