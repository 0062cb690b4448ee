#include "oracle.hpp"

#include <cmath>
#include <numbers>

#include "quadrature.hpp"

namespace bihmap {

namespace {

constexpr double kPi = std::numbers::pi;

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

OracleMap OracleMap::constant(int m, std::vector<double> value) {
  OracleMap o;
  o.kind_ = OracleKind::kConstant;
  o.m_ = m;
  o.n_ = static_cast<int>(value.size()) - 1;
  if (o.n_ < 1) throw InvalidArgument("constant oracle needs at least 2 components");
  double nr = 0.0;
  for (double v : value) nr += v * v;
  nr = std::sqrt(nr);
  if (std::abs(nr - 1.0) > 1e-12) {
    for (auto& v : value) v /= nr;
  }
  o.const_value_ = std::move(value);
  return o;
}

OracleMap OracleMap::radial_projection(int m) {
  OracleMap o;
  o.kind_ = OracleKind::kRadialProjection;
  o.m_ = m;
  o.n_ = m - 1;
  return o;
}

OracleMap OracleMap::cylindrical_projection(int m, int suppressed) {
  if (suppressed < 1 || suppressed > m - 2) {
    throw InvalidArgument("cylindrical projection needs 1 <= j <= m-2 suppressed axes");
  }
  OracleMap o;
  o.kind_ = OracleKind::kCylindricalProjection;
  o.m_ = m;
  o.suppressed_ = suppressed;
  o.n_ = m - suppressed - 1;
  return o;
}

OracleMap OracleMap::geodesic_wrap(int m, double frequency, int target_dim) {
  if (target_dim < 1) throw InvalidArgument("wrap target_dim must be >= 1");
  OracleMap o;
  o.kind_ = OracleKind::kGeodesicWrap;
  o.m_ = m;
  o.freq_ = frequency;
  o.n_ = target_dim;
  return o;
}

OracleMap OracleMap::planted_multi(int m, std::vector<Point> centers, double blend_radius) {
  if (centers.empty()) throw InvalidArgument("planted_multi needs at least one center");
  if (!(blend_radius > 0.0)) throw InvalidArgument("blend radius must be positive");
  OracleMap o;
  o.kind_ = OracleKind::kPlantedMulti;
  o.m_ = m;
  o.n_ = m;
  o.centers_ = std::move(centers);
  o.blend_radius_ = blend_radius;
  return o;
}

double OracleMap::singular_distance(const Point& x) const {
  switch (kind_) {
    case OracleKind::kConstant:
    case OracleKind::kGeodesicWrap:
      return std::numeric_limits<double>::infinity();
    case OracleKind::kRadialProjection:
      return std::sqrt(norm2(x, m_));
    case OracleKind::kCylindricalProjection: {
      double s = 0.0;
      for (int a = 0; a < m_ - suppressed_; ++a) s += x[a] * x[a];
      return std::sqrt(s);
    }
    case OracleKind::kPlantedMulti: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : centers_) best = std::min(best, std::sqrt(dist2(x, c, m_)));
      return best;
    }
  }
  return std::numeric_limits<double>::infinity();
}

std::vector<double> OracleMap::evaluate(const Point& x) const {
  std::vector<double> out(n_ + 1, 0.0);
  switch (kind_) {
    case OracleKind::kConstant:
      out = const_value_;
      break;
    case OracleKind::kRadialProjection: {
      const double r = std::sqrt(norm2(x, m_));
      if (r == 0.0) throw SingularLocusError("evaluation on the singular locus");
      for (int a = 0; a < m_; ++a) out[a] = x[a] / r;
      break;
    }
    case OracleKind::kCylindricalProjection: {
      const int d = m_ - suppressed_;
      double s = 0.0;
      for (int a = 0; a < d; ++a) s += x[a] * x[a];
      const double r = std::sqrt(s);
      if (r == 0.0) throw SingularLocusError("evaluation on the singular locus");
      for (int a = 0; a < d; ++a) out[a] = x[a] / r;
      break;
    }
    case OracleKind::kGeodesicWrap:
      out[0] = std::cos(freq_ * x[0]);
      out[1] = std::sin(freq_ * x[0]);
      break;
    case OracleKind::kPlantedMulti: {
      out[m_] = 1.0;  // north pole far field
      for (const auto& c : centers_) {
        const double t = std::sqrt(dist2(x, c, m_));
        if (t >= blend_radius_) continue;
        if (t == 0.0) throw SingularLocusError("evaluation on a planted center");
        const double s2 = (t / blend_radius_) * (t / blend_radius_);
        const double b = std::pow(1.0 - s2, 5);
        const double theta = 0.5 * kPi * b;
        const double st = std::sin(theta), ct = std::cos(theta);
        for (int a = 0; a < m_; ++a) out[a] = st * (x[a] - c[a]) / t;
        out[m_] = ct;
        break;  // blend balls are disjoint by construction
      }
      break;
    }
  }
  return out;
}

TaylorScalar OracleMap::component_jet(const Point& x, int comp) const {
  const int m = m_;
  auto var = [&](int a) { return TaylorScalar::variable(m, a, x[a]); };
  switch (kind_) {
    case OracleKind::kConstant:
      return TaylorScalar::constant(m, const_value_[comp]);
    case OracleKind::kRadialProjection: {
      TaylorScalar r2 = TaylorScalar::constant(m, 0.0);
      for (int a = 0; a < m; ++a) {
        TaylorScalar v = var(a);
        r2 = r2 + v * v;
      }
      return var(comp) * r2.rsqrt();
    }
    case OracleKind::kCylindricalProjection: {
      const int d = m_ - suppressed_;
      TaylorScalar r2 = TaylorScalar::constant(m, 0.0);
      for (int a = 0; a < d; ++a) {
        TaylorScalar v = var(a);
        r2 = r2 + v * v;
      }
      return var(comp) * r2.rsqrt();
    }
    case OracleKind::kGeodesicWrap: {
      if (comp == 0) return (var(0) * freq_).cos_();
      if (comp == 1) return (var(0) * freq_).sin_();
      return TaylorScalar::constant(m, 0.0);
    }
    case OracleKind::kPlantedMulti: {
      for (const auto& c : centers_) {
        const double t = std::sqrt(dist2(x, c, m_));
        if (t >= blend_radius_) continue;
        TaylorScalar t2 = TaylorScalar::constant(m, 0.0);
        for (int a = 0; a < m; ++a) {
          TaylorScalar v = var(a) + (-c[a]);
          t2 = t2 + v * v;
        }
        TaylorScalar s2 = t2 * (1.0 / (blend_radius_ * blend_radius_));
        // b = (1 - s2)^5
        TaylorScalar u = TaylorScalar::constant(m, 1.0) - s2;
        const double uv = u.value();
        TaylorScalar b = u.compose({std::pow(uv, 5), 5 * std::pow(uv, 4), 20 * std::pow(uv, 3),
                                    60 * uv * uv, 120 * uv});
        TaylorScalar theta = b * (0.5 * kPi);
        if (comp == m_) return theta.cos_();
        return theta.sin_() * ((var(comp) + (-c[comp])) * t2.rsqrt());
      }
      // outside all blend balls: north pole constant
      return TaylorScalar::constant(m, comp == m_ ? 1.0 : 0.0);
    }
  }
  return TaylorScalar::constant(m, 0.0);
}

Jet OracleMap::exact_jet(const Point& x, int order) const {
  if (order < 1 || order > 4) throw InvalidArgument("jet order must be in 1..4");
  if (singular_distance(x) == 0.0) throw SingularLocusError("jet on the singular locus");
  const int comps = n_ + 1;
  Jet jet;
  jet.order = order;
  jet.dim = m_;
  jet.comps = comps;
  std::vector<TaylorScalar> ts;
  ts.reserve(comps);
  for (int c = 0; c < comps; ++c) ts.push_back(component_jet(x, c));
  for (int ell = 1; ell <= order; ++ell) {
    const ComboTable& tab = combo_table(m_, ell);
    jet.tensors[ell - 1].assign(tab.size() * comps, 0.0);
    for (std::size_t i = 0; i < tab.size(); ++i) {
      int idx[4];
      int p = 0;
      for (int a = 0; a < m_; ++a) {
        for (int rep = 0; rep < tab.axis_counts[i][a]; ++rep) idx[p++] = a;
      }
      for (int c = 0; c < comps; ++c) {
        double v = 0.0;
        switch (ell) {
          case 1: v = ts[c].grad(idx[0]); break;
          case 2: v = ts[c].hess(idx[0], idx[1]); break;
          case 3: v = ts[c].third(idx[0], idx[1], idx[2]); break;
          case 4: v = ts[c].fourth(idx[0], idx[1], idx[2], idx[3]); break;
        }
        jet.tensors[ell - 1][i * comps + c] = v;
      }
    }
  }
  return jet;
}

double OracleMap::exact_theta(const Point& center, double r) const {
  if (!(r > 0.0)) throw InvalidArgument("theta radius must be positive");
  switch (kind_) {
    case OracleKind::kConstant:
      return 0.0;
    case OracleKind::kRadialProjection: {
      if (std::sqrt(norm2(center, m_)) > 1e-12) {
        throw UnsupportedError("exact_theta: radial projection supported about its center only");
      }
      if (m_ < 5) throw UnsupportedError("exact_theta: |Delta f|^2 not integrable for m < 5");
      const double A = unit_sphere_area(m_);
      const double c2 = (m_ - 1) * (m_ - 1);
      // interior: r^{4-m} * c2 * A * int_0^r rho^{m-5} drho
      const double interior =
          std::pow(r, 4 - m_) * c2 * A *
          simpson([&](double rho) { return std::pow(rho, m_ - 5); }, 0.0, r, 512);
      // boundary integrand on |y| = r: 2(m-1)/r^2, dX f identically zero
      const double boundary = std::pow(r, 3 - m_) * A * std::pow(r, m_ - 1) * 2.0 * (m_ - 1) / (r * r);
      return interior + boundary;
    }
    case OracleKind::kCylindricalProjection: {
      const int d = m_ - suppressed_;
      double perp = 0.0;
      for (int a = 0; a < d; ++a) perp += center[a] * center[a];
      if (std::sqrt(perp) > 1e-12) {
        throw UnsupportedError("exact_theta: cylindrical projection supported on its axis only");
      }
      if (d < 5) throw UnsupportedError("exact_theta: cylinder cross-section below W^{2,2} range");
      const int j = suppressed_;
      const double Ad = unit_sphere_area(d);
      const double Aj = unit_sphere_area(j);
      const double Vj = unit_ball_volume(j);
      const double c2 = (d - 1) * (d - 1);
      const double J1 = simpson(
          [&](double phi) {
            return std::pow(std::sin(phi), d - 5) * std::pow(std::cos(phi), j + 1);
          },
          0.0, kPi / 2.0, 2048);
      const double J2 = simpson(
          [&](double phi) {
            return std::pow(std::sin(phi), d - 3) * std::pow(std::cos(phi), j - 1);
          },
          0.0, kPi / 2.0, 2048);
      return c2 * Ad * Vj * J1 + 2.0 * (d - 1) * Ad * Aj * J2;
    }
    default:
      throw UnsupportedError("exact_theta: unsupported (map, center) pair");
  }
}

double OracleMap::exact_ball_energy(double r) const {
  switch (kind_) {
    case OracleKind::kConstant:
      return 0.0;
    case OracleKind::kRadialProjection: {
      if (m_ < 5) throw UnsupportedError("ball energy diverges for m < 5");
      const double A = unit_sphere_area(m_);
      return (m_ - 1) * (m_ - 1) * A *
             simpson([&](double rho) { return std::pow(rho, m_ - 5); }, 0.0, r, 512);
    }
    case OracleKind::kGeodesicWrap:
      throw UnsupportedError("ball energy oracle not defined for the wrap");
    default:
      throw UnsupportedError("ball energy oracle unsupported for this kind");
  }
}

SphereField OracleMap::rasterize(const GridDomain& domain) const {
  if (domain.dim() != m_) throw InvalidArgument("rasterize: domain dimension mismatch");
  const double h = domain.spacing();
  GridDomain g = domain;
  // singular locus must not hit a node exactly; shift the origin by h/2 if so
  bool collision = false;
  for_each_node(g, [&](const Index& idx, std::size_t) {
    if (collision) return;
    if (singular_distance(g.node_point(idx)) < 1e-12) collision = true;
  });
  if (collision) {
    Point o = g.origin();
    for (int a = 0; a < m_; ++a) o[a] += 0.5 * h;
    g = GridDomain(g.dim(), g.nodes_per_axis(), g.half_width(), o);
    for_each_node(g, [&](const Index& idx, std::size_t) {
      if (singular_distance(g.node_point(idx)) < 1e-12) {
        throw SingularLocusError("node exactly on singular locus even after h/2 offset");
      }
    });
  }
  SphereField field(g, n_);
  const int comps = n_ + 1;
  for_each_node(g, [&](const Index& idx, std::size_t flat) {
    const std::vector<double> v = evaluate(g.node_point(idx));
    double* out = field.node(flat);
    for (int c = 0; c < comps; ++c) out[c] = v[c];
  });
  return field;
}

std::string OracleMap::describe() const {
  switch (kind_) {
    case OracleKind::kConstant: return "constant";
    case OracleKind::kRadialProjection: return "radial_projection";
    case OracleKind::kCylindricalProjection:
      return "cylindrical_projection(j=" + std::to_string(suppressed_) + ")";
    case OracleKind::kGeodesicWrap: return "geodesic_wrap(a=" + std::to_string(freq_) + ")";
    case OracleKind::kPlantedMulti:
      return "planted_multi(K=" + std::to_string(centers_.size()) + ")";
  }
  return "?";
}

}  // namespace bihmap
