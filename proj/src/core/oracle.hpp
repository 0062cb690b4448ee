#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jets.hpp"
#include "taylor.hpp"

namespace bihmap {

enum class OracleKind {
  kConstant,
  kRadialProjection,
  kCylindricalProjection,
  kGeodesicWrap,
  kPlantedMulti,
};

// Closed-form sphere-valued test maps with exact jets and exact densities.
class OracleMap {
 public:
  static OracleMap constant(int m, std::vector<double> value);
  static OracleMap radial_projection(int m);                       // n = m-1
  static OracleMap cylindrical_projection(int m, int suppressed);  // n = m-j-1
  static OracleMap geodesic_wrap(int m, double frequency, int target_dim = 2);
  // K point singularities with a C^4 suspension profile of the given blend
  // radius; constant (north pole) outside the blend balls. n = m.
  static OracleMap planted_multi(int m, std::vector<Point> centers, double blend_radius);

  OracleKind kind() const { return kind_; }
  int dim() const { return m_; }
  int target_dim() const { return n_; }
  double wrap_frequency() const { return freq_; }
  int suppressed_axes() const { return suppressed_; }
  double blend_radius() const { return blend_radius_; }
  const std::vector<Point>& centers() const { return centers_; }

  // distance from x to the singular locus (infinity when smooth everywhere)
  double singular_distance(const Point& x) const;

  std::vector<double> evaluate(const Point& x) const;
  Jet exact_jet(const Point& x, int order) const;

  // Theta by exact 1-D radial quadrature of the closed-form integrands.
  // Supported: constants anywhere; radial projection about the origin
  // (m >= 5); cylindrical projection about axis points (m - j >= 5).
  double exact_theta(const Point& center, double r) const;

  // exact bienergy over the ball B_r(0) (same support rules as exact_theta)
  double exact_ball_energy(double r) const;

  SphereField rasterize(const GridDomain& domain) const;

  std::string describe() const;

 private:
  OracleMap() = default;
  TaylorScalar component_jet(const Point& x, int comp) const;

  OracleKind kind_ = OracleKind::kConstant;
  int m_ = 0;
  int n_ = 0;
  double freq_ = 0.0;
  int suppressed_ = 0;
  double blend_radius_ = 0.0;
  std::vector<Point> centers_;
  std::vector<double> const_value_;
};

}  // namespace bihmap
