#include "quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace bihmap {

namespace {
std::mutex g_sub_mutex;
std::map<int, std::vector<std::array<double, kMaxDim>>> g_subs;
}  // namespace

const std::vector<std::array<double, kMaxDim>>& subcell_offsets(int m) {
  std::lock_guard<std::mutex> lock(g_sub_mutex);
  auto it = g_subs.find(m);
  if (it != g_subs.end()) return it->second;
  std::vector<std::array<double, kMaxDim>> subs;
  const double offs[3] = {-1.0 / 3.0, 0.0, 1.0 / 3.0};
  int count = 1;
  for (int a = 0; a < m; ++a) count *= 3;
  subs.reserve(count);
  for (int code = 0; code < count; ++code) {
    std::array<double, kMaxDim> s{};
    int c = code;
    for (int a = 0; a < m; ++a) {
      s[a] = offs[c % 3];
      c /= 3;
    }
    subs.push_back(s);
  }
  return g_subs.emplace(m, std::move(subs)).first->second;
}

double ball_integral(const GridScalar& gsc, const Point& x, double r) {
  return ball_integral_fn(gsc.domain, x, r,
                          [&](const Index&, std::size_t flat) { return gsc.values[flat]; });
}

double shell_integral(const GridScalar& gsc, const Point& x, double r) {
  return shell_integral_fn(gsc.domain, x, r,
                           [&](const Index&, std::size_t flat) { return gsc.values[flat]; });
}

double unit_ball_volume(int m) {
  // V_m = pi^{m/2} / Gamma(m/2 + 1)
  const double pi = std::numbers::pi;
  switch (m) {
    case 1: return 2.0;
    case 2: return pi;
    case 3: return 4.0 * pi / 3.0;
    case 4: return pi * pi / 2.0;
    case 5: return 8.0 * pi * pi / 15.0;
    case 6: return pi * pi * pi / 6.0;
    default: throw InvalidArgument("unsupported dimension for ball volume");
  }
}

double unit_sphere_area(int m) { return m * unit_ball_volume(m); }

}  // namespace bihmap
