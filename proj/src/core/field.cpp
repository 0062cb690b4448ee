#include "field.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>

namespace bihmap {

SphereField::SphereField(GridDomain domain, int target_dim)
    : domain_(std::move(domain)), n_(target_dim) {
  if (n_ < 1) throw InvalidArgument("target_dim must be >= 1");
  values_.assign(domain_.total_nodes() * static_cast<std::size_t>(n_ + 1), 0.0);
}

double SphereField::max_norm_defect() const {
  const int c = components();
  const std::size_t total = domain_.total_nodes();
  double worst = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const double* v = node(i);
    double s = 0.0;
    for (int k = 0; k < c; ++k) s += v[k] * v[k];
    worst = std::max(worst, std::abs(std::sqrt(s) - 1.0));
  }
  return worst;
}

void SphereField::renormalize(double tolerance) {
  const int c = components();
  const std::size_t total = domain_.total_nodes();
  for (std::size_t i = 0; i < total; ++i) {
    double* v = node(i);
    double s = 0.0;
    for (int k = 0; k < c; ++k) s += v[k] * v[k];
    const double nr = std::sqrt(s);
    if (std::abs(nr - 1.0) > tolerance) {
      throw InvalidArgument("off-sphere value at node " + std::to_string(i) + ": norm " +
                            std::to_string(nr));
    }
    for (int k = 0; k < c; ++k) v[k] /= nr;
  }
}

void SphereField::check_invariants() const {
  if (max_norm_defect() > 1e-9) {
    throw InvalidArgument("field violates the unit-norm invariant (defect > 1e-9)");
  }
}

void SphereField::sample_into(const Point& x, bool renorm, double* out) const {
  const int m = domain_.dim();
  const int c = components();
  const int N = domain_.nodes_per_axis();
  const double h = domain_.spacing();
  if (!domain_.contains(x)) throw GeometryError("sample point outside the domain box");

  int base[kMaxDim];
  double t[kMaxDim];
  for (int a = 0; a < m; ++a) {
    double u = (x[a] - domain_.lo(a)) / h;
    int i = static_cast<int>(std::floor(u));
    if (i >= N - 1) i = N - 2;
    if (i < 0) i = 0;
    base[a] = i;
    t[a] = u - i;
  }
  for (int k = 0; k < c; ++k) out[k] = 0.0;
  const int corners = 1 << m;
  Index idx{};
  for (int corner = 0; corner < corners; ++corner) {
    double w = 1.0;
    for (int a = 0; a < m; ++a) {
      const int bit = (corner >> a) & 1;
      idx[a] = base[a] + bit;
      w *= bit ? t[a] : (1.0 - t[a]);
    }
    if (w == 0.0) continue;
    const double* v = node(domain_.flat(idx));
    for (int k = 0; k < c; ++k) out[k] += w * v[k];
  }
  if (renorm) {
    double s = 0.0;
    for (int k = 0; k < c; ++k) s += out[k] * out[k];
    if (s > 0.0) {
      const double inv = 1.0 / std::sqrt(s);
      for (int k = 0; k < c; ++k) out[k] *= inv;
    }
  }
}

std::vector<double> SphereField::sample(const Point& x, bool renorm) const {
  std::vector<double> out(components());
  sample_into(x, renorm, out.data());
  return out;
}

namespace {

constexpr char kMagic[4] = {'B', 'H', 'F', '1'};

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_u32(std::FILE* f, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  if (std::fwrite(b, 1, 4, f) != 4) throw IoError("write failure");
}

std::uint32_t read_u32(std::FILE* f) {
  unsigned char b[4];
  if (std::fread(b, 1, 4, f) != 4) throw IoError("truncated header");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_f64(std::FILE* f, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
  if (std::fwrite(b, 1, 8, f) != 8) throw IoError("write failure");
}

double read_f64(std::FILE* f) {
  unsigned char b[8];
  if (std::fread(b, 1, 8, f) != 8) throw IoError("truncated file");
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void save_field(const SphereField& field, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open for writing: " + path);
  if (std::fwrite(kMagic, 1, 4, f.get()) != 4) throw IoError("write failure");
  const GridDomain& g = field.domain();
  write_u32(f.get(), static_cast<std::uint32_t>(g.dim()));
  write_u32(f.get(), static_cast<std::uint32_t>(field.target_dim()));
  write_u32(f.get(), static_cast<std::uint32_t>(g.nodes_per_axis()));
  for (int a = 0; a < g.dim(); ++a) write_f64(f.get(), g.origin()[a]);
  write_f64(f.get(), g.half_width());
  // bulk write of values; the in-memory layout is already little-endian on
  // every platform we build for, but go through the byte writer to keep the
  // format pinned.
  const std::vector<double>& v = field.values();
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_LITTLE_ENDIAN__
  if (std::fwrite(v.data(), 8, v.size(), f.get()) != v.size()) throw IoError("write failure");
#else
  for (double x : v) write_f64(f.get(), x);
#endif
  if (std::fflush(f.get()) != 0) throw IoError("flush failure on " + path);
}

SphereField load_field(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("cannot open: " + path);
  char magic[4];
  if (std::fread(magic, 1, 4, f.get()) != 4 || std::memcmp(magic, kMagic, 4) != 0) {
    throw IoError("malformed header: bad magic (expected BHF1)");
  }
  const std::uint32_t m = read_u32(f.get());
  const std::uint32_t n = read_u32(f.get());
  const std::uint32_t nodes = read_u32(f.get());
  if (m < kMinDim || m > kMaxDim) {
    throw InvalidArgument("unsupported dimension m=" + std::to_string(m));
  }
  if (n < 1 || n > 16) throw InvalidArgument("unsupported target dimension n=" + std::to_string(n));
  if (nodes < 8 || nodes > 100000) {
    throw InvalidArgument("nodes_per_axis out of range: " + std::to_string(nodes));
  }
  Point origin{};
  for (std::uint32_t a = 0; a < m; ++a) origin[a] = read_f64(f.get());
  const double hw = read_f64(f.get());
  GridDomain g(static_cast<int>(m), static_cast<int>(nodes), hw, origin);
  SphereField field(g, static_cast<int>(n));
  std::vector<double>& v = field.values();
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_LITTLE_ENDIAN__
  if (std::fread(v.data(), 8, v.size(), f.get()) != v.size()) throw IoError("truncated file");
#else
  for (double& x : v) x = read_f64(f.get());
#endif
  // must be unit vectors within 1e-6; renormalize to the sphere
  field.renormalize(1e-6);
  return field;
}

void rotate_target(SphereField& field, const std::vector<double>& rot) {
  const int c = field.components();
  if (rot.size() != static_cast<std::size_t>(c) * c) {
    throw InvalidArgument("rotation matrix has wrong size");
  }
  const std::size_t total = field.domain().total_nodes();
  std::vector<double> tmp(c);
  for (std::size_t i = 0; i < total; ++i) {
    double* v = field.node(i);
    for (int r = 0; r < c; ++r) {
      double s = 0.0;
      for (int k = 0; k < c; ++k) s += rot[r * c + k] * v[k];
      tmp[r] = s;
    }
    for (int k = 0; k < c; ++k) v[k] = tmp[k];
  }
}

std::vector<double> random_rotation(int c, Rng& rng) {
  std::vector<double> q(static_cast<std::size_t>(c) * c);
  // Gram-Schmidt on Gaussian rows
  for (int r = 0; r < c; ++r) {
    for (int k = 0; k < c; ++k) q[r * c + k] = rng.next_normal();
    for (int p = 0; p < r; ++p) {
      double dot = 0.0;
      for (int k = 0; k < c; ++k) dot += q[r * c + k] * q[p * c + k];
      for (int k = 0; k < c; ++k) q[r * c + k] -= dot * q[p * c + k];
    }
    double nr = 0.0;
    for (int k = 0; k < c; ++k) nr += q[r * c + k] * q[r * c + k];
    nr = std::sqrt(nr);
    for (int k = 0; k < c; ++k) q[r * c + k] /= nr;
  }
  return q;
}

}  // namespace bihmap
