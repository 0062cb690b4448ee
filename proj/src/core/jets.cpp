#include "jets.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace bihmap {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ComboTable build_combo_table(int m, int ell) {
  ComboTable t;
  t.m = m;
  t.ell = ell;
  // enumerate sorted multi-indices i1 <= ... <= i_ell via axis counts
  std::array<int, kMaxDim> counts{};
  // recursive enumeration of compositions of ell into m ordered bins
  auto rec = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == m - 1) {
      counts[axis] = remaining;
      t.axis_counts.push_back(counts);
      double mult = factorial(ell);
      for (int a = 0; a < m; ++a) mult /= factorial(counts[a]);
      t.multiplicity.push_back(mult);
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      counts[axis] = c;
      self(self, axis + 1, remaining - c);
    }
  };
  rec(rec, 0, ell);
  return t;
}

std::mutex g_table_mutex;
std::map<std::pair<int, int>, ComboTable> g_tables;

}  // namespace

const ComboTable& combo_table(int m, int ell) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto key = std::make_pair(m, ell);
  auto it = g_tables.find(key);
  if (it == g_tables.end()) it = g_tables.emplace(key, build_combo_table(m, ell)).first;
  return it->second;
}

int ComboTable::index_of(const std::array<int, kMaxDim>& counts) const {
  for (std::size_t i = 0; i < axis_counts.size(); ++i) {
    bool eq = true;
    for (int a = 0; a < m; ++a) {
      if (axis_counts[i][a] != counts[a]) {
        eq = false;
        break;
      }
    }
    if (eq) return static_cast<int>(i);
  }
  return -1;
}

double Jet::magnitude(int ell) const {
  const ComboTable& tab = combo_table(dim, ell);
  const std::vector<double>& t = tensors[ell - 1];
  double s = 0.0;
  for (std::size_t i = 0; i < tab.size(); ++i) {
    double block = 0.0;
    for (int c = 0; c < comps; ++c) {
      const double v = t[i * comps + c];
      block += v * v;
    }
    s += tab.multiplicity[i] * block;
  }
  return std::sqrt(s);
}

double Jet::entry(int ell, const int* idx, int comp) const {
  const ComboTable& tab = combo_table(dim, ell);
  std::array<int, kMaxDim> counts{};
  for (int i = 0; i < ell; ++i) counts[idx[i]]++;
  const int k = tab.index_of(counts);
  return tensors[ell - 1][static_cast<std::size_t>(k) * comps + comp];
}

std::vector<double> Jet::laplacian() const {
  const ComboTable& tab = combo_table(dim, 2);
  std::vector<double> out(comps, 0.0);
  for (std::size_t i = 0; i < tab.size(); ++i) {
    // diagonal combos have a single axis with count 2
    bool diag = false;
    for (int a = 0; a < dim; ++a) {
      if (tab.axis_counts[i][a] == 2) diag = true;
    }
    if (!diag) continue;
    for (int c = 0; c < comps; ++c) out[c] += tensors[1][i * comps + c];
  }
  return out;
}

namespace {

// compose two 1-D operators given as (lo, coeffs)
void compose(const int alo, const std::vector<double>& a, const int blo,
             const std::vector<double>& b, int& clo, std::vector<double>& c) {
  clo = alo + blo;
  c.assign(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
}

}  // namespace

JetEvaluator::JetEvaluator(const SphereField& field, int order)
    : field_(field), order_(order) {
  if (order < 1 || order > 4) throw InvalidArgument("jet order must be in 1..4");
  const double h = field.domain().spacing();
  const double ih = 1.0 / (2.0 * h);
  // base first-difference operators
  const std::vector<double> ctr = {-ih, 0.0, ih};                 // offsets -1..1
  const std::vector<double> fwd = {-3.0 * ih, 4.0 * ih, -ih};     // offsets 0..2
  const std::vector<double> bwd = {ih, -4.0 * ih, 3.0 * ih};      // offsets -2..0
  for (int mode = 0; mode < 3; ++mode) {
    const std::vector<double>& base = mode == 0 ? ctr : (mode == 1 ? fwd : bwd);
    const int baselo = mode == 0 ? -1 : (mode == 1 ? 0 : -2);
    int lo = baselo;
    std::vector<double> cur = base;
    bank_[0][mode] = {lo, cur};
    for (int count = 2; count <= 4; ++count) {
      int nlo;
      std::vector<double> nxt;
      compose(lo, cur, baselo, base, nlo, nxt);
      lo = nlo;
      cur = std::move(nxt);
      bank_[count - 1][mode] = {lo, cur};
    }
  }
}

const JetEvaluator::Stencil1D& JetEvaluator::pick(int count, int coord, bool& onesided) const {
  const int N = field_.domain().nodes_per_axis();
  if (coord - count >= 0 && coord + count <= N - 1) return bank_[count - 1][0];
  onesided = true;
  if (coord + 2 * count <= N - 1) return bank_[count - 1][1];
  if (coord - 2 * count >= 0) return bank_[count - 1][2];
  throw GeometryError("grid too small for a one-sided stencil of this order");
}

void JetEvaluator::eval_combo(const Index& node, const std::array<int, kMaxDim>& counts,
                              bool& onesided, double* out) const {
  const GridDomain& g = field_.domain();
  const int m = g.dim();
  const int comps = field_.components();
  for (int c = 0; c < comps; ++c) out[c] = 0.0;

  // active axes
  int axes[4];
  const Stencil1D* st[4];
  int nact = 0;
  for (int a = 0; a < m; ++a) {
    if (counts[a] > 0) {
      axes[nact] = a;
      st[nact] = &pick(counts[a], node[a], onesided);
      ++nact;
    }
  }
  if (nact == 0) {
    const double* v = field_.node(g.flat(node));
    for (int c = 0; c < comps; ++c) out[c] = v[c];
    return;
  }
  // odometer over the tensor product of active stencils
  int pos[4] = {0, 0, 0, 0};
  const std::size_t flat0 = g.flat(node);
  for (;;) {
    double w = 1.0;
    std::ptrdiff_t off = 0;
    for (int k = 0; k < nact; ++k) {
      w *= st[k]->coeff[pos[k]];
      off += static_cast<std::ptrdiff_t>(st[k]->lo + pos[k]) *
             static_cast<std::ptrdiff_t>(g.stride(axes[k]));
    }
    if (w != 0.0) {
      const double* v = field_.node(static_cast<std::size_t>(
          static_cast<std::ptrdiff_t>(flat0) + off));
      for (int c = 0; c < comps; ++c) out[c] += w * v[c];
    }
    int k = 0;
    for (;;) {
      if (++pos[k] < static_cast<int>(st[k]->coeff.size())) break;
      pos[k] = 0;
      if (++k >= nact) return;
    }
  }
}

Jet JetEvaluator::jet_at(const Index& node) const {
  const int m = field_.domain().dim();
  const int comps = field_.components();
  Jet jet;
  jet.order = order_;
  jet.dim = m;
  jet.comps = comps;
  double buf[32];
  for (int ell = 1; ell <= order_; ++ell) {
    const ComboTable& tab = combo_table(m, ell);
    jet.tensors[ell - 1].assign(tab.size() * comps, 0.0);
    for (std::size_t i = 0; i < tab.size(); ++i) {
      eval_combo(node, tab.axis_counts[i], jet.one_sided, buf);
      for (int c = 0; c < comps; ++c) jet.tensors[ell - 1][i * comps + c] = buf[c];
    }
  }
  return jet;
}

bool JetEvaluator::magnitudes_at(const Index& node, double* out) const {
  const int m = field_.domain().dim();
  const int comps = field_.components();
  bool onesided = false;
  double buf[32];
  for (int ell = 1; ell <= order_; ++ell) {
    const ComboTable& tab = combo_table(m, ell);
    double s = 0.0;
    for (std::size_t i = 0; i < tab.size(); ++i) {
      eval_combo(node, tab.axis_counts[i], onesided, buf);
      double block = 0.0;
      for (int c = 0; c < comps; ++c) block += buf[c] * buf[c];
      s += tab.multiplicity[i] * block;
    }
    out[ell - 1] = std::sqrt(s);
  }
  return onesided;
}

Jet jet_at(const SphereField& field, const Index& node, int order) {
  return JetEvaluator(field, order).jet_at(node);
}

}  // namespace bihmap
