#pragma once

#include <array>
#include <vector>

#include "field.hpp"

namespace bihmap {

// Finite-difference jet of a SphereField at a node: derivative tensors up to
// order 4, stored in symmetric-compact form (sorted multi-indices).
// Entries are built by composing centered first-difference stencils; nodes
// too close to the boundary fall back to one-sided second-order stencils and
// the jet is flagged.
struct Jet {
  int order = 0;
  int dim = 0;
  int comps = 0;
  bool one_sided = false;
  // tensors[l-1]: compact storage, combo-major, components contiguous
  std::array<std::vector<double>, 4> tensors;

  // Frobenius norm |grad^l f| with multiplicities accounted for.
  double magnitude(int ell) const;

  // full-tensor entry by (possibly unsorted) multi-index
  double entry(int ell, const int* idx, int comp) const;

  // trace of the second-derivative tensor (the composed-stencil Laplacian)
  std::vector<double> laplacian() const;
};

// Sorted multi-index table for symmetric tensors of order ell in dimension m.
struct ComboTable {
  int m = 0;
  int ell = 0;
  // per combo: occurrence count per axis (sums to ell)
  std::vector<std::array<int, kMaxDim>> axis_counts;
  std::vector<double> multiplicity;  // ell! / prod(counts!)
  std::size_t size() const { return axis_counts.size(); }
  // linear index of the combo with the given per-axis counts
  int index_of(const std::array<int, kMaxDim>& counts) const;
};

const ComboTable& combo_table(int m, int ell);

// Evaluator bound to a field; caches stencil banks. Cheap to construct.
class JetEvaluator {
 public:
  JetEvaluator(const SphereField& field, int order);

  Jet jet_at(const Index& node) const;

  // magnitudes only: out[l-1] = |grad^l f|(node) for l = 1..order;
  // returns true if any one-sided stencil was used
  bool magnitudes_at(const Index& node, double* out) const;

 private:
  const SphereField& field_;
  int order_;

  struct Stencil1D {
    int lo = 0;
    std::vector<double> coeff;  // offsets lo .. lo+coeff.size()-1
  };
  // [count-1][mode]: mode 0 centered, 1 forward, 2 backward
  std::array<std::array<Stencil1D, 3>, 4> bank_;

  // axis stencil choice for a node coordinate; sets mode and flags
  const Stencil1D& pick(int count, int coord, bool& onesided) const;

  void eval_combo(const Index& node, const std::array<int, kMaxDim>& counts, bool& onesided,
                  double* out) const;  // out[comps]
};

Jet jet_at(const SphereField& field, const Index& node, int order);

}  // namespace bihmap
