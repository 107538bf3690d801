#pragma once

// First- and second-order differential operator atoms in cylindrical
// coordinates, composed right-to-left and applied to Taylor series.
// All atoms are written with c = 1 (internal units).

#include <initializer_list>
#include <vector>

#include "vortexlab/jet.hpp"
#include "vortexlab/potentials.hpp"

namespace vortexlab {

enum class AtomKind {
  dt_plus_dz,            // d_t + d_z
  dt_minus_dz,           // d_t - d_z
  ladder,                // e^{i phi} (d_r + (i/r) d_phi)
  neg_ladder,            // -e^{i phi} (d_r + (i/r) d_phi)
  dx_dz,                 // d_x d_z
  dy_dz,                 // d_y d_z
  i_dx_dt,               // i d_x d_t
  i_dy_dt,               // i d_y d_t
  transverse_laplacian,  // d_r^2 + (1/r) d_r + (1/r^2) d_phi^2
  scalar,                // multiplication by a constant
};

struct DiffAtom {
  AtomKind kind = AtomKind::scalar;
  cplx factor{1.0, 0.0};  // used by AtomKind::scalar only

  static DiffAtom scale(cplx s) { return {AtomKind::scalar, s}; }

  int derivative_order() const noexcept;
  bool uses_inverse_r() const noexcept;
};

inline constexpr int kMaxOperatorDepth = 4;

/// Ordered atom list; the last atom acts first, as in written operator notation.
class DiffOpSpec {
 public:
  DiffOpSpec() = default;
  DiffOpSpec(std::initializer_list<DiffAtom> atoms);
  explicit DiffOpSpec(std::vector<DiffAtom> atoms);

  const std::vector<DiffAtom>& atoms() const noexcept { return atoms_; }
  std::size_t depth() const noexcept { return atoms_.size(); }
  int derivative_order() const noexcept;
  bool uses_inverse_r() const noexcept;

 private:
  std::vector<DiffAtom> atoms_;
};

/// Atom acting on the series f expanded at `at`; the result has order f.order() - atom order.
Taylor apply_atom(const DiffAtom& atom, const Taylor& f, const SpacetimePoint& at);

/// Composition applied to an already expanded series (right-to-left).
Taylor apply_operator(const DiffOpSpec& op, const Taylor& f, const SpacetimePoint& at);

/// Scalar value of `op` acting on `potential` at `point`.
cplx apply_operator(const DiffOpSpec& op, const PotentialExpr& potential, const SpacetimePoint& point);

// Cartesian first derivatives in cylindrical form:
//   d_x = cos(phi) d_r - sin(phi)/r d_phi,  d_y = sin(phi) d_r + cos(phi)/r d_phi.
Taylor partial_x(const Taylor& f, const SpacetimePoint& at);
Taylor partial_y(const Taylor& f, const SpacetimePoint& at);

}  // namespace vortexlab
