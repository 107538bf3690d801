#include "vortexlab/operators.hpp"

#include <algorithm>
#include <numeric>

namespace vortexlab {
namespace {

constexpr cplx kI{0.0, 1.0};

void require_positive_r(const SpacetimePoint& at) {
  if (!(at.r > 0.0)) throw JetError("operator with a 1/r factor evaluated at r = 0");
}

Taylor inverse_r(const SpacetimePoint& at, int order) {
  return reciprocal(Taylor::variable(Axis::r, at.r, order));
}

// e^{i phi} (d_r + (i/r) d_phi) f
Taylor ladder(const Taylor& f, const SpacetimePoint& at) {
  require_positive_r(at);
  const int order = f.order() - 1;
  Taylor out = f.differentiate(Axis::r) + kI * (inverse_r(at, order) * f.differentiate(Axis::phi));
  return exp(kI * Taylor::variable(Axis::phi, at.phi, order)) * out;
}

void validate_depth(const std::vector<DiffAtom>& atoms) {
  if (atoms.size() > static_cast<std::size_t>(kMaxOperatorDepth)) {
    throw JetError("DiffOpSpec: composition depth exceeds 4");
  }
}

}  // namespace

int DiffAtom::derivative_order() const noexcept {
  switch (kind) {
    case AtomKind::dt_plus_dz:
    case AtomKind::dt_minus_dz:
    case AtomKind::ladder:
    case AtomKind::neg_ladder:
      return 1;
    case AtomKind::dx_dz:
    case AtomKind::dy_dz:
    case AtomKind::i_dx_dt:
    case AtomKind::i_dy_dt:
    case AtomKind::transverse_laplacian:
      return 2;
    case AtomKind::scalar:
      return 0;
  }
  return 0;
}

bool DiffAtom::uses_inverse_r() const noexcept {
  switch (kind) {
    case AtomKind::dt_plus_dz:
    case AtomKind::dt_minus_dz:
    case AtomKind::scalar:
      return false;
    default:
      return true;
  }
}

DiffOpSpec::DiffOpSpec(std::initializer_list<DiffAtom> atoms) : atoms_(atoms) { validate_depth(atoms_); }

DiffOpSpec::DiffOpSpec(std::vector<DiffAtom> atoms) : atoms_(std::move(atoms)) { validate_depth(atoms_); }

int DiffOpSpec::derivative_order() const noexcept {
  return std::accumulate(atoms_.begin(), atoms_.end(), 0,
                         [](int acc, const DiffAtom& a) { return acc + a.derivative_order(); });
}

bool DiffOpSpec::uses_inverse_r() const noexcept {
  return std::any_of(atoms_.begin(), atoms_.end(), [](const DiffAtom& a) { return a.uses_inverse_r(); });
}

Taylor partial_x(const Taylor& f, const SpacetimePoint& at) {
  require_positive_r(at);
  const int order = f.order() - 1;
  const Taylor phi = Taylor::variable(Axis::phi, at.phi, order);
  return cos(phi) * f.differentiate(Axis::r) - sin(phi) * inverse_r(at, order) * f.differentiate(Axis::phi);
}

Taylor partial_y(const Taylor& f, const SpacetimePoint& at) {
  require_positive_r(at);
  const int order = f.order() - 1;
  const Taylor phi = Taylor::variable(Axis::phi, at.phi, order);
  return sin(phi) * f.differentiate(Axis::r) + cos(phi) * inverse_r(at, order) * f.differentiate(Axis::phi);
}

Taylor apply_atom(const DiffAtom& atom, const Taylor& f, const SpacetimePoint& at) {
  if (atom.derivative_order() > f.order()) {
    throw JetError("apply_atom: series order too low for operator");
  }
  switch (atom.kind) {
    case AtomKind::dt_plus_dz:
      return f.differentiate(Axis::t) + f.differentiate(Axis::z);
    case AtomKind::dt_minus_dz:
      return f.differentiate(Axis::t) - f.differentiate(Axis::z);
    case AtomKind::ladder:
      return ladder(f, at);
    case AtomKind::neg_ladder:
      return -ladder(f, at);
    case AtomKind::dx_dz:
      return partial_x(f.differentiate(Axis::z), at);
    case AtomKind::dy_dz:
      return partial_y(f.differentiate(Axis::z), at);
    case AtomKind::i_dx_dt:
      return kI * partial_x(f.differentiate(Axis::t), at);
    case AtomKind::i_dy_dt:
      return kI * partial_y(f.differentiate(Axis::t), at);
    case AtomKind::transverse_laplacian: {
      require_positive_r(at);
      const int order = f.order() - 2;
      const Taylor inv_r = inverse_r(at, order);
      const Taylor fr = f.differentiate(Axis::r);
      return fr.differentiate(Axis::r) + inv_r * fr.truncated(order) +
             inv_r * inv_r * f.differentiate(Axis::phi).differentiate(Axis::phi);
    }
    case AtomKind::scalar:
      return f * atom.factor;
  }
  return f;
}

Taylor apply_operator(const DiffOpSpec& op, const Taylor& f, const SpacetimePoint& at) {
  if (op.uses_inverse_r()) require_positive_r(at);
  Taylor acc = f;
  const auto& atoms = op.atoms();
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) acc = apply_atom(*it, acc, at);
  return acc;
}

cplx apply_operator(const DiffOpSpec& op, const PotentialExpr& potential, const SpacetimePoint& point) {
  const int order = op.derivative_order();
  if (order > kMaxOrder) throw JetError("apply_operator: total derivative order exceeds 4");
  if (op.uses_inverse_r()) require_positive_r(point);
  return apply_operator(op, potential.expand(point, order), point).value();
}

}  // namespace vortexlab
