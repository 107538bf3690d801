#include "vortexlab/jet.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace vortexlab {
namespace {

struct TermTables {
  std::array<MultiIndex, kMaxTerms> indices{};
  // Dense lookup over exponents 0..4 per axis.
  std::array<std::size_t, 625> lookup{};
  // (i, j, k) with term k = term i * term j, sorted by degree of k.
  struct Triple {
    std::uint16_t i, j, k;
  };
  std::vector<Triple> products;
  std::array<std::size_t, kMaxOrder + 1> products_end{};
  // shift_up[k][axis] = index of term k + e_axis, or kMaxTerms if degree overflows.
  std::array<std::array<std::size_t, kAxes>, kMaxTerms> shift_up{};

  static std::size_t dense(const MultiIndex& m) {
    return static_cast<std::size_t>(((m.n[0] * 5 + m.n[1]) * 5 + m.n[2]) * 5 + m.n[3]);
  }

  TermTables() {
    std::size_t next = 0;
    for (int degree = 0; degree <= kMaxOrder; ++degree) {
      for (int a = degree; a >= 0; --a) {
        for (int b = degree - a; b >= 0; --b) {
          for (int c = degree - a - b; c >= 0; --c) {
            const int d = degree - a - b - c;
            MultiIndex m;
            m.n = {a, b, c, d};
            indices[next] = m;
            lookup[dense(m)] = next;
            ++next;
          }
        }
      }
    }
    for (std::size_t k = 0; k < kMaxTerms; ++k) {
      for (int axis = 0; axis < kAxes; ++axis) {
        MultiIndex m = indices[k];
        if (m.total() == kMaxOrder) {
          shift_up[k][axis] = kMaxTerms;
          continue;
        }
        ++m.n[axis];
        shift_up[k][axis] = lookup[dense(m)];
      }
    }
    for (int degree = 0; degree <= kMaxOrder; ++degree) {
      for (std::size_t i = 0; i < kMaxTerms; ++i) {
        for (std::size_t j = 0; j < kMaxTerms; ++j) {
          const auto& a = indices[i];
          const auto& b = indices[j];
          if (a.total() + b.total() != degree) continue;
          MultiIndex m;
          for (int axis = 0; axis < kAxes; ++axis) m.n[axis] = a.n[axis] + b.n[axis];
          products.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                              static_cast<std::uint16_t>(lookup[dense(m)])});
        }
      }
      products_end[static_cast<std::size_t>(degree)] = products.size();
    }
  }
};

const TermTables& tables() {
  static const TermTables t;
  return t;
}

void require_order(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw JetError("Taylor: order must be in [0, 4], got " + std::to_string(order));
  }
}

}  // namespace

std::string_view axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::t: return "t";
    case Axis::r: return "r";
    case Axis::phi: return "phi";
    case Axis::z: return "z";
  }
  return "?";
}

double SpacetimePoint::coordinate(Axis axis) const noexcept {
  switch (axis) {
    case Axis::t: return t;
    case Axis::r: return r;
    case Axis::phi: return phi;
    case Axis::z: return z;
  }
  return 0.0;
}

SpacetimePoint SpacetimePoint::shifted(Axis axis, double delta) const noexcept {
  SpacetimePoint p = *this;
  switch (axis) {
    case Axis::t: p.t += delta; break;
    case Axis::r: p.r += delta; break;
    case Axis::phi: p.phi += delta; break;
    case Axis::z: p.z += delta; break;
  }
  return p;
}

double MultiIndex::factorial() const noexcept {
  constexpr std::array<double, kMaxOrder + 1> fact{1, 1, 2, 6, 24};
  double f = 1.0;
  for (int k : n) f *= fact[static_cast<std::size_t>(k)];
  return f;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
  return os << "(t" << m.n[0] << ",r" << m.n[1] << ",phi" << m.n[2] << ",z" << m.n[3] << ")";
}

SpacetimePoint SpacetimePoint::with_coordinate(Axis axis, double value) const noexcept {
  SpacetimePoint p = *this;
  switch (axis) {
    case Axis::t: p.t = value; break;
    case Axis::r: p.r = value; break;
    case Axis::phi: p.phi = value; break;
    case Axis::z: p.z = value; break;
  }
  return p;
}

std::size_t term_index(const MultiIndex& m) noexcept { return tables().lookup[TermTables::dense(m)]; }

const MultiIndex& term_multi_index(std::size_t index) noexcept { return tables().indices[index]; }

Taylor::Taylor(int order) : order_(order) { require_order(order); }

Taylor Taylor::constant(cplx value, int order) {
  Taylor t(order);
  t.c_[0] = value;
  return t;
}

Taylor Taylor::variable(Axis axis, double at, int order) {
  Taylor t(order);
  t.c_[0] = at;
  if (order >= 1) t.c_[term_index(MultiIndex::along(axis))] = 1.0;
  return t;
}

cplx Taylor::coefficient(const MultiIndex& m) const {
  if (m.total() > order_) throw JetError("Taylor: multi-index exceeds series order");
  return c_[term_index(m)];
}

void Taylor::set_coefficient(const MultiIndex& m, cplx v) {
  if (m.total() > order_) throw JetError("Taylor: multi-index exceeds series order");
  c_[term_index(m)] = v;
}

cplx Taylor::derivative(const MultiIndex& m) const { return coefficient(m) * m.factorial(); }

Taylor Taylor::differentiate(Axis axis) const {
  if (order_ == 0) throw JetError("Taylor: cannot differentiate an order-0 series");
  const auto& tab = tables();
  const int a = static_cast<int>(axis);
  Taylor out(order_ - 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t up = tab.shift_up[k][static_cast<std::size_t>(a)];
    out.c_[k] = static_cast<double>(tab.indices[k].n[static_cast<std::size_t>(a)] + 1) * c_[up];
  }
  return out;
}

Taylor Taylor::truncated(int order) const {
  if (order > order_) throw JetError("Taylor: cannot raise series order by truncation");
  Taylor out(order);
  std::copy_n(c_.begin(), out.size(), out.c_.begin());
  return out;
}

bool Taylor::all_finite() const noexcept {
  return std::all_of(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(size()),
                     [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

Taylor& Taylor::operator+=(const Taylor& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (std::size_t k = 0; k < size(); ++k) c_[k] += rhs.c_[k];
  return *this;
}

Taylor& Taylor::operator-=(const Taylor& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (std::size_t k = 0; k < size(); ++k) c_[k] -= rhs.c_[k];
  return *this;
}

Taylor& Taylor::operator*=(const Taylor& rhs) {
  *this = *this * rhs;
  return *this;
}

Taylor& Taylor::operator*=(cplx s) noexcept {
  for (std::size_t k = 0; k < size(); ++k) c_[k] *= s;
  return *this;
}

Taylor& Taylor::operator/=(cplx s) noexcept {
  for (std::size_t k = 0; k < size(); ++k) c_[k] /= s;
  return *this;
}

Taylor Taylor::operator-() const {
  Taylor out = *this;
  for (std::size_t k = 0; k < size(); ++k) out.c_[k] = -c_[k];
  return out;
}

Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }

Taylor operator*(const Taylor& a, const Taylor& b) {
  const auto& tab = tables();
  const int order = std::min(a.order(), b.order());
  Taylor out(order);
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  auto co = out.coefficients();
  const std::size_t end = tab.products_end[static_cast<std::size_t>(order)];
  for (std::size_t p = 0; p < end; ++p) {
    const auto& tr = tab.products[p];
    co[tr.k] += ca[tr.i] * cb[tr.j];
  }
  return out;
}

Taylor operator/(const Taylor& a, const Taylor& b) { return a * reciprocal(b); }
Taylor operator+(Taylor a, cplx s) { return a += s; }
Taylor operator+(cplx s, Taylor a) { return a += s; }
Taylor operator-(Taylor a, cplx s) { return a -= s; }
Taylor operator-(cplx s, const Taylor& a) { return -a + s; }
Taylor operator*(Taylor a, cplx s) { return a *= s; }
Taylor operator*(cplx s, Taylor a) { return a *= s; }
Taylor operator/(Taylor a, cplx s) { return a /= s; }

Taylor compose(const Taylor& u, std::span<const cplx> outer) {
  const int order = u.order();
  if (outer.size() < static_cast<std::size_t>(order) + 1) {
    throw JetError("compose: need order+1 outer coefficients");
  }
  Taylor delta = u;
  delta.coefficients()[0] = 0.0;
  // Horner in the nilpotent increment delta.
  Taylor out = Taylor::constant(outer[static_cast<std::size_t>(order)], order);
  for (int k = order - 1; k >= 0; --k) {
    out = out * delta;
    out += outer[static_cast<std::size_t>(k)];
  }
  return out;
}

namespace {
constexpr std::array<double, kMaxOrder + 1> kInvFactorial{1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
}

Taylor exp(const Taylor& u) {
  const cplx e = std::exp(u.value());
  std::array<cplx, kMaxOrder + 1> g{};
  for (int k = 0; k <= u.order(); ++k) g[static_cast<std::size_t>(k)] = e * kInvFactorial[static_cast<std::size_t>(k)];
  return compose(u, g);
}

Taylor log(const Taylor& u) {
  const cplx u0 = u.value();
  if (u0 == cplx{}) throw JetError("log: expansion point at zero");
  std::array<cplx, kMaxOrder + 1> g{};
  g[0] = std::log(u0);
  cplx inv_pow = 1.0;
  for (int k = 1; k <= u.order(); ++k) {
    inv_pow /= u0;
    // d^k log / k! = (-1)^(k+1) / (k u0^k)
    g[static_cast<std::size_t>(k)] = ((k % 2 == 1) ? 1.0 : -1.0) * inv_pow / static_cast<double>(k);
  }
  return compose(u, g);
}

Taylor pow(const Taylor& u, cplx p) {
  const cplx u0 = u.value();
  if (u0 == cplx{}) throw JetError("pow: expansion point at zero for non-integer exponent");
  std::array<cplx, kMaxOrder + 1> g{};
  const cplx base = std::pow(u0, p);
  // generalized binomial: C(p, k) u0^(p-k)
  cplx binom = 1.0;
  cplx inv_pow = 1.0;
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 0) {
      binom *= (p - static_cast<double>(k - 1)) / static_cast<double>(k);
      inv_pow /= u0;
    }
    g[static_cast<std::size_t>(k)] = binom * base * inv_pow;
  }
  return compose(u, g);
}

Taylor sqrt(const Taylor& u) { return pow(u, cplx{0.5, 0.0}); }

Taylor reciprocal(const Taylor& u) {
  const cplx u0 = u.value();
  if (u0 == cplx{}) throw JetError("reciprocal: expansion point at zero");
  std::array<cplx, kMaxOrder + 1> g{};
  cplx inv = 1.0 / u0;
  cplx acc = inv;
  for (int k = 0; k <= u.order(); ++k) {
    g[static_cast<std::size_t>(k)] = ((k % 2 == 0) ? 1.0 : -1.0) * acc;
    acc *= inv;
  }
  return compose(u, g);
}

Taylor pow(const Taylor& u, int n) {
  if (n < 0) return pow(reciprocal(u), -n);
  const cplx u0 = u.value();
  std::array<cplx, kMaxOrder + 1> g{};
  // C(n, k) u0^(n-k); exact at u0 = 0 as well.
  double binom = 1.0;
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 0) binom *= static_cast<double>(n - (k - 1)) / static_cast<double>(k);
    if (k > n) {
      g[static_cast<std::size_t>(k)] = 0.0;
      continue;
    }
    g[static_cast<std::size_t>(k)] = binom * std::pow(u0, n - k);
  }
  return compose(u, g);
}

Taylor sin(const Taylor& u) {
  const cplx s = std::sin(u.value());
  const cplx c = std::cos(u.value());
  const std::array<cplx, 4> cycle{s, c, -s, -c};
  std::array<cplx, kMaxOrder + 1> g{};
  for (int k = 0; k <= u.order(); ++k) {
    g[static_cast<std::size_t>(k)] = cycle[static_cast<std::size_t>(k % 4)] * kInvFactorial[static_cast<std::size_t>(k)];
  }
  return compose(u, g);
}

Taylor cos(const Taylor& u) {
  const cplx s = std::sin(u.value());
  const cplx c = std::cos(u.value());
  const std::array<cplx, 4> cycle{c, -s, -c, s};
  std::array<cplx, kMaxOrder + 1> g{};
  for (int k = 0; k <= u.order(); ++k) {
    g[static_cast<std::size_t>(k)] = cycle[static_cast<std::size_t>(k % 4)] * kInvFactorial[static_cast<std::size_t>(k)];
  }
  return compose(u, g);
}

}  // namespace vortexlab
