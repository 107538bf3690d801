#pragma once

// Truncated multivariate Taylor arithmetic in the four coordinates (t, r, phi, z).
//
// A Taylor value holds the coefficients c_a of sum_a c_a (x - x0)^a for every
// multi-index a of total degree <= order (order <= 4, so at most 70 terms).
// Arithmetic propagates these coefficients exactly, so every mixed partial
// derivative d^a f = a! c_a is correct to floating-point round-off.

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

namespace vortexlab {

using cplx = std::complex<double>;

inline constexpr int kMaxOrder = 4;
inline constexpr int kAxes = 4;

enum class Axis : int { t = 0, r = 1, phi = 2, z = 3 };

std::string_view axis_name(Axis axis) noexcept;

class JetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Point in the dimensionless coordinates of a potential family (see Scales).
struct SpacetimePoint {
  double t = 0.0;
  double r = 0.0;
  double phi = 0.0;
  double z = 0.0;

  double coordinate(Axis axis) const noexcept;
  SpacetimePoint shifted(Axis axis, double delta) const noexcept;
  SpacetimePoint with_coordinate(Axis axis, double value) const noexcept;
};

/// Derivative orders per coordinate, total order <= 4.
struct MultiIndex {
  std::array<int, kAxes> n{};

  constexpr MultiIndex() = default;
  constexpr MultiIndex(int nt, int nr, int nphi, int nz) : n{nt, nr, nphi, nz} {
    if (nt < 0 || nr < 0 || nphi < 0 || nz < 0 || nt + nr + nphi + nz > kMaxOrder) {
      throw JetError("MultiIndex: orders must be non-negative with total <= 4");
    }
  }

  static constexpr MultiIndex along(Axis axis, int count = 1) {
    MultiIndex m;
    m.n[static_cast<int>(axis)] = count;
    if (count < 0 || count > kMaxOrder) throw JetError("MultiIndex: order out of range");
    return m;
  }

  constexpr int total() const noexcept { return n[0] + n[1] + n[2] + n[3]; }
  constexpr int operator[](Axis axis) const noexcept { return n[static_cast<int>(axis)]; }
  /// a! = prod_i n_i!
  double factorial() const noexcept;

  friend constexpr bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

/// Number of coefficients of a series truncated at `order`: C(order + 4, 4).
constexpr std::size_t term_count(int order) noexcept {
  constexpr std::array<std::size_t, kMaxOrder + 1> counts{1, 5, 15, 35, 70};
  return counts[static_cast<std::size_t>(order)];
}
inline constexpr std::size_t kMaxTerms = term_count(kMaxOrder);

/// Position of a multi-index in the graded ordering used for storage.
std::size_t term_index(const MultiIndex& m) noexcept;
/// Multi-index stored at `index`.
const MultiIndex& term_multi_index(std::size_t index) noexcept;

class Taylor {
 public:
  Taylor() = default;
  explicit Taylor(int order);

  static Taylor constant(cplx value, int order);
  /// The coordinate `axis` expanded at `at`: value `at`, unit slope.
  static Taylor variable(Axis axis, double at, int order);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return term_count(order_); }

  cplx value() const noexcept { return c_[0]; }
  cplx coefficient(const MultiIndex& m) const;
  void set_coefficient(const MultiIndex& m, cplx v);
  /// Mixed partial derivative d^m f at the expansion point.
  cplx derivative(const MultiIndex& m) const;

  std::span<const cplx> coefficients() const noexcept { return {c_.data(), size()}; }
  std::span<cplx> coefficients() noexcept { return {c_.data(), size()}; }

  /// Series of d f / d(axis); its order is one less.
  Taylor differentiate(Axis axis) const;
  Taylor truncated(int order) const;

  bool all_finite() const noexcept;

  Taylor& operator+=(const Taylor& rhs);
  Taylor& operator-=(const Taylor& rhs);
  Taylor& operator*=(const Taylor& rhs);
  Taylor& operator+=(cplx s) noexcept { c_[0] += s; return *this; }
  Taylor& operator-=(cplx s) noexcept { c_[0] -= s; return *this; }
  Taylor& operator*=(cplx s) noexcept;
  Taylor& operator/=(cplx s) noexcept;

  Taylor operator-() const;

 private:
  std::array<cplx, kMaxTerms> c_{};
  int order_ = 0;
};

Taylor operator+(Taylor a, const Taylor& b);
Taylor operator-(Taylor a, const Taylor& b);
Taylor operator*(const Taylor& a, const Taylor& b);
Taylor operator/(const Taylor& a, const Taylor& b);
Taylor operator+(Taylor a, cplx s);
Taylor operator+(cplx s, Taylor a);
Taylor operator-(Taylor a, cplx s);
Taylor operator-(cplx s, const Taylor& a);
Taylor operator*(Taylor a, cplx s);
Taylor operator*(cplx s, Taylor a);
Taylor operator/(Taylor a, cplx s);

/// g(u) given the Taylor coefficients g^(k)(u0)/k!, k = 0..u.order().
Taylor compose(const Taylor& u, std::span<const cplx> outer);

Taylor exp(const Taylor& u);
Taylor log(const Taylor& u);
/// Principal branch.
Taylor sqrt(const Taylor& u);
Taylor reciprocal(const Taylor& u);
Taylor pow(const Taylor& u, int n);
/// Principal branch u^p = exp(p log u).
Taylor pow(const Taylor& u, cplx p);
Taylor sin(const Taylor& u);
Taylor cos(const Taylor& u);

/// Value and all mixed partials up to `order()` of a field at one point.
struct Jet {
  SpacetimePoint point;
  Taylor series;

  int order() const noexcept { return series.order(); }
  cplx value() const noexcept { return series.value(); }
  cplx entry(const MultiIndex& m) const { return series.derivative(m); }
};

}  // namespace vortexlab
