#pragma once

// Value counting under S_n, the quadratic discriminant, Lagrange resolvents
// of the cubic with the Cardan evaluation, and the distinct-value check of a
// linear Galois resolvent.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "ordre/arith.hpp"
#include "ordre/error.hpp"
#include "ordre/group.hpp"
#include "ordre/perm.hpp"
#include "ordre/poly.hpp"

namespace ordre {

// ---------------------------------------------------------------------------
// Values of a function under all permutations of its variables

inline constexpr unsigned kValueOrbitMaxVars = 8;

struct ValueOrbit {
  RatPoly representative;
  std::vector<RatPoly> values;  // sorted, distinct
  PermGroup stabilizer;
};

inline ValueOrbit value_orbit(const RatPoly& f, unsigned n) {
  if (n > kValueOrbitMaxVars) fail(ErrorKind::CapExceeded, "value counting limited to 8 variables");
  if (f.nvars() != n) fail(ErrorKind::DegreeMismatch, "polynomial has " + std::to_string(f.nvars()) + " variables, expected " + std::to_string(n));
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::set<RatPoly> values;
  std::vector<Permutation> fixing;
  do {
    RatPoly image = act_perm(f, std::span<const std::uint32_t>(images));
    if (image == f) fixing.emplace_back(images);
    values.insert(std::move(image));
  } while (std::next_permutation(images.begin(), images.end()));
  ValueOrbit out;
  out.representative = f;
  out.values.assign(values.begin(), values.end());
  out.stabilizer = PermGroup::from_elements(n, std::move(fixing));
  return out;
}

/// Sorted distinct indices [S_5 : H] over all subgroups generated by two
/// elements of S_5.
inline std::vector<std::uint64_t> ruffini_census() {
  const PermGroup s5 = symmetric_group(5);
  std::set<std::uint64_t> indices;
  for (const auto& h : pair_generated_subgroups(s5)) indices.insert(s5.order() / h.order());
  return {indices.begin(), indices.end()};
}

// ---------------------------------------------------------------------------
// Quadratic

struct DiscriminantCheck {
  RatPoly delta;     // (x1 - x2)^2
  RatPoly reduced;   // in e1, e2 (written x1, x2)
  RatPoly expected;  // e1^2 - 4 e2
  bool holds = false;
};

inline DiscriminantCheck discriminant2() {
  DiscriminantCheck out;
  const RatPoly diff = RatPoly::variable(2, 0) - RatPoly::variable(2, 1);
  out.delta = diff * diff;
  out.reduced = symmetric_reduce(out.delta);
  out.expected = parse_multipoly("x1^2 - 4*x2", 2);
  out.holds = out.reduced == out.expected && expand_elementary(out.reduced) == out.delta;
  return out;
}

namespace detail {

inline std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_isqrt(numerator(q));
  auto den = exact_isqrt(denominator(q));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace detail

/// Roots of x^2 - c1 x + c2 as c1/2 +- (1/2) sqrt(delta), delta = c1^2 - 4 c2.
struct QuadraticRoots {
  Rational rational_part;
  Rational radical_coeff;
  Rational radicand;
  /// Both roots, ascending, when delta is the square of a rational.
  std::optional<std::pair<Rational, Rational>> rational_roots;

  std::string to_string() const {
    std::ostringstream os;
    os << rational_part << " +- " << radical_coeff << "*sqrt(" << radicand << ")";
    return os.str();
  }
};

inline QuadraticRoots quadratic_roots(const Rational& c1, const Rational& c2) {
  QuadraticRoots out;
  out.rational_part = c1 / 2;
  out.radical_coeff = Rational(1, 2);
  out.radicand = c1 * c1 - 4 * c2;
  if (auto s = detail::exact_sqrt(out.radicand))
    out.rational_roots = std::make_pair((c1 - *s) / 2, (c1 + *s) / 2);
  return out;
}

// ---------------------------------------------------------------------------
// Cubic: Lagrange resolvents

struct LagrangeReport {
  Cyclo3Poly phi, psi;
  bool sum_of_cubes = false;      // phi^3 + psi^3 == 2 e1^3 - 9 e1 e2 + 27 e3
  bool product_of_cubes = false;  // phi^3 psi^3 == (e1^2 - 3 e2)^3
  bool product = false;           // phi psi == e1^2 - 3 e2
  bool printed_variant = false;   // the variant with 27 e2 in place of 27 e3
};

inline LagrangeReport lagrange_cubic_identities() {
  using P = Cyclo3Poly;
  const P x1 = P::variable(3, 0), x2 = P::variable(3, 1), x3 = P::variable(3, 2);
  const P e1 = elementary_symmetric<Cyclo3>(3, 1), e2 = elementary_symmetric<Cyclo3>(3, 2),
          e3 = elementary_symmetric<Cyclo3>(3, 3);
  auto k = [](int c) { return Cyclo3(c); };

  LagrangeReport out;
  out.phi = x1 + Cyclo3::omega2() * x2 + Cyclo3::omega() * x3;
  out.psi = x1 + Cyclo3::omega() * x2 + Cyclo3::omega2() * x3;
  const P phi3 = out.phi.pow(3), psi3 = out.psi.pow(3);
  const P quad = e1.pow(2) - k(3) * e2;
  const P common = k(2) * e1.pow(3) - k(9) * e1 * e2;
  out.sum_of_cubes = phi3 + psi3 == common + k(27) * e3;
  out.product_of_cubes = phi3 * psi3 == quad.pow(3);
  out.product = out.phi * out.psi == quad;
  out.printed_variant = phi3 + psi3 == common + k(27) * e2;
  return out;
}

/// Symbolic discriminant of the cubic, prod_{i<j} (x_i - x_j)^2, reduced to
/// e1, e2, e3.
inline const RatPoly& cubic_discriminant_poly() {
  static const RatPoly reduced = [] {
    const RatPoly x1 = RatPoly::variable(3, 0), x2 = RatPoly::variable(3, 1), x3 = RatPoly::variable(3, 2);
    const RatPoly v = (x1 - x2) * (x1 - x3) * (x2 - x3);
    return symmetric_reduce(v * v);
  }();
  return reduced;
}

/// Discriminant of x^3 - c1 x^2 + c2 x - c3.
inline Rational cubic_discriminant(const Rational& c1, const Rational& c2, const Rational& c3) {
  const std::vector<Rational> e{c1, c2, c3};
  return cubic_discriminant_poly().eval(std::span<const Rational>(e), Rational(1));
}

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

inline constexpr double kCardanTolerance = 1e-9;

struct CardanResult {
  std::vector<Complex50> roots;  // sorted by (real, imag)
  Real50 max_residual;
};

namespace detail {

inline Real50 to_real(const Rational& q) {
  return Real50(numerator(q)) / Real50(denominator(q));
}

inline Complex50 cbrt_principal(const Complex50& z) {
  if (z == Complex50(0)) return z;
  return boost::multiprecision::exp(boost::multiprecision::log(z) / 3);
}

}  // namespace detail

/// Roots of x^3 - c1 x^2 + c2 x - c3 from the resolvents: phi^3 and psi^3
/// solve t^2 - (2 e1^3 - 9 e1 e2 + 27 e3) t + (e1^2 - 3 e2)^3 = 0, phi psi =
/// e1^2 - 3 e2, and x_k = (e1 + w^a phi + w^b psi)/3.
inline CardanResult cardan_solve(const Rational& c1, const Rational& c2, const Rational& c3) {
  const Real50 e1 = detail::to_real(c1), e2 = detail::to_real(c2), e3 = detail::to_real(c3);
  const Complex50 a = e1 * e1 - 3 * e2;
  const Complex50 b = 2 * e1 * e1 * e1 - 9 * e1 * e2 + 27 * e3;
  const Complex50 disc = boost::multiprecision::sqrt(b * b - Complex50(4) * a * a * a);
  const Complex50 t1 = (b + disc) / 2, t2 = (b - disc) / 2;
  const Complex50 t = boost::multiprecision::abs(t1) >= boost::multiprecision::abs(t2) ? t1 : t2;

  const Complex50 phi = detail::cbrt_principal(t);
  const Complex50 psi = phi == Complex50(0) ? Complex50(0) : a / phi;
  const Real50 half = Real50(1) / 2;
  const Complex50 w(-half, boost::multiprecision::sqrt(Real50(3)) / 2);
  const Complex50 w2 = w * w;

  CardanResult out;
  out.roots = {(Complex50(e1) + phi + psi) / 3, (Complex50(e1) + w * phi + w2 * psi) / 3,
               (Complex50(e1) + w2 * phi + w * psi) / 3};
  std::sort(out.roots.begin(), out.roots.end(), [](const Complex50& x, const Complex50& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  out.max_residual = 0;
  for (const auto& x : out.roots) {
    const Complex50 f = ((x - Complex50(e1)) * x + Complex50(e2)) * x - Complex50(e3);
    out.max_residual = std::max(out.max_residual, Real50(boost::multiprecision::abs(f)));
  }
  if (out.max_residual >= kCardanTolerance)
    fail(ErrorKind::NumericalInstability, "Cardan residual above tolerance");
  return out;
}

/// Imaginary part below this is treated as a real root.
inline bool is_real_root(const Complex50& z, double tol = 1e-20) {
  return boost::multiprecision::abs(z.imag()) < tol;
}

// ---------------------------------------------------------------------------
// Galois resolvent a_1 x_1 + ... + a_n x_n

inline constexpr std::size_t kResolventMaxVars = 4;

struct ResolventValues {
  std::vector<Rational> values;  // one per permutation, in next_permutation order
  std::size_t distinct_count = 0;
  bool all_distinct = false;
};

inline ResolventValues galois_resolvent_check(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  const std::size_t n = a.size();
  if (n == 0 || n > kResolventMaxVars) fail(ErrorKind::InvalidArgument, "resolvent check needs 1 to 4 variables");
  if (x.size() != n) fail(ErrorKind::DimensionMismatch, "coefficient and root lists differ in length");
  auto distinct = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(a)) fail(ErrorKind::InvalidArgument, "coefficients a_i must be distinct");
  if (!distinct(x)) fail(ErrorKind::InvalidArgument, "roots x_i must be distinct");

  ResolventValues out;
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  do {
    Rational v = 0;
    for (std::size_t i = 0; i < n; ++i) v += a[i] * x[s[i]];
    out.values.push_back(v);
  } while (std::next_permutation(s.begin(), s.end()));
  std::set<Rational> seen(out.values.begin(), out.values.end());
  out.distinct_count = seen.size();
  out.all_distinct = seen.size() == out.values.size();
  return out;
}

}  // namespace ordre
