#pragma once

// Exact polynomial arithmetic: univariate polynomials over Z, Q and Z/p, and
// multivariate polynomials with rational or Eisenstein (a + b*w, w^2+w+1=0)
// coefficients, including reduction of symmetric polynomials to the
// elementary symmetric functions.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordre/arith.hpp"
#include "ordre/error.hpp"

namespace ordre {

// ---------------------------------------------------------------------------
// Univariate polynomials

enum class RingKind { integers, rationals, mod_p };

struct Ring {
  RingKind kind = RingKind::rationals;
  std::uint64_t p = 0;  // only meaningful for mod_p

  static Ring integers() { return {RingKind::integers, 0}; }
  static Ring rationals() { return {RingKind::rationals, 0}; }
  static Ring mod(std::uint64_t p) {
    require_prime(p);
    return {RingKind::mod_p, p};
  }

  bool is_field() const { return kind != RingKind::integers; }
  friend bool operator==(const Ring&, const Ring&) = default;
};

namespace detail {

inline Rational reduce_mod(const Rational& r, std::uint64_t p) {
  Integer num = numerator(r) % p;
  if (num < 0) num += p;
  Integer den = denominator(r) % p;
  if (den == 0) fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
  auto n = num.convert_to<std::uint64_t>();
  auto d = den.convert_to<std::uint64_t>();
  return Rational(mul_mod(n, inv_mod(d, p), p));
}

}  // namespace detail

/// Polynomial in one variable; coefficients ascending, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Ring ring) : ring_(ring) {}
  UniPoly(Ring ring, std::vector<Rational> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    normalize();
  }
  template <class Int>
    requires std::is_integral_v<Int>
  UniPoly(Ring ring, const std::vector<Int>& coeffs) : ring_(ring) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static UniPoly monomial(Ring ring, std::size_t degree, Rational c = 1) {
    std::vector<Rational> cs(degree + 1);
    cs[degree] = std::move(c);
    return UniPoly(ring, std::move(cs));
  }
  static UniPoly constant(Ring ring, Rational c) { return UniPoly(ring, std::vector<Rational>{std::move(c)}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    if (ring_.kind == RingKind::mod_p) acc = detail::reduce_mod(acc, ring_.p);
    return acc;
  }

  /// Integer encoding sum c_i p^i; the ordering key for polynomials mod p.
  Integer encoding() const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * ring_.p + numerator(*it);
    return acc;
  }

  /// Scales to leading coefficient 1 (field rings only).
  UniPoly monic() const;

  std::string to_string(std::string_view var = "x") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    for (auto& c : coeffs_) {
      if (ring_.kind == RingKind::mod_p) {
        c = detail::reduce_mod(c, ring_.p);
      } else if (ring_.kind == RingKind::integers && denominator(c) != 1) {
        fail(ErrorKind::RingMismatch, "non-integral coefficient in an integer polynomial");
      }
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  Ring ring_ = Ring::rationals();
  std::vector<Rational> coeffs_;
};

namespace detail {

inline void same_ring(const UniPoly& a, const UniPoly& b) {
  if (!(a.ring() == b.ring())) fail(ErrorKind::RingMismatch, "polynomials over different rings");
}

}  // namespace detail

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  detail::same_ring(a, b);
  std::vector<Rational> cs(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(a.ring(), std::move(cs));
}

inline UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> cs = a.coeffs();
  for (auto& c : cs) c = -c;
  return UniPoly(a.ring(), std::move(cs));
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  detail::same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.ring());
  std::vector<Rational> cs(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) cs[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UniPoly(a.ring(), std::move(cs));
}

namespace detail {

inline Rational field_inverse(const Ring& ring, const Rational& c) {
  if (ring.kind == RingKind::mod_p) {
    auto v = numerator(c).convert_to<std::uint64_t>();
    return Rational(inv_mod(v, ring.p));
  }
  return 1 / c;
}

}  // namespace detail

inline UniPoly UniPoly::monic() const {
  if (!ring_.is_field()) fail(ErrorKind::RingMismatch, "monic() needs a field of coefficients");
  if (is_zero()) return *this;
  Rational inv = detail::field_inverse(ring_, leading());
  std::vector<Rational> cs = coeffs_;
  for (auto& c : cs) c *= inv;
  return UniPoly(ring_, std::move(cs));
}

/// (quotient, remainder) with deg(remainder) < deg(divisor).
inline std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  detail::same_ring(a, b);
  if (!a.ring().is_field()) fail(ErrorKind::RingMismatch, "division needs a field of coefficients");
  if (b.is_zero()) fail(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const Ring ring = a.ring();
  std::vector<Rational> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {UniPoly(ring), a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = detail::field_inverse(ring, b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational c = rem[k] * inv_lead;
    if (ring.kind == RingKind::mod_p) c = detail::reduce_mod(c, ring.p);
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] -= c * b.coeffs()[j];
      if (ring.kind == RingKind::mod_p) rem[k - db + j] = detail::reduce_mod(rem[k - db + j], ring.p);
    }
  }
  return {UniPoly(ring, std::move(quot)), UniPoly(ring, std::move(rem))};
}

/// Monic greatest common divisor (zero if both inputs are zero).
inline UniPoly gcd(UniPoly a, UniPoly b) {
  detail::same_ring(a, b);
  if (!a.ring().is_field()) fail(ErrorKind::RingMismatch, "gcd needs a field of coefficients");
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

enum class UniOp { add, mul, divrem, gcd };

/// Dispatching form of the univariate arithmetic; divrem yields (q, r), the
/// others yield (result, 0).
inline std::pair<UniPoly, UniPoly> uni_arith(const UniPoly& a, const UniPoly& b, UniOp op) {
  switch (op) {
    case UniOp::add: return {a + b, UniPoly(a.ring())};
    case UniOp::mul: return {a * b, UniPoly(a.ring())};
    case UniOp::divrem: return divrem(a, b);
    case UniOp::gcd: return {gcd(a, b), UniPoly(a.ring())};
  }
  return {};
}

namespace detail {

inline std::string coeff_string(const Rational& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

/// Joins signed terms "c*m" into "a - b + c" form.
inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
  const bool neg = c < 0;
  const Rational mag = neg ? Rational(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += coeff_string(mag);
  } else if (mag == 1) {
    out += mono;
  } else {
    out += coeff_string(mag) + "*" + mono;
  }
}

}  // namespace detail

inline std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    std::string mono;
    if (k == 1) mono = std::string(var);
    else if (k > 1) mono = std::string(var) + "^" + std::to_string(k);
    detail::append_term(out, coeffs_[k], mono);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small-integer polynomials mod p. The field module and the factorizer work on
// these directly; coefficients ascending, trimmed.

namespace modp {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly from(const UniPoly& f) {
  Poly out;
  for (const auto& c : f.coeffs()) out.push_back(numerator(c).convert_to<std::uint64_t>());
  return out;
}

inline UniPoly to_uni(const Poly& a, std::uint64_t p) { return UniPoly(Ring::mod(p), a); }

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

/// Remainder of a by b, with the quotient written to *quot when given.
inline Poly rem(Poly a, const Poly& b, std::uint64_t p, Poly* quot = nullptr) {
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv = inv_mod(b.back(), p);
  if (quot) quot->assign(a.size() > db ? a.size() - db : 0, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::uint64_t c = a[k] * inv % p;
    if (c == 0) continue;
    if (quot) (*quot)[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = (a[k - db + j] + p * p - c * b[j] % p) % p;
  }
  trim(a);
  if (quot) trim(*quot);
  return a;
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `code`.
inline Poly monic_from_code(std::uint64_t code, unsigned degree, std::uint64_t p) {
  Poly out(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    out[i] = code % p;
    code /= p;
  }
  out[degree] = 1;
  return out;
}

/// True when the monic f has no monic divisor of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 0) return false;
  for (unsigned d = 1; 2 * d <= n; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code)
      if (rem(f, monic_from_code(code, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace modp

struct Factor {
  UniPoly factor;
  unsigned multiplicity = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

inline constexpr std::uint64_t kFactorMaxPrime = 31;
inline constexpr long kFactorMaxDegree = 6;

/// Factorization into monic irreducibles by trial division over all monic
/// candidates, sorted by (degree, encoding).
inline std::vector<Factor> uni_factor_modp(const UniPoly& f) {
  if (f.ring().kind != RingKind::mod_p) fail(ErrorKind::RingMismatch, "factorization needs a mod-p polynomial");
  const std::uint64_t p = f.ring().p;
  if (p > kFactorMaxPrime) fail(ErrorKind::CapExceeded, "p above factorization cap 31");
  if (f.degree() > kFactorMaxDegree) fail(ErrorKind::CapExceeded, "degree above factorization cap 6");
  if (!f.is_monic()) fail(ErrorKind::NotMonic, "factorization input must be monic");

  std::vector<Factor> out;
  modp::Poly g = modp::from(f);
  for (unsigned d = 1; 2 * d <= g.size() - 1; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count && 2 * d <= g.size() - 1; ++code) {
      const auto h = modp::monic_from_code(code, d, p);
      unsigned mult = 0;
      for (;;) {
        modp::Poly q;
        if (!modp::rem(g, h, p, &q).empty()) break;
        g = std::move(q);
        ++mult;
      }
      if (mult > 0) out.push_back({modp::to_uni(h, p), mult});
    }
  }
  if (g.size() > 1) out.push_back({modp::to_uni(g, p), 1});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.encoding() < b.factor.encoding();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient domains for multivariate polynomials

/// a + b*w with w^2 + w + 1 = 0.
struct Cyclo3 {
  Rational a = 0;
  Rational b = 0;

  Cyclo3() = default;
  Cyclo3(int v) : a(v) {}  // NOLINT: integer literals promote
  Cyclo3(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

  static Cyclo3 omega() { return {0, 1}; }
  /// w^2 = -1 - w
  static Cyclo3 omega2() { return {-1, -1}; }

  friend Cyclo3 operator+(const Cyclo3& x, const Cyclo3& y) { return {x.a + y.a, x.b + y.b}; }
  friend Cyclo3 operator-(const Cyclo3& x, const Cyclo3& y) { return {x.a - y.a, x.b - y.b}; }
  friend Cyclo3 operator-(const Cyclo3& x) { return {-x.a, -x.b}; }
  friend Cyclo3 operator*(const Cyclo3& x, const Cyclo3& y) {
    const Rational bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
  }
  Cyclo3& operator+=(const Cyclo3& o) { return *this = *this + o; }
  Cyclo3& operator*=(const Cyclo3& o) { return *this = *this * o; }
  friend bool operator==(const Cyclo3&, const Cyclo3&) = default;
  friend auto operator<=>(const Cyclo3& x, const Cyclo3& y) {
    if (x.a != y.a) return x.a < y.a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.b != y.b) return x.b < y.b ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static bool is_negative(const Rational& c) { return c < 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static std::string str(const Rational& c) { return detail::coeff_string(c); }
};

template <>
struct CoeffTraits<Cyclo3> {
  static bool is_zero(const Cyclo3& c) { return c.a == 0 && c.b == 0; }
  static bool is_negative(const Cyclo3& c) { return c.b == 0 && c.a < 0; }
  static bool is_one(const Cyclo3& c) { return c.b == 0 && c.a == 1; }
  static std::string str(const Cyclo3& c) {
    if (c.b == 0) return detail::coeff_string(c.a);
    std::string out = "(";
    if (c.a != 0) out += detail::coeff_string(c.a) + (c.b < 0 ? " - " : " + ");
    else if (c.b < 0) out += "-";
    const Rational mag = c.b < 0 ? Rational(-c.b) : c.b;
    out += (mag == 1 ? std::string() : detail::coeff_string(mag) + "*") + "w)";
    return out;
  }
};

// ---------------------------------------------------------------------------
// Multivariate polynomials

using Monomial = std::vector<unsigned>;

/// Exact polynomial in x_1..x_n. Terms are keyed by exponent vector under the
/// lexicographic order (x_1 most significant); zero coefficients never stored.
template <class Coeff>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  MultiPoly() = default;
  explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}

  static MultiPoly constant(unsigned nvars, const Coeff& c) {
    MultiPoly out(nvars);
    out.add_term(Monomial(nvars, 0), c);
    return out;
  }
  /// x_{index+1}; index is 0-based.
  static MultiPoly variable(unsigned nvars, unsigned index) {
    if (index >= nvars) fail(ErrorKind::IndexOutOfRange, "variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    MultiPoly out(nvars);
    out.add_term(m, Coeff(1));
    return out;
  }

  unsigned nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.size() != nvars_) fail(ErrorKind::DegreeMismatch, "exponent vector length differs from nvars");
    if (CoeffTraits<Coeff>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (CoeffTraits<Coeff>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(a.nvars_) - a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly out(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (unsigned i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(const Coeff& s, const MultiPoly& a) {
    MultiPoly out(a.nvars_);
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly out = constant(nvars_, Coeff(1));
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) out *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return out;
  }

  /// Substitutes values[i] for x_{i+1}; `One` is the multiplicative identity
  /// of the target ring.
  template <class T>
  T eval(std::span<const T> values, const T& one) const {
    if (values.size() != nvars_) fail(ErrorKind::DegreeMismatch, "wrong number of values");
    T acc = one - one;
    for (const auto& [m, c] : terms_) {
      T term = one * c;
      for (unsigned i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < m[i]; ++e) term = term * values[i];
      acc = acc + term;
    }
    return acc;
  }

  /// Polynomial composition: x_{i+1} -> images[i] (all in a common ring).
  MultiPoly<Coeff> compose(std::span<const MultiPoly<Coeff>> images) const {
    if (images.size() != nvars_) fail(ErrorKind::DegreeMismatch, "wrong number of substitutions");
    const unsigned target = images.empty() ? 0 : images[0].nvars();
    MultiPoly<Coeff> acc(target);
    for (const auto& [m, c] : terms_) {
      MultiPoly<Coeff> term = MultiPoly<Coeff>::constant(target, c);
      for (unsigned i = 0; i < nvars_; ++i)
        if (m[i] > 0) term *= images[i].pow(m[i]);
      acc += term;
    }
    return acc;
  }

  /// Lifts coefficients into another domain.
  template <class To>
  MultiPoly<To> cast() const {
    MultiPoly<To> out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, To(c));
    return out;
  }

  std::string to_string(std::string_view var = "x") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      for (unsigned i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += std::string(var) + std::to_string(i + 1);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      const bool neg = CoeffTraits<Coeff>::is_negative(c);
      const Coeff mag = neg ? -c : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mono.empty()) out += CoeffTraits<Coeff>::str(mag);
      else if (CoeffTraits<Coeff>::is_one(mag)) out += mono;
      else out += CoeffTraits<Coeff>::str(mag) + "*" + mono;
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

 private:
  void check_vars(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) fail(ErrorKind::DegreeMismatch, "polynomials in different variable counts");
  }

  unsigned nvars_ = 0;
  Terms terms_;
};

using RatPoly = MultiPoly<Rational>;
using Cyclo3Poly = MultiPoly<Cyclo3>;

/// f(x_{s(1)}, ..., x_{s(n)}): the variable x_{i+1} is replaced by
/// x_{images[i]+1}. Composing actions, act(act(f, s), t) == act(f, t o s).
template <class Coeff>
MultiPoly<Coeff> act_perm(const MultiPoly<Coeff>& f, std::span<const std::uint32_t> images) {
  if (images.size() != f.nvars()) fail(ErrorKind::DegreeMismatch, "permutation degree differs from nvars");
  MultiPoly<Coeff> out(f.nvars());
  Monomial moved(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    for (unsigned i = 0; i < f.nvars(); ++i) moved[images[i]] = m[i];
    out.add_term(moved, c);
  }
  return out;
}

template <class Coeff = Rational>
MultiPoly<Coeff> elementary_symmetric(unsigned nvars, unsigned k) {
  if (k < 1 || k > nvars) fail(ErrorKind::IndexOutOfRange, "elementary symmetric index out of range");
  MultiPoly<Coeff> out(nvars);
  // walk all k-subsets via a selection mask
  std::vector<bool> mask(nvars, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    Monomial m(nvars, 0);
    for (unsigned i = 0; i < nvars; ++i) m[i] = mask[i] ? 1 : 0;
    out.add_term(m, Coeff(1));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

template <class Coeff>
bool is_symmetric(const MultiPoly<Coeff>& f) {
  const unsigned n = f.nvars();
  std::vector<std::uint32_t> swap(n);
  for (unsigned i = 0; i + 1 < n; ++i) {
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[i], swap[i + 1]);
    if (!(act_perm(f, std::span<const std::uint32_t>(swap)) == f)) return false;
  }
  return true;
}

/// Expresses a symmetric f as a polynomial in e_1..e_n (variable i of the
/// result stands for e_{i+1}) by repeated subtraction of the lex-leading term.
template <class Coeff>
MultiPoly<Coeff> symmetric_reduce(const MultiPoly<Coeff>& f) {
  if (!is_symmetric(f)) fail(ErrorKind::NotSymmetric, "polynomial is not symmetric");
  const unsigned n = f.nvars();
  std::vector<MultiPoly<Coeff>> e;
  for (unsigned k = 1; k <= n; ++k) e.push_back(elementary_symmetric<Coeff>(n, k));

  MultiPoly<Coeff> rest = f;
  MultiPoly<Coeff> out(n);
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    // leading exponents of a symmetric polynomial are non-increasing
    Monomial powers(n, 0);
    MultiPoly<Coeff> product = MultiPoly<Coeff>::constant(n, c);
    for (unsigned k = 0; k < n; ++k) {
      powers[k] = lead[k] - (k + 1 < n ? lead[k + 1] : 0);
      if (powers[k] > 0) product *= e[k].pow(powers[k]);
    }
    out.add_term(powers, c);
    rest -= product;
  }
  return out;
}

/// Substitutes e_k = elementary_symmetric(n, k) into a polynomial in e_1..e_n.
template <class Coeff>
MultiPoly<Coeff> expand_elementary(const MultiPoly<Coeff>& g) {
  const unsigned n = g.nvars();
  std::vector<MultiPoly<Coeff>> e;
  for (unsigned k = 1; k <= n; ++k) e.push_back(elementary_symmetric<Coeff>(n, k));
  return g.compose(std::span<const MultiPoly<Coeff>>(e));
}

// ---------------------------------------------------------------------------
// Text grammar: "3*x1^2*x2 - x3 + 5". Integer coefficients only.

namespace detail {

struct ParsedFactor {
  std::string name;     // letters of the identifier
  unsigned index = 0;   // trailing digits, 0 when absent
  bool has_index = false;
  unsigned exponent = 1;
};

struct ParsedTerm {
  Integer coeff = 1;
  std::vector<ParsedFactor> factors;
};

class TermParser {
 public:
  explicit TermParser(std::string_view text) : s_(text) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      ParsedTerm t = term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      first = false;
      skip();
    }
    return out;
  }

 private:
  ParsedTerm term() {
    ParsedTerm t;
    for (;;) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        Integer v = number();
        skip();
        if (peek() == '^') {
          get();
          skip();
          v = boost::multiprecision::pow(v, number().convert_to<unsigned>());
        }
        t.coeff *= v;
      } else if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(peek()))) {
        ParsedFactor f;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(peek()))) f.name += get();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
          f.index = number().convert_to<unsigned>();
          f.has_index = true;
        }
        skip();
        if (peek() == '^') {
          get();
          skip();
          f.exponent = number().convert_to<unsigned>();
        }
        t.factors.push_back(std::move(f));
      } else {
        error("expected a number or a variable");
      }
      skip();
      if (peek() != '*') break;
      get();
    }
    return t;
  }

  Integer number() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) error("expected digits");
    Integer v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in x1..xn (or e1..en with `var` = "e"). When nvars is
/// 0 the variable count is the largest index that occurs.
inline RatPoly parse_multipoly(std::string_view text, unsigned nvars = 0, std::string_view var = "x") {
  auto terms = detail::TermParser(text).parse();
  unsigned max_index = 0;
  for (const auto& t : terms) {
    for (const auto& f : t.factors) {
      if (f.name != var || !f.has_index || f.index == 0)
        fail(ErrorKind::ParseError, "unknown variable '" + f.name + (f.has_index ? std::to_string(f.index) : "") + "'");
      max_index = std::max(max_index, f.index);
    }
  }
  if (nvars == 0) nvars = std::max(max_index, 1u);
  if (max_index > nvars) fail(ErrorKind::ParseError, "variable index exceeds variable count");
  RatPoly out(nvars);
  for (const auto& t : terms) {
    Monomial m(nvars, 0);
    for (const auto& f : t.factors) m[f.index - 1] += f.exponent;
    out.add_term(m, Rational(t.coeff));
  }
  return out;
}

/// Parses a univariate polynomial in `x` over the given ring.
inline UniPoly parse_unipoly(std::string_view text, Ring ring) {
  auto terms = detail::TermParser(text).parse();
  std::vector<Rational> cs;
  for (const auto& t : terms) {
    unsigned deg = 0;
    for (const auto& f : t.factors) {
      if (f.name != "x" || f.has_index) fail(ErrorKind::ParseError, "univariate polynomials use the variable x");
      deg += f.exponent;
    }
    if (cs.size() <= deg) cs.resize(deg + 1);
    cs[deg] += Rational(t.coeff);
  }
  return UniPoly(ring, std::move(cs));
}

}  // namespace ordre
