#pragma once

// Gauss periods: primitive roots, the period index sets for p - 1 = e f, exact
// arithmetic in Z[zeta_p] and the period polynomial.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordre/arith.hpp"
#include "ordre/error.hpp"
#include "ordre/perm.hpp"
#include "ordre/poly.hpp"

namespace ordre {

/// Smallest positive integer of multiplicative order p - 1 modulo p.
inline std::uint64_t primitive_root(std::uint64_t p) {
  require_prime(p);
  for (std::uint64_t g = 1; g < p; ++g)
    if (multiplicative_order(g, p) == p - 1) return g;
  fail(ErrorKind::NotPrime, "no primitive root");
}

struct PeriodSystem {
  std::uint64_t p = 0, e = 0, f = 0, g = 0;
  /// Each set sorted ascending; sets ordered by smallest member.
  std::vector<std::vector<std::uint64_t>> eta_sets;
  /// eta_sets[i] == g^coset_index[i] * eta_sets[0].
  std::vector<std::uint64_t> coset_index;

  /// The set g^k * <g^e>, sorted.
  std::vector<std::uint64_t> coset(std::uint64_t k) const {
    for (std::size_t i = 0; i < coset_index.size(); ++i)
      if (coset_index[i] == k % e) return eta_sets[i];
    return {};
  }
};

inline PeriodSystem periods(std::uint64_t p, std::uint64_t e) {
  require_prime(p);
  if (e == 0 || (p - 1) % e != 0)
    fail(ErrorKind::NotDivisor, std::to_string(e) + " does not divide " + std::to_string(p - 1));
  PeriodSystem ps;
  ps.p = p;
  ps.e = e;
  ps.f = (p - 1) / e;
  ps.g = primitive_root(p);
  std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> sets;
  for (std::uint64_t i = 0; i < e; ++i) {
    std::vector<std::uint64_t> s;
    std::uint64_t x = pow_mod(ps.g, i, p);
    const std::uint64_t step = pow_mod(ps.g, e, p);
    for (std::uint64_t j = 0; j < ps.f; ++j, x = mul_mod(x, step, p)) s.push_back(x);
    std::sort(s.begin(), s.end());
    sets.emplace_back(std::move(s), i);
  }
  std::sort(sets.begin(), sets.end());
  for (auto& [s, i] : sets) {
    ps.eta_sets.push_back(std::move(s));
    ps.coset_index.push_back(i);
  }
  return ps;
}

/// Element of Z[zeta_p] on the basis zeta^1 .. zeta^{p-1}, using
/// 1 == -(zeta + ... + zeta^{p-1}).
class CycloInt {
 public:
  CycloInt() = default;
  explicit CycloInt(std::uint64_t p) : p_(p), c_(p - 1) {}

  static CycloInt integer(std::uint64_t p, const Integer& n) {
    CycloInt out(p);
    for (auto& x : out.c_) x = -n;
    return out;
  }
  static CycloInt zeta_power(std::uint64_t p, std::uint64_t k) {
    CycloInt out(p);
    out.add_power(k, 1);
    return out;
  }
  static CycloInt period(std::uint64_t p, const std::vector<std::uint64_t>& exponents) {
    CycloInt out(p);
    for (auto k : exponents) out.add_power(k, 1);
    return out;
  }

  std::uint64_t p() const { return p_; }
  const std::vector<Integer>& coords() const { return c_; }

  /// The rational integer this equals, if any: all coordinates equal -n.
  std::optional<Integer> to_integer() const {
    for (const auto& x : c_)
      if (x != c_.front()) return std::nullopt;
    return c_.empty() ? Integer(0) : Integer(-c_.front());
  }

  friend CycloInt operator+(CycloInt a, const CycloInt& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  friend CycloInt operator-(CycloInt a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    a.check(b);
    const std::uint64_t p = a.p_;
    CycloInt out(p);
    Integer constant = 0;
    for (std::uint64_t i = 1; i < p; ++i) {
      if (a.c_[i - 1] == 0) continue;
      for (std::uint64_t j = 1; j < p; ++j) {
        if (b.c_[j - 1] == 0) continue;
        const std::uint64_t k = (i + j) % p;
        if (k == 0) constant += a.c_[i - 1] * b.c_[j - 1];
        else out.c_[k - 1] += a.c_[i - 1] * b.c_[j - 1];
      }
    }
    for (auto& x : out.c_) x -= constant;
    return out;
  }
  friend bool operator==(const CycloInt&, const CycloInt&) = default;

 private:
  void add_power(std::uint64_t k, const Integer& n) {
    k %= p_;
    if (k == 0) {
      for (auto& x : c_) x -= n;
    } else {
      c_[k - 1] += n;
    }
  }
  void check(const CycloInt& o) const {
    if (p_ != o.p_) fail(ErrorKind::ContextMismatch, "cyclotomic integers for different primes");
  }

  std::uint64_t p_ = 0;
  std::vector<Integer> c_;
};

inline constexpr std::uint64_t kPeriodMaxCount = 6;
inline constexpr std::uint64_t kPeriodMaxPrime = 101;

/// prod_i (x - eta_i), expanded exactly in Z[zeta_p]; every coefficient must
/// reduce to a rational integer.
inline UniPoly period_polynomial(const PeriodSystem& ps) {
  if (ps.e > kPeriodMaxCount || ps.p > kPeriodMaxPrime)
    fail(ErrorKind::CapExceeded, "period polynomial limited to e <= 6, p <= 101");
  // coeffs[k] multiplies x^k
  std::vector<CycloInt> coeffs{CycloInt::integer(ps.p, 1)};
  for (const auto& s : ps.eta_sets) {
    const CycloInt eta = CycloInt::period(ps.p, s);
    std::vector<CycloInt> next(coeffs.size() + 1, CycloInt(ps.p));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] = next[k + 1] + coeffs[k];
      next[k] = next[k] - coeffs[k] * eta;
    }
    coeffs = std::move(next);
  }
  std::vector<Rational> out;
  for (const auto& c : coeffs) {
    auto n = c.to_integer();
    if (!n) fail(ErrorKind::InvalidArgument, "period polynomial coefficient is not rational");
    out.emplace_back(*n);
  }
  return UniPoly(Ring::integers(), std::move(out));
}

struct LogReindex {
  std::uint64_t g = 0;
  Permutation multiplication;  // point i-1 -> g i - 1, i in 1..p-1
  Permutation translation;     // k -> k + 1 mod p - 1
  Permutation witness;         // point i-1 -> log_g i
  bool verified = false;
};

/// The discrete-log relabeling carries i -> g i to k -> k + 1.
inline LogReindex log_reindex_conjugacy(std::uint64_t p) {
  require_prime(p);
  LogReindex out;
  out.g = primitive_root(p);
  const auto n = static_cast<std::uint32_t>(p - 1);
  std::vector<std::uint32_t> mult(n), trans(n), dlog(n);
  std::uint64_t x = 1;
  for (std::uint32_t k = 0; k < n; ++k, x = mul_mod(x, out.g, p)) dlog[x - 1] = k;
  for (std::uint32_t i = 0; i < n; ++i) {
    mult[i] = static_cast<std::uint32_t>(mul_mod(i + 1, out.g, p) - 1);
    trans[i] = (i + 1) % n;
  }
  out.multiplication = Permutation(std::move(mult));
  out.translation = Permutation(std::move(trans));
  out.witness = Permutation(std::move(dlog));
  out.verified = true;
  for (std::uint32_t i = 0; i < n; ++i)
    if (out.witness(out.multiplication(i)) != out.translation(out.witness(i))) out.verified = false;
  return out;
}

}  // namespace ordre
