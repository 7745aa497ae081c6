#pragma once

// Galois fields GF(p^n) realized as F_p[x]/(f) for a monic irreducible f.
// Elements are indexed by the base-p evaluation of their coordinates on
// 1, j, ..., j^{n-1}; that index is the letter numbering used by the
// permutation and linear-group code.

#include <charconv>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordre/arith.hpp"
#include "ordre/error.hpp"
#include "ordre/poly.hpp"

namespace ordre {

inline constexpr unsigned kFieldMaxDegree = 8;
inline constexpr std::uint64_t kFieldMaxSize = 1'000'000;

namespace detail {

inline void check_field_caps(std::uint64_t p, unsigned n) {
  require_prime(p);
  if (n < 1 || n > kFieldMaxDegree) fail(ErrorKind::CapExceeded, "extension degree must lie in [1, 8]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kFieldMaxSize) fail(ErrorKind::CapExceeded, "field size above 10^6");
  }
}

struct FieldData {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint32_t q = 0;
  modp::Poly modulus;  // monic, degree n
  std::uint32_t primitive = 0;
  std::vector<std::uint32_t> exp;  // exp[k] = index of primitive^k, k < q-1
  std::vector<std::uint32_t> log;  // log[exp[k]] = k; log[0] unused

  std::vector<std::uint64_t> coords(std::uint32_t index) const {
    std::vector<std::uint64_t> c(n);
    for (unsigned i = 0; i < n; ++i) {
      c[i] = index % p;
      index = static_cast<std::uint32_t>(index / p);
    }
    return c;
  }

  std::uint32_t index_of(const std::vector<std::uint64_t>& c) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * p + c[i];
    return static_cast<std::uint32_t>(acc);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < n; ++i) {
      out += static_cast<std::uint32_t>((a % p + b % p) % p) * place;
      a = static_cast<std::uint32_t>(a / p);
      b = static_cast<std::uint32_t>(b / p);
      place *= static_cast<std::uint32_t>(p);
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < n; ++i) {
      out += static_cast<std::uint32_t>((p - a % p) % p) * place;
      a = static_cast<std::uint32_t>(a / p);
      place *= static_cast<std::uint32_t>(p);
    }
    return out;
  }

  /// Multiplication by reduction mod the modulus; used before tables exist.
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    modp::Poly pa = coords(a), pb = coords(b);
    modp::trim(pa);
    modp::trim(pb);
    auto prod = modp::rem(modp::mul(pa, pb, p), modulus, p);
    prod.resize(n, 0);
    return index_of(prod);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp[(static_cast<std::uint64_t>(log[a]) + log[b]) % (q - 1)];
  }
};

}  // namespace detail

/// The monic irreducible of degree n mod p with the smallest encoding.
inline UniPoly find_irreducible(std::uint64_t p, unsigned n) {
  detail::check_field_caps(p, n);
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t code = 0; code < count; ++code) {
    auto f = modp::monic_from_code(code, n, p);
    if (modp::is_irreducible(f, p)) return modp::to_uni(f, p);
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");  // unreachable for prime p
}

class FieldElt;

/// A realized GF(p^n). Cheap to copy; all copies share one immutable table.
class FieldCtx {
 public:
  FieldCtx() = default;

  /// Builds GF(p^n) over the given modulus, or over find_irreducible(p, n).
  static FieldCtx create(std::uint64_t p, unsigned n, const std::optional<UniPoly>& modulus = std::nullopt) {
    detail::check_field_caps(p, n);
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->n = n;
    d->q = static_cast<std::uint32_t>(ipow(p, n));
    if (modulus) {
      if (modulus->ring() != Ring::mod(p) || modulus->degree() != static_cast<long>(n) || !modulus->is_monic())
        fail(ErrorKind::ReducibleModulus, "modulus must be a monic polynomial of degree n mod p");
      d->modulus = modp::from(*modulus);
      if (!modp::is_irreducible(d->modulus, p))
        fail(ErrorKind::ReducibleModulus, modulus->to_string() + " is reducible mod " + std::to_string(p));
    } else {
      d->modulus = modp::from(find_irreducible(p, n));
    }

    const std::uint64_t group_order = d->q - 1;
    const auto divisors = prime_divisors(group_order);
    auto pow_slow = [&](std::uint32_t base, std::uint64_t e) {
      std::uint32_t r = 1;
      while (e > 0) {
        if (e & 1) r = d->mul_slow(r, base);
        base = d->mul_slow(base, base);
        e >>= 1;
      }
      return r;
    };
    for (std::uint32_t cand = 1; cand < d->q; ++cand) {
      bool full = true;
      for (auto r : divisors) {
        if (pow_slow(cand, group_order / r) == 1) {
          full = false;
          break;
        }
      }
      if (full) {
        d->primitive = cand;
        break;
      }
    }

    d->exp.resize(group_order);
    d->log.assign(d->q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t k = 0; k < group_order; ++k) {
      d->exp[k] = x;
      d->log[x] = static_cast<std::uint32_t>(k);
      x = d->mul_slow(x, d->primitive);
    }
    FieldCtx ctx;
    ctx.d_ = std::move(d);
    return ctx;
  }

  std::uint64_t p() const { return d_->p; }
  unsigned n() const { return d_->n; }
  std::uint32_t size() const { return d_->q; }
  UniPoly modulus() const { return modp::to_uni(d_->modulus, d_->p); }

  FieldElt element(std::uint64_t index) const;
  FieldElt zero() const;
  FieldElt one() const;
  FieldElt primitive() const;
  /// Image of an integer in the prime subfield.
  FieldElt from_int(std::int64_t c) const;
  FieldElt from_coords(const std::vector<std::int64_t>& coords) const;
  /// "1,2,1" (coordinates, ascending) or a bare index.
  FieldElt parse(std::string_view text) const;

  /// k with primitive^k == x, 0 <= k < q - 1.
  std::uint32_t discrete_log(const FieldElt& x) const;

  bool same_as(const FieldCtx& o) const {
    if (d_ == o.d_) return true;
    return d_ && o.d_ && d_->p == o.d_->p && d_->n == o.d_->n && d_->modulus == o.d_->modulus;
  }

  const detail::FieldData& data() const { return *d_; }
  bool valid() const { return d_ != nullptr; }

 private:
  friend class FieldElt;
  std::shared_ptr<const detail::FieldData> d_;
};

/// field_new: GF(p^n) with verified modulus and smallest primitive element.
inline FieldCtx field_new(std::uint64_t p, unsigned n, const std::optional<UniPoly>& modulus = std::nullopt) {
  return FieldCtx::create(p, n, modulus);
}

class FieldElt {
 public:
  FieldElt() = default;
  FieldElt(FieldCtx ctx, std::uint32_t index) : ctx_(std::move(ctx)), index_(index) {}

  const FieldCtx& ctx() const { return ctx_; }
  std::uint32_t index() const { return index_; }
  std::vector<std::uint64_t> coords() const { return ctx_.data().coords(index_); }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  friend FieldElt operator+(const FieldElt& a, const FieldElt& b) {
    check(a, b);
    return {a.ctx_, a.ctx_.data().add(a.index_, b.index_)};
  }
  friend FieldElt operator-(const FieldElt& a) { return {a.ctx_, a.ctx_.data().neg(a.index_)}; }
  friend FieldElt operator-(const FieldElt& a, const FieldElt& b) {
    check(a, b);
    return {a.ctx_, a.ctx_.data().add(a.index_, a.ctx_.data().neg(b.index_))};
  }
  friend FieldElt operator*(const FieldElt& a, const FieldElt& b) {
    check(a, b);
    return {a.ctx_, a.ctx_.data().mul(a.index_, b.index_)};
  }
  friend FieldElt operator/(const FieldElt& a, const FieldElt& b) {
    check(a, b);
    return a * b.inverse();
  }
  FieldElt& operator+=(const FieldElt& o) { return *this = *this + o; }
  FieldElt& operator-=(const FieldElt& o) { return *this = *this - o; }
  FieldElt& operator*=(const FieldElt& o) { return *this = *this * o; }

  FieldElt inverse() const {
    if (index_ == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    const auto& d = ctx_.data();
    return {ctx_, d.exp[(d.q - 1 - d.log[index_]) % (d.q - 1)]};
  }

  /// Power with a signed exponent (negative requires nonzero).
  FieldElt pow(std::int64_t k) const {
    const auto& d = ctx_.data();
    if (index_ == 0) {
      if (k < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
      return {ctx_, k == 0 ? 1u : 0u};
    }
    const std::int64_t order = d.q - 1;
    std::int64_t e = (static_cast<std::int64_t>(d.log[index_]) * (((k % order) + order) % order)) % order;
    return {ctx_, d.exp[static_cast<std::size_t>(e)]};
  }

  FieldElt frobenius() const { return pow(static_cast<std::int64_t>(ctx_.p())); }

  /// Coordinates as "c0,c1,...".
  std::string to_string() const {
    std::string out;
    for (auto c : coords()) {
      if (!out.empty()) out += ",";
      out += std::to_string(c);
    }
    return out;
  }

  friend bool operator==(const FieldElt& a, const FieldElt& b) {
    return a.index_ == b.index_ && a.ctx_.same_as(b.ctx_);
  }

 private:
  static void check(const FieldElt& a, const FieldElt& b) {
    if (!a.ctx_.valid() || !a.ctx_.same_as(b.ctx_))
      fail(ErrorKind::ContextMismatch, "elements of different fields");
  }

  FieldCtx ctx_;
  std::uint32_t index_ = 0;
};

inline FieldElt FieldCtx::element(std::uint64_t index) const {
  if (index >= d_->q) fail(ErrorKind::IndexOutOfRange, "element index out of range");
  return {*this, static_cast<std::uint32_t>(index)};
}
inline FieldElt FieldCtx::zero() const { return {*this, 0}; }
inline FieldElt FieldCtx::one() const { return {*this, 1}; }
inline FieldElt FieldCtx::primitive() const { return {*this, d_->primitive}; }

inline FieldElt FieldCtx::from_int(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(d_->p);
  return {*this, static_cast<std::uint32_t>(((c % p) + p) % p)};
}

inline FieldElt FieldCtx::from_coords(const std::vector<std::int64_t>& coords) const {
  if (coords.size() > d_->n) fail(ErrorKind::ParseError, "too many coordinates for the field degree");
  std::vector<std::uint64_t> c(d_->n, 0);
  const auto p = static_cast<std::int64_t>(d_->p);
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = static_cast<std::uint64_t>(((coords[i] % p) + p) % p);
  return {*this, d_->index_of(c)};
}

inline FieldElt FieldCtx::parse(std::string_view text) const {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      fail(ErrorKind::ParseError, "bad field element '" + std::string(text) + "'");
    values.push_back(v);
    start = end + 1;
  }
  if (values.size() == 1 && d_->n > 1) {
    if (values[0] < 0 || static_cast<std::uint64_t>(values[0]) >= d_->q)
      fail(ErrorKind::ParseError, "element index out of range");
    return element(static_cast<std::uint64_t>(values[0]));
  }
  return from_coords(values);
}

inline std::uint32_t FieldCtx::discrete_log(const FieldElt& x) const {
  if (!x.ctx().same_as(*this)) fail(ErrorKind::ContextMismatch, "element of another field");
  if (x.is_zero()) fail(ErrorKind::ZeroArgument, "discrete log of zero");
  return d_->log[x.index()];
}

inline std::uint32_t discrete_log(const FieldCtx& ctx, const FieldElt& x) { return ctx.discrete_log(x); }

enum class FieldOp { add, sub, mul, div, pow, frobenius };

/// Dispatching form of the element arithmetic; `k` is the exponent for pow.
inline FieldElt elt_arith(const FieldElt& a, const FieldElt& b, FieldOp op, std::int64_t k = 0) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div:
      if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
      return a / b;
    case FieldOp::pow: return a.pow(k);
    case FieldOp::frobenius: return a.frobenius();
  }
  return a;
}

}  // namespace ordre
