#pragma once

// Permutations of 0-based points, their cycle notation, and the analytic
// (interpolating polynomial) representation over a finite field.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ordre/error.hpp"
#include "ordre/gf.hpp"
#include "ordre/poly.hpp"

namespace ordre {

class Permutation {
 public:
  Permutation() = default;

  /// images[i] is the image of point i; must be a bijection of [0, size).
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size()) fail(ErrorKind::PointOutOfRange, "image " + std::to_string(x) + " out of range");
      if (seen[x]) fail(ErrorKind::RepeatedPoint, "image " + std::to_string(x) + " repeated");
      seen[x] = true;
    }
  }

  static Permutation identity(std::uint32_t degree) {
    std::vector<std::uint32_t> v(degree);
    std::iota(v.begin(), v.end(), 0u);
    return Permutation(std::move(v), Unchecked{});
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<std::uint32_t>> cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<std::uint32_t> c;
      for (std::uint32_t x = i; !seen[x]; x = images_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Cycle lengths including fixed points, descending.
  std::vector<std::uint32_t> cycle_type() const {
    std::vector<std::uint32_t> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint32_t len = 0;
      for (std::uint32_t x = i; !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (auto len : cycle_type()) r = std::lcm(r, static_cast<std::uint64_t>(len));
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<std::uint32_t> images_;
};

/// (g o h)(x) = g(h(x)).
inline Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) fail(ErrorKind::DegreeMismatch, "composing permutations of different degrees");
  std::vector<std::uint32_t> v(g.degree());
  for (std::uint32_t i = 0; i < v.size(); ++i) v[i] = g.images_[h.images_[i]];
  return Permutation(std::move(v), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& g, const Permutation& h) { return compose(g, h); }

inline Permutation inverse(const Permutation& g) {
  std::vector<std::uint32_t> v(g.degree());
  for (std::uint32_t i = 0; i < v.size(); ++i) v[g.images_[i]] = i;
  return Permutation(std::move(v), Permutation::Unchecked{});
}

/// g h g^-1.
inline Permutation conjugate(const Permutation& g, const Permutation& h) { return g * h * inverse(g); }

/// a^-1 b^-1 a b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return inverse(a) * inverse(b) * a * b;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Replaces x_{i+1} by x_{s(i)+1} in f.
template <class Coeff>
MultiPoly<Coeff> act_perm(const MultiPoly<Coeff>& f, const Permutation& s) {
  return act_perm(f, std::span<const std::uint32_t>(s.images()));
}

// ---------------------------------------------------------------------------
// Notation

/// "(0 1 2)(3 4)"; "()" for the identity.
inline std::string format_cycles(const Permutation& s) {
  auto cs = s.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(c[i]);
    }
    out += ")";
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::uint32_t>> scan_cycles(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](const std::string& what) {
    fail(ErrorKind::MalformedNotation, what + " in '" + std::string(text) + "'");
  };
  skip();
  if (i == text.size()) bad("empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') bad("expected '('");
    ++i;
    std::vector<std::uint32_t> c;
    for (;;) {
      skip();
      if (i >= text.size()) bad("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad("expected a point");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffull) bad("point too large");
        ++i;
      }
      c.push_back(static_cast<std::uint32_t>(v));
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ')')
        bad("points must be separated by whitespace");
    }
    cycles.push_back(std::move(c));
    skip();
  }
  return cycles;
}

inline std::uint32_t max_point(const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::uint32_t m = 0;
  for (const auto& c : cycles)
    for (auto x : c) m = std::max(m, x + 1);
  return m;
}

inline Permutation build_cycles(const std::vector<std::vector<std::uint32_t>>& cycles, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto x = c[k];
      if (x >= degree) fail(ErrorKind::PointOutOfRange, "point " + std::to_string(x) + " >= degree");
      if (used[x]) fail(ErrorKind::RepeatedPoint, "point " + std::to_string(x) + " appears twice");
      used[x] = true;
      images[x] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace detail

inline Permutation parse_cycles(std::string_view text, std::uint32_t degree) {
  return detail::build_cycles(detail::scan_cycles(text), degree);
}

/// Image-array form "[1, 2, 0, 3]".
inline Permutation parse_images(std::string_view text) {
  auto bad = [&] { fail(ErrorKind::MalformedNotation, "bad image array '" + std::string(text) + "'"); };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size() || text[i] != '[') bad();
  ++i;
  std::vector<std::uint32_t> images;
  bool expect_value = true;
  for (; i < text.size() && text[i] != ']'; ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      if (expect_value) bad();
      expect_value = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!expect_value) bad();
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      --i;
      images.push_back(static_cast<std::uint32_t>(v));
      expect_value = false;
    } else {
      bad();
    }
  }
  if (i >= text.size() || (expect_value && !images.empty())) bad();
  return Permutation(std::move(images));
}

/// A single permutation in cycle or image-array form. A degree of 0 means
/// "largest point + 1" (cycle form).
inline Permutation parse_permutation(std::string_view text, std::uint32_t degree = 0) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') {
    auto p = parse_images(text);
    if (degree != 0 && p.degree() != degree) fail(ErrorKind::DegreeMismatch, "image array length differs from degree");
    return p;
  }
  auto cycles = detail::scan_cycles(text);
  return detail::build_cycles(cycles, degree == 0 ? std::max(detail::max_point(cycles), 1u) : degree);
}

/// Comma-separated generators, "(0 1 2 3),(0 1)". With degree 0 all
/// generators share the degree implied by the largest point.
inline std::vector<Permutation> parse_permutation_list(std::string_view text, std::uint32_t degree = 0) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(' || text[i] == '[') ++depth;
    if (text[i] == ')' || text[i] == ']') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  if (degree == 0) {
    for (auto part : parts) {
      auto first = part.find_first_not_of(" \t\n");
      if (first != std::string_view::npos && part[first] == '[')
        degree = std::max(degree, parse_images(part).degree());
      else
        degree = std::max(degree, detail::max_point(detail::scan_cycles(part)));
    }
    degree = std::max(degree, 1u);
  }
  std::vector<Permutation> out;
  for (auto part : parts) out.push_back(parse_permutation(part, degree));
  return out;
}

// ---------------------------------------------------------------------------
// Field-indexed permutations

namespace detail {

inline void require_field_degree(const Permutation& s, const FieldCtx& ctx) {
  if (!prime_power(s.degree()))
    fail(ErrorKind::DegreeNotPrimePower, "degree " + std::to_string(s.degree()) + " is not a prime power");
  if (s.degree() != ctx.size()) fail(ErrorKind::ContextMismatch, "degree differs from the field size");
}

}  // namespace detail

/// i -> a*i + b on the indices of the field.
inline Permutation affine_permutation(const FieldElt& a, const FieldElt& b) {
  if (a.is_zero()) fail(ErrorKind::ZeroMultiplier, "affine map with zero multiplier");
  const auto& ctx = a.ctx();
  std::vector<std::uint32_t> images(ctx.size());
  for (std::uint32_t i = 0; i < ctx.size(); ++i) images[i] = (a * ctx.element(i) + b).index();
  return Permutation(std::move(images));
}

inline constexpr std::uint64_t kAnalyticMaxWork = 100'000'000;

/// Polynomial form of a permutation of the q = p^n field-indexed letters:
/// one coordinate polynomial per output coordinate, in the n input
/// coordinates, each variable of degree <= p-1, coefficients in [0, p).
struct AnalyticForm {
  FieldCtx field;
  std::vector<RatPoly> coordinates;

  /// The single-variable polynomial phi (n == 1 only).
  UniPoly univariate() const {
    if (field.n() != 1) fail(ErrorKind::DegreeMismatch, "univariate form needs a prime field");
    std::vector<Rational> cs;
    for (const auto& [m, c] : coordinates[0].terms()) {
      if (cs.size() <= m[0]) cs.resize(m[0] + 1);
      cs[m[0]] = c;
    }
    return UniPoly(Ring::mod(field.p()), std::move(cs));
  }

  std::uint32_t eval(std::uint32_t index) const {
    const auto x = field.element(index).coords();
    const std::uint64_t p = field.p();
    std::vector<std::int64_t> out(field.n());
    for (unsigned k = 0; k < field.n(); ++k) {
      std::uint64_t acc = 0;
      for (const auto& [m, c] : coordinates[k].terms()) {
        std::uint64_t term = numerator(c).convert_to<std::uint64_t>();
        for (unsigned i = 0; i < field.n(); ++i) term = mul_mod(term, pow_mod(x[i], m[i], p), p);
        acc = (acc + term) % p;
      }
      out[k] = static_cast<std::int64_t>(acc);
    }
    return field.from_coords(out).index();
  }

  std::string to_string() const {
    std::string out;
    for (unsigned k = 0; k < coordinates.size(); ++k) {
      if (k) out += "; ";
      out += coordinates[k].to_string("i");
    }
    return out;
  }
};

/// Interpolates a permutation of field-indexed letters. The indicator of a
/// point c is 1 - (x - c)^{p-1} = [k==0] - c^{p-1-k} x^k summed over k, so
/// coefficients are obtained axis by axis from the value table.
inline AnalyticForm analytic_form(const Permutation& s, const FieldCtx& ctx) {
  detail::require_field_degree(s, ctx);
  const std::uint64_t p = ctx.p();
  const unsigned n = ctx.n();
  const std::uint32_t q = ctx.size();
  if (static_cast<std::uint64_t>(q) * p * n > kAnalyticMaxWork)
    fail(ErrorKind::CapExceeded, "analytic form too large to interpolate");

  // basis[k][c]: coefficient of x^k in the indicator polynomial of c
  std::vector<std::vector<std::uint64_t>> basis(p, std::vector<std::uint64_t>(p));
  for (std::uint64_t k = 0; k < p; ++k) {
    for (std::uint64_t c = 0; c < p; ++c) {
      const std::uint64_t power = pow_mod(c, p - 1 - k, p);  // 0^0 == 1
      basis[k][c] = ((k == 0 ? 1 : 0) + p - power) % p;
    }
  }

  AnalyticForm form{ctx, {}};
  for (unsigned out_coord = 0; out_coord < n; ++out_coord) {
    std::vector<std::uint64_t> table(q);
    for (std::uint32_t i = 0; i < q; ++i) table[i] = ctx.element(s(i)).coords()[out_coord];
    std::uint64_t stride = 1;
    for (unsigned axis = 0; axis < n; ++axis, stride *= p) {
      std::vector<std::uint64_t> next(q, 0);
      for (std::uint32_t base = 0; base < q; ++base) {
        if ((base / stride) % p != 0) continue;
        for (std::uint64_t k = 0; k < p; ++k) {
          std::uint64_t acc = 0;
          for (std::uint64_t c = 0; c < p; ++c) acc = (acc + basis[k][c] * table[base + c * stride]) % p;
          next[base + k * stride] = acc;
        }
      }
      table = std::move(next);
    }
    RatPoly poly(n);
    for (std::uint32_t idx = 0; idx < q; ++idx) {
      if (table[idx] == 0) continue;
      Monomial m(n);
      std::uint32_t rest = idx;
      for (unsigned i = 0; i < n; ++i) {
        m[i] = rest % p;
        rest = static_cast<std::uint32_t>(rest / p);
      }
      poly.add_term(m, Rational(table[idx]));
    }
    form.coordinates.push_back(std::move(poly));
  }
  return form;
}

enum class AffineKind { arithmetic, geometric, affine, none };

constexpr std::string_view affine_kind_name(AffineKind k) {
  switch (k) {
    case AffineKind::arithmetic: return "arithmetic";
    case AffineKind::geometric: return "geometric";
    case AffineKind::affine: return "affine";
    case AffineKind::none: return "none";
  }
  return "none";
}

struct AffineClass {
  AffineKind kind = AffineKind::none;
  FieldElt a;  // multiplier, meaningful unless kind == none
  FieldElt b;  // translation
};

/// Cauchy's classification: i -> i+b (b != 0) is arithmetic, i -> a*i
/// (a != 0, 1) geometric, any other i -> a*i+b affine.
inline AffineClass classify_affine(const Permutation& s, const FieldCtx& ctx) {
  detail::require_field_degree(s, ctx);
  const FieldElt b = ctx.element(s(0));
  const FieldElt a = ctx.element(s(1)) - b;
  if (a.is_zero()) return {};
  for (std::uint32_t i = 0; i < ctx.size(); ++i)
    if ((a * ctx.element(i) + b).index() != s(i)) return {};
  if (a.is_one() && !b.is_zero()) return {AffineKind::arithmetic, a, b};
  if (b.is_zero() && !a.is_one()) return {AffineKind::geometric, a, b};
  return {AffineKind::affine, a, b};
}

struct AffineDecomposition {
  std::uint32_t k = 0;  // multiplier == primitive^k
  FieldElt b;
};

/// i -> a*i + b as k applications of i -> g*i followed by i -> i + b.
inline AffineDecomposition affine_decompose(const FieldElt& a, const FieldElt& b, const FieldCtx& ctx) {
  if (!a.ctx().same_as(ctx) || !b.ctx().same_as(ctx)) fail(ErrorKind::ContextMismatch, "elements of another field");
  if (a.is_zero()) fail(ErrorKind::ZeroMultiplier, "zero multiplier");
  AffineDecomposition d{ctx.discrete_log(a), b};
  const FieldElt scale = ctx.primitive().pow(d.k);
  for (std::uint32_t i = 0; i < ctx.size(); ++i) {
    const FieldElt x = ctx.element(i);
    if (!(scale * x + b == a * x + b)) fail(ErrorKind::InvalidArgument, "recomposition check failed");
  }
  return d;
}

}  // namespace ordre
