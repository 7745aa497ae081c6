#pragma once

// Matrices over GF(p^n), the linear / affine / projective groups acting on
// field-indexed points, canonical reduction of linear substitutions over the
// splitting field, and the solution basis of x' = A x for rational A.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordre/arith.hpp"
#include "ordre/error.hpp"
#include "ordre/gf.hpp"
#include "ordre/group.hpp"
#include "ordre/perm.hpp"
#include "ordre/poly.hpp"

namespace ordre {

using Vec = std::vector<FieldElt>;

class MatGf {
 public:
  MatGf() = default;
  MatGf(FieldCtx ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, ctx_.zero()) {}

  static MatGf identity(const FieldCtx& ctx, std::size_t n) {
    MatGf m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return m;
  }

  /// Entries given as prime-subfield integers or, for n > 1, element indices.
  static MatGf from_ints(const FieldCtx& ctx, const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) fail(ErrorKind::DimensionMismatch, "empty matrix");
    MatGf m(ctx, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c)
        m.at(r, c) = ctx.n() == 1 ? ctx.from_int(rows[r][c]) : ctx.element(static_cast<std::uint64_t>(rows[r][c]));
    }
    return m;
  }

  /// Columns as a matrix.
  static MatGf from_columns(const FieldCtx& ctx, const std::vector<Vec>& cols) {
    MatGf m(ctx, cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    return m;
  }

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElt& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const FieldElt& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec column(std::size_t c) const {
    Vec v;
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
  }

  friend MatGf operator+(const MatGf& a, const MatGf& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "adding matrices of different shapes");
    MatGf out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
  }
  friend MatGf operator-(const MatGf& a, const MatGf& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "subtracting matrices of different shapes");
    MatGf out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= b.e_[i];
    return out;
  }
  friend MatGf operator*(const MatGf& a, const MatGf& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "inner dimensions differ");
    MatGf out(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return out;
  }
  friend Vec operator*(const MatGf& a, const Vec& v) {
    if (a.cols_ != v.size()) fail(ErrorKind::DimensionMismatch, "vector length differs from column count");
    Vec out(a.rows_, a.ctx_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a.at(i, k) * v[k];
    return out;
  }
  friend MatGf operator*(const FieldElt& s, const MatGf& a) {
    MatGf out = a;
    for (auto& x : out.e_) x = s * x;
    return out;
  }

  MatGf pow(unsigned k) const {
    MatGf out = identity(ctx_, rows_), base = *this;
    while (k > 0) {
      if (k & 1) out = out * base;
      base = base * base;
      k >>= 1;
    }
    return out;
  }

  FieldElt det() const {
    if (!is_square()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    MatGf m = *this;
    FieldElt d = ctx_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t pivot = c;
      while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
      if (pivot == rows_) return ctx_.zero();
      if (pivot != c) {
        m.swap_rows(pivot, c);
        d = -d;
      }
      d *= m.at(c, c);
      const FieldElt inv = m.at(c, c).inverse();
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (m.at(r, c).is_zero()) continue;
        const FieldElt f = m.at(r, c) * inv;
        for (std::size_t k = c; k < cols_; ++k) m.at(r, k) -= f * m.at(c, k);
      }
    }
    return d;
  }

  MatGf inverse() const {
    if (!is_square()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    MatGf m = *this, inv = identity(ctx_, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && m.at(pivot, c).is_zero()) ++pivot;
      if (pivot == n) fail(ErrorKind::SingularMatrix, "matrix is singular");
      m.swap_rows(pivot, c);
      inv.swap_rows(pivot, c);
      const FieldElt s = m.at(c, c).inverse();
      for (std::size_t k = 0; k < n; ++k) {
        m.at(c, k) *= s;
        inv.at(c, k) *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m.at(r, c).is_zero()) continue;
        const FieldElt f = m.at(r, c);
        for (std::size_t k = 0; k < n; ++k) {
          m.at(r, k) -= f * m.at(c, k);
          inv.at(r, k) -= f * inv.at(c, k);
        }
      }
    }
    return inv;
  }

  /// Reduced row echelon form and the pivot columns.
  std::pair<MatGf, std::vector<std::size_t>> rref() const {
    MatGf m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
      std::size_t pivot = row;
      while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      m.swap_rows(pivot, row);
      const FieldElt s = m.at(row, c).inverse();
      for (std::size_t k = 0; k < cols_; ++k) m.at(row, k) *= s;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || m.at(r, c).is_zero()) continue;
        const FieldElt f = m.at(r, c);
        for (std::size_t k = 0; k < cols_; ++k) m.at(r, k) -= f * m.at(row, k);
      }
      pivots.push_back(c);
      ++row;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().second.size(); }

  /// Basis of {v : M v = 0}, one vector per free column, in column order.
  std::vector<Vec> kernel() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vec v(cols_, ctx_.zero());
      v[free] = ctx_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Same matrix over a field containing this one's prime field (source must be F_p).
  MatGf embed(const FieldCtx& target) const {
    if (ctx_.n() != 1 || target.p() != ctx_.p()) fail(ErrorKind::ContextMismatch, "can only embed F_p matrices");
    MatGf out(target, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = target.element(e_[i].index());
    return out;
  }

  /// "a,b;c,d": rows by ';', entries by ','. Entries over extension fields
  /// are written as element indices.
  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) out += ";";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out += ",";
        out += std::to_string(at(r, c).index());
      }
    }
    return out;
  }

  friend bool operator==(const MatGf& a, const MatGf& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

  FieldCtx ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElt> e_;
};

namespace detail {

inline std::vector<std::vector<std::string>> split_matrix_text(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::vector<std::string> row;
    auto line = text.substr(start, end - start);
    std::size_t s2 = 0;
    while (s2 <= line.size()) {
      auto e2 = line.find(',', s2);
      if (e2 == std::string_view::npos) e2 = line.size();
      std::string tok(line.substr(s2, e2 - s2));
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty()) fail(ErrorKind::ParseError, "empty matrix entry in '" + std::string(text) + "'");
      row.push_back(std::move(tok));
      s2 = e2 + 1;
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail(ErrorKind::ParseError, "ragged matrix '" + std::string(text) + "'");
  return rows;
}

inline Rational parse_rational(const std::string& tok) {
  try {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rational(Integer(tok));
    Integer den(tok.substr(slash + 1));
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + tok + "'");
    return Rational(Integer(tok.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail(ErrorKind::ParseError, "bad number '" + tok + "'");
  }
}

}  // namespace detail

inline MatGf parse_matrix(const FieldCtx& ctx, std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : detail::split_matrix_text(text)) {
    std::vector<std::int64_t> row;
    for (const auto& tok : r) {
      auto v = detail::parse_rational(tok);
      if (denominator(v) != 1) fail(ErrorKind::ParseError, "matrix entries over a finite field are integers");
      row.push_back(numerator(v).convert_to<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  return MatGf::from_ints(ctx, rows);
}

enum class MatOp { add, mul, inv, det };

inline std::variant<MatGf, FieldElt> mat_arith(const MatGf& a, const MatGf& b, MatOp op) {
  switch (op) {
    case MatOp::add: return a + b;
    case MatOp::mul: return a * b;
    case MatOp::inv: return a.inverse();
    case MatOp::det: return a.det();
  }
  return a;
}

// ---------------------------------------------------------------------------
// Group orders

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
inline Integer gl_order(unsigned n, std::uint64_t q) {
  if (!prime_power(q)) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  Integer qn = boost::multiprecision::pow(Integer(q), n), out = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i, qi *= q) out *= qn - qi;
  return out;
}

/// |AGL_n(F_q)| = q^n |GL_n(F_q)|.
inline Integer agl_order(unsigned n, std::uint64_t q) {
  return boost::multiprecision::pow(Integer(q), n) * gl_order(n, q);
}

// ---------------------------------------------------------------------------
// Permutation actions on field-indexed points

inline constexpr std::uint64_t kAffineMaxPoints = 1000;

namespace detail {

/// Point index <-> coordinate vector in F_p^n (base-p digits, ascending).
struct PointSpace {
  std::uint64_t p;
  unsigned n;
  std::uint32_t size;

  std::vector<std::uint64_t> coords(std::uint32_t idx) const {
    std::vector<std::uint64_t> v(n);
    for (unsigned i = 0; i < n; ++i) {
      v[i] = idx % p;
      idx = static_cast<std::uint32_t>(idx / p);
    }
    return v;
  }
  std::uint32_t index(const std::vector<std::uint64_t>& v) const {
    std::uint64_t acc = 0;
    for (std::size_t i = v.size(); i-- > 0;) acc = acc * p + v[i];
    return static_cast<std::uint32_t>(acc);
  }

  template <class Map>
  Permutation action(Map map) const {
    std::vector<std::uint32_t> images(size);
    for (std::uint32_t i = 0; i < size; ++i) images[i] = index(map(coords(i)));
    return Permutation(std::move(images));
  }
};

inline PointSpace point_space(unsigned n, std::uint64_t p) {
  require_prime(p);
  if (n < 1) fail(ErrorKind::InvalidArgument, "dimension must be at least 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= p;
    if (size > kAffineMaxPoints) fail(ErrorKind::CapExceeded, "affine action limited to 1000 points");
  }
  return {p, n, static_cast<std::uint32_t>(size)};
}

inline std::vector<Permutation> translation_generators(const PointSpace& sp) {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < sp.n; ++i)
    gens.push_back(sp.action([&](std::vector<std::uint64_t> v) {
      v[i] = (v[i] + 1) % sp.p;
      return v;
    }));
  return gens;
}

}  // namespace detail

/// Translations v -> v + t of F_p^n, on p^n points.
inline PermGroup translation_group(unsigned n, std::uint64_t p, std::uint64_t cap = kDefaultOrderCap) {
  const auto sp = detail::point_space(n, p);
  return PermGroup::generate(sp.size, detail::translation_generators(sp), cap);
}

/// Generators of AGL_n(F_p) acting on p^n points: the unit translations,
/// diag(g, 1, ..., 1), the transvection v_0 += v_1 and the cyclic shift of
/// coordinates.
inline std::vector<Permutation> affine_generators(unsigned n, std::uint64_t p) {
  const auto sp = detail::point_space(n, p);
  auto gens = detail::translation_generators(sp);
  const std::uint64_t g = FieldCtx::create(p, 1).primitive().index();
  if (g != 1)
    gens.push_back(sp.action([&](std::vector<std::uint64_t> v) {
      v[0] = v[0] * g % p;
      return v;
    }));
  if (n >= 2) {
    gens.push_back(sp.action([&](std::vector<std::uint64_t> v) {
      v[0] = (v[0] + v[1]) % p;
      return v;
    }));
    gens.push_back(sp.action([&](const std::vector<std::uint64_t>& v) {
      std::vector<std::uint64_t> w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[(i + 1) % v.size()] = v[i];
      return w;
    }));
  }
  return gens;
}

/// AGL_n(F_p) as a closed permutation group on p^n points.
inline PermGroup affine_perm_group(unsigned n, std::uint64_t p, std::uint64_t cap = kDefaultOrderCap) {
  const auto gens = affine_generators(n, p);
  return PermGroup::generate(gens.front().degree(), gens, cap);
}

inline constexpr std::uint64_t kProjectiveMaxPrime = 31;

/// i -> (a i + b)/(c i + d) on {0..p-1, inf}, inf being point p.
inline Permutation homography(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  const std::uint64_t inf = p;
  if ((a * d + p * p - (b * c) % p) % p == 0) fail(ErrorKind::SingularMatrix, "homography with zero determinant");
  std::vector<std::uint32_t> images(p + 1);
  for (std::uint64_t i = 0; i <= p; ++i) {
    std::uint64_t num, den;
    if (i == inf) {
      num = a % p;
      den = c % p;
    } else {
      num = (a * i + b) % p;
      den = (c * i + d) % p;
    }
    images[i] = static_cast<std::uint32_t>(den == 0 ? inf : mul_mod(num, inv_mod(den, p), p));
  }
  return Permutation(std::move(images));
}

/// PGL_2(F_p) on the projective line, generated by i -> i+1, i -> g i and
/// i -> -1/i.
inline PermGroup pgl2_perm(std::uint64_t p, std::uint64_t cap = kDefaultOrderCap) {
  require_prime(p);
  if (p > kProjectiveMaxPrime) fail(ErrorKind::CapExceeded, "projective action limited to p <= 31");
  const std::uint64_t g = FieldCtx::create(p, 1).primitive().index();
  std::vector<Permutation> gens{homography(p, 1, 1, 0, 1), homography(p, 0, p - 1, 1, 0)};
  if (g != 1) gens.push_back(homography(p, g, 0, 0, 1));
  return PermGroup::generate(static_cast<std::uint32_t>(p + 1), std::move(gens), cap);
}

// ---------------------------------------------------------------------------
// Canonical reduction

namespace detail {

/// det by cofactor expansion along the first row; T needs +, -, *.
template <class T>
T det_laplace(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T acc = zero;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * det_laplace(minor, zero, one);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace detail

/// det(x I - A) for a matrix over F_p.
inline UniPoly charpoly(const MatGf& a) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  if (a.ctx().n() != 1) fail(ErrorKind::ContextMismatch, "characteristic polynomial needs a prime field");
  const Ring ring = Ring::mod(a.ctx().p());
  std::vector<std::vector<UniPoly>> m(a.rows(), std::vector<UniPoly>(a.cols(), UniPoly(ring)));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      UniPoly entry = UniPoly::constant(ring, -Rational(a.at(r, c).index()));
      if (r == c) entry = entry + UniPoly::monomial(ring, 1);
      m[r][c] = entry;
    }
  return detail::det_laplace(m, UniPoly(ring), UniPoly::constant(ring, 1));
}

struct JordanBlock {
  FieldElt eigenvalue;
  std::uint32_t size = 0;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

enum class Canon2Kind { split_distinct, nonsplit_pair, repeated };

constexpr std::string_view canon2_kind_name(Canon2Kind k) {
  switch (k) {
    case Canon2Kind::split_distinct: return "split_distinct";
    case Canon2Kind::nonsplit_pair: return "nonsplit_pair";
    case Canon2Kind::repeated: return "repeated";
  }
  return "";
}

/// conjugator^-1 * A * conjugator == block_matrix(), where every block is
/// lambda on the diagonal with 1 on the subdiagonal (z -> lambda z,
/// u -> z + lambda u).
struct CanonicalForm {
  unsigned extension_degree = 1;
  FieldCtx splitting_field;
  std::vector<JordanBlock> blocks;
  MatGf conjugator;
  std::optional<Canon2Kind> kind;  // filled for 2x2 inputs

  MatGf block_matrix() const {
    std::size_t dim = 0;
    for (const auto& b : blocks) dim += b.size;
    MatGf j(splitting_field, dim, dim);
    std::size_t off = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.size; ++i) {
        j.at(off + i, off + i) = b.eigenvalue;
        if (i + 1 < b.size) j.at(off + i + 1, off + i) = splitting_field.one();
      }
      off += b.size;
    }
    return j;
  }

  /// Similarity invariant: extension degree and (eigenvalue index, size) list.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> signature() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& b : blocks) out.emplace_back(b.eigenvalue.index(), b.size);
    return out;
  }

  /// Exact check of the conjugation identity against the original matrix.
  bool verify(const MatGf& a) const {
    const MatGf lifted = a.embed(splitting_field);
    return conjugator.inverse() * lifted * conjugator == block_matrix();
  }
};

namespace detail {

inline void require_canonical_input(const MatGf& a, std::size_t max_dim) {
  if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "canonical form of a non-square matrix");
  if (a.ctx().n() != 1) fail(ErrorKind::ContextMismatch, "canonical form expects a matrix over F_p");
  if (a.rows() > max_dim) fail(ErrorKind::CapExceeded, "dimension above " + std::to_string(max_dim));
  if (a.det().is_zero()) fail(ErrorKind::SingularMatrix, "linear substitution must be invertible");
}

/// Roots in `field` of a polynomial over F_p, ascending by index.
inline std::vector<FieldElt> roots_in(const UniPoly& f, const FieldCtx& field) {
  std::vector<FieldElt> out;
  std::vector<FieldElt> cs;
  for (const auto& c : f.coeffs()) cs.push_back(field.element(numerator(c).convert_to<std::uint64_t>()));
  for (std::uint32_t i = 0; i < field.size(); ++i) {
    const FieldElt x = field.element(i);
    FieldElt acc = field.zero();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
    if (acc.is_zero()) out.push_back(x);
  }
  return out;
}

inline FieldCtx splitting_field_for(const FieldCtx& base, unsigned m) {
  return m == 1 ? base : FieldCtx::create(base.p(), m);
}

inline Vec eigenvector_2x2(const MatGf& a, const FieldElt& lambda) {
  const auto& f = lambda.ctx();
  const FieldElt a11 = f.element(a.at(0, 0).index()), a12 = f.element(a.at(0, 1).index());
  const FieldElt a21 = f.element(a.at(1, 0).index()), a22 = f.element(a.at(1, 1).index());
  if (!a12.is_zero()) return {a12, lambda - a11};
  if (!a21.is_zero()) return {lambda - a22, a21};
  return a11 == lambda ? Vec{f.one(), f.zero()} : Vec{f.zero(), f.one()};
}

}  // namespace detail

/// The three shapes of an invertible 2x2 substitution over F_p: distinct
/// roots in F_p, a Frobenius-conjugate pair in GF(p^2), or a double root.
inline CanonicalForm canonical_form_2x2(const MatGf& a) {
  if (a.rows() != 2 || a.cols() != 2) fail(ErrorKind::DimensionMismatch, "expected a 2x2 matrix");
  detail::require_canonical_input(a, 2);
  const FieldCtx& base = a.ctx();
  const UniPoly chi = charpoly(a);

  CanonicalForm out;
  auto roots = detail::roots_in(chi, base);
  if (roots.size() == 2) {
    out.kind = Canon2Kind::split_distinct;
    out.splitting_field = base;
    out.blocks = {{roots[0], 1}, {roots[1], 1}};
    out.conjugator = MatGf::from_columns(base, {detail::eigenvector_2x2(a, roots[0]), detail::eigenvector_2x2(a, roots[1])});
  } else if (roots.size() == 1) {
    out.kind = Canon2Kind::repeated;
    out.splitting_field = base;
    const FieldElt alpha = roots[0];
    const MatGf nil = a - alpha * MatGf::identity(base, 2);
    if (nil == MatGf(base, 2, 2)) {
      out.blocks = {{alpha, 1}, {alpha, 1}};
      out.conjugator = MatGf::identity(base, 2);
    } else {
      Vec v{base.one(), base.zero()};
      const Vec image = nil * v;
      if (std::all_of(image.begin(), image.end(), [](const FieldElt& x) { return x.is_zero(); }))
        v = {base.zero(), base.one()};
      out.blocks = {{alpha, 2}};
      out.conjugator = MatGf::from_columns(base, {v, nil * v});
    }
  } else {
    out.kind = Canon2Kind::nonsplit_pair;
    out.extension_degree = 2;
    out.splitting_field = FieldCtx::create(base.p(), 2);
    auto ext_roots = detail::roots_in(chi, out.splitting_field);
    if (ext_roots.size() != 2 || !(ext_roots[0].frobenius() == ext_roots[1]))
      fail(ErrorKind::InvalidArgument, "quadratic eigenvalues are not a Frobenius pair");
    const MatGf lifted = a.embed(out.splitting_field);
    out.blocks = {{ext_roots[0], 1}, {ext_roots[1], 1}};
    out.conjugator = MatGf::from_columns(out.splitting_field, {detail::eigenvector_2x2(lifted, ext_roots[0]),
                                                               detail::eigenvector_2x2(lifted, ext_roots[1])});
  }
  if (!out.verify(a)) fail(ErrorKind::InvalidArgument, "conjugator check failed");
  return out;
}

inline constexpr std::size_t kCanonicalMaxDim = 4;

/// Block reduction of an invertible matrix over F_p (dim <= 4) over the
/// splitting field GF(p^m), m the lcm of the characteristic factor degrees.
/// Blocks are ordered by eigenvalue index, then by size descending.
inline CanonicalForm canonical_form(const MatGf& a) {
  detail::require_canonical_input(a, kCanonicalMaxDim);
  const FieldCtx& base = a.ctx();
  const std::size_t dim = a.rows();
  const auto factors = uni_factor_modp(charpoly(a));

  unsigned m = 1;
  for (const auto& f : factors) m = std::lcm(m, static_cast<unsigned>(f.factor.degree()));
  CanonicalForm out;
  out.extension_degree = m;
  out.splitting_field = detail::splitting_field_for(base, m);
  const FieldCtx& field = out.splitting_field;
  const MatGf lifted = a.embed(field);

  // eigenvalue -> algebraic multiplicity
  std::vector<std::pair<FieldElt, unsigned>> eigen;
  for (const auto& f : factors) {
    auto roots = detail::roots_in(f.factor, field);
    if (roots.size() != static_cast<std::size_t>(f.factor.degree()))
      fail(ErrorKind::InvalidArgument, "factor does not split in the splitting field");
    for (const auto& r : roots) eigen.emplace_back(r, f.multiplicity);
  }
  std::sort(eigen.begin(), eigen.end(), [](const auto& x, const auto& y) { return x.first.index() < y.first.index(); });

  std::vector<Vec> columns;
  for (const auto& [lambda, mult] : eigen) {
    const MatGf nil = lifted - lambda * MatGf::identity(field, dim);
    // kernels[s] = basis of ker nil^s
    std::vector<std::vector<Vec>> kernels{{}};
    std::size_t top = 0;
    for (std::size_t s = 1; s <= mult; ++s) {
      kernels.push_back(nil.pow(static_cast<unsigned>(s)).kernel());
      if (kernels.back().size() == mult) {
        top = s;
        break;
      }
    }
    if (top == 0) fail(ErrorKind::InvalidArgument, "generalized eigenspace has the wrong dimension");

    std::vector<std::pair<Vec, std::size_t>> heads;
    for (std::size_t s = top; s >= 1; --s) {
      std::vector<Vec> span = kernels[s - 1];
      for (const auto& [h, size] : heads) {
        Vec v = h;
        for (std::size_t k = 0; k < size - s; ++k) v = nil * v;
        span.push_back(std::move(v));
      }
      std::size_t rank = span.empty() ? 0 : MatGf::from_columns(field, span).rank();
      for (const auto& cand : kernels[s]) {
        span.push_back(cand);
        const std::size_t r = MatGf::from_columns(field, span).rank();
        if (r > rank) {
          rank = r;
          heads.emplace_back(cand, s);
        } else {
          span.pop_back();
        }
      }
    }
    std::stable_sort(heads.begin(), heads.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    for (const auto& [h, size] : heads) {
      Vec v = h;
      for (std::size_t k = 0; k < size; ++k) {
        columns.push_back(v);
        v = nil * v;
      }
      out.blocks.push_back({lambda, static_cast<std::uint32_t>(size)});
    }
  }
  out.conjugator = MatGf::from_columns(field, columns);

  if (dim == 2) {
    if (m == 2) out.kind = Canon2Kind::nonsplit_pair;
    else if (out.blocks.size() == 2 && !(out.blocks[0].eigenvalue == out.blocks[1].eigenvalue))
      out.kind = Canon2Kind::split_distinct;
    else out.kind = Canon2Kind::repeated;
  }
  if (!out.verify(a)) fail(ErrorKind::InvalidArgument, "conjugator check failed");
  return out;
}

/// Uniformly random invertible n x n matrix over the field.
template <class Rng>
MatGf random_invertible(const FieldCtx& ctx, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, ctx.size() - 1);
  for (;;) {
    MatGf m(ctx, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = ctx.element(pick(rng));
    if (!m.det().is_zero()) return m;
  }
}

// ---------------------------------------------------------------------------
// Constant-coefficient linear ODE systems x' = A x over the rationals

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix parse_rational_matrix(std::string_view text) {
  RatMatrix out;
  for (const auto& r : detail::split_matrix_text(text)) {
    std::vector<Rational> row;
    for (const auto& tok : r) row.push_back(detail::parse_rational(tok));
    out.push_back(std::move(row));
  }
  return out;
}

namespace detail {

inline std::size_t rational_rank(RatMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline RatMatrix rational_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.size(), std::vector<Rational>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline std::vector<Integer> divisors_of(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace detail

/// det(x I - A) over the rationals.
inline UniPoly rational_charpoly(const RatMatrix& a) {
  const Ring ring = Ring::rationals();
  std::vector<std::vector<UniPoly>> m(a.size(), std::vector<UniPoly>(a.size(), UniPoly(ring)));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) {
      UniPoly entry = UniPoly::constant(ring, -a[r][c]);
      if (r == c) entry = entry + UniPoly::monomial(ring, 1);
      m[r][c] = entry;
    }
  return detail::det_laplace(m, UniPoly(ring), UniPoly::constant(ring, 1));
}

/// Rational roots with multiplicity (rational-root theorem), ascending.
inline std::vector<std::pair<Rational, unsigned>> rational_roots(UniPoly f) {
  std::vector<std::pair<Rational, unsigned>> out;
  if (f.is_zero()) return out;
  auto deflate = [&](const Rational& r) {
    unsigned mult = 0;
    const UniPoly lin(Ring::rationals(), std::vector<Rational>{-r, Rational(1)});
    for (;;) {
      auto [q, rem] = divrem(f, lin);
      if (!rem.is_zero()) break;
      f = q;
      ++mult;
    }
    if (mult) out.emplace_back(r, mult);
  };
  deflate(Rational(0));
  if (f.degree() >= 1) {
    Integer lcm = 1;
    for (const auto& c : f.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    const Integer lead = numerator(Rational(f.leading() * lcm)), constant = numerator(Rational(f.coeff(0) * lcm));
    std::vector<Rational> candidates;
    for (const auto& num : detail::divisors_of(constant))
      for (const auto& den : detail::divisors_of(lead)) {
        candidates.emplace_back(num, den);
        candidates.emplace_back(-num, den);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates)
      if (f.degree() >= 1 && f.eval(r) == 0) deflate(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// t^power * e^{sigma t}.
struct SolutionTerm {
  Rational sigma;
  unsigned power = 0;
  friend bool operator==(const SolutionTerm&, const SolutionTerm&) = default;

  std::string to_string() const {
    std::ostringstream os;
    if (power == 1) os << "t*";
    else if (power > 1) os << "t^" << power << "*";
    os << "e^(" << sigma << "t)";
    return os.str();
  }
};

struct OdeBasis {
  std::vector<std::pair<Rational, unsigned>> blocks;  // (sigma, size), sigma ascending, size descending
  std::vector<SolutionTerm> terms;
};

inline constexpr std::size_t kOdeMaxDim = 4;

/// Solution basis of x' = A x: each block (sigma, s) of the canonical form
/// contributes e^{sigma t} times 1, t, ..., t^{s-1}.
inline OdeBasis ode_solution_basis(const RatMatrix& a) {
  const std::size_t dim = a.size();
  if (dim == 0) fail(ErrorKind::DimensionMismatch, "empty matrix");
  for (const auto& row : a)
    if (row.size() != dim) fail(ErrorKind::DimensionMismatch, "matrix must be square");
  if (dim > kOdeMaxDim) fail(ErrorKind::CapExceeded, "dimension above 4");

  const auto roots = rational_roots(rational_charpoly(a));
  unsigned found = 0;
  for (const auto& [r, mult] : roots) found += mult;
  if (found != dim) fail(ErrorKind::IrrationalEigenvalues, "characteristic polynomial does not split over Q");

  OdeBasis out;
  for (const auto& [sigma, mult] : roots) {
    RatMatrix nil = a;
    for (std::size_t i = 0; i < dim; ++i) nil[i][i] -= sigma;
    // ranks[k] = rank(nil^k)
    std::vector<std::size_t> ranks{dim};
    RatMatrix power = nil;
    for (unsigned k = 1; k <= mult + 1; ++k) {
      ranks.push_back(detail::rational_rank(power));
      power = detail::rational_mul(power, nil);
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    std::vector<unsigned> sizes;
    for (unsigned k = mult + 1; k >= 1; --k) {
      const std::size_t at_least_k = ranks[k - 1] - ranks[k];
      const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
      for (std::size_t i = 0; i < at_least_k - at_least_next; ++i) sizes.push_back(k);
    }
    for (auto s : sizes) {
      out.blocks.emplace_back(sigma, s);
      for (unsigned k = 0; k < s; ++k) out.terms.push_back({sigma, k});
    }
  }
  return out;
}

}  // namespace ordre
