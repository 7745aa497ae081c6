#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "ordre/linear.hpp"

using namespace ordre;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

using IntMat = std::vector<std::vector<std::int64_t>>;

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

// Leibniz expansion mod p.
std::int64_t leibniz_det(const IntMat& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][s[i]] % p;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += s[i] > s[j];
    total = mod(total + (inversions % 2 ? -term : term), p);
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

std::size_t rank_mod(IntMat m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && mod(m[r][c], p) == 0) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[rank]);
    std::int64_t inv = 1;
    while (mod(m[rank][c] * inv, p) != 1) ++inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == rank) continue;
      const std::int64_t f = mod(m[k][c] * inv, p);
      for (std::size_t j = 0; j < cols; ++j) m[k][j] = mod(m[k][j] - f * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

IntMat int_mul(const IntMat& a, const IntMat& b, std::int64_t p) {
  IntMat out(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = mod(out[i][j] + a[i][k] * b[k][j], p);
  return out;
}

IntMat random_int_mat(std::size_t n, std::int64_t p, std::mt19937_64& rng) {
  IntMat m(n, std::vector<std::int64_t>(n));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<std::int64_t>(rng() % p);
  return m;
}

// Blocks of size >= k for eigenvalue lambda: rank(N^{k-1}) - rank(N^k).
std::vector<std::uint32_t> block_sizes_oracle(const IntMat& a, std::int64_t lambda, std::int64_t p) {
  const std::size_t n = a.size();
  IntMat nil = a;
  for (std::size_t i = 0; i < n; ++i) nil[i][i] = mod(nil[i][i] - lambda, p);
  std::vector<std::size_t> ranks{n};
  IntMat power = nil;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    ranks.push_back(rank_mod(power, p));
    power = int_mul(power, nil, p);
  }
  std::vector<std::uint32_t> sizes;
  for (std::size_t k = n + 1; k >= 1; --k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t i = 0; i < at_least - next; ++i) sizes.push_back(static_cast<std::uint32_t>(k));
  }
  return sizes;
}

Canon2Kind tag_oracle(const IntMat& a, std::int64_t p) {
  const std::int64_t tr = mod(a[0][0] + a[1][1], p), det = leibniz_det(a, p);
  int roots = 0;
  for (std::int64_t x = 0; x < p; ++x) roots += mod(x * x - tr * x + det, p) == 0;
  if (roots == 0) return Canon2Kind::nonsplit_pair;
  return roots == 2 ? Canon2Kind::split_distinct : Canon2Kind::repeated;
}

}  // namespace

TEST(MatGf, Arithmetic) {
  const auto f5 = field_new(5, 1);
  const auto a = parse_matrix(f5, "1,2;3,4");
  EXPECT_EQ(MatGf::identity(f5, 2) * a, a);
  EXPECT_EQ(parse_matrix(f5, "2,0;0,3").det(), f5.one());
  EXPECT_EQ(a.to_string(), "1,2;3,4");
  EXPECT_EQ(a * a.inverse(), MatGf::identity(f5, 2));
  EXPECT_EQ(std::get<FieldElt>(mat_arith(a, a, MatOp::det)), f5.from_int(-2));
  EXPECT_EQ(std::get<MatGf>(mat_arith(a, a, MatOp::add)), parse_matrix(f5, "2,4;1,3"));
  EXPECT_EQ(kind_of([&] { parse_matrix(f5, "1,2;2,4").inverse(); }), ErrorKind::SingularMatrix);
  EXPECT_EQ(kind_of([&] { (void)(a * parse_matrix(f5, "1,2,3")); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { parse_matrix(f5, "1,2;3"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_matrix(f5, "1,;3,4"); }), ErrorKind::ParseError);
}

TEST(MatGfProperty, DeterminantAndInverseAgainstCofactorOracle) {
  std::mt19937_64 rng(12);
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto f = field_new(static_cast<std::uint64_t>(p), 1);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + rng() % 4;
      const auto m = random_int_mat(n, p, rng);
      const auto a = MatGf::from_ints(f, m);
      EXPECT_EQ(a.det().index(), static_cast<std::uint32_t>(leibniz_det(m, p)));
      EXPECT_EQ(a.rank(), rank_mod(m, p));
      if (!a.det().is_zero()) {
        EXPECT_EQ(a * a.inverse(), MatGf::identity(f, n));
        EXPECT_EQ(a.inverse() * a, MatGf::identity(f, n));
      }
      for (const auto& v : a.kernel()) {
        for (const auto& x : a * v) EXPECT_TRUE(x.is_zero());
      }
      EXPECT_EQ(a.kernel().size() + a.rank(), n);
    }
  }
}

TEST(MatGf, ExtensionFieldEntries) {
  const auto f9 = field_new(3, 2);
  const auto a = parse_matrix(f9, "3,1;0,4");  // entries are element indices
  EXPECT_EQ(a.at(0, 0), f9.element(3));
  EXPECT_EQ(a.det(), f9.element(3) * f9.element(4));
  EXPECT_EQ(a * a.inverse(), MatGf::identity(f9, 2));
}

TEST(Orders, Formulas) {
  EXPECT_EQ(gl_order(2, 3), 48);
  EXPECT_EQ(agl_order(1, 5), 20);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 25u}) EXPECT_EQ(gl_order(1, q), q - 1);
  EXPECT_EQ(gl_order(3, 2), 168);
  EXPECT_EQ(agl_order(3, 2), 1344);
  EXPECT_EQ(kind_of([] { gl_order(2, 6); }), ErrorKind::NotPrimePower);
}

TEST(Orders, GlTwoThreeByCounting) {
  int invertible = 0;
  for (int code = 0; code < 81; ++code) {
    IntMat m{{code % 3, code / 3 % 3}, {code / 9 % 3, code / 27 % 3}};
    invertible += leibniz_det(m, 3) != 0;
  }
  EXPECT_EQ(Integer(invertible), gl_order(2, 3));
  // the linear part is the stabilizer of the zero vector
  EXPECT_EQ(Integer(stabilizer(affine_perm_group(2, 3), 0).order()), gl_order(2, 3));
}

TEST(AffineGroup, ClosureMatchesFormula) {
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 5}, {1, 7}, {2, 2}, {2, 3}, {3, 2}, {1, 2}}) {
    const auto g = affine_perm_group(n, p);
    EXPECT_EQ(Integer(g.order()), agl_order(n, p)) << n << "," << p;
    EXPECT_EQ(g.degree(), ipow(p, n));
  }
  EXPECT_EQ(kind_of([] { affine_perm_group(2, 37); }), ErrorKind::CapExceeded);
  EXPECT_EQ(kind_of([] { affine_perm_group(2, 6); }), ErrorKind::NotPrime);
}

TEST(AffineGroup, ElementsAreAffineMaps) {
  // recover (M, t) from each element and check every point
  const std::uint64_t p = 3;
  const auto g = affine_perm_group(2, p);
  auto coords = [&](std::uint32_t i) { return std::vector<std::int64_t>{i % 3, i / 3}; };
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& s : g.elements()) {
    const auto t = coords(s(0));
    const auto c0 = coords(s(1)), c1 = coords(s(3));
    const std::int64_t m00 = mod(c0[0] - t[0], 3), m10 = mod(c0[1] - t[1], 3);
    const std::int64_t m01 = mod(c1[0] - t[0], 3), m11 = mod(c1[1] - t[1], 3);
    EXPECT_NE(mod(m00 * m11 - m01 * m10, 3), 0);
    for (std::uint32_t i = 0; i < 9; ++i) {
      const auto v = coords(i);
      const std::int64_t y0 = mod(m00 * v[0] + m01 * v[1] + t[0], 3);
      const std::int64_t y1 = mod(m10 * v[0] + m11 * v[1] + t[1], 3);
      EXPECT_EQ(s(i), static_cast<std::uint32_t>(y0 + 3 * y1));
    }
    seen.insert({m00, m01, m10, m11, t[0], t[1]});
  }
  EXPECT_EQ(seen.size(), 432u);
}

TEST(AffineGroup, IsNormalizerOfTranslations) {
  for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 2}, {2, 3}, {1, 5}, {1, 7}}) {
    const auto t = translation_group(n, p);
    EXPECT_EQ(t.order(), ipow(p, n));
    EXPECT_EQ(normalizer_in_sym(t), affine_perm_group(n, p));
  }
}

TEST(Projective, Orders) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    const auto g = pgl2_perm(p);
    EXPECT_EQ(g.order(), (p + 1) * p * (p - 1)) << p;
    EXPECT_EQ(g.degree(), p + 1);
    EXPECT_EQ(stabilizer(g, static_cast<std::uint32_t>(p)).order(), p * (p - 1));
  }
  EXPECT_EQ(pgl2_perm(5).order(), 120u);
  EXPECT_EQ(pgl2_perm(3).order(), 24u);
  EXPECT_EQ(kind_of([] { pgl2_perm(4); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { pgl2_perm(37); }), ErrorKind::CapExceeded);
}

TEST(Projective, SharplyThreeTransitive) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto g = pgl2_perm(p);
    const auto inf = static_cast<std::uint32_t>(p);
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> triples;
    for (const auto& s : g.elements()) triples.emplace(s(0), s(1), s(inf));
    EXPECT_EQ(triples.size(), g.order());  // each ordered triple hit exactly once
    EXPECT_EQ(triples.size(), (p + 1) * p * (p - 1));
  }
}

TEST(Projective, HomographiesMatchDirectFormula) {
  const std::uint64_t p = 7;
  const auto g = pgl2_perm(p);
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d) {
          if ((a * d + p * p - b * c) % p == 0) continue;
          EXPECT_TRUE(g.contains(homography(p, a, b, c, d)));
        }
}

TEST(Canon2, Examples) {
  const auto f5 = field_new(5, 1);
  const auto split = canonical_form_2x2(parse_matrix(f5, "2,0;0,3"));
  EXPECT_EQ(split.kind, Canon2Kind::split_distinct);
  EXPECT_EQ(split.signature(), (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}));

  const auto f3 = field_new(3, 1);
  const auto a = parse_matrix(f3, "0,2;1,0");
  const auto ns = canonical_form_2x2(a);
  EXPECT_EQ(ns.kind, Canon2Kind::nonsplit_pair);
  EXPECT_EQ(ns.extension_degree, 2u);
  EXPECT_EQ(ns.splitting_field.size(), 9u);
  ASSERT_EQ(ns.blocks.size(), 2u);
  EXPECT_EQ(ns.blocks[0].eigenvalue.frobenius(), ns.blocks[1].eigenvalue);
  EXPECT_EQ(ns.blocks[0].eigenvalue * ns.blocks[0].eigenvalue, ns.splitting_field.from_int(2));
  EXPECT_TRUE(ns.verify(a));

  const auto rep = canonical_form_2x2(parse_matrix(f5, "1,0;1,1"));
  EXPECT_EQ(rep.kind, Canon2Kind::repeated);
  EXPECT_EQ(rep.signature(), (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 2}}));
  EXPECT_EQ(rep.block_matrix().to_string(), "1,0;1,1");

  const auto scalar = canonical_form_2x2(parse_matrix(f5, "3,0;0,3"));
  EXPECT_EQ(scalar.kind, Canon2Kind::repeated);
  EXPECT_EQ(scalar.signature(), (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 1}}));

  EXPECT_EQ(kind_of([&] { canonical_form_2x2(parse_matrix(f5, "1,2;2,4")); }), ErrorKind::SingularMatrix);
  EXPECT_EQ(kind_of([&] { canonical_form_2x2(MatGf::identity(f5, 3)); }), ErrorKind::DimensionMismatch);
}

TEST(Canon2Property, ExhaustiveGlTwoThree) {
  const auto f3 = field_new(3, 1);
  std::mt19937_64 rng(21);
  int count = 0;
  std::map<Canon2Kind, int> tally;
  for (int code = 0; code < 81; ++code) {
    IntMat m{{code % 3, code / 3 % 3}, {code / 9 % 3, code / 27 % 3}};
    if (leibniz_det(m, 3) == 0) continue;
    ++count;
    const auto a = MatGf::from_ints(f3, m);
    const auto c = canonical_form_2x2(a);
    ASSERT_TRUE(c.kind.has_value());
    EXPECT_EQ(*c.kind, tag_oracle(m, 3));
    ++tally[*c.kind];
    EXPECT_TRUE(c.verify(a));
    const auto general = canonical_form(a);
    EXPECT_EQ(general.kind, c.kind);
    EXPECT_EQ(general.signature(), c.signature());
    for (int k = 0; k < 10; ++k) {
      const auto p = random_invertible(f3, 2, rng);
      const auto b = p * a * p.inverse();
      const auto cb = canonical_form_2x2(b);
      EXPECT_EQ(cb.kind, c.kind);
      EXPECT_EQ(cb.signature(), c.signature());
    }
  }
  EXPECT_EQ(count, 48);
  // class sizes: split 3*... fixed by the discriminant oracle
  EXPECT_EQ(tally[Canon2Kind::split_distinct] + tally[Canon2Kind::nonsplit_pair] + tally[Canon2Kind::repeated], 48);
}

TEST(Canon2Property, AgreesWithGeneralFormOverF5) {
  const auto f5 = field_new(5, 1);
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_invertible(f5, 2, rng);
    const auto c2 = canonical_form_2x2(a);
    const auto cn = canonical_form(a);
    EXPECT_EQ(c2.kind, cn.kind);
    EXPECT_EQ(c2.extension_degree, cn.extension_degree);
    EXPECT_EQ(c2.signature(), cn.signature());
  }
}

TEST(Canon, Examples) {
  const auto f5 = field_new(5, 1);
  const auto scalar = canonical_form(f5.from_int(4) * MatGf::identity(f5, 3));
  EXPECT_EQ(scalar.signature(), (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{4, 1}, {4, 1}, {4, 1}}));

  // companion matrix of (x-1)^2 (x-2) = x^3 + x^2 + 3 mod 5
  const auto comp = parse_matrix(f5, "0,0,2;1,0,0;0,1,4");
  EXPECT_EQ(charpoly(comp), UniPoly(Ring::mod(5), std::vector<int>{3, 0, 1, 1}));
  const auto c = canonical_form(comp);
  EXPECT_EQ(c.signature(), (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(c.block_matrix().to_string(), "1,0,0;1,1,0;0,0,2");
  EXPECT_TRUE(c.verify(comp));

  EXPECT_EQ(kind_of([&] { canonical_form(MatGf::identity(f5, 5)); }), ErrorKind::CapExceeded);
  EXPECT_EQ(kind_of([&] { canonical_form(parse_matrix(f5, "1,0;0,0")); }), ErrorKind::SingularMatrix);
}

TEST(CanonProperty, RankSequenceOracle) {
  std::mt19937_64 rng(23);
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto f = field_new(static_cast<std::uint64_t>(p), 1);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 60; ++t) {
      const std::size_t n = 2 + rng() % 3;
      // build A = P J P^-1 from random split data so block structure is rich
      IntMat j(n, std::vector<std::int64_t>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        j[i][i] = 1 + static_cast<std::int64_t>(rng() % (p - 1));
        if (i > 0 && rng() % 2) {
          j[i][i] = j[i - 1][i - 1];
          j[i][i - 1] = 1;
        }
      }
      const auto jm = MatGf::from_ints(f, j);
      const auto pm = random_invertible(f, n, rng);
      const auto a = pm * jm * pm.inverse();
      IntMat ai(n, std::vector<std::int64_t>(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) ai[r][col] = a.at(r, col).index();
      const auto c = canonical_form(a);
      ASSERT_TRUE(c.verify(a));
      EXPECT_EQ(c.extension_degree, 1u);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> expected;
      for (std::int64_t lambda = 1; lambda < p; ++lambda)
        for (auto s : block_sizes_oracle(ai, lambda, p)) expected.emplace_back(static_cast<std::uint32_t>(lambda), s);
      EXPECT_EQ(c.signature(), expected);
      std::uint32_t total = 0;
      for (const auto& b : c.blocks) total += b.size;
      EXPECT_EQ(total, n);
      ++checked;
    }
  }
}

TEST(CanonProperty, RandomMatricesWithExtensions) {
  std::mt19937_64 rng(24);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto f = field_new(p, 1);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + rng() % 3;
      const auto a = random_invertible(f, n, rng);
      const auto c = canonical_form(a);
      EXPECT_TRUE(c.verify(a));
      EXPECT_EQ(c.splitting_field.size(), ipow(p, c.extension_degree));
      EXPECT_TRUE(std::is_sorted(c.blocks.begin(), c.blocks.end(), [](const auto& x, const auto& y) {
        if (x.eigenvalue.index() != y.eigenvalue.index()) return x.eigenvalue.index() < y.eigenvalue.index();
        return x.size > y.size;
      }));
      // similarity invariance
      const auto q = random_invertible(f, n, rng);
      EXPECT_EQ(canonical_form(q * a * q.inverse()).signature(), c.signature());
    }
  }
}

TEST(Ode, Examples) {
  auto descr = [](const OdeBasis& b) {
    std::vector<std::pair<Rational, unsigned>> out;
    for (const auto& t : b.terms) out.emplace_back(t.sigma, t.power);
    return out;
  };
  EXPECT_EQ(descr(ode_solution_basis(parse_rational_matrix("3"))),
            (std::vector<std::pair<Rational, unsigned>>{{3, 0}}));
  const auto jordan = ode_solution_basis(parse_rational_matrix("3,0;1,3"));
  EXPECT_EQ(descr(jordan), (std::vector<std::pair<Rational, unsigned>>{{3, 0}, {3, 1}}));
  EXPECT_EQ(jordan.terms[1].to_string(), "t*e^(3t)");
  EXPECT_EQ(kind_of([] { ode_solution_basis(parse_rational_matrix("0,-1;1,0")); }), ErrorKind::IrrationalEigenvalues);
  EXPECT_EQ(kind_of([] { ode_solution_basis(parse_rational_matrix("1,0;0,1;1,1")); }), ErrorKind::DimensionMismatch);

  const auto three = ode_solution_basis(parse_rational_matrix("2,0,0;1,2,0;0,0,5"));
  EXPECT_EQ(descr(three), (std::vector<std::pair<Rational, unsigned>>{{2, 0}, {2, 1}, {5, 0}}));
  EXPECT_EQ(descr(ode_solution_basis(parse_rational_matrix("1/2,0;0,-3/4"))),
            (std::vector<std::pair<Rational, unsigned>>{{Rational(-3, 4), 0}, {Rational(1, 2), 0}}));
}

TEST(OdeProperty, CountAndRankSequence) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng() % 4;
    // A = P J P^-1 with P unit lower triangular (integer inverse)
    RatMatrix j(n, std::vector<Rational>(n, 0)), pm(n, std::vector<Rational>(n, 0)), pinv;
    for (std::size_t i = 0; i < n; ++i) {
      j[i][i] = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2));
      if (i > 0 && rng() % 2) {
        j[i][i] = j[i - 1][i - 1];
        j[i][i - 1] = 1;
      }
      pm[i][i] = 1;
      for (std::size_t k = 0; k < i; ++k) pm[i][k] = static_cast<int>(rng() % 5) - 2;
    }
    // inverse of unit lower triangular by forward substitution
    pinv.assign(n, std::vector<Rational>(n, 0));
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t i = 0; i < n; ++i) {
        Rational v = i == col ? 1 : 0;
        for (std::size_t k = 0; k < i; ++k) v -= pm[i][k] * pinv[k][col];
        pinv[i][col] = v;
      }
    auto mul = [&](const RatMatrix& a, const RatMatrix& b) {
      RatMatrix out(n, std::vector<Rational>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t c = 0; c < n; ++c) out[i][c] += a[i][k] * b[k][c];
      return out;
    };
    const auto a = mul(mul(pm, j), pinv);
    const auto basis = ode_solution_basis(a);
    EXPECT_EQ(basis.terms.size(), n);
    // block multiset from J directly
    std::map<Rational, std::vector<unsigned>> expected;
    for (std::size_t i = 0; i < n;) {
      std::size_t k = i + 1;
      while (k < n && j[k][k - 1] == 1) ++k;
      expected[j[i][i]].push_back(static_cast<unsigned>(k - i));
      i = k;
    }
    std::vector<std::pair<Rational, unsigned>> want;
    for (auto& [sigma, sizes] : expected) {
      std::sort(sizes.rbegin(), sizes.rend());
      for (auto s : sizes) want.emplace_back(sigma, s);
    }
    EXPECT_EQ(basis.blocks, want);
  }
}
