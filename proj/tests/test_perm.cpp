#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "ordre/perm.hpp"

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

Permutation random_perm(std::uint32_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Classical Lagrange interpolation over Z/p: sum_c s(c) prod_{d != c} (x - d)/(c - d).
std::vector<std::uint64_t> lagrange(const Permutation& s, std::uint64_t p) {
  std::vector<std::uint64_t> out(p, 0);
  for (std::uint64_t c = 0; c < p; ++c) {
    std::vector<std::uint64_t> basis{1};
    std::uint64_t denom = 1;
    for (std::uint64_t d = 0; d < p; ++d) {
      if (d == c) continue;
      std::vector<std::uint64_t> next(basis.size() + 1, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] = (next[i + 1] + basis[i]) % p;
        next[i] = (next[i] + basis[i] * (p - d)) % p;
      }
      basis = next;
      denom = denom * ((c + p - d) % p) % p;
    }
    const std::uint64_t scale = s(static_cast<std::uint32_t>(c)) * inv_mod(denom, p) % p;
    for (std::size_t i = 0; i < basis.size() && i < p; ++i) out[i] = (out[i] + basis[i] * scale) % p;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint64_t> digits(const UniPoly& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(numerator(c).convert_to<std::uint64_t>());
  return out;
}

}  // namespace

TEST(Cycles, Parse) {
  EXPECT_EQ(parse_cycles("(0 1 2)", 4).images(), (std::vector<std::uint32_t>{1, 2, 0, 3}));
  EXPECT_TRUE(parse_cycles("()", 5).is_identity());
  EXPECT_EQ(parse_cycles("()", 5).degree(), 5u);
  EXPECT_EQ(parse_cycles("(0 3)(1 2)", 4).images(), (std::vector<std::uint32_t>{3, 2, 1, 0}));
  EXPECT_EQ(kind_of([] { parse_cycles("(0 1)(1 2)", 3); }), ErrorKind::RepeatedPoint);
  EXPECT_EQ(kind_of([] { parse_cycles("(0 4)", 3); }), ErrorKind::PointOutOfRange);
  EXPECT_EQ(kind_of([] { parse_cycles("(0 1", 3); }), ErrorKind::MalformedNotation);
  EXPECT_EQ(kind_of([] { parse_cycles("0 1)", 3); }), ErrorKind::MalformedNotation);
  EXPECT_EQ(kind_of([] { parse_cycles("(0 a)", 3); }), ErrorKind::MalformedNotation);
}

TEST(Cycles, FormatRoundTrip) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(format_cycles(Permutation::identity(3)), "()");
  EXPECT_EQ(format_cycles(parse_cycles("(2 0 1)(3 4)", 6)), "(0 1 2)(3 4)");
  for (int t = 0; t < 200; ++t) {
    const auto s = random_perm(1 + rng() % 9, rng);
    EXPECT_EQ(parse_cycles(format_cycles(s), s.degree()), s);
  }
}

TEST(Cycles, ImageAndListForms) {
  EXPECT_EQ(parse_images("[1, 2, 0]").images(), (std::vector<std::uint32_t>{1, 2, 0}));
  EXPECT_EQ(kind_of([] { parse_images("[1,1,0]"); }), ErrorKind::RepeatedPoint);
  EXPECT_EQ(parse_permutation("[1,0]"), parse_cycles("(0 1)", 2));
  const auto list = parse_permutation_list("(0 1 2 3),(0 1)");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].degree(), 4u);
  EXPECT_EQ(list[1], parse_cycles("(0 1)", 4));
}

TEST(Compose, ConventionApplyRightFirst) {
  const auto g = parse_cycles("(0 1)", 3), h = parse_cycles("(1 2)", 3);
  const auto gh = compose(g, h);
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_EQ(gh(x), g(h(x)));
  EXPECT_EQ(gh.images(), (std::vector<std::uint32_t>{1, 2, 0}));  // 0 -> 1 -> 2 -> 0
  EXPECT_EQ(kind_of([] { compose(Permutation::identity(2), Permutation::identity(3)); }), ErrorKind::DegreeMismatch);
}

TEST(Compose, InverseAndConjugate) {
  std::mt19937_64 rng(2);
  const auto three = parse_cycles("(0 1 2)", 6);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_perm(6, rng), h = random_perm(6, rng);
    EXPECT_TRUE((g * inverse(g)).is_identity());
    EXPECT_EQ(conjugate(g, h).cycle_type(), h.cycle_type());
    EXPECT_EQ(conjugate(g, three).cycle_type(), (std::vector<std::uint32_t>{3, 1, 1, 1}));
    for (std::uint32_t x = 0; x < 6; ++x) EXPECT_EQ(conjugate(g, h)(g(x)), g(h(x)));
    const auto c = commutator(g, h);
    EXPECT_EQ(c, inverse(g) * inverse(h) * g * h);
  }
}

TEST(Order, CycleLcm) {
  EXPECT_EQ(parse_cycles("(0 1)(2 3 4)", 5).order(), 6u);
  EXPECT_EQ(Permutation::identity(4).order(), 1u);
}

TEST(Analytic, Examples) {
  const auto f5 = field_new(5, 1);
  EXPECT_EQ(analytic_form(Permutation::identity(5), f5).univariate(), UniPoly(Ring::mod(5), std::vector<int>{0, 1}));
  const auto shift = parse_cycles("(0 1 2 3 4)", 5);
  EXPECT_EQ(analytic_form(shift, f5).univariate(), UniPoly(Ring::mod(5), std::vector<int>{1, 1}));
  const auto t = parse_cycles("(0 1)", 5);
  const auto phi = analytic_form(t, f5).univariate();
  EXPECT_EQ(digits(phi), lagrange(t, 5));
  // x + [x == 0] - [x == 1] with [x == c] = 1 - (x - c)^4
  EXPECT_EQ(phi.to_string(), "x^3 + x^2 + 2*x + 1");
  for (std::uint32_t i = 0; i < 5; ++i) EXPECT_EQ(phi.eval(i), Rational(t(i)));
}

TEST(Analytic, Errors) {
  EXPECT_EQ(kind_of([] { analytic_form(Permutation::identity(6), field_new(5, 1)); }), ErrorKind::DegreeNotPrimePower);
  EXPECT_EQ(kind_of([] { analytic_form(Permutation::identity(7), field_new(5, 1)); }), ErrorKind::ContextMismatch);
  EXPECT_EQ(kind_of([] { analytic_form(Permutation::identity(4), field_new(2, 2)).univariate(); }),
            ErrorKind::DegreeMismatch);
}

TEST(AnalyticProperty, ExhaustiveSmallPrimes) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto f = field_new(p, 1);
    std::vector<std::uint32_t> v(p);
    std::iota(v.begin(), v.end(), 0u);
    do {
      const Permutation s(v);
      const auto form = analytic_form(s, f);
      EXPECT_LE(form.univariate().degree(), static_cast<long>(p - 1));
      EXPECT_EQ(digits(form.univariate()), lagrange(s, p));
      for (std::uint32_t i = 0; i < p; ++i) EXPECT_EQ(form.eval(i), s(i));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST(AnalyticProperty, SampledSevenAndExtensions) {
  std::mt19937_64 rng(5);
  const auto f7 = field_new(7, 1);
  for (int t = 0; t < 300; ++t) {
    const auto s = random_perm(7, rng);
    const auto form = analytic_form(s, f7);
    EXPECT_EQ(digits(form.univariate()), lagrange(s, 7));
    for (std::uint32_t i = 0; i < 7; ++i) EXPECT_EQ(form.eval(i), s(i));
  }
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    const auto f = field_new(p, n);
    for (int t = 0; t < 30; ++t) {
      const auto s = random_perm(f.size(), rng);
      const auto form = analytic_form(s, f);
      ASSERT_EQ(form.coordinates.size(), n);
      for (const auto& c : form.coordinates)
        for (const auto& [m, coeff] : c.terms())
          for (auto e : m) EXPECT_LT(e, p);
      for (std::uint32_t i = 0; i < f.size(); ++i) EXPECT_EQ(form.eval(i), s(i));
    }
  }
}

TEST(Affine, ClassifyExamples) {
  const auto f7 = field_new(7, 1);
  const auto geo = classify_affine(affine_permutation(f7.from_int(3), f7.zero()), f7);
  EXPECT_EQ(geo.kind, AffineKind::geometric);
  EXPECT_EQ(geo.a, f7.from_int(3));
  const auto ari = classify_affine(affine_permutation(f7.one(), f7.from_int(2)), f7);
  EXPECT_EQ(ari.kind, AffineKind::arithmetic);
  EXPECT_EQ(ari.b, f7.from_int(2));
  const auto gen = classify_affine(affine_permutation(f7.from_int(2), f7.from_int(5)), f7);
  EXPECT_EQ(gen.kind, AffineKind::affine);

  const auto f5 = field_new(5, 1);
  const auto t = parse_cycles("(0 1)", 5);
  EXPECT_EQ(classify_affine(t, f5).kind, AffineKind::none);
  // exhaustive oracle: no (a, b) reproduces the transposition
  for (std::uint64_t a = 1; a < 5; ++a)
    for (std::uint64_t b = 0; b < 5; ++b) {
      bool all = true;
      for (std::uint32_t i = 0; i < 5; ++i) all = all && t(i) == (a * i + b) % 5;
      EXPECT_FALSE(all);
    }
}

TEST(Affine, ClassificationImpliesLinearForm) {
  std::mt19937_64 rng(9);
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {7, 1}, {3, 2}}) {
    const auto f = field_new(p, n);
    for (std::uint32_t a = 1; a < f.size(); ++a)
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        const auto s = affine_permutation(f.element(a), f.element(b));
        const auto cls = classify_affine(s, f);
        ASSERT_NE(cls.kind, AffineKind::none);
        if (n == 1) {
          EXPECT_LE(analytic_form(s, f).univariate().degree(), 1);
        }
      }
    for (int t = 0; t < 50; ++t) {
      const auto s = random_perm(f.size(), rng);
      if (classify_affine(s, f).kind != AffineKind::none && n == 1) {
        EXPECT_LE(analytic_form(s, f).univariate().degree(), 1);
      }
    }
  }
}

TEST(Affine, ClosedUnderCompositionAndInverse) {
  const auto f = field_new(5, 1);
  std::set<Permutation> affine;
  for (std::uint32_t a = 1; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b) affine.insert(affine_permutation(f.element(a), f.element(b)));
  ASSERT_EQ(affine.size(), 20u);
  for (const auto& x : affine) {
    EXPECT_TRUE(affine.count(inverse(x)));
    for (const auto& y : affine) EXPECT_TRUE(affine.count(x * y));
  }
}

TEST(Affine, Decompose) {
  const auto f5 = field_new(5, 1);
  EXPECT_EQ(affine_decompose(f5.one(), f5.one(), f5).k, 0u);
  EXPECT_EQ(affine_decompose(f5.primitive(), f5.zero(), f5).k, 1u);
  const auto f7 = field_new(7, 1);
  const auto d = affine_decompose(f7.from_int(4), f7.from_int(3), f7);
  EXPECT_EQ(d.k, 4u);
  EXPECT_EQ(d.b, f7.from_int(3));
  EXPECT_EQ(kind_of([&] { affine_decompose(f7.zero(), f7.one(), f7); }), ErrorKind::ZeroMultiplier);
  EXPECT_EQ(kind_of([&] { affine_permutation(f7.zero(), f7.one()); }), ErrorKind::ZeroMultiplier);

  // recompose: k geometric steps then one translation
  const auto geo = affine_permutation(f7.primitive(), f7.zero());
  auto s = Permutation::identity(7);
  for (std::uint32_t k = 0; k < d.k; ++k) s = geo * s;
  s = affine_permutation(f7.one(), d.b) * s;
  EXPECT_EQ(s, affine_permutation(f7.from_int(4), f7.from_int(3)));
}
