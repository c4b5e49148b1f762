#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "coxlink/polynomial.hpp"
#include "coxlink/roots.hpp"
#include "coxlink/spectra.hpp"

using namespace coxlink;

namespace {

// Oracle values from 40-digit mpmath.polyroots runs, frozen here.
constexpr long double kLehmerMeasure = 1.1762808182599175065L;
constexpr long double kTriangleTailMeasure = 2.3692054070924665463L;

const IntPolynomial kTriangleTail{1, 1, -3, 1, 1};

IntPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-6, 6);
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST(IntPolynomial, ArithmeticAndPrinting) {
  const IntPolynomial p{1, 1, -1, -1};
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.to_string(), "1 + t - t^2 - t^3");
  EXPECT_EQ((IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{1, -1}), p);
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ(p(Integer(2)), Integer(1 + 2 - 4 - 8));
}

TEST(IntPolynomial, ExactDivision) {
  const IntPolynomial a{-1, 0, 0, 0, 0, 1};  // t^5 - 1
  auto [q, r] = divmod_exact(a, IntPolynomial{-1, 1});
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, (IntPolynomial{1, 1, 1, 1, 1}));
  EXPECT_THROW(divmod_exact(IntPolynomial{1, 0, 1}, IntPolynomial{1, 2}), ValidationError);
}

TEST(IntPolynomial, GcdAndSquarefree) {
  const IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{1, 1} * IntPolynomial{1, 0, 1};
  const IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{2, 3};
  EXPECT_EQ(gcd(a, b), (IntPolynomial{-1, 1}));

  // (t-1)^2 (t+1)^3 (t^2+1)
  const IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{1, 1} * IntPolynomial{1, 1} *
                          IntPolynomial{1, 1} * IntPolynomial{1, 0, 1};
  const auto sf = squarefree_factors(p);
  ASSERT_EQ(sf.size(), 3u);
  EXPECT_EQ(sf[0].first, (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(sf[0].second, 1);
  EXPECT_EQ(sf[1].first, (IntPolynomial{-1, 1}));
  EXPECT_EQ(sf[1].second, 2);
  EXPECT_EQ(sf[2].first, (IntPolynomial{1, 1}));
  EXPECT_EQ(sf[2].second, 3);
}

TEST(IntPolynomial, SquarefreeRebuildsInput) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial p = random_poly(rng, 1 + trial % 3);
    const IntPolynomial q = random_poly(rng, 1 + trial % 2);
    const IntPolynomial full = p.primitive() * p.primitive() * q.primitive();
    IntPolynomial rebuilt{1};
    for (const auto& [f, k] : squarefree_factors(full))
      for (int e = 0; e < k; ++e) rebuilt = rebuilt * f;
    EXPECT_EQ(rebuilt.primitive(), full.primitive()) << full;
  }
}

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic(3), (IntPolynomial{1, 1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPolynomial{1, 0, -1, 0, 1}));
  for (int n = 1; n <= 30; ++n) {
    IntPolynomial prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, IntPolynomial::monomial(n) - IntPolynomial{1});
    EXPECT_EQ(cyclotomic(n).degree(), totient(n));
  }
}

TEST(Cyclotomic, Split) {
  const IntPolynomial p = cyclotomic(1) * cyclotomic(1) * cyclotomic(2) * cyclotomic(2);  // (t-1)^2 (t+1)^2
  const auto s = split_cyclotomic(p);
  EXPECT_TRUE(s.all_roots_of_unity());
  EXPECT_EQ(s.multiplicity_of(1), 2);
  EXPECT_EQ(s.multiplicity_of(2), 2);

  const auto l = split_cyclotomic(lehmer_polynomial());
  EXPECT_FALSE(l.all_roots_of_unity());
  EXPECT_EQ(l.remainder, lehmer_polynomial());

  const auto t = split_cyclotomic(kTriangleTail * cyclotomic(6));
  EXPECT_EQ(t.multiplicity_of(6), 1);
  EXPECT_EQ(t.remainder, kTriangleTail);
}

TEST(Reciprocal, Examples) {
  EXPECT_TRUE(is_reciprocal(lehmer_polynomial()));
  EXPECT_FALSE(is_reciprocal(IntPolynomial{-2, 1}));
  EXPECT_TRUE(is_reciprocal(kTriangleTail));
  EXPECT_TRUE(is_reciprocal(IntPolynomial{1, -1}));  // t - 1 is anti-reciprocal
  EXPECT_FALSE(is_reciprocal(IntPolynomial{0, 1, 1}));
  EXPECT_THROW(is_reciprocal(IntPolynomial()), ValidationError);
}

TEST(CanonicalForm, Equivalence) {
  const IntPolynomial a{1, 1, -1, -1};
  const IntPolynomial monic = -a;                     // t^3 + t^2 - t - 1
  EXPECT_TRUE(equivalent(a, monic));
  EXPECT_TRUE(equivalent(a, a.negated_variable()));  // 1 - t - t^2 + t^3
  EXPECT_FALSE(equivalent(a, IntPolynomial{1, -1, 1, -1}));
  EXPECT_EQ(canonical_form(a), canonical_form(-a.negated_variable()));
  EXPECT_GT(canonical_form(a).leading(), 0);
}

TEST(Roots, SimpleCases) {
  auto r = roots(IntPolynomial{-1, 0, 1});
  ASSERT_EQ(r.roots.size(), 2u);
  std::vector<long double> reals;
  for (auto& c : r.roots) {
    EXPECT_NEAR(static_cast<double>(c.value.imag()), 0.0, 1e-12);
    reals.push_back(c.value.real());
  }
  std::sort(reals.begin(), reals.end());
  EXPECT_NEAR(static_cast<double>(reals[0]), -1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(reals[1]), 1.0, 1e-12);

  auto i = roots(IntPolynomial{1, 0, 1});
  ASSERT_EQ(i.roots.size(), 2u);
  for (auto& c : i.roots) {
    EXPECT_NEAR(static_cast<double>(c.value.real()), 0.0, 1e-12);
    EXPECT_NEAR(static_cast<double>(std::abs(c.value.imag())), 1.0, 1e-12);
  }
  EXPECT_THROW(roots(IntPolynomial{3}), ValidationError);
}

TEST(Roots, MultiplicitiesAreExact) {
  const IntPolynomial p = cyclotomic(1) * cyclotomic(1) * cyclotomic(2) * cyclotomic(2) * cyclotomic(2);
  auto r = roots(p);
  EXPECT_EQ(r.total_multiplicity(), 5);
  ASSERT_EQ(r.roots.size(), 2u);
  for (auto& c : r.roots) EXPECT_EQ(c.multiplicity, c.value.real() > 0 ? 2 : 3);
  EXPECT_LE(r.residual, 1e-10L);
}

TEST(Roots, TriangleWithTailHasOneReciprocalPairOffTheCircle) {
  auto r = roots(kTriangleTail);
  ASSERT_EQ(r.total_multiplicity(), 4);
  int outside = 0, inside = 0;
  long double product = 1;
  for (auto& c : r.values()) {
    const long double m = std::abs(c);
    if (m > 1 + 1e-9L) ++outside, product *= m;
    if (m < 1 - 1e-9L) ++inside;
  }
  EXPECT_EQ(outside, 1);
  EXPECT_EQ(inside, 1);
  EXPECT_NEAR(static_cast<double>(product), 2.36921, 1e-5);
}

// Property: the monic product of (t - root) reproduces p / lc.
TEST(Roots, ReconstructionProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int degree = 1 + trial % 12;
    const IntPolynomial p = random_poly(rng, degree);
    auto r = roots(p);
    ASSERT_EQ(r.total_multiplicity(), p.degree());
    EXPECT_LE(r.residual, 1e-10L);
    std::vector<Complex> prod{Complex(1)};
    for (const auto& z : r.values()) {
      std::vector<Complex> next(prod.size() + 1, Complex(0));
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] += prod[k];
        next[k] -= z * prod[k];
      }
      prod = std::move(next);
    }
    const long double lc = p.leading().convert_to<long double>();
    long double maxc = 0;
    for (const auto& c : p.coefficients()) maxc = std::max(maxc, std::abs(c.convert_to<long double>() / lc));
    for (int k = 0; k <= p.degree(); ++k) {
      const long double want = p.coeff(k).convert_to<long double>() / lc;
      EXPECT_LE(std::abs(prod[k] - Complex(want)), 1e-6L * std::max(1.0L, maxc)) << p << " coefficient " << k;
    }
  }
}

TEST(Mahler, Examples) {
  EXPECT_DOUBLE_EQ(static_cast<double>(mahler_measure(IntPolynomial{1, 1, 1})), 1.0);
  EXPECT_NEAR(static_cast<double>(mahler_measure(kTriangleTail)), 2.36921, 1e-4);
  EXPECT_NEAR(static_cast<double>(mahler_measure(kTriangleTail)), static_cast<double>(kTriangleTailMeasure), 1e-12);
  EXPECT_NEAR(static_cast<double>(mahler_measure(lehmer_polynomial())), 1.17628, 1e-5);
  EXPECT_NEAR(static_cast<double>(lehmer_measure()), static_cast<double>(kLehmerMeasure), 1e-12);
  EXPECT_NEAR(static_cast<double>(mahler_measure(IntPolynomial{-2, 1})), 2.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(mahler_measure(IntPolynomial{1, 0, 3})), 3.0, 1e-12);  // |lc| counts
}

// Property: mu(p) = mu(+-p(+-t)).
TEST(Mahler, InvariantUnderCanonicalEquivalence) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial p = random_poly(rng, 2 + trial % 10);
    const long double mu = mahler_measure(p);
    for (const auto& q : {-p, p.negated_variable(), -p.negated_variable()})
      EXPECT_NEAR(static_cast<double>(mahler_measure(q)), static_cast<double>(mu), 1e-9 * static_cast<double>(mu));
  }
}

TEST(SpectralRadius, MaxRootModulus) {
  EXPECT_DOUBLE_EQ(static_cast<double>(max_root_modulus(cyclotomic(5) * cyclotomic(1))), 1.0);
  EXPECT_NEAR(static_cast<double>(max_root_modulus(lehmer_polynomial())), static_cast<double>(kLehmerMeasure), 1e-12);
}

TEST(Classify, FromPolynomials) {
  EXPECT_EQ(classify(cyclotomic(2) * cyclotomic(4)), CoxeterClass::spherical);  // A_3 Coxeter polynomial
  EXPECT_EQ(classify(cyclotomic(1) * cyclotomic(1) * cyclotomic(2) * cyclotomic(2)), CoxeterClass::affine);
  EXPECT_EQ(classify(lehmer_polynomial()), CoxeterClass::higher);
  EXPECT_EQ(classify(kTriangleTail), CoxeterClass::higher);
}

TEST(LehmerGate, Verdicts) {
  const IntPolynomial affine = cyclotomic(1) * cyclotomic(1) * cyclotomic(2) * cyclotomic(2);
  EXPECT_EQ(lehmer_gate(affine).verdict, GateVerdict::trivial);
  const auto tail = lehmer_gate(kTriangleTail);
  EXPECT_EQ(tail.verdict, GateVerdict::pass);
  EXPECT_NEAR(static_cast<double>(tail.measure), 2.36921, 1e-4);
  EXPECT_EQ(lehmer_gate(lehmer_polynomial()).verdict, GateVerdict::pass);
  EXPECT_EQ(lehmer_gate(lehmer_polynomial().negated_variable()).verdict, GateVerdict::pass);
  EXPECT_EQ(lehmer_gate(IntPolynomial{-1, -1, 1}).verdict, GateVerdict::pass);
  // No small integer polynomial sits below the bound, so exercise the failing
  // branch through the margin.
  const auto strict = lehmer_gate(IntPolynomial{-1, -1, 1}, -1.0L);
  EXPECT_EQ(strict.verdict, GateVerdict::fail);
  EXPECT_NEAR(static_cast<double>(strict.measure), 1.6180339887, 1e-9);
}
