#include <hyperrec/analysis.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <cmath>
#include <iostream>

namespace hr = hyperrec;
using hr::ComplexValue;
using hr::Rational;
using Params = hr::RecurrenceParams<Rational>;

namespace {

const ComplexValue i_unit{0.0, 1.0};

/// Real root of 1 + y - y^2 - alpha y^3 on (0, 1]; t = -i y maps the
/// cubic in t at z = i onto it.
double real_y_root(double alpha) {
  return oracle::bisect([alpha](double y) { return 1 + y - y * y - alpha * y * y * y; }, 0.0, 1.0);
}

}  // namespace

TEST(Certify, AdmissibleFamiliesAreHyperbolicAndContained) {
  for (const Rational alpha : {Rational(1, 9), Rational(1, 20), Rational(-1), Rational(-10)}) {
    const auto reports = hr::certify(Params::from_alpha(alpha), 40);
    ASSERT_EQ(reports.size(), 40u);
    for (const auto& r : reports) {
      EXPECT_TRUE(r.hyperbolic) << alpha << " n=" << r.n;
      EXPECT_EQ(r.degree, static_cast<int>(r.n));
      EXPECT_EQ(r.squarefree_degree, r.degree);
      ASSERT_TRUE(r.lambda.has_value());
      EXPECT_TRUE(r.contained) << alpha << " n=" << r.n;
      EXPECT_TRUE(r.contained_exact) << alpha << " n=" << r.n;
      EXPECT_LT(r.max_abs_root, *r.lambda);
    }
  }
}

TEST(Certify, ExactOnlyModeForANegativeAlpha) {
  for (const auto& r : hr::certify(Params(Rational(1), Rational(1), Rational(-9)), 60, false)) {
    EXPECT_TRUE(r.hyperbolic) << r.n;
    EXPECT_TRUE(r.contained_exact) << r.n;
    EXPECT_EQ(r.contained, r.contained_exact);
    EXPECT_EQ(r.max_abs_root, 0.0);
  }
}

TEST(Certify, NonNormalizedParametersUseScaledLambda) {
  // a = 2, b = 9, c = 1: alpha = 1/18, roots scale by 3/2.
  const Params p(Rational(2), Rational(9), Rational(1));
  for (const auto& r : hr::certify(p, 25)) {
    ASSERT_TRUE(r.lambda.has_value());
    EXPECT_NEAR(*r.lambda, hr::lambda_bound(Rational(1, 18)) * 1.5, 1e-12);
    EXPECT_TRUE(r.hyperbolic && r.contained) << r.n;
  }
}

TEST(Certify, ReportsTheFirstFailureAboveTheThreshold) {
  const auto reports = hr::certify(Params::from_alpha(Rational(1, 8)), 18);
  for (const auto& r : reports) EXPECT_EQ(r.hyperbolic, r.n < 17) << r.n;
  EXPECT_FALSE(reports.front().lambda.has_value());
  EXPECT_LT(reports[16].sturm_count, reports[16].squarefree_degree);
}

TEST(FirstNonreal, FrozenRegressionValues) {
  struct Frozen {
    Params params;
    std::size_t n;
  };
  const Frozen frozen[] = {
      {Params::from_alpha(Rational(1, 8)), 17}, {Params::from_alpha(Rational(1, 5)), 7},
      {Params::from_alpha(Rational(1, 2)), 5},  {Params::from_alpha(Rational(2)), 4},
      {Params::from_alpha(Rational(1)), 4},     {Params(Rational(1), Rational(-1), Rational(1, 10)), 2},
  };
  for (const auto& f : frozen) {
    const auto rec = hr::first_nonreal(f.params, 300);
    ASSERT_TRUE(rec.first_nonreal_n.has_value());
    EXPECT_EQ(*rec.first_nonreal_n, f.n);
    EXPECT_LT(rec.sturm_count, rec.squarefree_degree);
    ASSERT_TRUE(rec.witness_root.has_value());
    EXPECT_GT(rec.witness_root->imag(), 1e-3);
    // The witness is a root of P_n.
    const auto pn = hr::generate(f.params, f.n)[f.n];
    const ComplexValue w = *rec.witness_root;
    double scale = 0.0;
    for (std::size_t k = 0; k < pn.size(); ++k) scale += std::abs(pn.coeff(k).get_d()) * std::pow(std::abs(w), k);
    EXPECT_LT(std::abs(pn(w)), 1e-9 * scale);
  }
  EXPECT_FALSE(hr::first_nonreal(Params::from_alpha(Rational(1, 9)), 120).first_nonreal_n.has_value());
}

TEST(FirstNonreal, AgreesWithTheRealityCriterionOnAGrid) {
  // Hyperbolic for every n exactly when b > 0 and c / (a b) <= 1/9. The
  // failing side is chosen far from the boundary so a short scan finds it.
  oracle::RationalSource src(7);
  int checked = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const Rational a = src.nonzero(5, 3);
    const Rational b = (trial % 3 == 0 ? -1 : 1) * abs(src.nonzero(5, 3));
    const Rational alphas[] = {Rational(-4), Rational(-1, 3), Rational(1, 20), Rational(1, 9),
                               Rational(1, 2), Rational(3)};
    const Rational alpha = alphas[trial % 6];
    const Params p(a, b, alpha * a * b);
    const bool real = hr::predict_hyperbolic(p);
    const auto rec = hr::first_nonreal(p, real ? 60 : 80);
    EXPECT_EQ(real, !rec.first_nonreal_n.has_value()) << a << "," << b << "," << p.c;
    ++checked;
  }
  EXPECT_EQ(checked, 24);
}

TEST(CubicDiscriminant, ClosedFormsAndSigns) {
  for (int num = -12; num <= 12; ++num) {
    const Rational alpha(num, 4);
    // 1 + y - y^2 - alpha y^3
    EXPECT_EQ(hr::cubic_discriminant<Rational>(-alpha, Rational(-1), Rational(1), Rational(1)),
              5 + 22 * alpha - 27 * alpha * alpha);
  }
  EXPECT_EQ(hr::cubic_discriminant<Rational>(Rational(1), Rational(0), Rational(0), Rational(-1)), Rational(-27));
  EXPECT_EQ(hr::cubic_discriminant<Rational>(Rational(-1), Rational(-1), Rational(1), Rational(1)), Rational(0));
  for (double alpha : {1.5, 2.0, 5.0, 40.0}) {
    EXPECT_LT(hr::cubic_discriminant(-alpha, -1.0, 1.0, 1.0), 0.0);
    // The single real root exceeds alpha^(-1/3), so the pair is the smaller one.
    const double y3 = real_y_root(alpha);
    EXPECT_GT(y3, std::cbrt(1.0 / alpha));
  }
}

TEST(Dominance, AtIForAlphaTwoMatchesBisection) {
  const double y3 = real_y_root(2.0);
  const double pair = std::sqrt(1.0 / (2.0 * y3));
  const auto rep = hr::dominance_at(i_unit, 2.0);
  EXPECT_TRUE(rep.distinct_nonzero);
  EXPECT_TRUE(rep.two_dominant);
  EXPECT_NEAR(rep.t_moduli[0], pair, 1e-12);
  EXPECT_NEAR(rep.t_moduli[1], pair, 1e-12);
  EXPECT_NEAR(rep.t_moduli[2], y3, 1e-12);
  EXPECT_NEAR(rep.t_moduli[0], 0.7765, 1e-3);
  EXPECT_NEAR(rep.t_moduli[2], 0.8293, 1e-3);
  for (const auto& t : rep.t_roots) EXPECT_LT(std::abs(1.0 + i_unit * t + t * t + 2.0 * i_unit * t * t * t), 1e-12);
}

TEST(Dominance, RootSetIsClosedUnderMinusConjugate) {
  for (double alpha : {2.0, 0.3, -1.5}) {
    const auto rep = hr::dominance_at(i_unit, alpha);
    for (const auto& t : rep.t_roots) {
      const ComplexValue m = -std::conj(t);
      double best = 1e300;
      for (const auto& u : rep.t_roots) best = std::min(best, std::abs(u - m));
      EXPECT_LT(best, 1e-12) << alpha;
    }
  }
}

TEST(Dominance, RepeatedRootAtAlphaOne) {
  const auto rep = hr::dominance_at(i_unit, 1.0);
  EXPECT_FALSE(rep.distinct_nonzero);
  EXPECT_FALSE(rep.two_dominant);
  for (double m : rep.t_moduli) EXPECT_NEAR(m, 1.0, 1e-6);
}

TEST(Dominance, RealProbeOutsideTheIntervalIsNotDominant) {
  // Beyond lambda a single real t-root has the smallest modulus.
  const auto rep = hr::dominance_at(ComplexValue(3.0, 0.0), 0.05);
  EXPECT_TRUE(rep.distinct_nonzero);
  EXPECT_FALSE(rep.two_dominant);
  EXPECT_NEAR(rep.t_roots[0].imag(), 0.0, 1e-12);
  EXPECT_LT(rep.t_moduli[0], 0.9 * rep.t_moduli[1]);
  // Inside it a conjugate pair shares the smallest modulus.
  EXPECT_TRUE(hr::dominance_at(ComplexValue(0.7, 0.0), 0.05).two_dominant);
  EXPECT_THROW(hr::dominance_at(ComplexValue(0, 0), 1.0), std::domain_error);
}

TEST(ReciprocalDominance, SmallImaginaryProbe) {
  const auto rep = hr::reciprocal_dominance(ComplexValue(0.0, 0.01), 0.1);
  EXPECT_TRUE(rep.reciprocal.two_dominant);
  EXPECT_NEAR(rep.reciprocal.t_moduli[1], rep.reciprocal.t_moduli[2], 1e-10);
  EXPECT_GE(rep.reciprocal.t_moduli[1], rep.reciprocal.t_moduli[0]);
  EXPECT_TRUE(rep.direct.two_dominant);
  EXPECT_LE(rep.direct.t_moduli[1], rep.direct.t_moduli[2]);
  EXPECT_THROW(hr::reciprocal_dominance(ComplexValue(0, 0.01), 0.0), std::domain_error);
}

TEST(ReciprocalDominance, RootsTendToPlusMinusOneAndZero) {
  for (double c : {0.1, -2.0, 5.0}) {
    const auto rep = hr::reciprocal_dominance(ComplexValue(0.0, 1e-7), c);
    auto t = rep.reciprocal.t_roots;
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.real() < y.real(); });
    EXPECT_NEAR(std::abs(t[0] - ComplexValue(-1, 0)), 0.0, 1e-5);
    EXPECT_NEAR(std::abs(t[1]), 0.0, 1e-5);
    EXPECT_NEAR(std::abs(t[2] - ComplexValue(1, 0)), 0.0, 1e-5);
  }
}

TEST(ZeroApproach, OriginIsARootForOddDegree) {
  const auto d = hr::zero_approach(ComplexValue(0, 0), Params::from_alpha(Rational(1, 20)), {5, 11, 31});
  for (double v : d) EXPECT_EQ(v, 0.0);
}

TEST(ZeroApproach, FarRealProbeStaysAway) {
  const Rational alpha(-1);
  const double lam = hr::lambda_bound(alpha);
  const auto d = hr::zero_approach(ComplexValue(5.0, 0), Params::from_alpha(alpha), {10, 20, 40});
  for (double v : d) EXPECT_GE(v, 5.0 - lam);
  EXPECT_THROW(hr::zero_approach(ComplexValue(1, 0), Params::from_alpha(alpha), {20, 10}), std::invalid_argument);
}

TEST(ZeroApproach, ProbeInTheLimitSetIsApproached) {
  // The distance oscillates in n; the minimum over every n in (100, 200]
  // still undercuts the minimum over every n in [50, 100].
  std::vector<std::size_t> ns;
  for (std::size_t n = 50; n <= 200; ++n) ns.push_back(n);
  const auto d = hr::zero_approach(i_unit, Params::from_alpha(Rational(2)), ns);
  const double early = *std::min_element(d.begin(), d.begin() + 51);
  const double late = *std::min_element(d.begin() + 51, d.end());
  std::cout << "min distance n<=100: " << early << ", 100<n<=200: " << late << "\n";
  EXPECT_LT(late, early);
}

TEST(Density, SingleDegreeGivesTheOriginAndTheFullWindow) {
  for (const Rational alpha : {Rational(-1), Rational(1, 20)}) {
    const auto prof = hr::density_profile(alpha, 1);
    ASSERT_EQ(prof.union_roots.size(), 1u);
    EXPECT_EQ(prof.union_roots[0], 0.0);
    EXPECT_DOUBLE_EQ(prof.max_gap_central, 2 * hr::central_fraction * prof.lambda);
  }
}

TEST(Density, RootsStayInsideTheIntervalAndGapsShrink) {
  const auto small = hr::density_profile(Rational(1, 9), 50);
  const auto large = hr::density_profile(Rational(1, 9), 150);
  EXPECT_EQ(large.union_roots.size(), 150u * 151u / 2u);
  for (double r : large.union_roots) EXPECT_LT(std::abs(r), std::sqrt(3.0));
  EXPECT_LT(large.max_abs_imag, 1e-8);
  EXPECT_LT(large.max_gap_central, small.max_gap_central);
}

TEST(Density, GapMetric) {
  EXPECT_DOUBLE_EQ(hr::max_gap_in_window({-3.0, -0.5, 0.1, 0.4, 3.0}, 1.0), 0.6);
  EXPECT_DOUBLE_EQ(hr::max_gap_in_window({5.0}, 1.0), 2.0);
}

TEST(ImaginaryAxis, NegativeBWithoutCubicTerm) {
  EXPECT_TRUE(hr::imaginary_axis_check(40));
}

TEST(AllRoots, IllConditionedCoefficientsStopAtTheNoiseFloor) {
  // Expanded coefficients lose the edge cluster near sqrt 3; the iteration
  // must still terminate, and the bulk agrees with recurrence evaluation.
  const auto params = Params::from_alpha(Rational(1, 9));
  const auto pn = hr::generate(params, 40)[40];
  const auto coarse = hr::all_roots(pn);
  const auto fine = hr::sequence_roots(params, pn);
  ASSERT_EQ(coarse.size(), 40u);
  for (const auto& r : fine) {
    double best = 1e300;
    for (const auto& s : coarse) best = std::min(best, std::abs(r - s));
    if (std::abs(r) < 1.0) EXPECT_LT(best, 1e-9) << r;
    EXPECT_LT(best, 0.2) << r;
  }
}

TEST(HornerNoise, BoundsTheActualRoundingError) {
  const auto pn = hr::generate(Params::from_alpha(Rational(1, 9)), 40)[40];
  const hr::HornerEvaluator h(hr::to_double(pn));
  for (const ComplexValue z : {ComplexValue(1.7, 0.0), ComplexValue(0.31, 0.02), ComplexValue(-1.2, 0.4)}) {
    const auto r = h(z);
    // Exact value at the rational point nearest z.
    const Rational x(z.real()), y(z.imag());
    Rational re(0), im(0);
    for (std::size_t k = pn.size(); k-- > 0;) {
      const Rational nre = re * x - im * y + pn.coeff(k);
      im = re * y + im * x;
      re = nre;
    }
    const double err = std::abs(r.value - ComplexValue(re.get_d(), im.get_d()));
    EXPECT_LE(err, r.noise) << z;
  }
}
