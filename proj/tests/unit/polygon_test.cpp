#include <gtest/gtest.h>

#include "cyclic/polygon.hpp"
#include "support.hpp"

using namespace cyclic;
using cyclic::testing::rel;
using cyclic::testing::Sampler;

TEST(PowerSumClosed, Examples) {
  EXPECT_EQ(power_sum_closed(PolygonSpec<Rational>(4, 1), 1, Rational(2)), Rational(20));
  EXPECT_EQ(power_sum_closed(PolygonSpec<Rational>(4, 1), 3, Rational(2)), Rational(980));
  EXPECT_EQ(power_sum_closed(PolygonSpec<Rational>(7, 1), 5, Rational(0)), Rational(7));
  EXPECT_THROW(power_sum_closed(PolygonSpec<Rational>(4, 1), 4, Rational(2)), DomainError);
  EXPECT_THROW(power_sum_closed(PolygonSpec<Rational>(4, 1), 0, Rational(2)), DomainError);
}

TEST(PowerSumBrute, Examples) {
  EXPECT_NEAR(power_sum_brute(PolygonSpec<double>(4, 1.0), 2, PlanePlacement<double>(2.0, 0.0)), 132.0, 1e-10);
  EXPECT_NEAR(power_sum_brute(PolygonSpec<double>(3, 1.0), 1, PlanePlacement<double>(1.0, 0.0)), 6.0, 1e-12);
  const double a = power_sum_brute(PolygonSpec<double>(3, 1.0), 3, PlanePlacement<double>(1.0, 0.0));
  const double b = power_sum_brute(PolygonSpec<double>(3, 1.0), 3, PlanePlacement<double>(1.0, 0.5));
  EXPECT_GT(std::abs(a - b), 1e-3);
}

TEST(CyclicAverage, Examples) {
  EXPECT_EQ(cyclic_average(PolygonSpec<Rational>(5, 1), 2, Rational(1)).value, Rational(6));
  EXPECT_EQ(cyclic_average(PolygonSpec<Rational>(6, 2), 4, Rational(0)).value, Rational(256));
  // Decagon S^(18) as a polynomial in A = 2 with R = L = 1.
  const Rational ten = cyclic_average(PolygonSpec<Rational>(10, 1), 9, Rational(1)).value;
  EXPECT_EQ(ten, Rational(512 + 72 * 128 + 756 * 32 + 1680 * 8 + 630 * 2));
  EXPECT_NEAR(ten.to_double(),
              power_sum_brute(PolygonSpec<double>(10, 1.0), 9, PlanePlacement<double>(1.0, 0.37)) / 10, 1e-9);
  const auto avg = cyclic_average(PolygonSpec<Rational>(5, 1), 2, Rational(1));
  EXPECT_EQ(avg.m, 2);
  EXPECT_EQ(std::get<PolygonSpec<Rational>>(avg.source).n, 5);
}

TEST(PowerSumClosed, AgreesWithVertexSums) {
  Sampler s(20);
  for (int n = 3; n <= 16; ++n) {
    for (int m = 1; m < n; ++m) {
      for (int k = 0; k < 10; ++k) {
        const PolygonSpec<double> spec(n, s.uniform(0.01, 10.0));
        const PlanePlacement<double> p(s.uniform(0.0, 10.0), s.angle());
        EXPECT_LT(rel(power_sum_closed(spec, m, p.L), power_sum_brute(spec, m, p)), 1e-9) << n << " " << m;
      }
    }
  }
}

TEST(PowerSumBruteExact, TwentyFourGonAllPowers) {
  const PolygonSpec<Rational> spec(24, Rational(3, 2));
  for (int j = 1; j <= 5; ++j) {
    const Rational L(j, 7);
    const auto sums = power_sums_brute_exact(spec, L, Rational(0), 23);
    ASSERT_EQ(sums.size(), 23u);
    for (int m = 1; m <= 23; ++m) EXPECT_EQ(sums[m - 1], power_sum_closed(spec, m, L)) << m;
  }
}

TEST(PowerSumBruteExact, RotatedPlacementsAndDependenceAtN) {
  const PolygonSpec<Rational> spec(6, Rational(1));
  const auto a = power_sums_brute_exact(spec, Rational(2), Rational(1, 24), 6);
  const auto b = power_sums_brute_exact(spec, Rational(2), Rational(1, 12), 6);
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(a[m - 1], b[m - 1]);
  EXPECT_NE(a[5], b[5]);
  EXPECT_THROW(power_sums_brute_exact(spec, Rational(2), Rational(1, 5), 6), DomainError);
  EXPECT_NEAR(b[5].to_double(), power_sum_brute(PolygonSpec<double>(6, 1.0), 6, PlanePlacement<double>(2.0, 2 * M_PI / 12)),
              1e-9 * b[5].to_double());
}

TEST(PowerSumClosed, EqualAveragesAcrossN) {
  Sampler s(21);
  for (int k = 0; k < 200; ++k) {
    const int n1 = s.integer(3, 30), n2 = s.integer(3, 30);
    const int m = s.integer(1, std::min(n1, n2) - 1);
    const Rational R = s.rational(20, 9), L = s.rational(20, 9);
    EXPECT_EQ(cyclic_average(PolygonSpec<Rational>(n1, R), m, L).value,
              cyclic_average(PolygonSpec<Rational>(n2, R), m, L).value);
  }
}

TEST(Locus, Examples) {
  const auto circle = locus_classify(PolygonSpec<Rational>(4, 1), 3, Rational(980));
  EXPECT_EQ(circle.kind, LocusKind::Circle);
  EXPECT_NEAR(circle.radius, 2.0, 1e-12);
  EXPECT_EQ(describe(circle), "circle L=2");
  EXPECT_EQ(locus_classify(PolygonSpec<Rational>(5, 1), 2, Rational(5)).kind, LocusKind::Centroid);
  EXPECT_EQ(locus_classify(PolygonSpec<Rational>(3, 1), 1, Rational(2)).kind, LocusKind::Empty);
  EXPECT_EQ(describe(locus_classify(PolygonSpec<double>(3, 1.0), 1, 2.0)), "empty");
  EXPECT_EQ(describe(locus_classify(PolygonSpec<double>(5, 1.0), 2, 5.0)), "centroid");
}

TEST(Locus, InvertsTheClosedForm) {
  Sampler s(22);
  for (int k = 0; k < 300; ++k) {
    const int n = s.integer(3, 20);
    const int m = s.integer(1, n - 1);
    const PolygonSpec<double> spec(n, s.uniform(0.1, 5.0));
    const double L = s.uniform(0.01, 8.0);
    const auto c = locus_classify(spec, m, power_sum_closed(spec, m, L));
    ASSERT_EQ(c.kind, LocusKind::Circle);
    EXPECT_LT(rel(c.radius, L), 1e-9);
  }
}

TEST(RecoverR2L2, Examples) {
  auto pair = recover_r2_l2(Rational(5), Rational(33));
  EXPECT_EQ(pair.plus, Rational(4));
  EXPECT_EQ(pair.minus, Rational(1));
  pair = recover_r2_l2(Rational(2), Rational(6));
  EXPECT_EQ(pair.plus, Rational(1));
  EXPECT_EQ(pair.minus, Rational(1));
  pair = recover_r2_l2(Rational(1), Rational(1));
  EXPECT_EQ(pair.plus, Rational(1));
  EXPECT_EQ(pair.minus, Rational(0));
}

TEST(RecoverR2L2, Errors) {
  EXPECT_THROW(recover_r2_l2(Rational(0), Rational(1)), DomainError);
  try {
    recover_r2_l2(Rational(1), Rational(2));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeDiscriminant);
  }
  // 3*5^2 - 2*30 = 15 is not a rational square.
  try {
    recover_r2_l2(Rational(5), Rational(30));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRepresentable);
  }
}

TEST(RecoverR2L2, ExactRoundTrip) {
  Sampler s(23);
  for (int k = 0; k < 100; ++k) {
    const Rational r2 = s.rational(60, 11), l2 = s.rational(60, 11);
    const auto pair = recover_r2_l2(r2 + l2, (r2 + l2) * (r2 + l2) + Rational(2) * r2 * l2);
    EXPECT_EQ(pair.plus, std::max(r2, l2));
    EXPECT_EQ(pair.minus, std::min(r2, l2));
  }
}

TEST(Conversions, Examples) {
  EXPECT_EQ(s2m_from_s2(2, Rational(5), Rational(1)), Rational(33));
  EXPECT_EQ(s2m_from_s2(3, Rational(5), Rational(1)), Rational(245));
  EXPECT_EQ(s2m_from_s2(2, Rational(1), Rational(1)), Rational(1));
  EXPECT_EQ(s2m_from_s2_s4(3, Rational(5), Rational(33)), Rational(245));
  EXPECT_EQ(s2m_from_s2_s4(4, Rational(5), Rational(33)), Rational(1921));
  EXPECT_EQ(s2m_from_s2_s4(3, Rational(1), Rational(1)), Rational(1));
  EXPECT_THROW(s2m_from_s2(1, Rational(5), Rational(1)), DomainError);
  EXPECT_THROW(s2m_from_s2(2, Rational(1, 2), Rational(1)), DomainError);
  EXPECT_THROW(s2m_from_s2_s4(3, Rational(5), Rational(24)), DomainError);
}

TEST(Conversions, AgreeWithBruteForce) {
  // S^(8) for R = 1, L = 2 from the 5-gon vertex sum.
  EXPECT_NEAR(power_sum_brute(PolygonSpec<double>(5, 1.0), 4, PlanePlacement<double>(2.0, 0.3)) / 5, 1921.0, 1e-9);
  Sampler s(24);
  for (int k = 0; k < 200; ++k) {
    const int m = s.integer(2, 15);
    const Rational R = s.rational(9, 4), L = s.rational(9, 4);
    const PolygonSpec<Rational> spec(m + 1, R);
    const Rational S2 = cyclic_average(spec, 1, L).value;
    const Rational S4 = cyclic_average(spec, 2, L).value;
    const Rational want = cyclic_average(spec, m, L).value;
    EXPECT_EQ(s2m_from_s2(m, S2, R), want);
    if (m >= 3) EXPECT_EQ(s2m_from_s2_s4(m, S2, S4), want);
  }
}

TEST(Circumcircle, Examples) {
  EXPECT_EQ(circumcircle_check(DistanceMultiset<Rational>({0, 3, 3})), Rational(0));
  EXPECT_EQ(circumcircle_check(DistanceMultiset<Rational>({1, 1, 1})), Rational(9));
  const double r = std::sqrt(2.0);
  EXPECT_NEAR(circumcircle_check(DistanceMultiset<double>({2 - r, 2 - r, 2 + r, 2 + r})), 0.0, 1e-12);
}

TEST(Circumcircle, VanishesOnlyOnTheCircle) {
  Sampler s(25);
  for (int k = 0; k < 200; ++k) {
    const int n = s.integer(3, 30);
    const double R = s.uniform(0.1, 10.0);
    const auto on = polygon_distances(PolygonSpec<double>(n, R), PlanePlacement<double>(R, s.angle()));
    const double scale = std::pow(sum_of_powers(on, 1), 2);
    EXPECT_LT(std::abs(circumcircle_check(on)) / scale, 1e-12);
    const double L = R * s.uniform(0.0, 0.95);
    const auto off = polygon_distances(PolygonSpec<double>(n, R), PlanePlacement<double>(L, s.angle()));
    EXPECT_GT(circumcircle_check(off), 0.0);
  }
}
