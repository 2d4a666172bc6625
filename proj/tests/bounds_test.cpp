#include "spinwit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "spinwit/errors.hpp"
#include "test_util.hpp"

namespace spinwit {
namespace {

// Frozen from a 30-digit mpmath evaluation of γ, H₂ and the linear branch.
constexpr double kR_4_1_25 = 0.051827688948688538;
constexpr double kR_4_1_5 = 0.16033079773273167;
constexpr double kR_4_2 = 0.46075125819073152;
constexpr double kR_4_3 = 1.2075187496394219;
constexpr double kSqrt1_5 = 1.2247448713915890;

TEST(Entropy, BinaryEntropyEdges) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(binary_entropy(0.8), 0.72192809488736235, 1e-14);
}

TEST(MinEntropyR, EndpointsAndInterior) {
  for (int n : {4, 6, 8}) {
    EXPECT_EQ(min_entropy_r(1.0, n), 0.0);
    EXPECT_NEAR(min_entropy_r(n, n), std::log2(n), 1e-12);
  }
  EXPECT_NEAR(gamma_of(2.0, 4), 0.93301270189221932, 1e-14);
  EXPECT_NEAR(min_entropy_r(2.0, 4), kR_4_2, 1e-12);
  EXPECT_NEAR(gamma_of(1.5, 4), 0.98176274578121057, 1e-14);
  EXPECT_THROW(min_entropy_r(0.99, 4), DomainError);
  EXPECT_THROW(min_entropy_r(4.01, 4), DomainError);
}

TEST(MinEntropyR, MonotoneNondecreasing) {
  for (int n : {4, 6, 8}) {
    double prev = min_entropy_r(1.0, n);
    for (int k = 1; k <= 1000; ++k) {
      const double x = 1.0 + (n - 1.0) * k / 1000.0;
      const double r = min_entropy_r(std::min(x, double(n)), n);
      EXPECT_GE(r, prev - 1e-12);
      prev = r;
    }
  }
}

TEST(ConvexHullR, BranchValues) {
  EXPECT_NEAR(convex_hull_r(4.0, 4), 2.0, 1e-12);
  EXPECT_NEAR(convex_hull_r(1.5, 4), kR_4_1_5, 1e-12);
  EXPECT_NEAR(convex_hull_r(1.25, 4), kR_4_1_25, 1e-12);
  // Breakpoint 4(N-1)/N = 3: curved and linear branch agree.
  const double linear_at_3 = std::log2(3.0) / 2.0 * (3.0 - 4.0) + 2.0;
  EXPECT_NEAR(min_entropy_r(3.0, 4), linear_at_3, 1e-9);
  EXPECT_NEAR(convex_hull_r(3.0, 4), kR_4_3, 1e-12);
  EXPECT_THROW(convex_hull_r(0.5, 4), DomainError);
}

TEST(ConvexHullR, ContinuousAtBreakpoint) {
  for (int n : {4, 6, 8, 10}) {
    const double b = 4.0 * (n - 1.0) / n;
    EXPECT_NEAR(convex_hull_r(b - 1e-12, n), convex_hull_r(b + 1e-12, n), 1e-9);
  }
}

TEST(ConvexHullR, ConvexBySecondDifferences) {
  std::mt19937_64 rng(4);
  for (int n : {4, 6, 8}) {
    std::uniform_real_distribution<double> where(1.0, n);
    std::uniform_real_distribution<double> width(1e-4, 0.3);
    for (int trial = 0; trial < 2000; ++trial) {
      const double h = width(rng);
      const double x = std::clamp(where(rng), 1.0 + h, n - h);
      const double lo = std::max(x - h, 1.0);
      const double hi = std::min(x + h, double(n));
      const double second =
          convex_hull_r(lo, n) - 2.0 * convex_hull_r(x, n) + convex_hull_r(hi, n);
      EXPECT_GE(second, -1e-12) << "N=" << n << " x=" << x << " h=" << h;
    }
  }
}

TEST(FamilyClosedForm, FigureOnePoints) {
  const FamilyCurvePoint half = family_bounds_closed_form(4, 0.5);
  EXPECT_NEAR(half.bound_witness, 0.40824829046386302, 1e-12);
  EXPECT_NEAR(half.bound_ppt, half.bound_witness, 1e-12);
  const FamilyCurvePoint quarter = family_bounds_closed_form(4, 0.25);
  EXPECT_NEAR(quarter.raw_realign, 0.0, 1e-15);
  EXPECT_NEAR(quarter.bound_ppt, 0.10206207261596575, 1e-12);
  const FamilyCurvePoint one = family_bounds_closed_form(4, 1.0);
  EXPECT_NEAR(one.bound_ppt, kSqrt1_5, 1e-12);
  EXPECT_NEAR(one.bound_upper, kSqrt1_5, 1e-12);
  EXPECT_NEAR(one.eof_new, 2.0, 1e-12);
  EXPECT_NEAR(one.eof_upper, 2.0, 1e-12);
  const FamilyCurvePoint small = family_bounds_closed_form(4, 0.1);
  EXPECT_LT(small.raw_realign, 0.0);
  EXPECT_EQ(small.bound_realign, 0.0);
  EXPECT_THROW(family_bounds_closed_form(5, 0.1), UnsupportedDimensionError);
  EXPECT_THROW(family_bounds_closed_form(4, 1.1), DomainError);
}

TEST(FamilyClosedForm, FigureTwoPoints) {
  const FamilyCurvePoint p = family_bounds_closed_form(4, 0.25);
  EXPECT_NEAR(p.eof_new, kR_4_1_5, 1e-12);
  EXPECT_NEAR(p.eof_old, kR_4_1_25, 1e-12);
}

TEST(FamilyClosedForm, UpperBoundsDominate) {
  for (int n : {4, 6, 8}) {
    for (int k = 0; k <= 100; ++k) {
      const FamilyCurvePoint p = family_bounds_closed_form(n, k / 100.0);
      const double lower = std::max({p.bound_witness, p.bound_ppt, p.bound_realign});
      EXPECT_GE(p.bound_upper, lower - 1e-9);
      EXPECT_GE(p.eof_upper, p.eof_new - 1e-9);
      EXPECT_GE(p.eof_new, p.eof_old - 1e-12);
      EXPECT_GE(std::min({p.bound_witness, p.bound_ppt, p.bound_realign}), 0.0);
    }
  }
}

TEST(FamilyClosedForm, FigureOneOrdering) {
  for (int k = 1; k <= 100; ++k) {
    const double lambda = k / 100.0;
    const FamilyCurvePoint p = family_bounds_closed_form(4, lambda);
    if (lambda < 0.5) {
      EXPECT_GT(p.bound_witness, p.bound_ppt);
      EXPECT_GT(p.bound_witness, p.bound_realign);
    } else if (lambda > 0.5) {
      EXPECT_GT(p.bound_ppt, p.bound_witness);
      EXPECT_NEAR(p.bound_ppt, p.bound_realign, 1e-9);
    }
  }
}

TEST(ConcurrenceLowerBound, FamilyExamples) {
  const auto sys = CoupledSpinSystem::get(4);
  const BoundReport low = concurrence_lower_bound(family_state(*sys, 0.1), *sys);
  EXPECT_NEAR(low.concurrence_lower, 0.081649658092772603, 1e-10);
  EXPECT_LE(low.f_ppt, 1e-10);
  EXPECT_LT(low.f_realign, 0.0);
  EXPECT_FALSE(low.f_witness_optimized.has_value());

  const BoundReport high = concurrence_lower_bound(family_state(*sys, 0.75), *sys);
  EXPECT_NEAR(high.concurrence_lower, 0.81649658092772603, 1e-10);
  EXPECT_NEAR(concurrence_prefactor(4) * high.f_witness, 0.61237243569579452, 1e-10);
}

TEST(ConcurrenceLowerBound, ReportInvariants) {
  const auto sys = CoupledSpinSystem::get(4);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BoundReport r = concurrence_lower_bound(random_density(*sys, 1 + seed % 8, seed), *sys);
    const double best = std::max({r.f_ppt, r.f_realign, r.f_witness, 0.0});
    EXPECT_NEAR(r.concurrence_lower, concurrence_prefactor(4) * best, 1e-14);
    EXPECT_NEAR(r.lambda0, std::clamp(1.0 + best, 1.0, 4.0), 1e-14);
    EXPECT_NEAR(r.eof_lower, convex_hull_r(r.lambda0, 4), 1e-14);
    EXPECT_EQ(r.eof_lower == 0.0, r.lambda0 == 1.0);
  }
}

TEST(ConcurrenceLowerBound, SeparableProductGivesZero) {
  const auto sys = CoupledSpinSystem::get(4);
  std::mt19937_64 rng(8);
  const ComplexVector prod = kron(testing::random_unit(4, rng), testing::random_unit(4, rng));
  const BoundReport r = concurrence_lower_bound(PureState(4, prod).density(), *sys);
  EXPECT_NEAR(r.concurrence_lower, 0.0, 1e-9);
  EXPECT_NEAR(r.eof_lower, 0.0, 1e-6);
}

TEST(ConcurrenceLowerBound, OptimizedWitnessEntersReport) {
  const auto sys = CoupledSpinSystem::get(4);
  const ComplexMatrix rho = family_state(*sys, 0.2).matrix();
  const auto [u1, u2] = random_product_unitary(*sys, 3);
  const ComplexMatrix u = kron(u1, u2);
  const DensityMatrix twisted(4, u * rho * u.adjoint());
  BoundOptions options;
  options.optimize_witness = true;
  options.budget = {4, 300, 11};
  const BoundReport r = concurrence_lower_bound(twisted, *sys, options);
  ASSERT_TRUE(r.f_witness_optimized.has_value());
  EXPECT_GE(*r.f_witness_optimized, r.f_witness);
  EXPECT_GE(*r.f_witness_optimized, 0.4 - 1e-6);
  EXPECT_NEAR(r.concurrence_lower,
              concurrence_prefactor(4) *
                  std::max({r.f_ppt, r.f_realign, r.f_witness, *r.f_witness_optimized, 0.0}),
              1e-14);
}

TEST(EofLowerBound, ModesOnFamily) {
  const auto sys = CoupledSpinSystem::get(4);
  const DensityMatrix one = family_state(*sys, 1.0);
  EXPECT_NEAR(eof_lower_bound(one, *sys), 2.0, 1e-9);
  EXPECT_NEAR(eof_lower_bound(one, *sys, {}, EofMode::Legacy), 2.0, 1e-9);
  const DensityMatrix quarter = family_state(*sys, 0.25);
  EXPECT_NEAR(eof_lower_bound(quarter, *sys), kR_4_1_5, 1e-9);
  EXPECT_NEAR(eof_lower_bound(quarter, *sys, {}, EofMode::Legacy), kR_4_1_25, 1e-9);
  const DensityMatrix mixed(4, sys->identity() / 16.0);
  EXPECT_EQ(eof_lower_bound(mixed, *sys), 0.0);
}

TEST(EofLowerBound, NewModeDominatesLegacy) {
  const auto sys = CoupledSpinSystem::get(4);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DensityMatrix rho = random_density(*sys, 1 + seed % 6, seed);
    EXPECT_GE(eof_lower_bound(rho, *sys), eof_lower_bound(rho, *sys, {}, EofMode::Legacy));
  }
}

TEST(PureStateConsistency, BoundsNeverExceedExactValues) {
  for (int n : {4, 6}) {
    const auto sys = CoupledSpinSystem::get(n);
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
      const PureState psi = random_pure(*sys, 9000 + seed);
      const BoundReport r = concurrence_lower_bound(psi.density(), *sys);
      EXPECT_LE(r.concurrence_lower, concurrence_pure(psi) + 1e-8);
      EXPECT_LE(r.eof_lower, eof_pure(psi) + 1e-8);
    }
  }
}

TEST(IsotropicReference, KnownPoints) {
  const IsotropicReference at_edge = isotropic_reference(4, 0.25);
  EXPECT_EQ(at_edge.exact_concurrence, 0.0);
  EXPECT_EQ(at_edge.witness_bound, 0.0);
  EXPECT_EQ(at_edge.ppt_bound, 0.0);
  const IsotropicReference full = isotropic_reference(4, 1.0);
  EXPECT_NEAR(full.exact_concurrence, kSqrt1_5, 1e-12);
  EXPECT_NEAR(full.witness_bound, 0.81649658092772603, 1e-12);
  for (int n : {4, 6, 8}) {
    for (double f : {0.3, 0.6, 0.9}) {
      const IsotropicReference r = isotropic_reference(n, f);
      EXPECT_NEAR(r.witness_bound / r.exact_concurrence, (n - 2.0) / (n - 1.0), 1e-12);
    }
  }
  EXPECT_THROW(isotropic_reference(4, -0.1), DomainError);
}

}  // namespace
}  // namespace spinwit
