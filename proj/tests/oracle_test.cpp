#include "spinwit/oracle.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "spinwit/criteria.hpp"
#include "spinwit/errors.hpp"
#include "spinwit/states.hpp"
#include "test_util.hpp"

namespace spinwit::oracle {
namespace {

using spinwit::testing::random_unit;

TEST(FamilyTraceNorms, PiecewiseValues) {
  auto check = [](double lambda, double ppt, double realign) {
    const FamilyTraceNorms t = family_trace_norms_closed_form(4, lambda);
    EXPECT_NEAR(t.ppt_norm, ppt, 1e-14) << lambda;
    EXPECT_NEAR(t.realign_norm, realign, 1e-14) << lambda;
  };
  check(0.1, 1.0, 0.8);
  check(0.4, 1.7, 1.6);
  check(1.0, 4.0, 4.0);
  EXPECT_THROW(family_trace_norms_closed_form(4, -0.5), DomainError);
  EXPECT_THROW(family_trace_norms_closed_form(7, 0.5), UnsupportedDimensionError);
}

TEST(FamilyTraceNorms, PiecewiseMatchesSpectralSum) {
  for (int n : {4, 6, 8, 10}) {
    for (int k = 0; k <= 1000; ++k) {
      const double lambda = k / 1000.0;
      const FamilyTraceNorms a = family_trace_norms_closed_form(n, lambda);
      const FamilyTraceNorms b = family_trace_norms_spectral_sum(n, lambda);
      EXPECT_NEAR(a.ppt_norm, b.ppt_norm, 1e-12);
      EXPECT_NEAR(a.realign_norm, b.realign_norm, 1e-12);
    }
  }
}

TEST(FamilyTraceNorms, MatchNumericPipeline) {
  for (int n : {4, 6, 8}) {
    const auto sys = CoupledSpinSystem::get(n);
    for (int k = 0; k <= 100; k += (n == 8 ? 5 : 1)) {
      const double lambda = k / 100.0;
      const ComplexMatrix rho = family_state(*sys, lambda).matrix();
      const FamilyTraceNorms t = family_trace_norms_closed_form(n, lambda);
      EXPECT_NEAR(partial_transpose_norm(rho, *sys), t.ppt_norm, 1e-9);
      EXPECT_NEAR(realign_norm(rho, *sys), t.realign_norm, 1e-9);
    }
  }
}

TEST(FamilyWitness, ClosedFormValues) {
  EXPECT_EQ(family_witness_closed_form(4, 0.0), 0.0);
  EXPECT_EQ(family_witness_closed_form(4, 0.5), -1.0);
  EXPECT_EQ(family_witness_closed_form(8, 1.0), -6.0);
  const auto sys = CoupledSpinSystem::get(6);
  const Witness w = build_witness(*sys);
  for (int k = 0; k <= 100; ++k) {
    const double lambda = k / 100.0;
    EXPECT_NEAR(witness_value(w, family_state(*sys, lambda).matrix()),
                family_witness_closed_form(6, lambda), 1e-12);
  }
}

TEST(WitnessSpectrum, ClosedFormMultiplicities) {
  const auto four = witness_spectrum_closed_form(4);
  ASSERT_EQ(four.size(), 3u);
  EXPECT_EQ(four[0].value, -2.0);
  EXPECT_EQ(four[0].multiplicity, 1);
  EXPECT_EQ(four[1].value, 0.0);
  EXPECT_EQ(four[1].multiplicity, 10);
  EXPECT_EQ(four[2].value, 2.0);
  EXPECT_EQ(four[2].multiplicity, 5);
  const auto six = witness_spectrum_closed_form(6);
  EXPECT_EQ(six[0].value, -4.0);
  EXPECT_EQ(six[1].multiplicity, 21);
  EXPECT_EQ(six[2].multiplicity, 14);
  for (int n : {4, 6, 8, 10}) {
    double weighted = 0.0;
    int total = 0;
    for (const auto& c : witness_spectrum_closed_form(n)) {
      weighted += c.value * c.multiplicity;
      total += c.multiplicity;
    }
    EXPECT_EQ(total, n * n);
    EXPECT_EQ(weighted, n * (n - 2.0));
  }
}

TEST(WitnessSpectrum, AgreesWithNumericSpectrum) {
  for (int n : {4, 6, 8}) {
    const auto sys = CoupledSpinSystem::get(n);
    const auto numeric = cluster_spectrum(hermitian_eigenvalues(build_witness(*sys).matrix()));
    const auto closed = witness_spectrum_closed_form(n);
    ASSERT_EQ(numeric.size(), closed.size());
    for (std::size_t k = 0; k < closed.size(); ++k) {
      EXPECT_NEAR(numeric[k].value, closed[k].value, 1e-9);
      EXPECT_EQ(numeric[k].multiplicity, closed[k].multiplicity);
    }
  }
}

TEST(ClusterSpectrum, GroupsWithinTolerance) {
  RealVector v(6);
  v << -1.0, -1.0 + 1e-8, 0.0, 0.5, 0.5 + 5e-7, 0.5 + 9e-7;
  const auto c = cluster_spectrum(v, 1e-6);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].multiplicity, 2);
  EXPECT_EQ(c[1].multiplicity, 1);
  EXPECT_EQ(c[2].multiplicity, 3);
  EXPECT_TRUE(cluster_spectrum(RealVector()).empty());
}

TEST(AppendixA, VanishesWhenChiJIsTimeReversedChiI) {
  const auto sys = CoupledSpinSystem::get(4);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix frame = haar_unitary(4, rng);
    const ComplexVector chi_i = random_unit(4, rng);
    const ComplexVector chi_j = time_reverse_vector(chi_i, *sys);
    const AppendixAConfig cfg{frame.col(0), frame.col(1), chi_i, chi_j};
    EXPECT_LT(std::abs(appendix_a_value(cfg, *sys)), 1e-12);
    EXPECT_LT(std::abs(appendix_a_decomposition(cfg, *sys).mu), 1e-12);
  }
}

TEST(AppendixA, SingletFramesAttainUnitModulus) {
  for (int n : {4, 6}) {
    const auto sys = CoupledSpinSystem::get(n);
    const SchmidtForm s = schmidt_decompose(PureState(n, sys->singlet()));
    // Canonical singlet frame: φ_i = e_i, χ_i = (-1)^i e_{N-1-i}.
    ComplexMatrix phi = ComplexMatrix::Identity(n, n);
    ComplexMatrix chi = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) chi(n - 1 - i, i) = (i % 2 == 0) ? 1.0 : -1.0;
    ComplexVector rebuilt = ComplexVector::Zero(n * n);
    for (int i = 0; i < n; ++i) {
      rebuilt += kron(ComplexVector(phi.col(i)), ComplexVector(chi.col(i))) / std::sqrt(double(n));
    }
    ASSERT_LT((rebuilt - sys->singlet()).norm(), 1e-12);
    ASSERT_NEAR(s.coefficients(0), 1.0 / std::sqrt(double(n)), 1e-12);

    double max_modulus = 0.0;
    Complex sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const AppendixAConfig cfg{phi.col(i), phi.col(j), chi.col(i), chi.col(j)};
        const Complex a = appendix_a_value(cfg, *sys);
        max_modulus = std::max(max_modulus, std::abs(a));
        sum += a;
      }
    EXPECT_NEAR(max_modulus, 1.0, 1e-12);
    // <ψ0|W|ψ0> = 1 - (1/N) Σ A_ij = -(N-2).
    EXPECT_NEAR(1.0 - sum.real() / n, -(n - 2.0), 1e-12);
  }
}

TEST(AppendixA, ModulusBoundedOnRandomFrames) {
  for (int n : {4, 6}) {
    const auto sys = CoupledSpinSystem::get(n);
    std::mt19937_64 rng(500 + n);
    double worst = 0.0;
    for (int trial = 0; trial < 5000; ++trial) {
      const AppendixAConfig cfg = random_appendix_a_config(*sys, rng);
      const Complex a = appendix_a_value(cfg, *sys);
      const AppendixADecomposition d = appendix_a_decomposition(cfg, *sys);
      worst = std::max(worst, std::abs(a));
      EXPECT_LE(std::abs(a), d.a * d.b + d.c * d.d + 1e-12);
      EXPECT_NEAR(std::norm(d.lambda) + std::norm(d.mu), 1.0, 1e-12);
    }
    EXPECT_LE(worst, 1.0 + 1e-12);
  }
}

TEST(AppendixA, ExpectationIdentityOnRandomPureStates) {
  // <ψ|W|ψ> = 1 - Σ_ij α_i α_j A_ij with the Schmidt frames of ψ.
  const auto sys = CoupledSpinSystem::get(4);
  const Witness w = build_witness(*sys);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PureState psi = random_pure(*sys, seed);
    const SchmidtForm s = schmidt_decompose(psi);
    Complex sum = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const AppendixAConfig cfg{s.basis_1.col(i), s.basis_1.col(j), s.basis_2.col(i),
                                  s.basis_2.col(j)};
        sum += s.coefficients(i) * s.coefficients(j) * appendix_a_value(cfg, *sys);
      }
    const double expectation = psi.vector().dot(w.matrix() * psi.vector()).real();
    EXPECT_NEAR(expectation, 1.0 - sum.real(), 1e-10);
  }
}

TEST(AppendixA, RejectsInvalidFrames) {
  const auto sys = CoupledSpinSystem::get(4);
  ComplexVector e0 = ComplexVector::Zero(4), e1 = ComplexVector::Zero(4);
  e0(0) = 1.0;
  e1(1) = 1.0;
  EXPECT_THROW(appendix_a_value({2.0 * e0, e1, e0, e1}, *sys), PreconditionError);
  const ComplexVector tilted = (e0 + e1) / std::sqrt(2.0);
  EXPECT_THROW(appendix_a_value({e0, tilted, e0, e1}, *sys), PreconditionError);
}

}  // namespace
}  // namespace spinwit::oracle
