#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "spinwit/matkit.hpp"
#include "spinwit/spinspace.hpp"

namespace spinwit::oracle {

struct FamilyTraceNorms {
  double ppt_norm;      // ||T2 ρ(λ)||
  double realign_norm;  // ||R ρ(λ)||
};

// Piecewise closed forms, branch points 1/(N+2) and 1/2.
FamilyTraceNorms family_trace_norms_closed_form(int n, double lambda);

// The same norms as explicit weighted sums over the P_J eigenvalues of
// ϑ₂ρ(λ) and Rρ(λ), before the piecewise simplification.
FamilyTraceNorms family_trace_norms_spectral_sum(int n, double lambda);

// tr(Wρ(λ)) = -λ(N-2).
double family_witness_closed_form(int n, double lambda);

struct SpectralCluster {
  double value;
  int multiplicity;
};

// Ascending: (-(N-2), 1), (0, Σ_{J odd}(2J+1)), (2, Σ_{J even>=2}(2J+1)).
std::vector<SpectralCluster> witness_spectrum_closed_form(int n);

// Groups ascending eigenvalues whose neighbours differ by at most tol. The
// cluster value is the mean of its members.
std::vector<SpectralCluster> cluster_spectrum(const RealVector& ascending, double tol = 1e-6);

// One (i, j) pair of Schmidt frame vectors. With i == j pass the same vector
// twice.
struct AppendixAConfig {
  ComplexVector phi_i;
  ComplexVector phi_j;
  ComplexVector chi_i;
  ComplexVector chi_j;
};

// Internals of the bound |A_ij| <= ab + cd: θχ_i = λ χ_j + μ χ_j⊥.
struct AppendixADecomposition {
  Complex lambda;
  Complex mu;
  double a, b, c, d;
};

// A_ij = <φi|χj><χi|φj> + <φi|θχi><θχj|φj>.
Complex appendix_a_value(const AppendixAConfig& cfg, const CoupledSpinSystem& sys);

AppendixADecomposition appendix_a_decomposition(const AppendixAConfig& cfg,
                                                const CoupledSpinSystem& sys);

// Columns i, j (possibly equal) of two independent Haar unitaries.
AppendixAConfig random_appendix_a_config(const CoupledSpinSystem& sys, std::mt19937_64& rng);

}  // namespace spinwit::oracle
