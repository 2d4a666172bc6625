#pragma once

#include <array>
#include <memory>
#include <vector>

#include "spinwit/matkit.hpp"

namespace spinwit {

// Local basis |j,m> is ordered m = j, j-1, ..., -j, so basis index k carries
// m = j - k. Composite index is (index in subsystem 1) * N + (index in subsystem 2).

struct SpinOperators {
  ComplexMatrix x;
  ComplexMatrix y;
  ComplexMatrix z;
};

// <j,m'|V|j,m> = (-1)^(j-m) delta(m', -m). Requires even N >= 2.
ComplexMatrix time_reversal_unitary(int n);

SpinOperators spin_operators(int n);

// Permutation matrix with F(e_a ⊗ e_b) = e_b ⊗ e_a.
ComplexMatrix swap_operator(int n);

// Sum over both particles of (j_a ⊗ I + I ⊗ j_a)^2.
ComplexMatrix total_spin_squared(int n);

// P_J for J = 0..N-1 as Lagrange polynomials in the total spin Casimir.
std::vector<ComplexMatrix> total_spin_projectors(int n);

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>. All arguments are doubled
// (two_j1 = 2*j1, ...) so half-integer spins stay integral. Racah formula.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J,
                      int two_M);

// J = 0 state of two spin-j particles, built from Clebsch-Gordan coefficients.
ComplexVector singlet_vector(int n);

// Lagrange projectors drift past ~1e-10 above this (7e-8 at N = 16).
inline constexpr int kMaxSpinDimension = 12;

// Immutable structural operators of C^N ⊗ C^N for a fixed even N >= 4.
class CoupledSpinSystem {
 public:
  // Cached per N; repeated calls return the same instance. Thread-safe.
  static std::shared_ptr<const CoupledSpinSystem> get(int n);

  explicit CoupledSpinSystem(int n);

  int n() const { return n_; }
  int dim() const { return n_ * n_; }
  // 2j, so j = two_j() / 2.
  int two_j() const { return n_ - 1; }
  double j() const { return 0.5 * (n_ - 1); }

  const ComplexMatrix& v() const { return v_; }
  const ComplexMatrix& swap() const { return swap_; }
  const ComplexMatrix& identity() const { return identity_; }
  const ComplexVector& singlet() const { return singlet_; }
  const ComplexMatrix& p0() const { return projectors_.front(); }
  const ComplexMatrix& projector(int total_j) const;
  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }

 private:
  int n_;
  ComplexMatrix v_;
  ComplexMatrix swap_;
  ComplexMatrix identity_;
  ComplexVector singlet_;
  std::vector<ComplexMatrix> projectors_;
};

// ϑB = V B^T V†.
ComplexMatrix time_reverse(const ComplexMatrix& b, const CoupledSpinSystem& sys);

// θφ = V conj(φ).
ComplexVector time_reverse_vector(const ComplexVector& phi, const CoupledSpinSystem& sys);

}  // namespace spinwit
