#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "spinwit/matkit.hpp"
#include "spinwit/spinspace.hpp"

namespace spinwit {

inline constexpr double kStateTol = 1e-10;
inline constexpr double kPureNormTol = 1e-12;

// Bipartite density matrix on C^N ⊗ C^N. Construction validates Hermiticity,
// unit trace and positivity (each within kStateTol); the matrix is stored
// exactly as given.
class DensityMatrix {
 public:
  DensityMatrix(int n_local, ComplexMatrix matrix);

  int n_local() const { return n_local_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  int n_local_;
  ComplexMatrix matrix_;
};

class PureState {
 public:
  // Throws ValidationError unless ||vector|| = 1 within kPureNormTol.
  PureState(int n_local, ComplexVector vector);

  // Scales a nonzero vector to unit norm; zero vector is a DomainError.
  static PureState normalized(int n_local, const ComplexVector& vector);

  int n_local() const { return n_local_; }
  const ComplexVector& vector() const { return vector_; }
  DensityMatrix density() const;

 private:
  int n_local_;
  ComplexVector vector_;
};

struct SchmidtForm {
  RealVector coefficients;  // nonincreasing, nonnegative
  ComplexMatrix basis_1;    // column i is |φ_i>
  ComplexMatrix basis_2;    // column i is |χ_i>

  ComplexVector reconstruct() const;
};

// ρ(λ) = λ P0 + (1-λ) ρ0.
DensityMatrix family_state(const CoupledSpinSystem& sys, double lambda);

// ρ0 = 2/(N(N+1)) P_S with P_S = (I+F)/2.
DensityMatrix werner_state(const CoupledSpinSystem& sys);

// f P0 + (1-f)(I-P0)/(N²-1). The singlet is the maximally entangled
// reference, so tr(P0 ρ_f) = f.
DensityMatrix isotropic_state(const CoupledSpinSystem& sys, double fidelity);

// Samplers. Identical seeds give identical output.
ComplexMatrix haar_unitary(int n, std::mt19937_64& rng);
PureState random_pure(const CoupledSpinSystem& sys, std::uint64_t seed);
// Ginibre G (N² x rank), ρ = GG†/tr(GG†).
DensityMatrix random_density(const CoupledSpinSystem& sys, int rank, std::uint64_t seed);
std::pair<ComplexMatrix, ComplexMatrix> random_product_unitary(const CoupledSpinSystem& sys,
                                                               std::uint64_t seed);

SchmidtForm schmidt_decompose(const PureState& psi);
SchmidtForm schmidt_decompose(int n_local, const ComplexVector& psi);

// √(2(1 - Σα⁴)).
double concurrence_pure(const PureState& psi);
// -Σ α² log₂ α², with 0 log 0 = 0.
double eof_pure(const PureState& psi);

}  // namespace spinwit
