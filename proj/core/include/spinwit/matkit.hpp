#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace spinwit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Largest row or column count kron() will produce.
inline constexpr Eigen::Index kDefaultMaxDimension = 4096;

// Relative Hermiticity tolerance used by hermitian_spectrum().
inline constexpr double kDefaultHermitTol = 1e-10;

enum class Subsystem { First = 1, Second = 2 };

struct HermitianSpectrum {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(k) <-> values(k)
};

// Throws DomainError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

bool is_hermitian(const ComplexMatrix& m, double rel_tol = kDefaultHermitTol);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

// Sum of singular values. Hermitian input (within 1e-12 relative) is handled
// through its eigenvalues, everything else through a Jacobi SVD.
double trace_norm(const ComplexMatrix& m);

// Singular values in nonincreasing order.
RealVector singular_values(const ComplexMatrix& m);

// Tensor product with the first factor as the major index:
// (A⊗B)(i*rB + k, j*cB + l) = A(i,j) * B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dimension = kDefaultMaxDimension);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

// Partial trace of a (d*d)x(d*d) operator over the given subsystem, using the
// composite index a*d + b with a belonging to the first subsystem.
ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index local_dim,
                            Subsystem traced_out);

// Eigen-decomposition of a Hermitian matrix. After the Hermiticity check the
// input is replaced by its Hermitian part (M + M†)/2.
HermitianSpectrum hermitian_spectrum(const ComplexMatrix& m,
                                     double hermit_tol = kDefaultHermitTol);

RealVector hermitian_eigenvalues(const ComplexMatrix& m,
                                 double hermit_tol = kDefaultHermitTol);

double min_eigenvalue(const ComplexMatrix& m, double hermit_tol = kDefaultHermitTol);

// exp(i*h) for Hermitian h.
ComplexMatrix unitary_exp(const ComplexMatrix& h);

}  // namespace spinwit
