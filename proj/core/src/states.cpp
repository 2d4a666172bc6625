#include "spinwit/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

}  // namespace

DensityMatrix::DensityMatrix(int n_local, ComplexMatrix matrix)
    : n_local_(n_local), matrix_(std::move(matrix)) {
  const Eigen::Index dim = static_cast<Eigen::Index>(n_local) * n_local;
  if (n_local < 1 || matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("DensityMatrix: expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " matrix for n_local " + std::to_string(n_local));
  }
  if (!matrix_.allFinite()) throw ValidationError("DensityMatrix: non-finite entry");
  const double defect = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kStateTol) {
    throw ValidationError("DensityMatrix: not Hermitian (max |ρ - ρ†| = " +
                          std::to_string(defect) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw ValidationError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  }
  const double lowest = min_eigenvalue(0.5 * (matrix_ + matrix_.adjoint()), 1.0);
  if (lowest < -kStateTol) {
    throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
}

PureState::PureState(int n_local, ComplexVector vector)
    : n_local_(n_local), vector_(std::move(vector)) {
  const Eigen::Index dim = static_cast<Eigen::Index>(n_local) * n_local;
  if (n_local < 1 || vector_.size() != dim) {
    throw DimensionError("PureState: expected vector of length " + std::to_string(dim));
  }
  if (!vector_.allFinite()) throw ValidationError("PureState: non-finite entry");
  if (std::abs(vector_.norm() - 1.0) > kPureNormTol) {
    throw ValidationError("PureState: norm " + std::to_string(vector_.norm()) + " != 1");
  }
}

PureState PureState::normalized(int n_local, const ComplexVector& vector) {
  const double norm = vector.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("PureState::normalized: zero or non-finite vector");
  }
  return PureState(n_local, vector / norm);
}

DensityMatrix PureState::density() const {
  return DensityMatrix(n_local_, vector_ * vector_.adjoint());
}

ComplexVector SchmidtForm::reconstruct() const {
  const Eigen::Index n = basis_1.rows();
  ComplexVector psi = ComplexVector::Zero(n * basis_2.rows());
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    psi += coefficients(i) * kron(ComplexVector(basis_1.col(i)), ComplexVector(basis_2.col(i)));
  }
  return psi;
}

DensityMatrix family_state(const CoupledSpinSystem& sys, double lambda) {
  require_unit_interval(lambda, "family_state: lambda");
  const ComplexMatrix rho0 = werner_state(sys).matrix();
  return DensityMatrix(sys.n(), lambda * sys.p0() + (1.0 - lambda) * rho0);
}

DensityMatrix werner_state(const CoupledSpinSystem& sys) {
  const double n = sys.n();
  const ComplexMatrix p_sym = 0.5 * (sys.identity() + sys.swap());
  return DensityMatrix(sys.n(), (2.0 / (n * (n + 1.0))) * p_sym);
}

DensityMatrix isotropic_state(const CoupledSpinSystem& sys, double fidelity) {
  require_unit_interval(fidelity, "isotropic_state: fidelity");
  const double d = sys.dim();
  const ComplexMatrix rest = (sys.identity() - sys.p0()) / (d - 1.0);
  return DensityMatrix(sys.n(), fidelity * sys.p0() + (1.0 - fidelity) * rest);
}

ComplexMatrix haar_unitary(int n, std::mt19937_64& rng) {
  const ComplexMatrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

PureState random_pure(const CoupledSpinSystem& sys, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = ginibre(sys.dim(), 1, rng);
  return PureState::normalized(sys.n(), g.col(0));
}

DensityMatrix random_density(const CoupledSpinSystem& sys, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > sys.dim()) {
    throw DomainError("random_density: rank " + std::to_string(rank) + " outside [1, " +
                      std::to_string(sys.dim()) + "]");
  }
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = ginibre(sys.dim(), rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(sys.n(), std::move(rho));
}

std::pair<ComplexMatrix, ComplexMatrix> random_product_unitary(const CoupledSpinSystem& sys,
                                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexMatrix u1 = haar_unitary(sys.n(), rng);
  ComplexMatrix u2 = haar_unitary(sys.n(), rng);
  return {std::move(u1), std::move(u2)};
}

SchmidtForm schmidt_decompose(int n_local, const ComplexVector& psi) {
  const Eigen::Index n = n_local;
  if (psi.size() != n * n) {
    throw DimensionError("schmidt_decompose: vector length " + std::to_string(psi.size()) +
                         " is not " + std::to_string(n * n));
  }
  if (!(psi.norm() > 0.0)) throw DomainError("schmidt_decompose: zero vector");
  // Coefficient matrix C(a, b) = ψ(a N + b) = Σ σ_i U(a,i) conj(V(b,i)).
  ComplexMatrix coeff(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) coeff(a, b) = psi(a * n + b);
  Eigen::JacobiSVD<ComplexMatrix> svd(coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.singularValues(), svd.matrixU(), svd.matrixV().conjugate()};
}

SchmidtForm schmidt_decompose(const PureState& psi) {
  return schmidt_decompose(psi.n_local(), psi.vector());
}

double concurrence_pure(const PureState& psi) {
  const RealVector alpha = schmidt_decompose(psi).coefficients;
  // 2 Σ_{i≠j} α_i² α_j² = 2 [(Σα²)² - Σα⁴]
  const double sum2 = alpha.squaredNorm();
  const double sum4 = alpha.array().pow(4).sum();
  return std::sqrt(std::max(0.0, 2.0 * (sum2 * sum2 - sum4)));
}

double eof_pure(const PureState& psi) {
  const RealVector alpha = schmidt_decompose(psi).coefficients;
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    const double p = alpha(i) * alpha(i);
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

}  // namespace spinwit
