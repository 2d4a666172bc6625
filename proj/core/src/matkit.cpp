#include "spinwit/matkit.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

std::string format_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

}  // namespace

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + ": non-finite matrix entry");
  }
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  return hermiticity_defect(m) <= rel_tol * m.norm();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  require_finite(m, "trace_norm");
  if (m.size() == 0) return 0.0;
  if (hermiticity_defect(m) <= 1e-12 * m.norm()) {
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  return singular_values(m).sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index max_dimension) {
  require_finite(a, "kron");
  require_finite(b, "kron");
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > max_dimension || cols > max_dimension) {
    throw SizeError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds maximum dimension " + std::to_string(max_dimension));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index local_dim, Subsystem traced_out) {
  require_square(m, "partial_trace");
  require_finite(m, "partial_trace");
  const Eigen::Index d = local_dim;
  if (d <= 0 || m.rows() != d * d) {
    throw DimensionError("partial_trace: dimension " + std::to_string(m.rows()) +
                         " is not the square of local dimension " + std::to_string(d));
  }
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  if (traced_out == Subsystem::Second) {
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index c = 0; c < d; ++c)
        for (Eigen::Index b = 0; b < d; ++b) out(a, c) += m(a * d + b, c * d + b);
  } else {
    for (Eigen::Index b = 0; b < d; ++b)
      for (Eigen::Index e = 0; e < d; ++e)
        for (Eigen::Index a = 0; a < d; ++a) out(b, e) += m(a * d + b, a * d + e);
  }
  return out;
}

HermitianSpectrum hermitian_spectrum(const ComplexMatrix& m, double hermit_tol) {
  require_square(m, "hermitian_spectrum");
  require_finite(m, "hermitian_spectrum");
  const double defect = hermiticity_defect(m);
  if (defect > hermit_tol * m.norm()) {
    throw PreconditionError("hermitian_spectrum: matrix not Hermitian (||M - M†|| = " +
                            format_g(defect) + ")");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  return {es.eigenvalues(), es.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m, double hermit_tol) {
  require_square(m, "hermitian_eigenvalues");
  require_finite(m, "hermitian_eigenvalues");
  const double defect = hermiticity_defect(m);
  if (defect > hermit_tol * m.norm()) {
    throw PreconditionError("hermitian_eigenvalues: matrix not Hermitian (||M - M†|| = " +
                            format_g(defect) + ")");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m, double hermit_tol) {
  return hermitian_eigenvalues(m, hermit_tol)(0);
}

ComplexMatrix unitary_exp(const ComplexMatrix& h) {
  const auto spec = hermitian_spectrum(h, 1e-8);
  ComplexVector phases(spec.values.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, spec.values(k));
  }
  return spec.vectors * phases.asDiagonal() * spec.vectors.adjoint();
}

}  // namespace spinwit
