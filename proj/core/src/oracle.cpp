#include "spinwit/oracle.hpp"

#include <cmath>
#include <string>

#include "spinwit/errors.hpp"
#include "spinwit/states.hpp"

namespace spinwit::oracle {

namespace {

void require_args(int n, double lambda, const char* what) {
  if (n < 4 || n % 2 != 0) {
    throw UnsupportedDimensionError(std::string(what) + ": N must be even and >= 4");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError(std::string(what) + ": lambda must lie in [0, 1]");
  }
}

void require_unit(const ComplexVector& v, int n, const char* name) {
  if (v.size() != n) {
    throw DimensionError(std::string("appendix_a: ") + name + " has wrong length");
  }
  if (std::abs(v.norm() - 1.0) > 1e-10) {
    throw PreconditionError(std::string("appendix_a: ") + name + " is not normalized");
  }
}

// Both vectors from one orthonormal frame: either the same column or orthogonal.
void require_frame_pair(const ComplexVector& u, const ComplexVector& v, const char* name) {
  const double overlap = std::abs(u.dot(v));
  if (overlap > 1e-10 && (u - v).norm() > 1e-10) {
    throw PreconditionError(std::string("appendix_a: ") + name +
                            " pair is neither orthogonal nor identical");
  }
}

}  // namespace

FamilyTraceNorms family_trace_norms_closed_form(int n, double lambda) {
  require_args(n, lambda, "family_trace_norms_closed_form");
  const double nn = n;
  const double edge = 1.0 / (nn + 2.0);
  FamilyTraceNorms out{};
  if (lambda <= edge) {
    out.ppt_norm = 1.0;
    out.realign_norm = 1.0 - 2.0 * lambda;
  } else {
    out.ppt_norm = 1.0 + ((lambda <= 0.5) ? (nn - 2.0) / nn * ((nn + 2.0) * lambda - 1.0)
                                          : nn * lambda - 1.0);
    out.realign_norm = nn * lambda;
  }
  return out;
}

FamilyTraceNorms family_trace_norms_spectral_sum(int n, double lambda) {
  require_args(n, lambda, "family_trace_norms_spectral_sum");
  const double nn = n;
  double ppt = std::abs(1.0 - 2.0 * lambda) / nn;
  double realign = 1.0 / nn;
  for (int j = 1; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^J
    const double weight = (2.0 * j + 1.0) / nn;
    const double mixed = (1.0 - lambda) / (nn + 1.0);
    ppt += weight * std::abs(-sign * lambda + mixed);
    realign += weight * std::abs(sign * lambda + mixed);
  }
  return {ppt, realign};
}

double family_witness_closed_form(int n, double lambda) {
  require_args(n, lambda, "family_witness_closed_form");
  return -lambda * (n - 2.0);
}

std::vector<SpectralCluster> witness_spectrum_closed_form(int n) {
  if (n < 4 || n % 2 != 0) {
    throw UnsupportedDimensionError("witness_spectrum_closed_form: N must be even and >= 4");
  }
  int odd = 0;
  int even = 0;
  for (int j = 1; j < n; ++j) (j % 2 == 0 ? even : odd) += 2 * j + 1;
  return {{-(n - 2.0), 1}, {0.0, odd}, {2.0, even}};
}

std::vector<SpectralCluster> cluster_spectrum(const RealVector& ascending, double tol) {
  std::vector<SpectralCluster> out;
  double sum = 0.0;
  for (Eigen::Index k = 0; k < ascending.size(); ++k) {
    const double x = ascending(k);
    if (out.empty() || x - ascending(k - 1) > tol) {
      if (!out.empty()) out.back().value = sum / out.back().multiplicity;
      out.push_back({x, 0});
      sum = 0.0;
    }
    sum += x;
    ++out.back().multiplicity;
  }
  if (!out.empty()) out.back().value = sum / out.back().multiplicity;
  return out;
}

Complex appendix_a_value(const AppendixAConfig& cfg, const CoupledSpinSystem& sys) {
  const int n = sys.n();
  require_unit(cfg.phi_i, n, "phi_i");
  require_unit(cfg.phi_j, n, "phi_j");
  require_unit(cfg.chi_i, n, "chi_i");
  require_unit(cfg.chi_j, n, "chi_j");
  require_frame_pair(cfg.phi_i, cfg.phi_j, "phi");
  require_frame_pair(cfg.chi_i, cfg.chi_j, "chi");
  const ComplexVector theta_chi_i = time_reverse_vector(cfg.chi_i, sys);
  const ComplexVector theta_chi_j = time_reverse_vector(cfg.chi_j, sys);
  // Eigen's u.dot(v) is <u|v>, conjugate-linear in u.
  return cfg.phi_i.dot(cfg.chi_j) * cfg.chi_i.dot(cfg.phi_j) +
         cfg.phi_i.dot(theta_chi_i) * theta_chi_j.dot(cfg.phi_j);
}

AppendixADecomposition appendix_a_decomposition(const AppendixAConfig& cfg,
                                                const CoupledSpinSystem& sys) {
  const ComplexVector theta_chi_i = time_reverse_vector(cfg.chi_i, sys);
  const ComplexVector theta_phi_j = time_reverse_vector(cfg.phi_j, sys);
  AppendixADecomposition d{};
  d.lambda = cfg.chi_j.dot(theta_chi_i);
  ComplexVector perp = theta_chi_i - d.lambda * cfg.chi_j;
  const double perp_norm = perp.norm();
  if (perp_norm > 1e-14) {
    d.mu = perp_norm;
    perp /= perp_norm;
  } else {
    d.mu = 0.0;
    perp.setZero();
  }
  d.a = std::abs(cfg.phi_i.dot(cfg.chi_j));
  d.b = std::abs(theta_phi_j.dot(perp));
  d.c = std::abs(cfg.phi_i.dot(perp));
  d.d = std::abs(theta_phi_j.dot(cfg.chi_j));
  return d;
}

AppendixAConfig random_appendix_a_config(const CoupledSpinSystem& sys, std::mt19937_64& rng) {
  const int n = sys.n();
  const ComplexMatrix frame_1 = haar_unitary(n, rng);
  const ComplexMatrix frame_2 = haar_unitary(n, rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int i = pick(rng);
  const int j = pick(rng);
  return {frame_1.col(i), frame_1.col(j), frame_2.col(i), frame_2.col(j)};
}

}  // namespace spinwit::oracle
