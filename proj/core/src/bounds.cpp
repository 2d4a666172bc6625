#include "spinwit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

void require_family_args(int n, double lambda, const char* what) {
  if (n < 4 || n % 2 != 0) {
    throw UnsupportedDimensionError(std::string(what) + ": N must be even and >= 4");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError(std::string(what) + ": lambda must lie in [0, 1]");
  }
}

void require_lambda_range(double lambda_big, int n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + ": N must be >= 2");
  if (!(lambda_big >= 1.0 && lambda_big <= n)) {
    throw DomainError(std::string(what) + ": Lambda = " + std::to_string(lambda_big) +
                      " outside [1, " + std::to_string(n) + "]");
  }
}

double clamp_lambda0(double value, int n) { return std::clamp(value, 1.0, static_cast<double>(n)); }

}  // namespace

double concurrence_prefactor(int n) { return std::sqrt(2.0 / (static_cast<double>(n) * (n - 1))); }

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double gamma_of(double lambda_big, int n) {
  require_lambda_range(lambda_big, n, "gamma_of");
  const double nn = n;
  const double root = std::sqrt(lambda_big) + std::sqrt((nn - 1.0) * (nn - lambda_big));
  return root * root / (nn * nn);
}

double min_entropy_r(double lambda_big, int n) {
  const double g = gamma_of(lambda_big, n);
  return binary_entropy(g) + (1.0 - g) * std::log2(n - 1.0);
}

double convex_hull_r(double lambda0, int n) {
  require_lambda_range(lambda0, n, "convex_hull_r");
  const double nn = n;
  const double breakpoint = 4.0 * (nn - 1.0) / nn;
  if (lambda0 <= breakpoint) return min_entropy_r(lambda0, n);
  return std::log2(nn - 1.0) / (nn - 2.0) * (lambda0 - nn) + std::log2(nn);
}

BoundReport concurrence_lower_bound(const DensityMatrix& rho, const CoupledSpinSystem& sys,
                                    const BoundOptions& options) {
  if (rho.n_local() != sys.n()) {
    throw DimensionError("concurrence_lower_bound: state and system dimensions differ");
  }
  const ComplexMatrix& m = rho.matrix();
  BoundReport r{};
  r.f_ppt = partial_transpose_norm(m, sys) - 1.0;
  r.f_realign = realign_norm(m, sys) - 1.0;
  r.f_witness = -witness_value(build_witness(sys).matrix(), m);
  if (options.optimize_witness) {
    r.f_witness_optimized = -minimize_witness(m, sys, options.budget).value;
  }

  double best = std::max({r.f_ppt, r.f_realign, r.f_witness});
  if (r.f_witness_optimized) best = std::max(best, *r.f_witness_optimized);
  r.concurrence_lower = concurrence_prefactor(sys.n()) * std::max(best, 0.0);
  r.lambda0 = clamp_lambda0(1.0 + best, sys.n());
  r.eof_lower = convex_hull_r(r.lambda0, sys.n());
  return r;
}

double eof_lower_bound(const DensityMatrix& rho, const CoupledSpinSystem& sys,
                       const BoundOptions& options, EofMode mode) {
  if (mode == EofMode::WithWitness) return concurrence_lower_bound(rho, sys, options).eof_lower;
  if (rho.n_local() != sys.n()) {
    throw DimensionError("eof_lower_bound: state and system dimensions differ");
  }
  const ComplexMatrix& m = rho.matrix();
  const double lambda0 = std::max(partial_transpose_norm(m, sys), realign_norm(m, sys));
  return convex_hull_r(clamp_lambda0(lambda0, sys.n()), sys.n());
}

FamilyCurvePoint family_bounds_closed_form(int n, double lambda) {
  require_family_args(n, lambda, "family_bounds_closed_form");
  const double nn = n;
  const double pref = std::sqrt(2.0 * (nn - 1.0) / nn);
  const double ppt_edge = 1.0 / (nn + 2.0);

  FamilyCurvePoint p{};
  p.lambda = lambda;
  p.raw_witness = pref * (nn - 2.0) / (nn - 1.0) * lambda;
  if (lambda <= ppt_edge) {
    p.raw_ppt = 0.0;
    p.raw_realign = pref * (-2.0 * lambda) / (nn - 1.0);
  } else {
    p.raw_ppt = (lambda <= 0.5)
                    ? pref * (nn - 2.0) / (nn * (nn - 1.0)) * ((nn + 2.0) * lambda - 1.0)
                    : pref * (nn * lambda - 1.0) / (nn - 1.0);
    p.raw_realign = pref * (nn * lambda - 1.0) / (nn - 1.0);
  }
  p.bound_witness = std::max(p.raw_witness, 0.0);
  p.bound_ppt = std::max(p.raw_ppt, 0.0);
  p.bound_realign = std::max(p.raw_realign, 0.0);
  p.bound_upper = pref * lambda;

  // Each concurrence bound is √(2/(N(N-1))) (Λ - 1) for its Λ.
  const double c = concurrence_prefactor(n);
  const double norm_t2 = 1.0 + p.raw_ppt / c;
  const double norm_r = 1.0 + p.raw_realign / c;
  const double witness_lambda = 1.0 + p.raw_witness / c;
  p.eof_new = convex_hull_r(clamp_lambda0(std::max({norm_t2, norm_r, witness_lambda}), n), n);
  p.eof_old = convex_hull_r(clamp_lambda0(std::max(norm_t2, norm_r), n), n);
  p.eof_upper = lambda * std::log2(nn);
  return p;
}

IsotropicReference isotropic_reference(int n, double fidelity) {
  if (n < 4 || n % 2 != 0) {
    throw UnsupportedDimensionError("isotropic_reference: N must be even and >= 4");
  }
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw DomainError("isotropic_reference: fidelity must lie in [0, 1]");
  }
  const double nn = n;
  const double excess = fidelity - 1.0 / nn;
  if (excess <= 0.0) return {0.0, 0.0, 0.0};
  const double exact = std::sqrt(2.0 * nn / (nn - 1.0)) * excess;
  return {exact, exact, (nn - 2.0) / (nn - 1.0) * exact};
}

}  // namespace spinwit
