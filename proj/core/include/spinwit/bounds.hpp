#pragma once

#include <optional>

#include "spinwit/criteria.hpp"
#include "spinwit/spinspace.hpp"
#include "spinwit/states.hpp"

namespace spinwit {

// All logarithms are base 2.

struct BoundOptions {
  bool optimize_witness = false;
  WitnessBudget budget{};
};

// Raw functionals may be negative; only the derived bounds are clamped.
struct BoundReport {
  double f_ppt;
  double f_realign;
  double f_witness;
  std::optional<double> f_witness_optimized;
  double concurrence_lower;
  double lambda0;
  double eof_lower;
};

enum class EofMode {
  WithWitness,  // Λ0 = max{||T2ρ||, ||Rρ||, 1 - tr(Wρ)}
  Legacy,       // Λ0 = max{||T2ρ||, ||Rρ||}
};

BoundReport concurrence_lower_bound(const DensityMatrix& rho, const CoupledSpinSystem& sys,
                                    const BoundOptions& options = {});

double eof_lower_bound(const DensityMatrix& rho, const CoupledSpinSystem& sys,
                       const BoundOptions& options = {}, EofMode mode = EofMode::WithWitness);

// √(2/(N(N-1))).
double concurrence_prefactor(int n);

double binary_entropy(double x);
// γ(Λ) = [√Λ + √((N-1)(N-Λ))]² / N².
double gamma_of(double lambda_big, int n);
// Minimal Schmidt entropy at fixed Σ_ij α_i α_j = Λ.
double min_entropy_r(double lambda_big, int n);
// co[R]: R on [1, 4(N-1)/N], then the straight line to (N, log N).
// The piecewise shape is the Terhal–Vollbrecht conjecture.
double convex_hull_r(double lambda0, int n);

struct FamilyCurvePoint {
  double lambda;
  double bound_witness;
  double bound_ppt;
  double bound_realign;
  double bound_upper;
  double eof_new;
  double eof_old;
  double eof_upper;
  // Unclamped formula values behind the three concurrence bounds.
  double raw_witness;
  double raw_ppt;
  double raw_realign;
};

// Closed-form bound curves for ρ(λ).
FamilyCurvePoint family_bounds_closed_form(int n, double lambda);

struct IsotropicReference {
  double exact_concurrence;
  double ppt_bound;
  double witness_bound;
};

IsotropicReference isotropic_reference(int n, double fidelity);

}  // namespace spinwit
