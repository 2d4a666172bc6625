#pragma once

#include <cstdint>
#include <string_view>

#include "spinwit/matkit.hpp"
#include "spinwit/spinspace.hpp"
#include "spinwit/states.hpp"

namespace spinwit {

// Tolerance for every strict-inequality verdict.
inline constexpr double kVerdictTol = 1e-9;

// ΦB = (tr B) I - B - ϑB.
ComplexMatrix phi_apply(const ComplexMatrix& b, const CoupledSpinSystem& sys);

enum class LocalMap { Transpose, TimeReverse, Phi };

// (I ⊗ Λ)ρ, applying Λ to each N×N block of subsystem-2 indices.
ComplexMatrix lift_on_2(LocalMap map, const ComplexMatrix& rho, const CoupledSpinSystem& sys);

double partial_transpose_norm(const ComplexMatrix& rho, const CoupledSpinSystem& sys);
double partial_time_reversal_norm(const ComplexMatrix& rho, const CoupledSpinSystem& sys);

// Realignment as ϑ₂(Fρ).
ComplexMatrix realign(const ComplexMatrix& rho, const CoupledSpinSystem& sys);
// Index reshuffle M[(i,j),(k,l)] = ρ[(i,k),(j,l)]. Same trace norm as realign().
ComplexMatrix realign_reshuffle(const ComplexMatrix& rho, int n_local);
double realign_norm(const ComplexMatrix& rho, const CoupledSpinSystem& sys);

enum class WitnessForm {
  Lifted,    // N (I⊗Φ) P0
  Swap,      // I - N P0 - F
  Spectral,  // -(N-2) P0 + 2 Σ_{J even, J>=2} P_J
};

std::string_view to_string(WitnessForm form);

class Witness {
 public:
  int n_local() const { return n_local_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  WitnessForm form() const { return form_; }

 private:
  friend Witness build_witness(const CoupledSpinSystem& sys, WitnessForm form);
  Witness(int n_local, ComplexMatrix matrix, WitnessForm form)
      : n_local_(n_local), matrix_(std::move(matrix)), form_(form) {}

  int n_local_;
  ComplexMatrix matrix_;
  WitnessForm form_;
};

Witness build_witness(const CoupledSpinSystem& sys, WitnessForm form = WitnessForm::Swap);

// tr(Wρ). f_W = -witness_value.
double witness_value(const ComplexMatrix& w, const ComplexMatrix& rho);
double witness_value(const Witness& w, const ComplexMatrix& rho);

// (U1⊗U2) W (U1⊗U2)†. U1, U2 must be unitary within 1e-10.
ComplexMatrix twisted_witness(const ComplexMatrix& w, const ComplexMatrix& u1,
                              const ComplexMatrix& u2);
ComplexMatrix twisted_witness(const Witness& w, const ComplexMatrix& u1, const ComplexMatrix& u2);

struct WitnessBudget {
  int restarts = 8;
  int iterations = 500;
  std::uint64_t seed = 0;
};

struct WitnessMinimum {
  double value;
  ComplexMatrix u1;
  ComplexMatrix u2;
};

// Minimizes tr(W_U ρ) over product unitaries U = U1⊗U2 by Riemannian steepest
// descent on U(N)×U(N). Restart 0 starts at the identity, the others at Haar
// random points drawn from per-restart streams of the seed. The returned value
// is re-evaluated from the returned unitaries.
WitnessMinimum minimize_witness(const ComplexMatrix& rho, const CoupledSpinSystem& sys,
                                const WitnessBudget& budget = {});

struct CriteriaVerdict {
  bool ppt_violated;
  bool realignment_violated;
  double witness_value;
  bool witness_detects;
  double trace_norm_t2;
  double trace_norm_r;
};

CriteriaVerdict evaluate_criteria(const DensityMatrix& rho, const CoupledSpinSystem& sys);

}  // namespace spinwit
