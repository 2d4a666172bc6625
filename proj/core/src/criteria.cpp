#include "spinwit/criteria.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

void require_composite(const ComplexMatrix& rho, const CoupledSpinSystem& sys, const char* what) {
  if (rho.rows() != sys.dim() || rho.cols() != sys.dim()) {
    throw DimensionError(std::string(what) + ": operator is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", expected " + std::to_string(sys.dim()) +
                         "x" + std::to_string(sys.dim()));
  }
}

ComplexMatrix apply_local(LocalMap map, const ComplexMatrix& block, const CoupledSpinSystem& sys) {
  switch (map) {
    case LocalMap::Transpose:
      return block.transpose();
    case LocalMap::TimeReverse:
      return time_reverse(block, sys);
    case LocalMap::Phi:
      return phi_apply(block, sys);
  }
  throw DomainError("lift_on_2: unknown map");
}

// Product-unitary conjugation without the unitarity check, for the optimizer's
// inner loop. Same arithmetic as twisted_witness().
ComplexMatrix conjugate_product(const ComplexMatrix& w, const ComplexMatrix& u1,
                                const ComplexMatrix& u2) {
  const ComplexMatrix u = kron(u1, u2);
  return u * w * u.adjoint();
}

}  // namespace

ComplexMatrix phi_apply(const ComplexMatrix& b, const CoupledSpinSystem& sys) {
  if (b.rows() != sys.n() || b.cols() != sys.n()) {
    throw DimensionError("phi_apply: operator is " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ", expected " + std::to_string(sys.n()) +
                         "x" + std::to_string(sys.n()));
  }
  ComplexMatrix out = -b - time_reverse(b, sys);
  out.diagonal().array() += b.trace();
  return out;
}

ComplexMatrix lift_on_2(LocalMap map, const ComplexMatrix& rho, const CoupledSpinSystem& sys) {
  require_composite(rho, sys, "lift_on_2");
  const int n = sys.n();
  ComplexMatrix out(sys.dim(), sys.dim());
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      out.block(a * n, c * n, n, n) = apply_local(map, rho.block(a * n, c * n, n, n), sys);
    }
  }
  return out;
}

double partial_transpose_norm(const ComplexMatrix& rho, const CoupledSpinSystem& sys) {
  return trace_norm(lift_on_2(LocalMap::Transpose, rho, sys));
}

double partial_time_reversal_norm(const ComplexMatrix& rho, const CoupledSpinSystem& sys) {
  return trace_norm(lift_on_2(LocalMap::TimeReverse, rho, sys));
}

ComplexMatrix realign(const ComplexMatrix& rho, const CoupledSpinSystem& sys) {
  require_composite(rho, sys, "realign");
  return lift_on_2(LocalMap::TimeReverse, sys.swap() * rho, sys);
}

ComplexMatrix realign_reshuffle(const ComplexMatrix& rho, int n_local) {
  const Eigen::Index n = n_local;
  if (n < 1 || rho.rows() != n * n || rho.cols() != n * n) {
    throw DimensionError("realign_reshuffle: operator is not (N²)x(N²) for N = " +
                         std::to_string(n_local));
  }
  ComplexMatrix out(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) out(i * n + j, k * n + l) = rho(i * n + k, j * n + l);
  return out;
}

double realign_norm(const ComplexMatrix& rho, const CoupledSpinSystem& sys) {
  return trace_norm(realign(rho, sys));
}

std::string_view to_string(WitnessForm form) {
  switch (form) {
    case WitnessForm::Lifted:
      return "lifted";
    case WitnessForm::Swap:
      return "swap";
    case WitnessForm::Spectral:
      return "spectral";
  }
  return "unknown";
}

Witness build_witness(const CoupledSpinSystem& sys, WitnessForm form) {
  const int n = sys.n();
  ComplexMatrix w;
  switch (form) {
    case WitnessForm::Lifted:
      w = static_cast<double>(n) * lift_on_2(LocalMap::Phi, sys.p0(), sys);
      break;
    case WitnessForm::Swap:
      w = sys.identity() - static_cast<double>(n) * sys.p0() - sys.swap();
      break;
    case WitnessForm::Spectral:
      w = -static_cast<double>(n - 2) * sys.p0();
      for (int j = 2; j < n; j += 2) w += 2.0 * sys.projector(j);
      break;
  }
  const double expected_trace = static_cast<double>(n) * (n - 2);
  if (!is_hermitian(w, 1e-12) || std::abs(w.trace() - expected_trace) > 1e-10 * expected_trace) {
    throw Error("build_witness: constructed operator violates witness invariants");
  }
  return Witness(n, std::move(w), form);
}

double witness_value(const ComplexMatrix& w, const ComplexMatrix& rho) {
  if (w.rows() != w.cols() || rho.rows() != w.rows() || rho.cols() != w.cols()) {
    throw DimensionError("witness_value: witness and state dimensions differ");
  }
  return w.cwiseProduct(rho.transpose()).sum().real();
}

double witness_value(const Witness& w, const ComplexMatrix& rho) {
  return witness_value(w.matrix(), rho);
}

ComplexMatrix twisted_witness(const ComplexMatrix& w, const ComplexMatrix& u1,
                              const ComplexMatrix& u2) {
  if (!is_unitary(u1) || !is_unitary(u2)) {
    throw PreconditionError("twisted_witness: local operators must be unitary within 1e-10");
  }
  if (u1.rows() * u2.rows() != w.rows() || w.rows() != w.cols()) {
    throw DimensionError("twisted_witness: unitary dimensions do not match witness");
  }
  return conjugate_product(w, u1, u2);
}

ComplexMatrix twisted_witness(const Witness& w, const ComplexMatrix& u1, const ComplexMatrix& u2) {
  return twisted_witness(w.matrix(), u1, u2);
}

WitnessMinimum minimize_witness(const ComplexMatrix& rho, const CoupledSpinSystem& sys,
                                const WitnessBudget& budget) {
  require_composite(rho, sys, "minimize_witness");
  if (budget.restarts < 1 || budget.iterations < 0) {
    throw DomainError("minimize_witness: budget needs restarts >= 1 and iterations >= 0");
  }
  const int n = sys.n();
  const ComplexMatrix w = build_witness(sys).matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  auto objective = [&](const ComplexMatrix& u1, const ComplexMatrix& u2) {
    return witness_value(conjugate_product(w, u1, u2), rho);
  };

  constexpr double kArmijo = 1e-4;
  constexpr double kMinStep = 1e-14;
  constexpr double kGradFloor = 1e-26;

  WitnessMinimum best{std::numeric_limits<double>::infinity(), id, id};
  for (int restart = 0; restart < budget.restarts; ++restart) {
    ComplexMatrix u1 = id;
    ComplexMatrix u2 = id;
    if (restart > 0) {
      std::seed_seq seq{static_cast<std::uint32_t>(budget.seed),
                        static_cast<std::uint32_t>(budget.seed >> 32),
                        static_cast<std::uint32_t>(restart)};
      std::mt19937_64 rng(seq);
      u1 = haar_unitary(n, rng);
      u2 = haar_unitary(n, rng);
    }
    double value = objective(u1, u2);
    double step = 1.0;
    for (int it = 0; it < budget.iterations; ++it) {
      // d/dε tr(e^{iεH} S e^{-iεH} ρ) = tr(H C) with C = i[S, ρ]; the local
      // gradients are the partial traces of C.
      const ComplexMatrix s = conjugate_product(w, u1, u2);
      const ComplexMatrix c = Complex(0.0, 1.0) * (s * rho - rho * s);
      // Hermitian up to rounding, which dominates once the gradient is tiny.
      ComplexMatrix g1 = partial_trace(c, n, Subsystem::Second);
      ComplexMatrix g2 = partial_trace(c, n, Subsystem::First);
      g1 = 0.5 * (g1 + g1.adjoint()).eval();
      g2 = 0.5 * (g2 + g2.adjoint()).eval();
      const double grad_sq = g1.squaredNorm() + g2.squaredNorm();
      if (grad_sq < kGradFloor) break;

      bool accepted = false;
      while (step >= kMinStep) {
        ComplexMatrix t1 = unitary_exp(-step * g1) * u1;
        ComplexMatrix t2 = unitary_exp(-step * g2) * u2;
        const double trial = objective(t1, t2);
        if (trial <= value - kArmijo * step * grad_sq) {
          u1 = std::move(t1);
          u2 = std::move(t2);
          value = trial;
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
      step = std::min(2.0 * step, 16.0);
    }
    if (value < best.value) best = {value, u1, u2};
  }
  best.value = witness_value(twisted_witness(w, best.u1, best.u2), rho);
  return best;
}

CriteriaVerdict evaluate_criteria(const DensityMatrix& rho, const CoupledSpinSystem& sys) {
  if (rho.n_local() != sys.n()) {
    throw DimensionError("evaluate_criteria: state and system dimensions differ");
  }
  const ComplexMatrix& m = rho.matrix();
  CriteriaVerdict v{};
  v.trace_norm_t2 = partial_transpose_norm(m, sys);
  v.trace_norm_r = realign_norm(m, sys);
  v.witness_value = witness_value(build_witness(sys).matrix(), m);
  v.ppt_violated = v.trace_norm_t2 > 1.0 + kVerdictTol;
  v.realignment_violated = v.trace_norm_r > 1.0 + kVerdictTol;
  v.witness_detects = v.witness_value < -kVerdictTol;
  return v;
}

}  // namespace spinwit
