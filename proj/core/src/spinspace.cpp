#include "spinwit/spinspace.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

void require_even(int n, int minimum, const char* what) {
  if (n % 2 != 0) {
    throw UnsupportedDimensionError(std::string(what) + ": local dimension " + std::to_string(n) +
                                    " is odd; time reversal needs even N");
  }
  if (n < minimum) {
    throw UnsupportedDimensionError(std::string(what) + ": local dimension " + std::to_string(n) +
                                    " below minimum " + std::to_string(minimum));
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

ComplexMatrix time_reversal_unitary(int n) {
  require_even(n, 2, "time_reversal_unitary");
  // Column k has m = j - k and maps to row N-1-k (m' = -m) with sign (-1)^(j-m) = (-1)^k.
  ComplexMatrix v = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    v(n - 1 - k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  }
  return v;
}

SpinOperators spin_operators(int n) {
  if (n < 1) throw DomainError("spin_operators: dimension must be positive");
  const double j = 0.5 * (n - 1);
  ComplexMatrix jz = ComplexMatrix::Zero(n, n);
  ComplexMatrix jplus = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = j - k;
    jz(k, k) = m;
    if (k > 0) {
      // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>, and m+1 sits at index k-1.
      jplus(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
  }
  const ComplexMatrix jminus = jplus.adjoint();
  const Complex i_unit(0.0, 1.0);
  return {0.5 * (jplus + jminus), (jplus - jminus) / (2.0 * i_unit), jz};
}

ComplexMatrix swap_operator(int n) {
  if (n < 1) throw DomainError("swap_operator: dimension must be positive");
  ComplexMatrix f = ComplexMatrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f(b * n + a, a * n + b) = 1.0;
  return f;
}

ComplexMatrix total_spin_squared(int n) {
  const SpinOperators s = spin_operators(n);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix j2 = ComplexMatrix::Zero(n * n, n * n);
  for (const ComplexMatrix* ja : {&s.x, &s.y, &s.z}) {
    const ComplexMatrix total = kron(*ja, id) + kron(id, *ja);
    j2 += total * total;
  }
  return j2;
}

std::vector<ComplexMatrix> total_spin_projectors(int n) {
  require_even(n, 4, "total_spin_projectors");
  const ComplexMatrix j2 = total_spin_squared(n);
  const ComplexMatrix id = ComplexMatrix::Identity(n * n, n * n);
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(n);
  for (int big_j = 0; big_j < n; ++big_j) {
    const double cj = big_j * (big_j + 1.0);
    ComplexMatrix p = id;
    for (int k = 0; k < n; ++k) {
      if (k == big_j) continue;
      const double ck = k * (k + 1.0);
      p = p * ((j2 - ck * id) / (cj - ck));
    }
    projectors.push_back(0.5 * (p + p.adjoint()));
  }
  return projectors;
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
  if (two_j1 < 0 || two_j2 < 0 || two_J < 0) {
    throw DomainError("clebsch_gordan: negative angular momentum");
  }
  if (two_m1 + two_m2 != two_M) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_M) > two_J) return 0.0;
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 || (two_J + two_M) % 2 != 0) {
    throw DomainError("clebsch_gordan: projection and spin differ by a half-integer");
  }
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2 ||
      (two_j1 + two_j2 + two_J) % 2 != 0) {
    return 0.0;
  }
  // Integer combinations of the (undoubled) quantum numbers.
  const int j1_plus_j2_minus_J = (two_j1 + two_j2 - two_J) / 2;
  const int j1_minus_m1 = (two_j1 - two_m1) / 2;
  const int j2_plus_m2 = (two_j2 + two_m2) / 2;
  const int J_minus_j2_plus_m1 = (two_J - two_j2 + two_m1) / 2;
  const int J_minus_j1_minus_m2 = (two_J - two_j1 - two_m2) / 2;

  const double pre =
      std::sqrt((two_J + 1) * factorial((two_J + two_j1 - two_j2) / 2) *
                factorial((two_J - two_j1 + two_j2) / 2) * factorial(j1_plus_j2_minus_J) /
                factorial((two_j1 + two_j2 + two_J) / 2 + 1)) *
      std::sqrt(factorial((two_J + two_M) / 2) * factorial((two_J - two_M) / 2) *
                factorial(j1_minus_m1) * factorial((two_j1 + two_m1) / 2) *
                factorial((two_j2 - two_m2) / 2) * factorial(j2_plus_m2));

  double sum = 0.0;
  for (int k = 0;; ++k) {
    if (k > j1_plus_j2_minus_J || k > j1_minus_m1 || k > j2_plus_m2) break;
    if (J_minus_j2_plus_m1 + k < 0 || J_minus_j1_minus_m2 + k < 0) continue;
    const double denom = factorial(k) * factorial(j1_plus_j2_minus_J - k) *
                         factorial(j1_minus_m1 - k) * factorial(j2_plus_m2 - k) *
                         factorial(J_minus_j2_plus_m1 + k) * factorial(J_minus_j1_minus_m2 + k);
    sum += ((k % 2 == 0) ? 1.0 : -1.0) / denom;
  }
  return pre * sum;
}

ComplexVector singlet_vector(int n) {
  require_even(n, 4, "singlet_vector");
  const int two_j = n - 1;
  ComplexVector psi = ComplexVector::Zero(n * n);
  for (int a = 0; a < n; ++a) {
    const int two_m1 = two_j - 2 * a;
    for (int b = 0; b < n; ++b) {
      const int two_m2 = two_j - 2 * b;
      psi(a * n + b) = clebsch_gordan(two_j, two_m1, two_j, two_m2, 0, 0);
    }
  }
  return psi;
}

std::shared_ptr<const CoupledSpinSystem> CoupledSpinSystem::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CoupledSpinSystem>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is discarded below.
  auto built = std::make_shared<const CoupledSpinSystem>(n);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(n, std::move(built)).first->second;
}

CoupledSpinSystem::CoupledSpinSystem(int n) : n_(n) {
  require_even(n, 4, "CoupledSpinSystem");
  if (n > kMaxSpinDimension) {
    throw SizeError("CoupledSpinSystem: local dimension " + std::to_string(n) +
                    " above supported maximum " + std::to_string(kMaxSpinDimension));
  }
  v_ = time_reversal_unitary(n);
  swap_ = swap_operator(n);
  identity_ = ComplexMatrix::Identity(n * n, n * n);
  singlet_ = singlet_vector(n);
  projectors_ = total_spin_projectors(n);
}

const ComplexMatrix& CoupledSpinSystem::projector(int total_j) const {
  if (total_j < 0 || total_j >= n_) {
    throw DomainError("projector: total spin " + std::to_string(total_j) + " out of range");
  }
  return projectors_[static_cast<std::size_t>(total_j)];
}

ComplexMatrix time_reverse(const ComplexMatrix& b, const CoupledSpinSystem& sys) {
  if (b.rows() != sys.n() || b.cols() != sys.n()) {
    throw DimensionError("time_reverse: operator is " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ", expected " + std::to_string(sys.n()) +
                         "x" + std::to_string(sys.n()));
  }
  return sys.v() * b.transpose() * sys.v().adjoint();
}

ComplexVector time_reverse_vector(const ComplexVector& phi, const CoupledSpinSystem& sys) {
  if (phi.size() != sys.n()) {
    throw DimensionError("time_reverse_vector: vector length " + std::to_string(phi.size()) +
                         ", expected " + std::to_string(sys.n()));
  }
  return sys.v() * phi.conjugate();
}

}  // namespace spinwit
