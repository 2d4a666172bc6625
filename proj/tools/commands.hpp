#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinwit/criteria.hpp"

namespace spinwit::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerify = 2;

enum class Format { Csv, Json };

// Shortest decimal that reparses to the same double.
std::string format_number(double x);

struct SweepRow {
  double lambda;
  double tr_W_rho;
  double bound_witness;
  double norm_T2;
  double bound_ppt;
  double norm_R;
  double bound_realign;
  double bound_upper;
  double eof_new;
  double eof_old;
  double eof_upper;
};

// Numeric pipeline on ρ(λ) for `steps` evenly spaced λ, endpoints included.
std::vector<SweepRow> family_sweep(int n, double lambda_min, double lambda_max, int steps);
std::string render_family(const std::vector<SweepRow>& rows, Format format);

struct SurveyRow {
  std::string source;  // "random" or "family"
  std::optional<double> lambda;
  int rank;
  CriteriaVerdict verdict;
};

struct SurveySummary {
  int samples = 0;
  int ppt = 0;
  int realignment = 0;
  int witness = 0;
  int witness_only = 0;
  int any = 0;
};

// rank = 0 means full rank N².
std::vector<SurveyRow> survey(int n, int samples, int rank, std::uint64_t seed,
                              bool include_family);
SurveySummary summarize(const std::vector<SurveyRow>& rows);
std::string render_survey(const std::vector<SurveyRow>& rows, Format format);

struct VerifyCheck {
  std::string name;
  bool passed;
  double max_error;
  double tol;
};

// suite is one of witness, appendixA, appendixB, figures, all.
// A set tol overrides every per-check tolerance.
std::vector<VerifyCheck> verify(const std::string& suite, int n, int samples, std::uint64_t seed,
                                std::optional<double> tol);

// Full argv dispatch. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinwit::cli
