#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinwit/bounds.hpp"
#include "spinwit/errors.hpp"
#include "spinwit/oracle.hpp"
#include "spinwit/state_io.hpp"
#include "spinwit/states.hpp"

namespace spinwit::cli {

namespace {

using json = nlohmann::json;

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string short_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot open " + out_path + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to " + out_path + " failed");
}

double clamp_lambda0(double x, int n) { return std::clamp(x, 1.0, static_cast<double>(n)); }

// ---- verify suites ----

struct Check {
  std::string name;
  double error;
  double tol;
};

void check_witness(int n, int samples, std::uint64_t seed, std::vector<Check>& out) {
  const auto sys = CoupledSpinSystem::get(n);
  const ComplexMatrix swap = build_witness(*sys, WitnessForm::Swap).matrix();
  const double forms =
      std::max((build_witness(*sys, WitnessForm::Lifted).matrix() - swap).cwiseAbs().maxCoeff(),
               (build_witness(*sys, WitnessForm::Spectral).matrix() - swap).cwiseAbs().maxCoeff());
  out.push_back({"witness.three_forms", forms, 1e-10});

  const auto numeric = oracle::cluster_spectrum(hermitian_eigenvalues(swap));
  const auto closed = oracle::witness_spectrum_closed_form(n);
  double spec_err = 0.0;
  if (numeric.size() != closed.size()) {
    spec_err = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t k = 0; k < closed.size(); ++k) {
      if (numeric[k].multiplicity != closed[k].multiplicity) {
        spec_err = std::numeric_limits<double>::infinity();
        break;
      }
      spec_err = std::max(spec_err, std::abs(numeric[k].value - closed[k].value));
    }
  }
  out.push_back({"witness.spectrum", spec_err, 1e-9});

  // Φ(|φ><φ|) is a projector; W is nonnegative on product states.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double neg = 0.0;
  double idem = 0.0;
  double sep = 0.0;
  for (int s = 0; s < samples; ++s) {
    ComplexVector phi(n);
    for (auto& z : phi) z = Complex(gauss(rng), gauss(rng));
    phi.normalize();
    const ComplexMatrix image = phi_apply(phi * phi.adjoint(), *sys);
    neg = std::max(neg, -min_eigenvalue(image));
    idem = std::max(idem, (image * image - image).cwiseAbs().maxCoeff());

    ComplexVector a(n), b(n);
    for (auto& z : a) z = Complex(gauss(rng), gauss(rng));
    for (auto& z : b) z = Complex(gauss(rng), gauss(rng));
    const ComplexVector prod = kron(ComplexVector(a.normalized()), ComplexVector(b.normalized()));
    sep = std::max(sep, -prod.dot(swap * prod).real());
  }
  out.push_back({"witness.phi_positivity", neg, 1e-10});
  out.push_back({"witness.phi_idempotence", idem, 1e-10});
  out.push_back({"witness.product_nonnegative", sep, 1e-10});
}

void check_appendix_b(int n, std::vector<Check>& out) {
  const auto sys = CoupledSpinSystem::get(n);
  const Witness w = build_witness(*sys);
  double ppt = 0.0;
  double realign = 0.0;
  double wit = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double lambda = k / 100.0;
    const ComplexMatrix rho = family_state(*sys, lambda).matrix();
    const oracle::FamilyTraceNorms t = oracle::family_trace_norms_closed_form(n, lambda);
    ppt = std::max(ppt, std::abs(partial_transpose_norm(rho, *sys) - t.ppt_norm));
    realign = std::max(realign, std::abs(realign_norm(rho, *sys) - t.realign_norm));
    wit = std::max(wit, std::abs(witness_value(w, rho) - oracle::family_witness_closed_form(n, lambda)));
  }
  out.push_back({"appendixB.ppt_norm", ppt, 1e-9});
  out.push_back({"appendixB.realign_norm", realign, 1e-9});
  out.push_back({"appendixB.witness_value", wit, 1e-12});

  // PPT yet detected by W for 0 < λ <= 1/(N+2).
  double window = 0.0;
  const double edge = 1.0 / (n + 2.0);
  for (int k = 1; k <= 20; ++k) {
    const double lambda = edge * k / 20.0;
    const ComplexMatrix rho = family_state(*sys, lambda).matrix();
    window = std::max(window, -min_eigenvalue(lift_on_2(LocalMap::TimeReverse, rho, *sys)));
    if (witness_value(w, rho) >= 0.0) window = std::numeric_limits<double>::infinity();
  }
  out.push_back({"appendixB.ppt_entangled_window", window, 1e-10});
}

void check_appendix_a(int n, int samples, std::uint64_t seed, std::vector<Check>& out) {
  const auto sys = CoupledSpinSystem::get(n);
  std::mt19937_64 rng(seed);
  double modulus = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex a = oracle::appendix_a_value(oracle::random_appendix_a_config(*sys, rng), *sys);
    modulus = std::max(modulus, std::abs(a) - 1.0);
  }
  out.push_back({"appendixA.modulus", std::max(modulus, 0.0), 1e-12});

  // -<ψ|W_U|ψ> <= Σ_{i≠j} α_i α_j, with and without a product twist.
  const Witness w = build_witness(*sys);
  double excess = 0.0;
  const int states = std::max(1, samples / 10);
  for (int s = 0; s < states; ++s) {
    const std::uint64_t state_seed = rng();
    const PureState psi = random_pure(*sys, state_seed);
    const SchmidtForm sf = schmidt_decompose(psi);
    const double sum = sf.coefficients.sum();
    const double off = sum * sum - sf.coefficients.squaredNorm();
    const ComplexMatrix rho = psi.density().matrix();
    excess = std::max(excess, -witness_value(w, rho) - off);
    const auto [u1, u2] = random_product_unitary(*sys, rng());
    excess = std::max(excess, -witness_value(twisted_witness(w, u1, u2), rho) - off);
  }
  out.push_back({"appendixA.pure_state_inequality", std::max(excess, 0.0), 1e-10});
}

void check_figures(int n, std::vector<Check>& out) {
  const auto rows = family_sweep(n, 0.0, 1.0, 101);
  double pipeline = 0.0;
  double order = 0.0;
  for (const SweepRow& r : rows) {
    const FamilyCurvePoint p = family_bounds_closed_form(n, r.lambda);
    for (auto [a, b] : {std::pair{r.bound_witness, p.bound_witness}, {r.bound_ppt, p.bound_ppt},
                        {r.bound_realign, p.bound_realign}, {r.bound_upper, p.bound_upper},
                        {r.eof_new, p.eof_new}, {r.eof_old, p.eof_old},
                        {r.eof_upper, p.eof_upper}}) {
      pipeline = std::max(pipeline, std::abs(a - b));
    }
    order = std::max(order, r.eof_old - r.eof_new);
  }
  out.push_back({"figures.pipeline_vs_closed_form", pipeline, 1e-9});
  out.push_back({"figures.eof_new_dominates_old", std::max(order, 0.0), 1e-12});
  const SweepRow& mid = rows[50];
  out.push_back({"figures.crossing_at_half", std::abs(mid.bound_witness - mid.bound_ppt), 1e-9});

  if (n != 4) return;
  // Reference curve values, five significant digits.
  constexpr double kLambda[] = {0.1, 0.25, 0.5, 0.75, 1.0};
  constexpr double kWitness[] = {0.08165, 0.20412, 0.40825, 0.61237, 0.81650};
  constexpr double kPpt[] = {0.0, 0.10206, 0.40825, 0.81650, 1.22474};
  double fig1 = 0.0;
  for (int k = 0; k < 5; ++k) {
    const SweepRow& r = rows[static_cast<std::size_t>(std::lround(kLambda[k] * 100))];
    fig1 = std::max({fig1, std::abs(r.bound_witness - kWitness[k]), std::abs(r.bound_ppt - kPpt[k])});
  }
  out.push_back({"figures.fig1_values", fig1, 1e-5});
  out.push_back({"figures.fig2_endpoint", std::abs(rows[100].eof_new - 2.0), 1e-9});
  out.push_back({"figures.fig2_quarter",
                 std::max(std::abs(rows[25].eof_new - 0.1603), std::abs(rows[25].eof_old - 0.0518)),
                 1e-3});
}

// ---- output ----

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream s;
  s << "index,source,lambda,rank,trace_norm_t2,trace_norm_r,witness_value,ppt_violated,"
       "realignment_violated,witness_detects\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SurveyRow& r = rows[i];
    s << i << ',' << r.source << ',' << (r.lambda ? format_number(*r.lambda) : "") << ','
      << r.rank << ',' << format_number(r.verdict.trace_norm_t2) << ','
      << format_number(r.verdict.trace_norm_r) << ',' << format_number(r.verdict.witness_value)
      << ',' << bool_text(r.verdict.ppt_violated) << ','
      << bool_text(r.verdict.realignment_violated) << ',' << bool_text(r.verdict.witness_detects)
      << '\n';
  }
  const SurveySummary m = summarize(rows);
  s << "# summary samples=" << m.samples << " ppt=" << m.ppt << " realignment=" << m.realignment
    << " witness=" << m.witness << " witness_only=" << m.witness_only << " any=" << m.any << '\n';
  return s.str();
}

json verdict_json(const CriteriaVerdict& v) {
  return {{"ppt_violated", v.ppt_violated},
          {"realignment_violated", v.realignment_violated},
          {"witness_detects", v.witness_detects},
          {"witness_value", v.witness_value},
          {"trace_norm_t2", v.trace_norm_t2},
          {"trace_norm_r", v.trace_norm_r}};
}

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Csv; }

WitnessForm parse_form(const std::string& s) {
  if (s == "lifted") return WitnessForm::Lifted;
  if (s == "spectral") return WitnessForm::Spectral;
  return WitnessForm::Swap;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<SweepRow> family_sweep(int n, double lambda_min, double lambda_max, int steps) {
  if (steps < 2) throw DomainError("family: steps must be at least 2");
  if (!(lambda_min <= lambda_max)) throw DomainError("family: lambda-min exceeds lambda-max");
  const auto sys = CoupledSpinSystem::get(n);
  const Witness w = build_witness(*sys);
  const PureState singlet(n, sys->singlet());
  const double c_singlet = concurrence_pure(singlet);
  const double e_singlet = eof_pure(singlet);
  const double pref = concurrence_prefactor(n);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double lambda = (k == steps - 1)
                              ? lambda_max
                              : lambda_min + (lambda_max - lambda_min) * k / (steps - 1.0);
    const DensityMatrix rho = family_state(*sys, lambda);
    SweepRow r{};
    r.lambda = lambda;
    r.tr_W_rho = witness_value(w, rho.matrix());
    r.norm_T2 = partial_transpose_norm(rho.matrix(), *sys);
    r.norm_R = realign_norm(rho.matrix(), *sys);
    r.bound_witness = pref * std::max(-r.tr_W_rho, 0.0);
    r.bound_ppt = pref * std::max(r.norm_T2 - 1.0, 0.0);
    r.bound_realign = pref * std::max(r.norm_R - 1.0, 0.0);
    r.bound_upper = lambda * c_singlet;
    r.eof_new = convex_hull_r(clamp_lambda0(std::max({r.norm_T2, r.norm_R, 1.0 - r.tr_W_rho}), n), n);
    r.eof_old = convex_hull_r(clamp_lambda0(std::max(r.norm_T2, r.norm_R), n), n);
    r.eof_upper = lambda * e_singlet;
    rows.push_back(r);
  }
  return rows;
}

std::string render_family(const std::vector<SweepRow>& rows, Format format) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const SweepRow& r : rows) {
      arr.push_back({{"lambda", r.lambda},         {"tr_W_rho", r.tr_W_rho},
                     {"bound_witness", r.bound_witness}, {"norm_T2", r.norm_T2},
                     {"bound_ppt", r.bound_ppt},     {"norm_R", r.norm_R},
                     {"bound_realign", r.bound_realign}, {"bound_upper", r.bound_upper},
                     {"eof_new", r.eof_new},         {"eof_old", r.eof_old},
                     {"eof_upper", r.eof_upper}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "lambda,tr_W_rho,bound_witness,norm_T2,bound_ppt,norm_R,bound_realign,bound_upper,"
       "eof_new,eof_old,eof_upper\n";
  for (const SweepRow& r : rows) {
    const double cols[] = {r.lambda,    r.tr_W_rho,      r.bound_witness, r.norm_T2,
                           r.bound_ppt, r.norm_R,        r.bound_realign, r.bound_upper,
                           r.eof_new,   r.eof_old,       r.eof_upper};
    for (std::size_t i = 0; i < std::size(cols); ++i) {
      if (i) s << ',';
      s << format_number(cols[i]);
    }
    s << '\n';
  }
  return s.str();
}

std::vector<SurveyRow> survey(int n, int samples, int rank, std::uint64_t seed,
                              bool include_family) {
  if (samples < 1) throw DomainError("survey: samples must be at least 1");
  const auto sys = CoupledSpinSystem::get(n);
  if (rank < 0 || rank > sys->dim()) {
    throw DomainError("survey: rank must lie in [1, N^2], or 0 for full rank");
  }
  const int r = rank == 0 ? sys->dim() : rank;
  std::vector<SurveyRow> rows;
  std::mt19937_64 master(seed);
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = random_density(*sys, r, master());
    rows.push_back({"random", std::nullopt, r, evaluate_criteria(rho, *sys)});
  }
  if (include_family) {
    for (int k = 5; k <= 9; ++k) {
      const double lambda = k / 100.0;
      const DensityMatrix rho = family_state(*sys, lambda);
      rows.push_back({"family", lambda, sys->dim(), evaluate_criteria(rho, *sys)});
    }
  }
  return rows;
}

SurveySummary summarize(const std::vector<SurveyRow>& rows) {
  SurveySummary m;
  for (const SurveyRow& r : rows) {
    const CriteriaVerdict& v = r.verdict;
    ++m.samples;
    m.ppt += v.ppt_violated;
    m.realignment += v.realignment_violated;
    m.witness += v.witness_detects;
    m.witness_only += v.witness_detects && !v.ppt_violated && !v.realignment_violated;
    m.any += v.witness_detects || v.ppt_violated || v.realignment_violated;
  }
  return m;
}

std::string render_survey(const std::vector<SurveyRow>& rows, Format format) {
  if (format == Format::Csv) return survey_csv(rows);
  json arr = json::array();
  for (const SurveyRow& r : rows) {
    json row = verdict_json(r.verdict);
    row["source"] = r.source;
    row["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
    row["rank"] = r.rank;
    arr.push_back(std::move(row));
  }
  const SurveySummary m = summarize(rows);
  const json doc = {{"rows", arr},
                    {"summary",
                     {{"samples", m.samples},
                      {"ppt", m.ppt},
                      {"realignment", m.realignment},
                      {"witness", m.witness},
                      {"witness_only", m.witness_only},
                      {"any", m.any}}}};
  return doc.dump(2) + "\n";
}

std::vector<VerifyCheck> verify(const std::string& suite, int n, int samples, std::uint64_t seed,
                                std::optional<double> tol) {
  if (samples < 1) throw DomainError("verify: samples must be at least 1");
  CoupledSpinSystem::get(n);  // validates n
  const bool all = suite == "all";
  std::vector<Check> checks;
  bool known = all;
  if (all || suite == "witness") {
    check_witness(n, samples, seed, checks);
    known = true;
  }
  if (all || suite == "appendixA") {
    check_appendix_a(n, samples, seed, checks);
    known = true;
  }
  if (all || suite == "appendixB") {
    check_appendix_b(n, checks);
    known = true;
  }
  if (all || suite == "figures") {
    check_figures(n, checks);
    known = true;
  }
  if (!known) throw DomainError("verify: unknown suite " + suite);

  std::vector<VerifyCheck> result;
  for (const Check& c : checks) {
    const double t = tol.value_or(c.tol);
    result.push_back({c.name, c.error <= t, c.error, t});
  }
  return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"spinwit: separability criteria for two coupled spins"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"csv", "json"};
  std::string out_path;
  std::string format = "csv";
  int n = 4;
  std::uint64_t seed = 0;

  auto* family = app.add_subcommand("family", "bound curves along the family rho(lambda)");
  double lambda_min = 0.0, lambda_max = 1.0;
  int steps = 101;
  family->add_option("--n", n, "local dimension (even, >= 4)")->capture_default_str();
  family->add_option("--lambda-min", lambda_min)->capture_default_str();
  family->add_option("--lambda-max", lambda_max)->capture_default_str();
  family->add_option("--steps", steps, "grid points, endpoints included")->capture_default_str();
  family->add_option("--out", out_path, "output file (default stdout)");
  family->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "concurrence and EoF bounds for a state file");
  std::string state_path;
  bool optimize = false;
  WitnessBudget budget;
  bounds->add_option("state", state_path, "state JSON file")->required();
  bounds->add_flag("--optimize", optimize, "also minimize over product twists of W");
  bounds->add_option("--restarts", budget.restarts)->capture_default_str();
  bounds->add_option("--iterations", budget.iterations)->capture_default_str();
  auto* bounds_seed = bounds->add_option("--seed", seed, "required with --optimize");
  bounds->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int samples = 1000;
  std::optional<double> tol;
  verify_cmd->add_option("suite", suite)
      ->check(CLI::IsMember({"witness", "appendixA", "appendixB", "figures", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--n", n)->capture_default_str();
  verify_cmd->add_option("--samples", samples)->capture_default_str();
  verify_cmd->add_option("--seed", seed)->required();
  verify_cmd->add_option("--tol", tol, "override every per-check tolerance");

  auto* survey_cmd = app.add_subcommand("survey", "criteria verdicts on random states");
  int rank = 0;
  bool include_family = false;
  survey_cmd->add_option("--n", n)->capture_default_str();
  survey_cmd->add_option("--samples", samples)->required();
  survey_cmd->add_option("--rank", rank, "Ginibre rank, 0 for full")->capture_default_str();
  survey_cmd->add_option("--seed", seed)->required();
  survey_cmd->add_flag("--include-family", include_family, "append rho(lambda), lambda=0.05..0.09");
  survey_cmd->add_option("--out", out_path);
  survey_cmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  auto* witness_cmd = app.add_subcommand("witness", "spectrum or matrix of W");
  std::string form = "swap";
  bool matrix = false;
  witness_cmd->add_option("--n", n)->capture_default_str();
  witness_cmd->add_option("--form", form)
      ->check(CLI::IsMember({"lifted", "swap", "spectral"}))
      ->capture_default_str();
  witness_cmd->add_flag("--matrix", matrix, "print the matrix instead of the spectrum");
  witness_cmd->add_option("--out", out_path);
  witness_cmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*family) {
      emit(render_family(family_sweep(n, lambda_min, lambda_max, steps), parse_format(format)),
           out_path, out);
    } else if (*bounds) {
      if (optimize && bounds_seed->count() == 0) {
        err << "bounds: --optimize needs an explicit --seed\n";
        return kExitInput;
      }
      const DensityMatrix rho = read_density_file(state_path);
      const auto sys = CoupledSpinSystem::get(rho.n_local());
      BoundOptions options;
      options.optimize_witness = optimize;
      budget.seed = seed;
      options.budget = budget;
      const BoundReport r = concurrence_lower_bound(rho, *sys, options);
      json doc = verdict_json(evaluate_criteria(rho, *sys));
      doc["n_local"] = rho.n_local();
      doc["f_ppt"] = r.f_ppt;
      doc["f_realign"] = r.f_realign;
      doc["f_witness"] = r.f_witness;
      if (r.f_witness_optimized) doc["f_witness_optimized"] = *r.f_witness_optimized;
      doc["concurrence_lower"] = r.concurrence_lower;
      doc["lambda0"] = r.lambda0;
      doc["eof_lower"] = r.eof_lower;
      doc["eof_lower_legacy"] = eof_lower_bound(rho, *sys, options, EofMode::Legacy);
      emit(doc.dump(2) + "\n", out_path, out);
    } else if (*verify_cmd) {
      const auto checks = verify(suite, n, samples, seed, tol);
      int failed = 0;
      for (const VerifyCheck& c : checks) {
        failed += !c.passed;
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " max_err=" << short_g(c.max_error)
            << " tol=" << short_g(c.tol) << '\n';
      }
      out << "verify " << suite << ": " << checks.size() - failed << '/' << checks.size()
          << " passed\n";
      return failed ? kExitVerify : kExitOk;
    } else if (*survey_cmd) {
      emit(render_survey(survey(n, samples, rank, seed, include_family), parse_format(format)),
           out_path, out);
    } else if (*witness_cmd) {
      const auto sys = CoupledSpinSystem::get(n);
      const Witness w = build_witness(*sys, parse_form(form));
      std::ostringstream s;
      if (matrix) {
        if (parse_format(format) == Format::Json) {
          json rows = json::array();
          for (Eigen::Index i = 0; i < w.matrix().rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < w.matrix().cols(); ++j) {
              row.push_back({w.matrix()(i, j).real(), w.matrix()(i, j).imag()});
            }
            rows.push_back(std::move(row));
          }
          s << json{{"n_local", n}, {"form", to_string(w.form())}, {"matrix", rows}}.dump() << '\n';
        } else {
          s << "row,col,re,im\n";
          for (Eigen::Index i = 0; i < w.matrix().rows(); ++i)
            for (Eigen::Index j = 0; j < w.matrix().cols(); ++j)
              s << i << ',' << j << ',' << format_number(w.matrix()(i, j).real()) << ','
                << format_number(w.matrix()(i, j).imag()) << '\n';
        }
      } else {
        const auto clusters = oracle::cluster_spectrum(hermitian_eigenvalues(w.matrix()));
        if (parse_format(format) == Format::Json) {
          json arr = json::array();
          for (const auto& c : clusters) {
            arr.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
          }
          s << json{{"n_local", n}, {"form", to_string(w.form())}, {"spectrum", arr}}.dump(2)
            << '\n';
        } else {
          s << "value,multiplicity\n";
          for (const auto& c : clusters) s << format_number(c.value) << ',' << c.multiplicity << '\n';
        }
      }
      emit(s.str(), out_path, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace spinwit::cli
