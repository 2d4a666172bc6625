#include "spinwit/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

using json = nlohmann::json;

Complex parse_entry(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError("state file: entry must be [re, im]");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

json entry(Complex z) { return json::array({z.real(), z.imag()}); }

int parse_n_local(const json& doc) {
  if (!doc.contains("n_local") || !doc["n_local"].is_number_integer()) {
    throw ParseError("state file: missing integer field \"n_local\"");
  }
  const auto n = doc["n_local"].get<long long>();
  if (n < 1 || n > 64) throw ParseError("state file: n_local out of range");
  return static_cast<int>(n);
}

}  // namespace

StateData parse_state(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state file: top level must be an object");
  const int n = parse_n_local(doc);
  const std::size_t dim = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const bool has_matrix = doc.contains("matrix");
  const bool has_vector = doc.contains("vector");
  if (has_matrix == has_vector) {
    throw ParseError("state file: exactly one of \"matrix\" or \"vector\" is required");
  }

  if (has_vector) {
    const json& v = doc["vector"];
    if (!v.is_array() || v.size() != dim) {
      throw ParseError("state file: \"vector\" must hold " + std::to_string(dim) + " entries");
    }
    ComplexVector psi(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) psi(static_cast<Eigen::Index>(k)) = parse_entry(v[k]);
    return PureState(n, std::move(psi));
  }

  const json& m = doc["matrix"];
  if (!m.is_array() || m.size() != dim) {
    throw ParseError("state file: \"matrix\" must hold " + std::to_string(dim) + " rows");
  }
  ComplexMatrix rho(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = m[r];
    if (!row.is_array() || row.size() != dim) {
      throw ParseError("state file: row " + std::to_string(r) + " must hold " +
                       std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_entry(row[c]);
    }
  }
  return DensityMatrix(n, std::move(rho));
}

StateData read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

DensityMatrix read_density_file(const std::string& path) {
  StateData data = read_state_file(path);
  if (auto* pure = std::get_if<PureState>(&data)) return pure->density();
  return std::get<DensityMatrix>(std::move(data));
}

std::string to_json(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n_local", rho.n_local()}, {"matrix", std::move(rows)}}.dump();
}

std::string to_json(const PureState& psi) {
  json v = json::array();
  for (Eigen::Index k = 0; k < psi.vector().size(); ++k) v.push_back(entry(psi.vector()(k)));
  return json{{"n_local", psi.n_local()}, {"vector", std::move(v)}}.dump();
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write state file: " + path);
  out << text << '\n';
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  write_text(path, to_json(rho));
}

void write_state_file(const std::string& path, const PureState& psi) {
  write_text(path, to_json(psi));
}

}  // namespace spinwit
