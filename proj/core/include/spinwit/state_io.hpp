#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "spinwit/states.hpp"

namespace spinwit {

// State files are JSON:
//   {"n_local": N, "matrix": [[[re, im], ...], ...]}   N²xN² row-major
//   {"n_local": N, "vector": [[re, im], ...]}          length N²
// Composite index a*N + b, local basis order m = j, ..., -j.

using StateData = std::variant<DensityMatrix, PureState>;

StateData parse_state(const std::string& json_text);
StateData read_state_file(const std::string& path);

// Either form, pure states converted to |ψ><ψ|.
DensityMatrix read_density_file(const std::string& path);

std::string to_json(const DensityMatrix& rho);
std::string to_json(const PureState& psi);

void write_state_file(const std::string& path, const DensityMatrix& rho);
void write_state_file(const std::string& path, const PureState& psi);

}  // namespace spinwit
