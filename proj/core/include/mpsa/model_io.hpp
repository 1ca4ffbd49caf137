#pragma once

#include <string>

#include "mpsa/mixture.hpp"

namespace mpsa {

// Self-describing model document, version "mpsa-model/1": p, C, alpha and,
// per component, weight, mean, composition, block eigenvalues and the basis
// matrix in row-major order. Round-trips all values bit-exactly.
std::string serialize(const MpsaModel& model);
MpsaModel deserialize(const std::string& document);

}  // namespace mpsa
