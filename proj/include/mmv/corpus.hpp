// Bundled configuration corpus: loading with validation of the declared
// incidence structure and codimension.
#pragma once

#include <string>

#include "mmv/json_io.hpp"

namespace mmv {

// Loads a configuration file and, when the file declares circuits or a
// codimension, verifies them against the realization (exact circuit
// enumeration; Jacobian-rank codimension recomputed without the override).
ConfigFile load_and_validate(const std::string& path);

// configs/<name>.json under the given corpus directory.
std::string corpus_path(const std::string& dir, const std::string& name);

}  // namespace mmv
