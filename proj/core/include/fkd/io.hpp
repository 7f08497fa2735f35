#pragma once

#include <string>

#include "fkd/gmodule.hpp"

namespace fkd {

// {"basis": [{"name", "z", "s3"}], "actions": {"t12": [[col, row, [a_n, a_d, b_n, b_d]], ...], ...}}
// Integers beyond int64 are written as decimal strings.
std::string module_to_json(const GModule& m, int indent = -1);
// throws std::invalid_argument on malformed input
GModule module_from_json(const std::string& text);

std::string scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const std::string& text);

}  // namespace fkd
