#pragma once

#include <nlohmann/json.hpp>

#include "nonopen/vector.hpp"

namespace nonopen {

using json = nlohmann::ordered_json;

// {"kind":"sparse","entries":[[index, value], ...]}  (1-based indices)
// {"kind":"grid","M":cells,"values":[...]}
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

} // namespace nonopen
