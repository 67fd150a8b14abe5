#pragma once

#include <stdexcept>
#include <string>

namespace nonopen {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector does not match the model's representation (sparse vs grid, cell count).
struct representation_error : error {
    using error::error;
};

// Invalid argument value (delta out of range, non-unit vector, empty range, ...).
struct parameter_error : error {
    using error::error;
};

// Invalid (model, gauge) pairing or malformed run configuration.
struct config_error : error {
    using error::error;
};

// Requested an inverse of J_F at the critical point x = 0.
struct not_invertible_error : error {
    using error::error;
};

// Result magnitude not representable in binary64.
struct numerical_range_error : error {
    using error::error;
};

} // namespace nonopen
