#pragma once

#include <variant>

#include "nonopen/errors.hpp"
#include "nonopen/grid_function.hpp"
#include "nonopen/sparse_vector.hpp"

namespace nonopen {

// Universal vector representation: sequence-space elements are sparse,
// function-space elements are grid representatives.
using Vector = std::variant<SparseVector, GridFunction>;

inline const SparseVector& as_sparse(const Vector& v) {
    if (const auto* s = std::get_if<SparseVector>(&v)) return *s;
    throw representation_error("expected a sparse sequence vector");
}

inline const GridFunction& as_grid(const Vector& v) {
    if (const auto* g = std::get_if<GridFunction>(&v)) return *g;
    throw representation_error("expected a grid function");
}

inline bool is_zero(const Vector& v) {
    return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

inline Vector scale(double a, const Vector& v) {
    return std::visit([&](const auto& x) { return Vector(x.scaled(a)); }, v);
}

// a*x + y; both alternatives must match
inline Vector axpy(double a, const Vector& x, const Vector& y) {
    if (const auto* xs = std::get_if<SparseVector>(&x)) {
        return SparseVector::axpy(a, *xs, as_sparse(y));
    }
    return GridFunction::axpy(a, as_grid(x), as_grid(y));
}

inline Vector add(const Vector& x, const Vector& y) { return axpy(1.0, x, y); }
inline Vector sub(const Vector& x, const Vector& y) { return axpy(-1.0, y, x); }

// Zero vector in the same representation as v.
inline Vector zero_like(const Vector& v) {
    if (const auto* g = std::get_if<GridFunction>(&v)) return GridFunction::zero(g->cells());
    return SparseVector{};
}

} // namespace nonopen
