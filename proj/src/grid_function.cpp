#include "nonopen/grid_function.hpp"

#include "nonopen/errors.hpp"

namespace nonopen {

GridFunction::GridFunction(int cells, std::vector<double> values)
    : cells_(cells), values_(std::move(values)) {
    if (cells_ < 1) throw parameter_error("grid needs at least one cell");
    if (static_cast<int>(values_.size()) != cells_)
        throw representation_error("grid value count does not match cell count");
}

GridFunction GridFunction::zero(int cells) {
    return GridFunction(cells, std::vector<double>(static_cast<std::size_t>(cells), 0.0));
}

GridFunction GridFunction::cell_indicator(int cells, int cell, double value) {
    if (cell < 0 || cell >= cells) throw parameter_error("cell index out of range");
    auto g = zero(cells);
    g.values_[static_cast<std::size_t>(cell)] = value;
    return g;
}

bool GridFunction::is_zero() const {
    for (double v : values_)
        if (v != 0.0) return false;
    return true;
}

GridFunction GridFunction::scaled(double a) const {
    GridFunction out = *this;
    for (double& v : out.values_) v *= a;
    return out;
}

GridFunction GridFunction::axpy(double a, const GridFunction& x, const GridFunction& y) {
    if (x.cells_ != y.cells_)
        throw representation_error("grid cell counts differ");
    GridFunction out = y;
    for (int i = 0; i < x.cells_; ++i)
        out.values_[static_cast<std::size_t>(i)] += a * x.values_[static_cast<std::size_t>(i)];
    return out;
}

} // namespace nonopen
