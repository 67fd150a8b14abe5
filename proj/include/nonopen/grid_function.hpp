#pragma once

#include <vector>

namespace nonopen {

/**
 * Piecewise-constant representative of a function on [0,1] under the
 * Lebesgue probability measure: M equal-width cells, one value per cell.
 * Integrals of |f|^p are exact on representatives: (1/M) * sum |v_i|^p.
 */
class GridFunction {
public:
    GridFunction(int cells, std::vector<double> values);

    static GridFunction zero(int cells);
    static GridFunction cell_indicator(int cells, int cell, double value = 1.0);

    int cells() const { return cells_; }
    const std::vector<double>& values() const { return values_; }

    bool is_zero() const;

    GridFunction scaled(double a) const;

    // a*x + y; cell counts must match
    static GridFunction axpy(double a, const GridFunction& x, const GridFunction& y);

    friend GridFunction operator+(const GridFunction& a, const GridFunction& b) {
        return axpy(1.0, a, b);
    }
    friend GridFunction operator-(const GridFunction& a, const GridFunction& b) {
        return axpy(-1.0, b, a);
    }
    friend GridFunction operator*(double a, const GridFunction& x) { return x.scaled(a); }

    friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
    int cells_ = 1;
    std::vector<double> values_;
};

} // namespace nonopen
