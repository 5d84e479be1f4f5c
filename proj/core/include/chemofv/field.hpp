#ifndef CHEMOFV_FIELD_HPP
#define CHEMOFV_FIELD_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "chemofv/grid.hpp"

namespace chemofv {

/// One scalar unknown stored as cell averages on a Grid.
/// The discrete integral over the domain is hx*hy * sum of values.
class Field {
public:
    Field() = default;

    explicit Field(const Grid& grid, double fill = 0.0)
        : grid_(grid), values_(static_cast<size_t>(grid.cells()), fill) {}

    Field(const Grid& grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != static_cast<size_t>(grid.cells()))
            throw DomainError("field length must equal nx*ny");
    }

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(values_.size()); }

    double operator[](int i) const { return values_[static_cast<size_t>(i)]; }
    double& operator[](int i) { return values_[static_cast<size_t>(i)]; }
    double at(int i, int j) const { return values_[static_cast<size_t>(grid_.index(i, j))]; }
    double& at(int i, int j) { return values_[static_cast<size_t>(grid_.index(i, j))]; }

    const double* data() const { return values_.data(); }
    double* data() { return values_.data(); }
    const std::vector<double>& values() const { return values_; }

    double integral() const {
        double s = 0.0;
        for (double v : values_) s += v;
        return grid_.cell_area() * s;
    }

    double mean() const { return integral() / grid_.volume(); }

    double max() const { return *std::max_element(values_.begin(), values_.end()); }
    double min() const { return *std::min_element(values_.begin(), values_.end()); }

private:
    Grid grid_;
    std::vector<double> values_;
};

} // namespace chemofv

#endif
