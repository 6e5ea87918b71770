#pragma once

#include <cstddef>
#include <vector>

#include "nonstatic/common.hpp"

// Sampled probability densities over a (coordinate x time) rectangle, plus
// the trapezoid-rule helpers used to normalize and characterize the slices.

namespace nonstatic {

// |psi|^2 samples, row-major: one row per time, one column per axis point.
struct DensityGrid {
    Space space = Space::q;
    std::vector<double> axis;   // coordinate samples, strictly increasing
    std::vector<double> times;  // time samples
    std::vector<double> values; // times.size() * axis.size() densities
    bool coarse_grid_warning = false;  // axis too coarse for the state's oscillations

    double at(std::size_t time_index, std::size_t axis_index) const {
        return values[time_index * axis.size() + axis_index];
    }

    // density samples of one time slice
    std::vector<double> slice(std::size_t time_index) const {
        const auto first = values.begin() + static_cast<std::ptrdiff_t>(time_index * axis.size());
        return {first, first + static_cast<std::ptrdiff_t>(axis.size())};
    }
};

// Trapezoid rule on a (not necessarily uniform) strictly increasing axis.
inline double trapezoid(const std::vector<double>& axis, const std::vector<double>& values) {
    require(axis.size() == values.size() && axis.size() >= 2,
            "trapezoid: need matching arrays with at least two samples");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < axis.size(); ++i)
        sum += 0.5 * (axis[i + 1] - axis[i]) * (values[i] + values[i + 1]);
    return sum;
}

// Norm, centroid, and centered second moment of one density slice.
struct SliceStats {
    double norm = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};

inline SliceStats slice_stats(const std::vector<double>& axis,
                              const std::vector<double>& density) {
    SliceStats s;
    s.norm = trapezoid(axis, density);
    std::vector<double> weighted(axis.size());
    for (std::size_t i = 0; i < axis.size(); ++i) weighted[i] = axis[i] * density[i];
    s.mean = trapezoid(axis, weighted) / s.norm;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const double d = axis[i] - s.mean;
        weighted[i] = d * d * density[i];
    }
    s.variance = trapezoid(axis, weighted) / s.norm;
    return s;
}

}  // namespace nonstatic
