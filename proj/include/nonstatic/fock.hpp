#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "nonstatic/common.hpp"
#include "nonstatic/grid.hpp"
#include "nonstatic/hermite.hpp"
#include "nonstatic/timefn.hpp"
#include "nonstatic/verify.hpp"
#include "nonstatic/wave_params.hpp"

// Fock-state nonstatic waves. In q-space
//
//   psi_n(q,t) = (W_R/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(W_R) q)
//                  e^{-W q^2 / 2} e^{i gamma_n(t)},
//
// and in p-space the exact Fourier transform
//
//   psi_n(p,t) = (-i)^n (W_R/(pi hbar^2))^{1/4} |W|^{-1/2} e^{-i(2n+1) arg(W)/2}
//                  (2^n n!)^{-1/2} H_n(sqrt(W_{p,R}) p)
//                  e^{-W_p p^2 / 2} e^{i gamma_n(t)},
//
// with gamma_n(t) = -(n + 1/2) Theta(t0, t) + gamma_0 and W_p = 1/(hbar^2 W).
// The fractional power sqrt(W*^n / W^{n+1}) reduces to the |W|^{-1/2} and
// angle factors above; arg(W) is continuous because W never leaves the right
// half-plane.
//
// The imaginary-to-real exponent ratio is sinusoidal,
//
//   W_{p,I}/W_{p,R} = (1/2) sqrt((A+B)^2 - 4) cos(2 ph + delta),
//   tan(delta) = (B - A)/(2C),  delta in [0, 2 pi),
//
// and its RMS over one period — the nonstaticity measure — has the closed
// form sqrt((A+B)^2 - 4) / (2 sqrt(2)), identical in q- and p-space.

namespace nonstatic::fock {

// Hermite recurrence with folded-in normalization stays bounded well past
// this, but the raw-coefficient error paths are only exercised up to here.
inline constexpr int max_index = 64;

inline void require_index(int n) {
    require(n >= 0 && n <= max_index,
            "fock index must lie in [0, " + std::to_string(max_index) + "]");
}

// gamma_n(t) = -(n + 1/2) Theta(t0, t) + gamma0
inline double evolution_phase(const WaveParams& wp, int n, double t, double gamma0 = 0.0) {
    require_index(n);
    return -(n + 0.5) * timefn::phase_integral(wp, wp.t0, t) + gamma0;
}

inline cplx wavefunction_q(const WaveParams& wp, int n, double q, double t,
                           double gamma0 = 0.0) {
    require_index(n);
    const timefn::ComplexW w = timefn::exponent_q(wp, t);
    const double y = std::sqrt(w.re) * q;
    const double amp = std::pow(w.re / pi, 0.25) * hermite_weighted(n, y);
    const double phase = -0.5 * w.im * q * q + evolution_phase(wp, n, t, gamma0);
    const cplx value = amp * cplx{std::cos(phase), std::sin(phase)};
    require_finite(value, "q-space fock wave function");
    return value;
}

inline cplx wavefunction_p(const WaveParams& wp, int n, double p, double t,
                           double gamma0 = 0.0) {
    require_index(n);
    const timefn::ComplexW w = timefn::exponent_q(wp, t);
    const timefn::ComplexW wp_exp = timefn::exponent_p(wp, t);
    const double y = std::sqrt(wp_exp.re) * p;
    const double amp = std::pow(w.re / (pi * wp.hbar * wp.hbar), 0.25) /
                       std::sqrt(std::hypot(w.re, w.im)) * hermite_weighted(n, y);
    const double phase = -0.5 * n * pi                      // (-i)^n
                         - (2 * n + 1) * w.unwrapped_angle / 2.0
                         - 0.5 * wp_exp.im * p * p + evolution_phase(wp, n, t, gamma0);
    const cplx value = amp * cplx{std::cos(phase), std::sin(phase)};
    require_finite(value, "p-space fock wave function");
    return value;
}

// W_I/W_R (space q) or W_{p,I}/W_{p,R} (space p), from the components.
inline double exponent_ratio(const WaveParams& wp, double t, Space space) {
    const timefn::ComplexW w =
        space == Space::q ? timefn::exponent_q(wp, t) : timefn::exponent_p(wp, t);
    return w.im / w.re;
}

// amplitude of the sinusoidal ratio: (1/2) sqrt((A+B)^2 - 4)
inline double ratio_amplitude(const WaveParams& wp) {
    const double s = wp.A + wp.B;
    return 0.5 * std::sqrt(s * s - 4.0);
}

// delta with tan(delta) = (B - A)/(2C), two-argument convention, in [0, 2 pi)
inline double ratio_phase_offset(const WaveParams& wp) {
    return wrap_two_pi(std::atan2(wp.B - wp.A, 2.0 * wp.C));
}

// closed-form measure sqrt((A+B)^2 - 4) / (2 sqrt(2)), valid in both spaces
inline double nonstaticity_measure(const WaveParams& wp) {
    return ratio_amplitude(wp) / std::sqrt(2.0);
}

// the same measure by RMS quadrature of the component-built ratio
inline double nonstaticity_measure_rms(const WaveParams& wp, Space space) {
    return verify::rms_over_period([&](double t) { return exponent_ratio(wp, t, space); },
                                   wp.t0, pi / wp.omega);
}

// sigma^2 = (n + 1/2)/W_R in q-space, (n + 1/2)/W_{p,R} in p-space
inline double variance(const WaveParams& wp, int n, double t, Space space) {
    require_index(n);
    const timefn::ComplexW w =
        space == Space::q ? timefn::exponent_q(wp, t) : timefn::exponent_p(wp, t);
    return (n + 0.5) / w.re;
}

namespace detail {

inline double exponent_re(const WaveParams& wp, double t, Space space) {
    return (space == Space::q ? timefn::exponent_q(wp, t) : timefn::exponent_p(wp, t)).re;
}

// shortest node-to-node distance of the density in scaled units y = sqrt(W_R) x
inline double density_wavelength(int n, double exponent_re_value) {
    return pi / (std::sqrt(2.0 * n + 1.0) * std::sqrt(exponent_re_value));
}

}  // namespace detail

// Half-width, in the scaled coordinate y = sqrt(W_R) x, beyond which the
// weighted Hermite factor has decayed below 1e-13 of its peak. Sizes the
// transform-oracle grids so truncation stays far below the 1e-8 comparisons.
inline double tail_halfwidth_y(int n) {
    require_index(n);
    const double y_stop = std::sqrt(2.0 * n + 1.0) + 14.0;
    const double step = 0.01;
    double peak = 0.0;
    for (double y = 0.0; y <= y_stop; y += step)
        peak = std::max(peak, std::abs(hermite_weighted(n, y)));
    double last = 0.0;
    for (double y = 0.0; y <= y_stop; y += step)
        if (std::abs(hermite_weighted(n, y)) > 1e-13 * peak) last = y;
    return last + 5.0 * step;
}

// +-8 sigma of the widest slice over one period, with enough points to keep
// at least 16 samples per density oscillation at the narrowest slice.
inline std::vector<double> default_axis(const WaveParams& wp, int n, Space space) {
    require_index(n);
    double var_max = 0.0, re_max = 0.0;
    const int scan = 512;
    for (int i = 0; i < scan; ++i) {
        const double t = wp.t0 + (pi / wp.omega) * i / scan;
        var_max = std::max(var_max, variance(wp, n, t, space));
        re_max = std::max(re_max, detail::exponent_re(wp, t, space));
    }
    const double half = 8.0 * std::sqrt(var_max);
    const double wavelength = detail::density_wavelength(n, re_max);
    const int count = std::max(
        1024, static_cast<int>(std::ceil(2.0 * half * 16.0 / wavelength)) + 1);
    return linspace(-half, half, count);
}

// Tail-threshold-sized axis for one slice, for the Fourier/moment oracles.
inline std::vector<double> oracle_axis(const WaveParams& wp, int n, double t, Space space,
                                       int count = 1024) {
    const double half = tail_halfwidth_y(n) / std::sqrt(detail::exponent_re(wp, t, space));
    return linspace(-half, half, count);
}

inline DensityGrid density(const WaveParams& wp, int n, const std::vector<double>& axis,
                           const std::vector<double>& times, Space space) {
    require_index(n);
    require(axis.size() >= 2, "density: need at least two axis points");
    for (std::size_t i = 0; i + 1 < axis.size(); ++i)
        require(axis[i] < axis[i + 1], "density: axis must be strictly increasing");

    DensityGrid grid;
    grid.space = space;
    grid.axis = axis;
    grid.times = times;
    grid.values.resize(axis.size() * times.size());
    const double step = axis[1] - axis[0];
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
        const double t = times[ti];
        const double wavelength = detail::density_wavelength(n, detail::exponent_re(wp, t, space));
        if (step > wavelength / 16.0) grid.coarse_grid_warning = true;
        for (std::size_t xi = 0; xi < axis.size(); ++xi) {
            const cplx v = space == Space::q ? wavefunction_q(wp, n, axis[xi], t)
                                             : wavefunction_p(wp, n, axis[xi], t);
            grid.values[ti * axis.size() + xi] = std::norm(v);
        }
    }
    return grid;
}

}  // namespace nonstatic::fock
