#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "nonstatic/common.hpp"
#include "nonstatic/grid.hpp"
#include "nonstatic/timefn.hpp"
#include "nonstatic/verify.hpp"
#include "nonstatic/wave_params.hpp"

// Nonstatic Gaussian waves. The initial state
//
//   psi(q, 0) = (K_R/pi)^{1/4} e^{-K (q - xi)^2 / 2},    Re K > 0,
//
// evolves with its exponent obeying the same Riccati equation as W(t);
// linearizing around the particular solution W gives the closed frame
//
//   Theta(t) = w Int_0^t dt'/f,
//   g(t)     = [K + W*(0)] e^{2 i Theta} - [K - W(0)],
//   sW(t)    = W(t) + 2 W_R(t) [K - W(0)] / g,          sW(0) = K,
//   sW_p(t)  = 1 / (hbar^2 sW),
//   R(t)     = 2 K xi sqrt(W_R(0) W_R(t)) e^{i Theta} / g,   R(0) = K xi,
//   N(t)     = (W_R(0) W_R(t)/pi)^{1/4} sqrt(2 sqrt(K_R)) h^{-1/2}
//                e^{-(K xi^2 + i Theta)/2}
//                exp[ K^2 xi^2 / (K + W*(0)) (1/2 - W_R(0)/g) ],
//
// where h = g e^{-2 i Theta}. The wave functions are then
//
//   psi(q,t) = N e^{-sW q^2/2 + R q},
//   psi(p,t) = N / sqrt(hbar sW) e^{-sW_p (p + i hbar R)^2 / 2}.
//
// Branch bookkeeping: |K + W*(0)|^2 - |K - W(0)|^2 = 4 K_R W_R(0) > 0, so
// h = [K + W*(0)] (1 - (K-W(0))/(K+W*(0)) e^{-2 i Theta}) winds around a
// point strictly inside the unit circle -> the second factor keeps a
// positive real part and its principal argument is continuous; likewise
// Re sW > 0 at all times, so the principal sqrt(hbar sW) is continuous and
// matches the Fourier transform of psi(q,t) exactly.

namespace nonstatic::gaussian {

struct GaussianParams {
    cplx k;          // initial exponent K = K_R + i K_I
    double xi = 0.0; // real displacement

    GaussianParams(cplx k_, double xi_) : k(k_), xi(xi_) {
        require(std::isfinite(k.real()) && std::isfinite(k.imag()) && std::isfinite(xi),
                "gaussian params must be finite");
        require(k.real() > 0.0, "gaussian params: Re K must be positive (normalizability)");
    }
};

// All auxiliary functions at one instant.
struct GaussianFrame {
    double t = 0.0;
    double hbar = 1.0;
    double phase_integral = 0.0;  // Theta(t)
    cplx denom;                   // g(t)
    cplx amplitude;               // N(t)
    cplx exponent_q;              // sW(t)
    cplx exponent_p;              // sW_p(t)
    cplx linear;                  // R(t)
};

inline GaussianFrame frame(const WaveParams& wp, const GaussianParams& gp, double t) {
    require(wp.t0 == 0.0,
            "gaussian frame: auxiliary functions are derived for t0 = 0; shift times first");

    const cplx k = gp.k;
    const cplx w0 = timefn::exponent_q(wp, 0.0).value();
    const timefn::ComplexW wt = timefn::exponent_q(wp, t);
    const double theta = timefn::phase_integral(wp, 0.0, t);

    const cplx kp = k + std::conj(w0);
    const cplx km = k - w0;
    const cplx g = kp * std::polar(1.0, 2.0 * theta) - km;
    if (std::abs(g) < 1e-12)
        throw numerical_error("gaussian frame: degenerate denominator (internal inconsistency)");

    GaussianFrame fr;
    fr.t = t;
    fr.hbar = wp.hbar;
    fr.phase_integral = theta;
    fr.denom = g;
    fr.exponent_q = wt.value() + 2.0 * wt.re * km / g;
    fr.exponent_p = std::conj(fr.exponent_q) / (wp.hbar * wp.hbar * std::norm(fr.exponent_q));
    fr.linear = 2.0 * k * gp.xi * std::sqrt(w0.real() * wt.re) * std::polar(1.0, theta) / g;

    // h = g e^{-2 i Theta} on its continuous branch (see file comment)
    const cplx h_factor = 1.0 - km / kp * std::polar(1.0, -2.0 * theta);
    const double angle_h = std::arg(kp) + std::arg(h_factor);
    const double mag_h = std::abs(kp) * std::abs(h_factor);
    const cplx xi_term = k * k * gp.xi * gp.xi / kp * (0.5 - w0.real() / g);
    fr.amplitude = std::pow(w0.real() * wt.re / pi, 0.25) *
                   std::sqrt(2.0 * std::sqrt(k.real())) / std::sqrt(mag_h) *
                   std::polar(1.0, -0.5 * angle_h) *
                   std::exp(-0.5 * (k * gp.xi * gp.xi + cplx{0.0, theta})) * std::exp(xi_term);

    require_finite(fr.amplitude, "gaussian amplitude");
    require_finite(fr.exponent_q, "gaussian exponent");
    require_finite(fr.exponent_p, "gaussian p-space exponent");
    require_finite(fr.linear, "gaussian linear coefficient");
    return fr;
}

// Eq-of-motion-free reference: the initial waveform itself.
inline cplx initial_waveform(const GaussianParams& gp, double q) {
    const double d = q - gp.xi;
    return std::pow(gp.k.real() / pi, 0.25) * std::exp(-0.5 * gp.k * d * d);
}

inline cplx wavefunction_q(const GaussianFrame& fr, double q) {
    const cplx value =
        fr.amplitude * std::exp(-0.5 * fr.exponent_q * q * q + fr.linear * q);
    require_finite(value, "q-space gaussian wave function");
    return value;
}

inline cplx wavefunction_p(const GaussianFrame& fr, double p) {
    const cplx shifted = p + cplx{0.0, fr.hbar} * fr.linear;
    const cplx value = fr.amplitude / std::sqrt(fr.hbar * fr.exponent_q) *
                       std::exp(-0.5 * fr.exponent_p * shifted * shifted);
    require_finite(value, "p-space gaussian wave function");
    return value;
}

inline cplx wavefunction_q(const WaveParams& wp, const GaussianParams& gp, double q, double t) {
    return wavefunction_q(frame(wp, gp, t), q);
}

inline cplx wavefunction_p(const WaveParams& wp, const GaussianParams& gp, double p, double t) {
    return wavefunction_p(frame(wp, gp, t), p);
}

// sW_I/sW_R (space q) or sW_{p,I}/sW_{p,R} (space p)
inline double exponent_ratio(const GaussianFrame& fr, Space space) {
    const cplx w = space == Space::q ? fr.exponent_q : fr.exponent_p;
    return w.imag() / w.real();
}

inline double exponent_ratio(const WaveParams& wp, const GaussianParams& gp, double t,
                             Space space) {
    return exponent_ratio(frame(wp, gp, t), space);
}

// RMS of the ratio over a full 2 pi / w window (covers displaced cases too;
// the ratio itself repeats every pi / w).
inline double nonstaticity_measure_rms(const WaveParams& wp, const GaussianParams& gp,
                                       Space space) {
    return verify::rms_over_period(
        [&](double t) { return exponent_ratio(wp, gp, t, space); }, 0.0, two_pi / wp.omega);
}

// density centroid: Re(R)/sW_R in q-space, hbar Im(sW_p R)/sW_{p,R} in p-space
inline double mean(const GaussianFrame& fr, Space space) {
    if (space == Space::q) return fr.linear.real() / fr.exponent_q.real();
    return fr.hbar * (fr.exponent_p * fr.linear).imag() / fr.exponent_p.real();
}

// density variance: 1/(2 sW_R) in q-space, 1/(2 sW_{p,R}) in p-space
inline double variance(const GaussianFrame& fr, Space space) {
    return 0.5 / (space == Space::q ? fr.exponent_q.real() : fr.exponent_p.real());
}

inline double mean(const WaveParams& wp, const GaussianParams& gp, double t, Space space) {
    return mean(frame(wp, gp, t), space);
}

inline double variance(const WaveParams& wp, const GaussianParams& gp, double t, Space space) {
    return variance(frame(wp, gp, t), space);
}

namespace detail {

// node-free Gaussian density: resolution scale as in fock with n = 0
inline double density_wavelength(const GaussianFrame& fr, Space space) {
    return pi / std::sqrt(space == Space::q ? fr.exponent_q.real() : fr.exponent_p.real());
}

}  // namespace detail

// Covers centroid excursion + 8 sigma of the widest slice over one full
// 2 pi / w cycle, with at least 16 points per density width scale.
inline std::vector<double> default_axis(const WaveParams& wp, const GaussianParams& gp,
                                        Space space) {
    double var_max = 0.0, mean_max = 0.0, wavelength_min = 0.0;
    const int scan = 512;
    for (int i = 0; i < scan; ++i) {
        const GaussianFrame fr = frame(wp, gp, (two_pi / wp.omega) * i / scan);
        var_max = std::max(var_max, variance(fr, space));
        mean_max = std::max(mean_max, std::abs(mean(fr, space)));
        const double wavelength = detail::density_wavelength(fr, space);
        wavelength_min = i == 0 ? wavelength : std::min(wavelength_min, wavelength);
    }
    const double half = mean_max + 8.0 * std::sqrt(var_max);
    const int count = std::max(
        1024, static_cast<int>(std::ceil(2.0 * half * 16.0 / wavelength_min)) + 1);
    return linspace(-half, half, count);
}

// Tail-threshold-sized axis for one slice (11 sigma around the centroid keeps
// the edge amplitude below 1e-13 of the peak).
inline std::vector<double> oracle_axis(const WaveParams& wp, const GaussianParams& gp, double t,
                                       Space space, int count = 1024) {
    const GaussianFrame fr = frame(wp, gp, t);
    const double mu = mean(fr, space);
    const double sigma = std::sqrt(variance(fr, space));
    return linspace(mu - 11.0 * sigma, mu + 11.0 * sigma, count);
}

inline DensityGrid density(const WaveParams& wp, const GaussianParams& gp,
                           const std::vector<double>& axis, const std::vector<double>& times,
                           Space space) {
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
        const GaussianFrame fr = frame(wp, gp, times[ti]);
        if (step > detail::density_wavelength(fr, space) / 16.0) grid.coarse_grid_warning = true;
        for (std::size_t xi = 0; xi < axis.size(); ++xi) {
            const cplx v = space == Space::q ? wavefunction_q(fr, axis[xi])
                                             : wavefunction_p(fr, axis[xi]);
            grid.values[ti * axis.size() + xi] = std::norm(v);
        }
    }
    return grid;
}

}  // namespace nonstatic::gaussian
