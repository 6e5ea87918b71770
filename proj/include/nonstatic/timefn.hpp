#pragma once

#include <cmath>

#include "nonstatic/common.hpp"
#include "nonstatic/wave_params.hpp"

// Time functions driving nonstatic light waves in a static medium.
//
// A single mode in a lossless static medium is a harmonic oscillator
// H = p^2/(2 eps) + eps w^2 q^2 / 2. Its non-stationary Gaussian-type
// solutions are parameterized by the strictly positive, pi/w-periodic
// width factor
//
//   f(t) = A sin^2(ph) + B cos^2(ph) + C sin(2 ph),   ph = w (t - t0) + phi,
//
// with A*B - C^2 = 1, which solves the nonlinear width equation
//
//   f'' - f'^2 / (2 f) + 2 w^2 (f - 1/f) = 0.
//
// The complex exponent of the q-space wave functions is
//
//   W(t) = eps w / (hbar f)  -  i eps f' / (2 hbar f),
//
// and W_p(t) = 1 / (hbar^2 W(t)) plays the same role in p-space. Both stay
// in the right half-plane for all t (their real parts are positive), so the
// principal polar angle is already continuous along any time sweep.
//
// The accumulated phase integral Theta(a, b) = w * Int_a^b dt / f(t) has a
// closed-form antiderivative atan(A tan(ph) + C) on each branch of the
// tangent; branches are stitched by counting pole crossings, which keeps
// Theta exact, strictly increasing, and O(1) to evaluate.

namespace nonstatic::timefn {

// ph(t) = w (t - t0) + phi
inline double phase(const WaveParams& wp, double t) { return wp.omega * (t - wp.t0) + wp.phi; }

inline double width_factor_at_phase(const WaveParams& wp, double ph) {
    const double s = std::sin(ph);
    const double c = std::cos(ph);
    return wp.A * s * s + wp.B * c * c + wp.C * std::sin(2.0 * ph);
}

// f(t) > 0 for all t
inline double width_factor(const WaveParams& wp, double t) {
    return width_factor_at_phase(wp, phase(wp, t));
}

// f'(t) = w [ (A - B) sin(2 ph) + 2 C cos(2 ph) ]
inline double width_factor_dot(const WaveParams& wp, double t) {
    const double ph2 = 2.0 * phase(wp, t);
    return wp.omega * ((wp.A - wp.B) * std::sin(ph2) + 2.0 * wp.C * std::cos(ph2));
}

// f''(t) = 2 w^2 [ (A - B) cos(2 ph) - 2 C sin(2 ph) ]
inline double width_factor_ddot(const WaveParams& wp, double t) {
    const double ph2 = 2.0 * phase(wp, t);
    return 2.0 * wp.omega * wp.omega *
           ((wp.A - wp.B) * std::cos(ph2) - 2.0 * wp.C * std::sin(ph2));
}

// Complex exponent value with its polar angle. For W and W_p the real part
// is positive, so the principal value of atan2 is the continuous angle.
struct ComplexW {
    double re = 0.0;
    double im = 0.0;
    double unwrapped_angle = 0.0;  // atan2(im, re) modulo 2*pi, continuous in t

    cplx value() const { return {re, im}; }
};

// W(t); re = eps w / (hbar f) > 0, im = -eps f' / (2 hbar f)
inline ComplexW exponent_q(const WaveParams& wp, double t) {
    const double f = width_factor(wp, t);
    const double fdot = width_factor_dot(wp, t);
    ComplexW w;
    w.re = wp.epsilon * wp.omega / (wp.hbar * f);
    w.im = -wp.epsilon * fdot / (2.0 * wp.hbar * f);
    w.unwrapped_angle = std::atan2(w.im, w.re);
    return w;
}

// W_p(t) = 1/(hbar^2 W) = (W_re - i W_im) / (hbar^2 |W|^2)
inline ComplexW exponent_p(const WaveParams& wp, double t) {
    const ComplexW w = exponent_q(wp, t);
    const double mag2 = w.re * w.re + w.im * w.im;
    const double scale = wp.hbar * wp.hbar * mag2;
    ComplexW p;
    p.re = w.re / scale;
    p.im = -w.im / scale;
    p.unwrapped_angle = std::atan2(p.im, p.re);
    return p;
}

namespace detail {

// Continuous antiderivative of 1/f with respect to ph. On each branch
// ph in (k pi - pi/2, k pi + pi/2) it equals atan(A tan(ph) + C) + k pi;
// remainder() pins ph to the same branch the tangent uses, so the branch
// count and the tangent can never disagree at a pole.
inline double phase_integral_primitive(const WaveParams& wp, double ph) {
    const double r = std::remainder(ph, pi);  // r in [-pi/2, pi/2]
    const double k = std::round((ph - r) / pi);
    return std::atan(wp.A * std::tan(r) + wp.C) + k * pi;
}

}  // namespace detail

// Theta(t_from, t_to) = w * Int dt / f(t) over [t_from, t_to].
// Exactly additive and strictly increasing in t_to.
inline double phase_integral(const WaveParams& wp, double t_from, double t_to) {
    return detail::phase_integral_primitive(wp, phase(wp, t_to)) -
           detail::phase_integral_primitive(wp, phase(wp, t_from));
}

}  // namespace nonstatic::timefn
