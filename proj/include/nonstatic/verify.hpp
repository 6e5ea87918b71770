#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "nonstatic/common.hpp"
#include "nonstatic/timefn.hpp"
#include "nonstatic/wave_params.hpp"

// Independent numerical oracles. Nothing here knows the closed forms being
// checked: the Fourier transform is a direct trapezoid discretization of
//
//   psi~(p) = (1/sqrt(2 pi hbar)) Int psi(q) e^{-i p q / hbar} dq,
//
// moments are plain quadrature, the width-equation residual evaluates
//
//   f'' - f'^2/(2 f) + 2 w^2 (f - 1/f)
//
// verbatim, and oscillation fitting is linear least squares against
// a cos(2 w t + d) + b with an autocorrelation fallback for series that
// do not oscillate at 2 w (e.g. displaced-wave centroids at w).

namespace nonstatic::verify {

// ---------------------------------------------------------------------------
// sampled waves

struct SampledWave {
    std::vector<double> axis;  // uniform, strictly increasing; length >= 64
    std::vector<cplx> values;
    double t = 0.0;
    Space space = Space::q;
    bool tail_warning = false;  // amplitude has not decayed to ~0 at the ends
};

inline bool tails_decayed(const std::vector<cplx>& values, double rel_threshold = 1e-12) {
    double peak = 0.0;
    for (const cplx& v : values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return true;
    return std::abs(values.front()) <= rel_threshold * peak &&
           std::abs(values.back()) <= rel_threshold * peak;
}

inline SampledWave make_sampled_wave(std::vector<double> axis, std::vector<cplx> values,
                                     double t, Space space) {
    require(axis.size() == values.size(), "sampled wave: axis/value length mismatch");
    require(axis.size() >= 64, "sampled wave: need at least 64 samples");
    const double step = (axis.back() - axis.front()) / double(axis.size() - 1);
    require(step > 0.0, "sampled wave: axis must be increasing");
    for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
        const double h = axis[i + 1] - axis[i];
        require(std::abs(h - step) <= 1e-12 * std::abs(step),
                "sampled wave: axis spacing must be uniform");
    }
    SampledWave w{std::move(axis), std::move(values), t, space};
    w.tail_warning = !tails_decayed(w.values);
    return w;
}

// ---------------------------------------------------------------------------
// numerical Fourier transform (the oracle of record for every p-space formula)

enum class FtDirection { forward, inverse };  // forward: q -> p (kernel e^{-ipq/hbar})

inline SampledWave numerical_ft(const SampledWave& wave, const std::vector<double>& target_axis,
                                double hbar, FtDirection direction = FtDirection::forward) {
    require(wave.axis.size() == wave.values.size(), "numerical_ft: corrupt input wave");
    require(!target_axis.empty(), "numerical_ft: empty target axis");
    require(hbar > 0.0, "numerical_ft: hbar must be positive");

    const std::size_t n = wave.axis.size();
    const double h = (wave.axis.back() - wave.axis.front()) / double(n - 1);
    const double kernel_sign = direction == FtDirection::forward ? -1.0 : 1.0;
    const double prefactor = 1.0 / std::sqrt(2.0 * pi * hbar);

    SampledWave out;
    out.axis = target_axis;
    out.values.resize(target_axis.size());
    out.t = wave.t;
    out.space = wave.space == Space::q ? Space::p : Space::q;
    out.tail_warning = !tails_decayed(wave.values);

    for (std::size_t i = 0; i < target_axis.size(); ++i) {
        const double k = kernel_sign * target_axis[i] / hbar;
        cplx sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double weight = (j == 0 || j == n - 1) ? 0.5 * h : h;
            const double phase = k * wave.axis[j];
            sum += weight * wave.values[j] * cplx{std::cos(phase), std::sin(phase)};
        }
        out.values[i] = prefactor * sum;
        require_finite(out.values[i], "fourier transform value");
    }
    return out;
}

// ---------------------------------------------------------------------------
// quadrature moments of |psi|^2

struct Moments {
    double norm = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    bool tail_warning = false;
};

inline Moments moments(const SampledWave& wave) {
    require(wave.axis.size() == wave.values.size() && wave.axis.size() >= 2,
            "moments: corrupt wave");
    Moments m;
    m.tail_warning = !tails_decayed(wave.values);
    double norm = 0.0, first = 0.0, second = 0.0;
    for (std::size_t i = 0; i + 1 < wave.axis.size(); ++i) {
        const double h = wave.axis[i + 1] - wave.axis[i];
        const double d0 = std::norm(wave.values[i]);
        const double d1 = std::norm(wave.values[i + 1]);
        norm += 0.5 * h * (d0 + d1);
        first += 0.5 * h * (wave.axis[i] * d0 + wave.axis[i + 1] * d1);
        second += 0.5 * h * (wave.axis[i] * wave.axis[i] * d0 +
                             wave.axis[i + 1] * wave.axis[i + 1] * d1);
    }
    m.norm = norm;
    m.mean = first / norm;
    m.variance = second / norm - m.mean * m.mean;
    return m;
}

// ---------------------------------------------------------------------------
// width-equation residual (negative controls bypass the constructor on purpose)

inline double ode_residual(const WaveParams& wp, double t) {
    const double f = timefn::width_factor(wp, t);
    const double fd = timefn::width_factor_dot(wp, t);
    const double fdd = timefn::width_factor_ddot(wp, t);
    return fdd - fd * fd / (2.0 * f) + 2.0 * wp.omega * wp.omega * (f - 1.0 / f);
}

// ---------------------------------------------------------------------------
// oscillation fitting

struct OscillationReport {
    double period = 0.0;
    double phase_at_origin = 0.0;  // d of the fitted a cos(2 pi t / period + d), in [0, 2 pi)
    double amplitude = 0.0;
    double fit_residual = 0.0;  // RMS residual relative to max(amplitude, RMS of series)
    double offset = 0.0;        // fitted constant term b
};

namespace detail {

// least squares of values ~ x0 cos(k t) + x1 sin(k t) + x2; returns RMS residual
struct HarmonicFit {
    double cos_coef = 0.0, sin_coef = 0.0, offset = 0.0, rms_residual = 0.0;
};

inline HarmonicFit fit_harmonic(const std::vector<double>& times,
                                const std::vector<double>& values, double k) {
    const std::size_t n = times.size();
    double m[3][3] = {};
    double rhs[3] = {};
    for (std::size_t i = 0; i < n; ++i) {
        const double basis[3] = {std::cos(k * times[i]), std::sin(k * times[i]), 1.0};
        for (int r = 0; r < 3; ++r) {
            rhs[r] += basis[r] * values[i];
            for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
        }
    }
    // Gaussian elimination with partial pivoting on the 3x3 normal equations
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[perm[r]][col]) > std::abs(m[perm[pivot]][col])) pivot = r;
        std::swap(perm[col], perm[pivot]);
        require(m[perm[col]][col] != 0.0, "fit_oscillation: singular normal equations");
        for (int r = col + 1; r < 3; ++r) {
            const double factor = m[perm[r]][col] / m[perm[col]][col];
            for (int c = col; c < 3; ++c) m[perm[r]][c] -= factor * m[perm[col]][c];
            rhs[perm[r]] -= factor * rhs[perm[col]];
        }
    }
    double x[3];
    for (int col = 2; col >= 0; --col) {
        double acc = rhs[perm[col]];
        for (int c = col + 1; c < 3; ++c) acc -= m[perm[col]][c] * x[c];
        x[col] = acc / m[perm[col]][col];
    }
    HarmonicFit fit{x[0], x[1], x[2], 0.0};
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double model =
            x[0] * std::cos(k * times[i]) + x[1] * std::sin(k * times[i]) + x[2];
        const double r = values[i] - model;
        sse += r * r;
    }
    fit.rms_residual = std::sqrt(sse / double(n));
    return fit;
}

inline double series_rms(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v * v;
    return std::sqrt(sum / double(values.size()));
}

}  // namespace detail

// Dominant period of a uniformly sampled series: first autocorrelation peak,
// refined by golden-section search on the least-squares residual.
inline double dominant_period(const std::vector<double>& times,
                              const std::vector<double>& values) {
    const std::size_t n = times.size();
    require(n >= 16 && values.size() == n, "dominant_period: series too short");
    const double dt = (times.back() - times.front()) / double(n - 1);
    require(dt > 0.0, "dominant_period: need increasing times");

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= double(n);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = values[i] - mean;

    const std::size_t max_lag = n / 2;
    std::vector<double> acf(max_lag + 1, 0.0);
    for (std::size_t lag = 0; lag <= max_lag; ++lag)
        for (std::size_t i = 0; i + lag < n; ++i) acf[lag] += centered[i] * centered[i + lag];

    std::size_t peak = 0;
    for (std::size_t lag = 2; lag + 1 <= max_lag; ++lag) {
        if (acf[lag] >= acf[lag - 1] && acf[lag] >= acf[lag + 1] && acf[lag] > 0.2 * acf[0]) {
            peak = lag;
            break;
        }
    }
    require(peak > 0, "dominant_period: no oscillation found within half the series span");

    // golden-section refinement: minimize the residual of a single-harmonic fit
    const double gold = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.7 * double(peak) * dt;
    double hi = 1.3 * double(peak) * dt;
    auto cost = [&](double period) {
        return detail::fit_harmonic(times, values, two_pi / period).rms_residual;
    };
    double a = hi - gold * (hi - lo), b = lo + gold * (hi - lo);
    double fa = cost(a), fb = cost(b);
    for (int iter = 0; iter < 200 && hi - lo > 1e-13 * hi; ++iter) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - gold * (hi - lo);
            fa = cost(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + gold * (hi - lo);
            fb = cost(b);
        }
    }
    return 0.5 * (lo + hi);
}

// Fit values(t) ~ a cos(2 w t + d) + b. When the 2 w model leaves more than
// 1e-3 relative residual the series is not oscillating at 2 w; fall back to
// the dominant period and refit at that frequency.
inline OscillationReport fit_oscillation(const std::vector<double>& times,
                                         const std::vector<double>& values, double omega) {
    require(times.size() == values.size(), "fit_oscillation: length mismatch");
    require(times.size() >= 64, "fit_oscillation: need at least 64 samples");
    require(omega > 0.0, "fit_oscillation: omega must be positive");
    const double span = times.back() - times.front();
    const double model_period = pi / omega;
    require(span >= 2.0 * model_period * (1.0 - 1e-9),
            "fit_oscillation: series must cover at least two periods");
    require(double(times.size()) >= 32.0 * span / model_period * (1.0 - 1e-9),
            "fit_oscillation: need at least 32 samples per period");

    auto report_from = [&](const detail::HarmonicFit& fit, double period) {
        OscillationReport rep;
        rep.period = period;
        rep.amplitude = std::hypot(fit.cos_coef, fit.sin_coef);
        rep.phase_at_origin = wrap_two_pi(std::atan2(-fit.sin_coef, fit.cos_coef));
        rep.offset = fit.offset;
        const double scale = std::max(rep.amplitude, detail::series_rms(values));
        rep.fit_residual = scale > 0.0 ? fit.rms_residual / scale : 0.0;
        return rep;
    };

    const auto primary = detail::fit_harmonic(times, values, 2.0 * omega);
    OscillationReport rep = report_from(primary, model_period);
    if (rep.fit_residual <= 1e-3) return rep;

    const double period = dominant_period(times, values);
    return report_from(detail::fit_harmonic(times, values, two_pi / period), period);
}

// Difference of the fitted oscillation phases, mapped to [0, 2 pi).
inline double phase_opposition(const std::vector<double>& times,
                               const std::vector<double>& var_q,
                               const std::vector<double>& var_p, double omega) {
    const OscillationReport q = fit_oscillation(times, var_q, omega);
    const OscillationReport p = fit_oscillation(times, var_p, omega);
    return wrap_two_pi(q.phase_at_origin - p.phase_at_origin);
}

// ---------------------------------------------------------------------------
// quadrature

// RMS of fn over [t_start, t_start + period], composite Simpson rule.
inline double rms_over_period(const std::function<double(double)>& fn, double t_start,
                              double period, int intervals = 4096) {
    require(period > 0.0, "rms_over_period: period must be positive");
    require(intervals >= 2, "rms_over_period: need at least two intervals");
    if (intervals % 2 != 0) ++intervals;
    const double h = period / intervals;
    auto sq = [&](double t) {
        const double v = fn(t);
        return v * v;
    };
    double sum = sq(t_start) + sq(t_start + period);
    for (int i = 1; i < intervals; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * sq(t_start + i * h);
    return std::sqrt(sum * h / 3.0 / period);
}

namespace detail {

inline double adaptive_step(const std::function<double(double)>& fn, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = fn(lm), frm = fn(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson integration with Richardson correction.
inline double integrate_adaptive(const std::function<double(double)>& fn, double a, double b,
                                 double tol = 1e-12, int max_depth = 48) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = fn(a), fm = fn(m), fb = fn(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_step(fn, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace nonstatic::verify
