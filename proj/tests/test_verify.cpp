#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "nonstatic/hermite.hpp"
#include "nonstatic/verify.hpp"
#include "nonstatic/wave_params.hpp"

using namespace nonstatic;
using Catch::Approx;

namespace {

verify::SampledWave sample(const std::function<cplx(double)>& fn, double lo, double hi, int n,
                           Space space = Space::q) {
    std::vector<double> axis = linspace(lo, hi, n);
    std::vector<cplx> values(axis.size());
    for (std::size_t i = 0; i < axis.size(); ++i) values[i] = fn(axis[i]);
    return verify::make_sampled_wave(std::move(axis), std::move(values), 0.0, space);
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("fourier transform: unit gaussian is self-reciprocal") {
    auto gauss = [](double q) { return cplx(std::pow(pi, -0.25) * std::exp(-0.5 * q * q), 0.0); };
    const verify::SampledWave in = sample(gauss, -12.0, 12.0, 1024);
    REQUIRE_FALSE(in.tail_warning);

    const verify::SampledWave out = verify::numerical_ft(in, linspace(-12.0, 12.0, 1024), 1.0);
    CHECK(out.space == Space::p);
    double worst = 0.0;
    for (std::size_t i = 0; i < out.axis.size(); ++i)
        worst = std::max(worst, std::abs(out.values[i] - gauss(out.axis[i])));
    CHECK(worst < 1e-10);
}

TEST_CASE("fourier transform: width scaling with hbar != 1") {
    // (a/pi)^{1/4} e^{-a q^2/2}  ->  (b/pi)^{1/4} e^{-b p^2/2},  b = 1/(hbar^2 a)
    const double hbar = 0.7, a = 1.3, b = 1.0 / (hbar * hbar * a);
    const verify::SampledWave in = sample(
        [&](double q) { return cplx(std::pow(a / pi, 0.25) * std::exp(-0.5 * a * q * q), 0.0); },
        -12.0, 12.0, 1024);
    const verify::SampledWave out = verify::numerical_ft(in, linspace(-12.0, 12.0, 1025), hbar);
    double worst = 0.0;
    for (std::size_t i = 0; i < out.axis.size(); ++i) {
        const double expected = std::pow(b / pi, 0.25) * std::exp(-0.5 * b * out.axis[i] * out.axis[i]);
        worst = std::max(worst, std::abs(out.values[i] - expected));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("fourier transform: parity and parseval") {
    // odd real input -> odd, purely imaginary output that vanishes at p = 0
    const verify::SampledWave in =
        sample([](double q) { return cplx(q * std::exp(-0.5 * q * q), 0.0); }, -12.0, 12.0, 1024);
    const verify::SampledWave out = verify::numerical_ft(in, linspace(-12.0, 12.0, 1025), 1.0);
    CHECK(std::abs(out.values[512]) < 1e-12);  // p = 0
    for (std::size_t i = 0; i < out.axis.size(); ++i) {
        CHECK(std::abs(out.values[i].real()) < 1e-12);
        CHECK(std::abs(out.values[i] + out.values[out.axis.size() - 1 - i]) < 1e-10);
    }
    CHECK(verify::moments(out).norm == Approx(verify::moments(in).norm).margin(1e-9));
}

TEST_CASE("fourier transform: inverse undoes forward") {
    const verify::SampledWave in = sample(
        [](double q) {
            return hermite_weighted(3, q) * std::exp(cplx(0.0, 0.7 * q)) / std::pow(pi, 0.25);
        },
        -14.0, 14.0, 1024);
    const verify::SampledWave mid = verify::numerical_ft(in, linspace(-14.0, 14.0, 1024), 1.0);
    const verify::SampledWave back =
        verify::numerical_ft(mid, in.axis, 1.0, verify::FtDirection::inverse);
    CHECK(back.space == Space::q);
    CHECK(max_abs_diff(back.values, in.values) < 1e-8);
}

TEST_CASE("sampled wave validation and tail warnings") {
    CHECK_THROWS_AS(sample([](double) { return cplx(1.0, 0.0); }, 0.0, 1.0, 32),
                    std::invalid_argument);

    std::vector<double> axis = linspace(-6.0, 6.0, 128);
    std::vector<cplx> values(127, cplx(0.0, 0.0));
    CHECK_THROWS_AS(verify::make_sampled_wave(axis, values, 0.0, Space::q),
                    std::invalid_argument);  // length mismatch

    values.resize(128, cplx(0.0, 0.0));
    std::vector<double> skewed = axis;
    skewed[60] += 1e-3;
    CHECK_THROWS_AS(verify::make_sampled_wave(skewed, values, 0.0, Space::q),
                    std::invalid_argument);  // non-uniform

    std::vector<double> reversed(axis.rbegin(), axis.rend());
    CHECK_THROWS_AS(verify::make_sampled_wave(reversed, values, 0.0, Space::q),
                    std::invalid_argument);  // decreasing

    // truncated gaussian has visible tails; the flag propagates through the transform
    const verify::SampledWave clipped =
        sample([](double q) { return cplx(std::exp(-0.5 * q * q), 0.0); }, -3.0, 3.0, 128);
    CHECK(clipped.tail_warning);
    CHECK(verify::numerical_ft(clipped, linspace(-3.0, 3.0, 65), 1.0).tail_warning);
    CHECK(verify::moments(clipped).tail_warning);
}

TEST_CASE("moments of reference waves") {
    const verify::SampledWave unit =
        sample([](double q) { return cplx(std::pow(pi, -0.25) * std::exp(-0.5 * q * q), 0.0); },
               -12.0, 12.0, 2048);
    const verify::Moments m = verify::moments(unit);
    CHECK(m.norm == Approx(1.0).margin(1e-10));
    CHECK(m.mean == Approx(0.0).margin(1e-12));
    CHECK(m.variance == Approx(0.5).margin(1e-10));

    const verify::Moments shifted = verify::moments(sample(
        [](double q) { return cplx(std::pow(pi, -0.25) * std::exp(-0.5 * (q - 1) * (q - 1)), 0.0); },
        -11.0, 13.0, 2048));
    CHECK(shifted.mean == Approx(1.0).margin(1e-10));
    CHECK(shifted.variance == Approx(0.5).margin(1e-10));

    // stationary excited mode: variance (2n+1)/2
    const verify::Moments excited = verify::moments(sample(
        [](double q) { return cplx(hermite_weighted(2, q) / std::pow(pi, 0.25), 0.0); }, -14.0,
        14.0, 2048));
    CHECK(excited.norm == Approx(1.0).margin(1e-10));
    CHECK(excited.variance == Approx(2.5).margin(1e-9));
}

TEST_CASE("width-equation residual") {
    const WaveParams flat(1.0, 1.0, 0.0);
    const WaveParams strong(1.0, 5.0, 2.0);
    for (int i = 0; i <= 100; ++i) {
        const double t = -10.0 + 20.0 * i / 100.0;
        CHECK(std::abs(verify::ode_residual(flat, t)) < 1e-14);
        CHECK(std::abs(verify::ode_residual(strong, t)) < 1e-9);
    }

    // negative control: breaking A*B - C^2 = 1 must be visible in the residual
    const WaveParams broken = WaveParams::unchecked(1.0, 5.0, 2.1);
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i)
        worst = std::max(worst, std::abs(verify::ode_residual(broken, 0.1 * i)));
    CHECK(worst > 1e-3);
}

TEST_CASE("oscillation fit recovers an exact double-frequency model") {
    const std::vector<double> times = linspace(0.0, 4.0 * pi, 257);
    std::vector<double> values(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        values[i] = 2.83 * std::cos(2.0 * times[i] + pi / 4.0) + 0.5;

    const verify::OscillationReport rep = verify::fit_oscillation(times, values, 1.0);
    CHECK(rep.amplitude == Approx(2.83).margin(1e-12));
    CHECK(rep.phase_at_origin == Approx(pi / 4.0).margin(1e-12));
    CHECK(rep.period == Approx(pi).margin(1e-12));
    CHECK(rep.offset == Approx(0.5).margin(1e-12));
    CHECK(rep.fit_residual < 1e-12);

    // sign flips land in the phase, amplitude stays non-negative
    for (std::size_t i = 0; i < times.size(); ++i) values[i] = -2.0 * std::cos(2.0 * times[i]);
    const verify::OscillationReport flipped = verify::fit_oscillation(times, values, 1.0);
    CHECK(flipped.amplitude == Approx(2.0).margin(1e-12));
    CHECK(flipped.phase_at_origin == Approx(pi).margin(1e-12));

    for (double& v : values) v = 0.25;  // constant series has no oscillation
    const verify::OscillationReport still = verify::fit_oscillation(times, values, 1.0);
    CHECK(still.amplitude < 1e-12);
    CHECK(still.offset == Approx(0.25).margin(1e-12));
    CHECK(still.fit_residual < 1e-12);
}

TEST_CASE("oscillation fit falls back to the dominant period") {
    // centroid-like series at omega, not 2 omega
    const std::vector<double> times = linspace(0.0, 8.0 * pi, 1025);
    std::vector<double> values(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) values[i] = std::cos(times[i]);

    const verify::OscillationReport rep = verify::fit_oscillation(times, values, 1.0);
    CHECK(rep.period == Approx(two_pi).epsilon(1e-6));
    CHECK(rep.amplitude == Approx(1.0).margin(1e-9));
    // phase is circular: a fitted -1e-13 wraps to just below 2 pi
    CHECK(std::min(rep.phase_at_origin, two_pi - rep.phase_at_origin) < 1e-6);

    CHECK(verify::dominant_period(times, values) == Approx(two_pi).epsilon(1e-6));

    std::vector<double> second(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) second[i] = std::sin(2.0 * times[i]);
    CHECK(verify::dominant_period(times, second) == Approx(pi).epsilon(1e-6));
}

TEST_CASE("oscillation fit preconditions") {
    const std::vector<double> times = linspace(0.0, 4.0 * pi, 257);
    std::vector<double> values(times.size(), 1.0);
    CHECK_THROWS_AS(verify::fit_oscillation(times, std::vector<double>(9, 0.0), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify::fit_oscillation(times, values, -1.0), std::invalid_argument);
    // a 4 pi span covers fewer than two periods when omega = 0.1
    CHECK_THROWS_AS(verify::fit_oscillation(times, values, 0.1), std::invalid_argument);
    // 65 samples over 4 periods is below 32 per period
    const std::vector<double> sparse_t = linspace(0.0, 4.0 * pi, 65);
    CHECK_THROWS_AS(verify::fit_oscillation(sparse_t, std::vector<double>(65, 0.0), 1.0),
                    std::invalid_argument);
}

TEST_CASE("phase opposition of two fitted series") {
    const std::vector<double> times = linspace(0.0, 4.0 * pi, 513);
    std::vector<double> up(times.size()), down(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        up[i] = 1.0 + 0.3 * std::cos(2.0 * times[i]);
        down[i] = 1.0 - 0.3 * std::cos(2.0 * times[i]);
    }
    CHECK(verify::phase_opposition(times, up, down, 1.0) == Approx(pi).margin(1e-10));
    CHECK(verify::phase_opposition(times, up, up, 1.0) == Approx(0.0).margin(1e-12));
}

TEST_CASE("rms over one period") {
    CHECK(verify::rms_over_period([](double t) { return std::cos(2.0 * t); }, 0.0, pi) ==
          Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
    CHECK(verify::rms_over_period([](double) { return -1.5; }, 2.0, 7.0) ==
          Approx(1.5).margin(1e-12));
    CHECK_THROWS_AS(verify::rms_over_period([](double) { return 0.0; }, 0.0, -1.0),
                    std::invalid_argument);
}

TEST_CASE("adaptive quadrature") {
    CHECK(verify::integrate_adaptive([](double x) { return std::sin(x); }, 0.0, pi) ==
          Approx(2.0).margin(1e-12));
    CHECK(verify::integrate_adaptive([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0) ==
          Approx(pi).margin(1e-12));
    CHECK(verify::integrate_adaptive([](double x) { return std::sin(x); }, pi, 0.0) ==
          Approx(-2.0).margin(1e-12));
    CHECK(verify::integrate_adaptive([](double x) { return x; }, 3.0, 3.0) == 0.0);
}
