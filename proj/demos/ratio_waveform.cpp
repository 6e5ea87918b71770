// Prints the p-space exponent ratio W_{p,I}/W_{p,R} over one period for a
// strongly nonstatic environment, together with its closed-form sinusoid
// and the RMS nonstaticity measure it integrates to.

#include <cstdio>

#include "nonstatic/common.hpp"
#include "nonstatic/fock.hpp"
#include "nonstatic/wave_params.hpp"

int main() {
    using namespace nonstatic;

    const WaveParams wp(1.0, 5.0, 2.0);
    const double amplitude = fock::ratio_amplitude(wp);
    const double delta = fock::ratio_phase_offset(wp);

    std::printf("environment: A=%g B=%g C=%g omega=%g\n", wp.A, wp.B, wp.C, wp.omega);
    std::printf("ratio closed form: %.6f * cos(2 phase + %.6f)\n\n", amplitude, delta);
    std::printf("%10s %14s %14s\n", "t", "ratio", "closed form");
    for (int i = 0; i <= 16; ++i) {
        const double t = pi * i / 16.0;
        const double ratio = fock::exponent_ratio(wp, t, Space::p);
        const double model =
            amplitude * std::cos(2.0 * timefn::phase(wp, t) + delta);
        std::printf("%10.4f %14.8f %14.8f\n", t, ratio, model);
    }

    std::printf("\nnonstaticity measure: closed form %.10f, rms quadrature %.10f\n",
                fock::nonstaticity_measure(wp),
                fock::nonstaticity_measure_rms(wp, Space::p));
    return 0;
}
