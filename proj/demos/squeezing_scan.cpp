// Scans the quadrature widths of an undisplaced nonstatic Gaussian wave over
// one period: the minimum of sigma_q dips below the static ground-state
// width (squeezing) while sigma_q * sigma_p stays at or above hbar/2.

#include <cstdio>

#include "nonstatic/common.hpp"
#include "nonstatic/gaussian.hpp"
#include "nonstatic/wave_params.hpp"

int main() {
    using namespace nonstatic;

    const WaveParams wp(1.0, 5.0, 2.0);
    const gaussian::GaussianParams gp{cplx{1.0, 1.0}, 0.0};
    const double static_sigma_q = std::sqrt(wp.hbar / (2.0 * wp.epsilon * wp.omega));
    const double static_sigma_p = std::sqrt(wp.epsilon * wp.omega * wp.hbar / 2.0);

    std::printf("static ground-state widths: sigma_q=%.6f sigma_p=%.6f\n\n", static_sigma_q,
                static_sigma_p);
    std::printf("%10s %12s %12s %16s\n", "t", "sigma_q", "sigma_p", "sigma_q*sigma_p");

    double min_q = 1e300, min_p = 1e300, min_product = 1e300;
    for (int i = 0; i <= 32; ++i) {
        const double t = pi * i / 32.0;
        const gaussian::GaussianFrame fr = gaussian::frame(wp, gp, t);
        const double sigma_q = std::sqrt(gaussian::variance(fr, Space::q));
        const double sigma_p = std::sqrt(gaussian::variance(fr, Space::p));
        min_q = std::min(min_q, sigma_q);
        min_p = std::min(min_p, sigma_p);
        min_product = std::min(min_product, sigma_q * sigma_p);
        if (i % 4 == 0)
            std::printf("%10.4f %12.6f %12.6f %16.6f\n", t, sigma_q, sigma_p, sigma_q * sigma_p);
    }

    std::printf("\nmin sigma_q = %.6f (%s static)\n", min_q,
                min_q < static_sigma_q ? "below" : "not below");
    std::printf("min sigma_p = %.6f (%s static)\n", min_p,
                min_p < static_sigma_p ? "below" : "not below");
    std::printf("min sigma_q*sigma_p = %.6f (Heisenberg bound %.6f)\n", min_product,
                wp.hbar / 2.0);
    return 0;
}
