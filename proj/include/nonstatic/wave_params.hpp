#pragma once

#include <cmath>

#include "nonstatic/common.hpp"

namespace nonstatic {

// Configuration of a single light mode in a lossless static medium
// (constant permittivity epsilon, zero conductivity).
//
// A, B, C parameterize the periodic width factor
//   f(t) = A sin^2(phase) + B cos^2(phase) + C sin(2*phase)
// and must satisfy A*B - C^2 = 1 with A, B > 0, which makes f a strictly
// positive quadratic form and keeps every wave function normalizable.
struct WaveParams {
    double A;
    double B;
    double C;
    double omega;    // angular frequency, > 0
    double phi;      // constant phase offset, rad
    double t0;       // reference time
    double epsilon;  // permittivity, > 0
    double hbar;     // > 0

    static constexpr double constraint_tol = 1e-12;

    WaveParams(double A_, double B_, double C_, double omega_ = 1.0, double phi_ = 0.0,
               double t0_ = 0.0, double epsilon_ = 1.0, double hbar_ = 1.0)
        : A(A_), B(B_), C(C_), omega(omega_), phi(phi_), t0(t0_), epsilon(epsilon_), hbar(hbar_) {
        require(std::isfinite(A) && std::isfinite(B) && std::isfinite(C) && std::isfinite(omega) &&
                    std::isfinite(phi) && std::isfinite(t0) && std::isfinite(epsilon) &&
                    std::isfinite(hbar),
                "WaveParams: all fields must be finite");
        require(A > 0.0, "WaveParams: A must be > 0");
        require(B > 0.0, "WaveParams: B must be > 0");
        require(std::abs(A * B - C * C - 1.0) <= constraint_tol,
                "WaveParams: A*B - C^2 must equal 1 (tolerance 1e-12)");
        require(omega > 0.0, "WaveParams: omega must be > 0");
        require(epsilon > 0.0, "WaveParams: epsilon must be > 0");
        require(hbar > 0.0, "WaveParams: hbar must be > 0");
    }

    // Derive C = sign * sqrt(A*B - 1) so the constraint holds exactly.
    static WaveParams from_widths(double A_, double B_, int c_sign, double omega_ = 1.0,
                                  double phi_ = 0.0, double t0_ = 0.0, double epsilon_ = 1.0,
                                  double hbar_ = 1.0) {
        require(A_ > 0.0 && B_ > 0.0 && A_ * B_ >= 1.0,
                "WaveParams: A, B must be positive with A*B >= 1");
        require(c_sign == 1 || c_sign == -1, "WaveParams: c_sign must be +1 or -1");
        const double c = static_cast<double>(c_sign) * std::sqrt(A_ * B_ - 1.0);
        return WaveParams(A_, B_, c, omega_, phi_, t0_, epsilon_, hbar_);
    }

    // Bypasses validation. Intended for diagnostics and negative controls only.
    static WaveParams unchecked(double A_, double B_, double C_, double omega_ = 1.0,
                                double phi_ = 0.0, double t0_ = 0.0, double epsilon_ = 1.0,
                                double hbar_ = 1.0) {
        WaveParams p(1.0, 1.0, 0.0);
        p.A = A_;
        p.B = B_;
        p.C = C_;
        p.omega = omega_;
        p.phi = phi_;
        p.t0 = t0_;
        p.epsilon = epsilon_;
        p.hbar = hbar_;
        return p;
    }

    bool operator==(const WaveParams&) const = default;
};

}  // namespace nonstatic
