#pragma once

#include <cmath>
#include <string>

#include "nonstatic/common.hpp"

// Hermite polynomials, physicists' convention:
//
//   H_0 = 1,  H_1 = 2x,  H_{k+1} = 2 x H_k - 2 k H_{k-1}.
//
// Raw values overflow quickly (H_n grows like n! for fixed x), so the wave
// functions use the Gaussian-weighted normalized form
//
//   u_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n!),
//
// computed by the equivalent recurrence
//
//   u_{k+1} = x sqrt(2/(k+1)) u_k - sqrt(k/(k+1)) u_{k-1},
//
// which keeps every intermediate bounded (|u_k| <~ 1 up to a small factor)
// for all real x and n well beyond 64. In the far tail the weighted form
// underflows gracefully to 0 instead of producing inf * 0.

namespace nonstatic {

// Raw H_n(x). Throws numerical_error when the result leaves double range.
inline double hermite(int n, double x) {
    require(n >= 0, "hermite: order must be non-negative");
    double prev = 1.0;  // H_0
    if (n == 0) return prev;
    double cur = 2.0 * x;  // H_1
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    if (!std::isfinite(cur))
        throw numerical_error("hermite: overflow at n = " + std::to_string(n));
    return cur;
}

// u_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n!); stable for the supported n range.
inline double hermite_weighted(int n, double x) {
    require(n >= 0, "hermite_weighted: order must be non-negative");
    double prev = std::exp(-0.5 * x * x);  // u_0
    if (n == 0) return prev;
    double cur = x * std::sqrt(2.0) * prev;  // u_1
    for (int k = 1; k < n; ++k) {
        const double next =
            x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace nonstatic
