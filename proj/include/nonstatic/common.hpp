#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonstatic {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Which quadrature the quantity lives in: position-like (q) or momentum-like (p).
enum class Space { q, p };

inline const char* space_name(Space s) { return s == Space::q ? "q" : "p"; }

// Raised when an evaluation produces non-finite intermediates or results.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw numerical_error(std::string(what) + " is not finite");
}

inline void require_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw numerical_error(std::string(what) + " is not finite");
}

// count samples from lo to hi inclusive, count >= 2.
inline std::vector<double> linspace(double lo, double hi, int count) {
    require(count >= 2, "linspace: count must be >= 2");
    require(lo < hi, "linspace: lo must be < hi");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi;
    return out;
}

// Shortest decimal representation that parses back to the same double.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Map an angle to [0, 2*pi).
inline double wrap_two_pi(double a) {
    double r = std::fmod(a, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r -= two_pi;  // fmod can round up to 2*pi
    return r;
}

}  // namespace nonstatic
