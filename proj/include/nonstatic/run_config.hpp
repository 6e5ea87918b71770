#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonstatic/common.hpp"
#include "nonstatic/fock.hpp"
#include "nonstatic/gaussian.hpp"
#include "nonstatic/wave_params.hpp"

// One fully-specified run: environment parameters, state, grids, output.
// Accepted as command-line flags, as a JSON file, or both (flags win).
// The JSON form round-trips exactly so emitted envelopes re-parse to the
// same configuration.

namespace nonstatic {

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;

    bool operator==(const GridSpec&) const = default;
};

enum class StateKind { fock, gauss };

struct StateSpec {
    StateKind kind = StateKind::fock;
    int n = 0;  // fock quantum number
    double k_re = 1.0, k_im = 0.0, xi = 0.0;  // gaussian K and displacement

    bool operator==(const StateSpec&) const = default;
};

enum class SpaceSel { q, p, both };

struct RunConfig {
    double A = 1.0, B = 1.0, C = 0.0;
    double omega = 1.0, phi = 0.0, t0 = 0.0, epsilon = 1.0, hbar = 1.0;
    StateSpec state;
    std::optional<GridSpec> grid;   // absent: auto-sized from the state
    std::optional<GridSpec> times;  // absent: one full 2 pi / omega sweep
    SpaceSel space = SpaceSel::both;
    std::string format = "csv";
    std::string out;  // output base path; empty: named after the command

    bool operator==(const RunConfig&) const = default;

    WaveParams wave_params() const {
        return WaveParams(A, B, C, omega, phi, t0, epsilon, hbar);
    }

    gaussian::GaussianParams gaussian_params() const {
        return gaussian::GaussianParams(cplx{state.k_re, state.k_im}, state.xi);
    }

    // full validation beyond what parsing enforces structurally
    void validate() const {
        (void)wave_params();
        if (state.kind == StateKind::fock)
            fock::require_index(state.n);
        else
            (void)gaussian_params();
        if (grid) {
            require(grid->count >= 2 && grid->min < grid->max,
                    "grid: need min < max and count >= 2");
        }
        if (times) {
            require(times->count >= 1, "times: count must be >= 1");
            require(times->count < 2 || times->min < times->max,
                    "times: need min < max when count >= 2");
        }
        require(format == "csv" || format == "json", "format: must be csv or json");
    }
};

// --------------------------------------------------------------------------
// strict scalar parsing (whole token must be consumed)

namespace detail {

inline double parse_double_strict(const std::string& token, const std::string& field) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    require(ec == std::errc() && ptr == last, field + ": cannot parse number '" + token + "'");
    return value;
}

inline int parse_int_strict(const std::string& token, const std::string& field) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    require(ec == std::errc() && ptr == last, field + ": cannot parse integer '" + token + "'");
    return value;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

// "fock:<n>" or "gauss:<Kre>,<Kim>,<xi>"
inline StateSpec parse_state(const std::string& text) {
    StateSpec s;
    const std::size_t colon = text.find(':');
    require(colon != std::string::npos,
            "state: expected fock:<n> or gauss:<Kre>,<Kim>,<xi>, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "fock") {
        s.kind = StateKind::fock;
        s.n = detail::parse_int_strict(rest, "state");
    } else if (kind == "gauss") {
        s.kind = StateKind::gauss;
        const auto parts = detail::split(rest, ',');
        require(parts.size() == 3, "state: gauss needs exactly <Kre>,<Kim>,<xi>");
        s.k_re = detail::parse_double_strict(parts[0], "state");
        s.k_im = detail::parse_double_strict(parts[1], "state");
        s.xi = detail::parse_double_strict(parts[2], "state");
    } else {
        require(false, "state: unknown kind '" + kind + "' (use fock or gauss)");
    }
    return s;
}

inline std::string format_state(const StateSpec& s) {
    if (s.kind == StateKind::fock) return "fock:" + std::to_string(s.n);
    return "gauss:" + format_double(s.k_re) + "," + format_double(s.k_im) + "," +
           format_double(s.xi);
}

// "<min>,<max>,<count>"
inline GridSpec parse_grid(const std::string& text, const std::string& field) {
    const auto parts = detail::split(text, ',');
    require(parts.size() == 3, field + ": expected <min>,<max>,<count>, got '" + text + "'");
    GridSpec g;
    g.min = detail::parse_double_strict(parts[0], field);
    g.max = detail::parse_double_strict(parts[1], field);
    g.count = detail::parse_int_strict(parts[2], field);
    return g;
}

inline SpaceSel parse_space(const std::string& text) {
    if (text == "q") return SpaceSel::q;
    if (text == "p") return SpaceSel::p;
    if (text == "both") return SpaceSel::both;
    require(false, "space: must be q, p, or both, got '" + text + "'");
    return SpaceSel::both;  // unreachable
}

inline std::string format_space(SpaceSel s) {
    switch (s) {
        case SpaceSel::q: return "q";
        case SpaceSel::p: return "p";
        default: return "both";
    }
}

// --------------------------------------------------------------------------
// JSON round-trip

inline nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j{{"A", cfg.A},
                     {"B", cfg.B},
                     {"C", cfg.C},
                     {"omega", cfg.omega},
                     {"phi", cfg.phi},
                     {"t0", cfg.t0},
                     {"epsilon", cfg.epsilon},
                     {"hbar", cfg.hbar},
                     {"state", format_state(cfg.state)},
                     {"space", format_space(cfg.space)},
                     {"format", cfg.format},
                     {"out", cfg.out}};
    if (cfg.grid)
        j["grid"] = {{"min", cfg.grid->min}, {"max", cfg.grid->max}, {"count", cfg.grid->count}};
    if (cfg.times)
        j["times"] = {
            {"min", cfg.times->min}, {"max", cfg.times->max}, {"count", cfg.times->count}};
    return j;
}

inline GridSpec grid_from_json(const nlohmann::json& j, const std::string& field) {
    require(j.is_object(), field + ": expected an object with min/max/count");
    GridSpec g;
    for (const auto& [key, value] : j.items()) {
        if (key == "min")
            g.min = value.get<double>();
        else if (key == "max")
            g.max = value.get<double>();
        else if (key == "count")
            g.count = value.get<int>();
        else
            require(false, field + ": unknown key '" + key + "'");
    }
    return g;
}

inline RunConfig config_from_json(const nlohmann::json& j) {
    require(j.is_object(), "config: expected a JSON object");
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "A")
            cfg.A = value.get<double>();
        else if (key == "B")
            cfg.B = value.get<double>();
        else if (key == "C")
            cfg.C = value.get<double>();
        else if (key == "omega")
            cfg.omega = value.get<double>();
        else if (key == "phi")
            cfg.phi = value.get<double>();
        else if (key == "t0")
            cfg.t0 = value.get<double>();
        else if (key == "epsilon")
            cfg.epsilon = value.get<double>();
        else if (key == "hbar")
            cfg.hbar = value.get<double>();
        else if (key == "state")
            cfg.state = parse_state(value.get<std::string>());
        else if (key == "space")
            cfg.space = parse_space(value.get<std::string>());
        else if (key == "format")
            cfg.format = value.get<std::string>();
        else if (key == "out")
            cfg.out = value.get<std::string>();
        else if (key == "grid")
            cfg.grid = grid_from_json(value, "grid");
        else if (key == "times")
            cfg.times = grid_from_json(value, "times");
        else
            require(false, "config: unknown key '" + key + "'");
    }
    return cfg;
}

}  // namespace nonstatic
