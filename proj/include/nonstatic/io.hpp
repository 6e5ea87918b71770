#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonstatic/common.hpp"
#include "nonstatic/grid.hpp"
#include "nonstatic/run_config.hpp"
#include "nonstatic/version.hpp"

// Output writers. CSV is long-format (one sample per row) with a mandatory
// header and LF line endings; JSON mirrors the same rows inside an envelope
// carrying the tool version and the originating configuration, so every
// output file is self-describing and byte-reproducible.

namespace nonstatic::io {

// diagnostic series behind the ratio plots: W_I/W_R with the components
struct RatioSeries {
    std::vector<double> times;
    std::vector<double> ratio;
    std::vector<double> re;
    std::vector<double> im;
};

inline void write_density_csv(std::ostream& os, const DensityGrid& grid) {
    os << "t,x,density\n";
    for (std::size_t ti = 0; ti < grid.times.size(); ++ti)
        for (std::size_t xi = 0; xi < grid.axis.size(); ++xi)
            os << format_double(grid.times[ti]) << ',' << format_double(grid.axis[xi]) << ','
               << format_double(grid.at(ti, xi)) << '\n';
}

inline void write_ratio_csv(std::ostream& os, const RatioSeries& series) {
    os << "t,ratio,re,im\n";
    for (std::size_t i = 0; i < series.times.size(); ++i)
        os << format_double(series.times[i]) << ',' << format_double(series.ratio[i]) << ','
           << format_double(series.re[i]) << ',' << format_double(series.im[i]) << '\n';
}

inline nlohmann::json envelope(const std::string& command, const RunConfig& cfg) {
    return nlohmann::json{
        {"version", version}, {"command", command}, {"config", config_to_json(cfg)}};
}

inline nlohmann::json density_to_json(const RunConfig& cfg, const DensityGrid& grid) {
    nlohmann::json j = envelope("density", cfg);
    j["space"] = space_name(grid.space);
    j["columns"] = {"t", "x", "density"};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t ti = 0; ti < grid.times.size(); ++ti)
        for (std::size_t xi = 0; xi < grid.axis.size(); ++xi)
            rows.push_back({grid.times[ti], grid.axis[xi], grid.at(ti, xi)});
    j["rows"] = std::move(rows);
    return j;
}

inline nlohmann::json ratio_to_json(const RunConfig& cfg, const RatioSeries& series,
                                    Space space) {
    nlohmann::json j = envelope("ratio", cfg);
    j["space"] = space_name(space);
    j["columns"] = {"t", "ratio", "re", "im"};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < series.times.size(); ++i)
        rows.push_back({series.times[i], series.ratio[i], series.re[i], series.im[i]});
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace nonstatic::io
