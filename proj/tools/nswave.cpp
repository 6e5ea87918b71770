// nswave: evaluate nonstatic light-wave densities, exponent-ratio series,
// and nonstaticity measures, or run the self-verification suite.
//
// Exit codes: 0 success, 1 usage/config error, 2 verification failure,
// 3 numerical failure (non-finite values).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonstatic/checks.hpp"
#include "nonstatic/common.hpp"
#include "nonstatic/fock.hpp"
#include "nonstatic/gaussian.hpp"
#include "nonstatic/grid.hpp"
#include "nonstatic/io.hpp"
#include "nonstatic/run_config.hpp"
#include "nonstatic/timefn.hpp"
#include "nonstatic/version.hpp"

using namespace nonstatic;

namespace {

struct RawOptions {
    std::string config, state, space, grid, times, format, out;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg, RawOptions& raw) {
    cmd->add_option("--config", raw.config, "JSON config file; flags given here override it");
    cmd->add_option("--A", cfg.A, "width parameter A");
    cmd->add_option("--B", cfg.B, "width parameter B");
    cmd->add_option("--C", cfg.C, "width parameter C (A*B - C^2 must equal 1)");
    cmd->add_option("--omega", cfg.omega, "angular frequency");
    cmd->add_option("--phi", cfg.phi, "constant phase offset");
    cmd->add_option("--t0", cfg.t0, "reference time");
    cmd->add_option("--epsilon", cfg.epsilon, "permittivity");
    cmd->add_option("--hbar", cfg.hbar, "reduced Planck constant");
    cmd->add_option("--state", raw.state, "fock:<n> or gauss:<Kre>,<Kim>,<xi>");
    cmd->add_option("--space", raw.space, "q, p, or both");
    cmd->add_option("--grid", raw.grid, "coordinate axis <min>,<max>,<count>");
    cmd->add_option("--times", raw.times, "time sweep <min>,<max>,<count>");
    cmd->add_option("--format", raw.format, "csv or json");
    cmd->add_option("--out", raw.out, "output base path (suffixed _q/_p when space=both)");
}

std::vector<Space> selected_spaces(const RunConfig& cfg) {
    if (cfg.space == SpaceSel::q) return {Space::q};
    if (cfg.space == SpaceSel::p) return {Space::p};
    return {Space::q, Space::p};
}

std::vector<double> make_times(const RunConfig& cfg, int default_count) {
    if (!cfg.times) return linspace(cfg.t0, cfg.t0 + two_pi / cfg.omega, default_count);
    if (cfg.times->count == 1) return {cfg.times->min};
    return linspace(cfg.times->min, cfg.times->max, cfg.times->count);
}

std::vector<double> make_axis(const RunConfig& cfg, Space space) {
    if (cfg.grid) return linspace(cfg.grid->min, cfg.grid->max, cfg.grid->count);
    const WaveParams wp = cfg.wave_params();
    if (cfg.state.kind == StateKind::fock) return fock::default_axis(wp, cfg.state.n, space);
    return gaussian::default_axis(wp, cfg.gaussian_params(), space);
}

std::string output_path(const RunConfig& cfg, const std::string& command, Space space,
                        bool suffixed) {
    std::string stem = cfg.out.empty() ? command : cfg.out;
    const std::string ext = "." + cfg.format;
    if (stem.size() > ext.size() && stem.compare(stem.size() - ext.size(), ext.size(), ext) == 0)
        stem.resize(stem.size() - ext.size());
    if (suffixed) stem += std::string("_") + space_name(space);
    return stem + ext;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);  // LF line endings everywhere
    require(file.good(), "out: cannot open '" + path + "' for writing");
    return file;
}

int cmd_density(const RunConfig& cfg) {
    const WaveParams wp = cfg.wave_params();
    const std::vector<double> times = make_times(cfg, 257);
    const bool suffixed = cfg.space == SpaceSel::both;
    for (Space space : selected_spaces(cfg)) {
        const std::vector<double> axis = make_axis(cfg, space);
        const DensityGrid grid =
            cfg.state.kind == StateKind::fock
                ? fock::density(wp, cfg.state.n, axis, times, space)
                : gaussian::density(wp, cfg.gaussian_params(), axis, times, space);
        if (grid.coarse_grid_warning)
            std::cerr << "warning: " << space_name(space)
                      << "-space grid is coarser than 16 points per density oscillation\n";
        const std::string path = output_path(cfg, "density", space, suffixed);
        std::ofstream file = open_output(path);
        if (cfg.format == "csv")
            io::write_density_csv(file, grid);
        else
            file << io::density_to_json(cfg, grid).dump() << '\n';
        require(file.good(), "out: write to '" + path + "' failed");
        std::cout << "wrote " << path << " (" << grid.times.size() * grid.axis.size()
                  << " samples)\n";
    }
    return 0;
}

int cmd_ratio(const RunConfig& cfg) {
    const WaveParams wp = cfg.wave_params();
    const std::vector<double> times = make_times(cfg, 513);
    const bool suffixed = cfg.space == SpaceSel::both;
    const bool is_fock = cfg.state.kind == StateKind::fock;
    for (Space space : selected_spaces(cfg)) {
        io::RatioSeries series;
        series.times = times;
        for (double t : times) {
            cplx w;
            if (is_fock) {
                const timefn::ComplexW value =
                    space == Space::q ? timefn::exponent_q(wp, t) : timefn::exponent_p(wp, t);
                w = value.value();
            } else {
                const gaussian::GaussianFrame fr = gaussian::frame(wp, cfg.gaussian_params(), t);
                w = space == Space::q ? fr.exponent_q : fr.exponent_p;
            }
            series.ratio.push_back(w.imag() / w.real());
            series.re.push_back(w.real());
            series.im.push_back(w.imag());
        }
        const std::string path = output_path(cfg, "ratio", space, suffixed);
        std::ofstream file = open_output(path);
        if (cfg.format == "csv")
            io::write_ratio_csv(file, series);
        else
            file << io::ratio_to_json(cfg, series, space).dump() << '\n';
        require(file.good(), "out: write to '" + path + "' failed");
        std::cout << "wrote " << path << " (" << series.times.size() << " samples)\n";
    }
    return 0;
}

int cmd_measure(const RunConfig& cfg) {
    const WaveParams wp = cfg.wave_params();
    const bool is_fock = cfg.state.kind == StateKind::fock;
    for (Space space : selected_spaces(cfg)) {
        const double rms = is_fock
                               ? fock::nonstaticity_measure_rms(wp, space)
                               : gaussian::nonstaticity_measure_rms(wp, cfg.gaussian_params(),
                                                                    space);
        std::cout << "measure_rms_" << space_name(space) << " = " << format_double(rms) << '\n';
    }
    if (is_fock)
        std::cout << "measure_closed_form = " << format_double(fock::nonstaticity_measure(wp))
                  << '\n';
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const std::vector<checks::CheckResult> results =
        checks::run_checks(cfg.wave_params(), cfg.state);
    int passed = 0;
    for (const checks::CheckResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
                  << ": measured = " << format_double(r.measured)
                  << " (threshold " << format_double(r.threshold) << ")";
        if (!r.note.empty()) std::cout << " | " << r.note;
        std::cout << '\n';
        passed += r.passed ? 1 : 0;
    }
    std::cout << "verification: " << (checks::all_passed(results) ? "PASS" : "FAIL") << " ("
              << passed << "/" << results.size() << " checks)\n";
    return checks::all_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    RawOptions raw;

    // resolve --config first so file values act as defaults under the flags
    try {
        std::string path;
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc)
                path = argv[i + 1];
            else if (arg.rfind("--config=", 0) == 0)
                path = arg.substr(9);
        }
        if (!path.empty()) {
            std::ifstream in(path);
            require(in.good(), "config: cannot open '" + path + "'");
            cfg = config_from_json(nlohmann::json::parse(in));
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    CLI::App app{"nonstatic quantum light waves in a static environment"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);
    CLI::App* density = app.add_subcommand("density", "sample |psi|^2 over coordinate x time");
    CLI::App* ratio = app.add_subcommand("ratio", "imaginary-to-real exponent ratio series");
    CLI::App* measure = app.add_subcommand("measure", "RMS nonstaticity measure");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the self-verification suite");
    for (CLI::App* cmd : {density, ratio, measure, verify_cmd})
        add_common_options(cmd, cfg, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!raw.state.empty()) cfg.state = parse_state(raw.state);
        if (!raw.space.empty()) cfg.space = parse_space(raw.space);
        if (!raw.grid.empty()) cfg.grid = parse_grid(raw.grid, "grid");
        if (!raw.times.empty()) cfg.times = parse_grid(raw.times, "times");
        if (!raw.format.empty()) cfg.format = raw.format;
        if (!raw.out.empty()) cfg.out = raw.out;
        cfg.validate();

        if (app.got_subcommand(density)) return cmd_density(cfg);
        if (app.got_subcommand(ratio)) return cmd_ratio(cfg);
        if (app.got_subcommand(measure)) return cmd_measure(cfg);
        return cmd_verify(cfg);
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }
}
