#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "nonstatic/io.hpp"
#include "nonstatic/run_config.hpp"
#include "nonstatic/version.hpp"

using namespace nonstatic;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("format_double round-trips exactly") {
    for (double v : {1.0, 0.1, 2.0 * std::sqrt(2.0), 1e-300, -3.5e17, 0.0, -0.0, 12345.6789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
}

TEST_CASE("state strings") {
    const StateSpec fock = parse_state("fock:5");
    CHECK(fock.kind == StateKind::fock);
    CHECK(fock.n == 5);
    CHECK(format_state(fock) == "fock:5");

    const StateSpec gauss = parse_state("gauss:1,2,0.5");
    CHECK(gauss.kind == StateKind::gauss);
    CHECK(gauss.k_re == 1.0);
    CHECK(gauss.k_im == 2.0);
    CHECK(gauss.xi == 0.5);

    const StateSpec negative = parse_state("gauss:0.3,-0.7,-1");
    CHECK(negative.k_im == -0.7);
    CHECK(negative.xi == -1.0);
    CHECK(parse_state(format_state(negative)) == negative);

    CHECK_THROWS_WITH(parse_state("fock"), ContainsSubstring("state"));
    CHECK_THROWS_WITH(parse_state("fock:x"), ContainsSubstring("state"));
    CHECK_THROWS_WITH(parse_state("fock:5.5"), ContainsSubstring("state"));
    CHECK_THROWS_WITH(parse_state("gauss:1,2"), ContainsSubstring("gauss"));
    CHECK_THROWS_WITH(parse_state("photon:1"), ContainsSubstring("unknown kind"));
}

TEST_CASE("grid and space strings") {
    const GridSpec g = parse_grid("-6,6,201", "grid");
    CHECK(g == GridSpec{-6.0, 6.0, 201});
    CHECK_THROWS_WITH(parse_grid("-6,6", "grid"), ContainsSubstring("grid"));
    CHECK_THROWS_WITH(parse_grid("a,6,3", "grid"), ContainsSubstring("grid"));
    CHECK_THROWS_WITH(parse_grid("0,1,2.5", "times"), ContainsSubstring("times"));

    CHECK(parse_space("q") == SpaceSel::q);
    CHECK(parse_space("p") == SpaceSel::p);
    CHECK(parse_space("both") == SpaceSel::both);
    CHECK_THROWS_WITH(parse_space("x"), ContainsSubstring("space"));
    CHECK(format_space(SpaceSel::p) == "p");
}

TEST_CASE("config json round-trip") {
    RunConfig cfg;
    cfg.A = 1.0;
    cfg.B = 5.0;
    cfg.C = 2.0;
    cfg.omega = 1.5;
    cfg.phi = 0.25;
    cfg.t0 = 0.0;
    cfg.epsilon = 1.1;
    cfg.hbar = 0.9;
    cfg.state = parse_state("gauss:1,2,0.5");
    cfg.grid = GridSpec{-7.5, 7.5, 129};
    cfg.times = GridSpec{0.0, 6.4, 65};
    cfg.space = SpaceSel::p;
    cfg.format = "json";
    cfg.out = "series";

    CHECK(config_from_json(config_to_json(cfg)) == cfg);
    // through the string form too: doubles must survive serialization
    const std::string text = config_to_json(cfg).dump();
    CHECK(config_from_json(nlohmann::json::parse(text)) == cfg);

    const RunConfig defaults;
    CHECK(config_from_json(config_to_json(defaults)) == defaults);
}

TEST_CASE("config json rejects unknown keys and partial objects fill defaults") {
    const RunConfig partial = config_from_json(nlohmann::json{{"B", 5.0}, {"C", 2.0}});
    CHECK(partial.A == 1.0);
    CHECK(partial.B == 5.0);
    CHECK(partial.C == 2.0);
    CHECK(partial.space == SpaceSel::both);
    CHECK_FALSE(partial.grid.has_value());

    CHECK_THROWS_WITH(config_from_json(nlohmann::json{{"Q", 1.0}}), ContainsSubstring("'Q'"));
    CHECK_THROWS_WITH(config_from_json(nlohmann::json{{"grid", {{"step", 0.1}}}}),
                      ContainsSubstring("step"));
    CHECK_THROWS_WITH(config_from_json(nlohmann::json::array()), ContainsSubstring("object"));
}

TEST_CASE("config validation names the offending field") {
    RunConfig cfg;
    cfg.B = 5.0;
    cfg.C = 2.1;
    CHECK_THROWS_WITH(cfg.validate(), ContainsSubstring("A*B - C^2"));

    cfg = RunConfig{};
    cfg.state.n = 65;
    CHECK_THROWS_WITH(cfg.validate(), ContainsSubstring("fock index"));

    cfg = RunConfig{};
    cfg.state = parse_state("gauss:-1,0,0");
    CHECK_THROWS_WITH(cfg.validate(), ContainsSubstring("Re K"));

    cfg = RunConfig{};
    cfg.grid = GridSpec{0.0, 1.0, 1};
    CHECK_THROWS_WITH(cfg.validate(), ContainsSubstring("grid"));

    cfg = RunConfig{};
    cfg.times = GridSpec{1.0, 1.0, 2};
    CHECK_THROWS_WITH(cfg.validate(), ContainsSubstring("times"));
    cfg.times = GridSpec{1.0, 1.0, 1};  // single instant is allowed
    CHECK_NOTHROW(cfg.validate());

    cfg = RunConfig{};
    cfg.format = "xml";
    CHECK_THROWS_WITH(cfg.validate(), ContainsSubstring("format"));
}

TEST_CASE("csv writers emit exact long-format rows") {
    DensityGrid grid;
    grid.space = Space::q;
    grid.times = {0.0, 1.0};
    grid.axis = {-1.0, 0.5};
    grid.values = {1.0, 2.0, 3.0, 4.0};
    std::ostringstream os;
    io::write_density_csv(os, grid);
    CHECK(os.str() == "t,x,density\n0,-1,1\n0,0.5,2\n1,-1,3\n1,0.5,4\n");

    io::RatioSeries series;
    series.times = {0.0, 0.25};
    series.ratio = {0.5, -2.0};
    series.re = {1.0, 2.0};
    series.im = {0.5, -4.0};
    std::ostringstream rs;
    io::write_ratio_csv(rs, series);
    CHECK(rs.str() == "t,ratio,re,im\n0,0.5,1,0.5\n0.25,-2,2,-4\n");
}

TEST_CASE("json envelopes are self-describing") {
    RunConfig cfg;
    cfg.B = 5.0;
    cfg.C = 2.0;
    cfg.state = parse_state("fock:2");

    DensityGrid grid;
    grid.space = Space::p;
    grid.times = {0.0, 1.0};
    grid.axis = {-1.0, 0.0, 1.0};
    grid.values = {1, 2, 3, 4, 5, 6};

    const nlohmann::json j = io::density_to_json(cfg, grid);
    CHECK(j["version"] == version);
    CHECK(j["command"] == "density");
    CHECK(j["space"] == "p");
    CHECK(j["columns"] == nlohmann::json({"t", "x", "density"}));
    REQUIRE(j["rows"].size() == 6);
    CHECK(j["rows"][4] == nlohmann::json({1.0, 0.0, 5.0}));
    CHECK(config_from_json(j["config"]) == cfg);

    io::RatioSeries series;
    series.times = {0.5};
    series.ratio = {2.0};
    series.re = {1.0};
    series.im = {2.0};
    const nlohmann::json r = io::ratio_to_json(cfg, series, Space::q);
    CHECK(r["command"] == "ratio");
    CHECK(r["space"] == "q");
    REQUIRE(r["rows"].size() == 1);
    CHECK(r["rows"][0] == nlohmann::json({0.5, 2.0, 1.0, 2.0}));
}
