#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chtails/config.hpp"
#include "chtails/report.hpp"
#include "chtails/scenarios.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace chtails;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
}

RunConfig small_run() {
    RunConfig cfg;
    cfg.experiment = "compact_support";
    cfg.scenario.kind = "compact_bump";
    cfg.grid = GridConfig{-30.0, 30.0, 1024};
    cfg.time.t_end = 0.25;
    cfg.windows = WindowConfig{18.0, 6.0};
    return cfg;
}

} // namespace

TEST_CASE("parse_config: minimal text gives documented defaults") {
    RunConfig cfg = parse_config("experiment = compact_support\n");
    CHECK(cfg.experiment == "compact_support");
    CHECK(cfg.grid.n == 8192);
    CHECK(cfg.grid.x_min == -60.0);
    CHECK(cfg.time.cfl == 0.25);
    CHECK(cfg.scenario.kind == "compact_bump"); // defaulted from the experiment
    CHECK(cfg.tolerances.e_match_tol == 0.005);
    CHECK(cfg.windows.margin == 40.0);
    CHECK(cfg.output.formats == "csv,json");
}

TEST_CASE("parse_config: comments, blank lines, inline whitespace") {
    RunConfig cfg = parse_config(
        "# leading comment\n"
        "\n"
        "experiment = persistence   \n"
        "scenario.theta = 0.75  # trailing comment\n");
    CHECK(cfg.experiment == "persistence");
    CHECK(cfg.scenario.theta == 0.75);
}

TEST_CASE("print_config round-trips through parse_config") {
    RunConfig cfg = small_run();
    cfg.scenario.amplitude = 0.3;
    cfg.scenario.center = -1.25;
    cfg.time.monitor_stride = 9;
    cfg.time.tail_clamp = false;
    cfg.tolerances.r2_min = 0.9995;
    cfg.tolerances.support_pad_cells = 5;
    cfg.weight = WeightConfig{0.9, 12};
    cfg.output.directory = "elsewhere";
    cfg.output.formats = "csv,json,profiles";
    RunConfig back = parse_config(print_config(cfg));
    CHECK(back == cfg);
    CHECK(print_config(back) == print_config(cfg));
}

TEST_CASE("parse_config rejections name the offending key or line") {
    CHECK_THROWS_WITH_AS(parse_config("flux = 3\nexperiment = peakon\n"),
                         doctest::Contains("unknown key 'flux'"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("experiment = peakon\ntime.t_end = 1\ntime.t_end = 2\n"),
                         doctest::Contains("duplicate key 'time.t_end'"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("experiment = persistence\nscenario.theta = 1.5\n"),
                         doctest::Contains("theta must be in (0,1)"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("grid.n = 512\n"),
                         doctest::Contains("missing required key 'experiment'"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("experiment = peakon\nscenario.epsilon = 0.001\n"),
                         doctest::Contains("4 grid spacings"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("experiment = compact_support\nwindows.margin = 55\n"),
        doctest::Contains("margin + width must fit in half the domain"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("experiment = peakon\ngarbage line\n"),
                         doctest::Contains("line 2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("experiment = fast_decay\nscenario.kind = sech_tail\n"),
                         doctest::Contains("sech_tail decays like"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("experiment = peakon\ngrid.n = twelve\n"),
                         doctest::Contains("grid.n"), ConfigError);
}

TEST_CASE("load_config reports an unopenable path") {
    CHECK_THROWS_WITH_AS(load_config("/nonexistent/dir/x.cfg"),
                         doctest::Contains("cannot open config file"), ConfigError);
}

TEST_CASE("has_format and resolve_output_dir") {
    RunConfig cfg = small_run();
    cfg.output.formats = "csv,profiles";
    CHECK(has_format(cfg, "csv"));
    CHECK(has_format(cfg, "profiles"));
    CHECK_FALSE(has_format(cfg, "json"));

    cfg.output.directory = "somewhere";
    unsetenv("CH_TAILS_OUT");
    CHECK(resolve_output_dir(cfg) == "somewhere");
    setenv("CH_TAILS_OUT", "/tmp/chtails_env_dir", 1);
    CHECK(resolve_output_dir(cfg) == "/tmp/chtails_env_dir");
    unsetenv("CH_TAILS_OUT");
}

TEST_CASE("series CSV: fixed header, full-precision numbers, increasing time") {
    CHECK(std::string(series_csv_header) ==
          "t,H1,M0,E_plus,E_minus,dEplus_pred,c_plus,c_minus,slope_right,slope_left,"
          "supp_left,supp_right,eta_a,eta_b,wsup_u,wsup_ux");

    ExperimentReport rep = run_experiment(small_run());
    REQUIRE_FALSE(rep.partial);
    std::vector<std::string> lines = split(format_series_csv(rep), '\n');
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0] == series_csv_header);

    double prev_t = -1.0;
    for (size_t k = 1; k < lines.size(); ++k) {
        if (lines[k].empty()) continue;
        std::vector<std::string> f = split(lines[k], ',');
        REQUIRE(f.size() == 16);
        for (const std::string& cell : f) {
            if (cell == "nan") continue;
            char buf[32];
            const double v = std::strtod(cell.c_str(), nullptr);
            std::snprintf(buf, sizeof buf, "%.17g", v);
            CHECK(cell == buf); // %.17g round-trips every double exactly
        }
        const double t = std::strtod(f[0].c_str(), nullptr);
        CHECK(t > prev_t);
        prev_t = t;
    }
}

TEST_CASE("zero data: conserved columns zero, tail columns flagged nan") {
    RunConfig cfg = small_run();
    cfg.scenario.amplitude = 0.0;
    cfg.time.t_end = 0.1;
    ExperimentReport rep = run_experiment(cfg);
    std::vector<std::string> lines = split(format_series_csv(rep), '\n');
    REQUIRE(lines.size() >= 2);
    for (size_t k = 1; k < lines.size(); ++k) {
        if (lines[k].empty()) continue;
        std::vector<std::string> f = split(lines[k], ',');
        REQUIRE(f.size() == 16);
        CHECK(f[1] == "0");    // H1
        CHECK(f[2] == "0");    // M0
        CHECK(f[3] == "0");    // E_plus
        CHECK(f[6] == "nan");  // c_plus: below the value floor
        CHECK(f[8] == "nan");  // slope_right: no usable window
        CHECK(f[10] == "nan"); // supp_left: empty support
        CHECK(f[14] == "0");   // wsup_u
    }
}

TEST_CASE("momentum support stays inside the padded particle images") {
    ExperimentReport rep = run_experiment(small_run());
    REQUIRE_FALSE(rep.partial);
    const double pad =
        rep.config.tolerances.support_pad_cells *
        (rep.config.grid.x_max - rep.config.grid.x_min) / (rep.config.grid.n - 1);
    for (const MonitorRow& r : rep.rows) {
        if (std::isnan(r.supp_left)) continue;
        CHECK(r.supp_left >= r.eta_a - pad);
        CHECK(r.supp_right <= r.eta_b + pad);
        CHECK(r.eta_a < r.eta_b);
    }
}

TEST_CASE("report JSON: stable bytes, verdicts, no clocks or hosts") {
    ExperimentReport rep = run_experiment(small_run());
    const std::string a = format_report_json(rep);
    const std::string b = format_report_json(run_experiment(small_run()));
    CHECK(a == b);
    CHECK(a.find("\"experiment\"") != std::string::npos);
    CHECK(a.find("\"verdicts\"") != std::string::npos);
    CHECK(a.find("\"partial\": false") != std::string::npos);
    CHECK(a.find("timestamp") == std::string::npos);
    CHECK(a.find("hostname") == std::string::npos);
}

TEST_CASE("a blown-up run is reported partial and cannot pass") {
    RunConfig cfg;
    cfg.experiment = "fast_decay";
    cfg.scenario.kind = "custom";
    cfg.scenario.custom_profile = "odd_gaussian";
    cfg.scenario.amplitude = -2.0;
    cfg.scenario.width = 1.0;
    cfg.grid = GridConfig{-20.0, 20.0, 1024};
    cfg.time.t_end = 3.0;
    cfg.windows = WindowConfig{10.0, 5.0};
    ExperimentReport rep = run_experiment(cfg);
    CHECK(rep.partial);
    CHECK(rep.error == "blow-up or instability detected");
    CHECK_FALSE(rep.all_pass());
    CHECK(!rep.rows.empty());
    const std::string js = format_report_json(rep);
    CHECK(js.find("\"partial\": true") != std::string::npos);
    CHECK(js.find("blow-up or instability detected") != std::string::npos);
}

TEST_CASE("write_outputs materializes the requested formats") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "chtails_io_test";
    fs::remove_all(dir);

    RunConfig cfg = small_run();
    cfg.output.formats = "csv,json,profiles";
    ExperimentReport rep = run_experiment(cfg);
    std::vector<std::string> paths = write_outputs(rep, dir.string());
    CHECK(paths.size() >= 2 + rep.rows.size()); // series + report + one profile per row

    CHECK(fs::exists(dir / "series.csv"));
    CHECK(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "profile_r0000.csv"));

    std::ifstream in(dir / "series.csv");
    std::string first;
    std::getline(in, first);
    CHECK(first == series_csv_header);

    std::ifstream pin(dir / "profile_r0000.csv");
    std::string phead;
    std::getline(pin, phead);
    CHECK(phead == "x,u,h");

    fs::remove_all(dir);
}
