#include "chtails/report.hpp"

#include "chtails/greens.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chtails {

const char* const series_csv_header =
    "t,H1,M0,E_plus,E_minus,dEplus_pred,c_plus,c_minus,slope_right,slope_left,"
    "supp_left,supp_right,eta_a,eta_b,wsup_u,wsup_ux";

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace

std::string format_series_csv(const ExperimentReport& rep) {
    std::ostringstream os;
    os << series_csv_header << '\n';
    for (const auto& r : rep.rows) {
        const double cols[] = {r.t, r.H1, r.M0, r.E_plus, r.E_minus, r.dEplus_pred,
                               r.c_plus, r.c_minus, r.slope_right, r.slope_left,
                               r.supp_left, r.supp_right, r.eta_a, r.eta_b,
                               r.wsup_u, r.wsup_ux};
        for (std::size_t i = 0; i < std::size(cols); ++i)
            os << (i ? "," : "") << num(cols[i]);
        os << '\n';
    }
    return os.str();
}

std::string format_report_json(const ExperimentReport& rep) {
    nlohmann::json j; // std::map storage: keys come out sorted
    j["experiment"] = rep.name;
    j["partial"] = rep.partial;
    j["error"] = rep.error;
    j["all_pass"] = rep.all_pass();
    j["n_rows"] = rep.rows.size();
    j["t_final"] = rep.trajectory.t_final;
    j["steps"] = rep.trajectory.steps;
    j["environment"]["compiler"] = __VERSION__;

    nlohmann::json cfg = nlohmann::json::object();
    std::istringstream is(print_config(rep.config));
    for (std::string line; std::getline(is, line);) {
        const auto eq = line.find(" = ");
        if (eq != std::string::npos)
            cfg[line.substr(0, eq)] = line.substr(eq + 3);
    }
    j["config"] = cfg;

    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : rep.verdicts) {
        nlohmann::json o;
        o["id"] = v.id;
        o["description"] = v.description;
        o["measured"] = std::isnan(v.measured) ? nlohmann::json() : nlohmann::json(v.measured);
        o["tolerance"] = v.tolerance;
        o["pass"] = v.pass;
        vs.push_back(o);
    }
    j["verdicts"] = vs;
    return j.dump(2) + "\n";
}

std::string format_profile_csv(const ExperimentReport& rep, std::size_t row) {
    if (row >= rep.trajectory.snapshots.size())
        throw std::out_of_range("profile row out of range");
    const Grid1D& g = rep.trajectory.grid;
    Field u{g, rep.trajectory.snapshots[row], "u"};
    Field h = apply_helmholtz(u);
    std::ostringstream os;
    os << "x,u,h\n";
    for (int i = 0; i < g.n; ++i)
        os << num(g.node(i)) << ',' << num(u.values[i]) << ',' << num(h.values[i]) << '\n';
    return os.str();
}

std::vector<std::string> write_outputs(const ExperimentReport& rep, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    if (has_format(rep.config, "csv")) {
        const std::string p = dir + "/series.csv";
        write_text(p, format_series_csv(rep));
        written.push_back(p);
    }
    if (has_format(rep.config, "json")) {
        const std::string p = dir + "/report.json";
        write_text(p, format_report_json(rep));
        written.push_back(p);
    }
    if (has_format(rep.config, "profiles")) {
        for (std::size_t k = 0; k < rep.trajectory.snapshots.size(); ++k) {
            char name[48];
            std::snprintf(name, sizeof name, "/profile_r%04zu.csv", k);
            const std::string p = dir + name;
            write_text(p, format_profile_csv(rep, k));
            written.push_back(p);
        }
    }
    return written;
}

} // namespace chtails
