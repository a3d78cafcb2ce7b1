#pragma once

// Suite configuration: flat key=value text with [section] headers, no
// external parser.  Unknown sections or keys are rejected.  Command-line
// flags override file values; the effective config is embedded in every
// report for reproducibility.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace sl2 {

struct SuiteConfig {
    // [quadrature]
    int k_nodes = 256;
    int t_nodes = 129;
    double t_radius = 12.0;
    int x_nodes = 129;
    double x_radius = 12.0;
    // [grid]
    int jmax = 16;
    double dmu = 0.05;
    double mu_max = 20.0;
    double u_extent = 14.0;
    int n_u = 561;
    // [run]
    unsigned long seed = 42;
    double tolerance_scale = 1.0;
    bool coarse = false;

    static SuiteConfig from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("config: cannot open " + path);
        SuiteConfig c;
        c.parse(in);
        return c;
    }

    void parse(std::istream& in) {
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[' && line.back() == ']') {
                section = trim(line.substr(1, line.size() - 2));
                if (section != "quadrature" && section != "grid" && section != "run")
                    throw std::runtime_error("config: unknown section [" + section + "]");
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("config: expected key=value at line " +
                                         std::to_string(lineno));
            const std::string key = trim(line.substr(0, eq));
            const std::string val = trim(line.substr(eq + 1));
            set(section, key, val);
        }
    }

    void set(const std::string& section, const std::string& key, const std::string& val) {
        const std::string full = section.empty() ? key : section + "." + key;
        if (full == "quadrature.k_nodes") k_nodes = to_int(val);
        else if (full == "quadrature.t_nodes") t_nodes = to_int(val);
        else if (full == "quadrature.t_radius") t_radius = to_double(val);
        else if (full == "quadrature.x_nodes") x_nodes = to_int(val);
        else if (full == "quadrature.x_radius") x_radius = to_double(val);
        else if (full == "grid.jmax") jmax = to_int(val);
        else if (full == "grid.dmu") dmu = to_double(val);
        else if (full == "grid.mu_max") mu_max = to_double(val);
        else if (full == "grid.u_extent") u_extent = to_double(val);
        else if (full == "grid.n_u") n_u = to_int(val);
        else if (full == "run.seed") seed = static_cast<unsigned long>(to_int(val));
        else if (full == "run.tolerance_scale") tolerance_scale = to_double(val);
        else if (full == "run.coarse") coarse = (val == "1" || val == "true");
        else throw std::runtime_error("config: unknown key '" + full + "'");
    }

    nlohmann::json to_json() const {
        return nlohmann::json{
            {"quadrature",
             {{"k_nodes", k_nodes},
              {"t_nodes", t_nodes},
              {"t_radius", t_radius},
              {"x_nodes", x_nodes},
              {"x_radius", x_radius}}},
            {"grid",
             {{"jmax", jmax},
              {"dmu", dmu},
              {"mu_max", mu_max},
              {"u_extent", u_extent},
              {"n_u", n_u}}},
            {"run",
             {{"seed", seed}, {"tolerance_scale", tolerance_scale}, {"coarse", coarse}}}};
    }

  private:
    static std::string trim(const std::string& s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return "";
        const auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    }
    static int to_int(const std::string& s) {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::runtime_error("config: bad integer '" + s + "'");
        return v;
    }
    static double to_double(const std::string& s) {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::runtime_error("config: bad number '" + s + "'");
        return v;
    }
};

}  // namespace sl2
