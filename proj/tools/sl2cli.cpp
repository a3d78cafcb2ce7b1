// Batch front-end: evaluate objects, export tables, run verification suites.
//
//   sl2cli eval xi --t 0,1,2
//   sl2cli eval c-function --side plus --j 1 --mu 0
//   sl2cli eval plancherel --parity even --mu 0,0.5,1
//   sl2cli eval norm --g "2,0,0,0.5"
//   sl2cli table c-table --jmax 4 --mu-max 5 --out table.csv
//   sl2cli table plancherel-table even --mu-max 5
//   sl2cli verify all --seed 42 --out report.json
//
// Exit codes: 0 all checks passed, 1 failed checks, 2 usage/config errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sl2/c_function.hpp"
#include "sl2/config.hpp"
#include "sl2/verify.hpp"
#include "sl2/xi.hpp"

namespace {

using namespace sl2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// RFC-4180 style quoting: quote when the field contains a comma, quote or
// newline; double any embedded quotes.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated list of numbers");
    return out;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

int cmd_eval_xi(const std::string& t_list, const SuiteConfig& cfg, const std::string& out_path) {
    std::ofstream f;
    std::ostream& os = open_output(f, out_path);
    os << "t,xi\n";
    for (double t : parse_list(t_list)) {
        QuadratureScheme s;
        s.k_nodes = std::max(cfg.k_nodes, xi_nodes_for(GroupElement::diag_exp(t)));
        os << csv_field(fmt(t)) << "," << csv_field(fmt(xi(GroupElement::diag_exp(t), s).value))
           << "\n";
    }
    return 0;
}

int cmd_eval_c(const std::string& side_name, int j, const std::string& mu_list,
               const std::string& out_path) {
    const Side side = side_name == "plus" ? Side::upper : Side::lower;
    std::ofstream f;
    std::ostream& os = open_output(f, out_path);
    os << "side,j,mu,re,im\n";
    for (double mu : parse_list(mu_list)) {
        if (c_function_has_pole(j, mu)) {
            os << side_name << "," << j << "," << fmt(mu) << ",pole,pole\n";
            continue;
        }
        const cxd v = c_function(side, j, cxd(mu, 0.0));
        os << side_name << "," << j << "," << fmt(mu) << "," << fmt(v.real()) << ","
           << fmt(v.imag()) << "\n";
    }
    return 0;
}

int cmd_eval_plancherel(const std::string& parity_name, const std::string& mu_list,
                        const std::string& out_path) {
    const Parity parity = parity_name == "even" ? Parity::even : Parity::odd;
    std::ofstream f;
    std::ostream& os = open_output(f, out_path);
    os << "parity,mu,alpha\n";
    for (double mu : parse_list(mu_list)) {
        os << parity_name << "," << fmt(mu) << "," << fmt(plancherel_density(parity, mu)) << "\n";
    }
    return 0;
}

int cmd_eval_norm(const std::string& entries, const std::string& out_path) {
    const std::vector<double> e = parse_list(entries);
    if (e.size() != 4) throw CLI::ValidationError("--g expects four comma-separated entries");
    const GroupElement g(e[0], e[1], e[2], e[3]);
    std::ofstream f;
    std::ostream& os = open_output(f, out_path);
    os << "norm\n" << fmt(group_norm(g)) << "\n";
    return 0;
}

int cmd_table_c(int jmax, double mu_max, double dmu, const std::string& out_path) {
    if (jmax < 0 || !(mu_max > 0.0) || !(dmu > 0.0))
        throw CLI::ValidationError("c-table: need jmax >= 0, mu-max > 0, dmu > 0");
    std::ofstream f;
    std::ostream& os = open_output(f, out_path);
    os << "side,j,mu,re,im,pole\n";
    const MuGrid grid = MuGrid::with_cutoff(dmu, mu_max);
    for (const char* sn : {"plus", "minus"}) {
        const Side side = sn[0] == 'p' ? Side::upper : Side::lower;
        const CFunctionTable t = CFunctionTable::build(side, jmax, grid);
        for (int j = -jmax; j <= jmax; ++j) {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const cxd v = t.at(j, i);
                os << sn << "," << j << "," << fmt(grid.mu(i)) << "," << fmt(v.real()) << ","
                   << fmt(v.imag()) << "," << (t.is_pole(j, i) ? 1 : 0) << "\n";
            }
        }
    }
    return 0;
}

int cmd_table_plancherel(const std::string& parity_name, double mu_max, double dmu,
                         const std::string& out_path) {
    if (!(mu_max > 0.0) || !(dmu > 0.0))
        throw CLI::ValidationError("plancherel-table: need mu-max > 0 and dmu > 0");
    const Parity parity = parity_name == "even" ? Parity::even : Parity::odd;
    std::ofstream f;
    std::ostream& os = open_output(f, out_path);
    os << "parity,mu,alpha\n";
    for (double mu = 0.0; mu <= mu_max + 1e-12; mu += dmu) {
        os << parity_name << "," << fmt(mu) << "," << fmt(plancherel_density(parity, mu)) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg, const std::string& out_path) {
    std::vector<SuiteResult> results;
    if (suite == "all") {
        for (const std::string& name : all_suite_names()) results.push_back(run_suite(name, cfg));
    } else {
        results.push_back(run_suite(suite, cfg));
    }
    bool pass = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult& r : results) {
        pass = pass && r.pass();
        suites.push_back(suite_to_json(r));
    }
    nlohmann::json report{{"config", cfg.to_json()},
                          {"pass", pass},
                          {"seed", cfg.seed},
                          {"suites", suites}};
    std::ofstream f;
    std::ostream& os = open_output(f, out_path);
    os << report.dump(2) << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical harmonic analysis on SL(2,R): evaluation, tables, verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_path;
    unsigned long seed = 42;
    double tolerance_scale = 1.0;
    bool coarse = false;
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--seed", seed, "random seed for sampled checks");
    app.add_option("--tolerance-scale", tolerance_scale, "multiply all tolerances");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_flag("--coarse", coarse, "smaller grids, for quick runs");

    auto* eval = app.add_subcommand("eval", "evaluate an object to CSV");
    std::string eval_object, eval_t = "0,1,2", eval_side = "plus", eval_mu = "0",
                eval_parity = "even", eval_g = "1,0,0,1";
    int eval_j = 0;
    eval->add_option("object", eval_object, "xi | c-function | plancherel | norm")->required();
    eval->add_option("--t", eval_t, "comma-separated t values for xi(a_t)");
    eval->add_option("--side", eval_side, "plus | minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    eval->add_option("--j", eval_j, "K-type index");
    eval->add_option("--mu", eval_mu, "comma-separated spectral parameters");
    eval->add_option("--parity", eval_parity, "even | odd")
        ->check(CLI::IsMember({"even", "odd"}));
    eval->add_option("--g", eval_g, "matrix entries a,b,c,d");

    auto* table = app.add_subcommand("table", "export a full table to CSV");
    std::string table_name, table_parity = "even";
    int table_jmax = 4;
    double table_mu_max = 5.0, table_dmu = 0.05;
    table->add_option("name", table_name, "c-table | plancherel-table")->required();
    table->add_option("parity", table_parity, "even | odd (plancherel-table)")
        ->check(CLI::IsMember({"even", "odd"}));
    table->add_option("--jmax", table_jmax, "largest K-type");
    table->add_option("--mu-max", table_mu_max, "grid cutoff");
    table->add_option("--dmu", table_dmu, "grid step");

    auto* verify = app.add_subcommand("verify", "run a verification suite, emit a JSON report");
    std::string suite;
    verify
        ->add_option("suite", suite,
                     "group-core | frobenius | intertwiner | wave-packet | second-adjoint | all")
        ->required()
        ->check(CLI::IsMember({"group-core", "frobenius", "intertwiner", "wave-packet",
                               "second-adjoint", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SuiteConfig cfg;
        if (!config_path.empty()) cfg = SuiteConfig::from_file(config_path);
        if (app.count("--seed")) cfg.seed = seed;
        if (app.count("--tolerance-scale")) cfg.tolerance_scale = tolerance_scale;
        if (coarse) cfg.coarse = true;

        if (eval->parsed()) {
            if (eval_object == "xi") return cmd_eval_xi(eval_t, cfg, out_path);
            if (eval_object == "c-function")
                return cmd_eval_c(eval_side, eval_j, eval_mu, out_path);
            if (eval_object == "plancherel")
                return cmd_eval_plancherel(eval_parity, eval_mu, out_path);
            if (eval_object == "norm") return cmd_eval_norm(eval_g, out_path);
            std::cerr << "eval: unknown object '" << eval_object << "'\n";
            return 2;
        }
        if (table->parsed()) {
            if (table_name == "c-table")
                return cmd_table_c(table_jmax, table_mu_max, table_dmu, out_path);
            if (table_name == "plancherel-table")
                return cmd_table_plancherel(table_parity, table_mu_max, table_dmu, out_path);
            std::cerr << "table: unknown table '" << table_name << "'\n";
            return 2;
        }
        if (verify->parsed()) return cmd_verify(suite, cfg, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
