#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/formulas.hpp"
#include "cubic/generators.hpp"
#include "cubic/graph.hpp"
#include "cubic/hc_count.hpp"
#include "cubic/io.hpp"
#include "cubic/transfer.hpp"

namespace {

using cubic::BigInt;
using cubic::Graph;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cubic::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Edge lists are plain text; planar_code always contains NUL list
// terminators. That plus the ">>" header prefix decides the format.
std::vector<Graph> load_graphs(const std::string& path) {
    std::string data = slurp(path);
    bool planar = data.rfind(">>", 0) == 0 || data.find('\0') != std::string::npos;
    std::istringstream s(data);
    if (planar) return cubic::read_planar_code(s);
    return {cubic::read_edge_list(s)};
}

void write_graph(const Graph& g, const std::string& out_path) {
    if (out_path.empty()) {
        cubic::write_edge_list(g, std::cout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw cubic::ParseError("cannot open " + out_path);
    cubic::write_edge_list(g, out);
}

Graph build_family(const std::string& family, const std::vector<int>& params) {
    if (params.size() != 2)
        throw cubic::BadParameters("--params needs exactly two comma-separated integers");
    if (family == "petersen") return cubic::generalized_petersen(params[0], params[1]);
    if (family == "rl") return cubic::ring_of_ladders(params[0], params[1]);
    if (family == "nanotube") return cubic::nanotube(params[0], params[1]).graph;
    throw cubic::BadParameters("unknown family " + family);
}

std::string poly_to_string(const std::vector<BigInt>& p) {
    std::string s;
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
        const BigInt& c = p[d];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        bool show_coeff = a != 1 || d == 0;
        if (show_coeff) s += a.str();
        if (d > 0) {
            if (show_coeff) s += "*";
            s += "x";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

void print_system(const cubic::TransferSystem& sys) {
    std::cout << (sys.reduced ? "orbit representatives" : "states") << " (" << sys.index.size()
              << "):\n";
    for (std::size_t i = 0; i < sys.index.size(); ++i) {
        std::cout << "  [" << i << "] " << sys.index[i].to_string();
        if (sys.reduced) std::cout << "  orbit size " << sys.orbit_sizes[i];
        std::cout << '\n';
    }
    std::cout << "M:\n";
    for (int i = 0; i < sys.M.n; ++i) {
        std::cout << " ";
        for (int j = 0; j < sys.M.n; ++j) std::cout << ' ' << sys.M.at(i, j);
        std::cout << '\n';
    }
    std::cout << "v_s:";
    for (const BigInt& x : sys.v_s) std::cout << ' ' << x;
    std::cout << "\nv_f:";
    for (const BigInt& x : sys.v_f) std::cout << ' ' << x;
    std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamilton cycle counting for cubic planar graph families"};
    app.require_subcommand(1);

    std::string gen_family, gen_out;
    std::vector<int> gen_params;
    CLI::App* gen = app.add_subcommand("gen", "generate a family member as an edge list");
    gen->add_option("--family", gen_family, "petersen | rl | nanotube")
        ->required()
        ->check(CLI::IsMember({"petersen", "rl", "nanotube"}));
    gen->add_option("--params", gen_params, "two comma-separated integers")
        ->required()
        ->delimiter(',');
    gen->add_option("--out", gen_out, "output file (default stdout)");

    std::string count_file, count_family;
    std::vector<int> count_params;
    bool count_per_edge = false, count_by_type = false;
    double count_budget = 0;
    CLI::App* count = app.add_subcommand("count", "count Hamilton cycles exactly");
    count->add_option("file", count_file, "edge list or planar_code input");
    count->add_option("--family", count_family, "petersen | rl | nanotube")
        ->check(CLI::IsMember({"petersen", "rl", "nanotube"}));
    count->add_option("--params", count_params, "two comma-separated integers")->delimiter(',');
    CLI::Option* per_edge_opt =
        count->add_flag("--per-edge", count_per_edge, "also print per-edge cycle counts");
    count->add_flag("--by-type", count_by_type, "bucket by cut crossings (nanotube only)")
        ->excludes(per_edge_opt);
    CLI::Option* count_budget_opt =
        count->add_option("--budget", count_budget, "time budget in seconds");

    std::string formula_name;
    std::vector<int> formula_args;
    CLI::App* formula = app.add_subcommand("formula", "closed-form Hamilton cycle counts");
    formula->add_option("name", formula_name, "petersen | rl | nanotube5")
        ->required()
        ->check(CLI::IsMember({"petersen", "rl", "nanotube5"}));
    formula->add_option("args", formula_args, "petersen m | rl m k | nanotube5 k");

    int tm_width = 0, tm_pairs = 0;
    std::uint64_t tm_length = 0;
    bool tm_show = false, tm_full = false;
    CLI::App* tm = app.add_subcommand("tm", "transfer-matrix count for one crossing type");
    tm->add_option("--width", tm_width, "tube width")->required();
    tm->add_option("--pairs", tm_pairs, "crossing pairs per cut")->required();
    tm->add_option("--length", tm_length, "tube length")->required();
    tm->add_flag("--show-system", tm_show, "print states, matrix and boundary vectors");
    tm->add_flag("--full", tm_full, "use the unreduced system over all partitions");

    int asym_width = 0, asym_pairs = 0;
    CLI::App* asym = app.add_subcommand("asym", "growth constants of one crossing type");
    asym->add_option("--width", asym_width, "tube width")->required();
    asym->add_option("--pairs", asym_pairs, "crossing pairs per cut")->required();

    std::string survey_file, survey_csv;
    int survey_cc = 0;
    double survey_budget = 0;
    CLI::App* sv = app.add_subcommand("survey", "aggregate counts over a graph corpus");
    sv->add_option("file", survey_file, "edge list or planar_code corpus")->required();
    CLI::Option* survey_cc_opt =
        sv->add_option("--cc", survey_cc, "keep only cyclically K-edge-connected graphs");
    CLI::Option* survey_budget_opt =
        sv->add_option("--budget", survey_budget, "per-graph budget in seconds");
    sv->add_option("--csv", survey_csv, "also write the table as CSV to this file");

    std::string cc_file;
    int cc_k = 0;
    CLI::App* cc = app.add_subcommand("check-cc", "test cyclic k-edge-connectivity");
    cc->add_option("file", cc_file, "edge list or planar_code input")->required();
    cc->add_option("--k", cc_k, "connectivity threshold (2..6)")->required();

    std::string fix_name, fix_out;
    CLI::App* fix = app.add_subcommand("fixture", "emit a named reference graph");
    fix->add_option("name", fix_name, "base38 | cc5_64_a | cc5_64_b | fullerene56")->required();
    fix->add_option("--out", fix_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            write_graph(build_family(gen_family, gen_params), gen_out);
        } else if (count->parsed()) {
            std::optional<double> budget;
            if (count_budget_opt->count() > 0) budget = count_budget;
            if (count_by_type) {
                if (count_family != "nanotube" || count_params.size() != 2)
                    throw cubic::BadParameters("--by-type needs --family nanotube --params w,k");
                cubic::LayeredGraph lg = cubic::nanotube(count_params[0], count_params[1]);
                std::uint64_t total = 0;
                for (auto [crossings, cnt] : cubic::count_by_crossing_type(lg, budget)) {
                    std::cout << "crossings " << crossings << ": " << cnt << '\n';
                    total += cnt;
                }
                std::cout << "total " << total << '\n';
            } else {
                std::vector<Graph> graphs;
                if (!count_file.empty()) {
                    if (!count_family.empty())
                        throw cubic::BadParameters("give either a file or --family, not both");
                    graphs = load_graphs(count_file);
                } else if (!count_family.empty()) {
                    graphs.push_back(build_family(count_family, count_params));
                } else {
                    throw cubic::BadParameters("count needs a file or --family/--params");
                }
                cubic::CountOptions copts;
                copts.per_edge = count_per_edge;
                copts.budget_seconds = budget;
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    cubic::HamiltonCount res = cubic::count_hamilton_cycles(graphs[i], copts);
                    if (graphs.size() > 1)
                        std::cout << "graph " << i << ": " << res.total << '\n';
                    else
                        std::cout << res.total << '\n';
                    if (res.per_edge)
                        for (const auto& [e, c] : *res.per_edge)
                            std::cout << "edge " << e.first << ' ' << e.second << ' ' << c << '\n';
                }
            }
        } else if (formula->parsed()) {
            if (formula_name == "petersen") {
                if (formula_args.size() != 1)
                    throw cubic::BadParameters("formula petersen needs one argument: m");
                std::cout << cubic::schwenk_count(formula_args[0]) << '\n';
            } else if (formula_name == "rl") {
                if (formula_args.size() != 2)
                    throw cubic::BadParameters("formula rl needs two arguments: m k");
                std::cout << cubic::rl_count(formula_args[0], formula_args[1]) << '\n';
            } else {
                if (formula_args.size() != 1)
                    throw cubic::BadParameters("formula nanotube5 needs one argument: k");
                std::cout << cubic::n5_count(formula_args[0]) << '\n';
            }
        } else if (tm->parsed()) {
            cubic::TransferSystem sys = cubic::build_transfer_system(tm_width, tm_pairs, !tm_full);
            if (tm_show) print_system(sys);
            std::cout << cubic::system_count(sys, tm_length) << '\n';
        } else if (asym->parsed()) {
            cubic::GrowthConstants gc = cubic::growth_constants(asym_width, asym_pairs);
            std::cout << "char poly: " << poly_to_string(gc.char_poly) << '\n'
                      << std::setprecision(12) << "dominant root: " << gc.dominant_root << '\n'
                      << "period: " << gc.period << '\n'
                      << "step factor: " << gc.step_factor << '\n'
                      << std::setprecision(6) << "prefactor: " << gc.prefactor_estimate
                      << " (sampled at length " << gc.prefactor_k << ")\n";
        } else if (sv->parsed()) {
            std::vector<Graph> corpus = load_graphs(survey_file);
            cubic::SurveyOptions sopts;
            if (survey_cc_opt->count() > 0) sopts.cc_filter = survey_cc;
            if (survey_budget_opt->count() > 0) sopts.budget_seconds = survey_budget;
            std::vector<cubic::SurveyRow> rows = cubic::survey(corpus, sopts);
            std::cout << cubic::survey_table(rows);
            if (!survey_csv.empty()) {
                std::ofstream out(survey_csv);
                if (!out) throw cubic::ParseError("cannot open " + survey_csv);
                cubic::write_survey_csv(rows, out);
            }
        } else if (cc->parsed()) {
            std::vector<Graph> graphs = load_graphs(cc_file);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                bool ok = cubic::is_cyclically_k_edge_connected(graphs[i], cc_k);
                if (graphs.size() > 1) std::cout << "graph " << i << ": ";
                std::cout << (ok ? "true" : "false") << '\n';
            }
        } else if (fix->parsed()) {
            write_graph(cubic::fixture(fix_name), fix_out);
        }
        return 0;
    } catch (const cubic::Timeout& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return 2;
    } catch (const cubic::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
