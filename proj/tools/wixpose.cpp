// wixpose: order-series calculator for posets built from chains by
// concatenation and the D (handle) operation.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wix/error.hpp"
#include "wix/index.hpp"
#include "wix/io.hpp"
#include "wix/represent.hpp"
#include "wix/term.hpp"
#include "wix/zeta.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

wix::SearchBudget parse_budget(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("budget must be \"UNITS,D\", e.g. \"8,4\"");
    wix::SearchBudget budget;
    try {
        budget.max_units = std::stoi(text.substr(0, comma));
        budget.max_d = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("budget must be \"UNITS,D\", e.g. \"8,4\"");
    }
    if (budget.max_units < 1 || budget.max_d < 0)
        throw std::invalid_argument("budget needs units >= 1 and d >= 0");
    return budget;
}

wix::SearchBudget default_budget() {
    if (const char* env = std::getenv("WIXPOSE_BUDGET")) return parse_budget(env);
    return {};
}

ordered_json series_json(const wix::ChainSeries& f) {
    return ordered_json::parse(wix::series_to_json(f));
}

struct EvalOptions {
    std::vector<std::string> expressions;
    bool json = false;
    int poly_m = -1;
};

void run_eval(const EvalOptions& opts) {
    std::vector<std::string> inputs = opts.expressions;
    if (inputs.empty()) {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty()) inputs.push_back(line);
    }
    if (inputs.empty()) throw std::invalid_argument("no expression given");
    for (const std::string& text : inputs) {
        const wix::Term term = wix::parse_term(text);
        const wix::ChainSeries series = wix::eval_series(term);
        if (opts.json) {
            ordered_json out = series_json(series);
            if (opts.poly_m >= 0) {
                out["poly"]["m"] = opts.poly_m;
                out["poly"]["value"] = wix::order_polynomial_value(series, opts.poly_m).str();
            }
            std::cout << out.dump() << '\n';
        } else {
            std::cout << wix::series_to_text(series) << '\n';
            if (opts.poly_m >= 0)
                std::cout << "poly(" << opts.poly_m
                          << ") = " << wix::order_polynomial_value(series, opts.poly_m).str()
                          << '\n';
        }
    }
}

int run_represent(const std::string& series_text, const wix::SearchBudget& budget) {
    const wix::ChainSeries series = wix::series_from_any(series_text);
    wix::RepresentOptions options;
    options.budget = budget;
    const wix::RepReport report = wix::represent(series, options);
    std::cout << wix::report_to_json(report) << '\n';
    return (report.feasible && !report.witnesses.empty()) ? 0 : 1;
}

void run_enum(int units, int d, bool json, const wix::SearchBudget& budget) {
    if (units > budget.max_units || d > budget.max_d)
        throw wix::budget_error("enum: (units " + std::to_string(units) + ", d " +
                                std::to_string(d) + ") exceeds budget (units " +
                                std::to_string(budget.max_units) + ", d " +
                                std::to_string(budget.max_d) + ")");
    for (const wix::Term& t : wix::enumerate_terms(units, d)) {
        const wix::ChainSeries series = wix::eval_series(t);
        const wix::WixInvariants inv = wix::invariants_from_series(series);
        if (json) {
            ordered_json out;
            out["term"] = wix::print_term(t);
            out["series"] = series_json(series);
            out["invariants"] = {{"i", inv.i}, {"k", inv.k},   {"d", inv.d},
                                 {"m", inv.m}, {"leaf_units", inv.leaf_units}};
            std::cout << out.dump() << '\n';
        } else {
            std::cout << wix::print_term(t) << '\t' << wix::series_to_text(series) << "\ti="
                      << inv.i << " k=" << inv.k << " d=" << inv.d << " m=" << inv.m
                      << " units=" << inv.leaf_units << '\n';
        }
    }
}

void run_index_build(int units, int d, const std::string& path, const wix::SearchBudget& budget) {
    const std::vector<wix::IndexRecord> records = wix::build_index(units, d, budget);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    wix::write_index(out, records);
    if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
    std::cout << "wrote " << records.size() << " records to " << path << '\n';
}

int run_index_query(const std::string& series_text, const std::string& path) {
    const wix::ChainSeries series = wix::series_from_any(series_text);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open index file '" + path + "'");
    const std::vector<wix::IndexRecord> records = wix::read_index(in);
    if (auto record = wix::query_index(records, series)) {
        std::cout << wix::index_record_to_json(*record) << '\n';
        return 0;
    }
    std::cerr << "no record for series " << wix::series_to_text(series) << '\n';
    return 1;
}

void run_zeta(const std::string& expression, const std::string& poset_json, int digits, bool json) {
    if (digits < 1 || digits > 15)
        throw std::invalid_argument("--digits must be between 1 and 15");
    const long double tol = std::pow(10.0L, -digits);

    wix::ZetaNumber number;
    if (!poset_json.empty()) {
        number = wix::poset_zeta_number(wix::poset_from_json(poset_json), tol);
    } else if (!expression.empty()) {
        number = wix::zeta_number_from_series(wix::eval_series(wix::parse_term(expression)), tol);
    } else {
        throw std::invalid_argument("zeta needs an expression or --poset");
    }

    std::ostringstream value;
    value << std::fixed << std::setprecision(digits) << static_cast<double>(number.value);
    std::ostringstream bound;
    bound << std::scientific << std::setprecision(3) << static_cast<double>(number.error_bound);
    if (json) {
        ordered_json out;
        out["value"] = value.str();
        out["error_bound"] = bound.str();
        out["dvector"] = series_json(number.source_dvector);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "value = " << value.str() << '\n'
                  << "error <= " << bound.str() << '\n'
                  << "dvector = " << wix::series_to_text(number.source_dvector) << '\n';
    }
}

void run_export_dot(const std::string& expression, const std::string& path) {
    const wix::Poset poset = wix::eval_poset(wix::parse_term(expression));
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << wix::poset_to_dot(poset);
    if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

void run_count(const std::string& expression, const std::string& poset_json, int m) {
    wix::Poset poset = poset_json.empty() ? wix::eval_poset(wix::parse_term(expression))
                                          : wix::poset_from_json(poset_json);
    std::cout << "strict = " << wix::count_strict_maps(poset, m).str() << '\n'
              << "nonstrict = " << wix::count_nonstrict_maps(poset, m).str() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order series of chain-generated posets: evaluation, representability, zeta numbers"};
    app.require_subcommand(1);

    std::string budget_text;

    EvalOptions eval_opts;
    CLI::App* eval = app.add_subcommand("eval", "evaluate expressions to chain-basis series");
    eval->add_option("expr", eval_opts.expressions, "expressions (stdin lines when omitted)");
    eval->add_flag("--json", eval_opts.json, "emit series JSON");
    eval->add_option("--poly", eval_opts.poly_m, "also print the order polynomial at M")
        ->check(CLI::NonNegativeNumber);

    std::string represent_series;
    CLI::App* rep = app.add_subcommand("represent", "find all posets with the given order series");
    rep->add_option("series", represent_series, "series, e.g. \"z3+2*z4\" or JSON")->required();
    rep->add_option("--budget", budget_text, "search budget \"UNITS,D\" (default 8,4)");

    int enum_units = 0, enum_d = 0;
    bool enum_json = false;
    CLI::App* enm = app.add_subcommand("enum", "list normal-form terms with series and invariants");
    enm->add_option("units", enum_units, "unit leaf count")->required();
    enm->add_option("d", enum_d, "D count")->required();
    enm->add_flag("--json", enum_json, "one JSON object per line");
    enm->add_option("--budget", budget_text, "budget \"UNITS,D\"");

    CLI::App* index = app.add_subcommand("index", "series-to-terms index");
    index->require_subcommand(1);
    int index_units = 0, index_d = 0;
    std::string index_file = "wixpose-index.jsonl";
    CLI::App* index_build = index->add_subcommand("build", "group all terms up to a size by series");
    index_build->add_option("--units", index_units, "max unit leaves")->required();
    index_build->add_option("--d", index_d, "max D count")->required();
    index_build->add_option("--file", index_file, "index path (default wixpose-index.jsonl)");
    index_build->add_option("--budget", budget_text, "budget \"UNITS,D\"");
    std::string query_series;
    CLI::App* index_query = index->add_subcommand("query", "look a series up in the index");
    index_query->add_option("series", query_series, "series text or JSON")->required();
    index_query->add_option("--file", index_file, "index path (default wixpose-index.jsonl)");

    std::string zeta_expr, zeta_poset;
    int zeta_digits = 12;
    bool zeta_json = false;
    CLI::App* zeta = app.add_subcommand("zeta", "certified zeta-value combination of a poset");
    zeta->add_option("expr", zeta_expr, "expression");
    zeta->add_option("--poset", zeta_poset, "poset JSON instead of an expression");
    zeta->add_option("--digits", zeta_digits, "decimal digits (default 12)");
    zeta->add_flag("--json", zeta_json, "emit JSON");

    std::string dot_expr, dot_path;
    CLI::App* dot = app.add_subcommand("export-dot", "write the Hasse diagram as DOT");
    dot->add_option("expr", dot_expr, "expression")->required();
    dot->add_option("path", dot_path, "output file")->required();

    std::string count_expr, count_poset;
    int count_m = 0;
    CLI::App* count = app.add_subcommand("count", "brute-force order-polynomial values");
    count->add_option("expr", count_expr, "expression");
    count->add_option("m", count_m, "chain length m")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--poset", count_poset, "poset JSON instead of an expression");

    int exit_code = 0;
    try {
        app.parse(argc, argv);

        wix::SearchBudget budget = budget_text.empty() ? default_budget() : parse_budget(budget_text);

        if (eval->parsed()) run_eval(eval_opts);
        if (rep->parsed()) exit_code = run_represent(represent_series, budget);
        if (enm->parsed()) run_enum(enum_units, enum_d, enum_json, budget);
        if (index_build->parsed()) run_index_build(index_units, index_d, index_file, budget);
        if (index_query->parsed()) exit_code = run_index_query(query_series, index_file);
        if (zeta->parsed()) run_zeta(zeta_expr, zeta_poset, zeta_digits, zeta_json);
        if (dot->parsed()) run_export_dot(dot_expr, dot_path);
        if (count->parsed()) run_count(count_expr, count_poset, count_m);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const wix::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const wix::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
