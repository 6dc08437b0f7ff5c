// Command-line front end: eigenvalues, chi images, strips, verification suites
// and eigenvalue tables, printed as JSON or CSV with exact rational strings.

#include "capelli/central.hpp"
#include "capelli/partitions.hpp"
#include "capelli/shifted.hpp"
#include "capelli/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace capelli;

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct Limits {
    int max_cells = 12;
    int max_n = 6;
    bool force = false;
};

Limits read_limits(bool force) {
    Limits l;
    l.force = force;
    if (const char* env = std::getenv("CAPELLI_MAX_CELLS")) {
        try {
            l.max_cells = std::stoi(env);
        } catch (const std::exception&) {
            throw Error(std::string("CAPELLI_MAX_CELLS is not an integer: '") + env + "'");
        }
    }
    return l;
}

void guard(const Limits& l, int cells, int n) {
    if (l.force) return;
    if (cells > l.max_cells)
        throw Error("size guard: " + std::to_string(cells) + " cells exceeds " + std::to_string(l.max_cells) +
                    " (use --force or CAPELLI_MAX_CELLS)");
    if (n > l.max_n) throw Error("size guard: n=" + std::to_string(n) + " exceeds " + std::to_string(l.max_n) + " (use --force)");
}

ordered_json polynomial_json(const Polynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [ex, c] : p.terms()) terms.push_back({{"exponents", ex}, {"coeff", to_string(c)}});
    return terms;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int run_eig(const std::string& spec_text, const std::string& mu_text, int n, const std::string& format, const Limits& lim) {
    const auto spec = CentralSpec::parse(spec_text);
    const auto mu = Partition::parse(mu_text);
    guard(lim, std::max(mu.weight(), spec.degree()), n);
    if (mu.first() > n) throw Error("mu_1 must not exceed n");
    const auto routes = eigenvalue_routes(spec, mu, n);
    const Rational value = routes.at("action");
    bool agree = true;
    for (const auto& [name, v] : routes) agree = agree && v == value;
    if (format == "csv") {
        std::cout << "route,value\n";
        for (const auto& [name, v] : routes) std::cout << name << "," << to_string(v) << "\n";
    } else {
        ordered_json j;
        j["spec"] = spec.to_string();
        j["mu"] = mu.to_string();
        j["n"] = n;
        j["value"] = to_string(value);
        ordered_json r = ordered_json::object();
        for (const auto& [name, v] : routes) r[name] = to_string(v);
        j["routes"] = r;
        j["agree"] = agree;
        std::cout << j.dump() << "\n";
    }
    if (!agree) {
        std::cerr << "error: eigenvalue routes disagree\n";
        return exit_failure;
    }
    return 0;
}

int run_chi(const std::string& spec_text, int n, const std::string& format, const Limits& lim) {
    const auto spec = CentralSpec::parse(spec_text);
    guard(lim, spec.degree() + 2, n);
    const auto res = chi_with_certificate(spec, n);
    if (format == "csv") {
        std::cout << "exponents,coeff\n";
        for (const auto& [ex, c] : res.polynomial.terms()) {
            std::string e;
            for (std::size_t i = 0; i < ex.size(); ++i) e += (i ? " " : "") + std::to_string(ex[i]);
            std::cout << e << "," << to_string(c) << "\n";
        }
        return 0;
    }
    ordered_json j;
    j["spec"] = spec.to_string();
    j["n"] = n;
    j["polynomial"] = res.polynomial.to_string(variable_names(n));
    j["terms"] = polynomial_json(res.polynomial);
    j["nodes"] = res.nodes.size();
    j["held_out"] = res.held_out.size();
    j["shifted_symmetric"] = is_shifted_symmetric(res.polynomial);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_strips(const std::string& mu_text, int k, const std::string& kind, const std::string& format, const Limits& lim) {
    const auto mu = Partition::parse(mu_text);
    guard(lim, mu.weight(), 0);
    if (k < 0) throw Error("k must be nonnegative");
    const auto strips = kind == "vertical" ? vertical_strips(mu, k) : horizontal_strips(mu, k);
    if (format == "csv") {
        std::cout << "cells,annotation\n";
        for (const auto& s : strips) {
            std::string cells;
            for (const auto& [r, c] : s.cells) cells += (cells.empty() ? "" : " ") + std::to_string(r + 1) + ":" + std::to_string(c + 1);
            std::cout << cells << "," << s.annotation.get_str() << "\n";
        }
        return 0;
    }
    ordered_json list = ordered_json::array();
    for (const auto& s : strips) {
        ordered_json cells = ordered_json::array();
        for (const auto& [r, c] : s.cells) cells.push_back({r + 1, c + 1});
        list.push_back({{"cells", cells}, {"annotation", s.annotation.get_str()}});
    }
    ordered_json j;
    j["mu"] = mu.to_string();
    j["k"] = k;
    j["kind"] = kind;
    j["count"] = strips.size();
    j["sum"] = strip_sum(strips).get_str();
    j["strips"] = list;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, std::optional<int> n, std::optional<int> w, const std::string& format,
               const Limits& lim) {
    guard(lim, w.value_or(0), n.value_or(0));
    std::vector<std::string> suites;
    if (suite == "all") suites = verify::suite_names();
    else suites.push_back(suite);
    bool all_passed = true;
    ordered_json reports = ordered_json::array();
    if (format == "csv") std::cout << "suite,check,cases,failures,passed\n";
    for (const auto& name : suites) {
        const auto rep = verify::run_suite(name, verify::SuiteOptions{n, w});
        all_passed = all_passed && rep.passed();
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
            if (format == "csv")
                std::cout << name << "," << csv_field(c.name) << "," << c.cases << "," << c.failures << ","
                          << (c.passed() ? "true" : "false") << "\n";
            ordered_json cj{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}};
            if (!c.counterexamples.empty()) cj["counterexamples"] = c.counterexamples;
            if (!c.note.empty()) cj["note"] = c.note;
            checks.push_back(cj);
        }
        reports.push_back({{"suite", name}, {"passed", rep.passed()}, {"checks", checks}});
    }
    if (format != "csv") {
        if (reports.size() == 1) std::cout << reports.front().dump(2) << "\n";
        else std::cout << ordered_json{{"passed", all_passed}, {"suites", reports}}.dump(2) << "\n";
    }
    return all_passed ? 0 : exit_failure;
}

int run_table(const std::string& spec_text, int n, int max_weight, const std::string& format, const Limits& lim) {
    const auto spec = CentralSpec::parse(spec_text);
    guard(lim, max_weight, n);
    spec.validate(n);
    bool agree = true;
    ordered_json rows = ordered_json::array();
    if (format == "csv") std::cout << "mu,value,closed\n";
    for (const auto& mu : partitions_up_to(max_weight, n)) {
        const Rational v = eigenvalue_action(spec, mu, n);
        std::optional<Rational> closed;
        try {
            closed = eigenvalue_closed(spec, mu, n);
        } catch (const NoClosedForm&) {
        }
        if (closed && *closed != v) agree = false;
        const std::string c = closed ? to_string(*closed) : "";
        if (format == "csv") std::cout << csv_field(mu.to_string()) << "," << to_string(v) << "," << c << "\n";
        else {
            ordered_json row{{"mu", mu.to_string()}, {"value", to_string(v)}};
            if (closed) row["closed"] = c;
            rows.push_back(row);
        }
    }
    if (format != "csv")
        std::cout << ordered_json{{"spec", spec.to_string()}, {"n", n}, {"rows", rows}, {"agree", agree}}.dump() << "\n";
    if (!agree) {
        std::cerr << "error: action and closed formula disagree\n";
        return exit_failure;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Central elements of U(gl(n)) via virtual variables: eigenvalues, chi images, verification"};
    app.require_subcommand(1);
    std::string format = "json";
    bool force = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--force", force, "Bypass the size guards");

    std::string spec, mu, suite = "all", kind = "horizontal";
    int n = 0, k = 0, max_weight = 4;
    std::optional<int> opt_n, opt_w;

    auto* eig = app.add_subcommand("eig", "Eigenvalue of a central element on the highest weight vector of mu");
    eig->add_option("--spec", spec, "Central spec, e.g. H:2, S:2,1, H:2*I:1")->required();
    eig->add_option("--mu", mu, "Partition, e.g. 3,2 (empty for the trivial module)")->required()->expected(0, 1);
    eig->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);

    auto* chi_cmd = app.add_subcommand("chi", "Shifted symmetric image chi_n of a central element");
    chi_cmd->add_option("--spec", spec, "Central spec")->required();
    chi_cmd->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);

    auto* strips = app.add_subcommand("strips", "Horizontal or vertical k-strips of mu with annotations");
    strips->add_option("--mu", mu, "Partition")->required()->expected(0, 1);
    strips->add_option("--k", k, "Number of cells")->required();
    strips->add_option("--kind", kind, "Strip kind")->check(CLI::IsMember({"horizontal", "vertical"}));

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", suite, "Suite name or 'all'");
    ver->add_option("--n", opt_n, "Dimension bound")->check(CLI::PositiveNumber);
    ver->add_option("--max-weight", opt_w, "Weight bound")->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "Eigenvalue table over all mu with mu_1 <= n and |mu| <= max-weight");
    table->add_option("--spec", spec, "Central spec")->required();
    table->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
    table->add_option("--max-weight", max_weight, "Weight bound")->check(CLI::NonNegativeNumber);

    for (auto* sub : {eig, chi_cmd, strips, ver, table}) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--force", force, "Bypass the size guards");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        const Limits lim = read_limits(force);
        if (*eig) return run_eig(spec, mu, n, format, lim);
        if (*chi_cmd) return run_chi(spec, n, format, lim);
        if (*strips) return run_strips(mu, k, kind, format, lim);
        if (*ver) {
            if (suite != "all") {
                const auto& names = verify::suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end()) throw Error("unknown suite '" + suite + "'");
            }
            return run_verify(suite, opt_n, opt_w, format, lim);
        }
        if (*table) return run_table(spec, n, max_weight, format, lim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
