#include "splitting/catalog.hpp"
#include "splitting/composer.hpp"
#include "splitting/harness.hpp"
#include "splitting/irrational.hpp"
#include "splitting/notation.hpp"
#include "splitting/residual.hpp"
#include "splitting/search.hpp"
#include "splitting/sigma.hpp"
#include "splitting/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef SPLITTING_GOLDEN_DIR
#define SPLITTING_GOLDEN_DIR "data/golden"
#endif

using namespace splitting;
using nlohmann::json;

namespace {

// Stable process exit codes.
constexpr int exit_ok = 0;
constexpr int exit_failed = 1; // verification failed or golden mismatch
constexpr int exit_input = 2;  // unparsable method, bad flag values

struct Globals {
    bool json = false;
    std::string precision = "double";
    std::uint64_t seed = 1;
};

// Input problems that should map to exit_input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Target target_from(const std::string& s) {
    try {
        return parse_target(s);
    } catch (const std::exception&) {
        throw InputError("unknown target '" + s + "' (expected sum or commutator)");
    }
}

struct Resolved {
    Method method;
    std::string name;
    std::optional<int> claimed_order;
    std::string raw_notation; // digits as written, for extended precision
};

// A catalog id or literal notation.
Resolved resolve(const std::string& text, std::optional<Target> target) {
    if (has_catalog_entry(text)) {
        const auto& e = catalog_entry(text);
        Method m = catalog_method(text);
        if (target) m = m.with_target(*target);
        return {m, text, e.claimed_order, catalog_notation(text)};
    }
    Method m = parse_method(text, target.value_or(Target::Sum));
    return {m, format_method(m), std::nullopt, text};
}

std::string join_labels(const std::vector<Label>& labels) {
    std::string out;
    for (std::size_t k = 0; k < labels.size(); ++k) out += (k ? " " : "") + std::string(label_name(labels[k]));
    return out;
}

std::string fmt(double v, int decimals) { return format_fixed(v, decimals); }

// Largest |sigma^X| over labels that must vanish at `order`, evaluated from the
// digits in 50-digit arithmetic.
HighPrecision extended_residual(const std::string& notation, Target target, int order) {
    const auto units = units_at_precision<HighPrecision>(notation);
    const auto s = sigma_vector<HighPrecision>(units);
    const Label lead = target == Target::Sum ? Label::S1 : Label::S2;
    HighPrecision worst = 0;
    for (Label x : all_labels) {
        if (x == lead || label_order(x) > order) continue;
        worst = std::max(worst, HighPrecision(boost::multiprecision::abs(s[x])));
    }
    return worst;
}

void print_report_text(std::ostream& out, const MethodReport& r) {
    out << (r.target == Target::Sum ? "D = " : "sigma^2 = ") << r.D.to_string() << "\n";
    out << "L = " << r.L.to_string() << "\nI = " << r.I << "\n";
    if (r.target == Target::Sum) out << "L/D = " << fmt(r.L_over_D, 2) << "\n";
    if (r.R) out << "R = " << fmt(*r.R, 6) << "\nR/D = " << fmt(*r.R_over_D, 3) << "\n";
    if (r.Z) out << "Z = " << fmt(*r.Z, 3) << "\n";
    if (r.target == Target::Commutator) out << "rho_12 = " << format_fixed(r.rho[Word::W12], 6) << "\n";
    const auto words = residual_words(std::clamp(r.order.achieved_order, 1, 4));
    for (Word w : words) out << "rho_" << word_name(w) << " = " << format_fixed(r.rho[w], 6) << "\n";
}

int cmd_verify(const Globals& g, const std::string& input, const std::string& target_name, std::optional<int> order) {
    std::optional<Target> target;
    if (!target_name.empty()) target = target_from(target_name);
    const Resolved rs = resolve(input, target);
    const Method& m = rs.method;
    const OrderReport ord = order_of(m);
    const int certified = m.target() == Target::Sum ? certified_order(m) : ord.achieved_order;
    const std::optional<int> claimed = order ? order : rs.claimed_order;
    const bool ok = certified >= claimed.value_or(1);

    std::optional<MethodReport> rep;
    if (ord.achieved_order >= 1) rep = report(m);

    std::optional<HighPrecision> extended;
    if (g.precision == "extended" && ord.achieved_order >= 1)
        extended = extended_residual(rs.raw_notation, m.target(), std::min(ord.achieved_order, 5));

    if (g.json) {
        json j{{"method", rs.name}, {"notation", format_method(m)}, {"order", order_to_json(ord)},
               {"certified_order", certified}, {"verified", ok}};
        if (claimed) j["claimed_order"] = *claimed;
        if (rep) j["report"] = report_to_json(*rep);
        if (extended) j["extended_max_residual"] = extended->str(6, std::ios_base::scientific);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "method: " << rs.name << "\n";
        std::cout << "target: " << to_string(m.target()) << "\n";
        std::cout << "order: " << ord.achieved_order;
        if (ord.at_ceiling) std::cout << " (all known conditions vanish)";
        std::cout << "\n";
        if (certified != ord.achieved_order) std::cout << "certified order: " << certified << " (self-transpose)\n";
        if (!ord.leading_nonzero_labels.empty())
            std::cout << "leading nonzero: " << join_labels(ord.leading_nonzero_labels) << "\n";
        if (ord.reversed_direction) std::cout << "direction: reversed (approximates exp(-[A1, A2]))\n";
        if (rep) print_report_text(std::cout, *rep);
        if (extended) std::cout << "extended max residual: " << extended->str(6, std::ios_base::scientific) << "\n";
        if (claimed) std::cout << (ok ? "verified" : "FAILED") << " at claimed order " << *claimed << "\n";
    }
    return ok ? exit_ok : exit_failed;
}

int cmd_metrics(const Globals& g, const std::vector<std::string>& inputs) {
    Table t{"metrics", "Method metrics", {"method", "order", "D", "L", "I", "L/D", "R/D", "Z"}, {}};
    json arr = json::array();
    for (const auto& in : inputs) {
        const Resolved rs = resolve(in, std::nullopt);
        const MethodReport r = report(rs.method, rs.claimed_order);
        if (g.json) {
            json j = report_to_json(r);
            j["method"] = rs.name;
            arr.push_back(j);
            continue;
        }
        t.rows.push_back({rs.name, std::to_string(r.order.achieved_order), format_fixed(r.D, r.D.is_exact() ? 0 : 4),
                          format_fixed(r.L, r.L.is_exact() ? 0 : 4), std::to_string(r.I), fmt(r.L_over_D, 2),
                          r.R_over_D ? fmt(*r.R_over_D, 1) : "-", r.Z ? fmt(*r.Z, 2) : "-"});
    }
    if (g.json) std::cout << arr.dump(2) << "\n";
    else std::cout << render_text({t});
    return exit_ok;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cmd_tables(bool csv, bool check, const std::string& golden_dir, const std::string& write_dir) {
    const auto tables = all_tables();
    const std::string text = render_text(tables);
    const std::string csv_text = render_csv(tables);
    if (!write_dir.empty()) {
        std::ofstream(write_dir + "/tables.txt", std::ios::binary) << text;
        std::ofstream(write_dir + "/tables.csv", std::ios::binary) << csv_text;
    }
    if (check) {
        bool same = true;
        for (const auto& [file, actual] : {std::pair{std::string("tables.txt"), text}, std::pair{std::string("tables.csv"), csv_text}}) {
            const auto diffs = diff_lines(read_file(golden_dir + "/" + file), actual);
            if (diffs.empty()) continue;
            same = false;
            std::cout << file << " differs from golden:\n";
            for (const auto& d : diffs) std::cout << "  " << d << "\n";
        }
        std::cout << (same ? "tables match golden files\n" : "tables do not match golden files\n");
        return same ? exit_ok : exit_failed;
    }
    std::cout << (csv ? csv_text : text);
    return exit_ok;
}

struct SearchArgs {
    SearchSpec spec;
    std::string target = "sum";
    bool no_dedup = false;
    bool serial = false;
    double time_limit = 0.0;
    std::string out;
};

int cmd_search(const Globals& g, SearchArgs a) {
    a.spec.target = target_from(a.target);
    a.spec.dedup = !a.no_dedup;
    if (a.time_limit > 0) a.spec.time_limit_seconds = a.time_limit;
    try {
        validate(a.spec);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const SearchOutcome res = a.serial ? search_serial(a.spec) : search(a.spec);

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw std::runtime_error("cannot write " + a.out);
    }
    std::ostream& out = a.out.empty() ? std::cout : file;
    for (const auto& r : res.results) out << search_result_to_json(r).dump() << "\n";

    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    std::cerr << res.results.size() << " methods, " << res.multisets << " multisets, " << res.assignments
              << " sign assignments, " << std::fixed << std::setprecision(2) << res.seconds << " s, status "
              << to_string(res.status) << "\n";
    if (!g.json && a.out.empty() && res.results.empty()) std::cerr << "no methods found\n";
    return exit_ok;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw InputError("bad number '" + item + "' in list");
        }
    }
    return out;
}

struct SolveArgs {
    int order = 4;
    bool symmetric = false;
    int variant = 1;
    std::string alphas;
    std::string initial;
    int restarts = 50;
};

int cmd_solve(const Globals& g, const SolveArgs& a) {
    const bool extended = g.precision == "extended";
    auto emit_closed = [&](const Method& m, const std::string& digits) {
        const OrderReport ord = order_of(m);
        const MethodReport r = report(m);
        if (g.json) {
            std::cout << json{{"notation", format_method(m)}, {"order", order_to_json(ord)}, {"report", report_to_json(r)},
                              {"extended_notation", digits}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << (extended ? digits : format_method(m)) << "\n";
            std::cout << "order " << ord.achieved_order << ", Z = " << fmt(r.Z.value_or(0.0), 3) << "\n";
        }
        return ord.achieved_order >= a.order ? exit_ok : exit_failed;
    };
    auto digits_of = [](const std::vector<BasicUnit<HighPrecision>>& units) {
        std::string out;
        for (const auto& u : units) {
            const HighPrecision label = u.alpha * u.a;
            out += "(" + label.str(28, std::ios_base::fixed) + ")" + (u.alpha == -1 ? "^T" : "");
        }
        return out;
    };

    if (a.alphas.empty()) {
        if (a.order == 3) return emit_closed(r3_shortest(), digits_of(r3_shortest_units<HighPrecision>()));
        if (a.order == 4 && a.symmetric) {
            if (a.variant < 1 || a.variant > 4) throw InputError("--variant must be 1..4");
            return emit_closed(r4_symmetric(a.variant), digits_of(r4_symmetric_units<HighPrecision>(a.variant)));
        }
        throw InputError("give --alphas for a numeric solve, or --order 3, or --order 4 --symmetric --variant k");
    }

    std::vector<int> alphas;
    for (double v : parse_list(a.alphas)) {
        if (v != 1.0 && v != -1.0) throw InputError("--alphas entries must be 1 or -1");
        alphas.push_back(static_cast<int>(v));
    }
    // An explicit start is tried once; otherwise seeded random starts until one converges.
    std::mt19937_64 rng(g.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    NewtonResult res;
    const int attempts = a.initial.empty() ? std::max(1, a.restarts) : 1;
    for (int k = 0; k < attempts; ++k) {
        std::vector<double> start;
        if (!a.initial.empty()) start = parse_list(a.initial);
        else
            for (std::size_t j = 0; j < alphas.size(); ++j) start.push_back(dist(rng));
        if (start.size() != alphas.size()) throw InputError("--initial needs one value per alpha");
        res = newton_solve(alphas, start, a.order);
        if (res.status == NewtonStatus::Converged) break;
    }
    if (g.json) {
        json j{{"status", to_string(res.status)}, {"residual", res.residual}, {"iterations", res.iterations}};
        if (res.method) j["notation"] = format_method(*res.method);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status: " << to_string(res.status) << " after " << res.iterations << " iterations, residual "
                  << std::scientific << std::setprecision(3) << res.residual << "\n";
        if (res.method) std::cout << format_method(*res.method) << "\n";
    }
    return res.status == NewtonStatus::Converged ? exit_ok : exit_failed;
}

Schedule parse_schedule(const std::string& s) {
    // "d:b,d:b,..." with d = +1/-1 and b rational.
    Schedule out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError("schedule step '" + item + "' must be direction:scale");
        const std::string d = item.substr(0, colon);
        const Coefficient b = Coefficient::parse(item.substr(colon + 1));
        if (!b.is_exact()) throw InputError("schedule scales must be rational");
        if (d != "1" && d != "+1" && d != "-1") throw InputError("schedule direction must be 1 or -1");
        out.push_back(ScheduleStep{d == "-1" ? -1 : 1, b.exact()});
    }
    return out;
}

struct ComposeArgs {
    std::string base;
    int auto_order = 0;
    bool doubling = false;
    std::string schedule;
    int base_order = 0;
};

int cmd_compose(const Globals& g, const ComposeArgs& a) {
    const Resolved rs = resolve(a.base, Target::Sum);
    Method out = rs.method;
    std::string warning;
    if (a.auto_order > 0) {
        out = auto_compose(rs.method, a.auto_order);
    } else if (a.doubling) {
        out = double_to_even(rs.method, &warning);
    } else if (!a.schedule.empty()) {
        const int o = a.base_order > 0 ? a.base_order : certified_order(rs.method);
        out = raise_order(rs.method, o, parse_schedule(a.schedule));
    } else {
        throw InputError("compose needs --auto, --double or --schedule");
    }
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    const int certified = certified_order(out);
    if (g.json) {
        std::cout << json{{"notation", format_method(out)}, {"units", out.size()}, {"certified_order", certified},
                          {"self_transpose", is_self_transpose(out)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_method(out) << "\n";
        std::cerr << "I = " << out.size() << ", certified order " << certified
                  << (is_self_transpose(out) ? ", self-transpose" : "") << "\n";
    }
    return a.auto_order > 0 && certified < a.auto_order ? exit_failed : exit_ok;
}

struct SimulateArgs {
    std::string method;
    std::string set = "pauli";
    double dt = 0.01;
    long steps = 1000;
    std::string dts;
    std::string out;
};

int cmd_simulate(const SimulateArgs& a) {
    const Resolved rs = resolve(a.method, Target::Sum);
    OperatorSet ops = [&] {
        if (a.set == "pauli") return build_pauli_set();
        if (a.set == "ising4") return build_ising_nnn(4);
        if (a.set == "ising8") return build_ising_nnn(8);
        throw InputError("--set must be pauli, ising4 or ising8");
    }();
    if (a.steps < 1) throw InputError("--steps must be positive");

    std::vector<ErrorSample> rows;
    if (!a.dts.empty()) {
        const auto dts = parse_list(a.dts);
        rows = fixed_steps_sweep(rs.method, ops, dts, a.steps);
    } else {
        rows = trajectory(rs.method, ops, a.dt, a.steps);
    }

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw std::runtime_error("cannot write " + a.out);
    }
    std::ostream& out = a.out.empty() ? std::cout : file;
    out << "method,dt,n,t,E_pauli,E_frob\n" << std::setprecision(10);
    for (const auto& r : rows) {
        out << rs.name << ',' << r.dt << ',' << r.steps << ',' << r.time << ',';
        if (r.pauli) out << *r.pauli;
        out << ',' << r.frobenius << '\n';
    }
    return exit_ok;
}

int cmd_catalog(const Globals& g) {
    if (g.json) {
        json arr = json::array();
        for (const auto& e : catalog()) {
            const Method m = catalog_method(e.id);
            arr.push_back({{"id", e.id}, {"target", to_string(e.target)}, {"order", e.claimed_order},
                           {"notation", format_method(m)}, {"units", method_to_json(m)}, {"note", e.note}});
        }
        std::cout << arr.dump(2) << "\n";
        return exit_ok;
    }
    Table t{"catalog", "Bundled methods", {"id", "target", "order", "I", "notation"}, {}};
    for (const auto& e : catalog()) {
        const Method m = catalog_method(e.id);
        std::string shown(e.notation);
        if (shown.size() > 60) shown = shown.substr(0, 57) + "...";
        t.rows.push_back({std::string(e.id), std::string(to_string(e.target)), std::to_string(e.claimed_order),
                          std::to_string(m.size()), shown});
    }
    std::cout << render_text({t});
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify, search and benchmark splitting methods"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read flags from a TOML/INI file");

    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--precision", g.precision, "arithmetic for irrational coefficients")
        ->check(CLI::IsMember({"double", "extended"}));
    app.add_option("--seed", g.seed, "seed for randomized routines");

    int code = exit_ok;

    std::string verify_input, verify_target;
    std::optional<int> verify_order;
    auto* verify = app.add_subcommand("verify", "order report and metrics for a method or catalog id");
    verify->add_option("method", verify_input, "catalog id or notation")->required();
    verify->add_option("--target", verify_target, "sum or commutator");
    verify->add_option("--order", verify_order, "claimed order to check");
    verify->callback([&] { code = cmd_verify(g, verify_input, verify_target, verify_order); });

    std::vector<std::string> metric_inputs;
    auto* metrics = app.add_subcommand("metrics", "D, L, I, L/D, R/D, Z for one or more methods");
    metrics->add_option("methods", metric_inputs, "catalog ids or notation")->required();
    metrics->callback([&] { code = cmd_metrics(g, metric_inputs); });

    bool tables_csv = false, tables_check = false;
    std::string golden_dir = SPLITTING_GOLDEN_DIR, write_dir;
    auto* tables = app.add_subcommand("tables", "regenerate metric and residual tables");
    tables->add_flag("--csv", tables_csv, "CSV instead of aligned text");
    tables->add_flag("--check", tables_check, "compare against the golden files");
    tables->add_option("--golden", golden_dir, "golden file directory");
    tables->add_option("--write", write_dir, "also write tables.txt and tables.csv here");
    tables->callback([&] { code = cmd_tables(tables_csv, tables_check, golden_dir, write_dir); });

    SearchArgs sa;
    auto* srch = app.add_subcommand("search", "staged integer search");
    srch->add_option("--order", sa.spec.target_order, "target order (2..5)");
    srch->add_option("--units", sa.spec.units, "number of units I");
    srch->add_option("--min-units", sa.spec.min_units, "also search every I from here up");
    srch->add_option("--amax", sa.spec.a_max, "largest |a|");
    srch->add_option("--target", sa.target, "sum or commutator");
    srch->add_option("--max-results", sa.spec.max_results, "stop after this many (0: no cap)");
    srch->add_option("--time-limit", sa.time_limit, "seconds");
    srch->add_flag("--no-dedup", sa.no_dedup, "keep both members of each transpose pair");
    srch->add_flag("--serial", sa.serial, "single-threaded reference driver");
    srch->add_option("--out", sa.out, "JSON lines output file");
    srch->callback([&] { code = cmd_search(g, sa); });

    SolveArgs so;
    auto* solve = app.add_subcommand("solve", "irrational methods: closed forms or Newton");
    solve->add_option("--order", so.order, "target order");
    solve->add_flag("--symmetric", so.symmetric, "six-unit symmetric 4th-order family");
    solve->add_option("--variant", so.variant, "symmetric variant 1..4");
    solve->add_option("--alphas", so.alphas, "comma separated +-1 signs for a Newton solve");
    solve->add_option("--initial", so.initial, "comma separated starting coefficients (default: random from --seed)");
    solve->add_option("--restarts", so.restarts, "random starts to try without --initial");
    solve->callback([&] { code = cmd_solve(g, so); });

    ComposeArgs ca;
    auto* compose = app.add_subcommand("compose", "raise the order of a base method");
    compose->add_option("--base", ca.base, "catalog id or notation")->required();
    compose->add_option("--auto", ca.auto_order, "compose until this certified order");
    compose->add_flag("--double", ca.doubling, "append the transpose");
    compose->add_option("--schedule", ca.schedule, "explicit steps d:b,d:b,...");
    compose->add_option("--base-order", ca.base_order, "order of the base for --schedule");
    compose->callback([&] { code = cmd_compose(g, ca); });

    SimulateArgs si;
    auto* sim = app.add_subcommand("simulate", "dense-matrix error curves");
    sim->add_option("--method", si.method, "catalog id or notation")->required();
    sim->add_option("--set", si.set, "pauli, ising4 or ising8");
    sim->add_option("--dt", si.dt, "step size for a trajectory");
    sim->add_option("--steps", si.steps, "applications (trajectory length, or n for --dts)");
    sim->add_option("--dts", si.dts, "comma separated step sizes, fixed number of steps");
    sim->add_option("--out", si.out, "CSV output file");
    sim->callback([&] { code = cmd_simulate(si); });

    auto* cat = app.add_subcommand("catalog", "list bundled methods");
    cat->callback([&] { code = cmd_catalog(g); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_input;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return code;
}
