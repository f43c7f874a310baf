#include "majcol/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "majcol/digraph.hpp"
#include "majcol/lpbound.hpp"
#include "majcol/solver.hpp"
#include "majcol/spectral.hpp"
#include "majcol/verify.hpp"

namespace majcol {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_solver = 3;
constexpr int exit_budget = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

Fraction parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Fraction(std::stoll(text), 1);
        return Fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("bad fraction '" + text + "'");
    }
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("bad fraction '" + text + "'");
    }
}

json violations_json(const std::vector<Violation>& violations) {
    json arr = json::array();
    for (const auto& v : violations)
        arr.push_back({{"vertex", v.vertex},
                       {"same_colour_out", v.same_colour_out},
                       {"out_degree", v.out_degree},
                       {"allowed", v.allowed}});
    return arr;
}

double max_monochrome_fraction(const Digraph& d, const Colouring& c) {
    double worst = 0.0;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const int deg = d.out_degree(v);
        if (deg == 0) continue;
        worst = std::max(worst, static_cast<double>(monochrome_out_count(d, c, v)) / deg);
    }
    return worst;
}

int colours_used(const Colouring& c) {
    std::vector<int> seen = c.colour;
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
}

struct Args {
    // generate
    std::string gen_kind;
    int q = 5;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    // shared I/O
    std::string input;
    std::string output;
    std::string colour_file;
    std::string lists_file;
    bool as_json = false;
    // colour / verify / exact
    std::string colour_mode;
    int k = 2;
    int t = 0;
    std::string capacities;
    long long num = 0, den = 0;
    int max_colours = 0;
    long long budget = 100'000'000;
    // experiment
    int trials = 100;
    bool min_outdeg_report = false;
    // lp
    int lo = 1, hi = 1023;
    std::string tail = "1/4";
    // solver knobs
    double eps = 1e-9;
    double tol = 1e-12;
    std::optional<std::uint64_t> init_seed;
};

int cmd_generate(const Args& a, std::ostream& out) {
    Digraph d;
    if (a.gen_kind == "regular")
        d = regular_tournament(a.q);
    else if (a.gen_kind == "tournament")
        d = random_tournament(a.n, a.seed);
    else
        d = random_digraph(a.n, a.p, a.seed);
    spill(a.output, write_edge_list(d), out);
    return exit_ok;
}

int cmd_colour(const Args& a, std::ostream& out, std::ostream& err) {
    const Digraph d = read_edge_list(slurp(a.input));
    SearchOptions opts;
    opts.eps = a.eps;
    opts.tol = a.tol;
    opts.init_seed = a.init_seed;

    Colouring colouring;
    json summary;
    if (a.colour_mode == "partition") {
        const int t = a.t > 0 ? a.t : 2 * a.k;
        if (!a.capacities.empty()) {
            std::vector<Fraction> caps;
            std::stringstream ss(a.capacities);
            std::string item;
            while (std::getline(ss, item, ',')) caps.push_back(parse_fraction(item));
            colouring = partition_colouring(d, t, caps, opts);
        } else {
            colouring = partition_colouring(d, t, opts);
        }
        summary["mode"] = "partition";
        summary["t"] = t;
        if (a.t == 0) summary["k"] = a.k;
    } else {
        const ListAssignment lists = read_lists(slurp(a.lists_file), d.vertex_count());
        colouring = list_colouring(d, lists, opts);
        summary["mode"] = "list";
        summary["list_size"] = lists.list_size;
    }

    spill(a.output, write_colouring(colouring), out);
    summary["n"] = d.vertex_count();
    summary["arcs"] = d.arc_count();
    summary["palette_size"] = colouring.palette_size;
    summary["colours_used"] = colours_used(colouring);
    summary["max_monochrome_fraction"] = max_monochrome_fraction(d, colouring);
    summary["verified"] = true;  // solver postcondition
    if (a.as_json)
        err << summary.dump(2) << '\n';
    else
        err << "PASS palette=" << colouring.palette_size
            << " used=" << summary["colours_used"]
            << " max_monochrome_fraction=" << summary["max_monochrome_fraction"] << '\n';
    return exit_ok;
}

int cmd_verify(const Args& a, std::ostream& out) {
    const Digraph d = read_edge_list(slurp(a.input));
    const Colouring c = read_colouring(slurp(a.colour_file), d.vertex_count());
    std::vector<Violation> violations;
    long long num = a.num, den = a.den;
    if (num == 0) {
        num = 1;
        den = a.k;
    }
    violations = check_fraction(d, c, num, den);

    if (a.as_json) {
        json j;
        j["threshold"] = std::to_string(num) + "/" + std::to_string(den);
        j["verdict"] = violations.empty() ? "PASS" : "FAIL";
        j["violations"] = violations_json(violations);
        out << j.dump(2) << '\n';
    } else if (violations.empty()) {
        out << "PASS\n";
    } else {
        out << "FAIL (" << violations.size() << " violation(s), threshold " << num << "/" << den
            << ")\n";
        for (const auto& v : violations)
            out << "  vertex " << v.vertex << ": " << v.same_colour_out
                << " same-colour out-neighbours > allowed " << v.allowed << " (out-degree "
                << v.out_degree << ")\n";
    }
    return violations.empty() ? exit_ok : exit_fail;
}

int cmd_experiment(const Args& a, std::ostream& out) {
    Digraph t;
    std::string source;
    if (!a.input.empty()) {
        t = read_edge_list(slurp(a.input));
        source = a.input;
    } else {
        t = random_tournament(a.n, a.seed);
        source = "generated";
    }
    const ExperimentReport report = random_three_colouring(t, a.trials, a.seed);

    json j;
    j["command"] = "experiment";
    j["source"] = source;
    j["n"] = t.vertex_count();
    j["arcs"] = t.arc_count();
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["bad_counts"] = report.bad_counts;
    j["best_trial"] = report.best_trial;
    j["best_bad_count"] = report.bad_counts[report.best_trial];
    j["mean_bad_count"] = report.mean_bad;
    if (a.min_outdeg_report) {
        int min_deg = t.vertex_count() == 0 ? 0 : t.out_degree(0);
        for (int v = 0; v < t.vertex_count(); ++v) min_deg = std::min(min_deg, t.out_degree(v));
        j["min_out_degree"] = min_deg;
        json classes = json::array();
        bool all_ok = true;
        for (const auto& [i, members] : dyadic_classes(t)) {
            const long long bound = (1LL << (i + 1)) - 1;
            const bool ok = static_cast<long long>(members.size()) <= bound;
            all_ok = all_ok && ok;
            classes.push_back({{"class", i},
                               {"size", members.size()},
                               {"bound", bound},
                               {"ok", ok}});
        }
        j["dyadic_classes"] = classes;
        j["dyadic_bound_ok"] = all_ok;
    }
    out << j.dump(2) << '\n';
    if (!a.output.empty()) {
        std::ostringstream dummy;
        spill(a.output, write_colouring(report.best), dummy);
    }
    return exit_ok;
}

int cmd_lp(const Args& a, std::ostream& out) {
    const Rational tail = parse_rational(a.tail);
    const BoundReport report = bound_report(a.lo, a.hi, tail);
    if (a.as_json) {
        json j;
        j["lo"] = report.lo;
        j["hi"] = report.hi;
        j["optimum"] = to_fraction_string(report.optimum);
        j["optimum_decimal"] = report.optimum.convert_to<double>();
        j["tail"] = to_fraction_string(report.tail);
        j["total"] = to_fraction_string(report.total);
        j["total_decimal"] = report.total.convert_to<double>();
        j["guarantee"] = report.guarantee;
        out << j.dump(2) << '\n';
    } else {
        out << "range           [" << report.lo << ", " << report.hi << "]\n"
            << "optimum         " << to_fraction_string(report.optimum) << " ~ "
            << report.optimum.convert_to<double>() << '\n'
            << "tail            " << to_fraction_string(report.tail) << '\n'
            << "total           " << to_fraction_string(report.total) << " ~ "
            << report.total.convert_to<double>() << '\n'
            << "guarantee       some 3-colouring has at most " << report.guarantee
            << " bad vertices\n";
    }
    return exit_ok;
}

int cmd_exact(const Args& a, std::ostream& out) {
    const Digraph d = read_edge_list(slurp(a.input));
    const int m_max = a.max_colours > 0 ? a.max_colours : 2 * a.k;
    const auto result = exact_min_colours(d, a.k, m_max, a.budget);
    if (a.as_json) {
        json j;
        j["k"] = a.k;
        j["max_colours"] = m_max;
        j["min_colours"] = result ? json(*result) : json(nullptr);
        out << j.dump(2) << '\n';
    } else if (result) {
        out << "min_colours " << *result << '\n';
    } else {
        out << "no colouring with at most " << m_max << " colours\n";
    }
    return result ? exit_ok : exit_fail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"majority colouring toolkit"};
    app.require_subcommand(1);
    Args a;

    auto* generate = app.add_subcommand("generate", "write a digraph as an edge list");
    generate->require_subcommand(1);
    auto* gen_regular = generate->add_subcommand("regular", "rotational regular tournament");
    gen_regular->fallthrough();
    gen_regular->add_option("--q", a.q, "odd vertex count")->required();
    auto* gen_tournament = generate->add_subcommand("tournament", "random tournament");
    gen_tournament->fallthrough();
    gen_tournament->add_option("--n", a.n, "vertex count")->required();
    gen_tournament->add_option("--seed", a.seed, "rng seed (default 0)");
    auto* gen_random = generate->add_subcommand("random", "random digraph");
    gen_random->fallthrough();
    gen_random->add_option("--n", a.n, "vertex count")->required();
    gen_random->add_option("--p", a.p, "arc probability")->required();
    gen_random->add_option("--seed", a.seed, "rng seed (default 0)");
    generate->add_option("-o,--output", a.output, "output file (default stdout)");

    auto* colour = app.add_subcommand("colour", "construct a verified colouring");
    colour->require_subcommand(1);
    auto* col_partition = colour->add_subcommand("partition", "colour into 2k (or t) classes");
    col_partition->fallthrough();
    col_partition->add_option("--k", a.k, "majority parameter (palette 2k)");
    col_partition->add_option("--t", a.t, "explicit class count");
    col_partition->add_option("--capacities", a.capacities,
                              "comma-separated class capacities, e.g. 1/4,1/4,1/2");
    auto* col_list = colour->add_subcommand("list", "colour from per-vertex lists");
    col_list->fallthrough();
    col_list->add_option("--lists", a.lists_file, "list assignment file")->required();
    colour->add_option("-i,--input", a.input, "edge-list file")->required();
    colour->add_option("-o,--output", a.output, "colouring file (default stdout)");
    colour->add_option("--eps", a.eps, "perturbation floor");
    colour->add_option("--tol", a.tol, "power-iteration residual target");
    colour->add_flag("--json", a.as_json, "JSON summary on stderr");
    std::uint64_t init_seed_value = 0;
    auto* init_seed_opt =
        colour->add_option("--init-seed", init_seed_value, "random initial assignment seed");

    auto* verify = app.add_subcommand("verify", "check a colouring against a digraph");
    verify->add_option("-i,--input", a.input, "edge-list file")->required();
    verify->add_option("-c,--colouring", a.colour_file, "colouring file")->required();
    verify->add_option("--k", a.k, "majority parameter (threshold 1/k)");
    verify->add_option("--num", a.num, "threshold numerator");
    verify->add_option("--den", a.den, "threshold denominator");
    verify->add_flag("--json", a.as_json, "JSON output");

    auto* experiment = app.add_subcommand("experiment", "random 3-colouring trials on a tournament");
    experiment->add_option("-i,--input", a.input, "tournament edge-list file");
    experiment->add_option("--n", a.n, "generate a random tournament of this size instead");
    experiment->add_option("--trials", a.trials, "number of trials");
    experiment->add_option("--seed", a.seed, "rng seed (default 0)");
    experiment->add_flag("--min-outdeg-report", a.min_outdeg_report,
                         "include dyadic out-degree class report");
    experiment->add_option("-o,--best-out", a.output, "write the best colouring here");

    auto* lp = app.add_subcommand("lp", "exact chain LP bound on expected bad vertices");
    lp->add_option("--lo", a.lo, "smallest out-degree");
    lp->add_option("--hi", a.hi, "largest out-degree");
    lp->add_option("--tail", a.tail, "tail bound for degrees above hi, as a fraction");
    lp->add_flag("--json", a.as_json, "JSON output");

    auto* exact = app.add_subcommand("exact", "exhaustive minimum colour count");
    exact->add_option("-i,--input", a.input, "edge-list file")->required();
    exact->add_option("--k", a.k, "majority parameter")->required();
    exact->add_option("--max-colours", a.max_colours, "largest palette to try (default 2k)");
    exact->add_option("--budget", a.budget, "enumeration node budget");
    exact->add_flag("--json", a.as_json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    if (init_seed_opt->count() > 0) a.init_seed = init_seed_value;

    try {
        if (generate->parsed()) {
            a.gen_kind = gen_regular->parsed() ? "regular"
                        : gen_tournament->parsed() ? "tournament"
                                                   : "random";
            return cmd_generate(a, out);
        }
        if (colour->parsed()) {
            a.colour_mode = col_partition->parsed() ? "partition" : "list";
            return cmd_colour(a, out, err);
        }
        if (verify->parsed()) {
            if ((a.num == 0) != (a.den == 0))
                throw UsageError("--num and --den must be given together");
            if (a.num != 0 && (a.num <= 0 || a.den < a.num))
                throw UsageError("threshold must satisfy 0 < num <= den");
            return cmd_verify(a, out);
        }
        if (experiment->parsed()) {
            if (a.input.empty() && a.n <= 0)
                throw UsageError("experiment needs --input or --n");
            return cmd_experiment(a, out);
        }
        if (lp->parsed()) return cmd_lp(a, out);
        if (exact->parsed()) return cmd_exact(a, out);
        err << "error: no subcommand\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const SolveError& e) {
        err << "error: " << e.what() << '\n';
        for (const auto& v : e.violations())
            err << "  vertex " << v.vertex << ": " << v.same_colour_out << " > " << v.allowed
                << '\n';
        return exit_solver;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_solver;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_solver;
    }
}

}  // namespace majcol
