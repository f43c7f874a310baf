// Acceptance suite: runs every headline guarantee end to end at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exits non-zero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "majcol/digraph.hpp"
#include "majcol/lpbound.hpp"
#include "majcol/rng.hpp"
#include "majcol/solver.hpp"
#include "majcol/spectral.hpp"
#include "majcol/verify.hpp"
#include "oracles.hpp"

using namespace majcol;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

constexpr double kPs[3] = {0.05, 0.3, 0.9};

// ---- criterion 1: partition solver gives a verified 2k-colouring ---------

Outcome partition_guarantee() {
    const auto start = std::chrono::steady_clock::now();
    auto meta = seeded_rng(1, rng_stream_shuffle);
    int solved = 0;
    for (int idx = 0; idx < 200; ++idx) {
        const int n = 1 + static_cast<int>(rng_below(meta, 300));
        const Digraph d = random_digraph(n, kPs[idx % 3], idx);
        for (int k = 2; k <= 4; ++k) {
            const Colouring c = partition_colouring(d, 2 * k);
            if (c.palette_size != 2 * k || !check_majority(d, c, k).empty())
                return {false, "violation at instance " + std::to_string(idx) +
                                   ", k=" + std::to_string(k)};
            ++solved;
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << solved << " solves in " << elapsed << " s";
    if (elapsed >= 60.0) return {false, detail.str() + " (over the 60 s limit)"};
    return {true, detail.str()};
}

// ---- criterion 2: list solver respects lists and the 2/m bound -----------

Outcome list_guarantee() {
    auto meta = seeded_rng(2, rng_stream_shuffle);
    for (int idx = 0; idx < 200; ++idx) {
        const int n = 1 + static_cast<int>(rng_below(meta, 300));
        const Digraph d = random_digraph(n, kPs[idx % 3], 1000 + idx);
        const int m = 3 + idx % 4;
        const int palette = 3 * m;

        auto g = seeded_rng(idx, rng_stream_lists);
        ListAssignment lists;
        lists.list_size = m;
        lists.lists.assign(n, {});
        std::vector<int> pool(palette);
        for (auto& list : lists.lists) {
            for (int c = 0; c < palette; ++c) pool[c] = c;
            for (int i = 0; i < m; ++i)
                std::swap(pool[i], pool[i + rng_below(g, palette - i)]);
            list.assign(pool.begin(), pool.begin() + m);
            std::sort(list.begin(), list.end());
        }

        const Colouring c = list_colouring(d, lists);
        if (!respects_lists(c, lists) || !check_fraction(d, c, 2, m).empty())
            return {false, "violation at instance " + std::to_string(idx) +
                               ", m=" + std::to_string(m)};
    }
    return {true, "200 list instances verified"};
}

// ---- criterion 3: exact lower bounds on the two reference instances ------

Outcome exact_lower_bounds() {
    const auto start = std::chrono::steady_clock::now();
    const Digraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto a = exact_min_colours(cycle, 2, 6);
    if (!a || *a != 3) return {false, "three-cycle with k=2 did not need exactly 3 colours"};

    const auto b = exact_min_colours(regular_tournament(5), 3, 6);
    if (!b || *b != 5) return {false, "regular q=5 with k=3 did not need exactly 5 colours"};

    const double elapsed = seconds_since(start);
    if (elapsed >= 5.0) return {false, "over the 5 s limit"};
    std::ostringstream detail;
    detail << "3 and 5 colours confirmed in " << elapsed << " s";
    return {true, detail.str()};
}

// ---- criterion 4: chain LP over [1, 1023] stays below 31/4 ---------------

Outcome lp_full_range(Rational& full_optimum) {
    const auto start = std::chrono::steady_clock::now();
    const BoundReport report = bound_report(1, 1023, Rational(1, 4));
    full_optimum = report.optimum;
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "optimum " << report.optimum.convert_to<double>() << ", total "
           << report.total.convert_to<double>() << ", guarantee " << report.guarantee << ", "
           << elapsed << " s";
    if (!(report.optimum < Rational(31, 4))) return {false, "optimum not below 31/4"};
    if (!(report.total < Rational(8))) return {false, "total not below 8"};
    if (report.guarantee != 7) return {false, "guarantee is not 7"};
    if (elapsed >= 30.0) return {false, detail.str() + " (over the 30 s limit)"};
    return {true, detail.str()};
}

// ---- criterion 5: restricted LP over [55, 1023] stays below 3/4 ----------

Outcome lp_restricted_range() {
    const LPSolution sol = solve_chain_lp(build_lp(55, 1023));
    std::ostringstream detail;
    detail << "optimum " << sol.optimum.convert_to<double>();
    if (!(sol.optimum < Rational(3, 4))) return {false, detail.str() + " (not below 3/4)"};
    return {true, detail.str()};
}

// ---- criterion 6: greedy equals the vertex-enumeration oracle ------------

Outcome lp_greedy_vs_reference() {
    auto g = seeded_rng(6, rng_stream_shuffle);
    for (int trial = 0; trial < 50; ++trial) {
        const int lo = 1 + static_cast<int>(rng_below(g, 120));
        const int hi = lo + static_cast<int>(rng_below(g, 10));
        LPInstance lp;
        lp.lo = lo;
        lp.hi = hi;
        for (int i = lo; i <= hi; ++i) {
            const long long den = 1 + static_cast<long long>(rng_below(g, 48));
            const long long num = static_cast<long long>(rng_below(g, den + 1));
            lp.objective.emplace_back(num, den);
        }
        if (solve_chain_lp(lp).optimum != solve_lp_reference(lp).optimum)
            return {false, "mismatch on random instance " + std::to_string(trial)};
    }
    return {true, "50 random chain instances, zero mismatches"};
}

// ---- criteria 7 and 8: tournament experiment and dyadic class bound ------

Digraph randomized_regular_tournament(int q, std::uint64_t seed) {
    // Rotational start, then degree-preserving reversals of directed
    // triangles; out-degrees stay (q-1)/2 throughout.
    std::vector<std::vector<std::uint8_t>> adj(q, std::vector<std::uint8_t>(q, 0));
    for (int i = 0; i < q; ++i)
        for (int s = 1; s <= (q - 1) / 2; ++s) adj[i][(i + s) % q] = 1;

    auto g = seeded_rng(seed, rng_stream_shuffle);
    const long long attempts = 20LL * q;
    for (long long it = 0; it < attempts; ++it) {
        const int u = static_cast<int>(rng_below(g, q));
        const int v = static_cast<int>(rng_below(g, q));
        const int w = static_cast<int>(rng_below(g, q));
        if (u == v || v == w || u == w) continue;
        if (adj[u][v] && adj[v][w] && adj[w][u]) {
            adj[u][v] = adj[v][w] = adj[w][u] = 0;
            adj[v][u] = adj[w][v] = adj[u][w] = 1;
        } else if (adj[v][u] && adj[w][v] && adj[u][w]) {
            adj[v][u] = adj[w][v] = adj[u][w] = 0;
            adj[u][v] = adj[v][w] = adj[w][u] = 1;
        }
    }

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(q) * (q - 1) / 2);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (adj[i][j]) arcs.emplace_back(i, j);
    return Digraph(q, std::move(arcs));
}

bool dyadic_bound_holds(const Digraph& t) {
    for (const auto& [i, members] : dyadic_classes(t))
        if (static_cast<long long>(members.size()) > (1LL << (i + 1)) - 1) return false;
    return true;
}

Outcome tournament_experiment(Outcome& dyadic_outcome) {
    dyadic_outcome = {true, ""};
    int tournaments_checked = 0;

    std::vector<int> best_counts;
    for (int idx = 0; idx < 20; ++idx) {
        const Digraph t = random_tournament(2000, idx);
        if (!dyadic_bound_holds(t)) {
            dyadic_outcome = {false, "class bound failed on tournament " + std::to_string(idx)};
        }
        ++tournaments_checked;
        const ExperimentReport report = random_three_colouring(t, 100, 5000 + idx);
        const int best = report.bad_counts[report.best_trial];
        best_counts.push_back(best);
        if (best > 205)
            return {false, "best trial had " + std::to_string(best) + " bad vertices"};
    }

    int zero_hits = 0;
    for (int idx = 0; idx < 5; ++idx) {
        const Digraph t = randomized_regular_tournament(2049, idx);
        int min_deg = t.out_degree(0);
        for (int v = 0; v < t.vertex_count(); ++v) min_deg = std::min(min_deg, t.out_degree(v));
        if (min_deg < 1024)
            return {false, "regularized tournament lost its minimum out-degree"};
        if (!dyadic_bound_holds(t)) {
            dyadic_outcome = {false, "class bound failed on regular tournament " +
                                         std::to_string(idx)};
        }
        ++tournaments_checked;
        const ExperimentReport report = random_three_colouring(t, 100, 7000 + idx);
        const bool zero = report.bad_counts[report.best_trial] == 0;
        if (!zero)
            return {false, "no zero-bad trial on high-degree tournament " + std::to_string(idx)};
        ++zero_hits;
    }

    std::ostringstream detail;
    const auto [lo, hi] = std::minmax_element(best_counts.begin(), best_counts.end());
    double mean = 0;
    for (int b : best_counts) mean += b;
    mean /= best_counts.size();
    detail << "n=2000 best-of-100 bad counts: min " << *lo << ", mean " << mean << ", max " << *hi
           << "; " << zero_hits << "/5 high-degree tournaments reached 0 bad";
    if (dyadic_outcome.pass)
        dyadic_outcome.detail =
            std::to_string(tournaments_checked) + " tournaments, every class within 2^(i+1)-1";
    return {true, detail.str()};
}

// ---- criterion 9: closed-form expectation bound ---------------------------

Outcome expectation_bound() {
    const double tail = geometric_tail();
    const double bound = expected_bad_upper_bound();
    std::ostringstream detail;
    detail << "bound " << bound << ", tail " << tail << ", class sum " << dyadic_chernoff_sum();
    if (tail != 0.25) return {false, "geometric tail is not exactly 1/4"};
    if (!(bound > 205.0 && bound < 206.0)) return {false, detail.str() + " (outside (205, 206))"};
    return {true, detail.str()};
}

// ---- criterion 10: spectral accuracy --------------------------------------

Outcome spectral_sanity() {
    auto meta = seeded_rng(10, rng_stream_shuffle);
    for (int idx = 0; idx < 100; ++idx) {
        const int n = 1 + static_cast<int>(rng_below(meta, 100));
        const Digraph d = random_digraph(n, kPs[idx % 3], 3000 + idx);
        const auto padded = pad_and_perturb(matrix_from_digraph(d), 1e-9);
        const PerronWeights w = perron_left_vector(padded, 1e-12);
        if (w.residual > 1e-12)
            return {false, "residual " + std::to_string(w.residual) + " at instance " +
                               std::to_string(idx)};
        const auto reference = oracles::dense_perron(padded);
        for (int i = 0; i < n; ++i)
            if (std::abs(w.u[i] - reference[i]) > 1e-8)
                return {false, "oracle disagreement at instance " + std::to_string(idx)};
    }

    // doubly stochastic inputs: regular tournaments and directed cycles
    std::vector<Digraph> symmetric;
    for (int q : {5, 33, 67, 99}) symmetric.push_back(regular_tournament(q));
    for (int n : {4, 10, 40}) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
        symmetric.emplace_back(n, std::move(arcs));
    }
    for (const Digraph& d : symmetric) {
        const auto w = perron_left_vector(pad_and_perturb(matrix_from_digraph(d), 1e-9), 1e-12);
        const double uniform = 1.0 / d.vertex_count();
        for (double x : w.u)
            if (std::abs(x - uniform) > 1e-10)
                return {false, "doubly stochastic input did not give the uniform vector"};
    }
    return {true, "100 digraphs against the dense oracle, 7 doubly stochastic instances uniform"};
}

}  // namespace

int main() {
    int failures = 0;
    Rational full_optimum;
    Outcome dyadic_outcome;

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"partition solver: verified 2k-colourings on 200 random digraphs, k in {2,3,4}",
         partition_guarantee},
        {"list solver: verified 2/m colourings from size-m lists on 200 random digraphs",
         list_guarantee},
        {"exact search: 3 colours on the 3-cycle (k=2), 5 on regular q=5 (k=3)",
         exact_lower_bounds},
        {"chain LP [1,1023]: optimum < 31/4, with tail 1/4 total < 8, guarantee 7",
         [&]() { return lp_full_range(full_optimum); }},
        {"chain LP [55,1023]: optimum < 3/4", lp_restricted_range},
        {"chain LP greedy equals vertex enumeration on 50 random instances",
         lp_greedy_vs_reference},
        {"tournament experiment: best of 100 trials <= 205 bad (n=2000); 0 bad reachable "
         "when min out-degree >= 1024",
         [&]() { return tournament_experiment(dyadic_outcome); }},
        {"dyadic class bound |S_i| <= 2^(i+1)-1 on every experiment tournament",
         [&]() { return dyadic_outcome; }},
        {"expectation bound: value in (205, 206) with tail exactly 1/4", expectation_bound},
        {"spectral: residual <= 1e-12, dense-solve agreement 1e-8, uniform on doubly "
         "stochastic",
         spectral_sanity},
    };

    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = seconds_since(start);
        std::printf("%s  %2zu  %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str());
        if (!outcome.detail.empty()) std::printf("          %s\n", outcome.detail.c_str());
        std::printf("          (%.2f s)\n", elapsed);
        if (!outcome.pass) ++failures;
    }

    if (failures == 0)
        std::printf("all 10 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
