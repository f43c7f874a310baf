#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "majcol/digraph.hpp"
#include "majcol/spectral.hpp"
#include "majcol/verify.hpp"

namespace majcol {

// Exact positive rational, used for partition class capacities.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Sum of fractions, exact. Throws on overflow-sized denominators.
Fraction add(const Fraction& a, const Fraction& b);

struct SearchOptions {
    double eps = 1e-9;             // perturbation floor handed to pad_and_perturb
    double tol = 1e-12;            // Perron residual target
    int max_iter = -1;             // power-iteration cap; -1 = default_power_iterations
    double delta = 1e-12;          // minimum potential improvement per applied move
    long long repair_budget = -1;  // forced moves after fixed points; -1 = 10 n
    std::optional<std::uint64_t> init_seed;  // random initial assignment instead of
                                             // first-list-colour
};

// A colouring came out of the search still violating its combinatorial
// guarantee after the repair budget was spent.
class SolveError : public std::runtime_error {
public:
    explicit SolveError(std::vector<Violation> violations)
        : std::runtime_error("search ended with " + std::to_string(violations.size()) +
                             " unrepaired violation(s)"),
          violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(long long nodes)
        : std::runtime_error("enumeration budget exceeded after " + std::to_string(nodes) +
                             " nodes"),
          nodes_(nodes) {}
    long long nodes() const noexcept { return nodes_; }

private:
    long long nodes_;
};

// Positive per-vertex weights steering the search. For the padded matrix A'
// with Perron left vector u, the pair weight is w_ij = b_ij + b_ji with
// b_ij = u_i * A'_ij; mix holds the per-row mixing weights of A'.
struct SearchWeights {
    std::vector<double> u;
    std::vector<double> mix;
};

// Build A from the digraph, pad it, and run the power iteration.
SearchWeights perron_search_weights(const Digraph& d, const SearchOptions& opts = {});

// Greedy potential descent over list-respecting assignments. The potential
// is sum_c omega_c * sum_{i,j in class c} b_ij; a pass scans vertices in
// ascending order and applies each vertex's most-improving list move when it
// beats the delta margin. Colour ids here are dense (0..num_colours-1).
class LocalSearch {
public:
    LocalSearch(const Digraph& d, std::vector<std::vector<int>> lists, int num_colours,
                const SearchWeights& weights, std::vector<double> colour_weight, double delta,
                std::optional<std::uint64_t> init_seed = std::nullopt);

    // One cyclic scan; true if at least one move was applied.
    bool pass();

    // Passes until a full pass makes no move; returns moves applied.
    long long run_to_fixed_point();

    // Applies v's best alternative move regardless of the margin.
    void force_best_move(int v);

    // S_v(c): total pair weight between v and the vertices of class c.
    double class_score(int v, int c) const;

    const std::vector<int>& assignment() const noexcept { return colour_; }
    double potential() const noexcept { return potential_; }
    double initial_potential() const noexcept { return initial_potential_; }
    long long move_count() const noexcept { return moves_; }
    double recompute_potential() const;

private:
    struct Move {
        int colour = -1;
        double delta = 0.0;
    };
    Move best_move(int v, bool exclude_current) const;
    void apply_move(int v, int to, double delta);

    const Digraph& graph_;
    std::vector<std::vector<int>> lists_;
    int num_colours_;
    std::vector<double> omega_;
    double delta_;

    std::vector<std::vector<int>> in_adj_;
    std::vector<double> out_arc_w_;  // u_i (1 - mix_i) / d+(i)
    std::vector<double> lamu_;       // u_i mix_i / (n - 1)

    std::vector<int> colour_;
    std::vector<int> class_size_;
    std::vector<double> class_lamu_;
    double potential_ = 0.0;
    double initial_potential_ = 0.0;
    long long moves_ = 0;

    mutable std::vector<int> scratch_count_;
    mutable std::vector<double> scratch_in_w_;
    mutable std::vector<int> scratch_touched_;
};

// Colouring into t classes with per-class capacities summing to 1: each
// vertex's same-class out-neighbours carry a-weight at most twice its class
// capacity. With uniform capacities 1/t that is the integer bound
// count <= floor(2 d+ / t). Verified combinatorially before returning.
Colouring partition_colouring(const Digraph& d, int t,
                              const std::vector<Fraction>& capacities,
                              const SearchOptions& opts = {});

// Uniform capacities 1/t.
Colouring partition_colouring(const Digraph& d, int t, const SearchOptions& opts = {});

// List colouring: colour[v] comes from lists[v] (all of size m >= 2) and
// every vertex has at most floor(2 d+ / m) same-coloured out-neighbours.
// Verified combinatorially before returning.
Colouring list_colouring(const Digraph& d, const ListAssignment& lists,
                         const SearchOptions& opts = {});

struct ExperimentReport {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<int> bad_counts;  // per trial
    Colouring best;               // colouring of the best (lowest-count) trial
    int best_trial = -1;
    double mean_bad = 0.0;
};

// Independent uniform 3-colourings of a tournament; counts bad vertices per
// trial and keeps the best. Trial t draws from its own (seed, t) stream, so
// results do not depend on execution order.
ExperimentReport random_three_colouring(const Digraph& t, int trials, std::uint64_t seed);

// Smallest m <= m_max such that some m-colouring passes check_majority(d, k),
// by exhaustive enumeration with vertex 0 pinned to colour 0 and violation
// pruning; nullopt if no such m. Throws BudgetExceeded when the node budget
// runs out.
std::optional<int> exact_min_colours(const Digraph& d, int k, int m_max,
                                     long long node_budget = 100'000'000);

}  // namespace majcol
