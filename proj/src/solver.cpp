#include "majcol/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "majcol/rng.hpp"

namespace majcol {

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Fraction add(const Fraction& a, const Fraction& b) {
    const __int128 num = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    const __int128 den = static_cast<__int128>(a.den) * b.den;
    if (num > std::numeric_limits<long long>::max() || den > std::numeric_limits<long long>::max())
        throw std::overflow_error("fraction sum overflow");
    return Fraction(static_cast<long long>(num), static_cast<long long>(den));
}

SearchWeights perron_search_weights(const Digraph& d, const SearchOptions& opts) {
    const auto padded = pad_and_perturb(matrix_from_digraph(d), opts.eps);
    SearchWeights w;
    try {
        w.u = perron_left_vector(padded, opts.tol, opts.max_iter).u;
    } catch (const ConvergenceError& e) {
        // Slowly mixing inputs (near-periodic chains) may never hit the
        // residual target. The weights only steer the search; output
        // validity is decided by the combinatorial verifier, so the best
        // iterate is good enough here.
        w.u = e.best_u();
    }
    w.mix.resize(d.vertex_count());
    for (int i = 0; i < d.vertex_count(); ++i) w.mix[i] = padded.mix_weight(i);
    return w;
}

LocalSearch::LocalSearch(const Digraph& d, std::vector<std::vector<int>> lists, int num_colours,
                         const SearchWeights& weights, std::vector<double> colour_weight,
                         double delta, std::optional<std::uint64_t> init_seed)
    : graph_(d),
      lists_(std::move(lists)),
      num_colours_(num_colours),
      omega_(std::move(colour_weight)),
      delta_(delta) {
    const int n = d.vertex_count();
    if (static_cast<int>(lists_.size()) != n)
        throw std::invalid_argument("one list per vertex required");
    if (static_cast<int>(omega_.size()) != num_colours_)
        throw std::invalid_argument("one colour weight per colour required");
    if (static_cast<int>(weights.u.size()) != n || static_cast<int>(weights.mix.size()) != n)
        throw std::invalid_argument("weights do not match the vertex set");
    if (!(delta_ > 0.0)) throw std::invalid_argument("improvement margin must be positive");
    for (const auto& list : lists_) {
        if (list.empty()) throw std::invalid_argument("empty colour list");
        for (int c : list)
            if (c < 0 || c >= num_colours_) throw std::invalid_argument("list colour out of range");
    }

    in_adj_ = d.in_adjacency();
    out_arc_w_.assign(n, 0.0);
    lamu_.assign(n, 0.0);
    for (int v = 0; v < n; ++v) {
        const int deg = d.out_degree(v);
        if (deg > 0) out_arc_w_[v] = weights.u[v] * (1.0 - weights.mix[v]) / deg;
        if (n > 1) lamu_[v] = weights.u[v] * weights.mix[v] / static_cast<double>(n - 1);
    }

    colour_.resize(n);
    if (init_seed) {
        auto g = seeded_rng(*init_seed, rng_stream_initial);
        for (int v = 0; v < n; ++v)
            colour_[v] = lists_[v][rng_below(g, lists_[v].size())];
    } else {
        for (int v = 0; v < n; ++v) colour_[v] = lists_[v].front();
    }

    class_size_.assign(num_colours_, 0);
    class_lamu_.assign(num_colours_, 0.0);
    for (int v = 0; v < n; ++v) {
        class_size_[colour_[v]] += 1;
        class_lamu_[colour_[v]] += lamu_[v];
    }
    potential_ = recompute_potential();
    initial_potential_ = potential_;

    scratch_count_.assign(num_colours_, 0);
    scratch_in_w_.assign(num_colours_, 0.0);
}

double LocalSearch::recompute_potential() const {
    // Per class c: sum of b_ij over ordered same-class pairs, i.e. the arc
    // part plus the mixing part, scaled by omega_c.
    std::vector<double> arc_part(num_colours_, 0.0);
    for (const auto& [i, j] : graph_.arcs())
        if (colour_[i] == colour_[j]) arc_part[colour_[i]] += out_arc_w_[i];
    std::vector<double> mix_part(num_colours_, 0.0);
    for (int v = 0; v < graph_.vertex_count(); ++v)
        mix_part[colour_[v]] += lamu_[v] * (class_size_[colour_[v]] - 1);
    double total = 0.0;
    for (int c = 0; c < num_colours_; ++c) total += omega_[c] * (arc_part[c] + mix_part[c]);
    return total;
}

double LocalSearch::class_score(int v, int c) const {
    double s = 0.0;
    int count = 0;
    for (int j : graph_.out_neighbours(v))
        if (colour_[j] == c) ++count;
    s += count * out_arc_w_[v];
    for (int j : in_adj_[v])
        if (colour_[j] == c) s += out_arc_w_[j];
    const bool self = colour_[v] == c;
    s += lamu_[v] * (class_size_[c] - (self ? 1 : 0));
    s += class_lamu_[c] - (self ? lamu_[v] : 0.0);
    return s;
}

LocalSearch::Move LocalSearch::best_move(int v, bool exclude_current) const {
    const int current = colour_[v];
    for (int j : graph_.out_neighbours(v)) {
        const int c = colour_[j];
        if (scratch_count_[c] == 0 && scratch_in_w_[c] == 0.0) scratch_touched_.push_back(c);
        scratch_count_[c] += 1;
    }
    for (int j : in_adj_[v]) {
        const int c = colour_[j];
        if (scratch_count_[c] == 0 && scratch_in_w_[c] == 0.0) scratch_touched_.push_back(c);
        scratch_in_w_[c] += out_arc_w_[j];
    }

    const auto score = [&](int c) {
        const bool self = current == c;
        double s = scratch_count_[c] * out_arc_w_[v] + scratch_in_w_[c];
        s += lamu_[v] * (class_size_[c] - (self ? 1 : 0));
        s += class_lamu_[c] - (self ? lamu_[v] : 0.0);
        return omega_[c] * s;
    };

    const double current_score = score(current);
    Move best;
    double best_score = std::numeric_limits<double>::infinity();
    for (int l : lists_[v]) {
        if (exclude_current && l == current) continue;
        const double s = score(l);
        if (s < best_score) {  // ties keep the smaller colour id (list order)
            best_score = s;
            best.colour = l;
        }
    }
    best.delta = best_score - current_score;

    for (int c : scratch_touched_) {
        scratch_count_[c] = 0;
        scratch_in_w_[c] = 0.0;
    }
    scratch_touched_.clear();
    return best;
}

void LocalSearch::apply_move(int v, int to, double delta) {
    const int from = colour_[v];
    class_size_[from] -= 1;
    class_size_[to] += 1;
    class_lamu_[from] -= lamu_[v];
    class_lamu_[to] += lamu_[v];
    colour_[v] = to;
    potential_ += delta;
    ++moves_;
}

bool LocalSearch::pass() {
    bool moved = false;
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        const Move m = best_move(v, /*exclude_current=*/false);
        if (m.colour != colour_[v] && m.delta < -delta_) {
            apply_move(v, m.colour, m.delta);
            moved = true;
        }
    }
    return moved;
}

long long LocalSearch::run_to_fixed_point() {
    const long long before = moves_;
    const long long cap =
        static_cast<long long>(std::ceil(std::max(initial_potential_, 1.0) / delta_)) + 1;
    while (pass()) {
        if (moves_ - before > cap)
            throw std::logic_error("local search exceeded its potential/delta move bound");
    }
    return moves_ - before;
}

void LocalSearch::force_best_move(int v) {
    if (lists_[v].size() < 2) return;  // nowhere to go
    const Move m = best_move(v, /*exclude_current=*/true);
    apply_move(v, m.colour, m.delta);
}

namespace {

// Search + verify + repair shared by the partition and list solvers.
// verify returns the violations of the target combinatorial bound for a
// given dense assignment.
std::vector<int> solve_dense(
    const Digraph& d, std::vector<std::vector<int>> lists, int num_colours,
    std::vector<double> omega, const SearchOptions& opts,
    const std::function<std::vector<Violation>(const std::vector<int>&)>& verify) {
    const int n = d.vertex_count();
    LocalSearch search(d, std::move(lists), num_colours, perron_search_weights(d, opts),
                       std::move(omega), opts.delta, opts.init_seed);
    search.run_to_fixed_point();

    auto violations = verify(search.assignment());
    const long long budget = opts.repair_budget < 0 ? 10LL * n : opts.repair_budget;
    long long forced = 0;
    while (!violations.empty() && forced < budget) {
        for (const auto& violation : violations) {
            if (forced >= budget) break;
            search.force_best_move(violation.vertex);
            ++forced;
        }
        search.run_to_fixed_point();
        violations = verify(search.assignment());
    }
    if (!violations.empty()) throw SolveError(std::move(violations));

    const double fresh = search.recompute_potential();
    const double tolerance = 1e-9 * std::max(1.0, search.initial_potential());
    if (std::abs(fresh - search.potential()) > tolerance)
        throw std::logic_error("tracked potential drifted from recomputation");
    return search.assignment();
}

std::vector<Violation> capacity_violations(const Digraph& d, const std::vector<int>& assignment,
                                           const std::vector<Fraction>& capacities) {
    std::vector<Violation> out;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const int mine = assignment[v];
        int count = 0;
        for (int w : d.out_neighbours(v))
            if (assignment[w] == mine) ++count;
        const long long deg = d.out_degree(v);
        const Fraction& cap = capacities[mine];
        // count <= 2 c_r d+ checked as count * den <= 2 num d+.
        if (static_cast<long long>(count) * cap.den > 2 * cap.num * deg)
            out.push_back({v, count, static_cast<int>(deg),
                           static_cast<int>(2 * cap.num * deg / cap.den)});
    }
    return out;
}

}  // namespace

Colouring partition_colouring(const Digraph& d, int t, const std::vector<Fraction>& capacities,
                              const SearchOptions& opts) {
    if (t < 2) throw std::invalid_argument("partition needs t >= 2 classes");
    if (static_cast<int>(capacities.size()) != t)
        throw std::invalid_argument("one capacity per class required");
    Fraction sum(0, 1);
    for (const auto& c : capacities) {
        if (c.num <= 0) throw std::invalid_argument("capacities must be positive");
        sum = add(sum, c);
    }
    if (sum.num != 1 || sum.den != 1)
        throw std::invalid_argument("capacities must sum to exactly 1");

    const int n = d.vertex_count();
    Colouring result;
    result.palette_size = t;
    if (n == 0) return result;
    if (n == 1 || d.arc_count() == 0) {
        result.colour.assign(n, 0);
        return result;
    }

    bool uniform = true;
    for (const auto& c : capacities)
        if (c.num != 1 || c.den != t) uniform = false;

    std::vector<std::vector<int>> lists(n);
    std::vector<int> palette(t);
    std::iota(palette.begin(), palette.end(), 0);
    for (auto& list : lists) list = palette;

    std::vector<double> omega(t, 1.0);
    if (!uniform)
        for (int c = 0; c < t; ++c) omega[c] = static_cast<double>(capacities[c].den) / capacities[c].num;

    result.colour = solve_dense(d, std::move(lists), t, std::move(omega), opts,
                                [&](const std::vector<int>& assignment) {
                                    return capacity_violations(d, assignment, capacities);
                                });
    return result;
}

Colouring partition_colouring(const Digraph& d, int t, const SearchOptions& opts) {
    if (t < 2) throw std::invalid_argument("partition needs t >= 2 classes");
    return partition_colouring(d, t, std::vector<Fraction>(t, Fraction(1, t)), opts);
}

Colouring list_colouring(const Digraph& d, const ListAssignment& lists,
                         const SearchOptions& opts) {
    const int n = d.vertex_count();
    if (static_cast<int>(lists.lists.size()) != n)
        throw std::invalid_argument("one list per vertex required");
    const int m = lists.list_size;
    if (m < 2) throw std::invalid_argument("lists must have size >= 2");
    for (const auto& list : lists.lists)
        if (static_cast<int>(list.size()) != m)
            throw std::invalid_argument("lists must all have size m");

    Colouring result;
    int max_colour = 0;
    for (const auto& list : lists.lists)
        for (int c : list) max_colour = std::max(max_colour, c);
    result.palette_size = max_colour + 1;
    if (n == 0) return result;
    if (n == 1 || d.arc_count() == 0) {
        result.colour.resize(n);
        for (int v = 0; v < n; ++v) result.colour[v] = lists.lists[v].front();
        return result;
    }

    // Work with dense colour ids; the sorted-unique mapping preserves id
    // order, so tie-breaking by dense id matches tie-breaking by colour id.
    std::vector<int> used;
    for (const auto& list : lists.lists) used.insert(used.end(), list.begin(), list.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    const auto dense_id = [&](int c) {
        return static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
    };
    std::vector<std::vector<int>> dense_lists(n);
    for (int v = 0; v < n; ++v) {
        dense_lists[v].reserve(m);
        for (int c : lists.lists[v]) dense_lists[v].push_back(dense_id(c));
    }

    const int num_colours = static_cast<int>(used.size());
    const auto assignment =
        solve_dense(d, std::move(dense_lists), num_colours, std::vector<double>(num_colours, 1.0),
                    opts, [&](const std::vector<int>& a) {
                        Colouring tmp{a, num_colours};
                        return check_fraction(d, tmp, 2, m);
                    });
    result.colour.resize(n);
    for (int v = 0; v < n; ++v) result.colour[v] = used[assignment[v]];
    return result;
}

ExperimentReport random_three_colouring(const Digraph& t, int trials, std::uint64_t seed) {
    if (!t.is_tournament()) throw std::invalid_argument("experiment requires a tournament");
    if (trials < 1) throw std::invalid_argument("at least one trial required");

    const int n = t.vertex_count();
    ExperimentReport report;
    report.trials = trials;
    report.seed = seed;
    report.bad_counts.reserve(trials);
    report.best.palette_size = 3;

    std::vector<int> colour(n);
    long long total = 0;
    for (int trial = 0; trial < trials; ++trial) {
        auto g = seeded_rng(seed, rng_stream_trial, static_cast<std::uint64_t>(trial));
        for (int v = 0; v < n; ++v) colour[v] = static_cast<int>(rng_below(g, 3));
        int bad = 0;
        for (int v = 0; v < n; ++v) {
            const int mine = colour[v];
            int count = 0;
            for (int w : t.out_neighbours(v))
                if (colour[w] == mine) ++count;
            if (2LL * count > t.out_degree(v)) ++bad;
        }
        report.bad_counts.push_back(bad);
        total += bad;
        if (report.best_trial < 0 || bad < report.bad_counts[report.best_trial]) {
            report.best_trial = trial;
            report.best.colour = colour;
        }
    }
    report.mean_bad = static_cast<double>(total) / trials;
    return report;
}

namespace {

struct ExactSearch {
    const Digraph& d;
    const std::vector<std::vector<int>>& in_adj;
    std::vector<int> allowed;  // floor(d+ / k)
    std::vector<int> colour;
    std::vector<int> same;  // per assigned vertex: same-coloured assigned out-neighbours
    long long nodes = 0;
    long long budget;

    bool dfs(int v, int m) {
        if (v == d.vertex_count()) return true;
        const int limit = v == 0 ? 1 : m;  // vertex 0 pinned to colour 0
        for (int c = 0; c < limit; ++c) {
            if (++nodes > budget) throw BudgetExceeded(nodes);
            colour[v] = c;
            bool ok = true;
            int bumped = 0;
            same[v] = 0;
            for (int u : d.out_neighbours(v))
                if (u < v && colour[u] == c) ++same[v];
            if (same[v] > allowed[v]) ok = false;
            if (ok) {
                for (int u : in_adj[v]) {
                    if (u >= v || colour[u] != c) continue;
                    ++bumped;
                    if (++same[u] > allowed[u]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok && dfs(v + 1, m)) return true;
            // undo the in-neighbour bumps (the first `bumped` matches)
            int undone = 0;
            for (int u : in_adj[v]) {
                if (undone == bumped) break;
                if (u < v && colour[u] == c) {
                    --same[u];
                    ++undone;
                }
            }
        }
        colour[v] = -1;
        return false;
    }
};

}  // namespace

std::optional<int> exact_min_colours(const Digraph& d, int k, int m_max, long long node_budget) {
    if (k < 2) throw std::invalid_argument("majority parameter k must be >= 2");
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    if (node_budget < 1) throw std::invalid_argument("node budget must be positive");

    const int n = d.vertex_count();
    if (n == 0) return 1;

    const auto in_adj = d.in_adjacency();
    ExactSearch search{d, in_adj, {}, {}, {}, 0, node_budget};
    search.allowed.resize(n);
    for (int v = 0; v < n; ++v) search.allowed[v] = d.out_degree(v) / k;

    for (int m = 1; m <= m_max; ++m) {
        search.colour.assign(n, -1);
        search.same.assign(n, 0);
        if (search.dfs(0, m)) return m;
    }
    return std::nullopt;
}

}  // namespace majcol
