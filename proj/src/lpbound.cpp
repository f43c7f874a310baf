#include "majcol/lpbound.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace majcol {

Rational bad_probability(int i) {
    if (i < 1) throw std::invalid_argument("out-degree must be >= 1");
    // sum_{j=ceil((i+1)/2)}^{i} C(i,j) 2^(i-j), all over 3^i.
    Integer binom = 1;  // C(i, i)
    Integer numerator = 0;
    for (int j = i; j >= (i + 2) / 2; --j) {
        numerator += binom << static_cast<unsigned>(i - j);
        binom = binom * j / (i - j + 1);  // C(i, j-1)
    }
    Integer power = 1;
    for (int t = 0; t < i; ++t) power *= 3;
    return Rational(numerator, power);
}

LPInstance build_lp(int lo, int hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("need 1 <= lo <= hi");
    LPInstance lp;
    lp.lo = lo;
    lp.hi = hi;
    lp.objective.reserve(lp.width());
    for (int i = lo; i <= hi; ++i) lp.objective.push_back(bad_probability(i));
    return lp;
}

namespace {

void validate(const LPInstance& lp) {
    if (lp.lo < 1 || lp.hi < lp.lo) throw std::invalid_argument("need 1 <= lo <= hi");
    if (static_cast<int>(lp.objective.size()) != lp.width())
        throw std::invalid_argument("objective length does not match the range");
}

}  // namespace

LPSolution solve_chain_lp(const LPInstance& lp) {
    validate(lp);
    const int w = lp.width();
    std::vector<int> order(w);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return lp.objective[a] > lp.objective[b]; });

    // remaining[t] = slack of the prefix constraint at out-degree lo + t.
    // Integral capacities keep every slack (and so every v) an integer.
    std::vector<Rational> remaining(w);
    for (int t = 0; t < w; ++t) remaining[t] = lp.capacity(lp.lo + t);

    LPSolution sol;
    sol.values.assign(w, Rational(0));
    for (int idx : order) {
        Rational room = remaining[idx];
        for (int t = idx + 1; t < w; ++t) room = std::min(room, remaining[t]);
        if (room <= 0) continue;
        sol.values[idx] = room;
        for (int t = idx; t < w; ++t) remaining[t] -= room;
    }
    sol.optimum = 0;
    for (int t = 0; t < w; ++t)
        if (!sol.values[t].is_zero()) sol.optimum += sol.values[t] * lp.objective[t];
    return sol;
}

LPSolution solve_lp_reference(const LPInstance& lp) {
    validate(lp);
    const int w = lp.width();
    if (w > 13) throw std::invalid_argument("reference enumeration limited to width <= 13");

    LPSolution best;
    best.values.assign(w, Rational(0));
    best.optimum = 0;

    // Candidate vertices: pick a subset of tight prefix constraints; the
    // variables between consecutive tight prefixes share that segment's
    // capacity increment through a single free variable. Every vertex of
    // the polytope has this shape; each candidate is then checked against
    // all prefix constraints directly, so infeasible placements drop out.
    std::vector<long long> values(w);
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        std::vector<std::pair<int, int>> segments;  // [begin, end] inclusive
        std::vector<long long> increment;
        {
            long long prev_cap = 0;
            int begin = 0;
            for (int t = 0; t < w; ++t) {
                if (!(mask & (1u << t))) continue;
                segments.emplace_back(begin, t);
                increment.push_back(lp.capacity(lp.lo + t) - prev_cap);
                prev_cap = lp.capacity(lp.lo + t);
                begin = t + 1;
            }
        }

        std::vector<int> choice(segments.size(), 0);
        for (;;) {
            std::fill(values.begin(), values.end(), 0LL);
            for (std::size_t s = 0; s < segments.size(); ++s)
                values[segments[s].first + choice[s]] = increment[s];

            bool feasible = true;
            long long prefix = 0;
            for (int t = 0; t < w && feasible; ++t) {
                prefix += values[t];
                if (prefix > lp.capacity(lp.lo + t)) feasible = false;
            }
            if (feasible) {
                Rational objective = 0;
                for (int t = 0; t < w; ++t)
                    if (values[t] != 0) objective += Rational(values[t]) * lp.objective[t];
                if (objective > best.optimum) {
                    best.optimum = objective;
                    for (int t = 0; t < w; ++t) best.values[t] = values[t];
                }
            }

            std::size_t s = 0;
            while (s < segments.size()) {
                const int len = segments[s].second - segments[s].first + 1;
                if (++choice[s] < len) break;
                choice[s] = 0;
                ++s;
            }
            if (s == segments.size()) break;
        }
    }
    return best;
}

BoundReport bound_report(int lo, int hi, const Rational& tail) {
    if (tail < 0) throw std::invalid_argument("tail bound must be non-negative");
    const LPSolution sol = solve_chain_lp(build_lp(lo, hi));
    BoundReport report;
    report.lo = lo;
    report.hi = hi;
    report.optimum = sol.optimum;
    report.tail = tail;
    report.total = sol.optimum + tail;
    const Integer num = boost::multiprecision::numerator(report.total);
    const Integer den = boost::multiprecision::denominator(report.total);
    const Integer ceil = (num + den - 1) / den;
    report.guarantee = ceil.convert_to<long long>() - 1;
    return report;
}

std::string to_fraction_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

}  // namespace majcol
