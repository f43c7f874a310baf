#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace majcol {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Probability that a vertex of out-degree i is bad under a uniform random
// 3-colouring: sum_{j = ceil((i+1)/2)}^{i} C(i,j) (1/3)^j (2/3)^(i-j),
// exact, with denominator dividing 3^i.
Rational bad_probability(int i);

// Chain-constrained LP over out-degrees lo..hi:
//   maximize   sum_i objective[i - lo] * v_i
//   subject to sum_{j = lo..i} v_j <= 2 i + 1   for each i in [lo, hi]
//              v_i >= 0.
// The capacity 2i+1 bounds the number of tournament vertices of out-degree
// at most i, hence also those of out-degree in [lo, i].
struct LPInstance {
    int lo = 1;
    int hi = 1;
    std::vector<Rational> objective;

    int width() const { return hi - lo + 1; }
    long long capacity(int i) const { return 2LL * i + 1; }
};

struct LPSolution {
    std::vector<Rational> values;  // values[i - lo]
    Rational optimum;
};

// Instance with objective coefficients bad_probability(lo..hi).
LPInstance build_lp(int lo, int hi);

// Exact optimum of the chain LP. The feasible region is a polymatroid on
// nested prefixes, so processing variables by decreasing objective
// coefficient (ties: smaller index first) and giving each the largest value
// the remaining prefix capacities allow is optimal.
LPSolution solve_chain_lp(const LPInstance& lp);

// Independent oracle: enumerates the vertices of the chain polytope (a
// choice of tight prefix constraints with one free variable per segment)
// and takes the best. Only for width <= 12.
LPSolution solve_lp_reference(const LPInstance& lp);

struct BoundReport {
    int lo = 0;
    int hi = 0;
    Rational optimum;   // LP value over [lo, hi]
    Rational tail;      // bound on the contribution of degrees above hi
    Rational total;     // optimum + tail
    long long guarantee = 0;  // ceil(total) - 1: achievable bad-vertex count
};

// First-moment bound: if the expected bad count is at most `total`, some
// 3-colouring has at most ceil(total) - 1 bad vertices.
BoundReport bound_report(int lo, int hi, const Rational& tail);

std::string to_fraction_string(const Rational& r);

}  // namespace majcol
