#pragma once

#include <map>
#include <string>
#include <vector>

#include "majcol/digraph.hpp"

namespace majcol {

// Total map vertex -> colour id, with colour id < palette_size.
struct Colouring {
    std::vector<int> colour;
    int palette_size = 0;
};

// Per-vertex colour lists, all of the same size. Lists are kept sorted with
// distinct entries.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
    int list_size = 0;
};

// One vertex whose monochrome out-neighbour count exceeded its threshold.
struct Violation {
    int vertex = 0;
    int same_colour_out = 0;
    int out_degree = 0;
    int allowed = 0;
};

// Number of out-neighbours of v that share v's colour.
int monochrome_out_count(const Digraph& d, const Colouring& c, int v);

// Vertices where the monochrome out-count exceeds floor(d+ / k). All
// threshold comparisons here and below use exact integer arithmetic.
std::vector<Violation> check_majority(const Digraph& d, const Colouring& c, int k);

// Generalized threshold num/den: violations where count > floor(num * d+ / den).
std::vector<Violation> check_fraction(const Digraph& d, const Colouring& c, long long num,
                                      long long den);

// Vertices x with 2 * count > d+(x). Out-degree-0 vertices are never bad.
std::vector<int> bad_vertices(const Digraph& t, const Colouring& c);

// Partition of {v : d+(v) >= 1} by dyadic out-degree class: class i holds
// the vertices with 2^(i-1) <= d+ < 2^i.
std::map<int, std::vector<int>> dyadic_classes(const Digraph& d);

// exp(-d / 36), an upper bound on the probability that a vertex of
// out-degree d is bad under a uniform random 3-colouring. Diagnostic only;
// never gates correctness.
double chernoff_bad_bound(long long d);

// Sum over dyadic classes i = 1..10 of 2^(i+1) * exp(-2^(i-1) / 36).
double dyadic_chernoff_sum();

// Sum over i >= 11 of 2^(-i+8), evaluated in closed form: exactly 1/4.
double geometric_tail();

// Upper bound on the expected number of bad vertices of a uniformly random
// 3-colouring of any tournament: the low-degree classes contribute at most
// 205 and the high-degree tail exactly 1/4, so the bound is 205.25 < 206.
double expected_bad_upper_bound();

bool respects_lists(const Colouring& c, const ListAssignment& l);

// Colouring text format: one "v c" line per vertex; '#' comments allowed.
Colouring read_colouring(std::istream& in, int n);
Colouring read_colouring(const std::string& text, int n);
std::string write_colouring(const Colouring& c);

// List text format: one "v c1 c2 ... cm" line per vertex.
ListAssignment read_lists(std::istream& in, int n);
ListAssignment read_lists(const std::string& text, int n);
std::string write_lists(const ListAssignment& l);

}  // namespace majcol
