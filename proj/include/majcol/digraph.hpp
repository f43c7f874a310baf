#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majcol {

// Error for malformed text inputs (edge lists, colourings, list files).
// Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Finite simple digraph on vertices 0..n-1. No self-loops, no duplicate
// arcs. Arcs and out-adjacency lists are kept in canonical sorted order so
// everything downstream is deterministic. Immutable after construction.
class Digraph {
public:
    Digraph() = default;

    // Normalizes the arc set (sort + collapse duplicates). Throws
    // std::invalid_argument on a self-loop or an out-of-range endpoint,
    // naming the offending arc.
    Digraph(int n, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const noexcept { return n_; }
    long long arc_count() const noexcept { return static_cast<long long>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const noexcept { return arcs_; }
    const std::vector<int>& out_neighbours(int v) const { return out_adj_.at(v); }
    int out_degree(int v) const { return static_cast<int>(out_adj_.at(v).size()); }
    const std::vector<std::vector<int>>& out_adjacency() const noexcept { return out_adj_; }

    // Built on demand; callers that need it repeatedly should keep the result.
    std::vector<std::vector<int>> in_adjacency() const;

    bool has_arc(int u, int v) const;

    // True iff exactly one of (u,v),(v,u) is present for every pair.
    bool is_tournament() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_adj_;
};

// Rotational tournament on odd q: arc i -> (i+s) mod q for s = 1..(q-1)/2.
// Every out-degree is (q-1)/2. Throws on even q.
Digraph regular_tournament(int q);

// Seedable random tournament: each pair's orientation is an independent
// fair coin. Identical (n, seed) gives identical output everywhere.
Digraph random_tournament(int n, std::uint64_t seed);

// Each ordered pair (u,v), u != v, is an arc independently with
// probability p. Throws if p is outside [0, 1].
Digraph random_digraph(int n, double p, std::uint64_t seed);

// Edge-list text format: first non-comment line is the vertex count, each
// following non-empty line is "u v". Lines starting with '#' are comments.
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list(const std::string& text);
std::string write_edge_list(const Digraph& d);

}  // namespace majcol
