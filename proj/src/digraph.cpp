#include "majcol/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

#include "majcol/rng.hpp"

namespace majcol {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
    }
    if (!std::is_sorted(arcs.begin(), arcs.end())) std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);
    std::vector<int> degree(n_, 0);
    for (const auto& [u, v] : arcs_) ++degree[u];
    out_adj_.resize(n_);
    for (int v = 0; v < n_; ++v) out_adj_[v].reserve(degree[v]);
    for (const auto& [u, v] : arcs_) out_adj_[u].push_back(v);
}

std::vector<std::vector<int>> Digraph::in_adjacency() const {
    std::vector<std::vector<int>> in_adj(n_);
    for (const auto& [u, v] : arcs_) in_adj[v].push_back(u);
    return in_adj;
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

bool Digraph::is_tournament() const {
    const long long pairs = static_cast<long long>(n_) * (n_ - 1) / 2;
    if (arc_count() != pairs) return false;
    for (const auto& [u, v] : arcs_)
        if (u < v && has_arc(v, u)) return false;
    return true;
}

Digraph regular_tournament(int q) {
    if (q < 1 || q % 2 == 0)
        throw std::invalid_argument("regular tournament needs odd q >= 1, got " +
                                    std::to_string(q));
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(q) * (q - 1) / 2);
    for (int i = 0; i < q; ++i)
        for (int s = 1; s <= (q - 1) / 2; ++s) arcs.emplace_back(i, (i + s) % q);
    return Digraph(q, std::move(arcs));
}

Digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    auto g = seeded_rng(seed, rng_stream_tournament);
    // One bit per pair, 64 pairs per generator word. Scanning u < v in order
    // fills every out-list in ascending order, so the arc set comes out
    // canonical and the constructor's sort is a no-op.
    std::vector<std::vector<int>> out(n);
    std::uint64_t bits = 0;
    int available = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (available == 0) {
                bits = g();
                available = 64;
            }
            if (bits & 1)
                out[u].push_back(v);
            else
                out[v].push_back(u);
            bits >>= 1;
            --available;
        }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v : out[u]) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("arc probability must lie in [0, 1]");
    auto g = seeded_rng(seed, rng_stream_digraph);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng_unit(g) < p) arcs.emplace_back(u, v);
        }
    return Digraph(n, std::move(arcs));
}

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
    return value;
}

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> arcs;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        const auto toks = tokens(line);
        if (n < 0) {
            if (toks.size() != 1) throw ParseError(line_no, "expected vertex count");
            n = parse_int(toks[0], line_no, "vertex count");
            if (n < 0) throw ParseError(line_no, "vertex count must be non-negative");
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, "expected 'u v'");
        const int u = parse_int(toks[0], line_no, "vertex");
        const int v = parse_int(toks[1], line_no, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "arc endpoint out of range");
        if (u == v) throw ParseError(line_no, "self-loop " + toks[0] + " " + toks[1]);
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
    return Digraph(n, std::move(arcs));
}

Digraph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string write_edge_list(const Digraph& d) {
    std::string out = std::to_string(d.vertex_count());
    out.push_back('\n');
    for (const auto& [u, v] : d.arcs()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

}  // namespace majcol
