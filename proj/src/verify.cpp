#include "majcol/verify.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

namespace majcol {

namespace {

void require_total(const Digraph& d, const Colouring& c) {
    if (static_cast<int>(c.colour.size()) != d.vertex_count())
        throw std::invalid_argument("colouring does not cover the vertex set");
}

}  // namespace

int monochrome_out_count(const Digraph& d, const Colouring& c, int v) {
    require_total(d, c);
    const int mine = c.colour.at(v);
    int count = 0;
    for (int w : d.out_neighbours(v))
        if (c.colour[w] == mine) ++count;
    return count;
}

std::vector<Violation> check_fraction(const Digraph& d, const Colouring& c, long long num,
                                      long long den) {
    if (num <= 0 || den < num)
        throw std::invalid_argument("threshold must satisfy 0 < num <= den");
    require_total(d, c);
    std::vector<Violation> out;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const int mine = c.colour[v];
        int count = 0;
        for (int w : d.out_neighbours(v))
            if (c.colour[w] == mine) ++count;
        const long long deg = d.out_degree(v);
        if (count * den > num * deg)
            out.push_back({v, count, static_cast<int>(deg),
                           static_cast<int>(num * deg / den)});
    }
    return out;
}

std::vector<Violation> check_majority(const Digraph& d, const Colouring& c, int k) {
    if (k < 2) throw std::invalid_argument("majority parameter k must be >= 2");
    return check_fraction(d, c, 1, k);
}

std::vector<int> bad_vertices(const Digraph& t, const Colouring& c) {
    require_total(t, c);
    std::vector<int> out;
    for (int v = 0; v < t.vertex_count(); ++v) {
        const int mine = c.colour[v];
        int count = 0;
        for (int w : t.out_neighbours(v))
            if (c.colour[w] == mine) ++count;
        if (2LL * count > t.out_degree(v)) out.push_back(v);
    }
    return out;
}

std::map<int, std::vector<int>> dyadic_classes(const Digraph& d) {
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const unsigned deg = static_cast<unsigned>(d.out_degree(v));
        if (deg == 0) continue;
        classes[std::bit_width(deg)].push_back(v);
    }
    return classes;
}

double chernoff_bad_bound(long long d) {
    if (d < 1) throw std::invalid_argument("out-degree must be >= 1");
    return std::exp(-static_cast<double>(d) / 36.0);
}

double dyadic_chernoff_sum() {
    double sum = 0.0;
    for (int i = 1; i <= 10; ++i)
        sum += std::ldexp(1.0, i + 1) * std::exp(-std::ldexp(1.0, i - 1) / 36.0);
    return sum;
}

double geometric_tail() {
    // sum_{i >= 11} 2^(-i+8): first term 2^-3, ratio 1/2.
    const double first = std::ldexp(1.0, 8 - 11);
    return first / (1.0 - 0.5);
}

double expected_bad_upper_bound() {
    constexpr double low_degree_cap = 205.0;
    if (dyadic_chernoff_sum() > low_degree_cap)
        throw std::logic_error("dyadic class sum exceeds its 205 cap");
    return low_degree_cap + geometric_tail();
}

bool respects_lists(const Colouring& c, const ListAssignment& l) {
    if (c.colour.size() != l.lists.size())
        throw std::invalid_argument("colouring and list assignment differ in size");
    for (std::size_t v = 0; v < c.colour.size(); ++v)
        if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), c.colour[v]))
            return false;
    return true;
}

namespace {

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

Colouring read_colouring(std::istream& in, int n) {
    Colouring c;
    c.colour.assign(n, -1);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        const auto toks = tokens(line);
        if (toks.size() != 2) throw ParseError(line_no, "expected 'v c'");
        const int v = parse_int(toks[0], line_no, "vertex");
        const int col = parse_int(toks[1], line_no, "colour");
        if (v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
        if (col < 0) throw ParseError(line_no, "colour must be non-negative");
        if (c.colour[v] >= 0) throw ParseError(line_no, "vertex coloured twice");
        c.colour[v] = col;
        c.palette_size = std::max(c.palette_size, col + 1);
    }
    for (int v = 0; v < n; ++v)
        if (c.colour[v] < 0)
            throw ParseError(line_no == 0 ? 1 : line_no,
                             "vertex " + std::to_string(v) + " has no colour");
    return c;
}

Colouring read_colouring(const std::string& text, int n) {
    std::istringstream in(text);
    return read_colouring(in, n);
}

std::string write_colouring(const Colouring& c) {
    std::string out;
    for (std::size_t v = 0; v < c.colour.size(); ++v) {
        out += std::to_string(v);
        out.push_back(' ');
        out += std::to_string(c.colour[v]);
        out.push_back('\n');
    }
    return out;
}

ListAssignment read_lists(std::istream& in, int n) {
    ListAssignment l;
    l.lists.assign(n, {});
    std::vector<bool> seen(n, false);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        const auto toks = tokens(line);
        if (toks.size() < 2) throw ParseError(line_no, "expected 'v c1 c2 ...'");
        const int v = parse_int(toks[0], line_no, "vertex");
        if (v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
        if (seen[v]) throw ParseError(line_no, "vertex listed twice");
        seen[v] = true;
        std::vector<int> colours;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const int col = parse_int(toks[i], line_no, "colour");
            if (col < 0) throw ParseError(line_no, "colour must be non-negative");
            colours.push_back(col);
        }
        std::sort(colours.begin(), colours.end());
        if (std::adjacent_find(colours.begin(), colours.end()) != colours.end())
            throw ParseError(line_no, "duplicate colour in list");
        if (l.list_size == 0)
            l.list_size = static_cast<int>(colours.size());
        else if (static_cast<int>(colours.size()) != l.list_size)
            throw ParseError(line_no, "lists must all have the same size");
        l.lists[v] = std::move(colours);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError(line_no == 0 ? 1 : line_no,
                             "vertex " + std::to_string(v) + " has no list");
    return l;
}

ListAssignment read_lists(const std::string& text, int n) {
    std::istringstream in(text);
    return read_lists(in, n);
}

std::string write_lists(const ListAssignment& l) {
    std::string out;
    for (std::size_t v = 0; v < l.lists.size(); ++v) {
        out += std::to_string(v);
        for (int c : l.lists[v]) {
            out.push_back(' ');
            out += std::to_string(c);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace majcol
