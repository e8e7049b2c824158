#pragma once

// Plain-text graph format:
//
//     # comment lines start with '#'
//     d
//     i j        (one arrow per line, 1-based)
//
// Blank lines are ignored and duplicate arrows collapse.

#include "digraph.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fanograph {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool parse_int(std::string_view tok, int& out) {
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

/// Header count followed by integer pairs, shared by graph and poset files.
struct PairFile {
    int count = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::size_t> lines;
};

inline PairFile read_pair_file(std::istream& in) {
    PairFile f;
    bool have_header = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (!have_header) {
            if (toks.size() != 1 || !parse_int(toks[0], f.count)) {
                throw parse_error(lineno, "expected the vertex count on its own line");
            }
            if (f.count < 1) throw parse_error(lineno, "vertex count must be positive");
            have_header = true;
            continue;
        }
        int i = 0, j = 0;
        if (toks.size() != 2 || !parse_int(toks[0], i) || !parse_int(toks[1], j)) {
            throw parse_error(lineno, "expected two integers 'i j', got '" + line + "'");
        }
        f.pairs.emplace_back(i, j);
        f.lines.push_back(lineno);
    }
    if (!have_header) throw parse_error(lineno, "missing vertex count");
    return f;
}

}  // namespace detail

inline Digraph parse_graph(std::istream& in) {
    auto f = detail::read_pair_file(in);
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < f.pairs.size(); ++k) {
        auto [i, j] = f.pairs[k];
        if (i < 1 || j < 1 || i > f.count || j > f.count) {
            throw parse_error(f.lines[k], "vertex out of range 1.." + std::to_string(f.count));
        }
        if (i == j) throw parse_error(f.lines[k], "loop arrow (" + std::to_string(i) + "," + std::to_string(i) + ")");
        arrows.push_back({i, j});
    }
    return Digraph::from_arrows(f.count, arrows);
}

inline Digraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline Digraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

inline std::string format_graph(const Digraph& g) {
    std::string s = std::to_string(g.vertex_count()) + "\n";
    for (const Arrow& a : g.arrows()) s += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return s;
}

}  // namespace fanograph
