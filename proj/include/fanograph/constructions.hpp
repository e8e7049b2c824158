#pragma once

// Named graph families and reference polytopes: directed and symmetric
// cycles, pseudo del Pezzo graphs, wedges, the G_{m,p,q} family, poset
// graphs, del Pezzo type polytopes, and the split builder that realizes a
// product of intervals, projective spaces and (pseudo) del Pezzo factors by a
// wedge of graphs.

#include "digraph.hpp"
#include "fano_criteria.hpp"
#include "graph_io.hpp"
#include "lattice_polytope.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fanograph {

/// 1 -> 2 -> ... -> n -> 1. P_G is the simplex of P^(n-1).
inline Digraph directed_cycle_graph(int n) {
    if (n < 2) throw std::invalid_argument("directed_cycle_graph: n >= 2 required");
    std::vector<Arrow> a;
    for (int i = 1; i <= n; ++i) a.push_back({i, i % n + 1});
    return Digraph::from_arrows(n, a);
}

/// Both arrows on each edge of the n-cycle. Even n is allowed and gives a
/// non-simplicial polytope.
inline Digraph symmetric_cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("symmetric_cycle_graph: n >= 3 required");
    std::vector<Arrow> a;
    for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        a.push_back({i, j});
        a.push_back({j, i});
    }
    return Digraph::from_arrows(n, a);
}

/// A single symmetric edge; P_G = [-1, 1].
inline Digraph symmetric_edge_graph() { return Digraph::from_arrows(2, {{1, 2}, {2, 1}}); }

/// Symmetric (2k+1)-cycle without the arrow (2,1).
inline Digraph pseudo_del_pezzo_graph(int k) {
    if (k < 1) throw std::invalid_argument("pseudo_del_pezzo_graph: k >= 1 required");
    Digraph g = symmetric_cycle_graph(2 * k + 1);
    std::vector<Arrow> a;
    for (const Arrow& e : g.arrows()) {
        if (!(e.tail == 2 && e.head == 1)) a.push_back(e);
    }
    return Digraph::from_arrows(2 * k + 1, a);
}

/// Disjoint union of g1 and g2 with v1 and v2 identified. g1 keeps its
/// labels; the other vertices of g2 follow in increasing order.
inline Digraph wedge(const Digraph& g1, Vertex v1, const Digraph& g2, Vertex v2) {
    if (v1 < 1 || v1 > g1.vertex_count() || v2 < 1 || v2 > g2.vertex_count()) {
        throw std::invalid_argument("wedge: gluing vertex out of range");
    }
    const int d1 = g1.vertex_count();
    std::vector<Vertex> relabel(g2.vertex_count() + 1);
    int next = d1;
    for (Vertex v = 1; v <= g2.vertex_count(); ++v) relabel[v] = (v == v2) ? v1 : ++next;
    std::vector<Arrow> a = g1.arrows();
    for (const Arrow& e : g2.arrows()) a.push_back({relabel[e.tail], relabel[e.head]});
    return Digraph::from_arrows(next, a);
}

/// The G_{m,p,q} family: a directed (2m+2)-cycle with two symmetric chains
/// of lengths p and q joining the vertices 1 and m+2.
struct GmpqInstance {
    int m = 0, p = 0, q = 0;
    Digraph graph;
    /// "p+q odd and m >= q > 0" or "m >= p and q = 0".
    bool predicted_smooth = false;
    /// 2m+p+q-1, the closed-form dimension attached to the family.
    std::size_t formula_dimension = 0;
};

inline bool gmpq_predicted_smooth(int m, int p, int q) {
    return ((p + q) % 2 == 1 && m >= q && q > 0) || (m >= p && q == 0);
}

inline GmpqInstance g_mpq(int m, int p, int q) {
    if (m < 1) throw std::invalid_argument("g_mpq: m >= 1 required");
    if (q < 0 || p < q) throw std::invalid_argument("g_mpq: p >= q >= 0 required");
    std::vector<Arrow> a;
    for (int k = 1; k <= 2 * m + 1; ++k) a.push_back({k, k + 1});
    a.push_back({2 * m + 2, 1});
    auto chain_vertex = [&](int k, int len, int offset) {
        if (k == 1) return 1;
        if (k == len + 1) return m + 2;
        return offset + k;
    };
    int top = 2 * m + 2;
    for (int k = 1; k <= p; ++k) {
        int u = chain_vertex(k, p, 2 * m + 1), v = chain_vertex(k + 1, p, 2 * m + 1);
        a.push_back({u, v});
        a.push_back({v, u});
        top = std::max({top, u, v});
    }
    for (int l = 1; l <= q; ++l) {
        int u = chain_vertex(l, q, 2 * m + p), v = chain_vertex(l + 1, q, 2 * m + p);
        a.push_back({u, v});
        a.push_back({v, u});
        top = std::max({top, u, v});
    }
    GmpqInstance g;
    g.m = m;
    g.p = p;
    g.q = q;
    g.graph = Digraph::from_arrows(top, a);
    g.predicted_smooth = gmpq_predicted_smooth(m, p, q);
    g.formula_dimension = static_cast<std::size_t>(2 * m + p + q - 1);
    return g;
}

/// Graph of a poset on y_1..y_d from its cover pairs (i, j) = "y_j covers y_i",
/// with the adjoined bottom and top merged into vertex d+1. Throws
/// std::invalid_argument when the pairs are not the cover relation of a poset.
inline Digraph poset_graph(int d, const std::vector<std::pair<int, int>>& covers) {
    if (d < 1) throw std::invalid_argument("poset_graph: at least one element required");
    std::vector<std::vector<bool>> rel(d + 1, std::vector<bool>(d + 1, false));
    for (auto [i, j] : covers) {
        if (i < 1 || j < 1 || i > d || j > d) throw std::invalid_argument("poset_graph: element out of range");
        if (i == j) throw std::invalid_argument("poset_graph: an element cannot cover itself");
        rel[i][j] = true;
    }
    // Transitive closure; a cycle makes some element strictly below itself.
    auto below = rel;
    for (int k = 1; k <= d; ++k) {
        for (int i = 1; i <= d; ++i) {
            if (!below[i][k]) continue;
            for (int j = 1; j <= d; ++j) {
                if (below[k][j]) below[i][j] = true;
            }
        }
    }
    for (int i = 1; i <= d; ++i) {
        if (below[i][i]) throw std::invalid_argument("poset_graph: cover pairs contain a cycle");
    }
    for (auto [i, j] : covers) {
        for (int k = 1; k <= d; ++k) {
            if (below[i][k] && below[k][j]) {
                throw std::invalid_argument("poset_graph: (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is not a cover pair");
            }
        }
    }
    const Vertex merged = d + 1;
    std::vector<Arrow> a;
    for (auto [i, j] : covers) a.push_back({i, j});
    for (int i = 1; i <= d; ++i) {
        bool has_lower = false, has_upper = false;
        for (int k = 1; k <= d; ++k) {
            has_lower = has_lower || rel[k][i];
            has_upper = has_upper || rel[i][k];
        }
        if (!has_lower) a.push_back({merged, i});
        if (!has_upper) a.push_back({i, merged});
    }
    return Digraph::from_arrows(d + 1, a);
}

// ---------------------------------------------------------------------------
// Reference polytopes

inline LatticePolytope interval_polytope() { return hull({LatticeVector{-1}, LatticeVector{1}}); }

/// conv(e_1, ..., e_n, -(e_1 + ... + e_n)), the polytope of P^n.
inline LatticePolytope projective_space_polytope(int n) {
    if (n < 1) throw std::invalid_argument("projective_space_polytope: n >= 1 required");
    std::vector<LatticeVector> pts;
    for (int i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    pts.push_back(LatticeVector(n, -1));
    return hull(pts);
}

namespace detail {

inline std::vector<LatticeVector> del_pezzo_points(int k, bool both_signs_of_sum) {
    if (k < 1) throw std::invalid_argument("del Pezzo polytopes need k >= 1");
    const int n = 2 * k;
    std::vector<LatticeVector> pts;
    for (int i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        pts.push_back(e);
        e[i] = -1;
        pts.push_back(e);
    }
    pts.push_back(LatticeVector(n, 1));
    if (both_signs_of_sum) pts.push_back(LatticeVector(n, -1));
    return pts;
}

}  // namespace detail

/// conv(±e_1, ..., ±e_2k, ±(e_1 + ... + e_2k)).
inline LatticePolytope del_pezzo_polytope(int k) { return hull(detail::del_pezzo_points(k, true)); }

/// conv(±e_1, ..., ±e_2k, e_1 + ... + e_2k).
inline LatticePolytope pseudo_del_pezzo_polytope(int k) { return hull(detail::del_pezzo_points(k, false)); }

// ---------------------------------------------------------------------------
// Splits

enum class FactorKind { interval, projective_space, del_pezzo, pseudo_del_pezzo };

struct SplitFactor {
    FactorKind kind;
    int parameter = 0;  // n for P^n, k for (pseudo) del Pezzo of dimension 2k
};

inline Digraph factor_graph(const SplitFactor& f) {
    switch (f.kind) {
        case FactorKind::interval: return symmetric_edge_graph();
        case FactorKind::projective_space: return directed_cycle_graph(f.parameter + 1);
        case FactorKind::del_pezzo: return symmetric_cycle_graph(2 * f.parameter + 1);
        case FactorKind::pseudo_del_pezzo: return pseudo_del_pezzo_graph(f.parameter);
    }
    throw std::logic_error("unknown factor kind");
}

inline LatticePolytope factor_polytope(const SplitFactor& f) {
    switch (f.kind) {
        case FactorKind::interval: return interval_polytope();
        case FactorKind::projective_space: return projective_space_polytope(f.parameter);
        case FactorKind::del_pezzo: return del_pezzo_polytope(f.parameter);
        case FactorKind::pseudo_del_pezzo: return pseudo_del_pezzo_polytope(f.parameter);
    }
    throw std::logic_error("unknown factor kind");
}

/// Wedge of the factor graphs, all glued at vertex 1. Its polytope splits into
/// the factor polytopes.
inline Digraph split_graph(const std::vector<SplitFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("split_graph: no factors");
    Digraph g = factor_graph(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) g = wedge(g, 1, factor_graph(factors[i]), 1);
    return g;
}

/// Free sum of the reference factor polytopes.
inline LatticePolytope split_polytope(const std::vector<SplitFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("split_polytope: no factors");
    LatticePolytope p = factor_polytope(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) p = free_sum(p, factor_polytope(factors[i]));
    return p;
}

// ---------------------------------------------------------------------------
// Family specifiers: cycle:n, symcycle:n, pdp:k, gmpq:m,p,q, wedge:A+B+...,
// poset:<file>

class family_spec_error : public std::invalid_argument {
public:
    explicit family_spec_error(const std::string& what) : std::invalid_argument(what) {}
};

struct FamilyMember {
    std::string spec;
    Digraph graph;
    std::optional<bool> predicted_smooth;
    std::optional<GmpqInstance> gmpq;
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s, std::string_view spec) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        int v = 0;
        if (tok.empty() || !parse_int(tok, v)) throw family_spec_error("bad integer in family spec '" + std::string(spec) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline Digraph read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw family_spec_error("cannot open poset file " + path);
    auto f = read_pair_file(in);
    return poset_graph(f.count, f.pairs);
}

}  // namespace detail

inline FamilyMember parse_family_spec(std::string_view spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos) throw family_spec_error("family spec needs 'name:args', got '" + std::string(spec) + "'");
    const std::string_view name = spec.substr(0, colon);
    const std::string_view args = spec.substr(colon + 1);
    FamilyMember fm;
    fm.spec = std::string(spec);
    auto ints = [&](std::size_t count) {
        auto v = detail::parse_int_list(args, spec);
        if (v.size() != count) throw family_spec_error("family '" + std::string(name) + "' takes " + std::to_string(count) + " integer(s)");
        return v;
    };
    try {
        if (name == "cycle") {
            fm.graph = directed_cycle_graph(ints(1)[0]);
            fm.predicted_smooth = true;
        } else if (name == "symcycle") {
            int n = ints(1)[0];
            fm.graph = symmetric_cycle_graph(n);
            fm.predicted_smooth = n % 2 == 1;
        } else if (name == "pdp") {
            fm.graph = pseudo_del_pezzo_graph(ints(1)[0]);
            fm.predicted_smooth = true;
        } else if (name == "gmpq") {
            auto v = ints(3);
            GmpqInstance g = g_mpq(v[0], v[1], v[2]);
            fm.graph = g.graph;
            fm.predicted_smooth = g.predicted_smooth;
            fm.gmpq = std::move(g);
        } else if (name == "wedge") {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            for (;;) {
                std::size_t plus = args.find('+', start);
                parts.push_back(args.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
                if (plus == std::string_view::npos) break;
                start = plus + 1;
            }
            if (parts.size() < 2) throw family_spec_error("wedge needs at least two '+'-separated specs");
            fm.graph = parse_family_spec(parts.front()).graph;
            for (std::size_t i = 1; i < parts.size(); ++i) fm.graph = wedge(fm.graph, 1, parse_family_spec(parts[i]).graph, 1);
        } else if (name == "poset") {
            if (args.empty()) throw family_spec_error("poset needs a file path");
            fm.graph = detail::read_poset_file(std::string(args));
        } else {
            throw family_spec_error("unknown family '" + std::string(name) + "'");
        }
    } catch (const family_spec_error&) {
        throw;
    } catch (const parse_error& e) {
        throw family_spec_error(std::string("poset file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw family_spec_error(e.what());
    }
    return fm;
}

}  // namespace fanograph
