#pragma once

// Graph-side characterizations of P_G: full dimension, the Fano property,
// smoothness through homogeneous cycles and the distance inequality, the
// certificate hyperplane for non-simplicial P_G, and the symmetric-graph
// test through even cycles and blocks.

#include "digraph.hpp"
#include "lattice_polytope.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanograph {

class disconnected_graph_error : public std::invalid_argument {
public:
    disconnected_graph_error() : std::invalid_argument("the underlying graph is not connected") {}
};

/// Raised when an operation needs every arrow on a directed cycle.
class standing_assumption_error : public std::invalid_argument {
public:
    explicit standing_assumption_error(const std::string& what) : std::invalid_argument(what) {}
};

inline void require_connected(const Digraph& g) {
    if (!g.is_connected()) throw disconnected_graph_error();
}

/// P_G = conv{ e_i - e_j : (i,j) in A(G) }, in the coordinates of Z^(d-1)
/// obtained by dropping x_d.
inline LatticePolytope polytope_of(const Digraph& g) {
    require_connected(g);
    if (g.arrows().empty()) throw std::invalid_argument("polytope_of: graph has no arrows");
    std::vector<LatticeVector> pts;
    pts.reserve(g.arrow_count());
    for (const Arrow& a : g.arrows()) pts.push_back(rho(a, g.vertex_count()));
    return hull(project_to_sum_zero_lattice(pts));
}

/// dim P_G = d - 1, decided on the graph: some cycle is nonhomogeneous.
inline bool spans_full_dimension(const Digraph& g) {
    require_connected(g);
    return has_nonhomogeneous_cycle(g);
}

/// P_G is a terminal Gorenstein Fano polytope of dimension d - 1, decided on
/// the graph: every arrow lies on a directed cycle.
inline bool is_fano_graph(const Digraph& g) {
    require_connected(g);
    return every_arrow_in_directed_cycle(g);
}

/// mu(i_a) - mu(i_b) <= dist(i_a, i_b) for every ordered pair of cycle
/// vertices; infinite distances satisfy it trivially.
inline bool satisfies_distance_inequality(const OrientedCycle& c, const DistanceTable& dist) {
    const MuAssignment m = mu(c);
    for (std::size_t a = 0; a < c.length(); ++a) {
        for (std::size_t b = 0; b < c.length(); ++b) {
            if (a == b) continue;
            Distance dab = dist.at(m.vertices[a], m.vertices[b]);
            if (dab && m.values[a] - m.values[b] > *dab) return false;
        }
    }
    return true;
}

/// Homogeneous cycle satisfying the distance inequality, if any. Search order:
/// increasing length, then smallest max(mu), then enumeration order. Requires
/// every arrow on a directed cycle (standing_assumption_error otherwise).
inline std::optional<OrientedCycle> find_obstruction(const Digraph& g) {
    require_connected(g);
    if (!every_arrow_in_directed_cycle(g)) {
        throw standing_assumption_error("find_obstruction: some arrow does not lie on a directed cycle");
    }
    const DistanceTable dist(g);
    std::optional<OrientedCycle> best;
    int best_height = 0;
    for_each_oriented_cycle(g, [&](const OrientedCycle& c) {
        if (best && c.length() > best->length()) return false;
        if (!is_homogeneous(c) || !satisfies_distance_inequality(c, dist)) return true;
        const int h = mu(c).max();
        if (!best || h < best_height) {
            best = c;
            best_height = h;
        }
        return true;
    });
    return best;
}

/// Coefficients a in Z^d with a = mu on the cycle and
/// a_k = max({a_{i_j} - dist(i_j, k)} ∪ {0}) elsewhere, as the hyperplane
/// <a, x> = 1. Every rho(e) satisfies <a, rho(e)> <= 1 with equality on the
/// cycle arrows; the restriction to the sum-zero hyperplane supports P_G.
/// Throws std::invalid_argument if containment fails (c is no obstruction).
inline Hyperplane witness_hyperplane(const Digraph& g, const OrientedCycle& c) {
    const MuAssignment m = mu(c);
    const int d = g.vertex_count();
    const DistanceTable dist(g);
    std::vector<long long> a(d + 1, 0);
    std::vector<bool> on_cycle(d + 1, false);
    for (std::size_t j = 0; j < m.vertices.size(); ++j) {
        a[m.vertices[j]] = m.values[j];
        on_cycle[m.vertices[j]] = true;
    }
    for (Vertex k = 1; k <= d; ++k) {
        if (on_cycle[k]) continue;
        long long best = 0;
        for (std::size_t j = 0; j < m.vertices.size(); ++j) {
            if (Distance dj = dist.at(m.vertices[j], k)) best = std::max<long long>(best, m.values[j] - *dj);
        }
        a[k] = best;
    }
    for (const Arrow& e : g.arrows()) {
        if (a[e.tail] - a[e.head] > 1) {
            throw std::invalid_argument("witness_hyperplane: arrow " + to_string(e) + " violates <a, rho(e)> <= 1; " +
                                        to_string(c) + " is not an obstruction");
        }
    }
    for (const Arrow& e : c.arrows()) {
        if (a[e.tail] - a[e.head] != 1) {
            throw std::invalid_argument("witness_hyperplane: cycle arrow " + to_string(e) + " is off the hyperplane");
        }
    }
    Hyperplane h;
    h.normal.reserve(d);
    for (Vertex k = 1; k <= d; ++k) h.normal.emplace_back(a[k]);
    h.offset = 1;
    return h;
}

/// The functional a on Z^d restricted to the sum-zero hyperplane, in the
/// coordinates of Z^(d-1): a_i - a_d.
inline LatticeVector project_functional(const LatticeVector& a) {
    LatticeVector out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) out.push_back(a[i] - a.back());
    return out;
}

struct SmoothnessVerdict {
    bool smooth = true;
    std::optional<OrientedCycle> obstruction;
    std::optional<Hyperplane> witness;  // Z^d coordinates

    friend bool operator==(const SmoothnessVerdict&, const SmoothnessVerdict&) = default;
};

inline SmoothnessVerdict smoothness_verdict(const Digraph& g) {
    SmoothnessVerdict v;
    v.obstruction = find_obstruction(g);
    v.smooth = !v.obstruction;
    if (v.obstruction) v.witness = witness_hyperplane(g, *v.obstruction);
    return v;
}

// ---------------------------------------------------------------------------
// Symmetric graphs

/// Even cycle (i_1, ..., i_2l) of a symmetric graph with the hyperplane
/// x_{i_2} + x_{i_4} + ... + x_{i_2l} = 1 and the 2l points
/// rho((i_{j+1}, i_j)) for odd j, rho((i_j, i_{j+1})) for even j.
struct EvenCycleFace {
    std::vector<Vertex> cycle;
    Hyperplane hyperplane;  // Z^d coordinates
    std::vector<Arrow> arrows;
    std::vector<LatticeVector> points;  // Z^d coordinates
};

inline EvenCycleFace even_cycle_face(const Digraph& g, const std::vector<Vertex>& cycle) {
    const std::size_t len = cycle.size();
    if (len < 4 || len % 2) throw std::invalid_argument("even_cycle_face: need an even cycle of length >= 4");
    EvenCycleFace f;
    f.cycle = cycle;
    f.hyperplane.normal.assign(g.vertex_count(), 0);
    f.hyperplane.offset = 1;
    for (std::size_t j = 1; j <= len; ++j) {
        Vertex cur = cycle[j - 1], nxt = cycle[j % len];
        Arrow a = (j % 2 == 1) ? Arrow{nxt, cur} : Arrow{cur, nxt};
        if (!g.has_arrow(a.tail, a.head)) throw std::invalid_argument("even_cycle_face: missing arrow " + to_string(a));
        f.arrows.push_back(a);
        f.points.push_back(rho(a, g.vertex_count()));
        if (j % 2 == 0) f.hyperplane.normal[cur - 1] = 1;
    }
    return f;
}

/// Every block of the underlying graph is an edge or an odd cycle.
inline bool blocks_are_edges_or_odd_cycles(const Digraph& g) {
    for (const Block& b : two_connected_components(g)) {
        if (b.kind == BlockKind::other) return false;
    }
    return true;
}

/// For a connected symmetric graph: smooth iff no even cycle.
inline bool symmetric_is_smooth(const Digraph& g) {
    require_connected(g);
    if (!g.is_symmetric()) throw std::invalid_argument("symmetric_is_smooth: graph is not symmetric");
    return !has_even_cycle(g);
}

// ---------------------------------------------------------------------------
// Combined report

struct GraphVerdict {
    bool spans_full_dimension = false;
    bool every_arrow_in_directed_cycle = false;
    std::optional<SmoothnessVerdict> smoothness;  // only under the standing assumption

    friend bool operator==(const GraphVerdict&, const GraphVerdict&) = default;
};

struct FullReport {
    Digraph graph;
    LatticePolytope polytope;
    ClassificationReport geometric;
    GraphVerdict graph_verdict;
    bool dimension_agrees = false;
    bool fano_agrees = false;
    std::optional<bool> smoothness_agrees;
    bool agreement = false;
};

/// Runs the graph-side and the geometric pipelines and compares them.
inline FullReport full_report(const Digraph& g) {
    require_connected(g);
    FullReport r;
    r.graph = g;
    r.polytope = polytope_of(g);
    r.geometric = classify(r.polytope);
    r.graph_verdict.spans_full_dimension = has_nonhomogeneous_cycle(g);
    r.graph_verdict.every_arrow_in_directed_cycle = every_arrow_in_directed_cycle(g);
    if (r.graph_verdict.every_arrow_in_directed_cycle) r.graph_verdict.smoothness = smoothness_verdict(g);

    const std::size_t full = static_cast<std::size_t>(g.vertex_count() - 1);
    const auto& geo = r.geometric;
    r.dimension_agrees = r.graph_verdict.spans_full_dimension == (geo.dim == full);
    r.fano_agrees = r.graph_verdict.every_arrow_in_directed_cycle ==
                    (geo.is_fano && geo.is_terminal && geo.is_gorenstein && geo.dim == full);
    if (r.graph_verdict.smoothness) {
        const bool s = r.graph_verdict.smoothness->smooth;
        r.smoothness_agrees = s == geo.is_simplicial && s == geo.is_smooth;
    }
    r.agreement = r.dimension_agrees && r.fano_agrees && r.smoothness_agrees.value_or(true);
    return r;
}

}  // namespace fanograph
