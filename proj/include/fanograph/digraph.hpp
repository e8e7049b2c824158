#pragma once

// Finite directed graphs and the graph-theoretic algorithms behind the
// smoothness criteria: strong components, directed distances, oriented cycle
// enumeration with level functions, and block decomposition.
//
// Vertices are 1-based everywhere in the public interface.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fanograph {

using Vertex = int;

struct Arrow {
    Vertex tail;
    Vertex head;

    auto operator<=>(const Arrow&) const = default;
};

inline Arrow reversed(Arrow a) { return {a.head, a.tail}; }

inline std::string to_string(Arrow a) { return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")"; }

/// Directed graph on {1, ..., d} without loops; both (i,j) and (j,i) may be
/// present. Immutable after construction.
class Digraph {
public:
    Digraph() = default;

    /// Duplicate arrows collapse. Throws std::invalid_argument on loops,
    /// out-of-range ids, or d < 1.
    static Digraph from_arrows(int vertex_count, std::span<const Arrow> arrows) {
        if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
        Digraph g;
        g.d_ = vertex_count;
        g.arrows_.assign(arrows.begin(), arrows.end());
        for (const Arrow& a : g.arrows_) {
            if (a.tail < 1 || a.tail > vertex_count || a.head < 1 || a.head > vertex_count) {
                throw std::invalid_argument("arrow " + to_string(a) + " has a vertex outside 1.." +
                                            std::to_string(vertex_count));
            }
            if (a.tail == a.head) throw std::invalid_argument("loop arrow " + to_string(a) + " is not allowed");
        }
        std::sort(g.arrows_.begin(), g.arrows_.end());
        g.arrows_.erase(std::unique(g.arrows_.begin(), g.arrows_.end()), g.arrows_.end());
        g.out_.assign(vertex_count + 1, {});
        g.in_.assign(vertex_count + 1, {});
        g.adjacent_.assign(vertex_count + 1, {});
        g.matrix_.assign(static_cast<std::size_t>(vertex_count + 1) * (vertex_count + 1), false);
        for (const Arrow& a : g.arrows_) {
            g.out_[a.tail].push_back(a.head);
            g.in_[a.head].push_back(a.tail);
            g.adjacent_[a.tail].push_back(a.head);
            g.adjacent_[a.head].push_back(a.tail);
            g.matrix_[g.index(a.tail, a.head)] = true;
        }
        for (auto& nb : g.adjacent_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        return g;
    }

    static Digraph from_arrows(int vertex_count, std::initializer_list<Arrow> arrows) {
        return from_arrows(vertex_count, std::span<const Arrow>(arrows.begin(), arrows.size()));
    }

    static Digraph from_arrows(int vertex_count, const std::vector<Arrow>& arrows) {
        return from_arrows(vertex_count, std::span<const Arrow>(arrows));
    }

    int vertex_count() const { return d_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t arrow_count() const { return arrows_.size(); }

    bool has_arrow(Vertex i, Vertex j) const {
        if (i < 1 || j < 1 || i > d_ || j > d_) return false;
        return matrix_[index(i, j)];
    }

    /// Sorted heads of arrows leaving v.
    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_.at(v); }
    /// Sorted neighbors of v in the underlying undirected simple graph.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacent_.at(v); }

    /// E(G): unordered pairs {i,j}, reported as i < j, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex i = 1; i <= d_; ++i) {
            for (Vertex j : adjacent_[i]) {
                if (i < j) e.emplace_back(i, j);
            }
        }
        return e;
    }

    /// Underlying undirected graph is connected.
    bool is_connected() const {
        if (d_ == 0) return false;
        std::vector<bool> seen(d_ + 1, false);
        std::vector<Vertex> stack{1};
        seen[1] = true;
        int reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adjacent_[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == d_;
    }

    /// Every arrow's reverse is present.
    bool is_symmetric() const {
        return std::all_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return has_arrow(a.head, a.tail); });
    }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.d_ == b.d_ && a.arrows_ == b.arrows_; }

private:
    std::size_t index(Vertex i, Vertex j) const { return static_cast<std::size_t>(i) * (d_ + 1) + j; }

    int d_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<Vertex>> out_, in_, adjacent_;
    std::vector<bool> matrix_;
};

// ---------------------------------------------------------------------------
// Strong components and directed distances

/// Component id per vertex (index 0 unused), Tarjan's algorithm.
inline std::vector<int> strongly_connected_components(const Digraph& g) {
    const int d = g.vertex_count();
    std::vector<int> index(d + 1, -1), low(d + 1, 0), comp(d + 1, -1);
    std::vector<bool> on_stack(d + 1, false);
    std::vector<Vertex> stack;
    int counter = 0, components = 0;
    std::function<void(Vertex)> visit = [&](Vertex v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (Vertex w : g.out_neighbors(v)) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            Vertex w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = components;
            } while (w != v);
            ++components;
        }
    };
    for (Vertex v = 1; v <= d; ++v) {
        if (index[v] < 0) visit(v);
    }
    return comp;
}

/// True iff each arrow (i,j) lies on a directed cycle, i.e. i and j share a
/// strong component.
inline bool every_arrow_in_directed_cycle(const Digraph& g) {
    auto comp = strongly_connected_components(g);
    return std::all_of(g.arrows().begin(), g.arrows().end(),
                       [&](const Arrow& a) { return comp[a.tail] == comp[a.head]; });
}

/// Arrows joining two different strong components.
inline std::vector<Arrow> arrows_off_directed_cycles(const Digraph& g) {
    auto comp = strongly_connected_components(g);
    std::vector<Arrow> out;
    for (const Arrow& a : g.arrows()) {
        if (comp[a.tail] != comp[a.head]) out.push_back(a);
    }
    return out;
}

/// Directed distance; std::nullopt encodes infinity.
using Distance = std::optional<int>;

inline std::vector<Distance> distances_from(const Digraph& g, Vertex source) {
    std::vector<Distance> dist(g.vertex_count() + 1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.out_neighbors(v)) {
            if (!dist[w]) {
                dist[w] = *dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

/// Length of a shortest directed path from i to j. Throws for i == j, where
/// the distance is undefined.
inline Distance distance(const Digraph& g, Vertex i, Vertex j) {
    if (i < 1 || j < 1 || i > g.vertex_count() || j > g.vertex_count()) {
        throw std::invalid_argument("distance: vertex out of range");
    }
    if (i == j) throw std::invalid_argument("distance: endpoints must differ");
    return distances_from(g, i)[j];
}

/// All-pairs BFS distances; at(i, i) is 0.
class DistanceTable {
public:
    explicit DistanceTable(const Digraph& g) : d_(g.vertex_count()) {
        rows_.reserve(d_ + 1);
        rows_.emplace_back();
        for (Vertex v = 1; v <= d_; ++v) rows_.push_back(distances_from(g, v));
    }

    Distance at(Vertex i, Vertex j) const { return rows_.at(i).at(j); }

private:
    int d_;
    std::vector<std::vector<Distance>> rows_;
};

// ---------------------------------------------------------------------------
// Oriented cycles

enum class Orientation { forward, backward };

/// Vertex-distinct cycle (i_1, ..., i_l) together with the arrow used for
/// every edge {i_j, i_{j+1}}: forward means (i_j, i_{j+1}), backward means
/// (i_{j+1}, i_j). Indices wrap modulo l.
class OrientedCycle {
public:
    OrientedCycle() = default;

    OrientedCycle(std::vector<Vertex> vertices, std::vector<Orientation> flags)
        : vertices_(std::move(vertices)), flags_(std::move(flags)) {
        if (vertices_.size() < 2) throw std::invalid_argument("a cycle has at least two vertices");
        if (flags_.size() != vertices_.size()) throw std::invalid_argument("one orientation flag per cycle edge");
        auto sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("cycle vertices must be distinct");
        }
        if (vertices_.size() == 2 &&
            (flags_[0] != Orientation::forward || flags_[1] != Orientation::forward)) {
            throw std::invalid_argument("a cycle of length two is the directed 2-cycle");
        }
    }

    /// Checks that every demanded arrow exists in g.
    OrientedCycle(const Digraph& g, std::vector<Vertex> vertices, std::vector<Orientation> flags)
        : OrientedCycle(std::move(vertices), std::move(flags)) {
        for (std::size_t j = 0; j < length(); ++j) {
            Arrow a = arrow(j);
            if (!g.has_arrow(a.tail, a.head)) throw std::invalid_argument("cycle uses missing arrow " + to_string(a));
        }
    }

    std::size_t length() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Orientation>& orientations() const { return flags_; }

    Vertex vertex(std::size_t j) const { return vertices_[j % length()]; }

    /// Arrow traversed at position j.
    Arrow arrow(std::size_t j) const {
        Vertex a = vertex(j), b = vertex(j + 1);
        return flags_[j] == Orientation::forward ? Arrow{a, b} : Arrow{b, a};
    }

    std::vector<Arrow> arrows() const {
        std::vector<Arrow> out;
        for (std::size_t j = 0; j < length(); ++j) out.push_back(arrow(j));
        return out;
    }

    std::size_t forward_count() const {
        return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), Orientation::forward));
    }
    std::size_t backward_count() const { return length() - forward_count(); }

    /// |Δ⁺| and |Δ⁻| under the convention |Δ⁺| >= |Δ⁻|.
    std::size_t delta_plus_size() const { return std::max(forward_count(), backward_count()); }
    std::size_t delta_minus_size() const { return std::min(forward_count(), backward_count()); }

    bool is_directed() const { return delta_minus_size() == 0; }

    /// Traverses the same arrows in the opposite direction.
    OrientedCycle reversed() const {
        // Reversed sequence (i_1, i_l, ..., i_2); the edge {i_{j+1}, i_j} keeps
        // its arrow, so its flag flips.
        std::vector<Vertex> v{vertices_[0]};
        for (std::size_t j = length() - 1; j >= 1; --j) v.push_back(vertices_[j]);
        std::vector<Orientation> f;
        for (std::size_t j = 0; j < length(); ++j) {
            Orientation o = flags_[(length() - 1 - j) % length()];
            f.push_back(o == Orientation::forward ? Orientation::backward : Orientation::forward);
        }
        if (length() == 2) return *this;
        return OrientedCycle(std::move(v), std::move(f));
    }

    friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Orientation> flags_;
};

inline bool is_homogeneous(const OrientedCycle& c) { return c.forward_count() == c.backward_count(); }

inline std::string to_string(const OrientedCycle& c) {
    std::string s = "(";
    for (std::size_t j = 0; j < c.length(); ++j) {
        if (j) s += ",";
        s += std::to_string(c.vertex(j));
    }
    s += ") [";
    for (std::size_t j = 0; j < c.length(); ++j) s += c.orientations()[j] == Orientation::forward ? '+' : '-';
    return s + "]";
}

/// Level function of a homogeneous cycle: values[j] belongs to vertex j.
struct MuAssignment {
    std::vector<Vertex> vertices;
    std::vector<int> values;

    int at(Vertex v) const {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (vertices[j] == v) return values[j];
        }
        throw std::out_of_range("vertex " + std::to_string(v) + " is not on the cycle");
    }

    int max() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }
};

/// The unique nonnegative level function with forward steps -1, backward
/// steps +1 and minimum 0. Throws std::domain_error for nonhomogeneous cycles.
inline MuAssignment mu(const OrientedCycle& c) {
    std::vector<int> level(c.length());
    int cur = 0;
    for (std::size_t j = 0; j < c.length(); ++j) {
        level[j] = cur;
        cur += c.orientations()[j] == Orientation::forward ? -1 : 1;
    }
    if (cur != 0) throw std::domain_error("mu is defined only for homogeneous cycles: " + to_string(c));
    int lo = *std::min_element(level.begin(), level.end());
    for (int& x : level) x -= lo;
    return {c.vertices(), std::move(level)};
}

/// Calls visit(sequence) for every simple cycle of the underlying undirected
/// graph with length in [min_length, max_length], length >= 3, in order of
/// increasing length and then lexicographic canonical sequence (minimum vertex
/// first, second vertex smaller than last). visit returns false to stop.
/// Returns false iff stopped early.
template <std::invocable<const std::vector<Vertex>&> Visit>
bool for_each_undirected_cycle(const Digraph& g, Visit&& visit, std::size_t min_length = 3,
                               std::optional<std::size_t> max_length = std::nullopt) {
    const int d = g.vertex_count();
    const std::size_t upper = std::min<std::size_t>(max_length.value_or(d), d);
    std::vector<Vertex> path;
    std::vector<bool> used(d + 1, false);
    for (std::size_t len = std::max<std::size_t>(min_length, 3); len <= upper; ++len) {
        for (Vertex s = 1; s <= d; ++s) {
            path.assign(1, s);
            used.assign(d + 1, false);
            used[s] = true;
            bool keep_going = true;
            std::function<void()> extend = [&]() {
                if (!keep_going) return;
                Vertex last = path.back();
                if (path.size() == len) {
                    if (path[1] < last && std::binary_search(g.neighbors(last).begin(), g.neighbors(last).end(), s)) {
                        if (!visit(path)) keep_going = false;
                    }
                    return;
                }
                for (Vertex w : g.neighbors(last)) {
                    if (w <= s || used[w]) continue;
                    used[w] = true;
                    path.push_back(w);
                    extend();
                    path.pop_back();
                    used[w] = false;
                    if (!keep_going) return;
                }
            };
            extend();
            if (!keep_going) return false;
        }
    }
    return true;
}

/// Calls visit(cycle) for every oriented cycle of g up to rotation and
/// reflection: first the directed 2-cycles {i<j}, then, for each length, each
/// canonical vertex sequence with every orientation assignment realizable by
/// present arrows (forward before backward, lexicographically). visit returns
/// false to stop. Returns false iff stopped early.
template <std::invocable<const OrientedCycle&> Visit>
bool for_each_oriented_cycle(const Digraph& g, Visit&& visit, std::optional<std::size_t> max_length = std::nullopt) {
    if (max_length && *max_length < 2) return true;
    for (const Arrow& a : g.arrows()) {
        if (a.tail < a.head && g.has_arrow(a.head, a.tail)) {
            if (!visit(OrientedCycle({a.tail, a.head}, {Orientation::forward, Orientation::forward}))) return false;
        }
    }
    return for_each_undirected_cycle(
        g,
        [&](const std::vector<Vertex>& seq) {
            const std::size_t l = seq.size();
            std::vector<std::vector<Orientation>> options(l);
            for (std::size_t j = 0; j < l; ++j) {
                Vertex a = seq[j], b = seq[(j + 1) % l];
                if (g.has_arrow(a, b)) options[j].push_back(Orientation::forward);
                if (g.has_arrow(b, a)) options[j].push_back(Orientation::backward);
            }
            std::vector<std::size_t> pick(l, 0);
            std::vector<Orientation> flags(l);
            for (;;) {
                for (std::size_t j = 0; j < l; ++j) flags[j] = options[j][pick[j]];
                if (!visit(OrientedCycle(seq, flags))) return false;
                std::size_t j = l;
                while (j > 0) {
                    --j;
                    if (++pick[j] < options[j].size()) break;
                    pick[j] = 0;
                    if (j == 0) return true;
                }
            }
        },
        3, max_length);
}

inline std::vector<OrientedCycle> enumerate_oriented_cycles(const Digraph& g,
                                                            std::optional<std::size_t> max_length = std::nullopt) {
    std::vector<OrientedCycle> out;
    for_each_oriented_cycle(
        g,
        [&](const OrientedCycle& c) {
            out.push_back(c);
            return true;
        },
        max_length);
    return out;
}

inline bool has_symmetric_pair(const Digraph& g) {
    return std::any_of(g.arrows().begin(), g.arrows().end(), [&](const Arrow& a) { return g.has_arrow(a.head, a.tail); });
}

/// Underlying undirected graph is bipartite.
inline bool is_bipartite(const Digraph& g) {
    const int d = g.vertex_count();
    std::vector<int> color(d + 1, -1);
    for (Vertex s = 1; s <= d; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Some oriented cycle is nonhomogeneous. A directed 2-cycle or an odd cycle
/// settles it; otherwise every edge carries one arrow and each even cycle has a
/// single orientation to inspect.
inline bool has_nonhomogeneous_cycle(const Digraph& g) {
    if (has_symmetric_pair(g)) return true;
    if (!is_bipartite(g)) return true;
    bool found = false;
    for_each_oriented_cycle(g, [&](const OrientedCycle& c) {
        found = !is_homogeneous(c);
        return !found;
    });
    return found;
}

/// The underlying simple graph has a cycle of even length (>= 4).
inline bool has_even_cycle(const Digraph& g) {
    bool found = false;
    for_each_undirected_cycle(g, [&](const std::vector<Vertex>& seq) {
        found = seq.size() % 2 == 0;
        return !found;
    });
    return found;
}

// ---------------------------------------------------------------------------
// Blocks

enum class BlockKind { single_edge, odd_cycle, other };

inline const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::single_edge: return "edge";
        case BlockKind::odd_cycle: return "odd-cycle";
        case BlockKind::other: return "other";
    }
    return "?";
}

struct Block {
    std::vector<Vertex> vertices;
    std::vector<std::pair<Vertex, Vertex>> edges;
    BlockKind kind;
};

/// Maximal two-connected subgraphs of the underlying undirected graph
/// (Hopcroft–Tarjan with an edge stack), sorted by first edge.
inline std::vector<Block> two_connected_components(const Digraph& g) {
    const int d = g.vertex_count();
    std::vector<int> disc(d + 1, -1), low(d + 1, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<Block> blocks;
    int timer = 0;

    auto emit = [&](std::pair<Vertex, Vertex> until) {
        Block b;
        for (;;) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            b.vertices.push_back(e.first);
            b.vertices.push_back(e.second);
            if (e == until) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        if (b.edges.size() == 1) {
            b.kind = BlockKind::single_edge;
        } else if (b.edges.size() == b.vertices.size() && b.vertices.size() % 2 == 1) {
            b.kind = BlockKind::odd_cycle;
        } else {
            b.kind = BlockKind::other;
        }
        blocks.push_back(std::move(b));
    };

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        for (Vertex w : g.neighbors(v)) {
            if (disc[w] < 0) {
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) emit({v, w});
            } else if (w != parent && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (Vertex v = 1; v <= d; ++v) {
        if (disc[v] < 0) dfs(v, 0);
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.edges < b.edges; });
    return blocks;
}

}  // namespace fanograph
