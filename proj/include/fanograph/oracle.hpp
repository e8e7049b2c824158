#pragma once

// Exhaustive enumeration of small labeled digraphs and the cross-validation
// of the graph predicates against the geometric classification.
//
// The candidate space for d vertices is every subset of the d(d-1) possible
// arrows, encoded as a bitmask over the arrows in lexicographic order. The
// spaces for d = 2, 3, ... are concatenated into one global index range,
// which is what chunking slices.

#include "digraph.hpp"
#include "fano_criteria.hpp"
#include "lattice_polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fanograph {

class sweep_limit_error : public std::invalid_argument {
public:
    explicit sweep_limit_error(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr int default_vertex_limit = 5;

enum class SweepScope {
    fano,       // connected, every arrow on a directed cycle
    connected,  // connected underlying graph, no further filter
};

struct SweepOptions {
    int max_vertices = 4;
    int vertex_limit = default_vertex_limit;
    bool force = false;
    SweepScope scope = SweepScope::fano;
    bool dedup_isomorphic = false;
    std::uint64_t chunk_index = 0;  // 0-based
    std::uint64_t chunk_count = 1;
    /// Only every stride-th candidate of the slice is considered.
    std::uint64_t stride = 1;
    unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Candidate space

inline std::vector<Arrow> all_possible_arrows(int d) {
    std::vector<Arrow> a;
    for (Vertex i = 1; i <= d; ++i) {
        for (Vertex j = 1; j <= d; ++j) {
            if (i != j) a.push_back({i, j});
        }
    }
    return a;
}

inline std::uint64_t candidate_count(int d) {
    if (d < 2) return 0;
    const int bits = d * (d - 1);
    if (bits >= 63) throw sweep_limit_error("candidate space too large");
    return std::uint64_t{1} << bits;
}

inline std::uint64_t total_candidate_count(int max_vertices) {
    std::uint64_t n = 0;
    for (int d = 2; d <= max_vertices; ++d) n += candidate_count(d);
    return n;
}

struct Candidate {
    std::uint64_t index = 0;  // global index
    int vertices = 0;
    std::uint64_t mask = 0;
};

inline Candidate candidate_at(std::uint64_t index, int max_vertices) {
    std::uint64_t rest = index;
    for (int d = 2; d <= max_vertices; ++d) {
        const std::uint64_t n = candidate_count(d);
        if (rest < n) return {index, d, rest};
        rest -= n;
    }
    throw std::out_of_range("candidate index beyond the enumeration");
}

inline Digraph candidate_graph(int d, std::uint64_t mask) {
    const auto all = all_possible_arrows(d);
    std::vector<Arrow> a;
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask >> k & 1) a.push_back(all[k]);
    }
    return Digraph::from_arrows(d, a);
}

inline std::uint64_t arrow_mask(const Digraph& g) {
    const int d = g.vertex_count();
    std::uint64_t m = 0;
    for (const Arrow& a : g.arrows()) {
        // position of (i,j) in the lexicographic list of arrows without loops
        const int pos = (a.tail - 1) * (d - 1) + (a.head - 1) - (a.head > a.tail ? 1 : 0);
        m |= std::uint64_t{1} << pos;
    }
    return m;
}

/// True when no relabeling of the vertices gives a smaller arrow mask.
inline bool is_canonical_labeling(const Digraph& g) {
    const int d = g.vertex_count();
    const std::uint64_t mine = arrow_mask(g);
    std::vector<Vertex> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::uint64_t m = 0;
        for (const Arrow& a : g.arrows()) {
            const Vertex i = perm[a.tail - 1], j = perm[a.head - 1];
            m |= std::uint64_t{1} << ((i - 1) * (d - 1) + (j - 1) - (j > i ? 1 : 0));
        }
        if (m < mine) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

inline bool in_scope(const Digraph& g, SweepScope scope) {
    if (g.arrows().empty() || !g.is_connected()) return false;
    return scope == SweepScope::connected || every_arrow_in_directed_cycle(g);
}

inline void check_limit(int max_vertices, int limit, bool force) {
    if (max_vertices < 1) throw std::invalid_argument("sweep: max_vertices must be positive");
    if (max_vertices > limit && !force) {
        throw sweep_limit_error("sweep over " + std::to_string(max_vertices) + " vertices exceeds the limit of " +
                                std::to_string(limit) + "; pass force to override");
    }
    if (max_vertices > 7) throw sweep_limit_error("sweep: more than 7 vertices is not supported by the mask encoding");
}

/// [begin, end) of the global index range owned by the chunk.
inline std::pair<std::uint64_t, std::uint64_t> chunk_range(std::uint64_t total, std::uint64_t index,
                                                           std::uint64_t count) {
    if (count == 0 || index >= count) throw std::invalid_argument("chunk index must satisfy 0 <= i < n");
    const std::uint64_t base = total / count, extra = total % count;
    const std::uint64_t begin = index * base + std::min(index, extra);
    return {begin, begin + base + (index < extra ? 1 : 0)};
}

/// Visits every in-scope graph of the options' slice in index order; the
/// visitor returns false to stop.
inline void for_each_candidate(const SweepOptions& opt,
                               const std::function<bool(const Candidate&, const Digraph&)>& visit,
                               std::uint64_t* enumerated = nullptr) {
    check_limit(opt.max_vertices, opt.vertex_limit, opt.force);
    const auto [begin, end] = chunk_range(total_candidate_count(opt.max_vertices), opt.chunk_index, opt.chunk_count);
    const std::uint64_t stride = std::max<std::uint64_t>(opt.stride, 1);
    for (std::uint64_t i = begin; i < end; i += stride) {
        if (enumerated) ++*enumerated;
        const Candidate c = candidate_at(i, opt.max_vertices);
        const Digraph g = candidate_graph(c.vertices, c.mask);
        if (!in_scope(g, opt.scope)) continue;
        if (opt.dedup_isomorphic && !is_canonical_labeling(g)) continue;
        if (!visit(c, g)) return;
    }
}

/// Connected digraphs on at most max_vertices vertices with every arrow on a
/// directed cycle, in enumeration order.
inline std::vector<Digraph> enumerate_fano_digraphs(int max_vertices, bool dedup_isomorphic = false,
                                                    bool force = false, int vertex_limit = default_vertex_limit) {
    SweepOptions opt;
    opt.max_vertices = max_vertices;
    opt.vertex_limit = vertex_limit;
    opt.force = force;
    opt.dedup_isomorphic = dedup_isomorphic;
    std::vector<Digraph> out;
    if (max_vertices < 2) {
        check_limit(std::max(max_vertices, 1), vertex_limit, force);
        return out;
    }
    for_each_candidate(opt, [&](const Candidate&, const Digraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Cross-validation

struct SymmetricCheck {
    bool simplicial = false;           // (i)
    bool smooth = false;               // (ii)
    bool no_even_cycle = false;        // (iii)
    bool blocks_edges_or_odd = false;  // (iv)
    bool consistent() const {
        return simplicial == smooth && smooth == no_even_cycle && no_even_cycle == blocks_edges_or_odd;
    }
    friend bool operator==(const SymmetricCheck&, const SymmetricCheck&) = default;
};

struct AgreementRecord {
    Digraph graph;
    GraphVerdict graph_verdict;
    ClassificationReport geometric;
    std::optional<SymmetricCheck> symmetric;
    std::vector<std::string> mismatches;
    bool agrees() const { return mismatches.empty(); }
    friend bool operator==(const AgreementRecord&, const AgreementRecord&) = default;
};

inline AgreementRecord cross_validate(const Digraph& g) {
    AgreementRecord r;
    r.graph = g;
    const FullReport full = full_report(g);
    r.graph_verdict = full.graph_verdict;
    r.geometric = full.geometric;
    const auto& geo = r.geometric;
    const auto& gv = r.graph_verdict;
    const std::size_t full_dim = static_cast<std::size_t>(g.vertex_count() - 1);

    auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
    if (!full.dimension_agrees) {
        r.mismatches.push_back("dimension: nonhomogeneous cycle " + yes(gv.spans_full_dimension) + ", dim " +
                               std::to_string(geo.dim) + " of " + std::to_string(full_dim));
    }
    if (!full.fano_agrees) {
        r.mismatches.push_back("fano: every arrow on a directed cycle " + yes(gv.every_arrow_in_directed_cycle) +
                               ", geometric fano " + yes(geo.is_fano) + " terminal " + yes(geo.is_terminal) +
                               " gorenstein " + yes(geo.is_gorenstein));
    }
    if (gv.smoothness) {
        const bool s = gv.smoothness->smooth;
        if (s != geo.is_simplicial) {
            r.mismatches.push_back("simplicial: obstruction absent " + yes(s) + ", geometric simplicial " +
                                   yes(geo.is_simplicial));
        }
        if (s != geo.is_smooth) {
            r.mismatches.push_back("smooth: obstruction absent " + yes(s) + ", geometric smooth " + yes(geo.is_smooth));
        }
        if (geo.is_simplicial && !geo.is_smooth) r.mismatches.push_back("simplicial but not smooth");
    }
    if (g.is_symmetric()) {
        SymmetricCheck sc;
        sc.simplicial = geo.is_simplicial;
        sc.smooth = geo.is_smooth;
        sc.no_even_cycle = symmetric_is_smooth(g);
        sc.blocks_edges_or_odd = blocks_are_edges_or_odd_cycles(g);
        r.symmetric = sc;
        if (!sc.consistent()) {
            r.mismatches.push_back("symmetric: simplicial " + yes(sc.simplicial) + " smooth " + yes(sc.smooth) +
                                   " no even cycle " + yes(sc.no_even_cycle) + " blocks " +
                                   yes(sc.blocks_edges_or_odd));
        }
        if (gv.smoothness && gv.smoothness->smooth != sc.no_even_cycle) {
            r.mismatches.push_back("symmetric: general criterion disagrees with the even-cycle test");
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepDiscrepancy {
    std::uint64_t index = 0;
    AgreementRecord record;
    friend bool operator==(const SweepDiscrepancy&, const SweepDiscrepancy&) = default;
};

struct SweepReport {
    int max_vertices = 0;
    SweepScope scope = SweepScope::fano;
    std::uint64_t chunk_index = 0;
    std::uint64_t chunk_count = 1;
    std::uint64_t stride = 1;
    bool dedup_isomorphic = false;

    std::uint64_t graphs_enumerated = 0;  // candidates visited
    std::uint64_t graphs_classified = 0;  // in scope and cross-validated
    std::uint64_t smooth = 0;
    std::uint64_t simplicial_not_smooth = 0;
    std::uint64_t non_simplicial = 0;
    std::uint64_t not_full_dimensional = 0;
    std::uint64_t not_fano = 0;
    std::uint64_t symmetric_checked = 0;
    std::vector<SweepDiscrepancy> discrepancies;

    void add(std::uint64_t index, AgreementRecord r) {
        ++graphs_classified;
        const auto& geo = r.geometric;
        if (!geo.full_dimensional) {
            ++not_full_dimensional;
        } else if (!geo.is_fano) {
            ++not_fano;
        } else if (!geo.is_simplicial) {
            ++non_simplicial;
        } else if (geo.is_smooth) {
            ++smooth;
        } else {
            ++simplicial_not_smooth;
        }
        if (r.symmetric) ++symmetric_checked;
        if (!r.agrees()) discrepancies.push_back({index, std::move(r)});
    }

    /// Appends a report covering a later part of the same index range.
    void merge(SweepReport other) {
        graphs_enumerated += other.graphs_enumerated;
        graphs_classified += other.graphs_classified;
        smooth += other.smooth;
        simplicial_not_smooth += other.simplicial_not_smooth;
        non_simplicial += other.non_simplicial;
        not_full_dimensional += other.not_full_dimensional;
        not_fano += other.not_fano;
        symmetric_checked += other.symmetric_checked;
        for (auto& d : other.discrepancies) discrepancies.push_back(std::move(d));
    }

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

inline SweepReport sweep(const SweepOptions& opt) {
    check_limit(opt.max_vertices, opt.vertex_limit, opt.force);
    SweepReport rep;
    rep.max_vertices = opt.max_vertices;
    rep.scope = opt.scope;
    rep.chunk_index = opt.chunk_index;
    rep.chunk_count = opt.chunk_count;
    rep.stride = std::max<std::uint64_t>(opt.stride, 1);
    rep.dedup_isomorphic = opt.dedup_isomorphic;

    const unsigned threads = std::max(1u, opt.threads);
    if (threads == 1) {
        for_each_candidate(
            opt,
            [&](const Candidate& c, const Digraph& g) {
                rep.add(c.index, cross_validate(g));
                return true;
            },
            &rep.graphs_enumerated);
        return rep;
    }

    // Split this chunk into sub-chunks, run them concurrently, merge in order.
    const auto [begin, end] = chunk_range(total_candidate_count(opt.max_vertices), opt.chunk_index, opt.chunk_count);
    std::vector<SweepReport> parts(threads);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                const auto [b, e] = chunk_range(end - begin, t, threads);
                const std::uint64_t stride = rep.stride;
                // keep the global stride phase so the result matches one thread
                std::uint64_t first = begin + b;
                if ((first - begin) % stride) first += stride - (first - begin) % stride;
                for (std::uint64_t i = first; i < begin + e; i += stride) {
                    ++parts[t].graphs_enumerated;
                    const Candidate c = candidate_at(i, opt.max_vertices);
                    const Digraph g = candidate_graph(c.vertices, c.mask);
                    if (!in_scope(g, opt.scope)) continue;
                    if (opt.dedup_isomorphic && !is_canonical_labeling(g)) continue;
                    parts[t].add(c.index, cross_validate(g));
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (auto& p : parts) rep.merge(std::move(p));
    return rep;
}

inline SweepReport sweep(int max_vertices) {
    SweepOptions opt;
    opt.max_vertices = max_vertices;
    return sweep(opt);
}

inline std::string to_string(SweepScope s) { return s == SweepScope::fano ? "fano" : "connected"; }

}  // namespace fanograph
