#pragma once

// Exact lattice polytope kernel.
//
// A LatticePolytope carries both representations: its vertices (ambient
// coordinates) and its facets. Facets are expressed in the polytope's own
// lattice frame: the identity when the polytope is full-dimensional, and
// otherwise a Z-basis of the lattice points in the linear (or affine) span, so
// that lattice-sensitive notions (Fano, smooth, normalized volume) are
// evaluated in the induced lattice.

#include "digraph.hpp"
#include "double_description.hpp"
#include "exact.hpp"
#include "linear_algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace fanograph {

/// { x : <normal, x> = offset }, bounding the half-space <normal, x> <= offset.
struct Hyperplane {
    LatticeVector normal;
    Integer offset;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// x = base + sum_k y_k basis[k]; basis is a Z-basis of the lattice
/// points of the direction space.
struct LatticeFrame {
    LatticeVector base;
    Rows<Integer> basis;

    bool is_identity() const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            for (std::size_t i = 0; i < basis[k].size(); ++i) {
                if (basis[k][i] != (i == k ? 1 : 0)) return false;
            }
        }
        return basis.size() == base.size() && std::all_of(base.begin(), base.end(), [](const Integer& x) { return x == 0; });
    }

    LatticeVector to_ambient(const LatticeVector& y) const {
        LatticeVector x = base;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (y[k] == 0) continue;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[k] * basis[k][i];
        }
        return x;
    }

    LatticeVector to_local(const LatticeVector& x) const {
        LatticeVector shifted(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - base[i];
        return linalg::lattice_coordinates(basis, shifted);
    }
};

namespace detail {

/// Runs body<long long>() and falls back to body<Integer>() on overflow.
template <class Body>
auto with_fast_path(Body&& body) {
    try {
        return body.template operator()<long long>();
    } catch (const arithmetic_overflow&) {
        return body.template operator()<Integer>();
    }
}

template <class Int>
Rows<Int> convert_rows(const std::vector<LatticeVector>& rows) {
    Rows<Int> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(exact::convert_vector<Int>(r));
    return out;
}

inline Integer evaluate(const Hyperplane& h, const LatticeVector& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += h.normal[i] * y[i];
    return s;
}

}  // namespace detail

class LatticePolytope;
LatticePolytope hull(std::span<const LatticeVector> points);

class LatticePolytope {
public:
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }
    bool origin_in_affine_hull() const { return origin_in_affine_hull_; }

    /// Extreme points in ambient coordinates, lexicographically sorted.
    const std::vector<LatticeVector>& vertices() const { return vertices_; }
    /// The same vertices in frame coordinates (Z^dim).
    const std::vector<LatticeVector>& local_vertices() const { return local_vertices_; }
    /// Outer facet hyperplanes in frame coordinates, sorted by normal.
    const std::vector<Hyperplane>& facets() const { return facets_; }
    /// Indices into vertices() saturating each facet.
    const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }
    const LatticeFrame& frame() const { return frame_; }

    /// Origin lies in the relative interior (every facet offset positive).
    bool origin_in_relative_interior() const {
        return origin_in_affine_hull_ && std::all_of(facets_.begin(), facets_.end(), [](const Hyperplane& h) { return h.offset > 0; });
    }

    friend LatticePolytope hull(std::span<const LatticeVector> points);
    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.vertices_ == b.vertices_ && a.ambient_dim_ == b.ambient_dim_;
    }

private:
    std::size_t ambient_dim_ = 0;
    std::size_t dim_ = 0;
    bool origin_in_affine_hull_ = false;
    LatticeFrame frame_;
    std::vector<LatticeVector> vertices_;
    std::vector<LatticeVector> local_vertices_;
    std::vector<Hyperplane> facets_;
    std::vector<std::vector<std::size_t>> facet_vertices_;
};

/// Convex hull with exact facet enumeration. Non-full-dimensional inputs are
/// described inside their affine hull. Throws std::invalid_argument for empty
/// input or mixed dimensions.
inline LatticePolytope hull(std::span<const LatticeVector> input) {
    if (input.empty()) throw std::invalid_argument("hull of an empty point set");
    const std::size_t n = input.front().size();
    std::vector<LatticeVector> points(input.begin(), input.end());
    for (const auto& p : points) {
        if (p.size() != n) throw std::invalid_argument("hull: points of different dimensions");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope P;
    P.ambient_dim_ = n;
    const std::size_t r = *linalg::affine_rank(points);
    P.dim_ = r;

    if (r == n) {
        P.origin_in_affine_hull_ = true;
        P.frame_.base.assign(n, 0);
        P.frame_.basis.assign(n, LatticeVector(n));
        for (std::size_t i = 0; i < n; ++i) P.frame_.basis[i][i] = 1;
    } else {
        P.origin_in_affine_hull_ = linalg::rank(points) == r;
        P.frame_.base = P.origin_in_affine_hull_ ? LatticeVector(n) : points.front();
        Rows<Integer> directions;
        for (const auto& p : points) {
            LatticeVector d(n);
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = p[i] - P.frame_.base[i];
                nonzero = nonzero || d[i] != 0;
            }
            if (nonzero) directions.push_back(std::move(d));
        }
        P.frame_.basis = linalg::saturated_basis(directions, n);
    }

    std::vector<LatticeVector> local;
    local.reserve(points.size());
    if (r == n) {
        local = points;
    } else {
        for (const auto& p : points) local.push_back(P.frame_.to_local(p));
    }

    std::vector<Hyperplane> facets;
    if (r > 0) {
        facets = detail::with_fast_path([&]<class Int>() {
            auto ineqs = dd::facets<Int>(detail::convert_rows<Int>(local), r);
            std::vector<Hyperplane> out;
            out.reserve(ineqs.size());
            for (auto& q : ineqs) out.push_back({exact::to_lattice_vector(q.normal), exact::to_integer(q.offset)});
            return out;
        });
    }
    std::sort(facets.begin(), facets.end(), [](const Hyperplane& a, const Hyperplane& b) { return a.normal < b.normal; });

    // A point is a vertex iff the facets through it have normals of full rank.
    std::vector<std::size_t> vertex_ids;
    for (std::size_t i = 0; i < local.size(); ++i) {
        Rows<Integer> tight;
        for (const auto& h : facets) {
            if (detail::evaluate(h, local[i]) == h.offset) tight.push_back(h.normal);
        }
        if (r == 0 || linalg::rank(tight) == r) vertex_ids.push_back(i);
    }
    for (std::size_t i : vertex_ids) {
        P.vertices_.push_back(points[i]);
        P.local_vertices_.push_back(local[i]);
    }
    P.facet_vertices_.resize(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
        for (std::size_t v = 0; v < P.local_vertices_.size(); ++v) {
            if (detail::evaluate(facets[f], P.local_vertices_[v]) == facets[f].offset) P.facet_vertices_[f].push_back(v);
        }
    }
    P.facets_ = std::move(facets);
    return P;
}

inline LatticePolytope hull(const std::vector<LatticeVector>& points) { return hull(std::span<const LatticeVector>(points)); }

inline LatticePolytope hull(std::initializer_list<LatticeVector> points) {
    return hull(std::span<const LatticeVector>(points.begin(), points.size()));
}

// ---------------------------------------------------------------------------
// Points of the root system picture

/// rho((i,j)) = e_i - e_j in Z^d.
inline LatticeVector rho(Arrow a, int d) {
    if (a.tail < 1 || a.head < 1 || a.tail > d || a.head > d || a.tail == a.head) {
        throw std::invalid_argument("rho: arrow " + to_string(a) + " is not valid in dimension " + std::to_string(d));
    }
    LatticeVector v(d);
    v[a.tail - 1] = 1;
    v[a.head - 1] = -1;
    return v;
}

/// Drops the last coordinate: a lattice isomorphism from Z^d ∩ {sum x = 0}
/// onto Z^{d-1}. Throws std::invalid_argument for points off the hyperplane.
inline std::vector<LatticeVector> project_to_sum_zero_lattice(std::span<const LatticeVector> points) {
    std::vector<LatticeVector> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        Integer s = 0;
        for (const auto& x : p) s += x;
        if (s != 0) throw std::invalid_argument("project_to_sum_zero_lattice: coordinate sum of " + to_string(p) + " is not zero");
        if (p.empty()) throw std::invalid_argument("project_to_sum_zero_lattice: empty vector");
        out.emplace_back(p.begin(), p.end() - 1);
    }
    return out;
}

inline std::vector<LatticeVector> project_to_sum_zero_lattice(const std::vector<LatticeVector>& points) {
    return project_to_sum_zero_lattice(std::span<const LatticeVector>(points));
}

/// Inverse of the projection: appends minus the coordinate sum.
inline LatticeVector lift_from_sum_zero_lattice(const LatticeVector& y) {
    LatticeVector x = y;
    Integer s = 0;
    for (const auto& c : y) s += c;
    x.push_back(-s);
    return x;
}

// ---------------------------------------------------------------------------
// Lattice points

struct LatticePointCensus {
    std::vector<LatticeVector> interior;  // frame coordinates
    std::vector<LatticeVector> boundary;  // frame coordinates
};

namespace detail {

template <class Int>
LatticePointCensus census_impl(const LatticePolytope& p) {
    const std::size_t r = p.dim();
    LatticePointCensus out;
    if (r == 0) {
        out.interior.push_back({});
        return out;
    }
    std::vector<Int> lo(r), hi(r);
    for (std::size_t k = 0; k < r; ++k) {
        lo[k] = hi[k] = exact::convert<Int>(p.local_vertices().front()[k]);
        for (const auto& v : p.local_vertices()) {
            Int x = exact::convert<Int>(v[k]);
            lo[k] = std::min(lo[k], x);
            hi[k] = std::max(hi[k], x);
        }
    }
    const std::size_t nf = p.facets().size();
    Rows<Int> a(nf);
    std::vector<Int> b(nf);
    Rows<Int> suffix(nf, std::vector<Int>(r + 1));  // min of the remaining terms over the box
    for (std::size_t f = 0; f < nf; ++f) {
        a[f] = exact::convert_vector<Int>(p.facets()[f].normal);
        b[f] = exact::convert<Int>(p.facets()[f].offset);
        suffix[f][r] = 0;
        for (std::size_t k = r; k-- > 0;) {
            Int m = std::min(exact::mul(a[f][k], lo[k]), exact::mul(a[f][k], hi[k]));
            suffix[f][k] = exact::add(suffix[f][k + 1], m);
        }
    }
    std::vector<Int> y(r);
    Rows<Int> partial(r + 1, std::vector<Int>(nf));  // partial[k][f] = sum_{j<k} a_j y_j
    std::function<void(std::size_t)> descend = [&](std::size_t k) {
        if (k == r) {
            bool interior = true;
            for (std::size_t f = 0; f < nf; ++f) {
                if (partial[r][f] == b[f]) {
                    interior = false;
                    break;
                }
            }
            (interior ? out.interior : out.boundary).push_back(exact::to_lattice_vector(y));
            return;
        }
        for (Int x = lo[k]; x <= hi[k]; x = exact::add(x, Int(1))) {
            y[k] = x;
            bool feasible = true;
            for (std::size_t f = 0; f < nf; ++f) {
                partial[k + 1][f] = exact::add(partial[k][f], exact::mul(a[f][k], x));
                if (exact::add(partial[k + 1][f], suffix[f][k + 1]) > b[f]) feasible = false;
            }
            if (feasible) descend(k + 1);
        }
    };
    descend(0);
    return out;
}

}  // namespace detail

/// Lattice points of p in its lattice frame, split into relative interior and
/// relative boundary. The search box is the vertex bounding box (for P_G this is
/// {-1,0,1}^(d-1)) with branch pruning by the facet inequalities.
inline LatticePointCensus lattice_point_census(const LatticePolytope& p) {
    return detail::with_fast_path([&]<class Int>() { return detail::census_impl<Int>(p); });
}

/// All lattice points of p in ambient coordinates, sorted.
inline std::vector<LatticeVector> lattice_points(const LatticePolytope& p) {
    auto c = lattice_point_census(p);
    std::vector<LatticeVector> out;
    for (const auto* group : {&c.interior, &c.boundary}) {
        for (const auto& y : *group) out.push_back(p.frame().to_ambient(y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Classification

struct ClassificationReport {
    std::size_t dim = 0;
    std::size_t ambient_dim = 0;
    bool full_dimensional = false;
    bool is_fano = false;
    bool is_terminal = false;
    bool is_gorenstein = false;
    bool is_simplicial = false;
    bool is_smooth = false;
    std::size_t vertex_count = 0;
    std::size_t facet_count = 0;
    std::size_t boundary_lattice_point_count = 0;
    std::size_t interior_lattice_point_count = 0;
    std::optional<std::size_t> non_simplicial_facet_witness;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Determinant of the local vertex matrix of facet f (simplicial facets).
inline Integer facet_determinant(const LatticePolytope& p, std::size_t f) {
    Rows<Integer> m;
    for (std::size_t v : p.facet_vertices()[f]) m.push_back(p.local_vertices()[v]);
    if (m.size() != p.dim()) throw std::invalid_argument("facet_determinant: facet is not a simplex");
    return linalg::determinant(std::move(m));
}

inline ClassificationReport classify(const LatticePolytope& p) {
    ClassificationReport rep;
    rep.dim = p.dim();
    rep.ambient_dim = p.ambient_dim();
    rep.full_dimensional = p.full_dimensional();
    rep.vertex_count = p.vertices().size();
    rep.facet_count = p.facets().size();

    auto census = lattice_point_census(p);
    rep.boundary_lattice_point_count = census.boundary.size();
    rep.interior_lattice_point_count = census.interior.size();

    const LatticeVector zero(p.dim());
    rep.is_fano = p.origin_in_relative_interior() && census.interior.size() == 1 && census.interior.front() == zero;

    rep.is_simplicial = true;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        if (p.facet_vertices()[f].size() != p.dim()) {
            rep.is_simplicial = false;
            rep.non_simplicial_facet_witness = f;
            break;
        }
    }

    if (rep.is_fano) {
        rep.is_terminal = census.boundary.size() == p.vertices().size();
        rep.is_gorenstein =
            std::all_of(p.facets().begin(), p.facets().end(), [](const Hyperplane& h) { return h.offset == 1; });
        rep.is_smooth = rep.is_simplicial;
        for (std::size_t f = 0; rep.is_smooth && f < p.facets().size(); ++f) {
            rep.is_smooth = abs(facet_determinant(p, f)) == 1;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Fingerprint

struct Fingerprint {
    std::size_t dim = 0;
    std::size_t vertex_count = 0;
    std::size_t facet_count = 0;
    std::size_t boundary_lattice_point_count = 0;
    Integer normalized_volume = 0;
    bool centrally_symmetric = false;
    bool pseudo_symmetric = false;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// dim! times the Euclidean volume, measured in the polytope's own lattice.
/// Pyramids over facets from an apex (the origin when it is interior, else a
/// vertex): a simplex facet contributes |det|, any other facet contributes its
/// lattice height times its own normalized volume.
inline Integer normalized_volume(const LatticePolytope& p) {
    const std::size_t r = p.dim();
    if (r == 0) return 1;
    LatticeVector apex = p.origin_in_relative_interior() ? LatticeVector(r) : p.local_vertices().front();
    Integer total = 0;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        const Hyperplane& h = p.facets()[f];
        Integer height = h.offset - detail::evaluate(h, apex);
        if (height == 0) continue;
        const auto& ids = p.facet_vertices()[f];
        if (ids.size() == r) {
            Rows<Integer> m;
            for (std::size_t v : ids) {
                LatticeVector row(r);
                for (std::size_t k = 0; k < r; ++k) row[k] = p.local_vertices()[v][k] - apex[k];
                m.push_back(std::move(row));
            }
            total += abs(linalg::determinant(std::move(m)));
        } else {
            std::vector<LatticeVector> pts;
            for (std::size_t v : ids) pts.push_back(p.local_vertices()[v]);
            total += height * normalized_volume(hull(pts));
        }
    }
    return total;
}

/// P = -P (vertex set closed under negation).
inline bool is_centrally_symmetric(const LatticePolytope& p) {
    return std::all_of(p.vertices().begin(), p.vertices().end(), [&](const LatticeVector& v) {
        return std::binary_search(p.vertices().begin(), p.vertices().end(), negated(v));
    });
}

/// Some facet F has -F as a facet.
inline bool is_pseudo_symmetric(const LatticePolytope& p) {
    std::set<std::vector<LatticeVector>> faces;
    for (const auto& ids : p.facet_vertices()) {
        std::vector<LatticeVector> pts;
        for (std::size_t v : ids) pts.push_back(p.vertices()[v]);
        std::sort(pts.begin(), pts.end());
        faces.insert(std::move(pts));
    }
    for (const auto& face : faces) {
        std::vector<LatticeVector> neg;
        for (const auto& v : face) neg.push_back(negated(v));
        std::sort(neg.begin(), neg.end());
        if (faces.count(neg)) return true;
    }
    return false;
}

inline Fingerprint fingerprint(const LatticePolytope& p) {
    Fingerprint fp;
    fp.dim = p.dim();
    fp.vertex_count = p.vertices().size();
    fp.facet_count = p.facets().size();
    fp.boundary_lattice_point_count = lattice_point_census(p).boundary.size();
    fp.normalized_volume = normalized_volume(p);
    fp.centrally_symmetric = is_centrally_symmetric(p);
    fp.pseudo_symmetric = is_pseudo_symmetric(p);
    return fp;
}

// ---------------------------------------------------------------------------
// Free sums

/// conv({(a, 0)} ∪ {(0, b)}) for full-dimensional p1, p2 with the origin in
/// their interiors.
inline LatticePolytope free_sum(const LatticePolytope& p1, const LatticePolytope& p2) {
    for (const auto* p : {&p1, &p2}) {
        if (!p->full_dimensional() || !p->origin_in_relative_interior()) {
            throw std::invalid_argument("free_sum: summands must be full-dimensional with the origin in the interior");
        }
    }
    const std::size_t n1 = p1.ambient_dim(), n2 = p2.ambient_dim();
    std::vector<LatticeVector> pts;
    for (const auto& v : p1.vertices()) {
        LatticeVector x(n1 + n2);
        std::copy(v.begin(), v.end(), x.begin());
        pts.push_back(std::move(x));
    }
    for (const auto& v : p2.vertices()) {
        LatticeVector x(n1 + n2);
        std::copy(v.begin(), v.end(), x.begin() + static_cast<std::ptrdiff_t>(n1));
        pts.push_back(std::move(x));
    }
    return hull(pts);
}

}  // namespace fanograph
