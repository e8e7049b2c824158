#pragma once

// Facet enumeration of a full-dimensional lattice point set by the
// double-description method on the homogenized cone over {(1, p)}.
//
// The H-representation is kept irredundant after every insertion, so the
// combinatorial adjacency test (no third inequality vanishes on the common
// zero set) is exact.

#include "exact.hpp"
#include "linear_algebra.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fanograph::dd {

/// <normal, x> <= offset, primitive, valid for every input point.
template <class Int>
struct Inequality {
    std::vector<Int> normal;
    Int offset;
};

namespace detail {

template <class Int>
struct ConeFacet {
    std::vector<Int> h;  // h . (1, p) >= 0
    boost::dynamic_bitset<> zeros;  // processed generators with h . g = 0
};

template <class Int>
std::vector<Int> combine(const std::vector<Int>& pos, const Int& spos, const std::vector<Int>& negv, const Int& sneg) {
    // spos > 0 > sneg; result vanishes on the new generator.
    std::vector<Int> out(pos.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = exact::sub(exact::mul(spos, negv[i]), exact::mul(sneg, pos[i]));
    }
    exact::make_primitive(out);
    return out;
}

}  // namespace detail

/// Facets of conv(points) for points spanning Z^dim affinely. Throws
/// std::invalid_argument when the points are not full-dimensional.
template <class Int>
std::vector<Inequality<Int>> facets(const Rows<Int>& points, std::size_t dim) {
    using detail::ConeFacet;
    const std::size_t count = points.size();
    const std::size_t n = dim + 1;
    if (dim == 0) return {};

    Rows<Int> gens(count, std::vector<Int>(n));
    for (std::size_t i = 0; i < count; ++i) {
        gens[i][0] = 1;
        for (std::size_t k = 0; k < dim; ++k) gens[i][k + 1] = points[i][k];
    }

    // Greedy choice of n linearly independent generators for the start simplex.
    std::vector<std::size_t> basis;
    {
        Rows<Int> chosen;
        for (std::size_t i = 0; i < count && basis.size() < n; ++i) {
            chosen.push_back(gens[i]);
            if (linalg::rank(chosen) == chosen.size()) {
                basis.push_back(i);
            } else {
                chosen.pop_back();
            }
        }
    }
    if (basis.size() < n) throw std::invalid_argument("facet enumeration needs a full-dimensional point set");

    std::vector<ConeFacet<Int>> cone;
    {
        Rows<Int> m;
        for (std::size_t i : basis) m.push_back(gens[i]);
        const int det_sign = exact::sign(linalg::determinant(m));
        // Column i of adj(m), signed so that h_i . g_i > 0.
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> h(n);
            for (std::size_t k = 0; k < n; ++k) {
                Rows<Int> minor;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == i) continue;
                    std::vector<Int> row;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (c != k) row.push_back(m[r][c]);
                    }
                    minor.push_back(std::move(row));
                }
                Int cof = linalg::determinant(std::move(minor));
                if ((i + k) % 2) cof = exact::neg(cof);
                h[k] = det_sign < 0 ? exact::neg(cof) : cof;
            }
            exact::make_primitive(h);
            ConeFacet<Int> f{std::move(h), boost::dynamic_bitset<>(count)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) f.zeros.set(basis[j]);
            }
            cone.push_back(std::move(f));
        }
    }

    std::vector<bool> in_basis(count, false);
    for (std::size_t i : basis) in_basis[i] = true;

    for (std::size_t t = 0; t < count; ++t) {
        if (in_basis[t]) continue;
        const std::vector<Int>& g = gens[t];
        std::vector<Int> s(cone.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < cone.size(); ++i) {
            s[i] = exact::dot(cone[i].h, g);
            if (s[i] > 0) {
                pos.push_back(i);
            } else if (s[i] < 0) {
                neg.push_back(i);
            }
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < cone.size(); ++i) {
                if (s[i] == 0) cone[i].zeros.set(t);
            }
            continue;
        }
        std::vector<ConeFacet<Int>> next;
        next.reserve(cone.size() + pos.size());
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                boost::dynamic_bitset<> common = cone[p].zeros & cone[q].zeros;
                if (common.count() + 1 < dim) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < cone.size() && adjacent; ++o) {
                    if (o == p || o == q) continue;
                    if (common.is_subset_of(cone[o].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                ConeFacet<Int> f{detail::combine(cone[p].h, s[p], cone[q].h, s[q]), std::move(common)};
                f.zeros.set(t);
                next.push_back(std::move(f));
            }
        }
        for (std::size_t i = 0; i < cone.size(); ++i) {
            if (s[i] > 0) {
                next.push_back(std::move(cone[i]));
            } else if (s[i] == 0) {
                cone[i].zeros.set(t);
                next.push_back(std::move(cone[i]));
            }
        }
        cone = std::move(next);
    }

    std::vector<Inequality<Int>> out;
    out.reserve(cone.size());
    for (auto& f : cone) {
        Inequality<Int> ineq;
        ineq.offset = f.h[0];
        ineq.normal.resize(dim);
        for (std::size_t k = 0; k < dim; ++k) ineq.normal[k] = exact::neg(f.h[k + 1]);
        out.push_back(std::move(ineq));
    }
    return out;
}

}  // namespace fanograph::dd
