#pragma once

// Exact linear algebra over Z and Q: fraction-free elimination (rank,
// determinant), integer kernels, saturated lattice bases and coordinate solves.

#include "exact.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace fanograph {

template <class T>
using Rows = std::vector<std::vector<T>>;

namespace linalg {

/// Rank by Bareiss fraction-free elimination. Every intermediate entry is a
/// minor of the input, so the divisions are exact.
template <class Int>
std::size_t rank(Rows<Int> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = exact::sub(exact::mul(m[r][c], m[i][j]), exact::mul(m[i][c], m[r][j])) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

template <class Int>
Int determinant(Rows<Int> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int swaps = 0;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            ++swaps;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact::sub(exact::mul(m[k][k], m[i][j]), exact::mul(m[i][k], m[k][j])) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return swaps % 2 ? exact::neg(d) : d;
}

/// Affine rank of a point set (dimension of its affine hull); -1 encoded as
/// std::nullopt for the empty set.
template <class Int>
std::optional<std::size_t> affine_rank(const Rows<Int>& points) {
    if (points.empty()) return std::nullopt;
    Rows<Int> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Int> d(points[i].size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = exact::sub(points[i][k], points[0][k]);
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

/// Z-basis of {x in Z^n : A x = 0} for A given as rows of length n.
///
/// Unimodular row operations bring [A^T | I] to echelon form; the rows of the
/// transformed identity that sit next to zero rows of A^T span the kernel.
inline Rows<Integer> integer_kernel(const Rows<Integer>& a, std::size_t n) {
    const std::size_t k = a.size();
    Rows<Integer> b(n, std::vector<Integer>(k));
    Rows<Integer> u(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) b[i][j] = a[j][i];
        u[i][i] = 1;
    }
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < k; ++j) b[dst][j] -= q * b[src][j];
        for (std::size_t j = 0; j < n; ++j) u[dst][j] -= q * u[src][j];
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i) {
                if (b[i][c] != 0 && (best == n || abs(b[i][c]) < abs(b[best][c]))) best = i;
            }
            if (best == n) break;
            std::swap(b[best], b[r]);
            std::swap(u[best], u[r]);
            bool clean = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (b[i][c] == 0) continue;
                Integer q = b[i][c] / b[r][c];
                row_axpy(i, r, q);
                if (b[i][c] != 0) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }
    Rows<Integer> kernel;
    for (std::size_t i = r; i < n; ++i) kernel.push_back(std::move(u[i]));
    return kernel;
}

/// Z-basis of Z^n ∩ span_Q(vectors). Empty input gives an empty basis.
inline Rows<Integer> saturated_basis(const Rows<Integer>& vectors, std::size_t n) {
    if (vectors.empty() || rank(vectors) == 0) return {};
    Rows<Integer> orth = integer_kernel(vectors, n);
    if (orth.empty()) {
        Rows<Integer> id(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }
    return integer_kernel(orth, n);
}

/// Solves sum_k y_k basis[k] = p over Q. Returns std::nullopt when p is not in
/// the span. `basis` must be linearly independent.
inline std::optional<std::vector<Rational>> solve_in_basis(const Rows<Integer>& basis, const LatticeVector& p) {
    const std::size_t r = basis.size();
    const std::size_t n = p.size();
    // Augmented system with n equations in r unknowns.
    Rows<Rational> m(n, std::vector<Rational>(r + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < r; ++k) m[i][k] = Rational(basis[k][i]);
        m[i][r] = Rational(p[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r && row < n; ++c) {
        std::size_t piv = row;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        const Rational lead = m[row][c];
        for (std::size_t j = c; j <= r; ++j) m[row][j] /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j <= r; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i) {
        if (m[i][r] != 0) return std::nullopt;
    }
    std::vector<Rational> y(r);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = m[i][r];
    return y;
}

/// Integer coordinates of p in a lattice basis; throws if p is not a lattice
/// point of the basis' lattice.
inline LatticeVector lattice_coordinates(const Rows<Integer>& basis, const LatticeVector& p) {
    auto y = solve_in_basis(basis, p);
    if (!y) throw std::domain_error("point " + to_string(p) + " is not in the span of the lattice basis");
    LatticeVector out;
    out.reserve(y->size());
    for (const Rational& q : *y) {
        if (denominator(q) != 1) throw std::domain_error("point " + to_string(p) + " is not in the lattice");
        out.push_back(numerator(q));
    }
    return out;
}

}  // namespace linalg
}  // namespace fanograph
