#pragma once

// Independent reference computations used to cross-check the library.

#include "liealg/canonical_forms.hpp"

#include <optional>
#include <vector>

namespace testing {

using namespace liealg;

using PolyMat = std::vector<std::vector<Poly>>;

// Determinant of a polynomial matrix by cofactor expansion (fine for n <= 5).
inline Poly poly_det(const PolyMat& m) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(Scalar(1));
    if (n == 1) return m[0][0];
    Poly out;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMat minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][c] * poly_det(minor);
        out = c % 2 ? out - term : out + term;
    }
    return out;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors of m from determinantal divisors: d_k = gcd of all k x k minors of xI - m,
// factor_k = d_k / d_{k-1}; constant factors dropped.
inline std::vector<Poly> minor_gcd_invariant_factors(const Mat& m) {
    std::size_t n = m.rows();
    PolyMat xm(n, std::vector<Poly>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            xm[r][c] = r == c ? Poly({-m(r, c), Scalar(1)}) : Poly({-m(r, c)});
    std::vector<Poly> d{Poly::constant(Scalar(1))};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> sets;
        std::vector<std::size_t> cur;
        subsets(n, k, 0, cur, sets);
        Poly g;
        for (const auto& rs : sets)
            for (const auto& cs : sets) {
                PolyMat sub;
                for (auto r : rs) {
                    std::vector<Poly> row;
                    for (auto c : cs) row.push_back(xm[r][c]);
                    sub.push_back(std::move(row));
                }
                Poly det = poly_det(sub);
                if (!det.is_zero()) g = g.is_zero() ? det.monic() : Poly::gcd(g, det);
            }
        d.push_back(g);
    }
    std::vector<Poly> out;
    for (std::size_t k = 1; k <= n; ++k) {
        Poly q, r;
        Poly::divmod(d[k], d[k - 1], q, r);
        if (q.degree() > 0) out.push_back(q.monic());
    }
    return out;
}

// Exhaustive search for an integer C with entries in [-b, b], det C != 0 and C a == b_ C.
inline std::optional<Mat> brute_conjugator(const Mat& a, const Mat& target, int b) {
    std::size_t n = a.rows(), cells = n * n;
    std::vector<int> e(cells, -b);
    while (true) {
        Mat c(n, n);
        for (std::size_t i = 0; i < cells; ++i) c(i / n, i % n) = Scalar(e[i]);
        if (c * a == target * c && !det(c).is_zero()) return c;
        std::size_t i = 0;
        while (i < cells && e[i] == b) e[i++] = -b;
        if (i == cells) return std::nullopt;
        ++e[i];
    }
}

}  // namespace testing
