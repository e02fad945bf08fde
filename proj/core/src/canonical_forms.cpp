#include "liealg/canonical_forms.hpp"

#include <algorithm>

namespace liealg {

Poly char_poly(const Mat& m) {
    if (!m.is_square()) throw DimensionError("char_poly of non-square matrix");
    std::size_t n = m.rows();
    // Faddeev-LeVerrier
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Mat mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Mat next = m * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        c[n - k] = -(m * mk).trace() / Scalar(static_cast<long long>(k));
    }
    return Poly(std::move(c));
}

Mat companion(const Poly& f) {
    int deg = f.degree();
    if (deg < 1) throw DimensionError("companion of constant polynomial");
    Poly g = f.monic();
    std::size_t n = static_cast<std::size_t>(deg);
    Mat c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Scalar(1);
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -g.coeff(i);
    return c;
}

std::vector<Poly> invariant_factors(const Mat& m) {
    if (!m.is_square()) throw DimensionError("invariant factors of non-square matrix");
    std::size_t n = m.rows();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Poly::constant(-m(i, j));
            if (i == j) a[i][j] = a[i][j] + Poly({Scalar(), Scalar(1)});
        }

    auto swap_rows = [&](std::size_t r1, std::size_t r2) { std::swap(a[r1], a[r2]); };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (auto& row : a) std::swap(row[c1], row[c2]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            int best = -1;
            std::size_t bi = k, bj = k;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
                        best = a[i][j].degree();
                        bi = i;
                        bj = j;
                    }
            if (best < 0) break;  // remaining block is zero
            swap_rows(k, bi);
            swap_cols(k, bj);
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                Poly q, r;
                Poly::divmod(a[i][k], a[k][k], q, r);
                for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - q * a[k][j];
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[k][j].is_zero()) continue;
                Poly q, r;
                Poly::divmod(a[k][j], a[k][k], q, r);
                for (std::size_t i = k; i < n; ++i) a[i][j] = a[i][j] - q * a[i][k];
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = k + 1; i < n && divides; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    Poly q, r;
                    Poly::divmod(a[i][j], a[k][k], q, r);
                    if (!r.is_zero()) {
                        for (std::size_t jj = k; jj < n; ++jj) a[k][jj] = a[k][jj] + a[i][jj];
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
    }
    std::vector<Poly> out;
    for (std::size_t k = 0; k < n; ++k) {
        Poly p = a[k][k].monic();
        if (p.degree() >= 1) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return x.degree() < y.degree(); });
    return out;
}

namespace {

Mat block_companion(const std::vector<Poly>& factors, std::size_t n) {
    Mat f(n, n);
    std::size_t off = 0;
    for (const auto& p : factors) {
        Mat c = companion(p);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) f(off + i, off + j) = c(i, j);
        off += c.rows();
    }
    return f;
}

}  // namespace

std::optional<Mat> similarity_conjugator(const Mat& a, const Mat& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw DimensionError("similarity size mismatch");
    std::size_t n = a.rows();
    // unknown C(k,l) at column k*n+l; equation (i,j): sum_l C(i,l) a(l,j) - sum_k b(i,k) C(k,j) = 0
    Mat sys(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t l = 0; l < n; ++l) sys(row, i * n + l) += a(l, j);
            for (std::size_t k = 0; k < n; ++k) sys(row, k * n + j) -= b(i, k);
        }
    std::vector<Vec> ker = kernel(sys);
    if (ker.empty()) return std::nullopt;
    unsigned long long state = 0x9E3779B97F4A7C15ULL;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat c(n, n);
        for (std::size_t s = 0; s < ker.size(); ++s) {
            long long w;
            if (attempt == 0) {
                w = 1;
            } else {
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                w = static_cast<long long>((state >> 33) % 11) - 5;
            }
            if (w == 0) continue;
            for (std::size_t u = 0; u < n * n; ++u)
                if (!ker[s][u].is_zero()) c(u / n, u % n) += ker[s][u] * Scalar(w);
        }
        if (!det(c).is_zero()) return c;
    }
    return std::nullopt;
}

bool similar(const Mat& a, const Mat& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw DimensionError("similarity size mismatch");
    return invariant_factors(a) == invariant_factors(b);
}

FrobeniusForm frobenius_form(const Mat& m) {
    FrobeniusForm f;
    f.factors = invariant_factors(m);
    f.form = block_companion(f.factors, m.rows());
    auto p = similarity_conjugator(f.form, m);
    if (!p) throw std::logic_error("no conjugator onto the Frobenius form");
    f.conjugator = *p;
    return f;
}

const char* kind_name(SpectralClass2x2::Kind k) {
    switch (k) {
        case SpectralClass2x2::Kind::RealDistinct: return "RealDistinct";
        case SpectralClass2x2::Kind::RealRepeatedDiagonalizable: return "RealRepeatedDiagonalizable";
        case SpectralClass2x2::Kind::RealRepeatedJordan: return "RealRepeatedJordan";
        case SpectralClass2x2::Kind::ComplexPair: return "ComplexPair";
    }
    return "?";
}

SpectralClass2x2 classify_spectrum_2x2(const Mat& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionError("expected a 2x2 matrix");
    Scalar t = m.trace();
    Scalar d = det(m);
    Scalar disc = t * t - Scalar(4) * d;
    SpectralClass2x2 s{};
    Scalar half(Rational(1, 2));
    int sg = disc.sign();
    if (sg == 0) {
        s.mu1 = s.mu2 = t * half;
        s.kind = m.is_scalar_multiple_of_identity() ? SpectralClass2x2::Kind::RealRepeatedDiagonalizable
                                                    : SpectralClass2x2::Kind::RealRepeatedJordan;
    } else if (sg > 0) {
        Scalar root = Scalar::sqrt_of(disc.rational());
        s.kind = SpectralClass2x2::Kind::RealDistinct;
        s.mu1 = (t - root) * half;
        s.mu2 = (t + root) * half;
    } else {
        s.kind = SpectralClass2x2::Kind::ComplexPair;
        s.re = (t * half).rational();
        s.im2 = (-(disc.rational())) / Rational(4);
    }
    return s;
}

std::vector<Vec> eigenvectors_2x2(const Mat& m, const Scalar& mu) {
    Mat shifted = m - Mat::identity(2).scaled(mu);
    return kernel(shifted);
}

namespace {

std::size_t lead_index(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

bool echelon_before(const Vec& x, const Vec& y) {
    std::size_t lx = lead_index(x), ly = lead_index(y);
    if (lx != ly) return lx < ly;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] == y[i])) return x[i] < y[i];
    return false;
}

}  // namespace

CommonEigenvector common_eigenvector(const Mat& m1, const Mat& m2) {
    if (m1.rows() != 2 || m2.rows() != 2 || m1.cols() != 2 || m2.cols() != 2) throw DimensionError("expected 2x2 matrices");
    if (!(m1 * m2 == m2 * m1)) throw NonCommuting("matrices do not commute");
    CommonEigenvector out;
    const Mat* pick = nullptr;
    for (const Mat* m : {&m1, &m2}) {
        auto s = classify_spectrum_2x2(*m);
        if (s.kind == SpectralClass2x2::Kind::ComplexPair) {
            out.complex_only = true;
            return out;
        }
        if (!pick && !m->is_scalar_multiple_of_identity()) pick = m;
    }
    if (!pick) {
        out.vector = unit_vector(2, 0);
        return out;
    }
    auto s = classify_spectrum_2x2(*pick);
    std::vector<Vec> cands = eigenvectors_2x2(*pick, s.mu1);
    if (s.kind == SpectralClass2x2::Kind::RealDistinct) {
        auto more = eigenvectors_2x2(*pick, s.mu2);
        cands.insert(cands.end(), more.begin(), more.end());
    }
    for (auto& v : cands) {
        Scalar lead = v[lead_index(v)];
        v = scale(v, lead.inverse());
    }
    out.vector = *std::min_element(cands.begin(), cands.end(), echelon_before);
    return out;
}

}  // namespace liealg
