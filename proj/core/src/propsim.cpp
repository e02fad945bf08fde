#include "liealg/propsim.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace liealg {

namespace {

using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;

bool all_rational(const Mat& m) { return m.is_rational(); }

Scalar power(const Scalar& c, std::size_t e) {
    Scalar r(1);
    for (std::size_t i = 0; i < e; ++i) r *= c;
    return r;
}

Float to_float(const Rational& q) {
    Float n(q.numerator().get_str());
    Float d(q.denominator().get_str());
    return n / d;
}

using FMat = std::vector<std::vector<Float>>;

std::size_t numeric_rank(FMat m, const Float& tol) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (abs(m[i][c]) > abs(m[best][c])) best = i;
        if (abs(m[best][c]) <= tol) continue;
        std::swap(m[best], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Float f = m[i][c] / m[r][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Matrix of X -> P X - X Q acting on vec(X).
FMat sylvester(const FMat& p, const FMat& q) {
    std::size_t n = p.size();
    FMat s(n * n, std::vector<Float>(n * n, Float(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                s[row][k * n + j] += p[i][k];
                s[row][i * n + k] -= q[k][j];
            }
        }
    return s;
}

Float max_abs(const FMat& m) {
    Float best(0);
    for (const auto& r : m)
        for (const auto& x : r)
            if (abs(x) > best) best = abs(x);
    return best;
}

// Byrnes-Gauger: P ~ Q iff dim C(P,P) = dim C(P,Q) = dim C(Q,Q).
bool numeric_similar(const FMat& p, const FMat& q) {
    Float scale = std::max(max_abs(p), max_abs(q));
    if (scale == 0) scale = 1;
    Float tol = scale * Float("1e-20");
    std::size_t r1 = numeric_rank(sylvester(p, p), tol);
    std::size_t r2 = numeric_rank(sylvester(p, q), tol);
    std::size_t r3 = numeric_rank(sylvester(q, q), tol);
    return r1 == r2 && r2 == r3;
}

FMat to_fmat(const Mat& m, const Float& c) {
    FMat f(m.rows(), std::vector<Float>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f[i][j] = c * to_float(m(i, j).rational());
    return f;
}

std::optional<Scalar> exact_candidate(const Rational& magnitude, std::size_t k, int sign) {
    bool ok = false;
    Rational r = Rational::root(magnitude, static_cast<unsigned>(k), ok);
    if (ok) return Scalar(sign < 0 ? -r : r);
    if (k % 2 == 0) {
        Rational sq = Rational::root(magnitude, static_cast<unsigned>(k / 2), ok);
        if (ok) {
            Scalar s = Scalar::sqrt_of(sq);
            return sign < 0 ? -s : s;
        }
    }
    return std::nullopt;
}

}  // namespace

bool verify_prop_witness(const Mat& a, const Mat& b, const Scalar& c, const Mat& conj) {
    auto inv = try_inverse(conj);
    if (!inv || c.is_zero()) return false;
    return a.scaled(c) == (*inv) * b * conj;
}

PropSimVerdict prop_similar(const Mat& a, const Mat& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw DimensionError("prop_similar needs square matrices of equal size");
    if (!all_rational(a) || !all_rational(b)) throw std::invalid_argument("prop_similar needs rational matrices");
    std::size_t n = a.rows();
    PropSimVerdict v;
    Poly pa = char_poly(a), pb = char_poly(b);
    auto coef = [n](const Poly& p, std::size_t k) { return p.coeff(n - k); };  // coefficient of x^(n-k)

    bool nil_a = true, nil_b = true;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!coef(pa, k).is_zero()) nil_a = false;
        if (!coef(pb, k).is_zero()) nil_b = false;
    }
    if (nil_a != nil_b) return v;
    if (nil_a) {
        if (!similar(a, b)) return v;
        auto conj = similarity_conjugator(a, b);
        if (!conj) throw std::logic_error("similar matrices without conjugator");
        v.equivalent = true;
        v.c = Scalar(1);
        v.C = std::move(conj);
        return v;
    }

    std::size_t k = 1;
    while (coef(pa, k).is_zero()) ++k;
    Scalar bk = coef(pb, k);
    if (bk.is_zero()) return v;
    Rational q = (bk / coef(pa, k)).rational();
    if (k % 2 == 0 && q.sign() < 0) return v;

    std::vector<int> signs;
    if (k % 2 == 1)
        signs = {q.sign()};
    else
        signs = {1, -1};
    Rational mag = q.abs();

    for (int s : signs) {
        auto c = exact_candidate(mag, k, s);
        if (c) {
            bool consistent = true;
            for (std::size_t i = 1; i <= n && consistent; ++i)
                consistent = power(*c, i) * coef(pa, i) == coef(pb, i);
            if (!consistent) continue;
            Mat ca = a.scaled(*c);
            if (!similar(ca, b)) continue;
            auto conj = similarity_conjugator(ca, b);
            if (!conj) throw std::logic_error("similar matrices without conjugator");
            v.equivalent = true;
            v.mode = PropSimVerdict::Mode::Exact;
            v.c = *c;
            v.C = std::move(conj);
            return v;
        }
        // irrational of degree > 2: numeric regime
        Float root = pow(to_float(mag), Float(1) / Float(static_cast<long long>(k)));
        if (s < 0) root = -root;
        Float tol = Float("1e-20");
        bool consistent = true;
        for (std::size_t i = 1; i <= n && consistent; ++i) {
            Float lhs = pow(root, static_cast<long long>(i)) * to_float(coef(pa, i).rational());
            Float rhs = to_float(coef(pb, i).rational());
            Float sc = std::max(Float(1), std::max(Float(abs(lhs)), Float(abs(rhs))));
            consistent = abs(lhs - rhs) <= tol * sc;
        }
        if (!consistent) continue;
        if (!numeric_similar(to_fmat(a, root), to_fmat(b, Float(1)))) continue;
        v.equivalent = true;
        v.mode = PropSimVerdict::Mode::NumericFallback;
        std::ostringstream os;
        os << std::setprecision(30) << root;
        v.c_numeric = os.str();
        return v;
    }
    v.mode = PropSimVerdict::Mode::Exact;
    return v;
}

const char* variant_name(Gl2Class::Variant v) {
    switch (v) {
        case Gl2Class::Variant::Diagonal: return "diagonal";
        case Gl2Class::Variant::Jordan: return "jordan";
        case Gl2Class::Variant::Elliptic: return "elliptic";
    }
    return "?";
}

Mat elliptic_representative(const Rational& j) {
    if (j.sign() < 0 || j >= Rational(4)) throw ParamOutOfDomain("elliptic key must lie in [0, 4)");
    if (j.is_zero()) return Mat{{0, -1}, {1, 0}};
    return Mat{{Scalar(0), Scalar(-j)}, {Scalar(1), Scalar(j)}};
}

Gl2Class gl2_proportional_class(const Mat& a) {
    if (a.rows() != 2 || a.cols() != 2) throw DimensionError("expected a 2x2 matrix");
    Scalar d = det(a);
    if (d.is_zero()) throw SingularInput("matrix is singular");
    Scalar t = a.trace();
    Gl2Class g{};
    g.spectrum = classify_spectrum_2x2(a);
    g.key = (t * t / d).rational();
    using K = SpectralClass2x2::Kind;
    switch (g.spectrum.kind) {
        case K::RealRepeatedDiagonalizable: {
            g.variant = Gl2Class::Variant::Diagonal;
            g.scale = g.spectrum.mu1.inverse();
            g.conjugator = Mat::identity(2);
            g.lambda = Scalar(1);
            break;
        }
        case K::RealDistinct: {
            g.variant = Gl2Class::Variant::Diagonal;
            Scalar n1 = g.spectrum.mu1, n2 = g.spectrum.mu2;
            // first eigenvalue: larger absolute value; on a tie the positive one
            Scalar abs1 = n1.sign() < 0 ? -n1 : n1;
            Scalar abs2 = n2.sign() < 0 ? -n2 : n2;
            if (abs2 > abs1 || (abs1 == abs2 && n2.sign() > 0)) std::swap(n1, n2);
            g.scale = n1.inverse();
            g.lambda = n2 / n1;
            Vec v1 = eigenvectors_2x2(a, n1).at(0);
            Vec v2 = eigenvectors_2x2(a, n2).at(0);
            g.conjugator = Mat::from_columns({v1, v2}, 2);
            break;
        }
        case K::RealRepeatedJordan: {
            g.variant = Gl2Class::Variant::Jordan;
            g.scale = g.spectrum.mu1.inverse();
            Mat n = a.scaled(g.scale) - Mat::identity(2);
            Vec w = is_zero(n.apply(unit_vector(2, 0))) ? unit_vector(2, 1) : unit_vector(2, 0);
            g.conjugator = Mat::from_columns({n.apply(w), w}, 2);
            g.lambda = Scalar(1);
            break;
        }
        case K::ComplexPair: {
            g.variant = Gl2Class::Variant::Elliptic;
            g.orientation = t.sign();
            g.scale = t.is_zero() ? Scalar::sqrt_of(d.rational()).inverse() : t / d;
            Mat ca = a.scaled(g.scale);
            Vec e1 = unit_vector(2, 0);
            g.conjugator = Mat::from_columns({e1, ca.apply(e1)}, 2);
            break;
        }
    }
    g.canonical = g.variant == Gl2Class::Variant::Diagonal ? Mat::diagonal({Scalar(1), g.lambda})
                  : g.variant == Gl2Class::Variant::Jordan ? Mat{{1, 1}, {0, 1}}
                                                           : elliptic_representative(g.key);
    if (!(inverse(g.conjugator) * a.scaled(g.scale) * g.conjugator == g.canonical))
        throw std::logic_error("GL2 normalization failed for " + a.str());
    return g;
}

}  // namespace liealg
