#include "liealg/classify.hpp"

#include <sstream>

namespace liealg {

namespace {

struct FamilyInfo {
    Family f;
    const char* name;
};

const FamilyInfo kFamilies[] = {
    {Family::G3_2_1, "G3_2_1"},
    {Family::G3_2_2, "G3_2_2"},
    {Family::G3_2_3, "G3_2_3"},
    {Family::G4_2_1, "G4_2_1"},
    {Family::G4_2_2, "G4_2_2"},
    {Family::G4_2_3, "G4_2_3"},
    {Family::G4_2_4_AffC, "G4_2_4_AffC"},
    {Family::G5p2k_2, "G5p2k_2"},
    {Family::G6p2k_2_1, "G6p2k_2_1"},
    {Family::G6p2k_2_2, "G6p2k_2_2"},
    {Family::AffR_plus_AffR, "AffR_plus_AffR"},
    {Family::AffR_plus_Heis, "AffR_plus_Heis"},
    {Family::TwoStepNilpotent_OutOfScope, "TwoStepNilpotent_OutOfScope"},
};

// Column operations on a basis-change matrix; each call acts on the current columns.
struct Ops {
    Mat s;
    explicit Ops(std::size_t n) : s(Mat::identity(n)) {}

    // X_i += c X_j
    void add(std::size_t i, std::size_t j, const Scalar& c) {
        if (c.is_zero()) return;
        for (std::size_t r = 0; r < s.rows(); ++r) s(r, i) += c * s(r, j);
    }
    void scale(std::size_t i, const Scalar& c) {
        for (std::size_t r = 0; r < s.rows(); ++r) s(r, i) *= c;
    }
    void swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s(r, i), s(r, j));
    }
    // (X_a, X_b) := (X_a, X_b) K
    void mix(std::size_t a, std::size_t b, const Mat& k) {
        for (std::size_t r = 0; r < s.rows(); ++r) {
            Scalar xa = s(r, a), xb = s(r, b);
            s(r, a) = k(0, 0) * xa + k(1, 0) * xb;
            s(r, b) = k(0, 1) * xa + k(1, 1) * xb;
        }
    }
};

struct Frame {
    StructureTensor t;
    BasisChange T;
    std::vector<std::string> steps;

    explicit Frame(StructureTensor in) : t(std::move(in)), T(BasisChange::identity(t.dim())) {}

    void apply(const Mat& s, std::string note) {
        if (s == Mat::identity(s.rows())) return;
        BasisChange b(s);
        t = transform(t, b);
        T = T.then(b);
        steps.push_back(std::move(note));
    }
    void apply(const Ops& o, std::string note) { apply(o.s, std::move(note)); }

    std::size_t n() const { return t.dim(); }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return t.coeff(i, j, k); }
    Mat a(std::size_t i) const { return framed_adjoint(t, i); }

    Classification finish(const ClassLabel& label) {
        StructureTensor canon = canonical_tensor(label);
        if (!(canon == t)) throw ImpossibleBranch("normalized tensor differs from the canonical " + label.str());
        return Classification{label, Witness{T, steps}, t};
    }
};

Vec flat(const Mat& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

// [X_i, X_j] has no component outside span(X1, X2) for i, j >= from; checks it vanishes entirely.
void require_commuting_tail(const Frame& f, std::size_t from, const char* what) {
    for (std::size_t i = from; i < f.n(); ++i)
        for (std::size_t j = i + 1; j < f.n(); ++j)
            if (f.t.pair_nonzero(i, j)) throw ImpossibleBranch(what);
}

void require_tail_brackets_in_g1(const Frame& f) {
    for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = i + 1; j < f.n(); ++j)
            for (std::size_t k = 2; k < f.n(); ++k)
                if (!f.c(i, j, k).is_zero()) throw ImpossibleBranch("bracket leaves span(X1, X2)");
}

// Skew form ω on a block of basis vectors together with the column operations producing it.
struct Symplectic {
    Mat w, s;
    explicit Symplectic(Mat omega) : w(std::move(omega)), s(Mat::identity(w.rows())) {}
    std::size_t size() const { return w.rows(); }

    void add(std::size_t a, std::size_t b, const Scalar& c) {
        if (c.is_zero()) return;
        for (std::size_t r = 0; r < size(); ++r) s(r, a) += c * s(r, b);
        for (std::size_t j = 0; j < size(); ++j) w(a, j) += c * w(b, j);
        for (std::size_t i = 0; i < size(); ++i) w(i, a) += c * w(i, b);
    }
    void scale(std::size_t a, const Scalar& c) {
        for (std::size_t r = 0; r < size(); ++r) s(r, a) *= c;
        for (std::size_t j = 0; j < size(); ++j) w(a, j) *= c;
        for (std::size_t i = 0; i < size(); ++i) w(i, a) *= c;
    }
    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < size(); ++r) std::swap(s(r, a), s(r, b));
        for (std::size_t j = 0; j < size(); ++j) std::swap(w(a, j), w(b, j));
        for (std::size_t i = 0; i < size(); ++i) std::swap(w(i, a), w(i, b));
    }

    // Chain [Y0, Y1] = [Y1, Y2] = ... = 1, smallest partner index first. Returns the chain end.
    std::size_t chain() {
        std::size_t cur = 0;
        while (true) {
            std::size_t j = cur + 1;
            while (j < size() && w(cur, j).is_zero()) ++j;
            if (j >= size()) return cur;
            swap(j, cur + 1);
            Scalar piv = w(cur, cur + 1);
            for (std::size_t k = cur + 2; k < size(); ++k) add(k, cur + 1, -(w(cur, k) / piv));
            scale(cur + 1, piv.inverse());
            ++cur;
        }
    }

    // Darboux normalization of the block starting at p; returns the number of pairs.
    std::size_t darboux(std::size_t p) {
        std::size_t pairs = 0;
        while (true) {
            std::size_t bi = size(), bj = size();
            for (std::size_t i = p; i < size() && bi == size(); ++i)
                for (std::size_t j = i + 1; j < size(); ++j)
                    if (!w(i, j).is_zero()) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == size()) return pairs;
            swap(bi, p);
            if (bj == p) bj = bi;
            swap(bj, p + 1);
            scale(p + 1, w(p, p + 1).inverse());
            for (std::size_t k = p + 2; k < size(); ++k) {
                Scalar alpha = -w(k, p + 1), beta = w(k, p);
                add(k, p, alpha);
                add(k, p + 1, beta);
            }
            p += 2;
            ++pairs;
        }
    }

    // Cumulative telescoping from the chain end backwards. Returns true when Y0 stays paired.
    bool telescope(std::size_t end) {
        if (end % 2 == 0) {
            for (std::size_t i = end / 2; i-- > 0;) add(2 * i, 2 * i + 2, Scalar(1));
            return false;
        }
        for (std::size_t i = (end - 1) / 2; i-- > 0;) add(2 * i + 1, 2 * i + 3, Scalar(1));
        return true;
    }
};

Mat embed(const Mat& block, std::size_t n, std::size_t at) {
    Mat s = Mat::identity(n);
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) s(at + i, at + j) = block(i, j);
    return s;
}

Classification run_nonsingular(Frame& f) {
    std::size_t n = f.n();
    require_commuting_tail(f, 3, "[Xi, Xj] != 0 for i, j >= 4 with a_X3 nonsingular");
    Mat A = f.a(2);
    Mat Ainv = inverse(A);
    Ops clear(n);
    for (std::size_t k = 3; k < n; ++k) {
        Vec u = Ainv.apply({f.c(2, k, 0), f.c(2, k, 1)});
        clear.add(k, 0, -u[0]);
        clear.add(k, 1, -u[1]);
    }
    f.apply(clear, "clear [X3, Xk] by a_X3^-1");

    Gl2Class g = gl2_proportional_class(f.a(2));
    Ops norm(n);
    norm.mix(0, 1, g.conjugator);
    norm.scale(2, g.scale);
    f.apply(norm, std::string("normalize a_X3 to the ") + variant_name(g.variant) + " representative");

    int d = static_cast<int>(n) - 3;
    switch (g.variant) {
        case Gl2Class::Variant::Diagonal: return f.finish(ClassLabel::g3_2_1(g.lambda, d));
        case Gl2Class::Variant::Jordan: return f.finish(ClassLabel::simple(Family::G3_2_2, d));
        case Gl2Class::Variant::Elliptic: {
            ClassLabel l = ClassLabel::g3_2_3(g.key, d);
            l.orientation = g.orientation;
            return f.finish(l);
        }
    }
    throw ImpossibleBranch("unknown GL2 variant");
}

Classification run_singular(Frame& f) {
    std::size_t n = f.n();
    if (n < 4) throw ImpossibleBranch("singular a_X3 needs n >= 4");
    Mat A = f.a(2);
    Scalar tr = A.trace();
    bool traced = !tr.is_zero();

    Ops norm(n);
    if (traced) {
        Vec vt = eigenvectors_2x2(A, tr).at(0);
        Vec v0 = eigenvectors_2x2(A, Scalar(0)).at(0);
        norm.mix(0, 1, Mat::from_columns({vt, v0}, 2));
        norm.scale(2, tr.inverse());
        f.apply(norm, "a_X3 -> diag(1, 0)");
    } else {
        Vec w = is_zero(A.apply(unit_vector(2, 0))) ? unit_vector(2, 1) : unit_vector(2, 0);
        norm.mix(0, 1, Mat::from_columns({w, A.apply(w)}, 2));
        f.apply(norm, "a_X3 -> [[0,0],[1,0]]");
    }

    for (std::size_t i = 3; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!f.c(i, j, 0).is_zero()) throw ImpossibleBranch("[Xi, Xj] outside ker a_X3");

    Ops clean(n);
    for (std::size_t k = 3; k < n; ++k) clean.add(k, 0, -f.c(2, k, traced ? 0 : 1));
    f.apply(clean, "clear the X1-free part of [X3, Xk]");

    std::size_t base = 2;
    if (!traced) {
        std::size_t k = 3;
        while (k < n && f.c(2, k, 0).is_zero()) ++k;
        if (k == n) throw ImpossibleBranch("nilpotent a_X3 with [X3, Xk] = 0 for all k");
        Ops sw(n);
        sw.swap(k, 3);
        f.apply(sw, "renumber so that [X3, X4] has an X1 component");
        Ops el(n);
        Scalar p3 = f.c(2, 3, 0);
        for (std::size_t j = 4; j < n; ++j) el.add(j, 3, -(f.c(2, j, 0) / p3));
        el.scale(3, p3.inverse());
        f.apply(el, "[X3, X4] = X1, [X3, Xk] = 0 for k >= 5");
        base = 3;
    }

    std::size_t m = n - base;
    Mat omega(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) omega(i, j) = f.c(base + i, base + j, 1);
    Symplectic sym(omega);
    std::size_t end = sym.chain();
    std::size_t rest = sym.darboux(end + 1);
    bool paired = sym.telescope(end);
    std::size_t pairs = (paired ? (end + 1) / 2 : end / 2) + rest;
    std::ostringstream note;
    note << "chain of length " << end << ", telescoped, " << rest << " Darboux pairs in the remainder";
    f.apply(embed(sym.s, n, base), note.str());

    int in = static_cast<int>(n), p = static_cast<int>(pairs);
    if (traced) {
        if (paired) {
            if (p == 1) return f.finish(ClassLabel::simple(Family::G4_2_1, in - 4));
            return f.finish(ClassLabel::with_k(Family::G6p2k_2_1, p - 2, in - 4 - 2 * (p - 1)));
        }
        if (p == 0) throw ImpossibleBranch("dim G^1 < 2 in the traced singular case");
        return f.finish(ClassLabel::heis(p, in - 3 - 2 * p));
    }
    if (paired) return f.finish(ClassLabel::with_k(Family::G5p2k_2, p - 1, in - 5 - 2 * (p - 1)));
    if (p == 0) {
        Ops sw(n);
        sw.swap(0, 1);
        f.apply(sw, "swap X1 and X2");
        return f.finish(ClassLabel::simple(Family::G4_2_2, in - 4));
    }
    return f.finish(ClassLabel::with_k(Family::G6p2k_2_2, p - 1, in - 6 - 2 * (p - 1)));
}

// a = p I + q J with J(0,1) = 1; returns (p, q).
std::pair<Scalar, Scalar> split(const Mat& a, const Mat& j) {
    Scalar p = a(0, 0), q = a(0, 1);
    if (!(Mat::identity(2).scaled(p) + j.scaled(q) == a)) throw ImpossibleBranch("a_X outside span(I, J)");
    return {p, q};
}

void clear_by_identity_generator(Frame& f) {
    std::size_t n = f.n();
    require_commuting_tail(f, 4, "[Xi, Xj] != 0 for i, j >= 5 with a_X4 = I");
    Ops tail(n);
    for (std::size_t k = 4; k < n; ++k) {
        tail.add(k, 0, -f.c(3, k, 0));
        tail.add(k, 1, -f.c(3, k, 1));
    }
    f.apply(tail, "clear [X4, Xk]");
    for (std::size_t k = 4; k < n; ++k)
        if (f.t.pair_nonzero(2, k)) throw ImpossibleBranch("[X3, Xk] != 0 after clearing [X4, Xk]");
    Ops top(n);
    top.add(2, 0, f.c(2, 3, 0));
    top.add(2, 1, f.c(2, 3, 1));
    f.apply(top, "clear [X3, X4]");
}

Classification run_two_dim(Frame& f) {
    std::size_t n = f.n();
    std::size_t i2 = 2;
    while (i2 < n && f.a(i2).is_zero()) ++i2;
    std::size_t i3 = i2 + 1;
    while (i3 < n && Subspace::span({flat(f.a(i2)), flat(f.a(i3))}, 4).dim() < 2) ++i3;
    if (i3 >= n) throw ImpossibleBranch("dim 𝒜_G = 2 without two independent generators");
    Ops mv(n);
    mv.swap(i2, 2);
    mv.swap(i3 == 2 ? i2 : i3, 3);
    f.apply(mv, "move the generators of 𝒜_G to X3, X4");

    Mat A2 = f.a(2), A3 = f.a(3);
    Mat sys = Mat::from_columns({flat(A2), flat(A3)}, 4);
    Ops iso(n);
    for (std::size_t k = 4; k < n; ++k) {
        auto ab = solve(sys, flat(f.a(k)));
        if (!ab) throw ImpossibleBranch("a_Xk outside span(a_X3, a_X4)");
        iso.add(k, 2, -(*ab)[0]);
        iso.add(k, 3, -(*ab)[1]);
    }
    f.apply(iso, "a_Xk = 0 for k >= 5");
    if (!(A2 * A3 == A3 * A2)) throw ImpossibleBranch("𝒜_G is not commutative");

    const Mat& M = A2.is_scalar_multiple_of_identity() ? A3 : A2;
    SpectralClass2x2 spec = classify_spectrum_2x2(M);
    int d = static_cast<int>(n) - 4;
    using K = SpectralClass2x2::Kind;

    if (spec.kind == K::RealDistinct) {
        Vec v1 = eigenvectors_2x2(M, spec.mu1).at(0);
        Vec v2 = eigenvectors_2x2(M, spec.mu2).at(0);
        Mat P = Mat::from_columns({v1, v2}, 2), Pinv = inverse(P);
        Mat D2 = Pinv * A2 * P, D3 = Pinv * A3 * P;
        Mat coeffs{{D2(0, 0), D3(0, 0)}, {D2(1, 1), D3(1, 1)}};
        Ops diag(n);
        diag.mix(0, 1, P);
        diag.mix(2, 3, inverse(coeffs));
        f.apply(diag, "common eigenbasis, a_X3 = diag(1,0), a_X4 = diag(0,1)");
        if (!(f.a(2) == Mat::diagonal({Scalar(1), Scalar(0)})) || !(f.a(3) == Mat::diagonal({Scalar(0), Scalar(1)})))
            throw ImpossibleBranch("simultaneous diagonalization failed");

        require_commuting_tail(f, 4, "[Xi, Xj] != 0 for i, j >= 5 in the split case");
        Ops tail(n);
        for (std::size_t k = 4; k < n; ++k) {
            if (!f.c(2, k, 1).is_zero() || !f.c(3, k, 0).is_zero()) throw ImpossibleBranch("mixed weight bracket");
            tail.add(k, 0, -f.c(2, k, 0));
            tail.add(k, 1, -f.c(3, k, 1));
        }
        tail.add(2, 1, f.c(2, 3, 1));
        tail.add(3, 0, -f.c(2, 3, 0));
        f.apply(tail, "clear [X3, X4], [X3, Xk], [X4, Xk]");
        return f.finish(ClassLabel::simple(Family::AffR_plus_AffR, d));
    }

    Mat J;
    Mat P;
    ClassLabel label;
    if (spec.kind == K::RealRepeatedJordan) {
        Mat N = M - Mat::identity(2).scaled(spec.mu1);
        Vec w = is_zero(N.apply(unit_vector(2, 0))) ? unit_vector(2, 1) : unit_vector(2, 0);
        P = Mat::from_columns({N.apply(w), w}, 2);
        J = Mat{{0, 1}, {0, 0}};
        label = ClassLabel::g4_2_3(Rational(0), d);
    } else if (spec.kind == K::ComplexPair) {
        Scalar half_tr = M.trace() * Scalar(Rational(1, 2));
        Rational s2 = (det(M) - half_tr * half_tr).rational();
        Mat J0 = (M - Mat::identity(2).scaled(half_tr)).scaled(Scalar::sqrt_of(s2).inverse());
        Vec v = unit_vector(2, 0);
        P = Mat::from_columns({J0.apply(v), v}, 2);
        J = Mat{{0, 1}, {-1, 0}};
        label = ClassLabel::simple(Family::G4_2_4_AffC, d);
    } else {
        throw ImpossibleBranch("non-scalar generator with a repeated diagonalizable spectrum");
    }
    Mat Pinv = inverse(P);
    auto [p2, q2] = split(Pinv * A2 * P, J);
    auto [p3, q3] = split(Pinv * A3 * P, J);
    Mat coeffs{{p2, p3}, {q2, q3}};
    Ops norm(n);
    norm.mix(0, 1, P);
    norm.mix(2, 3, inverse(coeffs) * Mat{{0, 1}, {1, 0}});
    f.apply(norm, spec.kind == K::ComplexPair ? "a_X3 = rotation, a_X4 = I" : "a_X3 = [[0,1],[0,0]], a_X4 = I");
    clear_by_identity_generator(f);
    return f.finish(label);
}

Frame framed(const StructureTensor& t) {
    Frame f(t);
    if (t.dim() < 2 || f.t.pair_nonzero(0, 1)) throw ImpossibleBranch("G^1 = span(X1, X2) is not abelian");
    return f;
}

}  // namespace

const char* family_name(Family f) {
    for (const auto& fi : kFamilies)
        if (fi.f == f) return fi.name;
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& fi : kFamilies)
        if (name == fi.name) return fi.f;
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> v = [] {
        std::vector<Family> out;
        for (const auto& fi : kFamilies) out.push_back(fi.f);
        return out;
    }();
    return v;
}

std::size_t ClassLabel::core_dim() const {
    switch (family) {
        case Family::G3_2_1:
        case Family::G3_2_2:
        case Family::G3_2_3: return 3;
        case Family::G4_2_1:
        case Family::G4_2_2:
        case Family::G4_2_3:
        case Family::G4_2_4_AffC:
        case Family::AffR_plus_AffR: return 4;
        case Family::G5p2k_2: return 5 + 2 * static_cast<std::size_t>(k);
        case Family::G6p2k_2_1:
        case Family::G6p2k_2_2: return 6 + 2 * static_cast<std::size_t>(k);
        case Family::AffR_plus_Heis: return 3 + 2 * static_cast<std::size_t>(m);
        case Family::TwoStepNilpotent_OutOfScope: return 0;
    }
    return 0;
}

bool ClassLabel::same_class(const ClassLabel& o) const {
    if (family != o.family || k != o.k || m != o.m || d != o.d) return false;
    switch (family) {
        case Family::G3_2_1:
        case Family::G3_2_3: return key == o.key;
        case Family::G4_2_3: return lambda == o.lambda;
        default: return true;
    }
}

bool ClassLabel::decomposable() const {
    return d > 0 || family == Family::AffR_plus_AffR || family == Family::AffR_plus_Heis;
}

std::string ClassLabel::str() const {
    std::ostringstream os;
    os << family_name(family);
    switch (family) {
        case Family::G3_2_1: os << "(lambda=" << lambda.str() << ", j=" << key.str() << ")"; break;
        case Family::G3_2_3: os << "(j=" << key.str() << ")"; break;
        case Family::G4_2_3: os << "(lambda=" << lambda.str() << ")"; break;
        case Family::G5p2k_2:
        case Family::G6p2k_2_1:
        case Family::G6p2k_2_2: os << "(k=" << k << ")"; break;
        case Family::AffR_plus_Heis: os << "(m=" << m << ")"; break;
        default: break;
    }
    if (d > 0) os << " + R^" << d;
    return os.str();
}

ClassLabel ClassLabel::g3_2_1(const Scalar& lambda, int d) {
    ClassLabel l;
    l.family = Family::G3_2_1;
    l.lambda = lambda;
    l.d = d;
    if (!lambda.is_zero()) {
        Scalar tr = Scalar(1) + lambda;
        l.key = (tr * tr / lambda).rational();
    }
    return l;
}

ClassLabel ClassLabel::g3_2_3(const Rational& j, int d) {
    ClassLabel l;
    l.family = Family::G3_2_3;
    l.key = j;
    l.d = d;
    return l;
}

ClassLabel ClassLabel::simple(Family f, int d) {
    ClassLabel l;
    l.family = f;
    l.d = d;
    return l;
}

ClassLabel ClassLabel::g4_2_3(const Rational& lambda, int d) {
    ClassLabel l;
    l.family = Family::G4_2_3;
    l.lambda = Scalar(lambda);
    l.d = d;
    return l;
}

ClassLabel ClassLabel::with_k(Family f, int k, int d) {
    ClassLabel l;
    l.family = f;
    l.k = k;
    l.d = d;
    return l;
}

ClassLabel ClassLabel::heis(int m, int d) {
    ClassLabel l;
    l.family = Family::AffR_plus_Heis;
    l.m = m;
    l.d = d;
    return l;
}

namespace {

void set_adjoint(StructureTensor& t, std::size_t i, const Mat& a) {
    std::size_t n = t.dim();
    for (std::size_t c = 0; c < 2; ++c) {
        Vec v(n);
        v[0] = a(0, c);
        v[1] = a(1, c);
        t.set_bracket(i, c, v);
    }
}

void set_unit(StructureTensor& t, std::size_t i, std::size_t j, std::size_t k) { t.set_bracket(i, j, unit_vector(t.dim(), k)); }

}  // namespace

StructureTensor canonical_tensor(const ClassLabel& l) {
    if (l.d < 0 || l.k < 0) throw ParamOutOfDomain("negative dimension parameter");
    if (l.family == Family::TwoStepNilpotent_OutOfScope) throw ParamOutOfDomain("no canonical tensor for the 2-step nilpotent regime");
    StructureTensor t(l.dim());
    Mat e00 = Mat::diagonal({Scalar(1), Scalar(0)});
    Mat lower{{0, 0}, {1, 0}};
    auto pairs = [&](std::size_t first, std::size_t count) {
        for (std::size_t p = 0; p < count; ++p) set_unit(t, first + 2 * p, first + 2 * p + 1, 1);
    };
    std::size_t k = static_cast<std::size_t>(l.k);
    switch (l.family) {
        case Family::G3_2_1:
            if (l.lambda.is_zero()) throw ParamOutOfDomain("G3_2_1 needs lambda != 0");
            set_adjoint(t, 2, Mat::diagonal({Scalar(1), l.lambda}));
            break;
        case Family::G3_2_2: set_adjoint(t, 2, Mat{{1, 1}, {0, 1}}); break;
        case Family::G3_2_3: set_adjoint(t, 2, elliptic_representative(l.key)); break;
        case Family::G4_2_1:
            set_adjoint(t, 2, e00);
            set_unit(t, 2, 3, 1);
            break;
        case Family::G4_2_2:
            set_adjoint(t, 2, Mat{{0, 1}, {0, 0}});
            set_unit(t, 2, 3, 1);
            break;
        case Family::G4_2_3:
            if (!l.lambda.is_rational()) throw ParamOutOfDomain("G4_2_3 needs a rational lambda");
            set_adjoint(t, 2, Mat{{Scalar(0), Scalar(1)}, {Scalar(0), l.lambda}});
            set_adjoint(t, 3, Mat::identity(2));
            break;
        case Family::G4_2_4_AffC:
            set_adjoint(t, 2, Mat{{0, 1}, {-1, 0}});
            set_adjoint(t, 3, Mat::identity(2));
            break;
        case Family::G5p2k_2:
            set_adjoint(t, 2, lower);
            set_unit(t, 2, 3, 0);
            pairs(3, k + 1);
            break;
        case Family::G6p2k_2_1:
            set_adjoint(t, 2, e00);
            set_unit(t, 2, 3, 1);
            pairs(4, k + 1);
            break;
        case Family::G6p2k_2_2:
            set_adjoint(t, 2, lower);
            set_unit(t, 2, 3, 0);
            pairs(4, k + 1);
            break;
        case Family::AffR_plus_AffR:
            set_adjoint(t, 2, e00);
            set_adjoint(t, 3, Mat::diagonal({Scalar(0), Scalar(1)}));
            break;
        case Family::AffR_plus_Heis:
            if (l.m < 1) throw ParamOutOfDomain("AffR_plus_Heis needs m >= 1");
            set_adjoint(t, 2, e00);
            pairs(3, static_cast<std::size_t>(l.m));
            break;
        case Family::TwoStepNilpotent_OutOfScope: break;
    }
    return t;
}

Mat framed_adjoint(const StructureTensor& t, std::size_t i) {
    Mat a(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) a(r, c) = t.coeff(i, c, r);
    return a;
}

BasisChange derived_frame(const LieAlgebra& a) {
    const Subspace& g1 = a.derived_ideal();
    std::vector<Vec> cols = g1.basis();
    for (auto i : g1.complement_indices()) cols.push_back(unit_vector(a.dim(), i));
    return BasisChange(Mat::from_columns(cols, a.dim()));
}

BasisChange isolate_adjoint_generator(const StructureTensor& framed_in) {
    Frame f = framed(framed_in);
    std::size_t n = f.n();
    std::size_t g = 2;
    while (g < n && f.a(g).is_zero()) ++g;
    if (g == n) throw ImpossibleBranch("𝒜_G = 0");
    Ops sw(n);
    sw.swap(g, 2);
    f.apply(sw, "move the generator of 𝒜_G to X3");
    Mat A = f.a(2);
    std::size_t r = 0, c = 0;
    while (A(r, c).is_zero()) {
        if (++c == 2) c = 0, ++r;
    }
    Ops iso(n);
    for (std::size_t k = 3; k < n; ++k) {
        Mat Ak = f.a(k);
        Scalar alpha = Ak(r, c) / A(r, c);
        if (!(Ak == A.scaled(alpha))) throw ImpossibleBranch("dim 𝒜_G > 1");
        iso.add(k, 2, -alpha);
    }
    f.apply(iso, "a_Xk = 0 for k >= 4");
    return f.T;
}

Classification classify_nonsingular_generator(const StructureTensor& isolated) {
    Frame f = framed(isolated);
    require_tail_brackets_in_g1(f);
    if (det(f.a(2)).is_zero()) throw SingularInput("a_X3 is singular");
    return run_nonsingular(f);
}

Classification classify_singular_generator(const StructureTensor& isolated) {
    Frame f = framed(isolated);
    require_tail_brackets_in_g1(f);
    Mat A = f.a(2);
    if (A.is_zero() || !det(A).is_zero()) throw ImpossibleBranch("a_X3 must be singular and nonzero");
    return run_singular(f);
}

Classification classify_two_dim_adjoint(const StructureTensor& framed_in) {
    Frame f = framed(framed_in);
    require_tail_brackets_in_g1(f);
    return run_two_dim(f);
}

Classification classify_n2(const StructureTensor& t) { return classify_n2(LieAlgebra(t)); }

Classification classify_n2(const LieAlgebra& a) {
    if (auto v = validate(a.tensor())) {
        std::ostringstream os;
        os << "Jacobi identity fails at (" << v->i + 1 << "," << v->j + 1 << "," << v->k + 1 << ")";
        throw NotInClass(NotInClassReason::JacobiFails, os.str());
    }
    if (!a.solvable()) throw NotInClass(NotInClassReason::NotSolvable, "derived series does not reach 0");
    if (a.derived_ideal().dim() != 2)
        throw NotInClass(NotInClassReason::DerivedDimNot2, "dim G^1 = " + std::to_string(a.derived_ideal().dim()));

    Frame f(a.tensor());
    f.apply(derived_frame(a).matrix(), "G^1 basis first");
    if (f.t.pair_nonzero(0, 1)) throw ImpossibleBranch("G^1 is not abelian");
    require_tail_brackets_in_g1(f);

    std::size_t n = f.n();
    std::vector<Vec> flats;
    for (std::size_t i = 2; i < n; ++i) flats.push_back(flat(f.a(i)));
    std::size_t dimA = flats.empty() ? 0 : Subspace::span(flats, 4).dim();

    Classification sub;
    if (dimA == 0) {
        ClassLabel l;
        return Classification{l, Witness{f.T, f.steps}, f.t};
    } else if (dimA == 1) {
        Frame g(f.t);
        g.apply(isolate_adjoint_generator(f.t).matrix(), "isolate the generator of 𝒜_G");
        sub = det(g.a(2)).is_zero() ? run_singular(g) : run_nonsingular(g);
        BasisChange total = f.T.then(g.T);
        std::vector<std::string> steps = f.steps;
        steps.insert(steps.end(), g.steps.begin(), g.steps.end());
        return Classification{sub.label, Witness{total, steps}, sub.normalized};
    } else if (dimA == 2) {
        Frame g(f.t);
        sub = run_two_dim(g);
        std::vector<std::string> steps = f.steps;
        steps.insert(steps.end(), g.steps.begin(), g.steps.end());
        return Classification{sub.label, Witness{f.T.then(g.T), steps}, sub.normalized};
    }
    throw ImpossibleBranch("dim 𝒜_G > 2");
}

}  // namespace liealg
