#include "liealg/codim2.hpp"

namespace liealg {

namespace {

Mat adjoint_on_g1(const StructureTensor& t, std::size_t i, std::size_t m) {
    Mat a(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) a(r, c) = t.coeff(i, c, r);
    return a;
}

Vec flatten(const Mat& a) {
    Vec v;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) v.push_back(a(r, c));
    return v;
}

Vec head(const Vec& v, std::size_t m) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)); }

}  // namespace

const char* shape_name(Codim2Form::Shape s) { return s == Codim2Form::Shape::LeftBlock ? "left_block" : "right_block"; }

StructureTensor codim2_tensor(const Mat& abar) {
    std::size_t m = abar.rows(), n = m + 2;
    StructureTensor t(n);
    for (std::size_t j = 0; j < m; ++j) {
        Vec v(n);
        for (std::size_t i = 0; i < m; ++i) v[i] = abar(i, j);
        t.set_bracket(n - 1, j, v);
    }
    t.set_bracket(n - 1, n - 2, unit_vector(n, m - 1));
    return t;
}

Codim2Form::Shape block_shape(const Mat& abar) {
    return rank(abar * abar) == rank(abar) ? Codim2Form::Shape::LeftBlock : Codim2Form::Shape::RightBlock;
}

Codim2Form normalize_codim2(const LieAlgebra& a) {
    std::size_t n = a.dim();
    if (validate(a.tensor())) throw NotInClass(NotInClassReason::JacobiFails, "Jacobi identity fails");
    if (n < 4) throw NotInClass(NotInClassReason::TooSmall, "needs n >= 4");
    if (!a.solvable()) throw NotInClass(NotInClassReason::NotSolvable, "derived series does not reach 0");
    const Subspace& g1 = a.derived_ideal();
    if (g1.dim() != n - 2) throw NotInClass(NotInClassReason::DerivedCodimNot2, "dim G^1 = " + std::to_string(g1.dim()));
    for (const auto& x : g1.basis())
        for (const auto& y : g1.basis())
            if (!is_zero(a.tensor().bracket(x, y))) throw NotInClass(NotInClassReason::DerivedNotAbelian, "G^1 is not abelian");

    std::size_t m = n - 2;
    BasisChange T = derived_frame(a);
    StructureTensor t = transform(a.tensor(), T);
    Mat au = adjoint_on_g1(t, m, m), av = adjoint_on_g1(t, m + 1, m);
    std::size_t dimA = Subspace::span({flatten(au), flatten(av)}, m * m).dim();
    if (dimA == 2) throw Unsupported("dim 𝒜_G = 2 is not covered");
    if (dimA == 0) throw ImpossibleBranch("𝒜_G = 0 with dim G^1 = n - 2");

    // Z carries the nonzero adjoint, Y = other - alpha Z has a_Y = 0.
    std::size_t zi = au.is_zero() ? m + 1 : m, yi = zi == m ? m + 1 : m;
    const Mat& az0 = zi == m ? au : av;
    const Mat& ay0 = zi == m ? av : au;
    std::size_t pr = 0, pc = 0;
    while (az0(pr, pc).is_zero())
        if (++pc == m) pc = 0, ++pr;
    Scalar alpha = ay0(pr, pc) / az0(pr, pc);
    Mat s = Mat::identity(n);
    for (std::size_t r = 0; r < n; ++r) s(r, m) = s(r, m + 1) = Scalar(0);
    s(yi, m) = Scalar(1);
    s(zi, m) = -alpha;
    s(zi, m + 1) = Scalar(1);
    BasisChange step(s);
    t = transform(t, step);
    T = T.then(step);
    if (!adjoint_on_g1(t, m, m).is_zero()) throw ImpossibleBranch("a_Y != 0 after isolating Z");

    Mat az = adjoint_on_g1(t, m + 1, m);
    Vec w(m);
    for (std::size_t r = 0; r < m; ++r) w[r] = t.coeff(m + 1, m, r);

    Codim2Form out;
    Mat q = Mat::identity(m);
    Vec u(m);
    if (auto pre = solve(az, w)) {
        out.kind = Codim2Form::Kind::Decomposable;
        u = *pre;
    } else {
        if (rank(az) != m - 1) throw ImpossibleBranch("[Z, Y] outside Im a_Z with rank a_Z != n - 3");
        out.kind = Codim2Form::Kind::StructureMatrix;
        out.shape = block_shape(az);
        std::vector<Vec> im = image(az);
        Vec kv = kernel(az).at(0);
        std::vector<Vec> cols;
        if (out.shape == Codim2Form::Shape::LeftBlock) {
            cols = im;
            cols.push_back(kv);
            Vec coords = *solve(Mat::from_columns(cols, m), w);
            Vec v = scale(kv, coords[m - 1]);
            u = *solve(az, sub(w, v));
            cols.back() = v;
        } else {
            cols.push_back(kv);
            for (const auto& b : im) {
                std::vector<Vec> trial = cols;
                trial.push_back(b);
                if (Subspace::span(trial, m).dim() == trial.size()) cols = std::move(trial);
            }
            cols.push_back(w);
        }
        q = Mat::from_columns(cols, m);
    }
    Mat s2 = Mat::identity(n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) s2(r, c) = q(r, c);
        s2(r, m) = -u[r];
    }
    BasisChange step2(s2);
    t = transform(t, step2);
    T = T.then(step2);
    out.witness = T;
    out.normalized = t;
    out.Abar = adjoint_on_g1(t, m + 1, m);

    if (out.kind == Codim2Form::Kind::Decomposable) {
        for (std::size_t j = 0; j < n; ++j)
            if (t.pair_nonzero(m, j)) throw ImpossibleBranch("Y is not central after the correction");
        StructureTensor inner(n - 1);
        auto idx = [m](std::size_t i) { return i < m ? i : i - 1; };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (i == m || j == m || !t.pair_nonzero(i, j)) continue;
                Vec v(n - 1);
                for (std::size_t k = 0; k < n; ++k)
                    if (k != m) v[idx(k)] = t.coeff(i, j, k);
                inner.set_bracket(idx(i), idx(j), v);
            }
        out.inner = std::move(inner);
        return out;
    }
    out.A = out.shape == Codim2Form::Shape::LeftBlock ? out.Abar.block(0, 0, m - 1, m - 1) : out.Abar.block(0, 1, m - 1, m - 1);
    if (!(codim2_tensor(out.Abar) == t)) throw ImpossibleBranch("normalized tensor is not in structure-matrix form");
    return out;
}

Codim2Iso codim2_isomorphic(const Mat& abar1, const Mat& abar2) {
    if (abar1.rows() != abar2.rows()) throw ShapeMismatch("ambient dimensions differ");
    Codim2Iso out;
    out.verdict = prop_similar(abar1, abar2);
    out.isomorphic = out.verdict.equivalent;
    if (!out.isomorphic || !out.verdict.c || !out.verdict.C) return out;

    std::size_t m = abar1.rows(), n = m + 2;
    const Scalar& c = *out.verdict.c;
    const Mat& C = *out.verdict.C;
    // C e = ρ e + Abar2 q0 with e = X_{n-2}; f(Y) = cρ Y + c q0.
    Vec ce = C.col(m - 1);
    Mat sys(m, m + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < m; ++j) sys(r, j) = abar2(r, j);
        sys(r, m) = r == m - 1 ? Scalar(1) : Scalar(0);
    }
    auto x = solve(sys, ce);
    if (!x) throw ImpossibleBranch("C X_{n-2} outside Im Abar2 + span(X_{n-2})");
    Scalar rho = (*x)[m];
    Vec q0 = head(*x, m);

    Mat M(n, n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < m; ++j) M(r, j) = C(r, j);
        M(r, m) = c * q0[r];
    }
    M(m, m) = c * rho;
    M(n - 1, n - 1) = c.inverse();
    out.verified = transform(codim2_tensor(abar2), M) == codim2_tensor(abar1);
    out.M_f = std::move(M);
    return out;
}

Codim2Iso codim2_isomorphic(const Codim2Form& f1, const Codim2Form& f2) {
    if (f1.dim() != f2.dim()) throw ShapeMismatch("ambient dimensions differ");
    if (f1.kind != Codim2Form::Kind::StructureMatrix || f2.kind != Codim2Form::Kind::StructureMatrix)
        throw std::invalid_argument("isomorphism test needs two structure-matrix forms");
    return codim2_isomorphic(f1.Abar, f2.Abar);
}

}  // namespace liealg
