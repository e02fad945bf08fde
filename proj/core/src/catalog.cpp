#include "liealg/catalog.hpp"

#include <cstdlib>

namespace liealg {

StructureTensor build(const ClassLabel& label) { return canonical_tensor(label); }

StructureTensor aff_r() {
    StructureTensor t(2);
    t.set_bracket(0, 1, unit_vector(2, 1));
    return t;
}

StructureTensor aff_c() {
    StructureTensor t(4);
    t.set_bracket(2, 0, scale(unit_vector(4, 1), Scalar(-1)));
    t.set_bracket(2, 1, unit_vector(4, 0));
    t.set_bracket(3, 0, unit_vector(4, 0));
    t.set_bracket(3, 1, unit_vector(4, 1));
    return t;
}

StructureTensor heisenberg(int m) {
    if (m < 1) throw ParamOutOfDomain("Heisenberg needs m >= 1");
    std::size_t mm = static_cast<std::size_t>(m), n = 2 * mm + 1;
    StructureTensor t(n);
    for (std::size_t i = 0; i < mm; ++i) t.set_bracket(i, mm + i, unit_vector(n, n - 1));
    return t;
}

StructureTensor direct_sum(const StructureTensor& a, const StructureTensor& b) {
    std::size_t na = a.dim(), n = na + b.dim();
    StructureTensor t(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = i + 1; j < na; ++j) {
            if (!a.pair_nonzero(i, j)) continue;
            Vec v(n);
            for (std::size_t k = 0; k < na; ++k) v[k] = a.coeff(i, j, k);
            t.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j) {
            if (!b.pair_nonzero(i, j)) continue;
            Vec v(n);
            for (std::size_t k = 0; k < b.dim(); ++k) v[na + k] = b.coeff(i, j, k);
            t.set_bracket(na + i, na + j, v);
        }
    return t;
}

StructureTensor l6_gamma(const Rational& gamma) {
    if (gamma.is_zero()) throw ParamOutOfDomain("L6 needs gamma != 0");
    StructureTensor t(6);
    t.set_bracket(0, 2, unit_vector(6, 4));
    t.set_bracket(0, 3, unit_vector(6, 5));
    t.set_bracket(1, 2, scale(unit_vector(6, 5), Scalar(gamma)));
    t.set_bracket(1, 3, unit_vector(6, 4));
    return t;
}

StructureTensor h3_plus_h3_split() {
    StructureTensor t(6);
    t.set_bracket(0, 1, unit_vector(6, 2));
    t.set_bracket(3, 4, unit_vector(6, 5));
    return t;
}

Mat l6_positive_normalizer(const Rational& gamma) {
    if (gamma.sign() <= 0) throw ParamOutOfDomain("the normalizing matrix needs gamma > 0");
    Scalar s = Scalar::sqrt_of(gamma), si = s.inverse();
    Scalar z(0), one(1), two(2);
    return Mat{{one, z, z, one, z, z},
               {si, z, z, -si, z, z},
               {z, one, z, z, one, z},
               {z, s, z, z, -s, z},
               {z, z, two, z, z, two},
               {z, z, two * s, z, z, -(two * s)}};
}

Mat l6_negative_normalizer(const Rational& gamma) {
    if (gamma.sign() >= 0) throw ParamOutOfDomain("needs gamma < 0");
    Scalar s = Scalar::sqrt_of(-gamma);
    return Mat::diagonal({s, Scalar(-1), Scalar(-1), s, -s, Scalar(-gamma)});
}

L6Report check_l6_normalization(const Rational& gamma) {
    L6Report r;
    r.gamma = gamma;
    StructureTensor src = l6_gamma(gamma);
    if (gamma.sign() > 0) {
        Mat T = l6_positive_normalizer(gamma);
        StructureTensor target = h3_plus_h3_split();
        // The normalizing matrix holds the new basis vectors in its columns.
        r.result = transform(src, T);
        r.orientation = "columns are the new basis vectors";
        r.ok = r.result == target;
    } else {
        r.result = transform(src, l6_negative_normalizer(gamma));
        r.orientation = "diagonal";
        r.ok = r.result == l6_gamma(Rational(-1));
    }
    if (!r.ok) {
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                if (r.result.pair_nonzero(i, j)) {
                    r.detail += "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "]=";
                    Vec v = r.result.bracket_basis(i, j);
                    for (std::size_t k = 0; k < 6; ++k)
                        if (!v[k].is_zero()) r.detail += "(" + v[k].str() + ")e" + std::to_string(k + 1);
                    r.detail += " ";
                }
    }
    return r;
}

const std::vector<Codim2Entry>& codim2_catalog() {
    using S = Codim2Form::Shape;
    static const std::vector<Codim2Entry> v = {
        {"diag(1,lambda,0), lambda=2", Mat{{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}, Mat{{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}, S::LeftBlock},
        {"jordan(1)+0", Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}, Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}, S::LeftBlock},
        {"rotation(pi/2)+0", Mat{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}, Mat{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}, S::LeftBlock},
        {"nilpotent N3", Mat{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, Mat{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, S::RightBlock},
        {"[0 A;0 0] with b != 0", Mat{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}, Mat{{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}, S::RightBlock},
    };
    return v;
}

Mat random_unimodular(std::size_t n, Rng& rng, std::size_t ops) {
    Mat m = Mat::identity(n);
    if (n < 2) return m;
    for (std::size_t step = 0; step < ops; ++step) {
        std::size_t i = rng.below(n), j = rng.below(n - 1);
        if (j >= i) ++j;
        if (rng.below(4) == 0) {
            for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
            continue;
        }
        long long c = rng.range(-2, 1);
        if (c >= 0) ++c;
        Vec col = m.col(i);
        bool ok = true;
        for (std::size_t r = 0; r < n && ok; ++r) {
            col[r] += Scalar(c) * m(r, j);
            ok = col[r].rational().abs() <= Rational(4);
        }
        if (!ok) continue;
        for (std::size_t r = 0; r < n; ++r) m(r, i) = col[r];
    }
    return m;
}

Scrambled scramble(const StructureTensor& t, std::uint64_t seed, std::size_t ops) {
    std::size_t n = t.dim();
    if (ops == 0xFFFFFFFF) ops = 3 * n;
    Rng rng = Rng(seed).split("scramble");
    BasisChange b(random_unimodular(n, rng, ops));
    return Scrambled{transform(t, b), b};
}

std::vector<ClassLabel> sweep_points() {
    std::vector<ClassLabel> out;
    const int ds[] = {0, 1, 3};
    const Rational lambdas[] = {1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, -3};
    auto push = [&](ClassLabel l) {
        if (l.dim() <= 12) out.push_back(std::move(l));
    };
    for (int d : ds) {
        for (const auto& l : lambdas) push(ClassLabel::g3_2_1(Scalar(l), d));
        push(ClassLabel::simple(Family::G3_2_2, d));
        for (int j = 0; j < 4; ++j) push(ClassLabel::g3_2_3(Rational(j), d));
        push(ClassLabel::simple(Family::G4_2_1, d));
        push(ClassLabel::simple(Family::G4_2_2, d));
        for (const auto& l : {Rational(0), Rational(1), Rational(2), Rational(-1, 2)}) push(ClassLabel::g4_2_3(l, d));
        push(ClassLabel::simple(Family::G4_2_4_AffC, d));
        for (int k = 0; k <= 2; ++k) {
            push(ClassLabel::with_k(Family::G5p2k_2, k, d));
            push(ClassLabel::with_k(Family::G6p2k_2_1, k, d));
            push(ClassLabel::with_k(Family::G6p2k_2_2, k, d));
        }
        push(ClassLabel::simple(Family::AffR_plus_AffR, d));
        for (int m = 1; m <= 2; ++m) push(ClassLabel::heis(m, d));
    }
    return out;
}

ClassLabel expected_label(const ClassLabel& l) {
    if (l.family == Family::G4_2_3 && !l.lambda.is_zero()) return ClassLabel::simple(Family::AffR_plus_AffR, l.d);
    return l;
}

bool same_class_as_expected(const ClassLabel& got, const ClassLabel& built) { return got.same_class(expected_label(built)); }

namespace {

Mat random_small(Rng& rng) {
    Mat m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = Scalar(rng.range(-2, 2));
    return m;
}

Mat random_generator(Rng& rng) {
    switch (rng.below(6)) {
        case 0: return Mat{{Scalar(rng.range(1, 3)), 0}, {0, 0}};
        case 1: return Mat{{0, 1}, {0, 0}};
        case 2: return Mat{{1, 1}, {0, 1}};
        case 3: return Mat{{0, -1}, {1, 0}};
        case 4: return Mat::diagonal({Scalar(1), Scalar(rng.range(-2, 2))});
        default: return random_small(rng);
    }
}

}  // namespace

StructureTensor fuzz_tensor(Rng& rng, std::size_t n) {
    if (n < 3) throw DimensionError("fuzz needs n >= 3");
    std::size_t outer = n - 2;
    std::vector<Mat> a(outer, Mat(2, 2));
    std::uint64_t kind = rng.below(8);
    std::size_t dimA = kind == 0 ? 0 : (kind <= 4 || n < 4) ? 1 : 2;
    Mat M = random_generator(rng);
    if (dimA == 2 && M.is_scalar_multiple_of_identity()) M = Mat{{0, 1}, {0, 0}};
    for (std::size_t k = 0; k < outer; ++k) {
        if (dimA == 0) continue;
        Scalar q(rng.range(-2, 2));
        Scalar p = dimA == 2 ? Scalar(rng.range(-2, 2)) : Scalar(0);
        if (rng.below(3) == 0) q = Scalar(0), p = dimA == 2 ? p : Scalar(0);
        a[k] = Mat::identity(2).scaled(p) + M.scaled(q);
    }

    // Unknowns ω_ij in G^1 for outer pairs; Jacobi: a_i ω_jk + a_j ω_ki + a_k ω_ij = 0.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < outer; ++i)
        for (std::size_t j = i + 1; j < outer; ++j) pairs.emplace_back(i, j);
    auto pair_index = [&](std::size_t i, std::size_t j) {
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (pairs[p].first == i && pairs[p].second == j) return p;
        return pairs.size();
    };
    std::size_t unknowns = 2 * pairs.size();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < outer; ++i)
        for (std::size_t j = i + 1; j < outer; ++j)
            for (std::size_t k = j + 1; k < outer; ++k) {
                // a_i ω_jk - a_j ω_ik + a_k ω_ij
                struct Term {
                    std::size_t mat, pair;
                    int sign;
                };
                Term terms[] = {{i, pair_index(j, k), 1}, {j, pair_index(i, k), -1}, {k, pair_index(i, j), 1}};
                for (std::size_t r = 0; r < 2; ++r) {
                    Vec row(unknowns);
                    for (const auto& t : terms)
                        for (std::size_t c = 0; c < 2; ++c) row[2 * t.pair + c] += Scalar(t.sign) * a[t.mat](r, c);
                    if (!is_zero(row)) rows.push_back(std::move(row));
                }
            }
    std::vector<Vec> basis;
    if (rows.empty()) {
        for (std::size_t u = 0; u < unknowns; ++u) basis.push_back(unit_vector(unknowns, u));
    } else {
        basis = kernel(Mat::from_rows(rows, unknowns));
    }
    Vec omega(unknowns);
    for (const auto& b : basis) {
        if (rng.below(2) == 0) continue;
        omega = add(omega, scale(b, Scalar(rng.range(-2, 2))));
    }

    StructureTensor t(n);
    for (std::size_t k = 0; k < outer; ++k)
        for (std::size_t c = 0; c < 2; ++c) {
            Vec v(n);
            v[0] = a[k](0, c);
            v[1] = a[k](1, c);
            if (!is_zero(v)) t.set_bracket(k + 2, c, v);
        }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        Vec v(n);
        v[0] = omega[2 * p];
        v[1] = omega[2 * p + 1];
        if (!is_zero(v)) t.set_bracket(pairs[p].first + 2, pairs[p].second + 2, v);
    }
    if (validate(t)) return StructureTensor();
    LieAlgebra alg(t);
    if (!alg.solvable() || alg.derived_ideal().dim() != 2) return StructureTensor();
    BasisChange b(random_unimodular(n, rng, 3 * n));
    return transform(t, b);
}

}  // namespace liealg
