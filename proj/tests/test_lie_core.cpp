#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
    std::vector<std::size_t> d;
    for (const auto& x : s) d.push_back(x.dim());
    return d;
}

// Jacobi sum of basis triple (i, j, k), expanded term by term from the structure constants.
Vec jacobi_by_hand(const StructureTensor& t, std::size_t i, std::size_t j, std::size_t k) {
    std::size_t n = t.dim();
    Vec out(n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t l = 0; l < n; ++l)
            out[l] += t.coeff(i, j, m) * t.coeff(m, k, l) + t.coeff(j, k, m) * t.coeff(m, i, l) + t.coeff(k, i, m) * t.coeff(m, j, l);
    return out;
}

}  // namespace

TEST_SUITE("lie-core") {

TEST_CASE("validate accepts Lie algebras") {
    CHECK(!validate(tensor(3, {{1, 2, {{3, 1}}}})));
    CHECK(!validate(aff_c()));
    CHECK(!validate(l6_gamma(Rational(-3))));
}

TEST_CASE("validate reports the first violating triple") {
    StructureTensor t = tensor(3, {{1, 2, {{1, 1}}}, {1, 3, {{2, 1}}}});
    auto v = validate(t);
    REQUIRE(v);
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->k == 2);
    CHECK(v->residual == jacobi_by_hand(t, 0, 1, 2));
    CHECK(v->residual == Vec{Scalar(0), Scalar(1), Scalar(0)});
}

TEST_CASE("validate agrees with the hand expansion on random tables") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        StructureTensor s(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                Vec v(4);
                for (auto& c : v) c = rng.below(3) == 0 ? Scalar(rng.range(-1, 1)) : Scalar(0);
                s.set_bracket(i, j, v);
            }
        bool hand_ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                for (std::size_t k = j + 1; k < 4; ++k) hand_ok = hand_ok && is_zero(jacobi_by_hand(s, i, j, k));
        CHECK(hand_ok == !validate(s));
    }
}

TEST_CASE("change of basis") {
    StructureTensor h3 = heisenberg(1);
    CHECK(transform(h3, Mat::identity(3)) == h3);
    Mat swap = M({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(transform(h3, swap) == tensor(3, {{1, 2, {{3, -1}}}}));
    // group action: T1 then T2 equals the composite T1 T2
    Rng rng(2);
    StructureTensor a = aff_c();
    Mat t1 = random_unimodular(4, rng, 8), t2 = random_unimodular(4, rng, 8);
    CHECK(transform(transform(a, t1), t2) == transform(a, t1 * t2));
    CHECK(transform(transform(a, t1), inverse(t1)) == a);
    CHECK_THROWS_AS(BasisChange(M({{1, 1}, {1, 1}})), SingularTransform);
}

TEST_CASE("derived series") {
    CHECK(dims(LieAlgebra(StructureTensor(3)).derived_series()) == std::vector<std::size_t>{3, 0});
    LieAlgebra c(aff_c());
    CHECK(dims(c.derived_series()) == std::vector<std::size_t>{4, 2, 0});
    CHECK(c.derived_ideal() == Subspace::span({unit_vector(4, 0), unit_vector(4, 1)}, 4));
    LieAlgebra g(build(ClassLabel::simple(Family::G4_2_2)));
    CHECK(g.solvable());
    CHECK(g.nilpotent());
    CHECK(g.nilpotency_step() == 3);
}

TEST_CASE("central series") {
    LieAlgebra h(heisenberg(1));
    CHECK(dims(h.lower_central_series()) == std::vector<std::size_t>{3, 1, 0});
    CHECK(h.nilpotency_step() == 2);
    CHECK(h.center() == Subspace::span({unit_vector(3, 2)}, 3));
    LieAlgebra a(aff_r());
    CHECK(dims(a.lower_central_series()) == std::vector<std::size_t>{2, 1});
    CHECK(!a.nilpotent());
    CHECK(a.solvable());
    // G5_2: [X3,X1] = X2, [X3,X4] = X1, [X4,X5] = X2.
    // By hand: C1 = span(X2); C2 adds X1, X5 (brackets land in X2); C3 adds X3, X4.
    LieAlgebra g5(build(ClassLabel::with_k(Family::G5p2k_2, 0)));
    CHECK(g5.nilpotency_step() == 3);
    CHECK(g5.upper_central_dims() == std::vector<std::size_t>{1, 3, 5});
}

TEST_CASE("non-solvable input") {
    // sl2: [H,E] = 2E, [H,F] = -2F, [E,F] = H
    LieAlgebra sl2(tensor(3, {{1, 2, {{2, 2}}}, {1, 3, {{3, -2}}}, {2, 3, {{1, 1}}}}));
    CHECK(!sl2.solvable());
    CHECK(sl2.derived_ideal().dim() == 3);
    CHECK_THROWS_AS(classify_n2(sl2), NotInClass);
}

TEST_CASE("adjoint algebra") {
    AdjointAlgebra c = adjoint_algebra(LieAlgebra(aff_c()));
    CHECK(c.dim() == 2);
    AdjointAlgebra h = adjoint_algebra(LieAlgebra(h3_plus_h3_split()));
    CHECK(h.dim() == 0);
    AdjointAlgebra g = adjoint_algebra(LieAlgebra(build(ClassLabel::g3_2_1(Scalar(-3)))));
    REQUIRE(g.dim() == 1);
    CHECK(g.basis[0] == Mat::diagonal({Scalar(1), Scalar(-3)}));
    // 2x2 matrices in the basis of G^1 commute
    CHECK(c.basis[0] * c.basis[1] == c.basis[1] * c.basis[0]);
    // so(3) is its own derived ideal
    CHECK_THROWS_AS(adjoint_algebra(LieAlgebra(tensor(3, {{1, 2, {{3, 1}}}, {2, 3, {{1, 1}}}, {3, 1, {{2, 1}}}}))), NonAbelianDerivedIdeal);
}

}
