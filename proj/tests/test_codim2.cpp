#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("classify-codim2") {

TEST_CASE("left block, n = 4") {
    // basis (X1, X2, Y, Z): [Z,X1] = X1, [Z,Y] = X2
    StructureTensor t = tensor(4, {{4, 1, {{1, 1}}}, {4, 3, {{2, 1}}}});
    Codim2Form f = normalize_codim2(LieAlgebra(t));
    REQUIRE(f.kind == Codim2Form::Kind::StructureMatrix);
    CHECK(f.shape == Codim2Form::Shape::LeftBlock);
    CHECK(f.A == M({{1}}));
    CHECK(f.Abar == M({{1, 0}, {0, 0}}));
    CHECK(transform(t, f.witness) == f.normalized);
    CHECK(f.normalized == codim2_tensor(f.Abar));
}

TEST_CASE("right block, n = 5") {
    StructureTensor t = codim2_tensor(M({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    Codim2Form f = normalize_codim2(LieAlgebra(t));
    REQUIRE(f.kind == Codim2Form::Kind::StructureMatrix);
    CHECK(f.shape == Codim2Form::Shape::RightBlock);
    CHECK(transform(t, f.witness) == f.normalized);
    CHECK(codim2_isomorphic(f.Abar, M({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})).isomorphic);
    CHECK(f.Abar == right_block(f.A));
}

TEST_CASE("decomposable case") {
    // [Y,Z] = 0, a_Z = I on G^1
    StructureTensor t = tensor(5, {{5, 1, {{1, 1}}}, {5, 2, {{2, 1}}}, {5, 3, {{3, 1}}}});
    Codim2Form f = normalize_codim2(LieAlgebra(t));
    CHECK(f.kind == Codim2Form::Kind::Decomposable);
    CHECK(f.inner.dim() == 4);
    CHECK(transform(t, f.witness) == f.normalized);
    CHECK(LieAlgebra(f.inner).derived_ideal().dim() == 3);
}

TEST_CASE("isomorphism verdicts") {
    Mat a = M({{1, 0}, {0, 0}});
    Codim2Iso same = codim2_isomorphic(a, a);
    CHECK(same.isomorphic);
    CHECK(*same.verdict.c == Scalar(1));
    CHECK(same.verified);
    Mat l1 = left_block(M({{1, 1}, {0, 1}})), l2 = left_block(M({{3, 1}, {0, 3}}));
    Codim2Iso iso = codim2_isomorphic(l1, l2);
    CHECK(iso.isomorphic);
    CHECK(iso.verified);
    CHECK(!codim2_isomorphic(left_block(Mat::identity(2)), right_block(Mat::identity(2))).isomorphic);
    CHECK_THROWS_AS(codim2_isomorphic(Mat::identity(2), Mat::identity(3)), ShapeMismatch);
}

TEST_CASE("catalog entries are pairwise distinct and survive scrambles") {
    const auto& t5 = codim2_catalog();
    REQUIRE(t5.size() == 5);
    for (std::size_t i = 0; i < t5.size(); ++i) {
        CHECK(block_shape(t5[i].abar) == t5[i].shape);
        for (std::size_t j = i + 1; j < t5.size(); ++j) CHECK(!codim2_isomorphic(t5[i].abar, t5[j].abar).isomorphic);
        Scrambled s = scramble(codim2_tensor(t5[i].abar), 99 + i);
        Codim2Form f = normalize_codim2(LieAlgebra(s.tensor));
        Codim2Iso back = codim2_isomorphic(t5[i].abar, f.Abar);
        CHECK(back.isomorphic);
        CHECK(back.verified);
    }
}

TEST_CASE("out of class") {
    CHECK_THROWS_AS(normalize_codim2(LieAlgebra(heisenberg(1))), NotInClass);
    CHECK_THROWS_AS(normalize_codim2(LieAlgebra(aff_c())), Unsupported);
    CHECK_THROWS_AS(normalize_codim2(LieAlgebra(tensor(5, {{1, 2, {{3, 1}}}, {1, 4, {{5, 1}}}}))), NotInClass);
}

}
