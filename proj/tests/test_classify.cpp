#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

Classification check_witness(const StructureTensor& t) {
    Classification c = classify_n2(t);
    if (c.label.family != Family::TwoStepNilpotent_OutOfScope) CHECK(c.normalized == canonical_tensor(c.label));
    CHECK(transform(t, c.witness.transform) == c.normalized);
    return c;
}

}  // namespace

TEST_SUITE("classify-lie-n2") {

TEST_CASE("fixtures") {
    auto h = check_witness(h3_plus_h3_split());
    CHECK(h.label.family == Family::TwoStepNilpotent_OutOfScope);
    auto c = check_witness(aff_c());
    CHECK(c.label.family == Family::G4_2_4_AffC);
    CHECK(c.label.d == 0);
    // a_X3 = [[0,0],[1,0]], [X3,X4] = X1, [X4,X5] = [X6,X7] = X2
    StructureTensor g7 = framed(7, {{3, M({{0, 0}, {1, 0}})}}, {{3, 4, {{1, 1}}}, {4, 5, {{2, 1}}}, {6, 7, {{2, 1}}}});
    auto g = check_witness(g7);
    CHECK(g.label.family == Family::G5p2k_2);
    CHECK(g.label.k == 1);
    CHECK(g.label.d == 0);
}

TEST_CASE("isolating the adjoint generator") {
    StructureTensor g = build(ClassLabel::simple(Family::G4_2_1));
    CHECK(isolate_adjoint_generator(g).matrix() == Mat::identity(4));
    // Y4 := X4 + X3 has a_Y4 = a_X3, so the isolation subtracts X3 once
    Mat y = Mat::identity(4);
    y(2, 3) = Scalar(1);
    StructureTensor s = transform(g, y);
    Mat expect = Mat::identity(4);
    expect(2, 3) = Scalar(-1);
    CHECK(isolate_adjoint_generator(s).matrix() == expect);
    // a_Xi = 0 for i >= 4 on a random corpus instance
    Rng rng(4);
    StructureTensor f;
    while (f.dim() == 0) f = fuzz_tensor(rng, 6);
    LieAlgebra a(f);
    StructureTensor framed_t = transform(f, derived_frame(a));
    if (adjoint_algebra(a).dim() == 1) {
        StructureTensor iso = transform(framed_t, isolate_adjoint_generator(framed_t));
        for (std::size_t i = 3; i < 6; ++i) CHECK(framed_adjoint(iso, i).is_zero());
    }
}

TEST_CASE("nonsingular generator") {
    auto a = check_witness(framed(3, {{3, Mat::diagonal({Q(2), Q(-2)})}}));
    CHECK(a.label.family == Family::G3_2_1);
    CHECK(a.label.lambda == Scalar(-1));
    auto b = check_witness(framed(5, {{3, M({{3, 3}, {0, 3}})}}, {{3, 4, {{1, 2}, {2, -1}}}, {3, 5, {{2, Rational(1, 3)}}}}));
    CHECK(b.label.family == Family::G3_2_2);
    CHECK(b.label.d == 2);
    auto r = check_witness(framed(3, {{3, M({{0, -5}, {5, 0}})}}));
    CHECK(r.label.family == Family::G3_2_3);
    CHECK(r.label.key == Rational(0));
    // irrational eigenvalues: λ lives in Q(√5)
    auto q = check_witness(framed(3, {{3, M({{1, 1}, {1, 0}})}}));
    CHECK(q.label.family == Family::G3_2_1);
    CHECK(q.label.key == Rational(-1));
}

TEST_CASE("singular generator") {
    auto a = check_witness(framed(4, {{3, Mat::diagonal({Q(1), Q(0)})}}, {{3, 4, {{2, 1}}}}));
    CHECK(a.label.family == Family::G4_2_1);
    auto b = check_witness(framed(4, {{3, M({{0, 1}, {0, 0}})}}, {{3, 4, {{2, 1}}}}));
    CHECK(b.label.family == Family::G4_2_2);
    auto c = check_witness(framed(7, {{3, Mat::diagonal({Q(1), Q(0)})}}, {{4, 5, {{2, 1}}}}));
    CHECK(c.label.family == Family::AffR_plus_Heis);
    CHECK(c.label.m == 1);
    CHECK(c.label.d == 2);
}

TEST_CASE("two-dimensional adjoint algebra") {
    auto a = check_witness(framed(4, {{3, Mat::diagonal({Q(1), Q(0)})}, {4, Mat::diagonal({Q(0), Q(1)})}}));
    CHECK(a.label.family == Family::AffR_plus_AffR);
    auto b = check_witness(framed(4, {{3, M({{2, 3}, {0, 2}})}, {4, M({{5, 1}, {0, 5}})}}));
    CHECK(b.label.family == Family::G4_2_3);
    CHECK(b.label.lambda.is_zero());
    auto c = check_witness(framed(5, {{3, M({{1, -2}, {1, -1}})}, {4, Mat::identity(2)}}));
    CHECK(c.label.family == Family::G4_2_4_AffC);
    CHECK(c.label.d == 1);
    // G4_2_3 with λ != 0 is aff(R) + aff(R)
    auto d = check_witness(build(ClassLabel::g4_2_3(Rational(2))));
    CHECK(d.label.family == Family::AffR_plus_AffR);
}

TEST_CASE("every family classifies back to itself under scrambles") {
    for (const auto& l : sweep_points()) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            Scrambled s = scramble(build(l), seed);
            Classification c = check_witness(s.tensor);
            INFO(l.str(), " seed ", seed, " got ", c.label.str());
            CHECK(same_class_as_expected(c.label, l));
            // series dimensions are basis independent
            LieAlgebra before(build(l)), after(s.tensor);
            CHECK(before.upper_central_dims() == after.upper_central_dims());
        }
    }
}

TEST_CASE("out of class inputs") {
    auto reason = [](const StructureTensor& t) {
        try {
            classify_n2(t);
        } catch (const NotInClass& e) {
            return e.reason;
        }
        FAIL("no NotInClass");
        return NotInClassReason::TooSmall;
    };
    CHECK(reason(tensor(3, {{1, 2, {{1, 1}}}, {1, 3, {{2, 1}}}})) == NotInClassReason::JacobiFails);
    CHECK(reason(tensor(3, {{1, 2, {{3, 1}}}, {3, 1, {{2, 1}}}, {2, 3, {{1, 1}}}})) == NotInClassReason::NotSolvable);
    CHECK(reason(heisenberg(1)) == NotInClassReason::DerivedDimNot2);
    CHECK(reason(StructureTensor(4)) == NotInClassReason::DerivedDimNot2);
}

TEST_CASE("labels") {
    CHECK(std::string(family_name(Family::G4_2_4_AffC)) == "G4_2_4_AffC");
    for (Family f : all_families()) CHECK(family_from_name(family_name(f)) == f);
    CHECK(!family_from_name("G9"));
    CHECK(ClassLabel::g3_2_1(Scalar(2)).same_class(ClassLabel::g3_2_1(Q(1, 2))));
    CHECK(!ClassLabel::g3_2_1(Scalar(2)).same_class(ClassLabel::g3_2_1(Scalar(3))));
    CHECK(ClassLabel::heis(1, 2).decomposable());
    CHECK(ClassLabel::simple(Family::G3_2_2, 1).decomposable());
    CHECK(!ClassLabel::with_k(Family::G6p2k_2_1, 2).decomposable());
    CHECK(ClassLabel::with_k(Family::G6p2k_2_1, 2).dim() == 10);
    CHECK_THROWS_AS(canonical_tensor(ClassLabel::g3_2_1(Scalar(0))), ParamOutOfDomain);
    CHECK_THROWS_AS(canonical_tensor(ClassLabel::g3_2_3(Rational(4))), ParamOutOfDomain);
}

}
