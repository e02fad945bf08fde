#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("catalog") {

TEST_CASE("fixture bracket tables") {
    CHECK(heisenberg(1) == tensor(3, {{1, 2, {{3, 1}}}}));
    CHECK(build(ClassLabel::with_k(Family::G6p2k_2_2, 0)) ==
          framed(6, {{3, M({{0, 0}, {1, 0}})}}, {{3, 4, {{1, 1}}}, {5, 6, {{2, 1}}}}));
    CHECK(l6_gamma(Rational(1)) == tensor(6, {{1, 3, {{5, 1}}}, {1, 4, {{6, 1}}}, {2, 3, {{6, 1}}}, {2, 4, {{5, 1}}}}));
    CHECK(aff_c() == tensor(4, {{3, 1, {{2, -1}}}, {3, 2, {{1, 1}}}, {4, 1, {{1, 1}}}, {4, 2, {{2, 1}}}}));
    StructureTensor s = direct_sum(aff_r(), heisenberg(1));
    CHECK(s.dim() == 5);
    CHECK(!validate(s));
}

TEST_CASE("six-dimensional nilpotent family") {
    for (int g : {1, 4, 2, -1, -3}) {
        L6Report r = check_l6_normalization(Rational(g));
        INFO("gamma = ", g, ": ", r.detail);
        CHECK(r.ok);
    }
    CHECK(check_l6_normalization(Rational(4)).result == h3_plus_h3_split());
    CHECK(transform(l6_gamma(Rational(-1)), Mat::diagonal({Q(1), Q(-1), Q(-1), Q(1), Q(-1), Q(1)})) == l6_gamma(Rational(-1)));
    // γ = 2 needs Q(√2) entries
    Mat t = l6_positive_normalizer(Rational(2));
    bool irrational = false;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) irrational = irrational || !t(i, j).is_rational();
    CHECK(irrational);
}

TEST_CASE("scrambles") {
    StructureTensor g = build(ClassLabel::simple(Family::G4_2_1));
    Scrambled none = scramble(g, 1, 0);
    CHECK(none.tensor == g);
    CHECK(none.transform.matrix() == Mat::identity(4));
    Scrambled s = scramble(g, 42);
    CHECK(transform(s.tensor, s.transform.inverted()) == g);
    CHECK(transform(g, s.transform) == s.tensor);
    CHECK(det(s.transform.matrix()).rational().abs() == Rational(1));
    CHECK(scramble(g, 42).tensor == s.tensor);
    Classification base = classify_n2(g);
    for (std::uint64_t seed = 0; seed < 100; ++seed) CHECK(classify_n2(scramble(g, seed).tensor).label.same_class(base.label));
}

TEST_CASE("unimodular matrices stay small") {
    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        Mat u = random_unimodular(6, rng, 18);
        CHECK(det(u).rational().abs() == Rational(1));
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) CHECK(u(i, j).rational().abs() <= Rational(4));
    }
}

TEST_CASE("named random streams") {
    Rng a(7), b(7);
    CHECK(a.split("x", 1).next() == b.split("x", 1).next());
    CHECK(a.split("x", 1).next() != a.split("x", 2).next());
    CHECK(a.split("x", 1).next() != a.split("y", 1).next());
    Rng c(7);
    c.split("x");
    CHECK(c.next() == Rng(7).next());
}

TEST_CASE("sweep points and fuzz tensors") {
    auto pts = sweep_points();
    CHECK(pts.size() >= 60);
    for (const auto& p : pts) CHECK(p.dim() <= 12);
    Rng rng(3);
    int accepted = 0;
    for (int t = 0; t < 200; ++t) {
        StructureTensor f = fuzz_tensor(rng, 3 + t % 6);
        if (f.dim() == 0) continue;
        ++accepted;
        CHECK(!validate(f));
        LieAlgebra a(f);
        CHECK(a.solvable());
        CHECK(a.derived_ideal().dim() == 2);
    }
    CHECK(accepted > 100);
}

}
