#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("propsim") {

TEST_CASE("basic verdicts") {
    Mat a = M({{1, 2}, {3, 4}});
    auto self = prop_similar(a, a);
    CHECK(self.equivalent);
    CHECK(*self.c == Scalar(1));
    CHECK(verify_prop_witness(a, a, *self.c, *self.C));

    auto s = prop_similar(Mat::diagonal({Q(1), Q(2)}), Mat::diagonal({Q(3), Q(6)}));
    CHECK(s.equivalent);
    CHECK(*s.c == Scalar(3));

    // trace forces c = 4/3, then det(cA) = 32/9 != 3
    CHECK(!prop_similar(Mat::diagonal({Q(1), Q(2)}), Mat::diagonal({Q(1), Q(3)})).equivalent);

    auto h = prop_similar(Mat::diagonal({Q(1), Q(2)}), Mat::diagonal({Q(1), Q(1, 2)}));
    CHECK(h.equivalent);
    CHECK(*h.c == Q(1, 2));
    CHECK(verify_prop_witness(Mat::diagonal({Q(1), Q(2)}), Mat::diagonal({Q(1), Q(1, 2)}), *h.c, *h.C));
    CHECK_THROWS_AS(prop_similar(Mat::identity(2), Mat::identity(3)), DimensionError);
}

TEST_CASE("quadratic scale") {
    // c^2 = 2: A = [[0,1],[1,0]], B = [[0,2],[1,0]]
    Mat a = M({{0, 1}, {1, 0}}), b = M({{0, 2}, {1, 0}});
    auto v = prop_similar(a, b);
    REQUIRE(v.equivalent);
    CHECK(v.mode == PropSimVerdict::Mode::Exact);
    CHECK(v.c->d() == 2);
    CHECK(verify_prop_witness(a, b, *v.c, *v.C));
}

TEST_CASE("irrational scale of degree three uses the numeric regime") {
    Mat a = companion(Poly({Q(-1), Q(0), Q(0), Q(1)}));  // x^3 - 1
    Mat b = companion(Poly({Q(-2), Q(0), Q(0), Q(1)}));  // x^3 - 2, c = 2^(1/3)
    auto v = prop_similar(a, b);
    CHECK(v.equivalent);
    CHECK(v.mode == PropSimVerdict::Mode::NumericFallback);
    CHECK(v.c_numeric.rfind("1.25992104989487316476", 0) == 0);
    Mat d = companion(Poly({Q(-2), Q(1), Q(0), Q(1)}));
    CHECK(!prop_similar(a, d).equivalent);
}

TEST_CASE("agrees with brute force over small scales and conjugators") {
    Rng rng(23);
    const Rational scales[] = {1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
    for (int t = 0; t < 60; ++t) {
        Mat a(2, 2), b(2, 2);
        for (std::size_t i = 0; i < 4; ++i) {
            a(i / 2, i % 2) = Scalar(rng.range(-1, 1));
            b(i / 2, i % 2) = Scalar(rng.range(-1, 1));
        }
        bool brute = false;
        for (const auto& c : scales) brute = brute || brute_conjugator(a.scaled(Scalar(c)), b, 2).has_value();
        auto v = prop_similar(a, b);
        INFO(a.str(), " ", b.str());
        if (brute) CHECK(v.equivalent);
        if (v.equivalent && v.mode == PropSimVerdict::Mode::Exact) CHECK(verify_prop_witness(a, b, *v.c, *v.C));
    }
}

TEST_CASE("GL2 proportional classes") {
    auto d = gl2_proportional_class(M({{2, 0}, {0, 6}}));
    CHECK(d.variant == Gl2Class::Variant::Diagonal);
    CHECK(d.key == Rational(16, 3));  // tr^2/det = 64/12
    CHECK(prop_similar(d.canonical, Mat::diagonal({Q(1), Q(3)})).equivalent);
    auto j = gl2_proportional_class(M({{5, 1}, {0, 5}}));
    CHECK(j.variant == Gl2Class::Variant::Jordan);
    CHECK(j.canonical == M({{1, 1}, {0, 1}}));
    auto e = gl2_proportional_class(M({{1, -1}, {1, 1}}));
    CHECK(e.variant == Gl2Class::Variant::Elliptic);
    CHECK(e.key == Rational(2));
    CHECK(e.orientation == 1);
    for (const auto* g : {&d, &j, &e}) {
        Mat a = g == &d ? M({{2, 0}, {0, 6}}) : g == &j ? M({{5, 1}, {0, 5}}) : M({{1, -1}, {1, 1}});
        CHECK(inverse(g->conjugator) * a.scaled(g->scale) * g->conjugator == g->canonical);
    }
    CHECK_THROWS_AS(gl2_proportional_class(M({{1, 1}, {1, 1}})), SingularInput);
}

TEST_CASE("block facts") {
    Mat a = M({{1, 2, 0}, {0, 1, 1}, {1, 0, 2}});
    Mat b = M({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}});
    CHECK(prop_similar(left_block(a), left_block(a.scaled(Q(-2)))).equivalent);
    CHECK(!prop_similar(left_block(a), right_block(b)).equivalent);
    RightBlockPair p = right_block_counterexample();
    CHECK(!prop_similar(p.A, p.B).equivalent);
    CHECK(prop_similar(right_block(p.A), right_block(p.B)).equivalent);
    auto found = search_right_block_counterexample(1);
    REQUIRE(found);
    CHECK(!prop_similar(found->A, found->B).equivalent);
    CHECK(prop_similar(right_block(found->A), right_block(found->B)).equivalent);
}

}
