#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("exact-linalg") {

TEST_CASE("rank, determinant, inverse, kernel") {
    Mat m = M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(rank(m) == 2);
    CHECK(det(m).is_zero());
    CHECK_THROWS_AS(inverse(m), SingularMatrix);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(m.apply(k[0])));
    Mat g = M({{2, 1}, {7, 4}});
    CHECK(det(g) == Scalar(1));
    CHECK(inverse(g) == M({{4, -1}, {-7, 2}}));
    CHECK(!solve(M({{1, 1}, {1, 1}}), Vec{Scalar(1), Scalar(2)}));
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(M({{1, 0}, {0, 0}})) == Poly({Scalar(0), Scalar(-1), Scalar(1)}));
    CHECK(char_poly(M({{0, 1}, {0, 0}})) == Poly({Scalar(0), Scalar(0), Scalar(1)}));
    // trace t, det 0: x^2 - t x
    Mat a = M({{3, 6}, {1, 2}});
    CHECK(char_poly(a) == Poly({Scalar(0), Scalar(-5), Scalar(1)}));
}

TEST_CASE("invariant factors of small examples") {
    auto f = invariant_factors(M({{0, 1}, {0, 0}}));
    REQUIRE(f.size() == 1);
    CHECK(f[0] == Poly({Scalar(0), Scalar(0), Scalar(1)}));
    auto id = invariant_factors(Mat::identity(3));
    REQUIRE(id.size() == 3);
    for (const auto& p : id) CHECK(p == Poly::x_minus(Scalar(1)));
    Mat m = M({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
    CHECK(invariant_factors(m) == minor_gcd_invariant_factors(m));
}

TEST_CASE("invariant factors agree with the minor-gcd oracle") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + t % 3;
        Mat m(n, n);
        // sparse entries so that repeated factors show up
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.below(3) == 0 ? Scalar(rng.range(-2, 2)) : Scalar(0);
        INFO(m.str());
        CHECK(invariant_factors(m) == minor_gcd_invariant_factors(m));
    }
}

TEST_CASE("frobenius form conjugator and similarity invariance") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + t % 3;
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rng.range(-2, 2));
        FrobeniusForm f = frobenius_form(m);
        CHECK(inverse(f.conjugator) * m * f.conjugator == f.form);
        Mat p = random_unimodular(n, rng, 2 * n);
        CHECK(frobenius_form(inverse(p) * m * p).factors == f.factors);
    }
}

TEST_CASE("similarity agrees with a brute-force conjugator search") {
    Rng rng(3);
    int found = 0;
    for (int t = 0; t < 150; ++t) {
        Mat a(2, 2), b(2, 2);
        for (std::size_t i = 0; i < 4; ++i) {
            a(i / 2, i % 2) = Scalar(rng.range(-1, 1));
            b(i / 2, i % 2) = Scalar(rng.range(-1, 1));
        }
        auto brute = brute_conjugator(a, b, 2);
        bool sim = similar(a, b);
        INFO(a.str(), " ", b.str());
        if (brute) {
            ++found;
            CHECK(sim);
        }
        if (sim) {
            auto c = similarity_conjugator(a, b);
            REQUIRE(c);
            CHECK(*c * a == b * *c);
        }
        // over 2x2 with entries in {-1, 0, 1} a conjugator with entries in [-2, 2] always exists
        CHECK(sim == brute.has_value());
    }
    CHECK(found > 10);
}

TEST_CASE("2x2 spectral classes") {
    CHECK(classify_spectrum_2x2(M({{1, 0}, {0, 3}})).kind == SpectralClass2x2::Kind::RealDistinct);
    auto j = classify_spectrum_2x2(M({{1, 1}, {0, 1}}));
    CHECK(j.kind == SpectralClass2x2::Kind::RealRepeatedJordan);
    CHECK(j.mu1 == Scalar(1));
    auto c = classify_spectrum_2x2(M({{1, -1}, {1, 1}}));
    CHECK(c.kind == SpectralClass2x2::Kind::ComplexPair);
    CHECK(c.re == Rational(1));
    CHECK(c.im2 == Rational(1));
    CHECK(classify_spectrum_2x2(Mat::identity(2)).kind == SpectralClass2x2::Kind::RealRepeatedDiagonalizable);
    // irrational distinct eigenvalues land in Q(√5)
    auto q = classify_spectrum_2x2(M({{1, 1}, {1, 0}}));
    CHECK(q.kind == SpectralClass2x2::Kind::RealDistinct);
    CHECK(q.mu1.d() == 5);
}

TEST_CASE("common eigenvectors") {
    auto a = common_eigenvector(Mat::diagonal({Scalar(1), Scalar(0)}), Mat::diagonal({Scalar(0), Scalar(1)}));
    CHECK(!a.complex_only);
    CHECK(a.vector == Vec{Scalar(1), Scalar(0)});
    auto b = common_eigenvector(M({{0, 1}, {0, 0}}), Mat::identity(2));
    CHECK(b.vector == Vec{Scalar(1), Scalar(0)});
    CHECK(common_eigenvector(M({{0, 1}, {-1, 0}}), Mat::identity(2)).complex_only);
    CHECK_THROWS_AS(common_eigenvector(M({{0, 1}, {0, 0}}), M({{0, 0}, {1, 0}})), NonCommuting);
}

}
