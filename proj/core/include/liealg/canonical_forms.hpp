#pragma once

#include "liealg/polynomial.hpp"

#include <optional>
#include <vector>

namespace liealg {

// det(xI - m), monic, coefficients from the constant term upward.
Poly char_poly(const Mat& m);

// Companion matrix of a monic polynomial: ones on the subdiagonal, -coeffs in the last column.
Mat companion(const Poly& f);

// Invariant factors of m (monic, nonconstant, each dividing the next), from the Smith form of xI - m.
std::vector<Poly> invariant_factors(const Mat& m);

struct FrobeniusForm {
    std::vector<Poly> factors;
    Mat form;        // block diagonal of companion matrices
    Mat conjugator;  // P with P^-1 m P == form
};

FrobeniusForm frobenius_form(const Mat& m);

bool similar(const Mat& a, const Mat& b);
// Some invertible C with C * a == b * C (so a = C^-1 b C), when a and b are similar.
std::optional<Mat> similarity_conjugator(const Mat& a, const Mat& b);

struct SpectralClass2x2 {
    enum class Kind { RealDistinct, RealRepeatedDiagonalizable, RealRepeatedJordan, ComplexPair };
    Kind kind;
    Scalar mu1, mu2;  // eigenvalues for the real kinds, mu1 < mu2 when distinct
    Rational re, im2;  // ComplexPair: re +- i*sqrt(im2)
};

const char* kind_name(SpectralClass2x2::Kind k);

// Needs tr^2 - 4 det rational when it is positive.
SpectralClass2x2 classify_spectrum_2x2(const Mat& m);

struct CommonEigenvector {
    bool complex_only = false;
    Vec vector;  // empty when complex_only
};

// Throws NonCommuting when m1 m2 != m2 m1.
CommonEigenvector common_eigenvector(const Mat& m1, const Mat& m2);

// Eigenvectors of a 2x2 matrix for a given eigenvalue, normalized so the first nonzero entry is 1.
std::vector<Vec> eigenvectors_2x2(const Mat& m, const Scalar& mu);

}  // namespace liealg
