#pragma once

#include "liealg/canonical_forms.hpp"

#include <optional>
#include <string>

namespace liealg {

struct PropSimVerdict {
    enum class Mode { Exact, NumericFallback };
    bool equivalent = false;
    Mode mode = Mode::Exact;
    std::optional<Scalar> c;  // exact scale when equivalent in Exact mode
    std::optional<Mat> C;     // c A == C^-1 B C
    std::string c_numeric;    // decimal scale, NumericFallback only
};

// Decides whether c A is similar to B for some real c != 0.
// A, B must be rational and square of equal size (DimensionError otherwise).
PropSimVerdict prop_similar(const Mat& a, const Mat& b);

// c A == C^-1 B C, exactly.
bool verify_prop_witness(const Mat& a, const Mat& b, const Scalar& c, const Mat& conj);

// Proportional-similarity classes of GL2: diag(1, λ), [[1,1],[0,1]], or the elliptic class with key j.
struct Gl2Class {
    enum class Variant { Diagonal, Jordan, Elliptic };
    Variant variant;
    Mat canonical;
    Scalar scale;     // c
    Mat conjugator;   // P with P^-1 (c A) P == canonical
    Rational key;     // j = tr^2 / det
    Scalar lambda;    // Diagonal: second diagonal entry, |λ| <= 1
    int orientation = 0;  // Elliptic: sign of tr A (0 when tr A = 0)
    SpectralClass2x2 spectrum;
};

const char* variant_name(Gl2Class::Variant v);

// Canonical elliptic representative with key j in [0, 4).
Mat elliptic_representative(const Rational& j);

// Throws SingularInput when det A = 0.
Gl2Class gl2_proportional_class(const Mat& a);

}  // namespace liealg
