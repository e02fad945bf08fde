#pragma once

#include "liealg/classify.hpp"
#include "liealg/codim2.hpp"
#include "liealg/rng.hpp"

#include <string>
#include <vector>

namespace liealg {

// Canonical tensor of a family label (same as canonical_tensor).
StructureTensor build(const ClassLabel& label);

// Fixtures in the basis orders of their usual presentations.
StructureTensor aff_r();                  // [X, Y] = Y
StructureTensor aff_c();                  // X, Y, Z, T: [Z,X]=-Y, [Z,Y]=X, [T,X]=X, [T,Y]=Y
StructureTensor heisenberg(int m);        // X1..Xm, Y1..Ym, Z: [Xi, Yi] = Z
StructureTensor direct_sum(const StructureTensor& a, const StructureTensor& b);
StructureTensor l6_gamma(const Rational& gamma);  // [e1,e3]=e5, [e1,e4]=e6, [e2,e3]=γe6, [e2,e4]=e5
StructureTensor h3_plus_h3_split();       // [e1,e2]=e3, [e4,e5]=e6

// The normalizing 6x6 matrix for γ > 0, entries in Q(√γ); its columns are the new basis vectors.
Mat l6_positive_normalizer(const Rational& gamma);
// diag(√-γ, -1, -1, √-γ, -√-γ, -γ) for γ < 0.
Mat l6_negative_normalizer(const Rational& gamma);

struct L6Report {
    bool ok = false;
    Rational gamma;
    std::string orientation;  // which reading of the normalizing matrix is the basis change
    StructureTensor result;
    std::string detail;
};

// γ > 0: transport to {[e1,e2]=e3, [e4,e5]=e6}; γ < 0: transport to L6 with γ = -1.
L6Report check_l6_normalization(const Rational& gamma);

struct Codim2Entry {
    std::string name;
    Mat closed_form;  // closed a_Z form
    Mat abar;     // normalized structure matrix used for the fixture
    Codim2Form::Shape shape;
};
const std::vector<Codim2Entry>& codim2_catalog();

struct Scrambled {
    StructureTensor tensor;
    BasisChange transform;
};

// Unimodular integer matrix built from transvections and swaps, entries bounded by 4 in absolute value.
Mat random_unimodular(std::size_t n, Rng& rng, std::size_t ops);
// ops = 0 gives the identity.
Scrambled scramble(const StructureTensor& t, std::uint64_t seed, std::size_t ops = 0xFFFFFFFF);

// Parameter sweep for idempotence (dimension at most 12).
std::vector<ClassLabel> sweep_points();
// The label classify_n2 should report for the canonical tensor of l (G4_2_3 with λ != 0 is aff(R) + aff(R)).
ClassLabel expected_label(const ClassLabel& l);
bool same_class_as_expected(const ClassLabel& got, const ClassLabel& built);

// Random validated solvable tensor with dim G^1 = 2 and dimension n, built in a G^1-adapted
// frame and then scrambled. Returns an empty tensor (dim 0) when the draw is rejected.
StructureTensor fuzz_tensor(Rng& rng, std::size_t n);

}  // namespace liealg
