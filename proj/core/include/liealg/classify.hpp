#pragma once

#include "liealg/lie_algebra.hpp"
#include "liealg/propsim.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liealg {

enum class Family {
    G3_2_1,
    G3_2_2,
    G3_2_3,
    G4_2_1,
    G4_2_2,
    G4_2_3,
    G4_2_4_AffC,
    G5p2k_2,
    G6p2k_2_1,
    G6p2k_2_2,
    AffR_plus_AffR,
    AffR_plus_Heis,
    TwoStepNilpotent_OutOfScope,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
const std::vector<Family>& all_families();

struct ClassLabel {
    Family family = Family::TwoStepNilpotent_OutOfScope;
    Scalar lambda;        // G3_2_1, G4_2_3
    Rational key;         // j = tr^2/det for G3_2_1 and G3_2_3
    int orientation = 0;  // G3_2_3: sign of the trace the input carried
    int k = 0;            // G5p2k_2, G6p2k_2_1, G6p2k_2_2
    int m = 0;            // AffR_plus_Heis
    int d = 0;            // abelian summand dimension

    // Core dimension of the family without the abelian summand.
    std::size_t core_dim() const;
    std::size_t dim() const { return core_dim() + static_cast<std::size_t>(d); }
    // Same isomorphism class: family, integer parameters, d, and the invariant key.
    bool same_class(const ClassLabel& o) const;
    bool decomposable() const;
    std::string str() const;

    static ClassLabel g3_2_1(const Scalar& lambda, int d = 0);
    static ClassLabel g3_2_3(const Rational& j, int d = 0);
    static ClassLabel simple(Family f, int d = 0);
    static ClassLabel g4_2_3(const Rational& lambda, int d = 0);
    static ClassLabel with_k(Family f, int k, int d = 0);
    static ClassLabel heis(int m, int d = 0);
};

// Canonical structure constants of a label (basis order X1, X2, X3, ... then the abelian summand).
// Throws ParamOutOfDomain for out-of-range parameters or the out-of-scope label.
StructureTensor canonical_tensor(const ClassLabel& label);

struct Witness {
    BasisChange transform = BasisChange::identity(0);
    std::vector<std::string> steps;  // audit log of elementary stages
};

struct Classification {
    ClassLabel label;
    Witness witness;
    StructureTensor normalized;  // transform(input, witness): canonical tensor of label, or the framed tensor when out of scope
};

// Basis change putting an echelon basis of G^1 first, followed by the echelon-first completion.
BasisChange derived_frame(const LieAlgebra& a);

// For a framed tensor (G^1 = span(X1, X2), dim 𝒜_G = 1): moves the first generator with a_X != 0
// to position 3 and subtracts multiples of it so that a_Xi = 0 for i >= 4.
BasisChange isolate_adjoint_generator(const StructureTensor& framed);

// Normalizations of an isolated tensor (a_X3 spans 𝒜_G, a_Xi = 0 for i >= 4).
Classification classify_nonsingular_generator(const StructureTensor& isolated);
Classification classify_singular_generator(const StructureTensor& isolated);
// Framed tensor with dim 𝒜_G = 2.
Classification classify_two_dim_adjoint(const StructureTensor& framed);

// Full classification of a solvable algebra with 2-dimensional derived ideal.
// Throws NotInClass (JacobiFails, NotSolvable, DerivedDimNot2) and ImpossibleBranch.
Classification classify_n2(const LieAlgebra& a);
Classification classify_n2(const StructureTensor& t);

// The 2x2 matrix of ad_{X_i} on span(X1, X2) in a framed tensor.
Mat framed_adjoint(const StructureTensor& framed, std::size_t i);

}  // namespace liealg
