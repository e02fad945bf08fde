#pragma once

#include "liealg/lie_algebra.hpp"
#include "liealg/classify.hpp"

#include <optional>
#include <string>

namespace liealg {

// Normal form of a solvable algebra whose derived ideal is abelian of codimension 2 and dim 𝒜_G = 1.
// Normalized basis order: X1..X_{n-2} (G^1), Y, Z with a_Y = 0.
struct Codim2Form {
    enum class Kind { Decomposable, StructureMatrix };
    enum class Shape { LeftBlock, RightBlock };  // [A 0; 0 0] or [0 A; 0 0]

    Kind kind = Kind::Decomposable;
    Shape shape = Shape::LeftBlock;
    Mat A;     // (n-3)-square, invertible
    Mat Abar;  // a_Z on G^1, (n-2)-square
    BasisChange witness = BasisChange::identity(0);
    StructureTensor normalized;  // transform(input, witness)
    StructureTensor inner;       // Decomposable: the ideal span(X1..X_{n-2}, Z), with [Y, G] = 0

    std::size_t dim() const { return normalized.dim(); }
};

const char* shape_name(Codim2Form::Shape s);

// The structure-matrix algebra: [Z, X_j] = sum_i Abar(i, j) X_i, [Z, Y] = X_{n-2}.
StructureTensor codim2_tensor(const Mat& abar);

// Throws NotInClass (JacobiFails, NotSolvable, DerivedCodimNot2, DerivedNotAbelian, TooSmall)
// and Unsupported when dim 𝒜_G = 2.
Codim2Form normalize_codim2(const LieAlgebra& a);

// Block shape of a singular matrix of rank size-1: Im ∩ Ker = 0 gives LeftBlock, Ker ⊂ Im gives RightBlock.
Codim2Form::Shape block_shape(const Mat& abar);

struct Codim2Iso {
    bool isomorphic = false;
    PropSimVerdict verdict;
    // Columns: images of the first normalized basis, in the second normalized basis.
    std::optional<Mat> M_f;
    bool verified = false;  // transform(second, M_f) == first
};

// Throws ShapeMismatch for different ambient dimensions, std::invalid_argument for Decomposable forms.
Codim2Iso codim2_isomorphic(const Codim2Form& f1, const Codim2Form& f2);
Codim2Iso codim2_isomorphic(const Mat& abar1, const Mat& abar2);

}  // namespace liealg
