#pragma once

#include "liealg/structure.hpp"

#include <vector>

namespace liealg {

// [U, V] = span of all brackets of basis vectors.
Subspace bracket_span(const StructureTensor& t, const Subspace& u, const Subspace& v);

// Lie algebra with its characteristic series computed once at construction.
class LieAlgebra {
public:
    explicit LieAlgebra(StructureTensor t);

    const StructureTensor& tensor() const { return t_; }
    std::size_t dim() const { return t_.dim(); }

    // G = G^0 ⊇ G^1 ⊇ ... up to the first repeated term
    const std::vector<Subspace>& derived_series() const { return derived_; }
    // G = G_0 ⊇ G_1 = [G, G] ⊇ G_2 = [G, G_1] ...
    const std::vector<Subspace>& lower_central_series() const { return lower_; }
    // 0 = C_0 ⊆ C_1 = center ⊆ C_2 ...
    const std::vector<Subspace>& upper_central_series() const { return upper_; }
    std::vector<std::size_t> upper_central_dims() const;
    const Subspace& center() const { return upper_.size() > 1 ? upper_[1] : upper_[0]; }
    const Subspace& derived_ideal() const { return derived_.size() > 1 ? derived_[1] : derived_[0]; }

    bool solvable() const { return solvable_; }
    bool nilpotent() const { return nilpotent_; }
    // least k with G_k = 0 (abelian: 1); 0 when not nilpotent
    std::size_t nilpotency_step() const { return step_; }

private:
    StructureTensor t_;
    std::vector<Subspace> derived_, lower_, upper_;
    bool solvable_ = false;
    bool nilpotent_ = false;
    std::size_t step_ = 0;
};

// Matrix of ad_x restricted to a subspace S that ad_x preserves, in the echelon basis of S.
Mat restricted_adjoint(const StructureTensor& t, const Vec& x, const Subspace& s);

struct AdjointAlgebra {
    Subspace derived;        // echelon basis of G^1
    std::vector<Mat> basis;  // independent subset of {a_X_i}, ambient basis order
    std::vector<std::size_t> generators;  // ambient indices realizing each basis matrix
    std::size_t dim() const { return basis.size(); }
};

// Throws NonAbelianDerivedIdeal when G^1 is not abelian.
AdjointAlgebra adjoint_algebra(const LieAlgebra& a);

inline LieAlgebra change_basis(const LieAlgebra& a, const BasisChange& b) { return LieAlgebra(transform(a.tensor(), b)); }

}  // namespace liealg
