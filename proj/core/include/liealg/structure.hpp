#pragma once

#include "liealg/matrix.hpp"

#include <optional>
#include <vector>

namespace liealg {

// Structure constants c_ij^k of [X_i, X_j] = sum_k c_ij^k X_k, indices 0-based.
// Skew-symmetry is maintained on every write.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t n) : n_(n), c_(n * n * n), nz_(n * n, 0) {}

    std::size_t dim() const { return n_; }

    const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    Vec bracket_basis(std::size_t i, std::size_t j) const;
    bool pair_nonzero(std::size_t i, std::size_t j) const { return nz_[i * n_ + j] != 0; }

    void set_bracket(std::size_t i, std::size_t j, const Vec& value);
    void set_coeff(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

    Vec bracket(const Vec& u, const Vec& v) const;
    // Matrix of ad_x: column j holds [x, X_j].
    Mat ad(const Vec& x) const;
    Mat ad_basis(std::size_t i) const;

    bool is_abelian() const;
    bool is_rational() const;

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    void refresh(std::size_t i, std::size_t j);

    std::size_t n_ = 0;
    std::vector<Scalar> c_;
    std::vector<char> nz_;
};

struct JacobiViolation {
    std::size_t i, j, k;  // 0-based, i < j < k
    Vec residual;
};

// First basis triple (lexicographic) where the Jacobi sum is nonzero.
std::optional<JacobiViolation> validate(const StructureTensor& t);

// Invertible change of basis; columns of T are the new basis vectors in old coordinates.
class BasisChange {
public:
    explicit BasisChange(Mat t);  // throws SingularTransform
    BasisChange(Mat t, Mat inverse) : t_(std::move(t)), inv_(std::move(inverse)) {}
    static BasisChange identity(std::size_t n);

    const Mat& matrix() const { return t_; }
    const Mat& inverse_matrix() const { return inv_; }
    std::size_t dim() const { return t_.rows(); }

    // this first, then next (expressed in the already-changed basis)
    BasisChange then(const BasisChange& next) const;
    BasisChange inverted() const { return BasisChange(inv_, t_); }

private:
    Mat t_;
    Mat inv_;
};

// Brackets in the new basis: [u, v]' = T^-1 [T u, T v].
StructureTensor transform(const StructureTensor& t, const BasisChange& b);
StructureTensor transform(const StructureTensor& t, const Mat& m);

}  // namespace liealg
