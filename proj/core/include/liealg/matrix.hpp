#pragma once

#include "liealg/errors.hpp"
#include "liealg/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

using Vec = std::vector<Scalar>;

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Mat identity(std::size_t n);
    static Mat from_columns(const std::vector<Vec>& columns, std::size_t rows);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Mat diagonal(const Vec& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_zero() const;
    bool is_scalar_multiple_of_identity() const;
    bool is_rational() const;
    Scalar trace() const;
    Mat transpose() const;
    Mat scaled(const Scalar& s) const;
    Vec apply(const Vec& v) const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Mat rref;                         // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const Mat& m);
std::size_t rank(const Mat& m);
Scalar det(const Mat& m);
std::optional<Mat> try_inverse(const Mat& m);
Mat inverse(const Mat& m);  // throws SingularMatrix
// Basis of {v : m v = 0}; one vector per free column, in column order.
std::vector<Vec> kernel(const Mat& m);
// Echelon basis of the column space.
std::vector<Vec> image(const Mat& m);
// Some x with m x = b, free variables set to zero.
std::optional<Vec> solve(const Mat& m, const Vec& b);

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
Vec unit_vector(std::size_t n, std::size_t i);

// A subspace of K^n stored by its reduced echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
    static Subspace whole(std::size_t n);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    // Coordinates of v (assumed inside) with respect to the echelon basis.
    Vec coordinates(const Vec& v) const;
    // Echelon-first completion: the standard unit vectors (ascending) that extend this basis.
    std::vector<std::size_t> complement_indices() const;
    Subspace sum(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

private:
    std::size_t n_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace liealg
