#pragma once

#include "liealg/matrix.hpp"

#include <string>
#include <vector>

namespace liealg {

// Dense univariate polynomial, coefficients from the constant term upward.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);
    static Poly constant(const Scalar& c);
    static Poly x_minus(const Scalar& root);  // x - root

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(); }
    const Scalar& leading() const { return c_.back(); }
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    Poly scaled(const Scalar& s) const;

    // a = q*b + r, deg r < deg b
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(const Poly& a, const Poly& b);  // monic

    Mat eval(const Mat& m) const;
    std::string str() const;

private:
    void trim();
    std::vector<Scalar> c_;
};

}  // namespace liealg
