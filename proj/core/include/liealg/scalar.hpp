#pragma once

#include "liealg/rational.hpp"

#include <stdexcept>
#include <string>

namespace liealg {

// Raised when two scalars from different quadratic fields meet.
struct FieldMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// a + b*sqrt(d) with rational a, b and square-free d > 1.
// A plain rational has b == 0 and d == 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}              // NOLINT(implicit)
    Scalar(long long v) : a_(v) {}        // NOLINT(implicit)
    Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
    Scalar(Rational a, Rational b, long long d);

    // sqrt(q) for rational q >= 0, written as s*sqrt(d) with d square-free.
    static Scalar sqrt_of(const Rational& q);
    static long long square_free_part(const mpz_class& n, mpz_class& square_root_part);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_.is_zero(); }
    bool is_one() const { return d_ == 0 && a_.is_one(); }
    const Rational& rational() const;  // throws if irrational
    int sign() const;

    Scalar conjugate() const;
    Rational norm() const;  // a^2 - d b^2
    Scalar inverse() const;
    Scalar operator-() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }

    double to_double() const;
    std::string str() const;  // "p/q" or "a+b*sqrt(d)"

private:
    static long long join(long long d1, long long d2);
    void normalize();

    Rational a_;
    Rational b_;
    long long d_ = 0;
};

}  // namespace liealg
