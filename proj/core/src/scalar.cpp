#include "liealg/scalar.hpp"

#include <cmath>

namespace liealg {

Scalar::Scalar(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw std::invalid_argument("quadratic field needs d > 0");
    if (!b_.is_zero()) {
        mpz_class root;
        long long sf = square_free_part(mpz_class(static_cast<long>(d_)), root);
        if (sf != d_) throw std::invalid_argument("d must be square-free");
        if (d_ == 1) {
            a_ += b_;
            b_ = Rational();
        }
    }
    normalize();
}

void Scalar::normalize() {
    if (b_.is_zero()) d_ = 0;
}

long long Scalar::square_free_part(const mpz_class& n_in, mpz_class& square_root_part) {
    if (n_in <= 0) throw std::invalid_argument("square_free_part needs n > 0");
    mpz_class n = n_in;
    mpz_class sf = 1;
    square_root_part = 1;
    for (unsigned long p = 2; p <= 1000000UL && mpz_class(p) * p <= n; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) square_root_part *= p;
        if (e % 2 == 1) sf *= p;
    }
    if (n > 1) {
        // remaining cofactor: either a perfect square of a large prime or treated as square-free
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            square_root_part *= r;
        } else {
            sf *= n;
        }
    }
    if (!sf.fits_slong_p()) throw std::overflow_error("square-free part exceeds 64 bits");
    return sf.get_si();
}

Scalar Scalar::sqrt_of(const Rational& q) {
    if (q.sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (q.is_zero()) return Scalar();
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class num = q.numerator(), den = q.denominator();
    mpz_class prod = num * den;
    mpz_class sq;
    long long sf = square_free_part(prod, sq);
    Rational coeff(mpq_class(sq, den));
    if (sf == 1) return Scalar(coeff);
    return Scalar(Rational(), coeff, sf);
}

long long Scalar::join(long long d1, long long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw FieldMismatch("scalars from Q(sqrt " + std::to_string(d1) + ") and Q(sqrt " + std::to_string(d2) + ")");
}

const Rational& Scalar::rational() const {
    if (d_ != 0) throw std::domain_error("scalar is irrational: " + str());
    return a_;
}

int Scalar::sign() const {
    if (d_ == 0) return a_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with d b^2
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    return lhs > rhs ? sa : sb;
}

Scalar Scalar::conjugate() const {
    Scalar r(*this);
    r.b_ = -b_;
    return r;
}

Rational Scalar::norm() const {
    if (d_ == 0) return a_ * a_;
    return a_ * a_ - b_ * b_ * Rational(d_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (d_ == 0) return Scalar(a_.inverse());
    Rational n = norm();
    Scalar r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0 && y.d_ == 0) return Scalar(x.a_ + y.a_);
    Scalar r;
    r.d_ = Scalar::join(x.d_, y.d_);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.normalize();
    return r;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0 && y.d_ == 0) return Scalar(x.a_ - y.a_);
    Scalar r;
    r.d_ = Scalar::join(x.d_, y.d_);
    r.a_ = x.a_ - y.a_;
    r.b_ = x.b_ - y.b_;
    r.normalize();
    return r;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0 && y.d_ == 0) return Scalar(x.a_ * y.a_);
    Scalar r;
    r.d_ = Scalar::join(x.d_, y.d_);
    if (x.d_ == 0) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.a_ * y.b_;
    } else if (y.d_ == 0) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.b_ * y.a_;
    } else {
        r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(r.d_);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    }
    r.normalize();
    return r;
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0 && y.d_ == 0) return Scalar(x.a_ / y.a_);
    return x * y.inverse();
}

double Scalar::to_double() const {
    if (d_ == 0) return a_.to_double();
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string Scalar::str() const {
    if (d_ == 0) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
    return s + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

}  // namespace liealg
