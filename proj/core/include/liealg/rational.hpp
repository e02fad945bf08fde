#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace liealg {

// Exact rational in lowest terms with positive denominator.
// Values whose numerator and denominator fit in int64 are kept inline;
// everything else lives in a GMP mpq.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : num_(v) {  // NOLINT(implicit)
        if (v == std::numeric_limits<long long>::min()) promote_min();
    }
    Rational(int v) : num_(v) {}        // NOLINT(implicit)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept = default;
    ~Rational() = default;

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const;
    std::string str() const;

    Rational operator-() const;
    Rational inverse() const;  // throws std::domain_error on zero
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Exact k-th root when it exists in Q (k >= 1); sets ok=false otherwise.
    static Rational root(const Rational& q, unsigned k, bool& ok);
    Rational pow(int e) const;

    std::size_t hash() const;

private:
    static Rational from_i128(__int128 num, __int128 den);
    void demote();
    void promote_min();  // INT64_MIN has no inline negation, so it lives in GMP

    long long num_ = 0;
    long long den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace liealg
