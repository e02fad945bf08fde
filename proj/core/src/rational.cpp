#include "liealg/rational.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace liealg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr i128 kMax = std::numeric_limits<long long>::max();
constexpr i128 kMin = -kMax;  // keep negation safe

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 m = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(m >> 64));
    mpz_class lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) {
    big_ = std::make_unique<mpq_class>(q);
    big_->canonicalize();
    demote();
}

Rational::Rational(const mpz_class& z) : Rational(mpq_class(z)) {}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    if (o.big_)
        big_ = std::make_unique<mpq_class>(*o.big_);
    else
        big_.reset();
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t slash = s.find('/');
    auto check_int = [](const std::string& part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start == part.size()) return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    std::string p = slash == std::string::npos ? s : s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check_int(p) || !check_int(q) || q[0] == '-' || q[0] == '+')
        throw std::invalid_argument("malformed rational: " + s);
    if (p[0] == '+') p = p.substr(1);
    mpz_class zp(p, 10), zq(q, 10);
    if (zq == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(mpq_class(zp, zq));
}

void Rational::promote_min() {
    big_ = std::make_unique<mpq_class>(static_cast<long>(num_));
    num_ = 0;
    den_ = 1;
}

void Rational::demote() {
    if (!big_) return;
    const mpq_class& q = *big_;
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        long n = mpz_get_si(q.get_num_mpz_t());
        long d = mpz_get_si(q.get_den_mpz_t());
        if (n != std::numeric_limits<long>::min()) {
            num_ = n;
            den_ = d;
            big_.reset();
        }
    }
}

Rational Rational::from_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den != 1) {
        u128 g = gcd_u128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num), static_cast<u128>(den));
        if (g > 1) {
            num /= static_cast<i128>(g);
            den /= static_cast<i128>(g);
        }
    }
    Rational r;
    if (fits(num) && fits(den)) {
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
    } else {
        r.big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
        r.big_->canonicalize();
        r.demote();
    }
    return r;
}

bool Rational::is_integer() const {
    return big_ ? (big_->get_den() == 1) : den_ == 1;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            long long s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<long long>::min()) {
                Rational r;
                r.num_ = s;
                return r;
            }
        }
        if (b.num_ == 0) return a;
        if (a.num_ == 0) return b;
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        if (a.den_ == 1 && b.den_ == 1) {
            long long p;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != std::numeric_limits<long long>::min()) {
                Rational r;
                r.num_ = p;
                return r;
            }
        }
        i128 n = static_cast<i128>(a.num_) * b.num_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_) {
        i128 n = static_cast<i128>(a.num_) * b.den_;
        i128 d = static_cast<i128>(a.den_) * b.num_;
        return Rational::from_i128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms: a demotable value is never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

Rational Rational::root(const Rational& q, unsigned k, bool& ok) {
    ok = false;
    if (k == 0) return Rational();
    if (k == 1) {
        ok = true;
        return q;
    }
    if (q.sign() < 0 && k % 2 == 0) return Rational();
    mpz_class n = q.numerator(), d = q.denominator();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return Rational();
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return Rational();
    ok = true;
    if (neg) rn = -rn;
    return Rational(mpq_class(rn, rd));
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rational result(1), base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::size_t Rational::hash() const {
    if (!big_) return std::hash<long long>{}(num_) * 31 + std::hash<long long>{}(den_);
    return std::hash<std::string>{}(big_->get_str());
}

}  // namespace liealg
