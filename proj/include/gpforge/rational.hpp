#pragma once

// Exact arbitrary-precision rational arithmetic. Every scalar in the library
// is a Rational; there is no floating point anywhere in the computational
// core. Backed by GMP integers, kept in canonical form (gcd 1, positive
// denominator) at all times.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gpforge {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}   // NOLINT: implicit by design, ints embed
    Rational(long num, long den) { init(mpz_class(num), mpz_class(den)); }
    Rational(const mpz_class& num, const mpz_class& den) { init(num, den); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Parses "num/den" or a bare integer string.
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(mpz_class(s), mpz_class(1));
            return Rational(mpz_class(s.substr(0, slash)),
                            mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational: '" + s + "'");
        }
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    // Canonical serialization, always "num/den" ("0/1" for zero).
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.v_ + y.v_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.v_ - y.v_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.v_ * y.v_); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw std::domain_error("division by zero");
        return Rational(x.v_ / y.v_);
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
    Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
    Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
    Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}

    void init(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("division by zero");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    mpq_class v_;
};

// Canonical reduced form with positive denominator.
inline Rational rat_normalize(const mpz_class& num, const mpz_class& den) {
    return Rational(num, den);
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x.is_zero()) throw std::domain_error("division by zero");
        return Rational(1) / pow(x, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

// Floor of the integer square root, Newton iteration with exact integer
// steps only. Requires n >= 0.
inline mpz_class isqrt_floor(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    // initial guess: 2^(ceil(bits/2)) >= sqrt(n)
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class x = 1;
    x <<= (bits + 1) / 2;
    for (;;) {
        mpz_class y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    // x = floor(sqrt(n)); the loop exits with the fixed point from above
    return x;
}

inline std::optional<mpz_class> exact_int_sqrt(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    mpz_class r = isqrt_floor(n);
    if (r * r == n) return r;   // final exact-multiplication check
    return std::nullopt;
}

// Exact perfect-square test: returns the non-negative root when r is the
// square of a rational, absent otherwise. Decided on numerator and
// denominator separately (valid in lowest terms).
inline std::optional<Rational> is_square(const Rational& r) {
    auto sn = exact_int_sqrt(r.num());
    if (!sn) return std::nullopt;
    auto sd = exact_int_sqrt(r.den());
    if (!sd) return std::nullopt;
    return Rational(*sn, *sd);
}

}  // namespace gpforge
