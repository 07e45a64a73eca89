#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pptrack {

// Exact rational scalar. Canonical form is maintained at all times:
// denominator > 0, gcd(|num|, den) == 1. Finite decimal strings parse
// exactly ("101.3" is 1013/10, not a binary float).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    // Accepts "p", "p/q", and finite decimals ("-3.25", ".5"). No exponents.
    static std::optional<Rational> parse(std::string_view text);
    static Rational parse_or_throw(std::string_view text);

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    // Exact decimal when the denominator is of the form 2^i * 5^j,
    // otherwise falls back to str().
    std::string decimal_str() const;
    double to_double() const { return v_.get_d(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    mpz_class floor() const;
    mpz_class ceil() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// ceil(a / b) as an exact integer; b must be positive.
mpz_class ceil_div(const Rational& a, const Rational& b);

// Integer power with small exponent.
Rational pow(const Rational& base, unsigned long exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pptrack
