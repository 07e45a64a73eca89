#include "pptrack/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pptrack {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        mpq_class q(n, d);
        q.canonicalize();
        if (negative) q = -q;
        return Rational(std::move(q));
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
        if (frac_part.find('.') != std::string_view::npos) return std::nullopt;
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

    mpz_class n = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
    mpz_class d(1);
    for (char ch : frac_part) {
        n = n * 10 + (ch - '0');
        d *= 10;
    }
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
}

Rational Rational::parse_or_throw(std::string_view text) {
    auto r = parse(text);
    if (!r) throw std::invalid_argument("not an exact number: '" + std::string(text) + "'");
    return *r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string Rational::decimal_str() const {
    mpz_class den = v_.get_den();
    int twos = 0, fives = 0;
    while (mpz_even_p(den.get_mpz_t())) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return str();  // not a terminating decimal

    // Scale so the denominator becomes 10^k.
    int k = std::max(twos, fives);
    mpz_class scaled = v_.get_num();
    for (int i = twos; i < k; ++i) scaled *= 2;
    for (int i = fives; i < k; ++i) scaled *= 5;

    bool neg = scaled < 0;
    std::string digits = mpz_class(::abs(scaled)).get_str();
    std::string out;
    if (k == 0) {
        out = digits;
    } else {
        while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
        out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    }
    return neg ? "-" + out : out;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class ceil_div(const Rational& a, const Rational& b) {
    if (b.sign() <= 0) throw std::invalid_argument("ceil_div requires positive divisor");
    return (a / b).ceil();
}

Rational pow(const Rational& base, unsigned long exp) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
    return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace pptrack
