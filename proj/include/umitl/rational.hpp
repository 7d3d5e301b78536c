// ============================================================================
// umitl/rational.hpp — Exact rational arithmetic for time stamps
// ============================================================================
//
// Time stamps and guard comparisons must be bit-exact: strict vs non-strict
// inequalities against integer constants decide acceptance.  Stamps are kept
// as normalized int64 fractions; all desk-scale inputs stay far away from
// overflow.
//
// ============================================================================

#ifndef UMITL_RATIONAL_HPP
#define UMITL_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace umitl {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0, gcd(|num|, den) == 1

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    Rational operator-() const { return Rational(-num, den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "7", "-3", "5/2" and exact decimals like "2.5".
    static Rational parse(const std::string& text);
};

}  // namespace umitl

#endif
