#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace folearn {

/// Exact fraction with int64 numerator/denominator, always normalized
/// (den > 0, gcd(num, den) == 1). Big enough for error counts and
/// probability masses at desk scale; construction throws on den == 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    explicit Rational(std::int64_t n) : num(n), den(1) {}

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator>=(Rational a, Rational b) { return b <= a; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace folearn
