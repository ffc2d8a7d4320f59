#pragma once

#include <cstdint>
#include <string>

namespace fibercalc {

// Exact fraction on int64; plenty for plumbing matrices and K^2 arithmetic.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return {-num, den}; }
    friend bool operator==(const Rational&, const Rational&) = default;

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    bool integral() const { return den == 1; }
};

std::string to_string(const Rational& r);

}  // namespace fibercalc
