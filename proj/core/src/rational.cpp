#include "fibercalc/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace fibercalc {

Rational::Rational(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace fibercalc
