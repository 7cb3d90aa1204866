#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor of sqrt(n) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline long long isqrt_ll(long long n) {
    return static_cast<long long>(isqrt(Int(n)));
}

inline bool is_perfect_square(long long n) {
    if (n < 0) return false;
    long long r = isqrt_ll(n);
    return r * r == n;
}

inline Int pow10(int k) {
    Int p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
}

// Closed interval with exact rational endpoints.
struct RatInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
};

// Encloses sqrt(q) for q >= 0 in an interval of width at most 10^-digits.
inline RatInterval sqrt_enclosure(const Rational& q, int digits) {
    if (q.sign() < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    if (q.sign() == 0) return {Rational(0), Rational(0)};
    const Int num = numerator(q);
    const Int den = denominator(q);
    const Int scale = pow10(digits);
    // sqrt(num/den) = sqrt(num*den)/den
    const Int root = isqrt(num * den * scale * scale);
    const Int d = den * scale;
    return {Rational(root, d), Rational(root + 1, d)};
}

// q rendered with `decimals` digits after the point, rounded to nearest.
inline std::string decimal_string(const Rational& q, int decimals) {
    const bool negative = q.sign() < 0;
    const Rational a = negative ? Rational(-q) : q;
    const Int scale = pow10(decimals);
    // round(a * scale) = floor(a * scale + 1/2)
    const Int scaled =
        (numerator(a) * scale * 2 + denominator(a)) / (denominator(a) * 2);
    std::string digits = scaled.str();
    if (static_cast<int>(digits.size()) <= decimals)
        digits.insert(0, decimals + 1 - digits.size(), '0');
    std::string out;
    if (negative && scaled != 0) out += '-';
    out += digits.substr(0, digits.size() - decimals);
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - decimals);
    }
    return out;
}

}  // namespace prym
