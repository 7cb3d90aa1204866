#pragma once

#include <string>

#include "prymcusps/errors.hpp"
#include "prymcusps/numeric.hpp"

namespace prym {

/// A positive non-square discriminant D with D = 0 or 1 mod 4.
class Discriminant {
public:
    explicit Discriminant(long long d) : value_(d) {
        std::string why;
        if (!valid(d, &why)) throw InvalidDiscriminant(why);
    }

    long long value() const { return value_; }
    bool is_odd() const { return value_ % 2 != 0; }

    // D = 1 mod 8 is the two-component case.
    bool two_components() const { return value_ % 8 == 1; }

    static bool valid(long long d, std::string* why = nullptr) {
        const auto fail = [&](const char* msg) {
            if (why) *why = "invalid discriminant " + std::to_string(d) + ": " + msg;
            return false;
        };
        if (d <= 0) return fail("must be positive");
        const long long r = d % 4;
        if (r != 0 && r != 1) return fail("must be 0 or 1 mod 4");
        if (is_perfect_square(d)) return fail("must not be a square");
        return true;
    }

    friend bool operator==(Discriminant a, Discriminant b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(Discriminant a, Discriminant b) { return !(a == b); }

private:
    long long value_;
};

/// Exact element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)),
/// under the real embedding sqrt(D) > 0. Fractions are kept reduced with
/// positive denominator, so equality is structural. Elements carry their
/// discriminant; mixing discriminants in arithmetic throws.
class QuadElem {
public:
    QuadElem(Rational a, Rational b, Discriminant d)
        : a_(std::move(a)), b_(std::move(b)), d_(d.value()) {}

    static QuadElem zero(Discriminant d) { return {Rational(0), Rational(0), d}; }
    static QuadElem from_rational(Rational a, Discriminant d) {
        return {std::move(a), Rational(0), d};
    }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coeff() const { return b_; }
    long long discriminant_value() const { return d_; }
    Discriminant discriminant() const { return Discriminant(d_); }

    bool is_zero() const { return a_.sign() == 0 && b_.sign() == 0; }
    bool is_rational() const { return b_.sign() == 0; }

    /// The image under the nontrivial field automorphism sqrt(D) -> -sqrt(D).
    QuadElem conjugate() const { return {a_, -b_, Discriminant(d_)}; }

    /// The field norm x * conj(x) = a^2 - b^2 D, a rational number.
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

    QuadElem inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        const Rational n = norm();
        return {a_ / n, -b_ / n, Discriminant(d_)};
    }

    /// Exact sign of a + b*sqrt(D) as a real number. Case analysis on the
    /// signs of a and b; mixed signs compare a^2 against b^2 D. No floating
    /// point is involved.
    int sign() const {
        const int sa = a_.sign();
        const int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const Rational lhs = a_ * a_;
        const Rational rhs = b_ * b_ * d_;
        if (lhs == rhs) return 0;  // unreachable for non-square D with b != 0
        const bool rational_dominates = lhs > rhs;
        return rational_dominates ? sa : sb;
    }

    QuadElem abs() const { return sign() < 0 ? -*this : *this; }

    friend QuadElem operator-(const QuadElem& x) {
        return {-x.a_, -x.b_, Discriminant(x.d_)};
    }
    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        check_same_field(x, y);
        return {x.a_ + y.a_, x.b_ + y.b_, Discriminant(x.d_)};
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        check_same_field(x, y);
        return {x.a_ - y.a_, x.b_ - y.b_, Discriminant(x.d_)};
    }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        check_same_field(x, y);
        return {x.a_ * y.a_ + x.b_ * y.b_ * x.d_, x.a_ * y.b_ + x.b_ * y.a_,
                Discriminant(x.d_)};
    }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) {
        return x * y.inverse();
    }
    friend QuadElem operator*(const QuadElem& x, const Rational& c) {
        return {x.a_ * c, x.b_ * c, Discriminant(x.d_)};
    }
    friend QuadElem operator*(const Rational& c, const QuadElem& x) { return x * c; }
    friend QuadElem operator/(const QuadElem& x, const Rational& c) {
        return {x.a_ / c, x.b_ / c, Discriminant(x.d_)};
    }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        check_same_field(x, y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }
    friend bool operator<(const QuadElem& x, const QuadElem& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const QuadElem& x, const QuadElem& y) { return y < x; }
    friend bool operator<=(const QuadElem& x, const QuadElem& y) { return !(y < x); }
    friend bool operator>=(const QuadElem& x, const QuadElem& y) { return !(x < y); }

    /// Rendered as "a + b*sqrt(D)" with exact rational coefficients.
    std::string to_string() const {
        std::string out = rational_to_string(a_);
        if (b_.sign() >= 0) {
            out += " + " + rational_to_string(b_);
        } else {
            out += " - " + rational_to_string(-b_);
        }
        out += "*sqrt(" + std::to_string(d_) + ")";
        return out;
    }

    /// Interval of width at most 10^-digits containing the real value.
    RatInterval enclosure(int digits) const {
        if (b_.sign() == 0) return {a_, a_};
        // |b| * width(sqrt interval) must come out below 10^-digits
        int extra = 1;
        Rational babs = b_.sign() < 0 ? Rational(-b_) : b_;
        while (babs > pow10(extra)) ++extra;
        const RatInterval sd = sqrt_enclosure(Rational(d_), digits + extra);
        Rational lo, hi;
        if (b_.sign() > 0) {
            lo = a_ + b_ * sd.lo;
            hi = a_ + b_ * sd.hi;
        } else {
            lo = a_ + b_ * sd.hi;
            hi = a_ + b_ * sd.lo;
        }
        return {lo, hi};
    }

    double to_double() const { return static_cast<double>(enclosure(20).mid()); }

private:
    static void check_same_field(const QuadElem& x, const QuadElem& y) {
        if (x.d_ != y.d_)
            throw DiscriminantMismatch(
                "operands live in different quadratic fields: sqrt(" +
                std::to_string(x.d_) + ") vs sqrt(" + std::to_string(y.d_) + ")");
    }

    static std::string rational_to_string(const Rational& q) {
        std::string s = numerator(q).str();
        if (denominator(q) != 1) s += "/" + denominator(q).str();
        return s;
    }

    Rational a_;
    Rational b_;
    long long d_;
};

inline QuadElem sqrt_of(Discriminant d) {
    return {Rational(0), Rational(1), d};
}

/// The module generator T of the order O_D = Z + TZ: (1+sqrt(D))/2 for odd D,
/// sqrt(D)/2 for even D.
inline QuadElem quad_order_generator(Discriminant d) {
    const Rational half(1, 2);
    return {d.is_odd() ? half : Rational(0), half, d};
}

/// lambda = (e + sqrt(D))/2, the short-cylinder parameter attached to an
/// admissible e. Requires e^2 < D (so lambda > 0) and e = D mod 2.
inline QuadElem lambda_of(long long e, Discriminant d) {
    if (e * e >= d.value())
        throw std::invalid_argument("lambda_of: e^2 must be less than D, got e=" +
                                    std::to_string(e) + ", D=" +
                                    std::to_string(d.value()));
    if (((e % 2) + 2) % 2 != ((d.value() % 2) + 2) % 2)
        throw std::invalid_argument("lambda_of: e must have the parity of D, got e=" +
                                    std::to_string(e) + ", D=" +
                                    std::to_string(d.value()));
    return {Rational(e, 2), Rational(1, 2), d};
}

}  // namespace prym
