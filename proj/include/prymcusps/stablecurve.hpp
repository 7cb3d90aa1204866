#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "prymcusps/errors.hpp"
#include "prymcusps/prototypes.hpp"

namespace prym {

/// Stable-fiber parameter s = r2/(2 r1), the ratio of cylinder residues:
/// (e+sqrt(D))/(4w) for eps = +1 and 2w/(e+sqrt(D)) = (-e+sqrt(D))/(4h)
/// for eps = -1. Both forms are positive, so the canonical sign choice
/// s > 0 holds as written. |s| determines the fiber.
inline QuadElem s_param(const AlgebraicPrototype& a) {
    const Discriminant d = a.discriminant();
    validate_algebraic(a.w, a.h, a.e, a.eps, d);
    QuadElem s = a.eps == 1
                     ? QuadElem(Rational(a.e, 4 * a.w), Rational(1, 4 * a.w), d)
                     : QuadElem(Rational(-a.e, 4 * a.h), Rational(1, 4 * a.h), d);
    if (s.sign() < 0) s = -s;  // canonical representative under s -> -s
    return s;
}

/// One of the marked points -s -+ sqrt(u): base -s in Q(sqrt(D)), radicand
/// u in Q(sqrt(D)), and the branch sign. No quartic tower arithmetic is
/// needed; sums and products reduce to Q(sqrt(D)).
struct SurdPoint {
    QuadElem base;
    QuadElem radicand;
    int surd_sign;
};

/// The trinodal fiber over a cusp: a projective line with marked points
/// +-1, +-x1, +-x3 and nodes identifying (x1,-x3), (+1,-1), (x3,-x1),
/// listed in the order of their residues (r1, r2, r3).
struct StableFiber {
    AlgebraicPrototype prototype;
    QuadElem s;
    QuadElem u;  // (1 - s^2)/3; negative exactly when x1, x3 are complex
    SurdPoint x1;
    SurdPoint x3;
    QuadElem r1, r2, r3;

    bool complex_points() const { return u.sign() < 0; }

    static std::array<std::pair<std::string, std::string>, 3> node_pairs() {
        return {{{"x1", "-x3"}, {"+1", "-1"}, {"x3", "-x1"}}};
    }
};

inline StableFiber stable_fiber(const AlgebraicPrototype& a) {
    const Discriminant d = a.discriminant();
    const QuadElem s = s_param(a);
    const QuadElem one = QuadElem::from_rational(Rational(1), d);
    const QuadElem u = (one - s * s) / Rational(3);
    const QuadElem lam = a.lambda();
    const QuadElem w = QuadElem::from_rational(Rational(a.w), d);
    const QuadElem r1 = a.eps == 1 ? w : lam / Rational(2);
    const QuadElem r2 = a.eps == 1 ? lam : w;
    return StableFiber{a,   s,  u, SurdPoint{-s, u, -1}, SurdPoint{-s, u, +1},
                       r1, r2, r1};
}

/// Exact distinctness of the six marked points. They coincide only at the
/// excluded parameter values: u = 0 forces x1 = x3, s = 0 forces x1 = -x3,
/// and x in {0, +-1} forces s in {+-1/2, -+1}. All comparisons are exact.
inline bool six_points_distinct(const StableFiber& f) {
    const Discriminant d = f.prototype.discriminant();
    const auto is_value = [&](const Rational& c) {
        return f.s == QuadElem::from_rational(c, d);
    };
    if (f.u.is_zero()) return false;
    if (f.s.is_zero()) return false;
    if (is_value(Rational(1)) || is_value(Rational(-1))) return false;
    if (is_value(Rational(1, 2)) || is_value(Rational(-1, 2))) return false;
    return true;
}

/// Numeric values of x1 and x3 with a guaranteed error bound: each returned
/// component differs from the true value by less than 10^-precision. When
/// u < 0 the points are the complex-conjugate pair -s -+ i sqrt(|u|).
struct MarkedPoints {
    bool real_points;
    Rational x1_re, x1_im;
    Rational x3_re, x3_im;
    Rational error_bound;
};

inline MarkedPoints marked_points(const AlgebraicPrototype& a, int precision) {
    if (precision < 10)
        throw std::invalid_argument("marked_points: precision must be at least 10");
    const StableFiber f = stable_fiber(a);
    const Rational target(1, pow10(precision));
    const QuadElem u_abs = f.u.abs();
    const bool real = f.u.sign() > 0;

    for (int digits = precision + 6;; digits *= 2) {
        const RatInterval s_iv = f.s.enclosure(digits);
        const RatInterval u_iv = u_abs.enclosure(digits);
        if (u_iv.lo.sign() < 0) continue;  // u != 0 exactly, so this resolves
        const Rational root_lo = sqrt_enclosure(u_iv.lo, digits).lo;
        const Rational root_hi = sqrt_enclosure(u_iv.hi, digits).hi;
        const Rational root_width = root_hi - root_lo;
        const Rational width = s_iv.width() + root_width;
        if (width > target) continue;

        MarkedPoints out;
        out.real_points = real;
        out.error_bound = width / 2;
        const Rational ms = -s_iv.mid();        // -s
        const Rational root = (root_lo + root_hi) / 2;  // sqrt(|u|)
        if (real) {
            out.x1_re = ms - root;
            out.x3_re = ms + root;
            out.x1_im = out.x3_im = Rational(0);
        } else {
            out.x1_re = out.x3_re = ms;
            out.x1_im = -root;
            out.x3_im = root;
        }
        return out;
    }
}

/// True iff the two cusps degenerate to the same stable curve, i.e.
/// s(a1) = +-s(a2) exactly in Q(sqrt(D)).
inline bool same_fiber(const AlgebraicPrototype& a1, const AlgebraicPrototype& a2) {
    if (a1.d != a2.d)
        throw DiscriminantMismatch("same_fiber: prototypes have D=" +
                                   std::to_string(a1.d) + " and D=" +
                                   std::to_string(a2.d));
    const QuadElem s1 = s_param(a1);
    const QuadElem s2 = s_param(a2);
    return s1 == s2 || s1 == -s2;
}

namespace detail {

using Float50 = boost::multiprecision::cpp_bin_float_50;

struct Cplx {
    Float50 re{0};
    Float50 im{0};

    friend Cplx operator+(const Cplx& a, const Cplx& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Cplx operator-(const Cplx& a, const Cplx& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        const Float50 n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Float50 magnitude() const { return sqrt(re * re + im * im); }
};

inline Float50 to_float50(const Rational& q) {
    return Float50(numerator(q)) / Float50(denominator(q));
}

inline Float50 to_float50(const QuadElem& x) {
    return to_float50(x.rational_part()) +
           to_float50(x.surd_coeff()) * sqrt(Float50(x.discriminant_value()));
}

}  // namespace detail

/// Samples the would-be constant of the stable differential: the function
///   P(z) = (sum_i r_i/(z-x_i) - r_i/(z-y_i)) * prod_i (z-x_i)(z-y_i)
/// over points on a circle enclosing all poles, with node pairs
/// (x1,-x3), (1,-1), (x3,-x1) and the given residues. For the true residue
/// assignment P is constant and nonzero; its spread certifies the shape of
/// the differential.
struct ResidueProbe {
    double relative_deviation;  // max_k |P(z_k) - mean| / max_k |P(z_k)|
    double constant_magnitude;  // |mean| / max_k |P(z_k)|
};

inline ResidueProbe residue_identity_probe(const StableFiber& f, const QuadElem& r1,
                                           const QuadElem& r2, const QuadElem& r3,
                                           int samples) {
    using detail::Cplx;
    using detail::Float50;
    if (samples < 2) throw std::invalid_argument("residue_identity_probe: samples < 2");

    const Float50 s = detail::to_float50(f.s);
    const Float50 u = detail::to_float50(f.u);
    Cplx x1, x3;
    if (u.sign() >= 0) {
        const Float50 root = sqrt(u);
        x1 = {-s - root, Float50(0)};
        x3 = {-s + root, Float50(0)};
    } else {
        const Float50 root = sqrt(Float50(-u));
        x1 = {-s, -root};
        x3 = {-s, root};
    }
    const Cplx one{Float50(1), Float50(0)};
    const std::array<Cplx, 3> xs = {x1, one, x3};
    const std::array<Cplx, 3> ys = {Cplx{-x3.re, -x3.im}, Cplx{-one.re, -one.im},
                                    Cplx{-x1.re, -x1.im}};
    const std::array<Float50, 3> rs = {detail::to_float50(r1), detail::to_float50(r2),
                                       detail::to_float50(r3)};

    Float50 radius = 1;
    radius = std::max(radius, x1.magnitude());
    radius = std::max(radius, x3.magnitude());
    radius = 2 * radius + 1;  // all samples stay clear of the poles

    const Float50 pi = atan(Float50(1)) * 4;
    Cplx total{};
    Float50 max_mag = 0;
    std::vector<Cplx> values;
    values.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const Float50 theta = 2 * pi * k / samples + Float50(1) / 7;
        const Cplx z{radius * cos(theta), radius * sin(theta)};
        Cplx sum{};
        Cplx prod = one;
        for (int i = 0; i < 3; ++i) {
            const Cplx rr{rs[i], Float50(0)};
            sum = sum + rr / (z - xs[i]) - rr / (z - ys[i]);
            prod = prod * (z - xs[i]) * (z - ys[i]);
        }
        const Cplx p = sum * prod;
        values.push_back(p);
        total = total + p;
        max_mag = std::max(max_mag, p.magnitude());
    }
    const Cplx mean{total.re / samples, total.im / samples};
    Float50 max_dev = 0;
    for (const Cplx& p : values) max_dev = std::max(max_dev, (p - mean).magnitude());
    if (max_mag.sign() == 0) return {0.0, 0.0};
    return {static_cast<double>(max_dev / max_mag),
            static_cast<double>(mean.magnitude() / max_mag)};
}

/// Certifies numerically that the fiber's own residues make P(z) a nonzero
/// constant: relative spread below tol across the samples.
inline bool residue_identity_check(const AlgebraicPrototype& a, int samples,
                                   double tol) {
    if (tol <= 0) throw std::invalid_argument("residue_identity_check: tol <= 0");
    const StableFiber f = stable_fiber(a);
    const ResidueProbe probe = residue_identity_probe(f, f.r1, f.r2, f.r3, samples);
    return probe.relative_deviation < tol && probe.constant_magnitude > tol;
}

}  // namespace prym
