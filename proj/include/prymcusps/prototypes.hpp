#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "prymcusps/errors.hpp"
#include "prymcusps/quadfield.hpp"

namespace prym {

/// Cusp prototype [w,h,t,e,eps] of discriminant D, encoding a three-cylinder
/// decomposition. Valid data satisfies
///   D = e^2 + 8wh,  w,h > 0,  0 <= t < gcd(w,h),  gcd(w,h,t,e) = 1,
///   w > lambda/2  (and w > lambda when eps = +1),  lambda = (e+sqrt(D))/2.
struct Prototype {
    long long w = 0;
    long long h = 0;
    long long t = 0;
    long long e = 0;
    int eps = 0;
    long long d = 0;

    Discriminant discriminant() const { return Discriminant(d); }
    QuadElem lambda() const { return lambda_of(e, Discriminant(d)); }

    auto key() const { return std::tuple(e, w, h, eps == 1 ? 0 : 1, t); }
    friend bool operator==(const Prototype& a, const Prototype& b) {
        return a.d == b.d && a.key() == b.key();
    }
    friend bool operator!=(const Prototype& a, const Prototype& b) { return !(a == b); }
    friend bool operator<(const Prototype& a, const Prototype& b) {
        return std::tuple(a.d, a.key()) < std::tuple(b.d, b.key());
    }

    std::string to_string() const {
        return "[" + std::to_string(w) + "," + std::to_string(h) + "," +
               std::to_string(t) + "," + std::to_string(e) + "," +
               (eps == 1 ? "+1" : "-1") + "]";
    }
};

/// Twist-free projection [w,h,e,eps]: cusp prototypes that differ only in t
/// share their algebraic prototype (and their stable fiber).
struct AlgebraicPrototype {
    long long w = 0;
    long long h = 0;
    long long e = 0;
    int eps = 0;
    long long d = 0;

    Discriminant discriminant() const { return Discriminant(d); }
    QuadElem lambda() const { return lambda_of(e, Discriminant(d)); }

    auto key() const { return std::tuple(e, w, h, eps == 1 ? 0 : 1); }
    friend bool operator==(const AlgebraicPrototype& a, const AlgebraicPrototype& b) {
        return a.d == b.d && a.key() == b.key();
    }
    friend bool operator!=(const AlgebraicPrototype& a, const AlgebraicPrototype& b) {
        return !(a == b);
    }
    friend bool operator<(const AlgebraicPrototype& a, const AlgebraicPrototype& b) {
        return std::tuple(a.d, a.key()) < std::tuple(b.d, b.key());
    }

    std::string to_string() const {
        return "[" + std::to_string(w) + "," + std::to_string(h) + "," +
               std::to_string(e) + "," + (eps == 1 ? "+1" : "-1") + "]";
    }
};

enum class GeometricType { APlus, AMinus, B };

inline std::string to_string(GeometricType t) {
    switch (t) {
        case GeometricType::APlus: return "A+";
        case GeometricType::AMinus: return "A-";
        case GeometricType::B: return "B";
    }
    return "?";
}

namespace detail {

// Width bound: w > lambda/2, strengthened to w > lambda for eps = +1.
// The comparison is exact; equality cannot occur since lambda is irrational.
inline bool width_bound_holds(long long w, long long e, int eps, Discriminant d) {
    const QuadElem lam = lambda_of(e, d);
    const QuadElem width = QuadElem::from_rational(Rational(w), d);
    if (eps == 1) return width > lam;
    return width > lam / Rational(2);
}

inline long long gcd4(long long w, long long h, long long t, long long e) {
    return std::gcd(std::gcd(w, h), std::gcd(t, e));
}

}  // namespace detail

inline Prototype validate(long long w, long long h, long long t, long long e,
                          int eps, Discriminant d) {
    const auto where = [&] {
        return "[" + std::to_string(w) + "," + std::to_string(h) + "," +
               std::to_string(t) + "," + std::to_string(e) + "," +
               std::to_string(eps) + "] with D=" + std::to_string(d.value());
    };
    if (eps != 1 && eps != -1)
        throw InvalidPrototype("eps must be +1 or -1 in " + where());
    if (w <= 0 || h <= 0)
        throw InvalidPrototype("w and h must be positive in " + where());
    if (d.value() != e * e + 8 * w * h)
        throw InvalidPrototype("arithmetic: D != e^2 + 8wh in " + where());
    if (!detail::width_bound_holds(w, e, eps, d))
        throw InvalidPrototype(eps == 1
                                   ? "width bound: w > lambda fails in " + where()
                                   : "width bound: w > lambda/2 fails in " + where());
    if (t < 0 || t >= std::gcd(w, h))
        throw InvalidPrototype("twist range: t must lie in [0, gcd(w,h)) in " + where());
    if (detail::gcd4(w, h, t, e) != 1)
        throw InvalidPrototype("gcd: gcd(w,h,t,e) must be 1 in " + where());
    return Prototype{w, h, t, e, eps, d.value()};
}

/// An algebraic prototype is valid iff some twist extends it to a valid
/// prototype; the t-free conditions suffice (a coprime twist always exists).
inline AlgebraicPrototype validate_algebraic(long long w, long long h, long long e,
                                             int eps, Discriminant d) {
    const auto where = [&] {
        return "[" + std::to_string(w) + "," + std::to_string(h) + "," +
               std::to_string(e) + "," + std::to_string(eps) + "] with D=" +
               std::to_string(d.value());
    };
    if (eps != 1 && eps != -1)
        throw InvalidPrototype("eps must be +1 or -1 in " + where());
    if (w <= 0 || h <= 0)
        throw InvalidPrototype("w and h must be positive in " + where());
    if (d.value() != e * e + 8 * w * h)
        throw InvalidPrototype("arithmetic: D != e^2 + 8wh in " + where());
    if (!detail::width_bound_holds(w, e, eps, d))
        throw InvalidPrototype(eps == 1
                                   ? "width bound: w > lambda fails in " + where()
                                   : "width bound: w > lambda/2 fails in " + where());
    return AlgebraicPrototype{w, h, e, eps, d.value()};
}

inline AlgebraicPrototype algebraic(const Prototype& p) {
    return AlgebraicPrototype{p.w, p.h, p.e, p.eps, p.d};
}

/// Number of twists t in [0, gcd(w,h)) with gcd(w,h,t,e) = 1. Always >= 1.
inline long long twist_count(const AlgebraicPrototype& a) {
    const long long g = std::gcd(a.w, a.h);
    const long long core = std::gcd(g, a.e);
    long long count = 0;
    for (long long t = 0; t < g; ++t)
        if (std::gcd(core, t) == 1) ++count;
    return count;
}

/// All prototypes of discriminant D, each exactly once, ordered by
/// (e asc, w asc, h asc, eps with +1 first, t asc).
inline std::vector<Prototype> enumerate_prototypes(Discriminant d) {
    std::vector<Prototype> out;
    const long long D = d.value();
    const long long emax = isqrt_ll(D - 1);  // e^2 < D
    for (long long e = -emax; e <= emax; ++e) {
        const long long rest = D - e * e;
        if (rest % 8 != 0) continue;
        const long long area = rest / 8;  // = w*h
        std::vector<std::pair<long long, long long>> pairs;
        for (long long div = 1; div * div <= area; ++div) {
            if (area % div != 0) continue;
            pairs.emplace_back(div, area / div);
            if (div != area / div) pairs.emplace_back(area / div, div);
        }
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [w, h] : pairs) {
            for (int eps : {+1, -1}) {
                if (!detail::width_bound_holds(w, e, eps, d)) continue;
                const long long g = std::gcd(w, h);
                for (long long t = 0; t < g; ++t) {
                    if (detail::gcd4(w, h, t, e) != 1) continue;
                    out.push_back(Prototype{w, h, t, e, eps, D});
                }
            }
        }
    }
    return out;
}

/// Distinct algebraic prototypes of D, in the induced canonical order.
inline std::vector<AlgebraicPrototype> enumerate_algebraic(Discriminant d) {
    std::vector<AlgebraicPrototype> out;
    for (const Prototype& p : enumerate_prototypes(d)) {
        const AlgebraicPrototype a = algebraic(p);
        if (out.empty() || !(out.back() == a)) out.push_back(a);
    }
    return out;
}

inline GeometricType geometric_type(const AlgebraicPrototype& a) {
    if (a.eps == 1) return GeometricType::APlus;
    const QuadElem width = QuadElem::from_rational(Rational(a.w), a.discriminant());
    return width > a.lambda() ? GeometricType::AMinus : GeometricType::B;
}

inline GeometricType geometric_type(const Prototype& p) {
    return geometric_type(algebraic(p));
}

struct Cylinder {
    QuadElem width;
    QuadElem height;
    QuadElem twist;
    bool simple = false;
    bool fixed_by_involution = false;
};

/// The three cylinders in the order matching the residues (r1, r2, r3):
/// cylinders 1 and 3 are the involution-swapped pair, cylinder 2 is fixed,
/// and r_i equals the width of cylinder i.
struct CylinderData {
    std::array<Cylinder, 3> cylinders;
    QuadElem r1, r2, r3;
};

inline CylinderData cylinder_data(const Prototype& p) {
    const Discriminant d = p.discriminant();
    const QuadElem lam = p.lambda();
    const QuadElem w = QuadElem::from_rational(Rational(p.w), d);
    const QuadElem h = QuadElem::from_rational(Rational(p.h), d);
    const QuadElem t = QuadElem::from_rational(Rational(p.t), d);
    const QuadElem zero = QuadElem::zero(d);
    const GeometricType type = geometric_type(p);

    if (type == GeometricType::APlus) {
        // One simple lambda x lambda cylinder fixed by the involution,
        // flanked by the swapped pair of w x h cylinders carrying the twist.
        const Cylinder long_cyl{w, h, t, false, false};
        const Cylinder short_cyl{lam, lam, zero, true, true};
        return {{long_cyl, short_cyl, long_cyl}, w, lam, w};
    }
    // A- and B: two lambda/2 x lambda/2 cylinders swapped by the involution
    // (simple exactly in type A-), one fixed w x h cylinder with the twist.
    const QuadElem half_lam = lam / Rational(2);
    const bool simple = type == GeometricType::AMinus;
    const Cylinder short_cyl{half_lam, half_lam, zero, simple, false};
    const Cylinder long_cyl{w, h, t, false, true};
    return {{short_cyl, long_cyl, short_cyl}, half_lam, w, half_lam};
}

/// Flat area of the decomposition, i.e. the sum of width*height over the
/// three cylinders, as an exact element of Q(sqrt(D)).
inline QuadElem flat_area(const Prototype& p) {
    const CylinderData c = cylinder_data(p);
    return c.cylinders[0].width * c.cylinders[0].height +
           c.cylinders[1].width * c.cylinders[1].height +
           c.cylinders[2].width * c.cylinders[2].height;
}

}  // namespace prym
