#pragma once

#include <vector>

#include "prymcusps/homology.hpp"
#include "prymcusps/prototypes.hpp"

namespace prym {

/// Image of an algebraic prototype under the Galois conjugation
/// sigma: sqrt(D) -> -sqrt(D) acting on cusps. The dichotomy is decided by
/// an exact comparison (h against lambda/2 for eps = +1, h against lambda
/// for eps = -1); ties are impossible since lambda is irrational.
inline AlgebraicPrototype conjugate(const AlgebraicPrototype& a) {
    const Discriminant d = a.discriminant();
    validate_algebraic(a.w, a.h, a.e, a.eps, d);
    const QuadElem h = QuadElem::from_rational(Rational(a.h), d);
    const QuadElem lam = a.lambda();
    if (a.eps == 1) {
        if (h > lam / Rational(2))
            return AlgebraicPrototype{a.h, a.w, a.e, -1, a.d};
        return AlgebraicPrototype{a.w, a.h, -a.e, +1, a.d};
    }
    if (h > lam) return AlgebraicPrototype{a.h, a.w, a.e, +1, a.d};
    return AlgebraicPrototype{a.w, a.h, -a.e, -1, a.d};
}

/// A sigma-orbit of algebraic prototypes: a conjugate pair, or a fixed
/// point (possible only for even D, where e = 0 can occur). Component
/// labels ride along; for D = 1 mod 8 the two labels always differ.
struct GaloisOrbit {
    AlgebraicPrototype first;
    AlgebraicPrototype second;
    bool fixed_point = false;
    ComponentLabel first_label;
    ComponentLabel second_label;
};

inline std::vector<GaloisOrbit> galois_orbits(Discriminant d) {
    std::vector<GaloisOrbit> out;
    std::vector<AlgebraicPrototype> seen;
    for (const AlgebraicPrototype& a : enumerate_algebraic(d)) {
        bool paired = false;
        for (const AlgebraicPrototype& s : seen) paired = paired || s == a;
        if (paired) continue;
        const AlgebraicPrototype b = conjugate(a);
        seen.push_back(b);
        out.push_back(GaloisOrbit{a, b, a == b, spin_component(a), spin_component(b)});
    }
    return out;
}

}  // namespace prym
