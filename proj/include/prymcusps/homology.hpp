#pragma once

#include <array>
#include <string>
#include <vector>

#include "prymcusps/errors.hpp"
#include "prymcusps/prototypes.hpp"

namespace prym {

/// 4x4 integer matrix in the basis b = (alpha1, alpha2, beta1, beta2).
struct Mat4 {
    std::array<std::array<long long, 4>, 4> m{};

    static Mat4 scalar(long long c) {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = c;
        return r;
    }

    Mat4 transpose() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[j][i] = m[i][j];
        return r;
    }

    bool is_zero() const {
        for (const auto& row : m)
            for (long long v : row)
                if (v != 0) return false;
        return true;
    }

    long long det() const {
        // Laplace expansion along the first row; fine at this size.
        auto minor3 = [&](int skip_col) {
            std::array<std::array<long long, 3>, 3> s{};
            for (int i = 1; i < 4; ++i) {
                int cc = 0;
                for (int j = 0; j < 4; ++j) {
                    if (j == skip_col) continue;
                    s[i - 1][cc++] = m[i][j];
                }
            }
            return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) -
                   s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
                   s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
        };
        long long acc = 0;
        for (int j = 0; j < 4; ++j) {
            const long long term = m[0][j] * minor3(j);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    }

    friend Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                long long acc = 0;
                for (int k = 0; k < 4; ++k) acc += a.m[i][k] * b.m[k][j];
                r.m[i][j] = acc;
            }
        return r;
    }
    friend Mat4 operator+(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
    friend Mat4 operator-(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }
    friend bool operator==(const Mat4& a, const Mat4& b) { return a.m == b.m; }
    friend bool operator!=(const Mat4& a, const Mat4& b) { return !(a == b); }
};

/// The (1,2) intersection pairing on anti-invariant homology in the basis
/// b^eps. Skew-symmetric; the only nonzero pairings are
/// <alpha1,beta1> = 1, <alpha2,beta2> = 2 for eps = +1 and
/// <alpha1,beta1> = 2, <alpha2,beta2> = 1 for eps = -1.
inline Mat4 intersection_matrix(int eps) {
    Mat4 j;
    const long long x = eps == 1 ? 1 : 2;
    const long long y = eps == 1 ? 2 : 1;
    j.m[0][2] = x;
    j.m[1][3] = y;
    j.m[2][0] = -x;
    j.m[3][1] = -y;
    return j;
}

/// Action of the order generator T = (1+sqrt(D))/2 on anti-invariant
/// homology, together with the pairing for the same basis.
struct HomologyRep {
    Prototype prototype;
    Mat4 T;
    Mat4 J;
};

inline HomologyRep iota_T(const Prototype& p) {
    if (p.d % 2 == 0)
        throw OddDiscriminantRequired(
            "iota(T) requires an odd discriminant (e is odd iff D is odd), got D=" +
            std::to_string(p.d));
    const long long a = (p.e + 1) / 2;   // e odd, so both halves are integers
    const long long b = -(p.e - 1) / 2;
    Mat4 T;
    if (p.eps == 1) {
        T.m = {{{a, 2 * p.w, 0, 2 * p.t},
                {p.h, b, -p.t, 0},
                {0, 0, a, 2 * p.h},
                {0, 0, p.w, b}}};
    } else {
        T.m = {{{a, p.w, 0, p.t},
                {2 * p.h, b, -2 * p.t, 0},
                {0, 0, a, p.h},
                {0, 0, 2 * p.w, b}}};
    }
    return {p, T, intersection_matrix(p.eps)};
}

namespace detail {

// Basis of the column space of M over F_2, as 4-bit row masks.
inline std::vector<unsigned> f2_column_space(const Mat4& M) {
    std::vector<unsigned> basis;
    for (int j = 0; j < 4; ++j) {
        unsigned v = 0;
        for (int i = 0; i < 4; ++i)
            if (M.m[i][j] % 2 != 0) v |= 1u << i;
        for (unsigned b : basis) {
            unsigned lead = b & ~(b - 1);  // lowest set bit of the pivot
            if (v & lead) v ^= b;
        }
        if (v) {
            // keep reduced form: eliminate the new pivot from earlier rows
            unsigned lead = v & ~(v - 1);
            for (unsigned& b : basis)
                if (b & lead) b ^= v;
            basis.push_back(v);
        }
    }
    return basis;
}

inline int pair_mod2(unsigned x, unsigned y, const Mat4& J) {
    long long acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if ((x >> i & 1) && (y >> j & 1)) acc += J.m[i][j];
    return static_cast<int>(((acc % 2) + 2) % 2);
}

}  // namespace detail

/// Whether the intersection pairing vanishes identically mod 2 on the image
/// of iota(T) in homology with F_2 coefficients. This is the topological
/// route to the spin invariant: it comes out true exactly when
/// e + eps = 0 mod 4.
inline bool pairing_on_imT_mod2(const Prototype& p) {
    const HomologyRep rep = iota_T(p);
    const std::vector<unsigned> image = detail::f2_column_space(rep.T);
    for (size_t i = 0; i < image.size(); ++i)
        for (size_t j = i; j < image.size(); ++j)
            if (detail::pair_mod2(image[i], image[j], rep.J) != 0) return false;
    return true;
}

/// Component label of the cusp. For D = 1 mod 8 the curve has two
/// components and the label is i with 2i = e + eps mod 4; otherwise there
/// is a single component, labeled 1 by convention.
struct ComponentLabel {
    int index = 1;
    bool two_components = false;

    friend bool operator==(ComponentLabel a, ComponentLabel b) {
        return a.index == b.index && a.two_components == b.two_components;
    }
    friend bool operator!=(ComponentLabel a, ComponentLabel b) { return !(a == b); }
};

inline ComponentLabel spin_component(const AlgebraicPrototype& a) {
    if (a.d % 8 != 1) return {1, false};
    const long long r = ((a.e + a.eps) % 4 + 4) % 4;
    return {r == 0 ? 2 : 1, true};
}

inline ComponentLabel spin_component(const Prototype& p) {
    return spin_component(algebraic(p));
}

}  // namespace prym
