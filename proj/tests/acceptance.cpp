// Acceptance sweep: end-to-end checks over large discriminant ranges, with
// wall-clock budgets. Prints one line per criterion and exits with the
// number of failures.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "prymcusps/galois.hpp"
#include "prymcusps/homology.hpp"
#include "prymcusps/prototypes.hpp"
#include "prymcusps/stablecurve.hpp"

using namespace prym;

namespace {

int failures = 0;

template <typename F>
void criterion(const std::string& name, double budget_seconds, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok;
    try {
        ok = body(detail);
    } catch (const std::exception& ex) {
        ok = false;
        detail = std::string("exception: ") + ex.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > budget_seconds) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "exceeded budget of " + std::to_string(budget_seconds) + "s";
    }
    std::printf("%s  %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                elapsed, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string tag(const Prototype& p) {
    return "D=" + std::to_string(p.d) + " " + p.to_string();
}

std::string tag(const AlgebraicPrototype& a) {
    return "D=" + std::to_string(a.d) + " " + a.to_string();
}

}  // namespace

int main() {
    criterion(
        "spin label agrees with the mod-2 pairing for all D = 1 mod 8 up to 4000",
        60, [](std::string& detail) {
            for (long long d = 17; d <= 4000; d += 8) {
                if (!Discriminant::valid(d)) continue;
                for (const Prototype& p : enumerate_prototypes(Discriminant(d))) {
                    const bool vanishes = pairing_on_imT_mod2(p);
                    const bool formula = ((p.e + p.eps) % 4 + 4) % 4 == 0;
                    const ComponentLabel label = spin_component(p);
                    if (vanishes != formula || label.index != (vanishes ? 2 : 1) ||
                        !label.two_components) {
                        detail = tag(p);
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(
        "iota(T) satisfies T^2 - T - (D-1)/4 and is self-adjoint for all odd D up to 4000",
        60, [](std::string& detail) {
            for (long long d = 5; d <= 4000; d += 4) {
                if (!Discriminant::valid(d)) continue;
                for (const Prototype& p : enumerate_prototypes(Discriminant(d))) {
                    const HomologyRep rep = iota_T(p);
                    const bool minpoly =
                        (rep.T * rep.T - rep.T - Mat4::scalar((d - 1) / 4)).is_zero();
                    const bool adjoint = rep.T.transpose() * rep.J == rep.J * rep.T;
                    if (!minpoly || !adjoint) {
                        detail = tag(p);
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(
        "Galois conjugation is a component-swapping involution for all D up to 4000",
        60, [](std::string& detail) {
            for (long long d = 5; d <= 4000; ++d) {
                if (!Discriminant::valid(d)) continue;
                const Discriminant disc(d);
                for (const AlgebraicPrototype& a : enumerate_algebraic(disc)) {
                    const AlgebraicPrototype c = conjugate(a);
                    try {
                        validate_algebraic(c.w, c.h, c.e, c.eps, disc);
                    } catch (const std::exception&) {
                        detail = tag(a) + " conjugates to an invalid prototype";
                        return false;
                    }
                    if (conjugate(c) != a) {
                        detail = tag(a) + " is not recovered by conjugating twice";
                        return false;
                    }
                    if (disc.two_components() &&
                        spin_component(a).index == spin_component(c).index) {
                        detail = tag(a) + " keeps its component";
                        return false;
                    }
                }
            }
            for (long long d : {17, 41, 73, 89}) {
                const Discriminant disc(d);
                const AlgebraicPrototype a =
                    validate_algebraic((d - 1) / 8, 1, -1, -1, disc);
                const AlgebraicPrototype c = conjugate(a);
                if (c != validate_algebraic((d - 1) / 8, 1, 1, -1, disc) ||
                    spin_component(a).index != 1 || spin_component(c).index != 2) {
                    detail = "switching pair at D=" + std::to_string(d);
                    return false;
                }
            }
            return true;
        });

    criterion(
        "census at D=17: six cusps, three per component, pairing three orbits",
        1, [](std::string& detail) {
            const Discriminant d(17);
            const std::vector<Prototype> ps = enumerate_prototypes(d);
            if (ps.size() != 6) {
                detail = "expected 6 cusps, found " + std::to_string(ps.size());
                return false;
            }
            long long per_label[3] = {0, 0, 0};
            for (const Prototype& p : ps) ++per_label[spin_component(p).index];
            if (per_label[1] != 3 || per_label[2] != 3) {
                detail = "component counts " + std::to_string(per_label[1]) + "/" +
                         std::to_string(per_label[2]);
                return false;
            }
            const std::vector<GaloisOrbit> orbits = galois_orbits(d);
            if (orbits.size() != 3) {
                detail = "expected 3 orbits, found " + std::to_string(orbits.size());
                return false;
            }
            for (const GaloisOrbit& o : orbits) {
                if (o.fixed_point ||
                    o.first_label.index + o.second_label.index != 3) {
                    detail = "orbit at " + o.first.to_string() +
                             " does not pair the two components";
                    return false;
                }
            }
            return true;
        });

    criterion("no prototypes exist for any D = 5 mod 8 up to 4000", 10,
              [](std::string& detail) {
                  for (long long d = 5; d <= 4000; d += 8) {
                      if (!Discriminant::valid(d)) continue;
                      if (!enumerate_prototypes(Discriminant(d)).empty()) {
                          detail = "D=" + std::to_string(d);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(
        "stable fibers for all D up to 1000: node sum, residues, Galois, distinctness",
        120, [](std::string& detail) {
            for (long long d = 5; d <= 1000; ++d) {
                if (!Discriminant::valid(d)) continue;
                const Discriminant disc(d);
                for (const AlgebraicPrototype& a : enumerate_algebraic(disc)) {
                    const StableFiber f = stable_fiber(a);
                    if (!(f.x1.base + f.x3.base == f.s * Rational(-2) &&
                          f.x1.radicand == f.x3.radicand &&
                          f.x1.surd_sign == -f.x3.surd_sign)) {
                        detail = tag(a) + " breaks x1 + x3 = -2s";
                        return false;
                    }
                    if (!residue_identity_check(a, 32, 1e-9)) {
                        detail = tag(a) + " fails the residue identity";
                        return false;
                    }
                    const QuadElem sc = s_param(conjugate(a));
                    const QuadElem cs = f.s.conjugate();
                    if (!(sc == cs || sc == -cs)) {
                        detail = tag(a) + " breaks s(conj) = +-conj(s)";
                        return false;
                    }
                    if (!six_points_distinct(f)) {
                        detail = tag(a) + " has coinciding marked points";
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(
        "lambda identities hold for every prototype of every odd D up to 4000",
        30, [](std::string& detail) {
            for (long long d = 5; d <= 4000; d += 4) {
                if (!Discriminant::valid(d)) continue;
                const Discriminant disc(d);
                const QuadElem T = quad_order_generator(disc);
                for (const Prototype& p : enumerate_prototypes(disc)) {
                    const QuadElem lam = p.lambda();
                    const QuadElem wh2 =
                        QuadElem::from_rational(Rational(2 * p.w * p.h), disc);
                    const QuadElem shift =
                        QuadElem::from_rational(Rational((p.e - 1) / 2), disc);
                    const bool sq = lam * lam == lam * Rational(p.e) + wh2;
                    const bool gen = T == lam - shift;
                    const bool prod = T * lam == wh2 + lam * Rational(p.e + 1, 2);
                    if (!sq || !gen || !prod) {
                        detail = tag(p);
                        return false;
                    }
                }
            }
            return true;
        });

    if (failures == 0) std::printf("all acceptance criteria hold\n");
    return failures;
}
