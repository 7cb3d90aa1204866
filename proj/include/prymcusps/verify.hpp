#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "prymcusps/galois.hpp"
#include "prymcusps/homology.hpp"
#include "prymcusps/prototypes.hpp"
#include "prymcusps/report.hpp"
#include "prymcusps/stablecurve.hpp"

namespace prym {

struct PropertyReport {
    std::string name;
    long long cases = 0;
    bool passed = true;
    std::string first_counterexample;

    void fail(const std::string& witness) {
        if (passed) {
            passed = false;
            first_counterexample = witness;
        }
    }
    void check(bool ok, const std::string& witness) {
        ++cases;
        if (!ok) fail(witness);
    }
};

struct VerifyOptions {
    long long dmax = 1000;
    int residue_samples = 32;
    double residue_tol = 1e-9;
    bool with_residues = true;
};

namespace detail {

using Float100 = boost::multiprecision::cpp_bin_float_100;

inline Float100 to_float100(const QuadElem& x) {
    const Float100 sd = sqrt(Float100(x.discriminant_value()));
    const auto rat = [](const Rational& q) {
        return Float100(numerator(q).str()) / Float100(denominator(q).str());
    };
    return rat(x.rational_part()) + rat(x.surd_coeff()) * sd;
}

inline std::string witness(const Prototype& p) {
    return "D=" + std::to_string(p.d) + " " + p.to_string();
}

inline std::string witness(const AlgebraicPrototype& a) {
    return "D=" + std::to_string(a.d) + " " + a.to_string();
}

}  // namespace detail

/// Sweeps every discriminant up to opts.dmax and checks each structural
/// property across all prototypes found there. Returns one report per
/// property; a report fails on its first counterexample but keeps counting.
inline std::vector<PropertyReport> run_verification(const VerifyOptions& opts) {
    PropertyReport empty_5mod8{"emptiness for D = 5 mod 8"};
    PropertyReport enum_valid{"enumeration is canonical and validated"};
    PropertyReport lambda_ids{"lambda and order-generator identities"};
    PropertyReport type_split{"geometric type trichotomy"};
    PropertyReport cyl_area{"cylinder decomposition and flat area"};
    PropertyReport ratio_irr{"cylinder width ratio is irrational"};
    PropertyReport sign_float{"exact signs agree with 100-digit floats"};
    PropertyReport iota_poly{"iota(T) satisfies its minimal polynomial"};
    PropertyReport iota_adj{"iota(T) is self-adjoint for the pairing"};
    PropertyReport iota_det{"det iota(T) = ((1-D)/4)^2"};
    PropertyReport spin_oracle{"spin label matches the mod-2 pairing"};
    PropertyReport spin_twist{"mod-2 pairing is twist independent"};
    PropertyReport gal_invol{"galois conjugation is an involution"};
    PropertyReport gal_valid{"galois conjugate is a valid prototype"};
    PropertyReport gal_swap{"galois conjugation swaps components"};
    PropertyReport gal_twists{"galois conjugation preserves twist counts"};
    PropertyReport census_bal{"components have equal cusp counts"};
    PropertyReport fiber_sum{"marked points satisfy x1 + x3 = -2s"};
    PropertyReport fiber_prod{"marked points satisfy x1*x3 = (4s^2-1)/3"};
    PropertyReport fiber_distinct{"the six marked points are distinct"};
    PropertyReport fiber_galois{"s of the conjugate is a sign times conj(s)"};
    PropertyReport fiber_partition{"fiber ids agree with pairwise s tests"};
    PropertyReport residue_ok{"cylinder residues solve the node equations"};

    for (long long d = 5; d <= opts.dmax; ++d) {
        if (!Discriminant::valid(d)) continue;
        const Discriminant disc(d);
        const std::vector<Prototype> protos = enumerate_prototypes(disc);
        const std::vector<AlgebraicPrototype> algs = enumerate_algebraic(disc);

        if (d % 8 == 5)
            empty_5mod8.check(protos.empty(), "D=" + std::to_string(d));

        for (size_t i = 0; i < protos.size(); ++i) {
            const Prototype& p = protos[i];
            const std::string w = detail::witness(p);

            try {
                const Prototype q = validate(p.w, p.h, p.t, p.e, p.eps, disc);
                enum_valid.check(q == p, w);
            } catch (const std::exception& ex) {
                enum_valid.check(false, w + ": " + ex.what());
            }
            if (i > 0)
                enum_valid.check(protos[i - 1] < p,
                                 "order " + detail::witness(protos[i - 1]) +
                                     " !< " + w);

            const QuadElem lam = p.lambda();
            lambda_ids.check(lam * lam ==
                                 lam * Rational(p.e) +
                                     QuadElem::from_rational(Rational(2 * p.w * p.h), disc),
                             w);
            if (disc.is_odd()) {
                const QuadElem T = quad_order_generator(disc);
                lambda_ids.check(
                    T == lam - QuadElem::from_rational(Rational((p.e - 1) / 2), disc),
                    w);
                lambda_ids.check(T * lam ==
                                     QuadElem::from_rational(Rational(2 * p.w * p.h), disc) +
                                         lam * Rational(p.e + 1, 2),
                                 w + " (T*lambda)");
            }

            const int sign_w_lam = (QuadElem::from_rational(Rational(p.w), disc) - lam).sign();
            const int sign_w_half =
                (QuadElem::from_rational(Rational(p.w), disc) - lam / Rational(2)).sign();
            type_split.check(sign_w_lam != 0 && sign_w_half > 0, w);
            const GeometricType gt = geometric_type(p);
            if (p.eps == 1)
                type_split.check(gt == GeometricType::APlus && sign_w_lam > 0, w);
            else
                type_split.check(gt == (sign_w_lam > 0 ? GeometricType::AMinus
                                                       : GeometricType::B),
                                 w);

            const CylinderData cd = cylinder_data(p);
            const QuadElem wh = QuadElem::from_rational(Rational(p.w * p.h), disc);
            const QuadElem expected_area =
                p.eps == 1 ? lam * lam + wh * Rational(2)
                           : lam * lam / Rational(2) + wh;
            cyl_area.check(flat_area(p) == expected_area, w);
            cyl_area.check(cd.cylinders[0].width == cd.cylinders[2].width &&
                               cd.cylinders[0].height == cd.cylinders[2].height,
                           w + " (swapped pair)");
            cyl_area.check(cd.r1 == cd.cylinders[0].width &&
                               cd.r2 == cd.cylinders[1].width &&
                               cd.r3 == cd.cylinders[2].width,
                           w + " (residues)");

            const QuadElem ratio = cd.cylinders[1].width / cd.cylinders[0].width;
            ratio_irr.check(!ratio.is_rational(), w);

            for (const QuadElem& x :
                 {lam, QuadElem::from_rational(Rational(p.w), disc) - lam,
                  QuadElem::from_rational(Rational(p.w), disc) - lam / Rational(2),
                  QuadElem::from_rational(Rational(p.h), disc) - lam}) {
                const detail::Float100 f = detail::to_float100(x);
                const int fs = f > 1e-30 ? 1 : (f < -1e-30 ? -1 : 0);
                sign_float.check(x.sign() == fs, w + " at " + x.to_string());
            }

            if (disc.is_odd()) {
                const HomologyRep rep = iota_T(p);
                const Mat4 mp = rep.T * rep.T - rep.T -
                                Mat4::scalar((d - 1) / 4);
                iota_poly.check(mp.is_zero(), w);
                iota_adj.check(rep.T.transpose() * rep.J == rep.J * rep.T, w);
                const long long tr = (1 - d) / 4;
                iota_det.check(rep.T.det() == tr * tr, w);
            }

            if (disc.two_components()) {
                const bool vanishes = pairing_on_imT_mod2(p);
                const ComponentLabel lbl = spin_component(p);
                spin_oracle.check(lbl.two_components, w);
                spin_oracle.check((lbl.index == 2) == vanishes, w);
                spin_oracle.check(vanishes == (((p.e + p.eps) % 4 + 4) % 4 == 0),
                                  w + " (formula)");
            }
        }

        if (disc.is_odd()) {
            for (const AlgebraicPrototype& a : algs) {
                bool first = true;
                bool value = false;
                const long long g = std::gcd(a.w, a.h);
                for (long long t = 0; t < g; ++t) {
                    if (std::gcd(std::gcd(g, t), a.e) != 1) continue;
                    const Prototype p = validate(a.w, a.h, t, a.e, a.eps, disc);
                    const bool v = pairing_on_imT_mod2(p);
                    if (first) {
                        value = v;
                        first = false;
                    } else {
                        spin_twist.check(v == value, detail::witness(p));
                    }
                }
            }
        }

        std::map<int, long long> cusp_count, alg_count;
        for (const Prototype& p : protos) ++cusp_count[spin_component(p).index];
        for (const AlgebraicPrototype& a : algs) ++alg_count[spin_component(a).index];
        if (disc.two_components() && !protos.empty()) {
            census_bal.check(cusp_count[1] == cusp_count[2],
                             "D=" + std::to_string(d) + " cusps " +
                                 std::to_string(cusp_count[1]) + " vs " +
                                 std::to_string(cusp_count[2]));
            census_bal.check(alg_count[1] == alg_count[2],
                             "D=" + std::to_string(d) + " algebraic");
        }

        std::vector<QuadElem> svals;
        for (const AlgebraicPrototype& a : algs) {
            const std::string w = detail::witness(a);

            const AlgebraicPrototype c = conjugate(a);
            gal_invol.check(conjugate(c) == a, w);
            try {
                validate_algebraic(c.w, c.h, c.e, c.eps, Discriminant(c.d));
                gal_valid.check(true, w);
            } catch (const std::exception& ex) {
                gal_valid.check(false, w + ": " + ex.what());
            }
            if (disc.two_components())
                gal_swap.check(spin_component(a).index != spin_component(c).index, w);
            gal_twists.check(twist_count(a) == twist_count(c), w);

            const StableFiber f = stable_fiber(a);
            svals.push_back(f.s);
            fiber_sum.check(f.x1.base + f.x3.base == f.s * Rational(-2) &&
                                f.x1.radicand == f.x3.radicand &&
                                f.x1.surd_sign + f.x3.surd_sign == 0,
                            w);
            const QuadElem four_s2 = f.s * f.s * Rational(4);
            const QuadElem one = QuadElem::from_rational(Rational(1), disc);
            fiber_prod.check(f.s * f.s - f.u == (four_s2 - one) / Rational(3), w);
            fiber_distinct.check(six_points_distinct(f), w);

            const QuadElem sc = s_param(c);
            const QuadElem scc = f.s.conjugate();
            fiber_galois.check(sc == scc || sc == -scc, w);

            if (opts.with_residues)
                residue_ok.check(residue_identity_check(a, opts.residue_samples,
                                                        opts.residue_tol),
                                 w);
        }

        const std::vector<int> ids = fiber_ids(algs);
        for (size_t i = 0; i < algs.size(); ++i)
            for (size_t j = i + 1; j < algs.size(); ++j) {
                const bool same = svals[i] == svals[j] || svals[i] == -svals[j];
                fiber_partition.check(same == (ids[i] == ids[j]),
                                      detail::witness(algs[i]) + " vs " +
                                          detail::witness(algs[j]));
            }
    }

    std::vector<PropertyReport> reports{
        empty_5mod8, enum_valid,  lambda_ids,  type_split,    cyl_area,
        ratio_irr,   sign_float,  iota_poly,   iota_adj,      iota_det,
        spin_oracle, spin_twist,  gal_invol,   gal_valid,     gal_swap,
        gal_twists,  census_bal,  fiber_sum,   fiber_prod,    fiber_distinct,
        fiber_galois, fiber_partition};
    if (opts.with_residues) reports.push_back(residue_ok);
    return reports;
}

inline bool all_passed(const std::vector<PropertyReport>& reports) {
    for (const PropertyReport& r : reports)
        if (!r.passed) return false;
    return true;
}

inline std::string format_reports(const std::vector<PropertyReport>& reports) {
    std::ostringstream out;
    for (const PropertyReport& r : reports) {
        out << (r.passed ? "pass" : "FAIL") << "  " << r.name << "  ("
            << r.cases << " cases)";
        if (!r.passed) out << "  first counterexample: " << r.first_counterexample;
        out << "\n";
    }
    return out.str();
}

}  // namespace prym
