#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "prymcusps/galois.hpp"
#include "prymcusps/prototypes.hpp"
#include "prymcusps/report.hpp"
#include "prymcusps/stablecurve.hpp"
#include "prymcusps/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerifyFailed = 2;

prym::Discriminant parse_discriminant(long long d) {
    std::string why;
    if (!prym::Discriminant::valid(d, &why)) throw CLI::ValidationError("D", why);
    return prym::Discriminant(d);
}

void print_table(const std::vector<prym::ReportRecord>& records) {
    std::printf("%4s %4s %4s %4s %4s %4s  %-4s %-9s %-28s %-12s %s\n", "D", "w",
                "h", "t", "e", "eps", "type", "component", "s_exact", "s_decimal",
                "conjugate");
    for (const auto& r : records)
        std::printf("%4lld %4lld %4lld %4lld %4lld %4d  %-4s %-9d %-28s %-12s "
                    "[%lld,%lld,%lld,%+d]\n",
                    r.D, r.w, r.h, r.t, r.e, r.eps, r.type.c_str(), r.component,
                    r.s_exact.c_str(), r.s_decimal.c_str(), r.conj_w, r.conj_h,
                    r.conj_e, r.conj_eps);
}

int cmd_enumerate(long long d_arg, const std::string& format) {
    const prym::Discriminant d = parse_discriminant(d_arg);
    const auto records = prym::build_records(d);
    if (format == "json")
        std::cout << prym::records_to_json(records).dump(2) << "\n";
    else if (format == "csv")
        std::cout << prym::to_csv(records);
    else
        print_table(records);
    return kExitOk;
}

int cmd_components(long long d_arg) {
    const prym::Discriminant d = parse_discriminant(d_arg);
    const prym::ComponentCensus census = prym::component_census(d);
    if (census.two_components) {
        for (int i = 0; i < 2; ++i)
            std::cout << "component " << (i + 1) << ": " << census.cusps[i]
                      << " cusps (" << census.algebraic[i]
                      << " up to twist)\n";
    } else {
        std::cout << "component 1: " << census.cusps[0] << " cusps ("
                  << census.algebraic[0] << " up to twist)\n";
    }
    return kExitOk;
}

int cmd_galois(long long d_arg) {
    const prym::Discriminant d = parse_discriminant(d_arg);
    for (const prym::GaloisOrbit& orbit : prym::galois_orbits(d)) {
        if (orbit.fixed_point) {
            std::cout << orbit.first.to_string() << " fixed";
        } else {
            std::cout << orbit.first.to_string() << " <-> "
                      << orbit.second.to_string();
        }
        if (d.two_components())
            std::cout << "  components (" << orbit.first_label.index << ","
                      << orbit.second_label.index << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_stable(long long d_arg, int precision) {
    const prym::Discriminant d = parse_discriminant(d_arg);
    for (const prym::AlgebraicPrototype& a : prym::enumerate_algebraic(d)) {
        const prym::StableFiber f = prym::stable_fiber(a);
        const prym::MarkedPoints mp = prym::marked_points(a, precision);
        std::cout << a.to_string() << "\n";
        std::cout << "  s = " << f.s.to_string() << " = "
                  << prym::quad_decimal(f.s, precision) << "\n";
        std::cout << "  u = " << f.u.to_string() << "\n";
        if (mp.real_points) {
            std::cout << "  x1 = " << prym::decimal_string(mp.x1_re, precision)
                      << "  x3 = " << prym::decimal_string(mp.x3_re, precision)
                      << "\n";
        } else {
            const prym::Rational im_abs =
                mp.x1_im < 0 ? prym::Rational(-mp.x1_im) : mp.x1_im;
            std::cout << "  x1 = " << prym::decimal_string(mp.x1_re, precision)
                      << (mp.x1_im < 0 ? " - " : " + ")
                      << prym::decimal_string(im_abs, precision)
                      << "i  x3 = conj(x1)\n";
        }
        std::cout << "  nodes glue x1~-x3, 1~-1, x3~-x1 with residues ("
                  << f.r1.to_string() << ", " << f.r2.to_string() << ", "
                  << f.r3.to_string() << ")\n";
    }
    return kExitOk;
}

int cmd_verify(long long dmax, int samples, double tol, bool skip_residues) {
    prym::VerifyOptions opts;
    opts.dmax = dmax;
    opts.residue_samples = samples;
    opts.residue_tol = tol;
    opts.with_residues = !skip_residues;
    const auto reports = prym::run_verification(opts);
    std::cout << prym::format_reports(reports);
    if (!prym::all_passed(reports)) return kExitVerifyFailed;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cusp prototypes of genus-3 Prym-Teichmueller curves"};
    app.require_subcommand(1);

    long long d_arg = 0;
    std::string format = "table";
    int precision = 12;
    long long dmax = 1000;
    int samples = 32;
    double tol = 1e-9;
    bool as_json = false;
    bool as_csv = false;
    bool skip_residues = false;

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list all cusp prototypes of one discriminant");
    enumerate->add_option("D", d_arg, "discriminant")->required();
    enumerate->add_option("--format", format, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    enumerate->add_flag("--json", as_json, "shorthand for --format json");
    enumerate->add_flag("--csv", as_csv, "shorthand for --format csv");

    CLI::App* components = app.add_subcommand(
        "components", "cusp counts per connected component");
    components->add_option("D", d_arg, "discriminant")->required();

    CLI::App* galois = app.add_subcommand(
        "galois", "pair the cusps under Galois conjugation");
    galois->add_option("D", d_arg, "discriminant")->required();

    CLI::App* stable = app.add_subcommand(
        "stable", "stable curve data for each cusp");
    stable->add_option("D", d_arg, "discriminant")->required();
    stable->add_option("--prec", precision, "decimal digits (at least 10)")
        ->check(CLI::Range(10, 200));

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check structural properties for all D up to a bound");
    verify->add_option("--dmax", dmax, "largest discriminant to sweep")
        ->check(CLI::PositiveNumber);
    verify->add_option("--samples", samples, "sample count for residue checks")
        ->check(CLI::Range(2, 4096));
    verify->add_option("--tol", tol, "tolerance for residue checks")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--skip-residues", skip_residues,
                     "skip the floating-point residue checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) {
            if (as_json) format = "json";
            if (as_csv) format = "csv";
            return cmd_enumerate(d_arg, format);
        }
        if (*components) return cmd_components(d_arg);
        if (*galois) return cmd_galois(d_arg);
        if (*stable) return cmd_stable(d_arg, precision);
        if (*verify) return cmd_verify(dmax, samples, tol, skip_residues);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
