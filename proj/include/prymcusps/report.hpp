#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "prymcusps/galois.hpp"
#include "prymcusps/homology.hpp"
#include "prymcusps/prototypes.hpp"
#include "prymcusps/stablecurve.hpp"

namespace prym {

using json = nlohmann::ordered_json;

/// One row of the enumeration report. Exact data (prototype fields, s_exact,
/// conjugate) round-trips losslessly; s_decimal is display only.
struct ReportRecord {
    long long D = 0;
    long long w = 0, h = 0, t = 0, e = 0;
    int eps = 0;
    std::string type;
    int component = 1;
    std::string s_exact;
    std::string s_decimal;
    long long conj_w = 0, conj_h = 0, conj_e = 0;
    int conj_eps = 0;
    int fiber = 0;

    friend bool operator==(const ReportRecord& a, const ReportRecord& b) {
        return a.D == b.D && a.w == b.w && a.h == b.h && a.t == b.t && a.e == b.e &&
               a.eps == b.eps && a.type == b.type && a.component == b.component &&
               a.s_exact == b.s_exact && a.conj_w == b.conj_w &&
               a.conj_h == b.conj_h && a.conj_e == b.conj_e &&
               a.conj_eps == b.conj_eps && a.fiber == b.fiber;
    }
};

/// Decimal rendering of x = a + b*sqrt(D) with `decimals` digits after the
/// point. The midpoint is first enclosed two digits tighter, so the printed
/// digits are correct up to rounding of the last place.
inline std::string quad_decimal(const QuadElem& x, int decimals) {
    return decimal_string(x.enclosure(decimals + 2).mid(), decimals);
}

/// Fiber ids for the algebraic prototypes of one discriminant: 1-based,
/// assigned in canonical order of first appearance of each stable fiber.
inline std::vector<int> fiber_ids(const std::vector<AlgebraicPrototype>& algs) {
    std::vector<int> ids(algs.size(), 0);
    std::vector<QuadElem> reps;
    for (size_t i = 0; i < algs.size(); ++i) {
        const QuadElem s = s_param(algs[i]);
        int id = 0;
        for (size_t j = 0; j < reps.size(); ++j)
            if (reps[j] == s || reps[j] == -s) id = static_cast<int>(j) + 1;
        if (id == 0) {
            reps.push_back(s);
            id = static_cast<int>(reps.size());
        }
        ids[i] = id;
    }
    return ids;
}

inline std::vector<ReportRecord> build_records(Discriminant d, int decimals = 6) {
    const std::vector<AlgebraicPrototype> algs = enumerate_algebraic(d);
    const std::vector<int> fibers = fiber_ids(algs);
    std::vector<ReportRecord> out;
    for (const Prototype& p : enumerate_prototypes(d)) {
        const AlgebraicPrototype a = algebraic(p);
        size_t ai = 0;
        while (!(algs[ai] == a)) ++ai;
        const AlgebraicPrototype c = conjugate(a);
        const QuadElem s = s_param(a);
        ReportRecord r;
        r.D = p.d;
        r.w = p.w;
        r.h = p.h;
        r.t = p.t;
        r.e = p.e;
        r.eps = p.eps;
        r.type = to_string(geometric_type(p));
        r.component = spin_component(p).index;
        r.s_exact = s.to_string();
        r.s_decimal = quad_decimal(s, decimals);
        r.conj_w = c.w;
        r.conj_h = c.h;
        r.conj_e = c.e;
        r.conj_eps = c.eps;
        r.fiber = fibers[ai];
        out.push_back(std::move(r));
    }
    return out;
}

inline constexpr const char* kCsvHeader =
    "D,w,h,t,e,eps,type,component,s_exact,s_decimal,conj_w,conj_h,conj_e,conj_eps";

inline std::string to_csv(const std::vector<ReportRecord>& records) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const ReportRecord& r : records) {
        out << r.D << ',' << r.w << ',' << r.h << ',' << r.t << ',' << r.e << ','
            << r.eps << ',' << r.type << ',' << r.component << ',' << r.s_exact
            << ',' << r.s_decimal << ',' << r.conj_w << ',' << r.conj_h << ','
            << r.conj_e << ',' << r.conj_eps << "\n";
    }
    return out.str();
}

inline json record_to_json(const ReportRecord& r) {
    json j;
    j["D"] = r.D;
    j["w"] = r.w;
    j["h"] = r.h;
    j["t"] = r.t;
    j["e"] = r.e;
    j["eps"] = r.eps;
    j["type"] = r.type;
    j["component"] = r.component;
    j["s_exact"] = r.s_exact;
    j["s_decimal"] = r.s_decimal;
    j["conjugate"] = {{"w", r.conj_w}, {"h", r.conj_h}, {"e", r.conj_e},
                      {"eps", r.conj_eps}};
    j["fiber"] = r.fiber;
    return j;
}

inline json records_to_json(const std::vector<ReportRecord>& records) {
    json arr = json::array();
    for (const ReportRecord& r : records) arr.push_back(record_to_json(r));
    return arr;
}

inline ReportRecord record_from_json(const json& j) {
    ReportRecord r;
    r.D = j.at("D").get<long long>();
    r.w = j.at("w").get<long long>();
    r.h = j.at("h").get<long long>();
    r.t = j.at("t").get<long long>();
    r.e = j.at("e").get<long long>();
    r.eps = j.at("eps").get<int>();
    r.type = j.at("type").get<std::string>();
    r.component = j.at("component").get<int>();
    r.s_exact = j.at("s_exact").get<std::string>();
    r.s_decimal = j.at("s_decimal").get<std::string>();
    r.conj_w = j.at("conjugate").at("w").get<long long>();
    r.conj_h = j.at("conjugate").at("h").get<long long>();
    r.conj_e = j.at("conjugate").at("e").get<long long>();
    r.conj_eps = j.at("conjugate").at("eps").get<int>();
    r.fiber = j.at("fiber").get<int>();
    return r;
}

/// Parses the "a + b*sqrt(D)" form produced by QuadElem::to_string.
inline QuadElem parse_quad_elem(const std::string& text, Discriminant d) {
    const auto fail = [&] {
        throw std::invalid_argument("parse_quad_elem: cannot parse '" + text + "'");
    };
    const size_t star = text.find("*sqrt(");
    if (star == std::string::npos) fail();
    // split off "<a> {+|-} <b>" before "*sqrt(D)"
    size_t op = std::string::npos;
    for (size_t i = 1; i < star; ++i)
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] == ' ') op = i;
    if (op == std::string::npos) fail();
    const std::string a_str = text.substr(0, op - 1);
    std::string b_str = text.substr(op + 2, star - op - 2);
    const Rational a(a_str);
    Rational b(b_str);
    if (text[op] == '-') b = -b;
    const size_t close = text.find(')', star);
    if (close == std::string::npos) fail();
    const long long dd = std::stoll(text.substr(star + 6, close - star - 6));
    if (dd != d.value())
        throw DiscriminantMismatch("parse_quad_elem: expected sqrt(" +
                                   std::to_string(d.value()) + "), got sqrt(" +
                                   std::to_string(dd) + ")");
    return {a, b, d};
}

/// Cusp counts per component, with and without the twist parameter.
struct ComponentCensus {
    long long D = 0;
    bool two_components = false;
    long long cusps[2] = {0, 0};       // indexed by component label - 1
    long long algebraic[2] = {0, 0};
};

inline ComponentCensus component_census(Discriminant d) {
    ComponentCensus census;
    census.D = d.value();
    census.two_components = d.two_components();
    for (const Prototype& p : enumerate_prototypes(d))
        ++census.cusps[spin_component(p).index - 1];
    for (const AlgebraicPrototype& a : enumerate_algebraic(d))
        ++census.algebraic[spin_component(a).index - 1];
    return census;
}

}  // namespace prym
