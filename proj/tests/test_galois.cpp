#include <catch2/catch_amalgamated.hpp>

#include "prymcusps/galois.hpp"

using namespace prym;

TEST_CASE("conjugation of the six cusps of the smallest switching discriminant") {
    const Discriminant d(17);
    const auto conj = [&](long long w, long long h, long long e, int eps) {
        return conjugate(validate_algebraic(w, h, e, eps, d)).to_string();
    };
    CHECK(conj(1, 1, -3, 1) == "[1,1,-3,-1]");
    CHECK(conj(1, 1, -3, -1) == "[1,1,-3,+1]");
    CHECK(conj(1, 2, -1, -1) == "[2,1,-1,+1]");
    CHECK(conj(2, 1, -1, 1) == "[1,2,-1,-1]");
    CHECK(conj(2, 1, -1, -1) == "[2,1,1,-1]");
    CHECK(conj(2, 1, 1, -1) == "[2,1,-1,-1]");
}

TEST_CASE("conjugation is an involution onto valid prototypes") {
    for (long long d = 5; d <= 500; ++d) {
        if (!Discriminant::valid(d)) continue;
        const Discriminant disc(d);
        for (const AlgebraicPrototype& a : enumerate_algebraic(disc)) {
            CAPTURE(d, a.to_string());
            const AlgebraicPrototype c = conjugate(a);
            CHECK_NOTHROW(validate_algebraic(c.w, c.h, c.e, c.eps, disc));
            CHECK(conjugate(c) == a);
            CHECK(twist_count(c) == twist_count(a));
        }
    }
}

TEST_CASE("conjugation swaps the two components") {
    for (long long d = 17; d <= 500; d += 8) {
        if (!Discriminant::valid(d)) continue;
        for (const AlgebraicPrototype& a : enumerate_algebraic(Discriminant(d))) {
            CAPTURE(d, a.to_string());
            CHECK(spin_component(a).index != spin_component(conjugate(a)).index);
        }
    }
}

TEST_CASE("orbit pairing for the smallest switching discriminant") {
    const std::vector<GaloisOrbit> orbits = galois_orbits(Discriminant(17));
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].first.to_string() == "[1,1,-3,+1]");
    CHECK(orbits[0].second.to_string() == "[1,1,-3,-1]");
    CHECK(orbits[1].first.to_string() == "[1,2,-1,-1]");
    CHECK(orbits[1].second.to_string() == "[2,1,-1,+1]");
    CHECK(orbits[2].first.to_string() == "[2,1,-1,-1]");
    CHECK(orbits[2].second.to_string() == "[2,1,1,-1]");
    for (const GaloisOrbit& o : orbits) {
        CHECK_FALSE(o.fixed_point);
        CHECK(o.first_label.index + o.second_label.index == 3);
    }
}

TEST_CASE("orbits are empty when there are no cusps") {
    CHECK(galois_orbits(Discriminant(13)).empty());
    CHECK(galois_orbits(Discriminant(5)).empty());
}

TEST_CASE("a fixed cusp at the smallest even discriminant") {
    const std::vector<GaloisOrbit> orbits = galois_orbits(Discriminant(8));
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].fixed_point);
    CHECK(orbits[0].first.to_string() == "[1,1,0,-1]");
    CHECK(orbits[0].second == orbits[0].first);
}

TEST_CASE("fixed cusps occur only at even discriminants") {
    for (long long d = 5; d <= 500; ++d) {
        if (!Discriminant::valid(d)) continue;
        for (const GaloisOrbit& o : galois_orbits(Discriminant(d))) {
            if (o.fixed_point) {
                CAPTURE(d, o.first.to_string());
                CHECK(d % 2 == 0);
                CHECK(o.first.e == 0);
            }
        }
    }
}

TEST_CASE("orbits cover every cusp exactly once") {
    for (long long d : {17, 24, 33, 40, 41, 73, 88, 89, 97}) {
        const std::vector<AlgebraicPrototype> algs = enumerate_algebraic(Discriminant(d));
        const std::vector<GaloisOrbit> orbits = galois_orbits(Discriminant(d));
        size_t covered = 0;
        for (const GaloisOrbit& o : orbits) covered += o.fixed_point ? 1 : 2;
        CHECK(covered == algs.size());
    }
}

TEST_CASE("the label-switching pair exists at every switching discriminant") {
    for (long long d : {17, 41, 73, 89}) {
        const Discriminant disc(d);
        const AlgebraicPrototype a =
            validate_algebraic((d - 1) / 8, 1, -1, -1, disc);
        const AlgebraicPrototype c = conjugate(a);
        CHECK(c == validate_algebraic((d - 1) / 8, 1, 1, -1, disc));
        CHECK(spin_component(a).index == 1);
        CHECK(spin_component(c).index == 2);
    }
}
