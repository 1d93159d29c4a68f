#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k0/spectrum.hpp"

using namespace k0;

TEST_CASE("component decomposition") {
    ConcreteRing r = parse_ring("Z/12");
    auto d = component_decomposition(r);
    REQUIRE(d.size() == 2);
    // Primitive idempotents of Z/12 are 9 and 4 (CRT: (1,0) and (0,1)).
    CHECK(element_to_integer(r, d.components[0]) == 9);
    CHECK(element_to_integer(r, d.components[1]) == 4);

    RingElement sum = ring_add(r, d.components[0], d.components[1]);
    CHECK(sum == ring_one(r));
    CHECK(ring_mul(r, d.components[0], d.components[1]) == ring_zero(r));

    auto dq = component_decomposition(parse_ring("O(-20)"));
    REQUIRE(dq.size() == 1);
}

TEST_CASE("h0 arithmetic is pointwise") {
    H0Element f{{2, -1}}, g{{1, 1}};
    CHECK(h0_add(f, g) == H0Element{{3, 0}});
    CHECK(h0_mul(f, g) == H0Element{{2, -1}});
    CHECK(h0_neg(H0Element{{0, 5}}) == H0Element{{0, -5}});
    CHECK_THROWS(h0_add(f, H0Element{{1}}));
}

TEST_CASE("h0 units") {
    CHECK(h0_units(parse_ring("Z/12")).size() == 4);
    CHECK(h0_units(parse_ring("Z/30")).size() == 8);
    CHECK(h0_units(parse_ring("O(-20)")).size() == 2);
    for (const auto& u : h0_units(parse_ring("Z/30"))) CHECK(u.is_unit());
}

TEST_CASE("phi_e on Z/12") {
    ConcreteRing r = parse_ring("Z/12");
    CHECK(phi_e(r, ring_from_integer(r, 0)) == H0Element{{1, 1}});
    CHECK(phi_e(r, ring_from_integer(r, 1)) == H0Element{{-1, -1}});
    // e = 9 is (1,0) under CRT: nonzero on the Z/4 component.
    CHECK(phi_e(r, ring_from_integer(r, 9)) == H0Element{{-1, 1}});
    CHECK(phi_e(r, ring_from_integer(r, 4)) == H0Element{{1, -1}});
    CHECK_THROWS(phi_e(r, ring_from_integer(r, 2)));
}

TEST_CASE("phi_e = -phi_{1-e} and squares to 1") {
    for (const char* spec : {"Z/12", "Z/30", "O(-20)"}) {
        ConcreteRing r = parse_ring(spec);
        for (const auto& e : idempotents(r)) {
            H0Element u = phi_e(r, e);
            CHECK(u.is_unit());
            CHECK(h0_mul(u, u) == h0_constant(r, 1));
            CHECK(phi_e(r, ring_sub(r, ring_one(r), e)) == h0_neg(u));
        }
    }
}

TEST_CASE("H0 is reduced and contains Z") {
    ConcreteRing r = parse_ring("Z/30");
    // f*f = 0 => f = 0, pointwise
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b) {
            H0Element f{{a, b, 0}};
            if (h0_mul(f, f) == h0_constant(r, 0)) CHECK(f == h0_constant(r, 0));
        }
    // characteristic zero: constants stay distinct
    for (i64 n = -10; n <= 10; ++n)
        for (i64 m = n + 1; m <= 10; ++m)
            CHECK(!(h0_constant(r, n) == h0_constant(r, m)));
}
