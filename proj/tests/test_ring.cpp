#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "k0/ring.hpp"

using namespace k0;

TEST_CASE("parse_ring splits composite moduli by CRT") {
    ConcreteRing r = parse_ring("Z/12");
    REQUIRE(r.kind == RingKind::FiniteProduct);
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].modulus == 4);
    CHECK(r.factors[1].modulus == 3);
    CHECK(r.total_modulus() == 12);

    ConcreteRing r2 = parse_ring("Z/4 x Z/3");
    CHECK(r == r2);
}

TEST_CASE("parse_ring quadratic orders") {
    ConcreteRing r = parse_ring("O(-20)");
    CHECK(r.kind == RingKind::QuadOrder);
    CHECK(r.discriminant == -20);
    CHECK(r.omega_trace() == 0);
    CHECK(r.omega_norm() == 5);

    ConcreteRing s = parse_ring("O(-23) loc {2, 3}");
    CHECK(s.kind == RingKind::SemilocalQuadOrder);
    CHECK(s.localized_primes == std::vector<i64>{2, 3});

    CHECK_THROWS(parse_ring("O(-12)"));  // non-fundamental
    CHECK_THROWS(parse_ring("O(5)"));
    CHECK_THROWS(parse_ring("O(-20) loc {4}"));
    CHECK_THROWS(parse_ring("Z/1"));
    CHECK_THROWS(parse_ring("garbage"));
}

TEST_CASE("canonicalization is idempotent") {
    for (const char* spec : {"Z/12", "Z/30", "Z/7", "Z/8 x Z/9", "O(-4)",
                             "O(-20)", "O(-20) loc {2,3}"}) {
        ConcreteRing r = parse_ring(spec);
        CHECK(parse_ring(render_ring(r)) == r);
    }
}

TEST_CASE("element arithmetic in finite products") {
    ConcreteRing r = parse_ring("Z/4 x Z/3");
    RingElement a = ring_from_integer(r, 7);   // (3 mod 4, 1 mod 3)
    RingElement b = ring_from_integer(r, 11);
    RingElement p = ring_mul(r, a, b);
    CHECK(element_to_integer(r, p) == 77 % 12);
    CHECK(element_to_integer(r, ring_add(r, a, b)) == 18 % 12);
    CHECK(element_to_integer(r, ring_neg(r, a)) == 5);
}

TEST_CASE("element arithmetic in quadratic orders") {
    // Gaussian integers: omega = i
    ConcreteRing g = parse_ring("O(-4)");
    RingElement i = quad_element(Rational(0), Rational(1));
    RingElement sq = ring_mul(g, i, i);
    CHECK(sq == quad_element(Rational(-1), Rational(0)));

    // Z[sqrt(-5)]
    ConcreteRing o = parse_ring("O(-20)");
    RingElement u = quad_element(Rational(1), Rational(1));
    RingElement v = quad_element(Rational(1), Rational(-1));
    CHECK(ring_mul(o, u, v) == quad_element(Rational(6), Rational(0)));

    // omega of O(-23): omega^2 = omega - 6
    ConcreteRing w = parse_ring("O(-23)");
    RingElement om = quad_element(Rational(0), Rational(1));
    CHECK(ring_mul(w, om, om) == quad_element(Rational(-6), Rational(1)));
}

TEST_CASE("idempotents by brute force oracle") {
    for (i64 n : {12, 30, 7, 16}) {
        ConcreteRing r = parse_ring("Z/" + std::to_string(n));
        std::set<i64> expected;
        for (i64 e = 0; e < n; ++e)
            if (e * e % n == e) expected.insert(e);
        std::set<i64> got;
        for (const auto& e : idempotents(r)) {
            CHECK(is_idempotent(r, e));
            got.insert(element_to_integer(r, e));
        }
        CHECK(got == expected);
    }
    CHECK(idempotents(parse_ring("Z/12")).size() == 4);
    CHECK(idempotents(parse_ring("Z/30")).size() == 8);
    CHECK(idempotents(parse_ring("O(-20)")).size() == 2);
}

TEST_CASE("idempotents closed under complement and product") {
    ConcreteRing r = parse_ring("Z/30");
    auto idems = idempotents(r);
    RingElement one = ring_one(r);
    for (const auto& e : idems) {
        RingElement comp = ring_sub(r, one, e);
        CHECK(is_idempotent(r, comp));
        CHECK(ring_mul(r, e, comp) == ring_zero(r));
        for (const auto& f : idems) CHECK(is_idempotent(r, ring_mul(r, e, f)));
    }
}

TEST_CASE("morphisms: quotient, diagonal, CRT") {
    RingMorphism quot = parse_morphism("quot: Z/4 -> Z/2");
    CHECK(element_to_integer(quot.target, quot.apply(ring_from_integer(quot.source, 3))) == 1);

    RingMorphism diag = parse_morphism("diag: Z/2 -> Z/2 x Z/2");
    RingElement img = diag.apply(ring_from_integer(diag.source, 1));
    CHECK(img.residues == std::vector<i64>{1, 1});

    RingMorphism crt = parse_morphism("crt: Z/12 -> Z/4 x Z/3");
    CHECK(crt.is_identity());
    RingElement x = ring_from_integer(crt.source, 7);
    CHECK(element_to_integer(crt.target, crt.apply(x)) == 7);
}

TEST_CASE("morphism laws hold exhaustively on small rings") {
    for (const char* spec : {"quot: Z/8 -> Z/4", "diag: Z/6 -> Z/6 x Z/6",
                             "id: Z/30 -> Z/30"}) {
        CHECK_NOTHROW(parse_morphism(spec));  // validate_morphism runs inside
    }
    // Incompatible moduli rejected.
    CHECK_THROWS(parse_morphism("quot: Z/2 -> Z/4"));
    CHECK_THROWS(parse_morphism("quot: Z/9 -> Z/2"));
}

TEST_CASE("morphism composition") {
    RingMorphism f = parse_morphism("diag: Z/4 -> Z/4 x Z/4");
    RingMorphism g = parse_morphism("map[0,1]: Z/4 x Z/4 -> Z/2 x Z/4");
    RingMorphism h = compose(g, f);
    validate_morphism(h);
    RingElement x = ring_from_integer(h.source, 3);
    CHECK(h.apply(x).residues == std::vector<i64>{1, 3});
}
