#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "k0/k0.hpp"

using namespace k0;

static const char* standard_rings[] = {"Z/12", "Z/30", "Z/7",  "O(-4)",
                                       "O(-20)", "O(-23)", "O(-20) loc {2,3}"};

TEST_CASE("shapes") {
    CHECK(render_k0_shape(k0_of_ring(parse_ring("Z/12"))) == "Z^2");
    CHECK(render_k0_shape(k0_of_ring(parse_ring("Z/7"))) == "Z^1");
    CHECK(render_k0_shape(k0_of_ring(parse_ring("O(-20)"))) == "Z (+) Cl(-20)");
    CHECK(render_k0_shape(k0_of_ring(parse_ring("O(-20) loc {2,3}"))) == "Z^1");
}

TEST_CASE("ring axioms on sampled elements") {
    for (const char* spec : {"Z/12", "O(-20)", "O(-23)"}) {
        K0Ring k = k0_of_ring(parse_ring(spec));
        std::vector<K0Elem> sample;
        for (i64 n = -3; n <= 3; ++n) sample.push_back(k0_from_integer(k, n));
        if (k.shape == K0Shape::ZPlusCl)
            for (std::size_t c = 0; c < k.cl->group.size(); ++c)
                for (i64 n = -2; n <= 2; ++n) {
                    K0Elem x;
                    x.r = n;
                    x.cls = c;
                    sample.push_back(x);
                }
        for (const auto& x : sample)
            for (const auto& y : sample) {
                CHECK(k0_add(k, x, y) == k0_add(k, y, x));
                CHECK(k0_mul(k, x, y) == k0_mul(k, y, x));
                CHECK(k0_mul(k, x, k0_one(k)) == x);
                CHECK(k0_add(k, x, k0_neg(k, x)) == k0_zero(k));
                for (const auto& z : sample) {
                    CHECK(k0_add(k, k0_add(k, x, y), z) == k0_add(k, x, k0_add(k, y, z)));
                    CHECK(k0_mul(k, k0_mul(k, x, y), z) == k0_mul(k, x, k0_mul(k, y, z)));
                    CHECK(k0_mul(k, x, k0_add(k, y, z)) ==
                          k0_add(k, k0_mul(k, x, y), k0_mul(k, x, z)));
                }
            }
    }
}

TEST_CASE("class map turns (+) into + and (x) into *") {
    ConcreteRing o = parse_ring("O(-23)");
    K0Ring k = k0_of_ring(o);
    ProjModule m = module_steinitz(o, 1, {2, 1, 3});
    ProjModule n = module_steinitz(o, 2, {2, -1, 3});
    CHECK(k0_class(k, direct_sum(o, m, n)) == k0_add(k, k0_class(k, m), k0_class(k, n)));
    CHECK(k0_class(k, tensor(o, m, n)) == k0_mul(k, k0_class(k, m), k0_class(k, n)));
    CHECK(k0_class(k, free_module(o, 1)) == k0_one(k));
}

TEST_CASE("rank map to H0 and its section") {
    for (const char* spec : standard_rings) {
        ConcreteRing r = parse_ring(spec);
        K0Ring k = k0_of_ring(r);
        for (const auto& u : h0_units(r))
            CHECK(k0_to_h0(k, h0_section(k, u)) == u);
        CHECK(k0_to_h0(k, k0_one(k)) == h0_constant(r, 1));
    }
}

TEST_CASE("nilradical and reduction") {
    CHECK(k0_nilradical(k0_of_ring(parse_ring("Z/12"))).size() == 1);
    CHECK(k0_nilradical(k0_of_ring(parse_ring("O(-4)"))).size() == 1);
    CHECK(k0_nilradical(k0_of_ring(parse_ring("O(-20)"))).size() == 2);
    CHECK(k0_nilradical(k0_of_ring(parse_ring("O(-23)"))).size() == 3);
    for (const char* spec : standard_rings) {
        K0RedReport rep = k0_red_check(k0_of_ring(parse_ring(spec)));
        CHECK(rep.reduced_iso_h0);
    }
}

TEST_CASE("unit groups") {
    CHECK(k0_units(k0_of_ring(parse_ring("Z/30"))).size() == 8);
    CHECK(k0_units(k0_of_ring(parse_ring("O(-20)"))).size() == 4);
    CHECK(k0_units(k0_of_ring(parse_ring("O(-23)"))).size() == 6);
    K0Ring k = k0_of_ring(parse_ring("O(-20)"));
    for (const auto& u : k0_units(k)) CHECK(k0_is_unit(k, u));
    CHECK(!k0_is_unit(k, k0_from_integer(k, 2)));
}

TEST_CASE("f, g, h and the split sequence") {
    FghReport rep = maps_fgh(parse_ring("O(-20)"));
    CHECK(rep.all());
    CHECK(rep.units_order == 4);
    CHECK(rep.pic_order == 2);
    CHECK(rep.b_order == 2);
    CHECK(rep.unit_structure == std::vector<i64>{2, 2});

    FghReport z30 = maps_fgh(parse_ring("Z/30"));
    CHECK(z30.all());
    CHECK(z30.units_order == 8);
    CHECK(z30.pic_order == 1);
    CHECK(z30.unit_structure == std::vector<i64>{2, 2, 2});

    for (const char* spec : standard_rings) CHECK(maps_fgh(parse_ring(spec)).all());
}

TEST_CASE("g of h chases the right idempotent") {
    ConcreteRing r = parse_ring("Z/12");
    K0Ring k = k0_of_ring(r);
    RingElement e = ring_from_integer(r, 9);  // (1,0) under CRT
    K0Elem u = map_h(k, e);
    CHECK(u.coords == std::vector<i64>{-1, 1});
    CHECK(map_g(k, u) == e);
    CHECK(map_h(k, ring_zero(r)) == k0_one(k));
    CHECK(map_g(k, k0_one(k)) == ring_zero(r));
}

TEST_CASE("units of K0 surject onto H0 units") {
    for (const char* spec : standard_rings) {
        ConcreteRing r = parse_ring(spec);
        K0Ring k = k0_of_ring(r);
        std::set<std::vector<i64>> image;
        for (const auto& u : k0_units(k)) image.insert(k0_to_h0(k, u).values);
        CHECK(image.size() == h0_units(r).size());
    }
}

TEST_CASE("B(R) matches idempotents of K0(R)") {
    for (const char* spec : standard_rings) {
        BK0Report rep = b_of_k0(parse_ring(spec));
        CHECK(rep.bijective);
        CHECK(rep.additive);
    }
}

TEST_CASE("integers embed: constants pairwise distinct") {
    for (const char* spec : standard_rings) {
        K0Ring k = k0_of_ring(parse_ring(spec));
        for (i64 n = -20; n <= 20; ++n)
            for (i64 m = n + 1; m <= 20; ++m)
                CHECK(!(k0_from_integer(k, n) == k0_from_integer(k, m)));
    }
    // the zero ring (empty product) has K0 = 0
    ConcreteRing zero;
    K0Ring kz = k0_of_ring(zero);
    CHECK(k0_zero(kz) == k0_one(kz));
}

TEST_CASE("functoriality") {
    RingMorphism f = parse_morphism("diag: Z/4 -> Z/4 x Z/4");
    RingMorphism g = parse_morphism("map[0,1]: Z/4 x Z/4 -> Z/2 x Z/4");
    K0Map kf = k0_map(f), kg = k0_map(g);
    K0Map kgf = k0_map(compose(g, f));
    CHECK(kgf.assignment == k0_compose(kg, kf).assignment);
    K0Elem x;
    x.coords = {5};
    CHECK(kgf.apply(x) == kg.apply(kf.apply(x)));
    K0Map kid = k0_map(identity_morphism(parse_ring("Z/30")));
    K0Elem y;
    y.coords = {1, 2, 3};
    CHECK(kid.apply(y) == y);
}

TEST_CASE("idempotent lifting at both levels") {
    LiftReport quot = lifts_idempotents(parse_morphism("quot: Z/4 -> Z/2"));
    CHECK(quot.ring_level);
    CHECK(quot.k0_level);
    LiftReport diag = lifts_idempotents(parse_morphism("diag: Z/2 -> Z/2 x Z/2"));
    CHECK(!diag.ring_level);
    CHECK(!diag.k0_level);
    CHECK(!diag.missing.empty());
    CHECK(lifts_idempotents(parse_morphism("id: Z/30 -> Z/30")).ring_level);
}

TEST_CASE("surjectivity of K0 under lifting") {
    SurjReport s1 = k0_surjectivity_check(parse_morphism("quot: Z/4 -> Z/2"));
    CHECK(s1.preconditions);
    CHECK(s1.surjective);
    SurjReport s2 = k0_surjectivity_check(parse_morphism("crt: Z/12 -> Z/4 x Z/3"));
    CHECK(s2.surjective);
    SurjReport s3 = k0_surjectivity_check(parse_morphism("diag: Z/2 -> Z/2 x Z/2"));
    CHECK(!s3.preconditions);
    CHECK(!s3.surjective);
}

TEST_CASE("Pic and K0 survive killing a nilpotent ideal") {
    for (i64 p : {2, 3, 5}) {
        // R = Z/p^2, R/I = Z/p for I = (p), I nilpotent
        K0Ring big = k0_of_ring(parse_ring("Z/" + std::to_string(p * p)));
        K0Ring small = k0_of_ring(parse_ring("Z/" + std::to_string(p)));
        CHECK(big.components == small.components);
        CHECK(pic_group(big.base).order() == pic_group(small.base).order());
    }
}

TEST_CASE("generic completion agrees with the closed form") {
    for (const char* spec : standard_rings) {
        K0CrossReport rep = k0_cross_check(parse_ring(spec));
        CHECK(rep.consistent);
        CHECK(rep.window_checked > 0);
    }
}
