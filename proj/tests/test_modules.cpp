#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "k0/modules.hpp"

using namespace k0;

TEST_CASE("rank vectors under sum, product, powers") {
    ConcreteRing r = parse_ring("Z/30");
    ProjModule m = module_from_ranks({2, 0, 1});
    ProjModule n = module_from_ranks({1, 3, 1});
    CHECK(direct_sum(r, m, n) == module_from_ranks({3, 3, 2}));
    CHECK(tensor(r, m, n) == module_from_ranks({2, 0, 1}));
    CHECK(dual(r, m) == m);
    CHECK(end_module(r, m) == module_from_ranks({4, 0, 1}));
    // subset-counting oracle for exterior powers
    for (i64 k = 0; k <= 4; ++k) {
        ProjModule lk = exterior_power(r, n, k);
        for (std::size_t i = 0; i < 3; ++i) {
            i64 count = 0;
            for (i64 mask = 0; mask < (i64{1} << n.ranks[i]); ++mask)
                if (__builtin_popcountll(mask) == k) ++count;
            CHECK(lk.ranks[i] == count);
        }
    }
    CHECK(rank_map(r, m) == H0Element{{2, 0, 1}});
}

TEST_CASE("Steinitz classes under sum and product") {
    ConcreteRing o = parse_ring("O(-23)");
    ClassGroup cl = class_group(-23);
    QuadForm f{2, 1, 3}, g{2, -1, 3};
    ProjModule mf = module_steinitz(o, 1, f);
    ProjModule mg = module_steinitz(o, 1, g);
    // I (+) J = O (+) IJ: rank adds, class multiplies
    ProjModule s = direct_sum(o, mf, mg);
    CHECK(s.rank == 2);
    CHECK(s.cls == cl.compose(f, g));
    CHECK(s.cls == principal_form(-23));
    // det(M (x) N) = det(M)^rk(N) det(N)^rk(M)
    ProjModule t = tensor(o, direct_sum(o, mf, free_module(o, 1)), mg);
    CHECK(t.rank == 2);
    CHECK(t.cls == cl.compose(f, cl.compose(g, g)));
    // dual inverts the class
    CHECK(dual(o, mf).cls == cl.inverse(f));
    CHECK(end_module(o, mf) == free_module(o, 1));
    // top exterior power carries the Steinitz class
    ProjModule big = direct_sum(o, s, mf);
    CHECK(exterior_power(o, big, 3) == module_steinitz(o, 1, f));
    CHECK(exterior_power(o, big, 4).is_zero());
    CHECK_THROWS(exterior_power(o, big, 2));
}

TEST_CASE("zero and free modules") {
    ConcreteRing o = parse_ring("O(-20)");
    CHECK(zero_module(o).is_zero());
    CHECK(direct_sum(o, zero_module(o), free_module(o, 2)) == free_module(o, 2));
    CHECK(tensor(o, zero_module(o), module_steinitz(o, 1, {2, 2, 3})).is_zero());
    // rank 0 forces the trivial class
    CHECK(module_steinitz(o, 0, {2, 2, 3}) == zero_module(o));
}

TEST_CASE("trace ideal and annihilator") {
    ConcreteRing r = parse_ring("Z/30");
    ProjModule m = module_from_ranks({2, 0, 1});
    RingElement e = trace_ideal(r, m);
    CHECK(e.residues == std::vector<i64>{1, 0, 1});
    CHECK(is_idempotent(r, e));
    // M (x) R(1-e) = 0
    ProjModule ann = module_from_ranks({0, 1, 0});
    CHECK(tensor(r, m, ann).is_zero());
}

TEST_CASE("orthogonal decomposition, randomized") {
    ConcreteRing r = parse_ring("Z/2310");
    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> rank(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<i64> v(5);
        for (auto& x : v) x = rank(rng);
        ProjModule m = module_from_ranks(v);
        OrthogonalDecomposition d = orthogonal_decomposition(r, m);
        // sum to 1, pairwise orthogonal
        RingElement sum = ring_zero(r);
        for (const auto& e : d.idems) {
            CHECK(is_idempotent(r, e));
            sum = ring_add(r, sum, e);
        }
        CHECK(sum == ring_one(r));
        for (std::size_t i = 0; i < d.idems.size(); ++i)
            for (std::size_t j = i + 1; j < d.idems.size(); ++j)
                CHECK(ring_mul(r, d.idems[i], d.idems[j]) == ring_zero(r));
        // Ann(Lambda^k M) = R * (e_0 + ... + e_{k-1}), an increasing chain
        for (std::size_t k = 1; k <= d.annihilator_of_ext.size(); ++k) {
            RingElement acc = ring_zero(r);
            for (std::size_t i = 0; i < k && i < d.idems.size(); ++i)
                acc = ring_add(r, acc, d.idems[i]);
            CHECK(d.annihilator_of_ext[k - 1] == acc);
            // ann idempotent kills Lambda^k: componentwise rank < k exactly there
            ProjModule lk = exterior_power(r, m, static_cast<i64>(k));
            for (std::size_t i = 0; i < 5; ++i)
                CHECK((lk.ranks[i] == 0) == (d.annihilator_of_ext[k - 1].residues[i] == 1));
        }
    }
}

TEST_CASE("pic group descriptor") {
    CHECK(pic_group(parse_ring("Z/12")).order() == 1);
    CHECK(pic_group(parse_ring("O(-4)")).order() == 1);
    CHECK(pic_group(parse_ring("O(-23)")).order() == 3);
    CHECK(pic_group(parse_ring("O(-23) loc {2,3}")).order() == 1);
}

TEST_CASE("parse and render") {
    ConcreteRing r = parse_ring("Z/30");
    ProjModule m = parse_module(r, "ranks(2,0,1)");
    CHECK(m == module_from_ranks({2, 0, 1}));
    CHECK(parse_module(r, render_module(m)) == m);
    ConcreteRing o = parse_ring("O(-23)");
    ProjModule s = parse_module(o, "steinitz(3; form(2,1,3))");
    CHECK(s == module_steinitz(o, 3, {2, 1, 3}));
    CHECK(parse_module(o, render_module(s)) == s);
    CHECK_THROWS(parse_module(r, "steinitz(1; form(1,1,6))"));
    CHECK_THROWS(parse_module(o, "ranks(1,2)"));
    CHECK_THROWS(parse_module(r, "ranks(1,2)"));  // wrong arity
}
