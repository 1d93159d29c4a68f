#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "k0/grothendieck.hpp"

using namespace k0;

static FiniteSemiring zmod(std::size_t m) {
    FiniteSemiring s;
    for (std::size_t i = 0; i < m; ++i) s.elements.push_back(std::to_string(i));
    s.add.assign(m, std::vector<std::size_t>(m));
    s.mul.assign(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            s.add[i][j] = (i + j) % m;
            s.mul[i][j] = i * j % m;
        }
    s.zero = 0;
    s.one = 1 % m;
    s.cancellative = true;
    return s;
}

static FiniteSemiring boolean_semiring() {
    FiniteSemiring s;
    s.elements = {"0", "1"};
    s.add = {{0, 1}, {1, 1}};  // 1 + 1 = 1
    s.mul = {{0, 0}, {0, 1}};
    s.zero = 0;
    s.one = 1;
    return s;
}

TEST_CASE("validation names the failing triple") {
    FiniteMonoid bad;
    bad.elements = {"a", "b"};
    bad.add = {{0, 1}, {1, 0}};
    bad.zero = 1;  // wrong identity
    CHECK_THROWS(validate_monoid(bad));

    FiniteSemiring nonassoc = zmod(3);
    nonassoc.mul[2][2] = 2;  // breaks associativity/distributivity
    CHECK_THROWS_AS(validate_semiring(nonassoc), std::invalid_argument);
}

TEST_CASE("absorbing monoid completes to the trivial group") {
    FiniteMonoid m;
    m.elements = {"0", "1"};
    m.add = {{0, 1}, {1, 1}};
    m.zero = 0;
    GrothGroup g = groth_completion(m);
    CHECK(g.size() == 1);
    CHECK(g.gamma(0) == g.gamma(1));
}

TEST_CASE("a group completes to itself") {
    for (std::size_t m : {1u, 2u, 5u, 6u}) {
        GrothGroup g = groth_completion(zmod(m));
        REQUIRE(g.size() == m);
        // gamma is an isomorphism: check it maps the table across
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                CHECK(g.add[g.gamma(a)][g.gamma(b)] == g.gamma((a + b) % m));
    }
}

TEST_CASE("Boolean semiring completes to the zero ring") {
    GrothRing g = groth_ring(boolean_semiring());
    CHECK(g.size() == 1);
    CHECK(g.zero == g.one);
}

TEST_CASE("semiring Z/m completes to the ring Z/m") {
    GrothRing g = groth_ring(zmod(6));
    REQUIRE(g.size() == 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            CHECK(g.mul[g.gamma(a)][g.gamma(b)] == g.gamma(a * b % 6));
}

TEST_CASE("universal property on finite semirings") {
    FiniteSemiring s = zmod(6);
    GrothRing g = groth_ring(s);
    // phi = gamma itself: theta must be the identity
    RingOps<std::size_t> self{
        [&](const std::size_t& a, const std::size_t& b) { return g.add[a][b]; },
        [&](const std::size_t& a, const std::size_t& b) { return g.add[a][g.neg[b]]; },
        [&](const std::size_t& a, const std::size_t& b) { return g.mul[a][b]; },
        [](const std::size_t& a, const std::size_t& b) { return a == b; },
        g.zero, g.one};
    std::vector<std::size_t> phi;
    for (std::size_t a = 0; a < s.size(); ++a) phi.push_back(g.gamma(a));
    std::vector<std::size_t> theta = universal_extend(g, s, phi, self);
    for (std::size_t c = 0; c < g.size(); ++c) CHECK(theta[c] == c);

    // Z/6 -> Z/3 reduction
    RingOps<i64> z3{[](const i64& a, const i64& b) { return (a + b) % 3; },
                    [](const i64& a, const i64& b) { return ((a - b) % 3 + 3) % 3; },
                    [](const i64& a, const i64& b) { return a * b % 3; },
                    [](const i64& a, const i64& b) { return a == b; }, 0, 1};
    std::vector<i64> phi3 = {0, 1, 2, 0, 1, 2};
    std::vector<i64> theta3 = universal_extend(g, s, phi3, z3);
    for (std::size_t a = 0; a < 6; ++a) CHECK(theta3[g.gamma(a)] == i64(a % 3));

    // a non-morphism is rejected
    std::vector<i64> notphi = {0, 1, 2, 1, 1, 2};
    CHECK_THROWS(universal_extend(g, s, notphi, z3));
}

TEST_CASE("cancellative interface: N completes to Z") {
    CancellativeSemiring<i64> nat{
        [](const i64& a, const i64& b) { return a + b; },
        [](const i64& a, const i64& b) { return a * b; },
        [](const i64& a, const i64& b) { return a == b; }, 0, 1};
    CHECK(groth_eq(nat, {5, 2}, {3, 0}));
    CHECK(!groth_eq(nat, {5, 2}, {0, 3}));
    // [m1,n1] (+/*) [m2,n2] agrees with integer arithmetic for |n| <= 50
    auto as_int = [](const GrothPair<i64>& x) { return x.p - x.q; };
    for (i64 a = -50; a <= 50; a += 7)
        for (i64 b = -50; b <= 50; b += 11) {
            GrothPair<i64> x{a > 0 ? a : 0, a > 0 ? 0 : -a};
            GrothPair<i64> y{13 + (b > 0 ? b : 0), 13 + (b > 0 ? 0 : -b)};
            CHECK(as_int(groth_add(nat, x, y)) == a + b);
            CHECK(as_int(groth_mul(nat, x, y)) == a * b);
            CHECK(as_int(groth_neg(x)) == -a);
            CHECK(groth_eq(nat, groth_add(nat, x, groth_neg(x)), groth_of(nat, i64(0))));
        }
}

TEST_CASE("cancellative universal extension into Z/5") {
    RingOps<i64> z5{[](const i64& a, const i64& b) { return (a + b) % 5; },
                    [](const i64& a, const i64& b) { return ((a - b) % 5 + 5) % 5; },
                    [](const i64& a, const i64& b) { return a * b % 5; },
                    [](const i64& a, const i64& b) { return a == b; }, 0, 1};
    std::function<i64(const i64&)> phi = [](const i64& n) { return n % 5; };
    for (i64 m = 0; m <= 20; ++m)
        for (i64 n = 0; n <= 20; ++n)
            CHECK(groth_extend(GrothPair<i64>{m, n}, z5, phi) == ((m - n) % 5 + 5) % 5);
}
