#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "k0/forms.hpp"

using namespace k0;

// Independent oracle: exhaustive (a,b,c) scan with b^2 - 4ac = d and the
// reduction inequalities checked directly.
static std::vector<QuadForm> oracle_reduced_forms(i64 d) {
    std::vector<QuadForm> out;
    for (i64 a = 1; 3 * a * a <= -d; ++a)
        for (i64 b = -a; b <= a; ++b) {
            if ((b * b - d) % (4 * a)) continue;
            i64 c = (b * b - d) / (4 * a);
            if (c < a) continue;
            if (b < 0 && (a == c || b == -a)) continue;  // boundary: b >= 0
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

TEST_CASE("class numbers against the exhaustive oracle") {
    CHECK(oracle_reduced_forms(-3).size() == 1);
    CHECK(oracle_reduced_forms(-4).size() == 1);
    CHECK(oracle_reduced_forms(-20).size() == 2);
    CHECK(oracle_reduced_forms(-23).size() == 3);
    CHECK(oracle_reduced_forms(-47).size() == 5);
    for (i64 d : {-3, -4, -7, -8, -11, -15, -20, -23, -24, -47, -71, -163})
        CHECK(enumerate_reduced_forms_serial(d) == oracle_reduced_forms(d));
}

TEST_CASE("known reduced form lists") {
    CHECK(enumerate_reduced_forms_serial(-20) ==
          std::vector<QuadForm>{{1, 0, 5}, {2, 2, 3}});
    CHECK(enumerate_reduced_forms_serial(-23) ==
          std::vector<QuadForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
}

TEST_CASE("parallel enumeration matches the serial reference") {
    for (i64 d : {-4, -23, -47, -5003, -40047, -100003})
        CHECK(enumerate_reduced_forms(d) == enumerate_reduced_forms_serial(d));
}

TEST_CASE("form_reduce lands on a reduced equivalent form") {
    for (i64 d : {-20, -23, -47, -71}) {
        for (const QuadForm& f : enumerate_reduced_forms_serial(d)) {
            CHECK(is_reduced(f));
            CHECK(form_reduce(f) == f);
            // unreduce by a few translations/swaps, then reduce back
            QuadForm g{f.c, -f.b, f.a};
            QuadForm h{g.a, g.b + 6 * g.a, g.c + 3 * g.b + 9 * g.a};
            CHECK(h.discriminant() == d);
            int steps = 0;
            QuadForm back = form_reduce(h, &steps);
            CHECK(is_reduced(back));
            CHECK(back.discriminant() == d);
            CHECK(steps < 64);
        }
    }
}

TEST_CASE("principal form") {
    CHECK(principal_form(-4) == QuadForm{1, 0, 1});
    CHECK(principal_form(-20) == QuadForm{1, 0, 5});
    CHECK(principal_form(-23) == QuadForm{1, 1, 6});
    for (i64 d : {-3, -4, -20, -23, -47}) {
        CHECK(principal_form(d).discriminant() == d);
        CHECK(is_reduced(principal_form(d)));
    }
}

TEST_CASE("render and parse round-trip") {
    QuadForm f{2, -1, 3};
    CHECK(parse_form(render_form(f)) == f);
    CHECK(parse_form("form(1, 0, 5)") == QuadForm{1, 0, 5});
    CHECK_THROWS(parse_form("form(1,2)"));
    CHECK_THROWS(parse_form("nope"));
}
