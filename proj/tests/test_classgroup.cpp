#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k0/class_group.hpp"

using namespace k0;

TEST_CASE("class numbers") {
    CHECK(class_group(-3).h() == 1);
    CHECK(class_group(-4).h() == 1);
    CHECK(class_group(-20).h() == 2);
    CHECK(class_group(-23).h() == 3);
    CHECK(class_group(-47).h() == 5);
}

TEST_CASE("group structure via invariant factors") {
    CHECK(class_group(-4).structure.empty());
    CHECK(class_group(-20).structure == std::vector<i64>{2});
    CHECK(class_group(-23).structure == std::vector<i64>{3});
    CHECK(class_group(-47).structure == std::vector<i64>{5});
    // Cl(-84) = Z/2 x Z/2 (smallest 2x2 case among fundamental D)
    CHECK(class_group(-84).structure == std::vector<i64>{2, 2});
}

TEST_CASE("composition sanity") {
    ClassGroup cl = class_group(-23);
    QuadForm id = cl.identity_form();
    CHECK(id == principal_form(-23));
    for (const QuadForm& f : cl.elements) {
        CHECK(cl.compose(f, id) == f);
        CHECK(cl.compose(f, cl.inverse(f)) == id);
        for (const QuadForm& g : cl.elements)
            CHECK(cl.compose(f, g) == cl.compose(g, f));
    }
    // the two non-principal classes of D = -23 are mutually inverse
    QuadForm f{2, 1, 3}, g{2, -1, 3};
    CHECK(cl.compose(f, g) == id);
    CHECK(cl.compose(f, f) == g);
}

TEST_CASE("every class has the order its invariant factors allow") {
    for (i64 d : {-20, -23, -47, -84}) {
        ClassGroup cl = class_group(d);
        i64 exponent = cl.structure.empty() ? 1 : cl.structure.back();
        for (std::size_t i = 0; i < cl.elements.size(); ++i) {
            i64 ord = element_order(cl.group, i);
            CHECK(exponent % ord == 0);
        }
    }
}
