#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k0/boolean_ring.hpp"
#include "k0/class_group.hpp"
#include "k0/modules.hpp"
#include "k0/ring.hpp"
#include "k0/spectrum.hpp"

namespace k0 {

enum class K0Shape { FreeAbelian, ZPlusCl };

// K0(R) in closed form: Z^c with componentwise product for a product of c
// local rings (and for semilocal orders, c = 1), or Z x Cl(D) with
// (r1,c1)(r2,c2) = (r1 r2, r1 c2 + r2 c1) for a maximal order.
struct K0Ring {
    ConcreteRing base;
    K0Shape shape = K0Shape::FreeAbelian;
    std::size_t components = 0;    // FreeAbelian
    std::optional<ClassGroup> cl;  // ZPlusCl
};

struct K0Elem {
    std::vector<i64> coords;  // FreeAbelian
    i64 r = 0;                // ZPlusCl
    std::size_t cls = 0;      // index into cl->elements

    friend bool operator==(const K0Elem&, const K0Elem&) = default;
};

K0Ring k0_of_ring(const ConcreteRing& r);

K0Elem k0_zero(const K0Ring& k);
K0Elem k0_one(const K0Ring& k);
K0Elem k0_from_integer(const K0Ring& k, i64 n);
K0Elem k0_add(const K0Ring& k, const K0Elem& x, const K0Elem& y);
K0Elem k0_sub(const K0Ring& k, const K0Elem& x, const K0Elem& y);
K0Elem k0_mul(const K0Ring& k, const K0Elem& x, const K0Elem& y);
K0Elem k0_neg(const K0Ring& k, const K0Elem& x);

// [M]: rank vector, or (rank, Steinitz class).
K0Elem k0_class(const K0Ring& k, const ProjModule& m);

// [M,N] |-> r_M - r_N, and its section H0 -> K0 (constant-rank classes).
H0Element k0_to_h0(const K0Ring& k, const K0Elem& x);
K0Elem h0_section(const K0Ring& k, const H0Element& f);

// Kernel of k0_to_h0; empty for FreeAbelian, {0} x Cl for ZPlusCl.
// Every listed element squares to zero (asserted).
std::vector<K0Elem> k0_nilradical(const K0Ring& k);

struct K0RedReport {
    i64 nilradical_order = 1;
    bool reduced_iso_h0 = false;  // K0(R)_red = H0(R), witnessed
    std::string note;
};

K0RedReport k0_red_check(const K0Ring& k);

// Unit group: {+-1}^c or {(+-1, c)}.
std::vector<K0Elem> k0_units(const K0Ring& k);

// Idempotents: 0/1 vectors, or {(0,0), (1,0)}.
std::vector<K0Elem> k0_idempotents(const K0Ring& k);

bool k0_is_unit(const K0Ring& k, const K0Elem& x);

// f: Pic -> K0^*, h: B(R) -> K0^*, g: K0^* -> B(R) with gh = id, gf = 0 and
// ker g = im f (line bundle property holds for both families).
struct FghReport {
    i64 units_order = 0;
    i64 pic_order = 0;
    i64 b_order = 0;
    bool f_injective = false;
    bool h_injective = false;
    bool g_surjective = false;
    bool gh_identity = false;
    bool gf_zero = false;
    bool ker_g_is_im_f = false;
    bool split = false;  // units = pic x b, section h
    std::vector<i64> unit_structure;  // invariant factors of K0^*

    bool all() const {
        return f_injective && h_injective && g_surjective && gh_identity &&
               gf_zero && ker_g_is_im_f && split;
    }
};

K0Elem map_f(const K0Ring& k, const QuadForm& cls);            // ZPlusCl only
K0Elem map_h(const K0Ring& k, const RingElement& idem);        // [R, Re + Re]
RingElement map_g(const K0Ring& k, const K0Elem& unit);        // via rank map

FghReport maps_fgh(const ConcreteRing& r);

// Thm-6.3-style bijection e <-> [Re] between B(R) and idempotents of K0(R).
struct BK0Report {
    std::vector<RingElement> ring_idems;
    std::vector<K0Elem> images;
    bool bijective = false;
    bool additive = false;  // respects (+) on both sides
};

BK0Report b_of_k0(const ConcreteRing& r);

// Induced map on K0 of a morphism of finite products: component pullback.
struct K0Map {
    K0Ring source, target;
    std::vector<std::size_t> assignment;  // per target component: source index

    K0Elem apply(const K0Elem& x) const;
};

K0Map k0_map(const RingMorphism& f);
K0Map k0_compose(const K0Map& g, const K0Map& f);

struct LiftReport {
    bool ring_level = false;
    bool k0_level = false;
    std::vector<std::string> missing;  // idempotents with no lift, rendered
};

// Cor.-6.4-style two-level comparison; throws if the levels disagree.
LiftReport lifts_idempotents(const RingMorphism& f);

struct SurjReport {
    bool preconditions = false;  // f lifts idempotents (target K0 is reduced)
    bool surjective = false;
    std::string note;
};

SurjReport k0_surjectivity_check(const RingMorphism& f);

// Cross-check of the closed form against the generic completion: the
// projective-class semiring under direct sum / tensor, completed through the
// cancellative engine, mapped onto K0 by [M,N] |-> [M] - [N]. Verified to be
// a bounded-window ring isomorphism; throws on any mismatch.
struct K0CrossReport {
    i64 window_checked = 0;
    bool consistent = false;
};

K0CrossReport k0_cross_check(const ConcreteRing& r);

std::string render_k0_elem(const K0Ring& k, const K0Elem& x);
std::string render_k0_shape(const K0Ring& k);

}  // namespace k0
