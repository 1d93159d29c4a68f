#pragma once

#include <vector>

#include "k0/ring.hpp"
#include "k0/spectrum.hpp"

namespace k0 {

// e (+) e' = e + e' - 2ee'
RingElement bool_xor(const ConcreteRing& r, const RingElement& e, const RingElement& ep);

// The Boolean ring B(R) of idempotents with complete operation tables
// (indices into `elements`).
struct BooleanRing {
    std::vector<RingElement> elements;
    std::vector<std::vector<std::size_t>> add;  // e (+) e'
    std::vector<std::vector<std::size_t>> mul;  // e * e'

    std::size_t index_of(const RingElement& e) const;
    std::size_t size() const { return elements.size(); }
};

BooleanRing boolean_ring_of(const ConcreteRing& r);

// The verified bijection e <-> phi_e between B(R) and H0(R)^*.
struct BH0Iso {
    BooleanRing b;
    std::vector<H0Element> images;  // images[i] = phi_{elements[i]}
};

// Builds phi and asserts it is a group isomorphism onto h0_units(R).
BH0Iso b_iso_h0units(const ConcreteRing& r);

// Rank-level check of Re (+) Re' = Re/Re(1-e') (+) Re'/Re'(1-e) (+) R(e(+)e').
struct IdempotentFormulaReport {
    std::vector<i64> lhs_ranks;
    std::vector<i64> rhs_ranks;
    bool equal = false;
};

IdempotentFormulaReport idempotent_formula_check(const ConcreteRing& r,
                                                 const RingElement& e,
                                                 const RingElement& ep);

}  // namespace k0
