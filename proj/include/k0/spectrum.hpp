#pragma once

#include <string>
#include <vector>

#include "k0/ring.hpp"

namespace k0 {

// Ordered primitive idempotents e_1..e_c of R: pairwise orthogonal, summing
// to 1, none splitting further. One per local factor; [1] for a quadratic
// order (connected spectrum).
struct ComponentDecomposition {
    std::vector<RingElement> components;
    std::size_t size() const { return components.size(); }
};

// A locally constant function Spec(R) -> Z: one integer per connected
// component, in decomposition order.
struct H0Element {
    std::vector<i64> values;

    bool is_unit() const {
        for (i64 v : values)
            if (v != 1 && v != -1) return false;
        return true;
    }
    friend bool operator==(const H0Element&, const H0Element&) = default;
};

ComponentDecomposition component_decomposition(const ConcreteRing& r);

std::size_t component_count(const ConcreteRing& r);

H0Element h0_constant(const ConcreteRing& r, i64 n);
H0Element h0_add(const H0Element& f, const H0Element& g);
H0Element h0_sub(const H0Element& f, const H0Element& g);
H0Element h0_mul(const H0Element& f, const H0Element& g);
H0Element h0_neg(const H0Element& f);

// All {+-1}-valued vectors; 2^c of them.
std::vector<H0Element> h0_units(const ConcreteRing& r);

// The unit phi_e: component i gets +1 where e vanishes (e in p) and -1
// where it does not. phi_e = -phi_{1-e}.
H0Element phi_e(const ConcreteRing& r, const RingElement& e);

std::string render_h0(const H0Element& f);

}  // namespace k0
