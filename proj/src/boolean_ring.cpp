#include "k0/boolean_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace k0 {

RingElement bool_xor(const ConcreteRing& r, const RingElement& e, const RingElement& ep) {
    RingElement s = ring_add(r, e, ep);
    RingElement p = ring_mul(r, e, ep);
    return ring_sub(r, s, ring_add(r, p, p));
}

std::size_t BooleanRing::index_of(const RingElement& e) const {
    auto it = std::find(elements.begin(), elements.end(), e);
    if (it == elements.end()) throw std::invalid_argument("not in B(R)");
    return static_cast<std::size_t>(it - elements.begin());
}

BooleanRing boolean_ring_of(const ConcreteRing& r) {
    BooleanRing b;
    b.elements = idempotents(r);
    std::size_t n = b.elements.size();
    b.add.assign(n, std::vector<std::size_t>(n));
    b.mul.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b.add[i][j] = b.index_of(bool_xor(r, b.elements[i], b.elements[j]));
            b.mul[i][j] = b.index_of(ring_mul(r, b.elements[i], b.elements[j]));
        }
    }
    return b;
}

BH0Iso b_iso_h0units(const ConcreteRing& r) {
    BH0Iso iso;
    iso.b = boolean_ring_of(r);
    for (const auto& e : iso.b.elements) iso.images.push_back(phi_e(r, e));

    auto units = h0_units(r);
    if (units.size() != iso.b.size())
        throw std::logic_error("|B(R)| != |H0(R)^*|");
    // Injective (hence bijective, sizes equal) and image inside the units.
    for (std::size_t i = 0; i < iso.images.size(); ++i) {
        if (!iso.images[i].is_unit()) throw std::logic_error("phi_e not a unit");
        for (std::size_t j = i + 1; j < iso.images.size(); ++j)
            if (iso.images[i] == iso.images[j]) throw std::logic_error("phi not injective");
    }
    // Group law transported: phi_{e (+) e'} = phi_e * phi_e'.
    for (std::size_t i = 0; i < iso.b.size(); ++i)
        for (std::size_t j = 0; j < iso.b.size(); ++j)
            if (iso.images[iso.b.add[i][j]] != h0_mul(iso.images[i], iso.images[j]))
                throw std::logic_error("phi not a group morphism");
    return iso;
}

IdempotentFormulaReport idempotent_formula_check(const ConcreteRing& r,
                                                 const RingElement& e,
                                                 const RingElement& ep) {
    if (r.is_quad())
        throw std::invalid_argument("formula check runs over finite products");
    if (!is_idempotent(r, e) || !is_idempotent(r, ep))
        throw std::invalid_argument("inputs must be idempotent");
    IdempotentFormulaReport rep;
    std::size_t c = r.factors.size();
    rep.lhs_ranks.assign(c, 0);
    rep.rhs_ranks.assign(c, 0);
    RingElement x = bool_xor(r, e, ep);
    for (std::size_t i = 0; i < c; ++i) {
        bool re = e.residues[i] != 0;
        bool rep_ = ep.residues[i] != 0;
        // rank(Re (+) Re')_i
        rep.lhs_ranks[i] = (re ? 1 : 0) + (rep_ ? 1 : 0);
        // rank(Re/Re(1-e'))_i = 1 iff both nonzero on i; symmetric term;
        // rank(R(e(+)e'))_i = 1 iff exactly one nonzero.
        rep.rhs_ranks[i] = (re && rep_ ? 2 : 0) + (x.residues[i] != 0 ? 1 : 0);
    }
    rep.equal = rep.lhs_ranks == rep.rhs_ranks;
    return rep;
}

}  // namespace k0
