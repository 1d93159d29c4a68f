#include "k0/spectrum.hpp"

#include <stdexcept>

namespace k0 {

ComponentDecomposition component_decomposition(const ConcreteRing& r) {
    ComponentDecomposition d;
    if (r.is_quad()) {
        d.components.push_back(ring_one(r));
        return d;
    }
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        RingElement e;
        for (std::size_t j = 0; j < r.factors.size(); ++j)
            e.residues.push_back(i == j ? 1 : 0);
        d.components.push_back(e);
    }
    return d;
}

std::size_t component_count(const ConcreteRing& r) {
    return r.is_quad() ? 1 : r.factors.size();
}

H0Element h0_constant(const ConcreteRing& r, i64 n) {
    return H0Element{std::vector<i64>(component_count(r), n)};
}

namespace {
void check_same_length(const H0Element& f, const H0Element& g) {
    if (f.values.size() != g.values.size())
        throw std::invalid_argument("H0 length mismatch");
}
}  // namespace

H0Element h0_add(const H0Element& f, const H0Element& g) {
    check_same_length(f, g);
    H0Element h = f;
    for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] += g.values[i];
    return h;
}

H0Element h0_sub(const H0Element& f, const H0Element& g) {
    check_same_length(f, g);
    H0Element h = f;
    for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] -= g.values[i];
    return h;
}

H0Element h0_mul(const H0Element& f, const H0Element& g) {
    check_same_length(f, g);
    H0Element h = f;
    for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] *= g.values[i];
    return h;
}

H0Element h0_neg(const H0Element& f) {
    H0Element h = f;
    for (auto& v : h.values) v = -v;
    return h;
}

std::vector<H0Element> h0_units(const ConcreteRing& r) {
    std::size_t c = component_count(r);
    std::vector<H0Element> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        H0Element u;
        for (std::size_t i = 0; i < c; ++i)
            u.values.push_back((mask >> i) & 1 ? -1 : 1);
        out.push_back(u);
    }
    return out;
}

H0Element phi_e(const ConcreteRing& r, const RingElement& e) {
    if (!is_idempotent(r, e)) throw std::invalid_argument("phi_e: not an idempotent");
    H0Element u;
    if (r.is_quad()) {
        u.values.push_back(e == ring_zero(r) ? 1 : -1);
        return u;
    }
    for (std::size_t i = 0; i < r.factors.size(); ++i)
        u.values.push_back(e.residues[i] == 0 ? 1 : -1);
    return u;
}

std::string render_h0(const H0Element& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(f.values[i]);
    }
    return s + ")";
}

}  // namespace k0
