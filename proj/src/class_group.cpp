#include "k0/class_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace k0 {

std::size_t ClassGroup::index_of(const QuadForm& f) const {
    QuadForm r = form_reduce(f);
    auto it = std::lower_bound(elements.begin(), elements.end(), r);
    if (it == elements.end() || !(*it == r))
        throw std::invalid_argument("form not in the class group");
    return static_cast<std::size_t>(it - elements.begin());
}

QuadForm ClassGroup::compose(const QuadForm& f, const QuadForm& g) const {
    return elements[group.table[index_of(f)][index_of(g)]];
}

QuadForm ClassGroup::inverse(const QuadForm& f) const {
    std::size_t i = index_of(f);
    for (std::size_t j = 0; j < elements.size(); ++j)
        if (group.table[i][j] == group.identity) return elements[j];
    throw std::logic_error("no inverse");
}

ClassGroup class_group(i64 discriminant) {
    if (!is_fundamental_discriminant(discriminant))
        throw std::invalid_argument("fundamental discriminant < 0 expected");
    ClassGroup cl;
    cl.discriminant = discriminant;
    cl.elements = enumerate_reduced_forms(discriminant);

    ConcreteRing order;
    order.kind = RingKind::QuadOrder;
    order.discriminant = discriminant;

    std::size_t h = cl.elements.size();
    cl.group.table.assign(h, std::vector<std::size_t>(h));
    QuadForm one = form_reduce(principal_form(discriminant));
    cl.group.identity =
        static_cast<std::size_t>(std::lower_bound(cl.elements.begin(), cl.elements.end(),
                                                  one) -
                                 cl.elements.begin());
    std::vector<FractionalIdeal> ideals;
    for (const auto& f : cl.elements) ideals.push_back(form_to_ideal(order, f));
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = i; j < h; ++j) {
            QuadForm prod = ideal_to_form(order, ideal_mul(order, ideals[i], ideals[j]));
            auto it = std::lower_bound(cl.elements.begin(), cl.elements.end(), prod);
            if (it == cl.elements.end() || !(*it == prod))
                throw std::logic_error("composition left the reduced-form list");
            std::size_t k = static_cast<std::size_t>(it - cl.elements.begin());
            cl.group.table[i][j] = cl.group.table[j][i] = k;
        }
    }
    check_abelian_group(cl.group);
    cl.structure = invariant_factors(cl.group);
    return cl;
}

}  // namespace k0
