#pragma once

#include <vector>

#include "k0/abelian.hpp"
#include "k0/forms.hpp"
#include "k0/ideals.hpp"
#include "k0/ring.hpp"

namespace k0 {

// Cl(D): all reduced forms of discriminant D with composition routed through
// ideal multiplication, plus the abelian structure.
struct ClassGroup {
    i64 discriminant = 0;
    std::vector<QuadForm> elements;  // sorted; elements[identity] principal
    FiniteAbelianGroup group;
    std::vector<i64> structure;  // invariant factors (empty = trivial)

    i64 h() const { return static_cast<i64>(elements.size()); }
    std::size_t index_of(const QuadForm& f) const;
    QuadForm compose(const QuadForm& f, const QuadForm& g) const;
    QuadForm inverse(const QuadForm& f) const;
    QuadForm identity_form() const { return elements[group.identity]; }
};

ClassGroup class_group(i64 discriminant);

}  // namespace k0
