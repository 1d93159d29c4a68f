#pragma once

#include <vector>

#include "k0/int_util.hpp"

namespace k0 {

// A finite abelian group presented by its full operation table.
struct FiniteAbelianGroup {
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;

    std::size_t size() const { return table.size(); }
};

// Throws if the table fails the abelian group axioms.
void check_abelian_group(const FiniteAbelianGroup& g);

// x composed with itself n times.
std::size_t group_power(const FiniteAbelianGroup& g, std::size_t x, i64 n);

i64 element_order(const FiniteAbelianGroup& g, std::size_t x);

// Invariant factors d1 | d2 | ... | dr with product |G|, matched against the
// counts of n-torsion elements. Returns {} for the trivial group.
std::vector<i64> invariant_factors(const FiniteAbelianGroup& g);

}  // namespace k0
