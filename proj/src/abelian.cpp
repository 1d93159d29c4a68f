#include "k0/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace k0 {

void check_abelian_group(const FiniteAbelianGroup& g) {
    std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument("empty group table");
    for (std::size_t i = 0; i < n; ++i) {
        if (g.table[i].size() != n) throw std::invalid_argument("ragged table");
        if (g.table[g.identity][i] != i) throw std::logic_error("identity fails");
        bool has_inverse = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (g.table[i][j] >= n) throw std::invalid_argument("index out of range");
            if (g.table[i][j] != g.table[j][i]) throw std::logic_error("not commutative");
            if (g.table[i][j] == g.identity) has_inverse = true;
        }
        if (!has_inverse) throw std::logic_error("element without inverse");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
                    throw std::logic_error("not associative");
}

std::size_t group_power(const FiniteAbelianGroup& g, std::size_t x, i64 n) {
    if (n < 0) throw std::invalid_argument("nonnegative power expected");
    std::size_t acc = g.identity;
    while (n-- > 0) acc = g.table[acc][x];
    return acc;
}

i64 element_order(const FiniteAbelianGroup& g, std::size_t x) {
    std::size_t acc = x;
    i64 ord = 1;
    while (acc != g.identity) {
        acc = g.table[acc][x];
        ++ord;
    }
    return ord;
}

namespace {

// Count of x with x^n = identity under the candidate invariant factors.
i64 torsion_count(const std::vector<i64>& divisors, i64 n) {
    i64 c = 1;
    for (i64 d : divisors) c *= std::gcd(d, n);
    return c;
}

// All chains d1 | d2 | ... with product = target (ascending).
void chains(i64 target, i64 min_d, std::vector<i64>& cur,
            std::vector<std::vector<i64>>& out) {
    if (target == 1) {
        out.push_back(cur);
        return;
    }
    for (i64 d = std::max<i64>(2, min_d); d <= target; ++d) {
        if (target % d) continue;
        if (min_d > 1 && d % min_d) continue;
        cur.push_back(d);
        chains(target / d, d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<i64> invariant_factors(const FiniteAbelianGroup& g) {
    i64 n = static_cast<i64>(g.size());
    if (n == 1) return {};
    std::vector<i64> actual;  // torsion counts per divisor of n
    std::vector<i64> divs;
    for (i64 d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    for (i64 d : divs) {
        i64 c = 0;
        for (std::size_t x = 0; x < g.size(); ++x)
            if (group_power(g, x, d) == g.identity) ++c;
        actual.push_back(c);
    }
    std::vector<std::vector<i64>> cands;
    std::vector<i64> cur;
    chains(n, 1, cur, cands);
    for (const auto& cand : cands) {
        bool ok = true;
        for (std::size_t i = 0; i < divs.size() && ok; ++i)
            ok = torsion_count(cand, divs[i]) == actual[i];
        if (ok) return cand;
    }
    throw std::logic_error("no invariant factor decomposition matches (not abelian?)");
}

}  // namespace k0
