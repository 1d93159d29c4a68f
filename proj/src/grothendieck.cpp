#include "k0/grothendieck.hpp"

#include <stdexcept>

namespace k0 {

namespace {

std::string triple(const FiniteMonoid& m, std::size_t a, std::size_t b, std::size_t c) {
    return "(" + m.elements[a] + ", " + m.elements[b] + ", " + m.elements[c] + ")";
}

}  // namespace

void validate_monoid(const FiniteMonoid& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty monoid");
    if (m.add.size() != n) throw std::invalid_argument("add table has wrong size");
    for (const auto& row : m.add) {
        if (row.size() != n) throw std::invalid_argument("add table has wrong size");
        for (std::size_t v : row)
            if (v >= n) throw std::invalid_argument("add table index out of range");
    }
    if (m.zero >= n) throw std::invalid_argument("zero index out of range");
    for (std::size_t a = 0; a < n; ++a) {
        if (m.add[a][m.zero] != a)
            throw std::invalid_argument("0 is not an additive identity at " + m.elements[a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (m.add[a][b] != m.add[b][a])
                throw std::invalid_argument("addition not commutative at (" +
                                            m.elements[a] + ", " + m.elements[b] + ")");
            for (std::size_t c = 0; c < n; ++c)
                if (m.add[m.add[a][b]][c] != m.add[a][m.add[b][c]])
                    throw std::invalid_argument("addition not associative at " +
                                                triple(m, a, b, c));
        }
    }
    if (m.cancellative)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (m.add[a][c] == m.add[b][c] && a != b)
                        throw std::invalid_argument("monoid marked cancellative but " +
                                                    triple(m, a, b, c) + " cancels badly");
}

void validate_semiring(const FiniteSemiring& s) {
    validate_monoid(s);
    std::size_t n = s.size();
    if (s.mul.size() != n) throw std::invalid_argument("mul table has wrong size");
    for (const auto& row : s.mul)
        if (row.size() != n) throw std::invalid_argument("mul table has wrong size");
    if (s.one >= n) throw std::invalid_argument("one index out of range");
    for (std::size_t a = 0; a < n; ++a) {
        if (s.mul[a][s.one] != a)
            throw std::invalid_argument("1 is not a multiplicative identity at " +
                                        s.elements[a]);
        if (s.mul[a][s.zero] != s.zero)
            throw std::invalid_argument("x*0 != 0 at " + s.elements[a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (s.mul[a][b] != s.mul[b][a])
                throw std::invalid_argument("multiplication not commutative at (" +
                                            s.elements[a] + ", " + s.elements[b] + ")");
            for (std::size_t c = 0; c < n; ++c) {
                if (s.mul[s.mul[a][b]][c] != s.mul[a][s.mul[b][c]])
                    throw std::invalid_argument("multiplication not associative at " +
                                                triple(s, a, b, c));
                if (s.mul[a][s.add[b][c]] != s.add[s.mul[a][b]][s.mul[a][c]])
                    throw std::invalid_argument("distributivity fails at " +
                                                triple(s, a, b, c));
            }
        }
    }
}

bool groth_equivalent(const FiniteMonoid& m, std::size_t p, std::size_t q,
                      std::size_t pp, std::size_t qp) {
    std::size_t lhs = m.add[p][qp], rhs = m.add[pp][q];
    if (m.cancellative) return lhs == rhs;
    for (std::size_t s = 0; s < m.size(); ++s)
        if (m.add[lhs][s] == m.add[rhs][s]) return true;
    return false;
}

GrothGroup groth_completion(const FiniteMonoid& m) {
    validate_monoid(m);
    std::size_t n = m.size();
    GrothGroup g;
    g.base = m;
    g.class_of.assign(n, std::vector<std::size_t>(n));
    // Normal form = lexicographically least equivalent pair; walking pairs in
    // lex order makes each new class's first appearance its representative.
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            std::size_t cls = g.reps.size();
            for (std::size_t k = 0; k < g.reps.size(); ++k)
                if (groth_equivalent(m, p, q, g.reps[k].first, g.reps[k].second)) {
                    cls = k;
                    break;
                }
            if (cls == g.reps.size()) g.reps.emplace_back(p, q);
            g.class_of[p][q] = cls;
        }
    std::size_t k = g.size();
    g.zero = g.class_of[m.zero][m.zero];
    g.add.assign(k, std::vector<std::size_t>(k));
    g.neg.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        auto [p, q] = g.reps[i];
        g.neg[i] = g.class_of[q][p];
        for (std::size_t j = 0; j < k; ++j) {
            auto [pp, qp] = g.reps[j];
            g.add[i][j] = g.class_of[m.add[p][pp]][m.add[q][qp]];
        }
    }
    // Addition must be well-defined on classes, not just on representatives.
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t pp = 0; pp < n; ++pp)
                for (std::size_t qp = 0; qp < n; ++qp)
                    if (g.class_of[m.add[p][pp]][m.add[q][qp]] !=
                        g.add[g.class_of[p][q]][g.class_of[pp][qp]])
                        throw std::logic_error("completion addition not well-defined");
    for (std::size_t i = 0; i < k; ++i)
        if (g.add[i][g.neg[i]] != g.zero)
            throw std::logic_error("completion lacks inverses");
    return g;
}

GrothRing groth_ring(const FiniteSemiring& s) {
    validate_semiring(s);
    GrothRing g;
    static_cast<GrothGroup&>(g) = groth_completion(s);
    std::size_t n = s.size(), k = g.size();
    g.one = g.class_of[s.one][s.zero];
    g.mul.assign(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
        auto [a, b] = g.reps[i];
        for (std::size_t j = 0; j < k; ++j) {
            auto [c, d] = g.reps[j];
            g.mul[i][j] = g.class_of[s.add[s.mul[a][c]][s.mul[b][d]]]
                                    [s.add[s.mul[a][d]][s.mul[b][c]]];
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (g.class_of[s.add[s.mul[a][c]][s.mul[b][d]]]
                                  [s.add[s.mul[a][d]][s.mul[b][c]]] !=
                        g.mul[g.class_of[a][b]][g.class_of[c][d]])
                        throw std::logic_error("completion product not well-defined");
    return g;
}

}  // namespace k0
