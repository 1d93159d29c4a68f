#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "k0/int_util.hpp"

namespace k0 {

// Commutative monoid given by its full addition table. `cancellative` only
// switches how pair equivalence is decided (direct equality vs s-search);
// the two agree whenever the flag is truthful.
struct FiniteMonoid {
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> add;
    std::size_t zero = 0;
    bool cancellative = false;

    std::size_t size() const { return elements.size(); }
};

// Commutative semiring: additionally a commutative multiplicative monoid
// with 1, distributive, annihilated by 0.
struct FiniteSemiring : FiniteMonoid {
    std::vector<std::vector<std::size_t>> mul;
    std::size_t one = 0;
};

// Throw std::invalid_argument naming a failing triple/pair.
void validate_monoid(const FiniteMonoid& m);
void validate_semiring(const FiniteSemiring& s);

// Grothendieck group of a finite commutative monoid. Classes are labelled by
// their normal form: the lexicographically least equivalent pair (p, q).
struct GrothGroup {
    FiniteMonoid base;
    std::vector<std::pair<std::size_t, std::size_t>> reps;  // per class
    std::vector<std::vector<std::size_t>> add;              // class table
    std::vector<std::size_t> neg;
    std::size_t zero = 0;
    std::vector<std::vector<std::size_t>> class_of;  // [p][q] -> class

    std::size_t size() const { return reps.size(); }
    std::size_t gamma(std::size_t a) const { return class_of[a][base.zero]; }
};

struct GrothRing : GrothGroup {
    std::vector<std::vector<std::size_t>> mul;
    std::size_t one = 0;
};

// (p, q) ~ (p', q') iff p + q' + s = p' + q + s for some s (any s works when
// the monoid is marked cancellative).
bool groth_equivalent(const FiniteMonoid& m, std::size_t p, std::size_t q,
                      std::size_t pp, std::size_t qp);

GrothGroup groth_completion(const FiniteMonoid& m);

// Adds [a,b][c,d] = [ac+bd, ad+bc]; well-definedness asserted across all
// representative pairs.
GrothRing groth_ring(const FiniteSemiring& s);

// Target-ring callbacks for the universal property, over an arbitrary
// element type.
template <class T>
struct RingOps {
    std::function<T(const T&, const T&)> add, sub, mul;
    std::function<bool(const T&, const T&)> eq;
    T zero, one;
};

// theta([a,b]) = phi(a) - phi(b). Verifies phi is a semiring morphism and
// that theta . gamma = phi; throws otherwise. Returns theta per class.
template <class T>
std::vector<T> universal_extend(const GrothRing& g, const FiniteSemiring& s,
                                const std::vector<T>& phi, const RingOps<T>& target) {
    if (phi.size() != s.size()) throw std::invalid_argument("phi: wrong arity");
    if (!target.eq(phi[s.zero], target.zero) || !target.eq(phi[s.one], target.one))
        throw std::invalid_argument("phi does not preserve 0/1");
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (!target.eq(phi[s.add[a][b]], target.add(phi[a], phi[b])))
                throw std::invalid_argument("phi is not additive");
            if (!target.eq(phi[s.mul[a][b]], target.mul(phi[a], phi[b])))
                throw std::invalid_argument("phi is not multiplicative");
        }
    std::vector<T> theta;
    theta.reserve(g.size());
    for (auto [p, q] : g.reps) theta.push_back(target.sub(phi[p], phi[q]));
    // Well-defined by construction on normal forms; the factorization
    // theta(gamma(a)) = phi(a) is the uniqueness witness.
    for (std::size_t a = 0; a < s.size(); ++a)
        if (!target.eq(theta[g.gamma(a)], phi[a]))
            throw std::logic_error("universal property violated");
    return theta;
}

// Cancellative interface: an (infinite) semiring with decidable equality.
// Pair equivalence degenerates to p + q' = p' + q.
template <class T>
struct CancellativeSemiring {
    std::function<T(const T&, const T&)> add, mul;
    std::function<bool(const T&, const T&)> eq;
    T zero, one;
};

template <class T>
struct GrothPair {
    T p, q;
};

template <class T>
GrothPair<T> groth_of(const CancellativeSemiring<T>& s, const T& a) {
    return {a, s.zero};
}

template <class T>
bool groth_eq(const CancellativeSemiring<T>& s, const GrothPair<T>& x,
              const GrothPair<T>& y) {
    return s.eq(s.add(x.p, y.q), s.add(y.p, x.q));
}

template <class T>
GrothPair<T> groth_add(const CancellativeSemiring<T>& s, const GrothPair<T>& x,
                       const GrothPair<T>& y) {
    return {s.add(x.p, y.p), s.add(x.q, y.q)};
}

template <class T>
GrothPair<T> groth_neg(const GrothPair<T>& x) {
    return {x.q, x.p};
}

template <class T>
GrothPair<T> groth_mul(const CancellativeSemiring<T>& s, const GrothPair<T>& x,
                       const GrothPair<T>& y) {
    return {s.add(s.mul(x.p, y.p), s.mul(x.q, y.q)),
            s.add(s.mul(x.p, y.q), s.mul(x.q, y.p))};
}

// theta([a,b]) = phi(a) - phi(b) for a semiring morphism phi out of a
// cancellative semiring; morphism-ness is the caller's obligation here
// (the domain is infinite).
template <class T, class U>
U groth_extend(const GrothPair<T>& x, const RingOps<U>& target,
               const std::function<U(const T&)>& phi) {
    return target.sub(phi(x.p), phi(x.q));
}

}  // namespace k0
