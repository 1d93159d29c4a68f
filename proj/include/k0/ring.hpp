#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k0/int_util.hpp"

namespace k0 {

enum class RingKind { FiniteProduct, QuadOrder, SemilocalQuadOrder };

struct LocalFactor {
    i64 prime;
    int exp;
    i64 modulus;  // prime^exp

    friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

// Either a finite product of local residue rings Z/p^k, or a maximal
// imaginary quadratic order O(D) (optionally localized at a finite set of
// rational primes).
struct ConcreteRing {
    RingKind kind = RingKind::FiniteProduct;
    std::vector<LocalFactor> factors;    // FiniteProduct, sorted (prime, exp)
    i64 discriminant = 0;                // QuadOrder / SemilocalQuadOrder
    std::vector<i64> localized_primes;   // SemilocalQuadOrder, sorted

    bool is_quad() const { return kind != RingKind::FiniteProduct; }

    // Product of the local moduli (cardinality of a finite-product ring).
    i64 total_modulus() const;

    // omega = sqrt(D/4) for D = 0 mod 4, (1+sqrt(D))/2 for D = 1 mod 4.
    // Trace and norm of omega: omega^2 = omega_trace*omega - omega_norm.
    i64 omega_trace() const;
    i64 omega_norm() const;

    friend bool operator==(const ConcreteRing&, const ConcreteRing&) = default;
};

// Element of a ConcreteRing. For finite products: one residue per local
// factor, each in [0, p^k). For quadratic orders: x + y*omega with integer
// coordinates (S-integral rationals in the semilocal case).
struct RingElement {
    std::vector<i64> residues;
    Rational x, y;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

bool is_fundamental_discriminant(i64 d);

ConcreteRing parse_ring(const std::string& spec);
std::string render_ring(const ConcreteRing& r);

RingElement ring_zero(const ConcreteRing& r);
RingElement ring_one(const ConcreteRing& r);
RingElement ring_from_integer(const ConcreteRing& r, i64 n);
RingElement quad_element(Rational x, Rational y);

bool element_valid(const ConcreteRing& r, const RingElement& e);

RingElement ring_add(const ConcreteRing& r, const RingElement& a, const RingElement& b);
RingElement ring_sub(const ConcreteRing& r, const RingElement& a, const RingElement& b);
RingElement ring_mul(const ConcreteRing& r, const RingElement& a, const RingElement& b);
RingElement ring_neg(const ConcreteRing& r, const RingElement& a);

bool is_idempotent(const ConcreteRing& r, const RingElement& e);

// All solutions of e^2 = e; 2^c elements for a product of c local rings,
// {0, 1} for a quadratic order.
std::vector<RingElement> idempotents(const ConcreteRing& r);

// CRT-combined residue mod total_modulus() (finite products only).
i64 element_to_integer(const ConcreteRing& r, const RingElement& e);

std::string render_element(const ConcreteRing& r, const RingElement& e);

// Morphism between finite-product rings: each target factor pulls back from
// one source factor whose modulus it divides (same prime, exp <= source exp).
// Compositions of quotients, projections, diagonals and CRT isomorphisms all
// take this shape.
struct RingMorphism {
    ConcreteRing source;
    ConcreteRing target;
    std::vector<std::size_t> assignment;  // per target factor: source index

    RingElement apply(const RingElement& x) const;
    bool is_identity() const;
};

// Checks divisibility of moduli and the morphism laws (exhaustively for
// small rings, sampled otherwise). Throws on violation.
void validate_morphism(const RingMorphism& f);

RingMorphism identity_morphism(const ConcreteRing& r);
RingMorphism compose(const RingMorphism& g, const RingMorphism& f);

// Textual forms: "diag: Z/2 -> Z/2 x Z/2", "quot: Z/4 -> Z/2",
// "crt: Z/12 -> Z/4 x Z/3", "id: R -> R", "map[0,1]: R -> R'".
RingMorphism parse_morphism(const std::string& spec);

}  // namespace k0
