#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k0/forms.hpp"
#include "k0/ring.hpp"

namespace k0 {

// Fractional ideal of a maximal imaginary quadratic order, in HNF:
//   (num/den) * (a*Z + (b + omega)*Z)
// with a > 0, 0 <= b < a, a | N(b + omega), gcd(num, den) = 1.
// The num factor carries the non-primitive content (e.g. 2*O = 2*(Z + omega*Z)).
struct FractionalIdeal {
    i64 a = 1;
    i64 b = 0;
    i64 num = 1;
    i64 den = 1;

    bool is_integral() const { return den == 1; }
    friend bool operator==(const FractionalIdeal&, const FractionalIdeal&) = default;
};

// Z-module generated by elements of the fraction field; throws on the zero
// module or if the span is not an ideal of the order.
FractionalIdeal ideal_normalize(const ConcreteRing& order,
                                const std::vector<RingElement>& generators);

FractionalIdeal ideal_from_element(const ConcreteRing& order, const RingElement& x);
FractionalIdeal unit_ideal();

Rational ideal_norm(const ConcreteRing& order, const FractionalIdeal& i);

FractionalIdeal ideal_mul(const ConcreteRing& order, const FractionalIdeal& i,
                          const FractionalIdeal& j);
FractionalIdeal ideal_inv(const ConcreteRing& order, const FractionalIdeal& i);
FractionalIdeal ideal_conj(const ConcreteRing& order, const FractionalIdeal& i);
FractionalIdeal ideal_scale(const ConcreteRing& order, const FractionalIdeal& i,
                            Rational t);

bool ideal_contains(const ConcreteRing& order, const FractionalIdeal& i,
                    const RingElement& x);

// The class-representing form of an ideal (reduced).
QuadForm ideal_to_form(const ConcreteRing& order, const FractionalIdeal& i);
// An ideal whose class is represented by the (not necessarily reduced) form.
FractionalIdeal form_to_ideal(const ConcreteRing& order, const QuadForm& f);

// A generator x with I = Rx when the class of I is trivial.
std::optional<RingElement> is_principal(const ConcreteRing& order,
                                        const FractionalIdeal& i);

// Prime ideal above a rational prime, with ramification data.
struct PrimeAbove {
    FractionalIdeal ideal;  // p*O when inert
    i64 p;
    int e;  // ramification index
    int f;  // residue degree
    bool inert() const { return f == 2; }
};

// The primes above p: one (inert or ramified) or two (split).
std::vector<PrimeAbove> primes_above(const ConcreteRing& order, i64 p);

// P-adic valuation of a fractional ideal / a nonzero element.
i64 ideal_valuation(const ConcreteRing& order, FractionalIdeal i, const PrimeAbove& P);
i64 element_valuation(const ConcreteRing& order, const RingElement& x,
                      const PrimeAbove& P);

// Constructive semilocal principalization: returns x with
// I * S^{-1}O = x * S^{-1}O, verified by valuations at all primes over S.
RingElement principalize_semilocal(const ConcreteRing& semilocal_order,
                                   const FractionalIdeal& i);

// Exactness report for 0 -> Cl(R) -> Pic(R) -> Pic(T(R)).
struct ClPicReport {
    std::string ring;
    i64 cl_order = 1;
    i64 pic_order = 1;
    bool exact = false;
    std::string note;
};

ClPicReport cl_pic_exact_check(const ConcreteRing& r);

std::string render_ideal(const FractionalIdeal& i);
// "ideal(a, b)" or "ideal(a, b)/den" (primitive HNF part over a denominator).
FractionalIdeal parse_ideal(const ConcreteRing& order, const std::string& text);

}  // namespace k0
