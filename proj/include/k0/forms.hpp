#pragma once

#include <vector>

#include "k0/int_util.hpp"

namespace k0 {

// Primitive positive definite binary quadratic form a*x^2 + b*x*y + c*y^2
// with b^2 - 4ac = D < 0. Reduced forms are the canonical labels for ideal
// classes.
struct QuadForm {
    i64 a = 1, b = 0, c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend auto operator<=>(const QuadForm& l, const QuadForm& r) {
        if (l.a != r.a) return l.a <=> r.a;
        if (l.b != r.b) return l.b <=> r.b;
        return l.c <=> r.c;
    }
};

QuadForm principal_form(i64 d);

bool is_reduced(const QuadForm& f);

// Gauss reduction. `steps`, when given, receives the number of normalize /
// swap rounds taken (capped; the cap triggering is a bug).
QuadForm form_reduce(QuadForm f, int* steps = nullptr);

// All reduced primitive forms of discriminant d < 0 (d = 0 or 1 mod 4),
// sorted. Serial reference implementation.
std::vector<QuadForm> enumerate_reduced_forms_serial(i64 d);

// Same result, OpenMP-parallel over the a-range.
std::vector<QuadForm> enumerate_reduced_forms(i64 d);

std::string render_form(const QuadForm& f);
QuadForm parse_form(const std::string& text);  // "form(a,b,c)"

}  // namespace k0
