#include "k0/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k0 {

namespace {

void check_discriminant(i64 d) {
    if (d >= 0 || (mod_pos(d, 4) != 0 && mod_pos(d, 4) != 1))
        throw std::invalid_argument("discriminant must be negative, 0 or 1 mod 4");
}

// Reduced forms with a fixed first coefficient.
void forms_with_a(i64 d, i64 a, std::vector<QuadForm>& out) {
    for (i64 b = (d % 2 == 0) ? 0 : 1; b <= a; b += 2) {
        i64 num = b * b - d;
        if (num % (4 * a)) continue;
        i64 c = num / (4 * a);
        if (c < a) continue;
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        out.push_back({a, b, c});
        if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
}

}  // namespace

QuadForm principal_form(i64 d) {
    check_discriminant(d);
    if (mod_pos(d, 4) == 0) return {1, 0, -d / 4};
    return {1, 1, (1 - d) / 4};
}

bool is_reduced(const QuadForm& f) {
    i64 ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

QuadForm form_reduce(QuadForm f, int* steps) {
    if (f.discriminant() >= 0) throw std::invalid_argument("form not definite");
    if (f.a < 0) { f.a = -f.a; f.c = -f.c; }  // positive definite representative
    auto floor_div = [](i64 x, i64 y) {
        i64 q = x / y, r = x % y;
        return (r != 0 && (r < 0) != (y < 0)) ? q - 1 : q;
    };
    int n = 0;
    const int cap = 256;
    while (!is_reduced(f)) {
        if (++n > cap) throw std::logic_error("reduction step cap exceeded");
        // Normalize: translate b into (-a, a].
        if (f.b > f.a || f.b <= -f.a) {
            i64 t = floor_div(f.b + f.a, 2 * f.a);
            if (f.b - 2 * t * f.a == -f.a) --t;  // land in (-a, a]
            // (a, b, c) -> (a, b - 2ta, a t^2 - b t + c)
            f.c += f.a * t * t - f.b * t;
            f.b -= 2 * t * f.a;
        } else if (f.a > f.c) {
            // Swap: (a, b, c) -> (c, -b, a)
            std::swap(f.a, f.c);
            f.b = -f.b;
        } else {
            // |b| <= a <= c with a negative b on the boundary.
            f.b = -f.b;
        }
    }
    if (steps) *steps = n;
    return f;
}

std::vector<QuadForm> enumerate_reduced_forms_serial(i64 d) {
    check_discriminant(d);
    std::vector<QuadForm> out;
    i64 amax = isqrt(-d / 3);
    for (i64 a = 1; a <= amax; ++a) forms_with_a(d, a, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QuadForm> enumerate_reduced_forms(i64 d) {
    check_discriminant(d);
    i64 amax = isqrt(-d / 3);
    std::vector<QuadForm> out;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<QuadForm> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (i64 a = 1; a <= amax; ++a) forms_with_a(d, a, local);
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
#else
    for (i64 a = 1; a <= amax; ++a) forms_with_a(d, a, out);
#endif
    std::sort(out.begin(), out.end());
    return out;
}

std::string render_form(const QuadForm& f) {
    return "form(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," +
           std::to_string(f.c) + ")";
}

QuadForm parse_form(const std::string& text) {
    std::size_t lb = text.find('(');
    std::size_t rb = text.rfind(')');
    if (text.rfind("form", 0) != 0 || lb == std::string::npos || rb == std::string::npos)
        throw std::invalid_argument("expected form(a,b,c)");
    std::string body = text.substr(lb + 1, rb - lb - 1);
    QuadForm f;
    std::size_t c1 = body.find(',');
    std::size_t c2 = body.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("expected form(a,b,c)");
    f.a = std::stoll(body.substr(0, c1));
    f.b = std::stoll(body.substr(c1 + 1, c2 - c1 - 1));
    f.c = std::stoll(body.substr(c2 + 1));
    return f;
}

}  // namespace k0
