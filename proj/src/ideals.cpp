#include "k0/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k0 {

namespace {

void require_quad(const ConcreteRing& r) {
    if (!r.is_quad()) throw std::invalid_argument("quadratic order expected");
}

RingElement conj(const ConcreteRing& r, const RingElement& z) {
    // conj(x + y*omega) = (x + t*y) - y*omega
    RingElement c;
    c.x = z.x + z.y * Rational(r.omega_trace());
    c.y = -z.y;
    return c;
}

Rational norm(const ConcreteRing& r, const RingElement& z) {
    return z.x * z.x + z.x * z.y * Rational(r.omega_trace()) +
           z.y * z.y * Rational(r.omega_norm());
}

// N(b + omega) for integer b.
i64 norm_b_omega(const ConcreteRing& r, i64 b) {
    return b * b + r.omega_trace() * b + r.omega_norm();
}

struct Vec2 {
    i64 u, v;  // coordinates in the basis {1, omega}
};

}  // namespace

FractionalIdeal unit_ideal() { return FractionalIdeal{1, 0, 1, 1}; }

FractionalIdeal ideal_normalize(const ConcreteRing& order,
                                const std::vector<RingElement>& generators) {
    require_quad(order);
    // Collect the Z-module basis candidates g, g*omega for each generator.
    std::vector<RingElement> gens;
    RingElement omega = quad_element(Rational(0), Rational(1));
    for (const auto& g : generators) {
        if (g.x.is_zero() && g.y.is_zero()) continue;
        gens.push_back(g);
        gens.push_back(ring_mul(order, g, omega));
    }
    if (gens.empty()) throw std::invalid_argument("zero module");

    i64 scale = 1;  // common denominator
    for (const auto& g : gens) scale = std::lcm(scale, std::lcm(g.x.den, g.y.den));
    std::vector<Vec2> vecs;
    for (const auto& g : gens)
        vecs.push_back({g.x.num * (scale / g.x.den), g.y.num * (scale / g.y.den)});

    // Column HNF of the rank-2 lattice: reduce to {(a0, 0), (b0, c)}.
    Vec2 w{0, 0};
    for (auto& t : vecs) {
        if (t.v == 0) continue;
        if (w.v == 0) {
            w = t;
            t = {0, 0};
            continue;
        }
        i64 s1, s2;
        i64 g = ext_gcd(w.v, t.v, s1, s2);
        Vec2 nw{s1 * w.u + s2 * t.u, g};
        i64 q1 = w.v / g, q2 = t.v / g;
        // Replace the pair by (combination achieving gcd, reduced leftover).
        t = {q1 * t.u - q2 * w.u, 0};
        w = nw;
    }
    if (w.v == 0) throw std::invalid_argument("module has rank < 2: not an ideal");
    if (w.v < 0) { w.u = -w.u; w.v = -w.v; }
    i64 a0 = 0;
    for (const auto& t : vecs) a0 = std::gcd(a0, t.u < 0 ? -t.u : t.u);
    if (a0 == 0) throw std::invalid_argument("module has rank < 2: not an ideal");
    i64 b0 = mod_pos(w.u, a0);
    i64 c = w.v;

    // O-module closure: omega * (b0 + c*omega) must lie in the lattice, and
    // omega * a0 likewise.
    auto member = [&](i64 u, i64 v) {
        if (v % c) return false;
        return (u - (v / c) * b0) % a0 == 0;
    };
    i64 t = order.omega_trace(), nw2 = order.omega_norm();
    if (!member(-c * nw2, b0 + c * t) || !member(0, a0) || a0 % c || b0 % c)
        throw std::invalid_argument("module is not an ideal of the order");

    FractionalIdeal id;
    id.a = a0 / c;
    id.b = mod_pos(b0 / c, id.a);
    i64 g = std::gcd(c, scale);
    id.num = c / g;
    id.den = scale / g;
    if (norm_b_omega(order, id.b) % id.a)
        throw std::logic_error("HNF invariant violated: a does not divide N(b+omega)");
    return id;
}

FractionalIdeal ideal_from_element(const ConcreteRing& order, const RingElement& x) {
    return ideal_normalize(order, {x});
}

Rational ideal_norm(const ConcreteRing& order, const FractionalIdeal& i) {
    require_quad(order);
    Rational s(i.num, i.den);
    return s * s * Rational(i.a);
}

namespace {

// Basis of the ideal as field elements.
std::vector<RingElement> ideal_basis(const FractionalIdeal& i) {
    Rational s(i.num, i.den);
    return {quad_element(s * Rational(i.a), Rational(0)),
            quad_element(s * Rational(i.b), s)};
}

}  // namespace

FractionalIdeal ideal_mul(const ConcreteRing& order, const FractionalIdeal& i,
                          const FractionalIdeal& j) {
    std::vector<RingElement> gens;
    for (const auto& x : ideal_basis(i))
        for (const auto& y : ideal_basis(j))
            gens.push_back(ring_mul(order, x, y));
    return ideal_normalize(order, gens);
}

FractionalIdeal ideal_conj(const ConcreteRing& order, const FractionalIdeal& i) {
    std::vector<RingElement> gens;
    for (const auto& x : ideal_basis(i)) gens.push_back(conj(order, x));
    return ideal_normalize(order, gens);
}

FractionalIdeal ideal_scale(const ConcreteRing& order, const FractionalIdeal& i,
                            Rational t) {
    if (t.is_zero()) throw std::invalid_argument("scaling by zero");
    std::vector<RingElement> gens;
    RingElement te = quad_element(t, Rational(0));
    for (const auto& x : ideal_basis(i)) gens.push_back(ring_mul(order, x, te));
    return ideal_normalize(order, gens);
}

FractionalIdeal ideal_inv(const ConcreteRing& order, const FractionalIdeal& i) {
    // I^{-1} = conj(I) / N(I)
    Rational n = ideal_norm(order, i);
    return ideal_scale(order, ideal_conj(order, i), Rational(1) / n);
}

bool ideal_contains(const ConcreteRing& order, const FractionalIdeal& i,
                    const RingElement& x) {
    require_quad(order);
    // x in (num/den)(aZ + (b+omega)Z) iff z := x*den/num has integer omega
    // coordinate v and a | (z.x - v*b).
    Rational inv_scale(i.den, i.num);
    Rational zx = x.x * inv_scale;
    Rational zy = x.y * inv_scale;
    if (!zy.is_integer()) return false;
    Rational rem = zx - Rational(zy.num * i.b);
    if (!rem.is_integer()) return false;
    return rem.num % i.a == 0;
}

QuadForm ideal_to_form(const ConcreteRing& order, const FractionalIdeal& i) {
    require_quad(order);
    QuadForm f{i.a, 2 * i.b + order.omega_trace(), norm_b_omega(order, i.b) / i.a};
    if (f.discriminant() != order.discriminant)
        throw std::logic_error("form discriminant mismatch");
    return form_reduce(f);
}

FractionalIdeal form_to_ideal(const ConcreteRing& order, const QuadForm& f0) {
    require_quad(order);
    QuadForm f = form_reduce(f0);
    if (f.discriminant() != order.discriminant)
        throw std::invalid_argument("form has wrong discriminant");
    i64 t = order.omega_trace();
    // invert B = 2b + t modulo 2a
    i64 b = mod_pos((f.b - t) / 2, f.a);
    FractionalIdeal id{f.a, b, 1, 1};
    if (norm_b_omega(order, id.b) % id.a)
        throw std::logic_error("form_to_ideal: invariant violated");
    return id;
}

std::optional<RingElement> is_principal(const ConcreteRing& order,
                                        const FractionalIdeal& i) {
    require_quad(order);
    if (ideal_to_form(order, i) != form_reduce(principal_form(order.discriminant)))
        return std::nullopt;
    // Search x = s + v*omega in the primitive part with N(x) = a.
    i64 a = i.a, b = i.b;
    i64 t = order.omega_trace(), nw = order.omega_norm();
    i64 dabs = -order.discriminant;
    i64 vmax = isqrt(4 * a / dabs) + 1;
    for (i64 v = -vmax; v <= vmax; ++v) {
        // s^2 + t*s*v + nw*v^2 = a
        i64 disc = t * t * v * v - 4 * (nw * v * v - a);
        if (disc < 0) continue;
        i64 rt = isqrt(disc);
        if (rt * rt != disc) continue;
        for (i64 s : {(-t * v + rt) / 2, (-t * v - rt) / 2}) {
            if (2 * s != -t * v + rt && 2 * s != -t * v - rt) continue;  // parity
            if (s == 0 && v == 0) continue;
            if ((s - v * b) % a) continue;  // must lie in the ideal
            Rational sc(i.num, i.den);
            return quad_element(sc * Rational(s), sc * Rational(v));
        }
    }
    throw std::logic_error("principal class but no generator found");
}

std::vector<PrimeAbove> primes_above(const ConcreteRing& order, i64 p) {
    require_quad(order);
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    std::vector<i64> roots;
    for (i64 r = 0; r < p; ++r)
        if (norm_b_omega(order, r) % p == 0) roots.push_back(r);
    std::vector<PrimeAbove> out;
    if (roots.empty()) {
        out.push_back({FractionalIdeal{1, 0, p, 1}, p, 1, 2});
        return out;
    }
    bool ramified = mod_pos(order.discriminant, p) == 0;
    if (ramified) {
        out.push_back({FractionalIdeal{p, roots.front(), 1, 1}, p, 2, 1});
        return out;
    }
    if (roots.size() != 2) throw std::logic_error("split prime must have two roots");
    for (i64 r : roots) out.push_back({FractionalIdeal{p, r, 1, 1}, p, 1, 1});
    return out;
}

i64 ideal_valuation(const ConcreteRing& order, FractionalIdeal i, const PrimeAbove& P) {
    auto vp = [](i64 n, i64 p) {
        i64 v = 0;
        while (n % p == 0) { n /= p; ++v; }
        return v;
    };
    // Scalar part: v_P(m*O) = e * v_p(m) (split/ramified), v_p(m) (inert).
    i64 scalar_mult = P.inert() ? 1 : P.e;
    i64 v = scalar_mult * (vp(i.num, P.p) - vp(i.den, P.p));
    FractionalIdeal prim{i.a, i.b, 1, 1};
    FractionalIdeal pinv = ideal_inv(order, P.ideal);
    while (true) {
        bool inside = true;
        for (const auto& g : ideal_basis(prim))
            if (!ideal_contains(order, P.ideal, g)) { inside = false; break; }
        if (!inside) break;
        prim = ideal_mul(order, prim, pinv);
        ++v;
    }
    return v;
}

i64 element_valuation(const ConcreteRing& order, const RingElement& x,
                      const PrimeAbove& P) {
    return ideal_valuation(order, ideal_from_element(order, x), P);
}

RingElement principalize_semilocal(const ConcreteRing& semilocal_order,
                                   const FractionalIdeal& ideal) {
    if (semilocal_order.kind != RingKind::SemilocalQuadOrder)
        throw std::invalid_argument("semilocal quadratic order expected");
    ConcreteRing order;
    order.kind = RingKind::QuadOrder;
    order.discriminant = semilocal_order.discriminant;

    std::vector<PrimeAbove> maximal;
    for (i64 p : semilocal_order.localized_primes)
        for (const auto& P : primes_above(order, p)) maximal.push_back(P);

    FractionalIdeal inv = ideal_inv(order, ideal);

    // For each maximal ideal M_k pick y_k in I^{-1} of minimal M_k-valuation.
    auto pick_min_val = [&](const FractionalIdeal& i, const PrimeAbove& P,
                            i64 target) -> RingElement {
        auto basis = ideal_basis(i);
        for (i64 al = -2; al <= 2; ++al) {
            for (i64 be = -2; be <= 2; ++be) {
                if (al == 0 && be == 0) continue;
                RingElement z = quad_element(
                    basis[0].x * Rational(al) + basis[1].x * Rational(be),
                    basis[0].y * Rational(al) + basis[1].y * Rational(be));
                if (element_valuation(order, z, P) == target) return z;
            }
        }
        throw std::logic_error("no element of minimal valuation found");
    };

    std::size_t n = maximal.size();
    std::vector<RingElement> ys;
    std::vector<i64> ideal_vals;
    for (std::size_t k = 0; k < n; ++k) {
        i64 vI = ideal_valuation(order, ideal, maximal[k]);
        ideal_vals.push_back(vI);
        ys.push_back(pick_min_val(inv, maximal[k], -vI));
    }

    // a_k: inside every M_i except M_k.
    auto pick_ak = [&](std::size_t k) -> RingElement {
        for (i64 bound = 1; bound <= 64; bound *= 2) {
            for (i64 u = -bound; u <= bound; ++u) {
                for (i64 v = -bound; v <= bound; ++v) {
                    if (u == 0 && v == 0) continue;
                    RingElement z = quad_element(Rational(u), Rational(v));
                    bool ok = true;
                    for (std::size_t i = 0; i < n && ok; ++i) {
                        i64 val = element_valuation(order, z, maximal[i]);
                        ok = (i == k) ? (val == 0) : (val >= 1);
                    }
                    if (ok) return z;
                }
            }
        }
        throw std::logic_error("CRT element search exhausted");
    };

    RingElement y = quad_element(Rational(0), Rational(0));
    for (std::size_t k = 0; k < n; ++k)
        y = ring_add(order, y, ring_mul(order, pick_ak(k), ys[k]));

    Rational ny = norm(order, y);
    if (ny.is_zero()) throw std::logic_error("degenerate combination");
    RingElement yc = conj(order, y);
    RingElement gen = quad_element(yc.x / ny, yc.y / ny);  // y^{-1}

    // Verify: the generator matches I at every prime over S.
    for (std::size_t k = 0; k < n; ++k)
        if (element_valuation(order, gen, maximal[k]) != ideal_vals[k])
            throw std::logic_error("principalization verification failed");
    return gen;
}

ClPicReport cl_pic_exact_check(const ConcreteRing& r) {
    ClPicReport rep;
    rep.ring = render_ring(r);
    if (r.kind == RingKind::FiniteProduct) {
        // Every non-zerodivisor of a finite ring is a unit, so T(R) = R,
        // and a finite ring is semilocal: Cl and Pic are both trivial.
        rep.cl_order = 1;
        rep.pic_order = 1;
        rep.exact = true;
        rep.note = "semilocal: Cl = Pic = 0, Pic(T(R)) = Pic(R)";
        return rep;
    }
    if (r.kind == RingKind::SemilocalQuadOrder) {
        rep.cl_order = 1;
        rep.pic_order = 1;
        rep.exact = true;
        rep.note = "semilocal localization: Cl = Pic = 0";
        return rep;
    }
    // Domain: T(R) is the fraction field, Pic(T(R)) = 0, so Cl = Pic = Cl(D).
    i64 h = static_cast<i64>(enumerate_reduced_forms(r.discriminant).size());
    rep.cl_order = h;
    rep.pic_order = h;
    rep.exact = true;
    rep.note = "T(R) is a field: Cl -> Pic is an isomorphism";
    return rep;
}

std::string render_ideal(const FractionalIdeal& i) {
    std::string s;
    if (i.num != 1) s += std::to_string(i.num) + "*";
    s += "ideal(" + std::to_string(i.a) + ", " + std::to_string(i.b) + ")";
    if (i.den != 1) s += "/" + std::to_string(i.den);
    return s;
}

FractionalIdeal parse_ideal(const ConcreteRing& order, const std::string& text) {
    require_quad(order);
    std::string text2 = text;
    FractionalIdeal id;
    std::size_t star = text2.find('*');
    if (star != std::string::npos) {
        id.num = std::stoll(text2.substr(0, star));
        if (id.num == 0) throw std::invalid_argument("zero ideal");
        text2 = text2.substr(star + 1);
    }
    std::size_t lb = text2.find('(');
    std::size_t rb = text2.find(')');
    if (text2.rfind("ideal", 0) != 0 || lb == std::string::npos || rb == std::string::npos)
        throw std::invalid_argument("expected [n*]ideal(a, b) or [n*]ideal(a, b)/den");
    std::string body = text2.substr(lb + 1, rb - lb - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected ideal(a, b)");
    id.a = std::stoll(body.substr(0, comma));
    id.b = std::stoll(body.substr(comma + 1));
    std::string rest = text2.substr(rb + 1);
    if (!rest.empty()) {
        if (rest[0] != '/') throw std::invalid_argument("expected /den suffix");
        id.den = std::stoll(rest.substr(1));
        if (id.den <= 0) throw std::invalid_argument("denominator must be positive");
    }
    if (id.a <= 0) throw std::invalid_argument("a must be positive");
    if (id.num < 0) id.num = -id.num;
    i64 g = std::gcd(id.num, id.den);
    id.num /= g;
    id.den /= g;
    id.b = mod_pos(id.b, id.a);
    if (norm_b_omega(order, id.b) % id.a)
        throw std::invalid_argument("not an ideal: a does not divide N(b+omega)");
    return id;
}

}  // namespace k0
