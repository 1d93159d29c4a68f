#include "k0/k0.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "k0/grothendieck.hpp"

namespace k0 {

namespace {

std::size_t cls_inv(const FiniteAbelianGroup& g, std::size_t x) {
    for (std::size_t y = 0; y < g.size(); ++y)
        if (g.table[x][y] == g.identity) return y;
    throw std::logic_error("no inverse");
}

std::size_t cls_pow(const FiniteAbelianGroup& g, std::size_t x, i64 n) {
    if (n < 0) return group_power(g, cls_inv(g, x), -n);
    return group_power(g, x, n);
}

void check_base(const K0Ring& k, const K0Elem& x) {
    if (k.shape == K0Shape::FreeAbelian && x.coords.size() != k.components)
        throw std::invalid_argument("K0 element of wrong shape");
}

// Multiplication table of the finite unit group, for structure extraction.
FiniteAbelianGroup unit_group_table(const K0Ring& k, const std::vector<K0Elem>& units) {
    FiniteAbelianGroup g;
    g.table.assign(units.size(), std::vector<std::size_t>(units.size()));
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (units[i] == k0_one(k)) g.identity = i;
        for (std::size_t j = 0; j < units.size(); ++j) {
            K0Elem p = k0_mul(k, units[i], units[j]);
            auto it = std::find(units.begin(), units.end(), p);
            if (it == units.end()) throw std::logic_error("units not closed");
            g.table[i][j] = static_cast<std::size_t>(it - units.begin());
        }
    }
    return g;
}

}  // namespace

K0Ring k0_of_ring(const ConcreteRing& r) {
    K0Ring k;
    k.base = r;
    switch (r.kind) {
        case RingKind::FiniteProduct:
            k.shape = K0Shape::FreeAbelian;
            k.components = r.factors.size();
            break;
        case RingKind::SemilocalQuadOrder:
            // Principalization kills Pic; one connected component.
            k.shape = K0Shape::FreeAbelian;
            k.components = 1;
            break;
        case RingKind::QuadOrder:
            k.shape = K0Shape::ZPlusCl;
            k.cl = class_group(r.discriminant);
            break;
    }
    return k;
}

K0Elem k0_zero(const K0Ring& k) { return k0_from_integer(k, 0); }
K0Elem k0_one(const K0Ring& k) { return k0_from_integer(k, 1); }

K0Elem k0_from_integer(const K0Ring& k, i64 n) {
    K0Elem x;
    if (k.shape == K0Shape::FreeAbelian)
        x.coords.assign(k.components, n);
    else {
        x.r = n;
        x.cls = k.cl->group.identity;
    }
    return x;
}

K0Elem k0_add(const K0Ring& k, const K0Elem& x, const K0Elem& y) {
    check_base(k, x);
    check_base(k, y);
    K0Elem z = x;
    if (k.shape == K0Shape::FreeAbelian) {
        for (std::size_t i = 0; i < z.coords.size(); ++i) z.coords[i] += y.coords[i];
    } else {
        z.r += y.r;
        z.cls = k.cl->group.table[x.cls][y.cls];
    }
    return z;
}

K0Elem k0_neg(const K0Ring& k, const K0Elem& x) {
    K0Elem z = x;
    if (k.shape == K0Shape::FreeAbelian) {
        for (auto& v : z.coords) v = -v;
    } else {
        z.r = -x.r;
        z.cls = cls_inv(k.cl->group, x.cls);
    }
    return z;
}

K0Elem k0_sub(const K0Ring& k, const K0Elem& x, const K0Elem& y) {
    return k0_add(k, x, k0_neg(k, y));
}

K0Elem k0_mul(const K0Ring& k, const K0Elem& x, const K0Elem& y) {
    check_base(k, x);
    check_base(k, y);
    K0Elem z = x;
    if (k.shape == K0Shape::FreeAbelian) {
        for (std::size_t i = 0; i < z.coords.size(); ++i) z.coords[i] *= y.coords[i];
    } else {
        // (r1,c1)(r2,c2) = (r1 r2, r1.c2 + r2.c1), Cl written additively
        z.r = x.r * y.r;
        z.cls = k.cl->group.table[cls_pow(k.cl->group, y.cls, x.r)]
                                 [cls_pow(k.cl->group, x.cls, y.r)];
    }
    return z;
}

K0Elem k0_class(const K0Ring& k, const ProjModule& m) {
    K0Elem x;
    if (k.shape == K0Shape::FreeAbelian) {
        if (m.quad) {
            // semilocal order: the class is already trivialized
            x.coords.assign(1, m.rank);
        } else {
            if (m.ranks.size() != k.components)
                throw std::invalid_argument("module over a different base");
            x.coords = m.ranks;
        }
        return x;
    }
    if (!m.quad) throw std::invalid_argument("module over a different base");
    x.r = m.rank;
    x.cls = k.cl->index_of(m.cls);
    return x;
}

H0Element k0_to_h0(const K0Ring& k, const K0Elem& x) {
    check_base(k, x);
    if (k.shape == K0Shape::FreeAbelian) return H0Element{x.coords};
    return H0Element{{x.r}};
}

K0Elem h0_section(const K0Ring& k, const H0Element& f) {
    K0Elem x;
    if (k.shape == K0Shape::FreeAbelian) {
        if (f.values.size() != k.components)
            throw std::invalid_argument("H0 element of wrong shape");
        x.coords = f.values;
        return x;
    }
    if (f.values.size() != 1) throw std::invalid_argument("H0 element of wrong shape");
    x.r = f.values[0];
    x.cls = k.cl->group.identity;
    return x;
}

std::vector<K0Elem> k0_nilradical(const K0Ring& k) {
    std::vector<K0Elem> nil;
    if (k.shape == K0Shape::FreeAbelian) {
        nil.push_back(k0_zero(k));
    } else {
        for (std::size_t c = 0; c < k.cl->group.size(); ++c) {
            K0Elem x;
            x.r = 0;
            x.cls = c;
            nil.push_back(x);
        }
    }
    for (const auto& x : nil)
        if (!(k0_mul(k, x, x) == k0_zero(k)))
            throw std::logic_error("nilradical element does not square to zero");
    return nil;
}

K0RedReport k0_red_check(const K0Ring& k) {
    K0RedReport rep;
    rep.nilradical_order = static_cast<i64>(k0_nilradical(k).size());
    // K0/nil = H0 through [M,N] |-> r_M - r_N: the map is a ring morphism
    // with kernel exactly the nilradical and an additive section, so it only
    // remains to check those facts on a window of elements.
    std::vector<K0Elem> window;
    for (i64 a = -2; a <= 2; ++a) {
        if (k.shape == K0Shape::FreeAbelian) {
            K0Elem x = k0_from_integer(k, a);
            for (std::size_t i = 0; i < k.components; ++i) {
                K0Elem y = x;
                y.coords[i] += 1;
                window.push_back(y);
            }
            window.push_back(x);
        } else {
            for (std::size_t c = 0; c < k.cl->group.size(); ++c) {
                K0Elem x;
                x.r = a;
                x.cls = c;
                window.push_back(x);
            }
        }
    }
    bool ok = true;
    std::vector<K0Elem> nil = k0_nilradical(k);
    for (const auto& x : window) {
        H0Element fx = k0_to_h0(k, x);
        ok = ok && (k0_to_h0(k, h0_section(k, fx)) == fx);
        // kernel = nilradical
        bool in_kernel = fx == h0_constant(k.base, 0);
        bool in_nil = std::find(nil.begin(), nil.end(), x) != nil.end();
        if (in_kernel != in_nil) ok = false;
        for (const auto& y : window) {
            ok = ok && (k0_to_h0(k, k0_add(k, x, y)) == h0_add(fx, k0_to_h0(k, y)));
            ok = ok && (k0_to_h0(k, k0_mul(k, x, y)) == h0_mul(fx, k0_to_h0(k, y)));
        }
    }
    rep.reduced_iso_h0 = ok;
    rep.note = rep.nilradical_order == 1 ? "K0(R) is reduced"
                                         : "nilradical {0} x Cl of order " +
                                               std::to_string(rep.nilradical_order);
    return rep;
}

std::vector<K0Elem> k0_units(const K0Ring& k) {
    std::vector<K0Elem> units;
    if (k.shape == K0Shape::FreeAbelian) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << k.components); ++mask) {
            K0Elem x;
            for (std::size_t i = 0; i < k.components; ++i)
                x.coords.push_back(mask >> i & 1 ? -1 : 1);
            units.push_back(x);
        }
    } else {
        for (i64 sign : {1, -1})
            for (std::size_t c = 0; c < k.cl->group.size(); ++c) {
                K0Elem x;
                x.r = sign;
                x.cls = c;
                units.push_back(x);
            }
    }
    for (const auto& u : units) {
        // inverse exhibited: u itself (FreeAbelian) or (r, -c)
        K0Elem inv = u;
        if (k.shape == K0Shape::ZPlusCl) inv.cls = cls_inv(k.cl->group, u.cls);
        if (!(k0_mul(k, u, inv) == k0_one(k)))
            throw std::logic_error("unit without inverse");
    }
    return units;
}

bool k0_is_unit(const K0Ring& k, const K0Elem& x) {
    if (k.shape == K0Shape::FreeAbelian) {
        for (i64 v : x.coords)
            if (v != 1 && v != -1) return false;
        return true;
    }
    return x.r == 1 || x.r == -1;
}

std::vector<K0Elem> k0_idempotents(const K0Ring& k) {
    std::vector<K0Elem> idems;
    if (k.shape == K0Shape::FreeAbelian) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << k.components); ++mask) {
            K0Elem x;
            for (std::size_t i = 0; i < k.components; ++i)
                x.coords.push_back(mask >> i & 1);
            idems.push_back(x);
        }
    } else {
        // (r,c)^2 = (r,c) forces r in {0,1} and c = 2rc, i.e. c = 0
        idems.push_back(k0_zero(k));
        idems.push_back(k0_one(k));
    }
    for (const auto& e : idems)
        if (!(k0_mul(k, e, e) == e)) throw std::logic_error("not idempotent");
    return idems;
}

K0Elem map_f(const K0Ring& k, const QuadForm& cls) {
    if (k.shape != K0Shape::ZPlusCl)
        throw std::invalid_argument("map_f: Pic is trivial here");
    K0Elem x;
    x.r = 1;
    x.cls = k.cl->index_of(form_reduce(cls));
    return x;
}

K0Elem map_h(const K0Ring& k, const RingElement& idem) {
    if (!is_idempotent(k.base, idem)) throw std::invalid_argument("map_h: not idempotent");
    // [R, Re + Re] = 1 - 2[Re]
    K0Elem re;
    if (k.shape == K0Shape::FreeAbelian && !k.base.is_quad()) {
        for (i64 v : idem.residues) re.coords.push_back(v ? 1 : 0);
    } else {
        ProjModule m = free_module(k.base, idem == ring_zero(k.base) ? 0 : 1);
        re = k0_class(k, m);
    }
    return k0_sub(k, k0_one(k), k0_add(k, re, re));
}

RingElement map_g(const K0Ring& k, const K0Elem& unit) {
    if (!k0_is_unit(k, unit)) throw std::invalid_argument("map_g: not a unit");
    H0Element rank = k0_to_h0(k, unit);
    // V(e) = (r_M - r_N)^{-1}({1}): e vanishes exactly where the rank is 1
    if (k.base.is_quad()) return ring_from_integer(k.base, rank.values[0] == 1 ? 0 : 1);
    RingElement e;
    for (i64 v : rank.values) e.residues.push_back(v == 1 ? 0 : 1);
    return e;
}

FghReport maps_fgh(const ConcreteRing& r) {
    K0Ring k = k0_of_ring(r);
    FghReport rep;
    std::vector<K0Elem> units = k0_units(k);
    std::vector<RingElement> idems = idempotents(r);
    rep.units_order = static_cast<i64>(units.size());
    rep.b_order = static_cast<i64>(idems.size());

    // image of f: the units with rank +1 and arbitrary class part
    std::vector<K0Elem> im_f;
    if (k.shape == K0Shape::ZPlusCl) {
        rep.pic_order = k.cl->h();
        rep.f_injective = true;
        std::set<std::pair<i64, std::size_t>> seen;
        for (const QuadForm& c : k.cl->elements) {
            K0Elem u = map_f(k, c);
            if (!k0_is_unit(k, u)) rep.f_injective = false;
            if (!seen.insert({u.r, u.cls}).second) rep.f_injective = false;
            im_f.push_back(u);
        }
    } else {
        rep.pic_order = 1;
        rep.f_injective = true;  // trivial Pic embeds as {1}
        im_f.push_back(k0_one(k));
    }

    // h and g
    rep.h_injective = true;
    rep.gh_identity = true;
    std::vector<K0Elem> im_h;
    for (const auto& e : idems) {
        K0Elem u = map_h(k, e);
        for (const auto& prev : im_h)
            if (prev == u) rep.h_injective = false;
        im_h.push_back(u);
        if (!(map_g(k, u) == e)) rep.gh_identity = false;
    }

    rep.g_surjective = true;
    for (const auto& e : idems) {
        bool hit = false;
        for (const auto& u : units)
            if (map_g(k, u) == e) hit = true;
        if (!hit) rep.g_surjective = false;
    }

    rep.gf_zero = true;
    for (const auto& u : im_f)
        if (!(map_g(k, u) == ring_zero(r))) rep.gf_zero = false;

    // ker g = im f (line bundle property: both families have it)
    std::vector<K0Elem> ker_g;
    for (const auto& u : units)
        if (map_g(k, u) == ring_zero(r)) ker_g.push_back(u);
    rep.ker_g_is_im_f = ker_g.size() == im_f.size();
    for (const auto& u : ker_g) {
        bool found = false;
        for (const auto& v : im_f)
            if (u == v) found = true;
        if (!found) rep.ker_g_is_im_f = false;
    }

    rep.split = rep.units_order == rep.pic_order * rep.b_order && rep.gh_identity;
    FiniteAbelianGroup g = unit_group_table(k, units);
    check_abelian_group(g);
    rep.unit_structure = invariant_factors(g);
    return rep;
}

BK0Report b_of_k0(const ConcreteRing& r) {
    K0Ring k = k0_of_ring(r);
    BK0Report rep;
    rep.ring_idems = idempotents(r);
    for (const auto& e : rep.ring_idems) {
        // e |-> [Re]
        K0Elem x;
        if (!r.is_quad()) {
            for (i64 v : e.residues) x.coords.push_back(v ? 1 : 0);
        } else {
            x = k0_class(k, free_module(r, e == ring_zero(r) ? 0 : 1));
        }
        rep.images.push_back(x);
    }
    std::vector<K0Elem> target = k0_idempotents(k);
    rep.bijective = rep.images.size() == target.size();
    for (const auto& x : rep.images) {
        bool in_target = std::find(target.begin(), target.end(), x) != target.end();
        std::size_t copies = static_cast<std::size_t>(
            std::count(rep.images.begin(), rep.images.end(), x));
        if (!in_target || copies != 1) rep.bijective = false;
    }
    // (+) carries over: [R(e (+) e')] = [Re] + [Re'] - 2[Re][Re']
    rep.additive = true;
    for (std::size_t i = 0; i < rep.ring_idems.size(); ++i)
        for (std::size_t j = 0; j < rep.ring_idems.size(); ++j) {
            RingElement x = bool_xor(r, rep.ring_idems[i], rep.ring_idems[j]);
            auto it = std::find(rep.ring_idems.begin(), rep.ring_idems.end(), x);
            if (it == rep.ring_idems.end()) {
                rep.additive = false;
                continue;
            }
            K0Elem lhs = rep.images[static_cast<std::size_t>(it - rep.ring_idems.begin())];
            K0Elem prod = k0_mul(k, rep.images[i], rep.images[j]);
            K0Elem rhs = k0_sub(k, k0_add(k, rep.images[i], rep.images[j]),
                                k0_add(k, prod, prod));
            if (!(lhs == rhs)) rep.additive = false;
        }
    return rep;
}

K0Elem K0Map::apply(const K0Elem& x) const {
    K0Elem y;
    for (std::size_t j = 0; j < assignment.size(); ++j)
        y.coords.push_back(x.coords[assignment[j]]);
    return y;
}

K0Map k0_map(const RingMorphism& f) {
    K0Map m;
    m.source = k0_of_ring(f.source);
    m.target = k0_of_ring(f.target);
    m.assignment = f.assignment;
    return m;
}

K0Map k0_compose(const K0Map& g, const K0Map& f) {
    K0Map m;
    m.source = f.source;
    m.target = g.target;
    for (std::size_t j : g.assignment) m.assignment.push_back(f.assignment[j]);
    return m;
}

LiftReport lifts_idempotents(const RingMorphism& f) {
    if (f.source.is_quad() || f.target.is_quad())
        throw std::invalid_argument("lifts_idempotents: finite products only");
    LiftReport rep;
    rep.ring_level = true;
    for (const auto& ep : idempotents(f.target)) {
        bool lifted = false;
        for (const auto& e : idempotents(f.source))
            if (f.apply(e) == ep) lifted = true;
        if (!lifted) {
            rep.ring_level = false;
            rep.missing.push_back(render_element(f.target, ep));
        }
    }
    K0Map km = k0_map(f);
    rep.k0_level = true;
    for (const auto& ep : k0_idempotents(km.target)) {
        bool lifted = false;
        for (const auto& e : k0_idempotents(km.source))
            if (km.apply(e) == ep) lifted = true;
        if (!lifted) rep.k0_level = false;
    }
    if (rep.ring_level != rep.k0_level)
        throw std::logic_error("ring-level and K0-level lifting disagree");
    return rep;
}

SurjReport k0_surjectivity_check(const RingMorphism& f) {
    SurjReport rep;
    LiftReport lift = lifts_idempotents(f);
    rep.preconditions = lift.ring_level;  // target K0 = Z^c is always reduced
    // The induced map sends x to (x_{a(j)})_j; it is onto Z^{c'} exactly when
    // no two target components pull back from the same source factor.
    std::set<std::size_t> sources(f.assignment.begin(), f.assignment.end());
    rep.surjective = sources.size() == f.assignment.size();
    if (rep.preconditions && !rep.surjective)
        throw std::logic_error("lifting without surjectivity");
    if (!rep.preconditions)
        rep.note = "precondition failed: idempotents do not lift; image is the "
                   "subgroup of vectors constant on assignment fibers";
    else
        rep.note = "image is all of Z^" + std::to_string(f.assignment.size());
    return rep;
}

K0CrossReport k0_cross_check(const ConcreteRing& r) {
    K0Ring k = k0_of_ring(r);
    CancellativeSemiring<ProjModule> s;
    s.add = [&r](const ProjModule& m, const ProjModule& n) { return direct_sum(r, m, n); };
    s.mul = [&r](const ProjModule& m, const ProjModule& n) { return tensor(r, m, n); };
    s.eq = [](const ProjModule& m, const ProjModule& n) { return m == n; };
    s.zero = zero_module(r);
    s.one = free_module(r, 1);

    // A window of projective classes: ranks up to 2 per component, every
    // Steinitz class with rank up to 2.
    std::vector<ProjModule> window;
    if (!r.is_quad()) {
        std::size_t c = r.factors.size();
        std::vector<i64> v(c, 0);
        while (true) {
            window.push_back(module_from_ranks(v));
            std::size_t i = 0;
            while (i < c && v[i] == 2) v[i++] = 0;
            if (i == c) break;
            ++v[i];
        }
    } else {
        window.push_back(zero_module(r));
        for (i64 n = 1; n <= 2; ++n)
            for (const QuadForm& cform : k.shape == K0Shape::ZPlusCl
                                             ? k.cl->elements
                                             : std::vector<QuadForm>{principal_form(
                                                   r.discriminant)})
                window.push_back(module_steinitz(r, n, cform));
    }

    auto image = [&](const GrothPair<ProjModule>& x) {
        return k0_sub(k, k0_class(k, x.p), k0_class(k, x.q));
    };

    K0CrossReport rep;
    for (const auto& p1 : window)
        for (const auto& q1 : window) {
            GrothPair<ProjModule> x{p1, q1};
            for (const auto& p2 : window)
                for (const auto& q2 : window) {
                    GrothPair<ProjModule> y{p2, q2};
                    // [M,N] |-> [M]-[N] is well-defined, injective, and a
                    // ring morphism on the window
                    bool same = groth_eq(s, x, y);
                    if (same != (image(x) == image(y)))
                        throw std::logic_error("completion and closed form disagree");
                    if (!(image(groth_add(s, x, y)) == k0_add(k, image(x), image(y))))
                        throw std::logic_error("additive mismatch");
                    if (!(image(groth_mul(s, x, y)) == k0_mul(k, image(x), image(y))))
                        throw std::logic_error("multiplicative mismatch");
                    ++rep.window_checked;
                }
        }
    // surjectivity onto the matching window of the closed form
    std::vector<K0Elem> hit;
    for (const auto& p : window)
        for (const auto& q : window) hit.push_back(image({p, q}));
    if (k.shape == K0Shape::FreeAbelian) {
        std::vector<i64> v(k.components, -2);
        while (true) {
            K0Elem x;
            x.coords = v;
            if (std::find(hit.begin(), hit.end(), x) == hit.end())
                throw std::logic_error("closed-form element not reached");
            std::size_t i = 0;
            while (i < k.components && v[i] == 2) v[i++] = -2;
            if (i == k.components) break;
            ++v[i];
        }
    } else {
        for (i64 n = -2; n <= 2; ++n)
            for (std::size_t c = 0; c < k.cl->group.size(); ++c) {
                K0Elem x;
                x.r = n;
                x.cls = c;
                if (std::find(hit.begin(), hit.end(), x) == hit.end())
                    throw std::logic_error("closed-form element not reached");
            }
    }
    rep.consistent = true;
    return rep;
}

std::string render_k0_shape(const K0Ring& k) {
    if (k.shape == K0Shape::FreeAbelian) return "Z^" + std::to_string(k.components);
    return "Z (+) Cl(" + std::to_string(k.base.discriminant) + ")";
}

std::string render_k0_elem(const K0Ring& k, const K0Elem& x) {
    if (k.shape == K0Shape::FreeAbelian) {
        std::string s = "(";
        for (std::size_t i = 0; i < x.coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(x.coords[i]);
        }
        return s + ")";
    }
    return "(" + std::to_string(x.r) + "; " + render_form(k.cl->elements[x.cls]) + ")";
}

}  // namespace k0
