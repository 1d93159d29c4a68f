#include "k0/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k0 {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
    return out;
}

i64 parse_int(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw std::invalid_argument("expected integer");
    std::size_t used = 0;
    i64 v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

}  // namespace

i64 ConcreteRing::total_modulus() const {
    i64 m = 1;
    for (const auto& f : factors) m *= f.modulus;
    return m;
}

i64 ConcreteRing::omega_trace() const {
    return mod_pos(discriminant, 4) == 1 ? 1 : 0;
}

i64 ConcreteRing::omega_norm() const {
    // omega * conj(omega)
    return mod_pos(discriminant, 4) == 1 ? (1 - discriminant) / 4 : -discriminant / 4;
}

bool is_fundamental_discriminant(i64 d) {
    if (d >= 0) return false;
    i64 r = mod_pos(d, 4);
    auto squarefree = [](i64 n) {
        n = n < 0 ? -n : n;
        for (i64 p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    if (r == 1) return squarefree(d);
    if (r == 0) {
        i64 m = d / 4;
        i64 mr = mod_pos(m, 4);
        return squarefree(m) && (mr == 2 || mr == 3);
    }
    return false;
}

ConcreteRing parse_ring(const std::string& spec) {
    std::string s = strip(spec);
    if (s.empty()) throw std::invalid_argument("empty ring spec");
    if (s[0] == 'O') {
        std::size_t open = s.find('(');
        std::size_t close = s.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw std::invalid_argument("malformed order spec: " + spec);
        i64 d = parse_int(s.substr(open + 1, close - open - 1));
        if (!is_fundamental_discriminant(d))
            throw std::invalid_argument("not a fundamental discriminant < 0: " +
                                        std::to_string(d));
        ConcreteRing r;
        r.kind = RingKind::QuadOrder;
        r.discriminant = d;
        std::string rest = strip(s.substr(close + 1));
        if (!rest.empty()) {
            if (rest.rfind("loc", 0) != 0)
                throw std::invalid_argument("malformed suffix: " + rest);
            std::size_t lb = rest.find('{');
            std::size_t rb = rest.find('}');
            if (lb == std::string::npos || rb == std::string::npos || rb < lb)
                throw std::invalid_argument("malformed localization set: " + rest);
            for (const auto& tok : split(rest.substr(lb + 1, rb - lb - 1), ",")) {
                i64 p = parse_int(tok);
                if (!is_prime(p))
                    throw std::invalid_argument("localized value not prime: " +
                                                std::to_string(p));
                r.localized_primes.push_back(p);
            }
            if (r.localized_primes.empty())
                throw std::invalid_argument("empty localization set");
            std::sort(r.localized_primes.begin(), r.localized_primes.end());
            r.localized_primes.erase(
                std::unique(r.localized_primes.begin(), r.localized_primes.end()),
                r.localized_primes.end());
            r.kind = RingKind::SemilocalQuadOrder;
        }
        return r;
    }
    ConcreteRing r;
    r.kind = RingKind::FiniteProduct;
    for (const auto& part : split(s, " x ")) {
        std::string t = strip(part);
        if (t.rfind("Z/", 0) != 0)
            throw std::invalid_argument("malformed factor: " + part);
        i64 n = parse_int(t.substr(2));
        if (n < 2) throw std::invalid_argument("modulus must be >= 2");
        for (auto [p, e] : factorize(n))
            r.factors.push_back({p, e, ipow(p, e)});
    }
    std::sort(r.factors.begin(), r.factors.end(), [](const auto& a, const auto& b) {
        return a.prime != b.prime ? a.prime < b.prime : a.exp < b.exp;
    });
    return r;
}

std::string render_ring(const ConcreteRing& r) {
    if (r.is_quad()) {
        std::string s = "O(" + std::to_string(r.discriminant) + ")";
        if (r.kind == RingKind::SemilocalQuadOrder) {
            s += " loc {";
            for (std::size_t i = 0; i < r.localized_primes.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(r.localized_primes[i]);
            }
            s += "}";
        }
        return s;
    }
    std::string s;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(r.factors[i].modulus);
    }
    return s;
}

RingElement ring_zero(const ConcreteRing& r) { return ring_from_integer(r, 0); }
RingElement ring_one(const ConcreteRing& r) { return ring_from_integer(r, 1); }

RingElement ring_from_integer(const ConcreteRing& r, i64 n) {
    RingElement e;
    if (r.is_quad()) {
        e.x = Rational(n);
        e.y = Rational(0);
        return e;
    }
    for (const auto& f : r.factors) e.residues.push_back(mod_pos(n, f.modulus));
    return e;
}

RingElement quad_element(Rational x, Rational y) {
    RingElement e;
    e.x = x;
    e.y = y;
    return e;
}

bool element_valid(const ConcreteRing& r, const RingElement& e) {
    if (r.kind == RingKind::FiniteProduct) {
        if (e.residues.size() != r.factors.size()) return false;
        for (std::size_t i = 0; i < r.factors.size(); ++i)
            if (e.residues[i] < 0 || e.residues[i] >= r.factors[i].modulus) return false;
        return true;
    }
    if (r.kind == RingKind::QuadOrder)
        return e.x.is_integer() && e.y.is_integer();
    // Semilocal: denominators supported only on localized primes.
    for (i64 d : {e.x.den, e.y.den})
        for (auto [p, k] : factorize(d))
            if (!std::binary_search(r.localized_primes.begin(),
                                    r.localized_primes.end(), p))
                return false;
    return true;
}

RingElement ring_add(const ConcreteRing& r, const RingElement& a, const RingElement& b) {
    RingElement e;
    if (r.is_quad()) {
        e.x = a.x + b.x;
        e.y = a.y + b.y;
        return e;
    }
    for (std::size_t i = 0; i < r.factors.size(); ++i)
        e.residues.push_back(mod_pos(a.residues[i] + b.residues[i], r.factors[i].modulus));
    return e;
}

RingElement ring_neg(const ConcreteRing& r, const RingElement& a) {
    RingElement e;
    if (r.is_quad()) {
        e.x = -a.x;
        e.y = -a.y;
        return e;
    }
    for (std::size_t i = 0; i < r.factors.size(); ++i)
        e.residues.push_back(mod_pos(-a.residues[i], r.factors[i].modulus));
    return e;
}

RingElement ring_sub(const ConcreteRing& r, const RingElement& a, const RingElement& b) {
    return ring_add(r, a, ring_neg(r, b));
}

RingElement ring_mul(const ConcreteRing& r, const RingElement& a, const RingElement& b) {
    RingElement e;
    if (r.is_quad()) {
        // omega^2 = t*omega - n with t = omega_trace, n = omega_norm
        Rational t(r.omega_trace()), n(r.omega_norm());
        Rational yy = a.y * b.y;
        e.x = a.x * b.x - yy * n;
        e.y = a.x * b.y + a.y * b.x + yy * t;
        return e;
    }
    for (std::size_t i = 0; i < r.factors.size(); ++i)
        e.residues.push_back(mulmod(a.residues[i], b.residues[i], r.factors[i].modulus));
    return e;
}

bool is_idempotent(const ConcreteRing& r, const RingElement& e) {
    return ring_mul(r, e, e) == e;
}

std::vector<RingElement> idempotents(const ConcreteRing& r) {
    std::vector<RingElement> out;
    if (r.is_quad()) {
        out.push_back(ring_zero(r));
        out.push_back(ring_one(r));
        return out;
    }
    std::size_t c = r.factors.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        RingElement e;
        for (std::size_t i = 0; i < c; ++i)
            e.residues.push_back((mask >> i) & 1);
        out.push_back(e);
    }
    return out;
}

i64 element_to_integer(const ConcreteRing& r, const RingElement& e) {
    if (r.is_quad()) throw std::logic_error("element_to_integer: finite products only");
    // CRT over pairwise coprime local moduli.
    i64 m = 1, x = 0;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        i64 mi = r.factors[i].modulus;
        i64 ri = e.residues[i];
        // Solve x' = x (mod m), x' = ri (mod mi).
        i64 diff = mod_pos(ri - x, mi);
        i64 step = mulmod(diff, inv_mod(m % mi, mi), mi);
        x = x + m * step;
        m *= mi;
    }
    return mod_pos(x, m);
}

std::string render_element(const ConcreteRing& r, const RingElement& e) {
    if (!r.is_quad()) {
        // CRT only applies when the local moduli are pairwise coprime
        bool coprime = true;
        for (std::size_t i = 0; i + 1 < r.factors.size(); ++i)
            if (r.factors[i].prime == r.factors[i + 1].prime) coprime = false;
        if (coprime) return std::to_string(element_to_integer(r, e));
        std::string s = "(";
        for (std::size_t i = 0; i < e.residues.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e.residues[i]);
        }
        return s + ")";
    }
    if (e.y.is_zero()) return e.x.str();
    std::string s;
    if (!e.x.is_zero()) s = e.x.str() + (e.y.num >= 0 ? "+" : "");
    if (e.y == Rational(1)) return s + "w";
    if (e.y == Rational(-1)) return s + "-w";
    return s + e.y.str() + "w";
}

RingElement RingMorphism::apply(const RingElement& x) const {
    RingElement out;
    for (std::size_t j = 0; j < target.factors.size(); ++j)
        out.residues.push_back(mod_pos(x.residues[assignment[j]], target.factors[j].modulus));
    return out;
}

bool RingMorphism::is_identity() const {
    if (!(source == target)) return false;
    for (std::size_t j = 0; j < assignment.size(); ++j)
        if (assignment[j] != j) return false;
    return true;
}

void validate_morphism(const RingMorphism& f) {
    if (f.source.is_quad() || f.target.is_quad())
        throw std::invalid_argument("morphisms are supported between finite products");
    if (f.assignment.size() != f.target.factors.size())
        throw std::invalid_argument("assignment arity mismatch");
    for (std::size_t j = 0; j < f.assignment.size(); ++j) {
        std::size_t i = f.assignment[j];
        if (i >= f.source.factors.size())
            throw std::invalid_argument("assignment index out of range");
        const auto& s = f.source.factors[i];
        const auto& t = f.target.factors[j];
        if (t.prime != s.prime || t.exp > s.exp)
            throw std::invalid_argument("target modulus must divide source modulus");
    }
    // Morphism laws. 0,1 are preserved by construction; check + and * on
    // all pairs when feasible, otherwise on a deterministic sample.
    i64 n = f.source.total_modulus();
    i64 stride = (n * n <= 1'000'000) ? 1 : (n * n / 1'000'000 + 1);
    for (i64 a = 0; a < n; ++a) {
        for (i64 b = a % stride; b < n; b += stride) {
            RingElement xa = ring_from_integer(f.source, a);
            RingElement xb = ring_from_integer(f.source, b);
            if (f.apply(ring_add(f.source, xa, xb)) !=
                ring_add(f.target, f.apply(xa), f.apply(xb)))
                throw std::logic_error("morphism not additive");
            if (f.apply(ring_mul(f.source, xa, xb)) !=
                ring_mul(f.target, f.apply(xa), f.apply(xb)))
                throw std::logic_error("morphism not multiplicative");
        }
    }
}

RingMorphism identity_morphism(const ConcreteRing& r) {
    RingMorphism f{r, r, {}};
    for (std::size_t i = 0; i < r.factors.size(); ++i) f.assignment.push_back(i);
    return f;
}

RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
    if (!(g.source == f.target)) throw std::invalid_argument("compose: ring mismatch");
    RingMorphism h{f.source, g.target, {}};
    for (std::size_t j = 0; j < g.assignment.size(); ++j)
        h.assignment.push_back(f.assignment[g.assignment[j]]);
    return h;
}

RingMorphism parse_morphism(const std::string& spec) {
    std::size_t colon = spec.find(':');
    std::size_t arrow = spec.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        throw std::invalid_argument("expected '<kind>: <ring> -> <ring>'");
    std::string kind = strip(spec.substr(0, colon));
    ConcreteRing src = parse_ring(strip(spec.substr(colon + 1, arrow - colon - 1)));
    ConcreteRing tgt = parse_ring(strip(spec.substr(arrow + 2)));
    RingMorphism f{src, tgt, {}};
    if (kind.rfind("map[", 0) == 0) {
        std::size_t rb = kind.find(']');
        if (rb == std::string::npos) throw std::invalid_argument("malformed map[..]");
        for (const auto& tok : split(kind.substr(4, rb - 4), ","))
            f.assignment.push_back(static_cast<std::size_t>(parse_int(tok)));
    } else if (kind == "id" || kind == "crt") {
        // On canonical factor lists a CRT isomorphism is the identity map.
        if (!(src == tgt))
            throw std::invalid_argument(kind + ": source and target must canonicalize equal");
        for (std::size_t i = 0; i < src.factors.size(); ++i) f.assignment.push_back(i);
    } else if (kind == "quot" || kind == "diag" || kind == "proj") {
        // Each target factor maps to the unique compatible source factor.
        for (const auto& t : tgt.factors) {
            std::optional<std::size_t> pick;
            for (std::size_t i = 0; i < src.factors.size(); ++i) {
                const auto& s = src.factors[i];
                if (s.prime == t.prime && s.exp >= t.exp) {
                    if (pick && kind != "diag")
                        throw std::invalid_argument("ambiguous factor match; use map[..]");
                    if (!pick) pick = i;
                }
            }
            if (!pick) throw std::invalid_argument("no compatible source factor");
            f.assignment.push_back(*pick);
        }
    } else {
        throw std::invalid_argument("unknown morphism kind: " + kind);
    }
    validate_morphism(f);
    return f;
}

}  // namespace k0
