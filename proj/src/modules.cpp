#include "k0/modules.hpp"

#include <algorithm>
#include <stdexcept>

namespace k0 {

namespace {

void check_same_base(const ProjModule& m, const ProjModule& n) {
    if (m.quad != n.quad || (!m.quad && m.ranks.size() != n.ranks.size()))
        throw std::invalid_argument("modules over different base rings");
}

QuadForm class_pow(const ConcreteRing& order, const QuadForm& c, i64 n) {
    // Composition via the ideal route; n may be negative.
    FractionalIdeal acc = unit_ideal();
    FractionalIdeal base = form_to_ideal(order, c);
    i64 e = n < 0 ? -n : n;
    while (e-- > 0) acc = ideal_mul(order, acc, base);
    if (n < 0) acc = ideal_inv(order, acc);
    return ideal_to_form(order, acc);
}

QuadForm class_mul(const ConcreteRing& order, const QuadForm& c1, const QuadForm& c2) {
    return ideal_to_form(order,
                         ideal_mul(order, form_to_ideal(order, c1), form_to_ideal(order, c2)));
}

ConcreteRing order_of(const ConcreteRing& r) {
    ConcreteRing o = r;
    o.kind = RingKind::QuadOrder;
    o.localized_primes.clear();
    return o;
}

}  // namespace

bool ProjModule::is_zero() const {
    if (quad) return rank == 0;
    for (i64 v : ranks)
        if (v) return false;
    return true;
}

ProjModule module_from_ranks(std::vector<i64> ranks) {
    for (i64 v : ranks)
        if (v < 0) throw std::invalid_argument("negative rank");
    ProjModule m;
    m.ranks = std::move(ranks);
    return m;
}

ProjModule module_steinitz(const ConcreteRing& order, i64 rank, const QuadForm& cls) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    ProjModule m;
    m.quad = true;
    m.rank = rank;
    // Normal form: the zero module carries the trivial class.
    m.cls = rank == 0 ? form_reduce(principal_form(order.discriminant)) : form_reduce(cls);
    return m;
}

ProjModule zero_module(const ConcreteRing& r) { return free_module(r, 0); }

ProjModule free_module(const ConcreteRing& r, i64 n) {
    if (r.is_quad())
        return module_steinitz(r, n, principal_form(r.discriminant));
    return module_from_ranks(std::vector<i64>(r.factors.size(), n));
}

H0Element rank_map(const ConcreteRing& r, const ProjModule& m) {
    if (m.quad) return h0_constant(r, m.rank);
    return H0Element{m.ranks};
}

ProjModule direct_sum(const ConcreteRing& r, const ProjModule& m, const ProjModule& n) {
    check_same_base(m, n);
    if (m.quad) {
        if (m.rank == 0) return n;
        if (n.rank == 0) return m;
        return module_steinitz(r, m.rank + n.rank, class_mul(order_of(r), m.cls, n.cls));
    }
    ProjModule s = m;
    for (std::size_t i = 0; i < s.ranks.size(); ++i) s.ranks[i] += n.ranks[i];
    return s;
}

ProjModule tensor(const ConcreteRing& r, const ProjModule& m, const ProjModule& n) {
    check_same_base(m, n);
    if (m.quad) {
        if (m.rank == 0 || n.rank == 0) return zero_module(r);
        ConcreteRing o = order_of(r);
        // det(M (x) N) = det(M)^{rk N} * det(N)^{rk M}
        QuadForm cls = class_mul(o, class_pow(o, m.cls, n.rank), class_pow(o, n.cls, m.rank));
        return module_steinitz(r, m.rank * n.rank, cls);
    }
    ProjModule p = m;
    for (std::size_t i = 0; i < p.ranks.size(); ++i) p.ranks[i] *= n.ranks[i];
    return p;
}

ProjModule dual(const ConcreteRing& r, const ProjModule& m) {
    if (!m.quad) return m;
    if (m.rank == 0) return m;
    ConcreteRing o = order_of(r);
    return module_steinitz(r, m.rank, class_pow(o, m.cls, -1));
}

ProjModule end_module(const ConcreteRing& r, const ProjModule& m) {
    return tensor(r, m, dual(r, m));
}

ProjModule exterior_power(const ConcreteRing& r, const ProjModule& m, i64 k) {
    if (k < 0) throw std::invalid_argument("negative exterior power");
    if (k == 0) return free_module(r, 1);
    if (m.quad) {
        if (k > m.rank) return zero_module(r);
        if (k == 1) return m;
        if (k == m.rank) return module_steinitz(r, 1, m.cls);  // determinant class
        throw std::invalid_argument(
            "intermediate exterior powers are unsupported over quadratic orders");
    }
    ProjModule p = m;
    for (auto& v : p.ranks) v = binomial(v, k);
    return p;
}

RingElement trace_ideal(const ConcreteRing&, const ProjModule& m) {
    if (m.quad) throw std::invalid_argument("trace_ideal: finite products only");
    RingElement e;
    for (i64 v : m.ranks) e.residues.push_back(v > 0 ? 1 : 0);
    return e;
}

OrthogonalDecomposition orthogonal_decomposition(const ConcreteRing&,
                                                 const ProjModule& m) {
    if (m.quad)
        throw std::invalid_argument("orthogonal_decomposition: finite products only");
    i64 n = m.ranks.empty() ? 0 : *std::max_element(m.ranks.begin(), m.ranks.end());
    OrthogonalDecomposition d;
    for (i64 k = 0; k <= n; ++k) {
        RingElement e;
        for (i64 v : m.ranks) e.residues.push_back(v == k ? 1 : 0);
        d.idems.push_back(e);
    }
    // Ann(Lambda^k M) is generated by e_0 + ... + e_{k-1}, i.e. the
    // idempotent supported where rank < k.
    for (i64 k = 1; k <= n + 1; ++k) {
        RingElement e;
        for (i64 v : m.ranks) e.residues.push_back(v < k ? 1 : 0);
        d.annihilator_of_ext.push_back(e);
    }
    return d;
}

PicDescriptor pic_group(const ConcreteRing& r) {
    PicDescriptor p;
    if (r.kind != RingKind::QuadOrder) return p;  // semilocal: trivial
    ClassGroup cl = class_group(r.discriminant);
    p.trivial = cl.h() == 1;
    p.cl = std::move(cl);
    return p;
}

ProjModule parse_module(const ConcreteRing& r, const std::string& text) {
    if (text.rfind("ranks(", 0) == 0) {
        if (r.is_quad()) throw std::invalid_argument("ranks(..) needs a product ring");
        std::size_t rb = text.rfind(')');
        if (rb == std::string::npos) throw std::invalid_argument("expected ranks(..)");
        std::vector<i64> ranks;
        std::string body = text.substr(6, rb - 6);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - pos);
            ranks.push_back(std::stoll(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (ranks.size() != r.factors.size())
            throw std::invalid_argument("rank vector length != component count");
        return module_from_ranks(ranks);
    }
    if (text.rfind("steinitz(", 0) == 0) {
        if (!r.is_quad()) throw std::invalid_argument("steinitz(..) needs a quadratic order");
        std::size_t semi = text.find(';');
        std::size_t rb = text.rfind(')');
        if (semi == std::string::npos || rb == std::string::npos)
            throw std::invalid_argument("expected steinitz(n; form(a,b,c))");
        i64 n = std::stoll(text.substr(9, semi - 9));
        std::string ftext = text.substr(semi + 1, rb - semi - 1);
        std::size_t fs = ftext.find_first_not_of(' ');
        return module_steinitz(r, n, parse_form(ftext.substr(fs)));
    }
    throw std::invalid_argument("expected ranks(..) or steinitz(..)");
}

std::string render_module(const ProjModule& m) {
    if (m.quad)
        return "steinitz(" + std::to_string(m.rank) + "; " + render_form(m.cls) + ")";
    std::string s = "ranks(";
    for (std::size_t i = 0; i < m.ranks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m.ranks[i]);
    }
    return s + ")";
}

}  // namespace k0
