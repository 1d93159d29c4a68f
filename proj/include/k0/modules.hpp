#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k0/class_group.hpp"
#include "k0/ring.hpp"
#include "k0/spectrum.hpp"

namespace k0 {

// Isomorphism class of a finitely generated projective module:
//  - over a finite product of local rings, the per-component rank vector;
//  - over a (semilocal) quadratic order, the Steinitz pair (rank, ideal
//    class), with rank 0 forcing the trivial class.
struct ProjModule {
    bool quad = false;
    std::vector<i64> ranks;  // product case
    i64 rank = 0;            // Steinitz case
    QuadForm cls;            // Steinitz case (reduced form)

    bool is_zero() const;
    friend bool operator==(const ProjModule&, const ProjModule&) = default;
};

ProjModule module_from_ranks(std::vector<i64> ranks);
ProjModule module_steinitz(const ConcreteRing& order, i64 rank, const QuadForm& cls);
ProjModule zero_module(const ConcreteRing& r);
ProjModule free_module(const ConcreteRing& r, i64 n);

H0Element rank_map(const ConcreteRing& r, const ProjModule& m);

ProjModule direct_sum(const ConcreteRing& r, const ProjModule& m, const ProjModule& n);
ProjModule tensor(const ConcreteRing& r, const ProjModule& m, const ProjModule& n);
ProjModule dual(const ConcreteRing& r, const ProjModule& m);
ProjModule end_module(const ConcreteRing& r, const ProjModule& m);

// Lambda^k. Over quadratic orders only k = 0, 1, rank (top) and k > rank are
// defined; intermediate powers have no Steinitz formula here.
ProjModule exterior_power(const ConcreteRing& r, const ProjModule& m, i64 k);

// The idempotent e with tr(M) = Re; Ann(M) = R(1-e). Finite products only.
RingElement trace_ideal(const ConcreteRing& r, const ProjModule& m);

// Thm-style decomposition: idems[k] is 1 exactly on the components of rank k.
struct OrthogonalDecomposition {
    std::vector<RingElement> idems;                 // e_0 .. e_n
    std::vector<RingElement> annihilator_of_ext;    // Ann idempotent of Lambda^k, k=1..n+1
};

OrthogonalDecomposition orthogonal_decomposition(const ConcreteRing& r,
                                                 const ProjModule& m);

struct PicDescriptor {
    bool trivial = true;
    std::optional<ClassGroup> cl;  // QuadOrder case

    i64 order() const { return trivial ? 1 : cl->h(); }
};

PicDescriptor pic_group(const ConcreteRing& r);

// "ranks(2,0,1)" or "steinitz(3; form(a,b,c))"
ProjModule parse_module(const ConcreteRing& r, const std::string& text);
std::string render_module(const ProjModule& m);

}  // namespace k0
