#include <algorithm>
#include <functional>
#include <iostream>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k0/boolean_ring.hpp"
#include "k0/class_group.hpp"
#include "k0/grothendieck.hpp"
#include "k0/ideals.hpp"
#include "k0/k0.hpp"
#include "k0/modules.hpp"
#include "k0/ring.hpp"
#include "k0/spectrum.hpp"

using json = nlohmann::ordered_json;
using namespace k0;

namespace {

constexpr int kSchemaVersion = 1;

struct Check {
    std::string name;
    bool pass;
    std::string witness;
};

struct Output {
    std::string command;
    json results = json::object();
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

int emit(const Output& out, bool as_json) {
    if (as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = out.command;
        doc["results"] = out.results;
        json checks = json::array();
        for (const auto& c : out.checks)
            checks.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"witness", c.witness}});
        doc["checks"] = checks;
        doc["exit"] = out.all_pass() ? 0 : 1;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "== " << out.command << "\n";
        if (!out.results.empty())
            for (auto& [key, value] : out.results.items())
                std::cout << key << ": "
                          << (value.is_string() ? value.get<std::string>() : value.dump())
                          << "\n";
        for (const auto& c : out.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                      << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
    }
    return out.all_pass() ? 0 : 1;
}

std::string join(const std::vector<i64>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::map<i64, ClassGroup>& class_group_cache() {
    static std::map<i64, ClassGroup> cache;
    return cache;
}

const ClassGroup& cached_class_group(i64 d) {
    auto& cache = class_group_cache();
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, class_group(d)).first;
    return it->second;
}

// ---- verify suites ----------------------------------------------------

Check verify_b_h0_units(const ConcreteRing& r) {
    try {
        BH0Iso iso = b_iso_h0units(r);
        return {"b-h0-units", true,
                "|B(R)| = |H0(R)*| = " + std::to_string(iso.b.size())};
    } catch (const std::exception& e) {
        return {"b-h0-units", false, e.what()};
    }
}

Check verify_idem_formula(const ConcreteRing& r) {
    auto idems = idempotents(r);
    for (const auto& e : idems)
        for (const auto& ep : idems) {
            auto rep = idempotent_formula_check(r, e, ep);
            if (!rep.equal)
                return {"idem-formula", false,
                        "mismatch at e = " + render_element(r, e) + ", e' = " +
                            render_element(r, ep)};
        }
    return {"idem-formula", true,
            std::to_string(idems.size() * idems.size()) + " pairs checked"};
}

Check verify_proj_decomp(const ConcreteRing& r, int trials = 200) {
    if (r.is_quad())
        return {"proj-decomp", false, "needs a finite product ring"};
    std::mt19937 rng(0);
    std::uniform_int_distribution<i64> rank(0, 4);
    for (int t = 0; t < trials; ++t) {
        std::vector<i64> v(r.factors.size());
        for (auto& x : v) x = rank(rng);
        ProjModule m = module_from_ranks(v);
        OrthogonalDecomposition d = orthogonal_decomposition(r, m);
        RingElement sum = ring_zero(r);
        for (const auto& e : d.idems) {
            if (!is_idempotent(r, e)) return {"proj-decomp", false, "non-idempotent e_k"};
            sum = ring_add(r, sum, e);
        }
        if (!(sum == ring_one(r)))
            return {"proj-decomp", false, "sum of e_k is not 1 for " + render_module(m)};
        for (std::size_t i = 0; i < d.idems.size(); ++i)
            for (std::size_t j = i + 1; j < d.idems.size(); ++j)
                if (!(ring_mul(r, d.idems[i], d.idems[j]) == ring_zero(r)))
                    return {"proj-decomp", false, "e_i e_j != 0 for " + render_module(m)};
        for (std::size_t k = 1; k <= d.annihilator_of_ext.size(); ++k) {
            RingElement acc = ring_zero(r);
            for (std::size_t i = 0; i < k && i < d.idems.size(); ++i)
                acc = ring_add(r, acc, d.idems[i]);
            if (!(d.annihilator_of_ext[k - 1] == acc))
                return {"proj-decomp", false,
                        "annihilator chain broken at k = " + std::to_string(k)};
        }
    }
    return {"proj-decomp", true, std::to_string(trials) + " rank vectors checked"};
}

Check verify_cl_pic_exact(const ConcreteRing& r) {
    ClPicReport rep = cl_pic_exact_check(r);
    return {"cl-pic-exact", rep.exact,
            "|Cl| = " + std::to_string(rep.cl_order) +
                ", |Pic| = " + std::to_string(rep.pic_order) +
                (rep.note.empty() ? "" : "; " + rep.note)};
}

Check verify_principalize(const ConcreteRing& r) {
    if (r.kind != RingKind::SemilocalQuadOrder)
        return {"principalize", false, "needs a semilocal quadratic order"};
    ConcreteRing o = parse_ring("O(" + std::to_string(r.discriminant) + ")");
    int done = 0;
    for (const QuadForm& f : cached_class_group(r.discriminant).elements) {
        FractionalIdeal i = form_to_ideal(o, f);
        try {
            RingElement x = principalize_semilocal(r, i);
            for (i64 p : r.localized_primes)
                for (const auto& prime : primes_above(o, p))
                    if (element_valuation(o, x, prime) != ideal_valuation(o, i, prime))
                        return {"principalize", false,
                                "valuation mismatch for class " + render_form(f)};
        } catch (const std::exception& e) {
            return {"principalize", false,
                    "class " + render_form(f) + ": " + e.what()};
        }
        ++done;
    }
    return {"principalize", true,
            std::to_string(done) + " ideal classes principalized"};
}

Check verify_k0red_h0(const ConcreteRing& r) {
    K0RedReport rep = k0_red_check(k0_of_ring(r));
    return {"k0red-h0", rep.reduced_iso_h0, rep.note};
}

Check verify_b_k0(const ConcreteRing& r) {
    BK0Report rep = b_of_k0(r);
    return {"b-k0", rep.bijective && rep.additive,
            std::to_string(rep.ring_idems.size()) + " idempotents matched"};
}

Check verify_units_split(const ConcreteRing& r) {
    FghReport rep = maps_fgh(r);
    std::string w = "|K0*| = " + std::to_string(rep.units_order) + " = " +
                    std::to_string(rep.pic_order) + " x " + std::to_string(rep.b_order) +
                    "; structure (" + join(rep.unit_structure) + ")";
    return {"units-split", rep.all(), w};
}

Check verify_lift(const std::string& morphism) {
    try {
        LiftReport rep = lifts_idempotents(parse_morphism(morphism));
        // consistency of the two levels is the theorem; lifting itself is data
        return {"lift", true,
                std::string("lifts = ") + (rep.ring_level ? "true" : "false") +
                    " at both ring and K0 level"};
    } catch (const std::logic_error& e) {
        return {"lift", false, e.what()};
    }
}

Check verify_char_zero(const ConcreteRing& r) {
    K0Ring k = k0_of_ring(r);
    for (i64 n = -20; n <= 20; ++n)
        for (i64 m = n + 1; m <= 20; ++m)
            if (k0_from_integer(k, n) == k0_from_integer(k, m))
                return {"char-zero", false,
                        std::to_string(n) + " = " + std::to_string(m) + " in K0"};
    bool zero_ring = !r.is_quad() && r.factors.empty();
    bool k0_trivial = k0_zero(k) == k0_one(k);
    if (zero_ring != k0_trivial)
        return {"char-zero", false, "K0(R) = 0 iff R = 0 fails"};
    return {"char-zero", true, "n . [R,0] pairwise distinct for |n| <= 20"};
}

const std::vector<std::string> kTheoremIds = {
    "b-h0-units", "idem-formula", "proj-decomp", "cl-pic-exact", "principalize",
    "k0red-h0",   "b-k0",         "units-split", "lift",         "char-zero"};

bool applicable(const std::string& id, const ConcreteRing& r) {
    if (id == "proj-decomp" || id == "idem-formula") return !r.is_quad();
    if (id == "principalize") return r.kind == RingKind::SemilocalQuadOrder;
    if (id == "lift") return false;  // needs --morphism, not a ring
    return true;
}

Check run_theorem(const std::string& id, const ConcreteRing& r) {
    if (id == "b-h0-units") return verify_b_h0_units(r);
    if (id == "idem-formula") return verify_idem_formula(r);
    if (id == "proj-decomp") return verify_proj_decomp(r);
    if (id == "cl-pic-exact") return verify_cl_pic_exact(r);
    if (id == "principalize") return verify_principalize(r);
    if (id == "k0red-h0") return verify_k0red_h0(r);
    if (id == "b-k0") return verify_b_k0(r);
    if (id == "units-split") return verify_units_split(r);
    if (id == "char-zero") return verify_char_zero(r);
    throw CLI::ValidationError("verify", "unknown theorem id: " + id);
}

// ---- groth file front-end ---------------------------------------------

FiniteSemiring load_semiring(const std::string& path, bool& has_mul) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json doc = json::parse(in);
    FiniteSemiring s;
    for (const auto& e : doc.at("elements")) s.elements.push_back(e.get<std::string>());
    for (const auto& row : doc.at("add"))
        s.add.push_back(row.get<std::vector<std::size_t>>());
    has_mul = doc.contains("mul");
    if (has_mul)
        for (const auto& row : doc["mul"])
            s.mul.push_back(row.get<std::vector<std::size_t>>());
    s.cancellative = doc.value("cancellative", false);
    // identities located from the tables
    auto find_identity = [&](const std::vector<std::vector<std::size_t>>& table) {
        for (std::size_t z = 0; z < s.elements.size(); ++z) {
            bool ok = true;
            for (std::size_t a = 0; a < s.elements.size(); ++a)
                if (table[a][z] != a) ok = false;
            if (ok) return z;
        }
        throw std::invalid_argument("table has no identity element");
    };
    s.zero = find_identity(s.add);
    if (has_mul) s.one = find_identity(s.mul);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact K-theoretic invariants of finite products of Z/p^k and "
                 "imaginary quadratic orders"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // ring info
    auto* ring_cmd = app.add_subcommand("ring", "ring-level reports");
    auto* info_cmd = ring_cmd->add_subcommand("info", "structure of a ring");
    std::string ring_spec;
    info_cmd->add_option("spec", ring_spec, "ring, e.g. \"Z/12\" or \"O(-20)\"")
        ->required();

    // classgroup
    auto* cg_cmd = app.add_subcommand("classgroup", "reduced forms and Cl(D)");
    i64 cg_d = 0;
    std::vector<i64> cg_range;
    auto* cg_d_opt = cg_cmd->add_option("D", cg_d, "fundamental discriminant < 0");
    cg_cmd->add_option("--range", cg_range, "scan discriminants from A down to B")
        ->expected(2)
        ->excludes(cg_d_opt);

    // ideal
    auto* ideal_cmd = app.add_subcommand("ideal", "fractional ideal arithmetic");
    std::string ideal_op, ideal_ring, ideal_a, ideal_b;
    ideal_cmd->add_option("op", ideal_op, "mul | inv | reduce | class | principal")
        ->required()
        ->check(CLI::IsMember({"mul", "inv", "reduce", "class", "principal"}));
    ideal_cmd->add_option("-r,--ring", ideal_ring, "quadratic order")->required();
    ideal_cmd->add_option("I", ideal_a, "ideal, e.g. \"ideal(2, 1)\"")->required();
    ideal_cmd->add_option("J", ideal_b, "second ideal (mul only)");

    // k0
    auto* k0_cmd = app.add_subcommand("k0", "the Grothendieck ring of a ring");
    std::string k0_spec;
    k0_cmd->add_option("spec", k0_spec, "ring")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem suite");
    std::string theorem_id, verify_ring, verify_morphism;
    verify_cmd->add_option("theorem", theorem_id, "theorem id, or \"all\"")->required();
    verify_cmd->add_option("spec", verify_ring, "ring under test");
    verify_cmd->add_option("--morphism", verify_morphism,
                           "morphism for the lift suite, e.g. \"quot: Z/4 -> Z/2\"");

    // groth
    auto* groth_cmd = app.add_subcommand("groth", "complete a monoid/semiring file");
    std::string groth_file, groth_target;
    groth_cmd->add_option("file", groth_file, "JSON with elements/add[/mul]")->required();
    groth_cmd->add_option("--target", groth_target,
                          "demonstrate the universal property into Z/n (element "
                          "names must be integers)");

    // principalize
    auto* prin_cmd = app.add_subcommand("principalize", "semilocal generator of an ideal");
    std::string prin_ring, prin_ideal;
    prin_cmd->add_option("-r,--ring", prin_ring, "semilocal order, e.g. \"O(-20) loc {2,3}\"")
        ->required();
    prin_cmd->add_option("I", prin_ideal, "ideal of the underlying maximal order")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Output out;

        if (info_cmd->parsed()) {
            ConcreteRing r = parse_ring(ring_spec);
            out.command = "ring info " + render_ring(r);
            out.results["ring"] = render_ring(r);
            if (r.is_quad()) {
                out.results["discriminant"] = r.discriminant;
                if (!r.localized_primes.empty())
                    out.results["localized_at"] = join(r.localized_primes);
            } else {
                json factors = json::array();
                for (const auto& f : r.factors) factors.push_back(f.modulus);
                out.results["factors"] = factors;
            }
            out.results["components"] = component_count(r);
            json idems = json::array();
            for (const auto& e : idempotents(r)) idems.push_back(render_element(r, e));
            out.results["idempotents"] = idems;
            json prim = json::array();
            for (const auto& e : component_decomposition(r).components)
                prim.push_back(render_element(r, e));
            out.results["primitive_idempotents"] = prim;
            out.results["boolean_ring_order"] = boolean_ring_of(r).size();
            out.results["h0_rank"] = component_count(r);
            out.results["h0_unit_count"] = h0_units(r).size();
            return emit(out, as_json);
        }

        if (cg_cmd->parsed()) {
            if (cg_range.empty() && cg_d_opt->count() == 0)
                throw CLI::RequiredError("classgroup: give D or --range");
            out.command = "classgroup";
            if (cg_range.empty()) {
                if (!is_fundamental_discriminant(cg_d))
                    throw std::invalid_argument(std::to_string(cg_d) +
                                                " is not a fundamental discriminant < 0");
                const ClassGroup& cl = cached_class_group(cg_d);
                out.results["discriminant"] = cg_d;
                out.results["h"] = cl.h();
                out.results["invariant_factors"] = cl.structure;
                json forms = json::array();
                for (const auto& f : cl.elements) forms.push_back(render_form(f));
                out.results["reduced_forms"] = forms;
            } else {
                i64 from = std::max(cg_range[0], cg_range[1]);
                i64 to = std::min(cg_range[0], cg_range[1]);
                json table = json::array();
                int found = 0;
                for (i64 d = from; d >= to; --d) {
                    if (!is_fundamental_discriminant(d)) continue;
                    const ClassGroup& cl = cached_class_group(d);
                    table.push_back({{"D", d},
                                     {"h", cl.h()},
                                     {"invariant_factors", cl.structure}});
                    ++found;
                }
                if (!found)
                    throw std::invalid_argument("no fundamental discriminant in range");
                out.results["table"] = table;
            }
            return emit(out, as_json);
        }

        if (ideal_cmd->parsed()) {
            ConcreteRing o = parse_ring(ideal_ring);
            FractionalIdeal i = parse_ideal(o, ideal_a);
            out.command = "ideal " + ideal_op;
            out.results["ring"] = render_ring(o);
            out.results["I"] = render_ideal(i);
            if (ideal_op == "mul") {
                if (ideal_b.empty()) throw CLI::RequiredError("ideal mul needs J");
                FractionalIdeal j = parse_ideal(o, ideal_b);
                out.results["J"] = render_ideal(j);
                out.results["product"] = render_ideal(ideal_mul(o, i, j));
            } else if (ideal_op == "inv") {
                FractionalIdeal inv = ideal_inv(o, i);
                out.results["inverse"] = render_ideal(inv);
                out.checks.push_back({"I * I^-1 = O", ideal_mul(o, i, inv) == unit_ideal(),
                                      render_ideal(ideal_mul(o, i, inv))});
            } else if (ideal_op == "reduce") {
                out.results["hnf"] = render_ideal(i);
                out.results["norm"] = ideal_norm(o, i).str();
            } else if (ideal_op == "class") {
                out.results["class"] = render_form(ideal_to_form(o, i));
            } else {  // principal
                auto gen = is_principal(o, i);
                out.results["principal"] = gen.has_value();
                if (gen) out.results["generator"] = render_element(o, *gen);
            }
            return emit(out, as_json);
        }

        if (k0_cmd->parsed()) {
            ConcreteRing r = parse_ring(k0_spec);
            K0Ring k = k0_of_ring(r);
            out.command = "k0 " + render_ring(r);
            out.results["shape"] = render_k0_shape(k);
            out.results["nilradical_order"] = k0_nilradical(k).size();
            FghReport fgh = maps_fgh(r);
            out.results["unit_group_order"] = fgh.units_order;
            out.results["unit_group_invariant_factors"] = fgh.unit_structure;
            out.results["pic_order"] = fgh.pic_order;
            out.results["boolean_ring_order"] = fgh.b_order;
            out.checks.push_back({"split sequence Pic -> K0* -> B", fgh.all(), ""});
            return emit(out, as_json);
        }

        if (verify_cmd->parsed()) {
            out.command = "verify " + theorem_id;
            if (theorem_id == "lift") {
                if (verify_morphism.empty())
                    throw CLI::RequiredError("verify lift needs --morphism");
                out.checks.push_back(verify_lift(verify_morphism));
                return emit(out, as_json);
            }
            if (verify_ring.empty())
                throw CLI::RequiredError("verify needs a ring spec");
            ConcreteRing r = parse_ring(verify_ring);
            out.command += " " + render_ring(r);
            if (theorem_id == "all") {
                for (const auto& id : kTheoremIds)
                    if (applicable(id, r)) out.checks.push_back(run_theorem(id, r));
            } else {
                if (std::find(kTheoremIds.begin(), kTheoremIds.end(), theorem_id) ==
                    kTheoremIds.end())
                    throw CLI::ValidationError("verify",
                                               "unknown theorem id: " + theorem_id);
                if (!applicable(theorem_id, r))
                    throw std::invalid_argument("theorem " + theorem_id +
                                                " does not apply to " + render_ring(r));
                out.checks.push_back(run_theorem(theorem_id, r));
            }
            return emit(out, as_json);
        }

        if (groth_cmd->parsed()) {
            bool has_mul = false;
            FiniteSemiring s = load_semiring(groth_file, has_mul);
            out.command = "groth " + groth_file;
            out.results["elements"] = s.elements.size();
            const GrothGroup* group = nullptr;
            GrothGroup g_only;
            GrothRing g_ring;
            if (has_mul) {
                g_ring = groth_ring(s);
                group = &g_ring;
                out.results["completion"] = "ring";
                if (g_ring.size() == 1) out.results["note"] = "completion is the zero ring";
            } else {
                g_only = groth_completion(s);
                group = &g_only;
                out.results["completion"] = "group";
            }
            out.results["order"] = group->size();
            FiniteAbelianGroup fag{group->add, group->zero};
            out.results["invariant_factors"] = invariant_factors(fag);
            json gens = json::array();
            for (std::size_t a = 0; a < s.size(); ++a) {
                auto [p, q] = group->reps[group->gamma(a)];
                gens.push_back({{"element", s.elements[a]},
                                {"normal_form", "[" + s.elements[p] + ", " +
                                                    s.elements[q] + "]"}});
            }
            out.results["generators"] = gens;
            if (!groth_target.empty()) {
                if (!has_mul)
                    throw std::invalid_argument("--target needs a semiring (mul table)");
                if (groth_target.rfind("Z/", 0) != 0)
                    throw std::invalid_argument("--target must be Z/n");
                i64 n = std::stoll(groth_target.substr(2));
                RingOps<i64> zn{[n](const i64& a, const i64& b) { return (a + b) % n; },
                                [n](const i64& a, const i64& b) { return mod_pos(a - b, n); },
                                [n](const i64& a, const i64& b) { return a * b % n; },
                                [](const i64& a, const i64& b) { return a == b; },
                                0, 1 % n};
                std::vector<i64> phi;
                for (const auto& name : s.elements) phi.push_back(mod_pos(std::stoll(name), n));
                std::vector<i64> theta = universal_extend(g_ring, s, phi, zn);
                out.results["theta"] = theta;
                out.checks.push_back({"theta . gamma = phi into " + groth_target, true, ""});
            }
            return emit(out, as_json);
        }

        if (prin_cmd->parsed()) {
            ConcreteRing r = parse_ring(prin_ring);
            if (r.kind != RingKind::SemilocalQuadOrder)
                throw std::invalid_argument("principalize needs a semilocal order");
            ConcreteRing o = parse_ring("O(" + std::to_string(r.discriminant) + ")");
            FractionalIdeal i = parse_ideal(o, prin_ideal);
            RingElement x = principalize_semilocal(r, i);
            out.command = "principalize";
            out.results["ring"] = render_ring(r);
            out.results["ideal"] = render_ideal(i);
            out.results["generator"] = render_element(o, x);
            bool ok = true;
            for (i64 p : r.localized_primes)
                for (const auto& prime : primes_above(o, p))
                    ok = ok && element_valuation(o, x, prime) == ideal_valuation(o, i, prime);
            out.checks.push_back({"valuations match over S", ok, ""});
            return emit(out, as_json);
        }

        throw CLI::ValidationError("", "no command");
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
}
