#include "monideal/alexander.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "monideal/error.hpp"

namespace monideal {

namespace {

// m^b + m^c as a bound vector: coordinatewise min over the positive entries.
Monomial sum_bound(const Monomial& b, const Monomial& c) {
    std::vector<Exponent> out(b.num_vars(), 0);
    for (std::size_t s = 0; s < out.size(); ++s) {
        if (b[s] > 0 && c[s] > 0) {
            out[s] = std::min(b[s], c[s]);
        } else {
            out[s] = std::max(b[s], c[s]);
        }
    }
    return Monomial(std::move(out));
}

bool share_generator(const Monomial& b, const Monomial& c) {
    for (std::size_t s = 0; s < b.num_vars(); ++s) {
        if (b[s] > 0 && b[s] == c[s]) return true;
    }
    return false;
}

void require_cogeneric(const MonomialIdeal& m, const char* what) {
    if (!is_cogeneric(m).is_cogeneric) throw PreconditionError(std::string(what) + " needs a cogeneric ideal");
}

}  // namespace

DualContext DualContext::standard(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    return DualContext{Monomial(std::vector<Exponent>(m.num_vars(), m.max_exponent()))};
}

void DualContext::validate_for(const MonomialIdeal& m) const {
    if (a.num_vars() != m.num_vars()) throw PreconditionError("duality bound has the wrong number of variables");
    for (const Monomial& g : m.generators()) {
        for (std::size_t s = 0; s < a.num_vars(); ++s) {
            if (g[s] > a[s]) {
                throw PreconditionError("duality bound " + exponent_string(a) + " is below generator " +
                                        exponent_string(g));
            }
        }
    }
}

Monomial dual_vector(const Monomial& b, const DualContext& ctx) {
    if (b.num_vars() != ctx.a.num_vars()) throw PreconditionError("dual_vector: length mismatch");
    std::vector<Exponent> out(b.num_vars(), 0);
    for (std::size_t s = 0; s < out.size(); ++s) {
        if (b[s] > ctx.a[s]) throw PreconditionError("dual_vector: b exceeds a");
        if (b[s] >= 1) out[s] = ctx.a[s] + 1 - b[s];
    }
    return Monomial(std::move(out));
}

MonomialIdeal alexander_dual(const MonomialIdeal& m, const DualContext& ctx) {
    m.require_proper_nonzero();
    ctx.validate_for(m);
    const IrreducibleDecomposition d = irreducible_decomposition_oracle(m);
    std::vector<Monomial> gens;
    for (const auto& comp : d.components) gens.push_back(dual_vector(comp.bound, ctx));
    MonomialIdeal from_components(m.names(), std::move(gens));

    std::vector<MonomialIdeal> pieces;
    for (const Monomial& g : m.generators()) pieces.push_back(IrreducibleComponent(dual_vector(g, ctx)).as_ideal(m.names()));
    const MonomialIdeal from_generators = intersect(pieces);
    if (!(from_components == from_generators)) {
        throw ConsistencyError("alexander_dual: the component and generator formulas disagree");
    }
    return from_components;
}

CogenericityReport is_cogeneric(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    CogenericityReport report;
    report.decomposition = irreducible_decomposition_oracle(m);
    const auto& comps = report.decomposition.components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            if (!share_generator(comps[i].bound, comps[j].bound)) continue;
            const Monomial c = sum_bound(comps[i].bound, comps[j].bound);
            std::optional<std::size_t> witness;
            for (std::size_t l = 0; l < comps.size() && !witness; ++l) {
                const Monomial& b = comps[l].bound;
                bool ok = true;
                for (std::size_t s = 0; s < b.num_vars() && ok; ++s) {
                    if (b[s] > 0) ok = c[s] > 0 && b[s] > c[s];
                }
                if (ok) witness = l;
            }
            if (witness) {
                report.witnesses.emplace(std::make_pair(i, j), *witness);
            } else {
                report.violations.emplace_back(i, j);
            }
        }
    }
    report.is_cogeneric = report.violations.empty();
    report.dual_is_generic = is_generic(alexander_dual(m, DualContext::standard(m))).is_generic;
    if (report.dual_is_generic != report.is_cogeneric) {
        throw ConsistencyError("is_cogeneric: direct test disagrees with genericity of the Alexander dual");
    }
    return report;
}

bool CoScarfComplex::is_interior(Face f) const { return std::binary_search(interior.begin(), interior.end(), f, [](Face a, Face b) {
    return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
}); }

std::string CoScarfComplex::face_name(Face f) const { return "{" + labeled().complex.face_key(f) + "}"; }

CoScarfComplex co_scarf(const MonomialIdeal& m, bool allow_noncogeneric) {
    m.require_proper_nonzero();
    if (!allow_noncogeneric) require_cogeneric(m, "co_scarf");
    CoScarfComplex cs;
    const Exponent D = m.max_exponent() + 1;
    const DualContext ctx{Monomial(std::vector<Exponent>(m.num_vars(), D - 1))};
    cs.dual = alexander_dual(m, ctx);
    const IrreducibleDecomposition d = irreducible_decomposition_oracle(m);
    if (cs.dual.size() != d.size()) throw ConsistencyError("co_scarf: dual generators do not match components");
    // components in the order of the dual generators, i.e. the vertex order
    for (const Monomial& g : cs.dual.generators()) {
        const auto it = std::find_if(d.components.begin(), d.components.end(),
                                     [&](const IrreducibleComponent& c) { return dual_vector(c.bound, ctx) == g; });
        cs.decomposition.components.push_back(*it);
    }
    cs.extended = extended_scarf_complex(cs.dual, D);

    const VarSet all = full_varset(m.num_vars());
    const Face gens = cs.extended.generator_vertices();
    for (Face f : cs.labeled().complex.all_faces()) {
        const Monomial label = cs.labeled().label(f);
        if (label.support() == all) cs.interior.push_back(f);
        if (f != 0 && is_subface(f, gens)) {
            Monomial b(m.num_vars());
            bool first = true;
            for (Face rest = f; rest; rest &= rest - 1) {
                const Monomial& bi = cs.decomposition.components[static_cast<std::size_t>(std::countr_zero(rest))].bound;
                b = first ? bi : sum_bound(b, bi);
                first = false;
            }
            if (dual_vector(b, ctx) != label) {
                throw ConsistencyError("co_scarf: face label differs from the dual of the summed components");
            }
        }
    }
    return cs;
}

int excess(Face f, const LabeledComplex& k) { return k.excess(f); }

MultigradedFreeComplex algebraic_co_scarf(const CoScarfComplex& cs, std::size_t n) {
    MultigradedFreeComplex f;
    f.num_vars = n;
    f.strands.resize(n);
    f.differentials.resize(n);
    const LabeledComplex& k = cs.labeled();
    std::unordered_map<Face, std::size_t> index;
    for (Face sigma : cs.interior) {
        const std::size_t size = static_cast<std::size_t>(face_size(sigma));
        if (size == 0 || size > n) throw PreconditionError("algebraic_co_scarf: interior face of unexpected size");
        const Monomial label = k.label(sigma);
        std::vector<Exponent> degree(n);
        for (std::size_t s = 0; s < n; ++s) degree[s] = cs.D() - label[s];
        auto& strand = f.strands[n - size];
        index.emplace(sigma, strand.size());
        strand.push_back(BasisElement{sigma, Monomial(std::move(degree))});
    }
    const Face vertices = k.complex.vertex_mask();
    for (std::size_t h = 1; h < n; ++h) {
        for (std::size_t col = 0; col < f.strands[h].size(); ++col) {
            const Face sigma = f.strands[h][col].face;
            const Monomial label = k.label(sigma);
            for (Face rest = vertices & ~sigma; rest; rest &= rest - 1) {
                const Face v = rest & (~rest + 1);
                const Face tau = sigma | v;
                const auto it = index.find(tau);
                if (it == index.end()) continue;
                const int position = face_size(tau & (v - 1)) + 1;
                f.differentials[h].push_back(
                    DifferentialEntry{it->second, col, position % 2 == 1 ? 1 : -1, k.label(tau) / label});
            }
        }
    }
    return f;
}

MultigradedFreeComplex algebraic_co_scarf(const MonomialIdeal& m, bool allow_noncogeneric) {
    return algebraic_co_scarf(co_scarf(m, allow_noncogeneric), m.num_vars());
}

MultigradedFreeComplex shifted_augmentation(const MultigradedFreeComplex& f) {
    MultigradedFreeComplex out;
    out.num_vars = f.num_vars;
    out.strands.push_back({BasisElement{0, Monomial(f.num_vars)}});
    out.differentials.emplace_back();
    for (const auto& strand : f.strands) out.strands.push_back(strand);
    out.differentials.emplace_back();
    if (f.strands.empty()) return out;

    // Orientation signs on F_0 so that the augmentation kills the image of d_1:
    // every column of d_1 with two entries forces a relation between their signs.
    const std::size_t count = f.strands[0].size();
    std::vector<int> sign(count, 0);
    std::vector<std::vector<std::pair<std::size_t, int>>> links(count);
    if (f.differentials.size() > 1) {
        std::map<std::size_t, std::vector<const DifferentialEntry*>> by_col;
        for (const auto& e : f.differentials[1]) by_col[e.col].push_back(&e);
        for (const auto& [col, entries] : by_col) {
            if (entries.size() != 2) continue;
            const int relation = -entries[0]->coefficient * entries[1]->coefficient;
            links[entries[0]->row].emplace_back(entries[1]->row, relation);
            links[entries[1]->row].emplace_back(entries[0]->row, relation);
        }
    }
    for (std::size_t root = 0; root < count; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t k = stack.back();
            stack.pop_back();
            for (const auto& [other, relation] : links[k]) {
                if (sign[other] == 0) {
                    sign[other] = sign[k] * relation;
                    stack.push_back(other);
                }
            }
        }
    }
    for (std::size_t k = 0; k < count; ++k) {
        out.differentials[1].push_back(DifferentialEntry{0, k, sign[k], f.strands[0][k].degree});
    }
    for (std::size_t h = 1; h < f.differentials.size(); ++h) out.differentials.push_back(f.differentials[h]);
    return out;
}

int depth_cogeneric(const MonomialIdeal& m) {
    const CoScarfComplex cs = co_scarf(m);
    int best = static_cast<int>(m.num_vars());
    for (Face f : cs.interior) best = std::min(best, face_size(f) - 1);
    return best;
}

SerreReport serre_s2(const MonomialIdeal& m, Field field) {
    m.require_proper_nonzero();
    if (m.num_vars() > 20) throw CutoffExceeded("serre_s2: more than 20 variables");
    const std::vector<MonomialPrime> minimal = minimal_primes(m);
    SerreReport report;
    const VarSet all = full_varset(m.num_vars());
    for (VarSet p = 1; p <= all; ++p) {
        const MonomialPrime prime{p};
        if (std::none_of(minimal.begin(), minimal.end(), [&](const MonomialPrime& q) { return prime.contains(q); })) continue;
        const MonomialIdeal local = localize(m, prime);
        const int vars = popcount(p);
        const int depth_local = vars - proj_dim(local, field);
        const int dim_local = vars - codim(local);
        if (depth_local < 2 && dim_local != depth_local) {
            report.holds = false;
            report.failing_prime = prime;
            return report;
        }
    }
    return report;
}

CohenMacaulayReport cm_cogeneric(const MonomialIdeal& m, Field field) {
    const CoScarfComplex cs = co_scarf(m);
    CohenMacaulayReport r;
    r.codim = codim(m);
    const int c = r.codim;
    const int n = static_cast<int>(m.num_vars());
    r.a_cohen_macaulay = is_cohen_macaulay(m, field);
    r.b_serre = serre_s2(m, field).holds;

    const auto& comps = cs.decomposition.components;
    r.c_component_codims = std::all_of(comps.begin(), comps.end(), [&](const IrreducibleComponent& x) { return x.codim() == c; });
    const Face gens = cs.extended.generator_vertices();
    const std::vector<Face> faces = cs.labeled().complex.all_faces();
    for (Face f : faces) {
        if (face_size(f) != 2 || !is_subface(f, gens)) continue;
        const auto i = static_cast<std::size_t>(std::countr_zero(f));
        const auto j = static_cast<std::size_t>(63 - std::countl_zero(f));
        if (popcount(comps[i].support() | comps[j].support()) > c + 1) r.c_component_codims = false;
    }
    r.d_excess = std::all_of(faces.begin(), faces.end(), [&](Face f) { return cs.labeled().excess(f) < c; });
    r.e_interior = std::none_of(cs.interior.begin(), cs.interior.end(), [&](Face f) { return face_size(f) - 1 < n - c; });
    return r;
}

TypeBoundReport cm_type_bound(const MonomialIdeal& m, Field field) {
    require_cogeneric(m, "cm_type_bound");
    TypeBoundReport r;
    r.components = irreducible_decomposition_oracle(m).size();
    const BettiTable t = betti_oracle(m, field);
    const int pd = proj_dim(t);
    r.type = t.total(pd);
    r.applicable = pd == codim(m) && codim(m) >= 2;
    r.holds = !r.applicable || r.type >= r.components;
    return r;
}

bool gorenstein(const MonomialIdeal& m, Field field) {
    const BettiTable t = betti_oracle(m, field);
    const int pd = proj_dim(t);
    return pd == codim(m) && t.total(pd) == 1;
}

bool principal_or_irreducible(const MonomialIdeal& m) {
    return m.size() == 1 || irreducible_decomposition_oracle(m).size() == 1;
}

namespace {

struct InequalityTables {
    BettiTable quotient;       // S/M
    BettiTable dual_quotient;  // S/M^a
};

InequalityTables inequality_tables(const MonomialIdeal& m, const DualContext& ctx, Field field) {
    return InequalityTables{betti_oracle(m, field), betti_oracle(alexander_dual(m, ctx), field)};
}

BettiInequalityCheck inequality_evaluate(const InequalityTables& t, const DualContext& ctx, int i, const Monomial& b) {
    BettiInequalityCheck out;
    const VarSet f = b.support();
    if (i >= 0) out.lhs = t.dual_quotient.at(i + 1, dual_vector(b, ctx));
    const int k = popcount(f) - i - 1;
    if (k < 0) return out;
    for (const auto& [key, rank] : t.quotient.entries()) {
        if (key.first != k + 1) continue;
        if (key.second.restricted_to(f) == b) out.rhs += rank;
    }
    return out;
}

}  // namespace

BettiInequalityCheck betti_inequality_check(const MonomialIdeal& m, const DualContext& ctx, int i, const Monomial& b,
                                    Field field) {
    ctx.validate_for(m);
    return inequality_evaluate(inequality_tables(m, ctx, field), ctx, i, b);
}

BettiInequalitySweep betti_inequality_sweep(const MonomialIdeal& m, const DualContext& ctx, Field field) {
    ctx.validate_for(m);
    const InequalityTables t = inequality_tables(m, ctx, field);
    BettiInequalitySweep sweep;
    const std::size_t n = m.num_vars();
    std::vector<Exponent> b(n, 0);
    while (true) {
        const Monomial mb(b);
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            const BettiInequalityCheck c = inequality_evaluate(t, ctx, i, mb);
            ++sweep.checked;
            if (c.lhs == c.rhs) ++sweep.equalities;
            if (!c.holds()) sweep.failures.emplace_back(i, mb);
        }
        std::size_t s = 0;
        while (s < n && b[s] == ctx.a[s]) b[s++] = 0;
        if (s == n) break;
        ++b[s];
    }
    return sweep;
}

GeneratorBoundReport generator_bound_cogeneric(const MonomialIdeal& m, Field field) {
    require_cogeneric(m, "generator_bound_cogeneric");
    GeneratorBoundReport r;
    const IrreducibleDecomposition d = irreducible_decomposition_oracle(m);
    r.components = d.size();
    r.generators = m.size();
    r.codim = d.components.front().codim();
    r.applicable = std::all_of(d.components.begin(), d.components.end(),
                               [&](const IrreducibleComponent& c) { return c.codim() == r.codim; });
    if (!r.applicable) return r;
    r.bound = static_cast<std::size_t>(r.codim - 1) * r.components + 1;
    r.bound_holds = r.generators >= r.bound;
    r.tight = r.generators == r.bound;
    r.cohen_macaulay = is_cohen_macaulay(m, field);
    if (r.tight && !r.cohen_macaulay) r.consequences_hold = false;
    if (r.codim == 2 && r.cohen_macaulay != (r.generators == r.components + 1)) r.consequences_hold = false;
    return r;
}

}  // namespace monideal
