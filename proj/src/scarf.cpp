#include "monideal/scarf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

#include "monideal/error.hpp"

namespace monideal {

namespace {

bool share_positive_exponent(const Monomial& a, const Monomial& b) {
    for (std::size_t s = 0; s < a.num_vars(); ++s) {
        if (a[s] > 0 && a[s] == b[s]) return true;
    }
    return false;
}

Monomial face_lcm(std::span<const Monomial> gens, Face f, std::size_t n) {
    Monomial acc(n);
    for (Face rest = f; rest; rest &= rest - 1) acc = lcm(acc, gens[static_cast<std::size_t>(std::countr_zero(rest))]);
    return acc;
}

std::vector<std::string> numbered_vertices(std::size_t r) {
    std::vector<std::string> names;
    names.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) names.push_back(std::to_string(i));
    return names;
}

}  // namespace

GenericityReport is_generic(const MonomialIdeal& m) {
    GenericityReport report;
    const auto& g = m.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (!share_positive_exponent(g[i], g[j])) continue;
            const Monomial mij = lcm(g[i], g[j]);
            std::optional<std::size_t> witness;
            for (std::size_t l = 0; l < g.size() && !witness; ++l) {
                if (l != i && l != j && g[l].divides_with_full_support_quotient(mij)) witness = l;
            }
            if (witness) {
                report.witnesses.emplace(std::make_pair(i, j), *witness);
            } else {
                report.violations.emplace_back(i, j);
            }
        }
    }
    report.is_generic = report.violations.empty();
    return report;
}

bool is_generic_old(const MonomialIdeal& m) {
    const auto& g = m.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (share_positive_exponent(g[i], g[j])) return false;
        }
    }
    return true;
}

namespace {

bool face_order(Face a, Face b) {
    return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
}

}  // namespace

std::vector<Face> scarf_faces(std::span<const Monomial> gens) {
    const std::size_t r = gens.size();
    if (r > kMaxVertices) throw CutoffExceeded("Scarf complex: more than 64 generators");
    const std::size_t n = r ? gens.front().num_vars() : 0;
    std::vector<Face> out{0};
    std::vector<Face> level{0};
    std::unordered_set<Face> previous{0};
    while (!level.empty()) {
        std::vector<Face> next;
        std::unordered_set<Face> next_set;
        for (Face sigma : level) {
            const std::size_t start = sigma ? static_cast<std::size_t>(std::bit_width(sigma)) : 0;
            for (std::size_t j = start; j < r; ++j) {
                const Face tau = sigma | (Face{1} << j);
                bool closed = true;
                for (Face rest = tau; rest && closed; rest &= rest - 1) closed = previous.count(tau & ~(rest & (~rest + 1))) > 0;
                if (!closed) continue;
                const Monomial label = face_lcm(gens, tau, n);
                bool unique = true;
                for (std::size_t k = 0; k < r && unique; ++k) {
                    if (!(tau >> k & 1U) && gens[k].divides(label)) unique = false;
                }
                for (Face rest = tau; rest && unique; rest &= rest - 1) {
                    if (face_lcm(gens, tau & ~(rest & (~rest + 1)), n) == label) unique = false;
                }
                if (unique && next_set.insert(tau).second) next.push_back(tau);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        previous = std::move(next_set);
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

std::vector<Face> scarf_faces_by_bucketing(std::span<const Monomial> gens) {
    const std::size_t r = gens.size();
    if (r > 20) throw CutoffExceeded("Scarf bucketing: more than 20 generators");
    const std::size_t n = r ? gens.front().num_vars() : 0;
    const std::size_t total = std::size_t{1} << r;
    std::vector<Monomial> labels(total, Monomial(n));
    std::map<Monomial, std::size_t> bucket_size;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
        labels[mask] = lcm(labels[mask & (mask - 1)], gens[low]);
    }
    for (std::size_t mask = 0; mask < total; ++mask) ++bucket_size[labels[mask]];
    std::vector<Face> out;
    for (std::size_t mask = 0; mask < total; ++mask) {
        if (bucket_size[labels[mask]] == 1) out.push_back(mask);
    }
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

LabeledComplex scarf_complex(const MonomialIdeal& m) {
    LabeledComplex out;
    out.num_vars = m.num_vars();
    out.vertex_labels = m.generators();
    out.complex = SimplicialComplex(numbered_vertices(m.size()), scarf_faces(m.generators()));
    return out;
}

Monomial non_scarf_witness(const MonomialIdeal& m, Face sigma) {
    const auto& g = m.generators();
    if (!is_generic(m).is_generic) throw PreconditionError("non_scarf_witness: ideal is not generic");
    if (sigma == 0 || (m.size() < 64 && (sigma >> m.size()) != 0)) throw PreconditionError("non_scarf_witness: bad face");
    const LabeledComplex scarf = scarf_complex(m);
    if (scarf.complex.contains(sigma)) throw PreconditionError("non_scarf_witness: face lies in the Scarf complex");

    const Monomial label = scarf.label(sigma);
    // the largest subset with this label
    Face maximal = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].divides(label)) maximal |= Face{1} << k;
    }
    for (Face rest = maximal; rest; rest &= rest - 1) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
        if (scarf.label(maximal & ~(Face{1} << i)) != label) continue;
        if (g[i].divides_with_full_support_quotient(label)) return g[i];
        const GenericityReport report = is_generic(m);
        for (Face others = maximal & ~(Face{1} << i); others; others &= others - 1) {
            const std::size_t j = static_cast<std::size_t>(std::countr_zero(others));
            const auto it = report.witnesses.find({std::min(i, j), std::max(i, j)});
            if (it == report.witnesses.end()) continue;
            const Monomial& w = g[it->second];
            if (w.divides_with_full_support_quotient(label)) return w;
        }
    }
    for (const Monomial& w : g) {
        if (w.divides_with_full_support_quotient(label)) return w;
    }
    throw ConsistencyError("non_scarf_witness: no witness exists for a non-Scarf face of a generic ideal");
}

ExtendedIdeal extended_ideal(const MonomialIdeal& m, std::optional<Exponent> d) {
    m.require_proper_nonzero();
    const Exponent bound = m.max_exponent() + 1;
    ExtendedIdeal out;
    out.D = d.value_or(bound);
    if (out.D < bound) throw PreconditionError("extended ideal: D must exceed every generator exponent");
    std::vector<Monomial> gens = m.generators();
    for (std::size_t s = 0; s < m.num_vars(); ++s) {
        const Monomial power = Monomial::pure_power(m.num_vars(), s, out.D);
        if (!m.contains(power)) {
            out.marker_variables.push_back(s);
            gens.push_back(power);
        }
    }
    out.ideal = MonomialIdeal(m.names(), std::move(gens));
    return out;
}

ExtendedScarfComplex extended_scarf_complex(const MonomialIdeal& m, std::optional<Exponent> d) {
    const ExtendedIdeal ext = extended_ideal(m, d);
    ExtendedScarfComplex out;
    out.num_generators = m.size();
    out.D = ext.D;
    out.marker_variables = ext.marker_variables;
    std::vector<Monomial> vertex_gens = m.generators();
    std::vector<std::string> names = numbered_vertices(m.size());
    for (std::size_t s : ext.marker_variables) {
        vertex_gens.push_back(Monomial::pure_power(m.num_vars(), s, ext.D));
        names.push_back(m.names()[s]);
    }
    out.labeled.num_vars = m.num_vars();
    out.labeled.complex = SimplicialComplex(std::move(names), scarf_faces(vertex_gens));
    out.labeled.vertex_labels = std::move(vertex_gens);
    return out;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    const VarSet all = full_varset(m.num_vars());
    std::vector<Face> facets;
    for (const MonomialPrime& p : minimal_primes(m)) facets.push_back(all & ~p.vars);
    return SimplicialComplex(m.names(), std::move(facets));
}

SimplicialComplex marker_restriction(const ExtendedScarfComplex& e, const std::vector<std::string>& names) {
    const SimplicialComplex restricted = e.labeled.complex.restriction(e.marker_vertices());
    std::vector<Face> faces;
    for (Face f : restricted.facets()) {
        Face g = 0;
        for (std::size_t k = 0; k < e.marker_variables.size(); ++k) {
            if (f >> (e.num_generators + k) & 1U) g |= Face{1} << e.marker_variables[k];
        }
        faces.push_back(g);
    }
    return SimplicialComplex(names, std::move(faces));
}

IrreducibleDecomposition decompose_generic(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    if (!is_generic(m).is_generic) {
        throw PreconditionError("decompose_generic needs a generic ideal; use irreducible_decomposition_oracle");
    }
    const ExtendedScarfComplex ext = extended_scarf_complex(m);
    std::vector<IrreducibleComponent> components;
    for (Face f : ext.labeled.complex.facets()) {
        const Monomial a = ext.labeled.label(f);
        std::vector<Exponent> b(m.num_vars(), 0);
        for (std::size_t s = 0; s < b.size(); ++s) b[s] = a[s] < ext.D ? a[s] : 0;
        components.emplace_back(Monomial(std::move(b)));
    }
    IrreducibleDecomposition d = make_irredundant(components);
    if (d.size() != ext.labeled.complex.facets().size()) {
        throw ConsistencyError("decompose_generic: facets of the extended Scarf complex gave redundant components");
    }
    return d;
}

bool scarf_edge_condition(const MonomialIdeal& m, const LabeledComplex& scarf) {
    for (Face f : scarf.complex.all_faces()) {
        if (face_size(f) != 2) continue;
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(f));
        const std::size_t j = static_cast<std::size_t>(63 - std::countl_zero(f));
        if (share_positive_exponent(m[i], m[j])) return false;
    }
    return true;
}

}  // namespace monideal
