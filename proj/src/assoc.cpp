#include "monideal/assoc.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "monideal/error.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"

namespace monideal {

bool AssPrimeSet::contains(const MonomialPrime& p) const { return std::binary_search(primes.begin(), primes.end(), p); }

std::vector<MonomialPrime> AssPrimeSet::embedded() const {
    std::vector<MonomialPrime> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!minimal[i]) out.push_back(primes[i]);
    }
    return out;
}

AssPrimeSet associated_primes(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    std::set<MonomialPrime> primes;
    for (const auto& c : irreducible_decomposition_oracle(m).components) primes.insert(MonomialPrime{c.support()});
    AssPrimeSet out;
    out.primes.assign(primes.begin(), primes.end());
    for (const MonomialPrime& p : out.primes) {
        const bool is_minimal = std::none_of(out.primes.begin(), out.primes.end(),
                                             [&](const MonomialPrime& q) { return q != p && p.contains(q); });
        out.minimal.push_back(is_minimal);
    }
    return out;
}

namespace {

void require_generic(const MonomialIdeal& m, const char* what) {
    if (!is_generic(m).is_generic) throw PreconditionError(std::string(what) + " needs a generic ideal");
}

void require_no_embedded(const AssPrimeSet& ass, const char* what) {
    if (ass.has_embedded()) throw PreconditionError(std::string(what) + " needs an ideal without embedded primes");
}

}  // namespace

SpectrumReport check_embedded_spectrum(const MonomialIdeal& m, Field field) {
    require_generic(m, "check_embedded_spectrum");
    const AssPrimeSet ass = associated_primes(m);
    SpectrumReport r;
    r.codim = codim(m);
    r.proj_dim = proj_dim(m, field);
    for (int i = r.codim + 1; i <= r.proj_dim; ++i) {
        const auto it = std::find_if(ass.primes.begin(), ass.primes.end(), [&](const MonomialPrime& p) { return p.codim() == i; });
        if (it == ass.primes.end()) {
            r.missing.push_back(i);
        } else {
            r.witnesses.emplace(i, *it);
        }
    }
    return r;
}

ChainReport check_saturated_chains(const MonomialIdeal& m) {
    const AssPrimeSet ass = associated_primes(m);
    ChainReport r;
    std::function<bool(std::size_t, std::vector<MonomialPrime>&)> descend = [&](std::size_t k, std::vector<MonomialPrime>& chain) {
        chain.push_back(ass.primes[k]);
        if (ass.minimal[k]) return true;
        for (std::size_t j = 0; j < ass.primes.size(); ++j) {
            const MonomialPrime& q = ass.primes[j];
            if (q.codim() + 1 == ass.primes[k].codim() && ass.primes[k].contains(q) && descend(j, chain)) return true;
        }
        chain.pop_back();
        return false;
    };
    for (std::size_t k = 0; k < ass.primes.size(); ++k) {
        std::vector<MonomialPrime> chain;
        if (!descend(k, chain)) r.failures.push_back(ass.primes[k]);
        r.chains.emplace_back(ass.primes[k], std::move(chain));
    }
    return r;
}

ConnectivityReport connectivity_sequence(const MonomialIdeal& m) {
    const AssPrimeSet ass = associated_primes(m);
    const std::size_t k = ass.primes.size();
    std::vector<std::size_t> component(k);
    for (std::size_t i = 0; i < k; ++i) component[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return component[i] == i ? i : component[i] = find(component[i]);
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const MonomialPrime& p = ass.primes[i];
            const MonomialPrime& q = ass.primes[j];
            if (popcount(p.vars | q.vars) == std::min(p.codim(), q.codim()) + 1) component[find(i)] = find(j);
        }
    }
    ConnectivityReport r;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (find(i) != find(j)) r.disconnected.emplace_back(ass.primes[i], ass.primes[j]);
        }
    }
    return r;
}

bool check_facet_cardinalities(const MonomialIdeal& m) {
    require_generic(m, "check_facet_cardinalities");
    require_no_embedded(associated_primes(m), "check_facet_cardinalities");
    const ExtendedScarfComplex ext = extended_scarf_complex(m);
    const int c = codim(m);
    const int dim = static_cast<int>(m.num_vars()) - c;
    for (Face f : ext.labeled.complex.facets()) {
        if (face_size(f & ext.generator_vertices()) != c) return false;
        if (face_size(f & ext.marker_vertices()) != dim) return false;
    }
    return true;
}

ShellabilityReport shellability_consequences(const MonomialIdeal& m, Field field, std::size_t facet_cutoff) {
    require_generic(m, "shellability_consequences");
    require_no_embedded(associated_primes(m), "shellability_consequences");
    ShellabilityReport r;
    r.cohen_macaulay = is_cohen_macaulay(m, field);
    r.scarf = is_shellable(scarf_complex(m).complex, facet_cutoff);
    r.stanley_reisner = is_shellable(stanley_reisner(m), facet_cutoff);
    return r;
}

}  // namespace monideal
