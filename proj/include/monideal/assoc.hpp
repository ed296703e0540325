#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "monideal/complexes.hpp"
#include "monideal/ideal.hpp"
#include "monideal/linalg.hpp"

namespace monideal {

/// Associated primes of S/M, sorted, with a minimality flag per prime.
struct AssPrimeSet {
    std::vector<MonomialPrime> primes;
    std::vector<bool> minimal;

    bool contains(const MonomialPrime& p) const;
    std::vector<MonomialPrime> embedded() const;
    bool has_embedded() const { return !embedded().empty(); }
};

/// Radicals of the irreducible components.
AssPrimeSet associated_primes(const MonomialIdeal& m);

struct SpectrumReport {
    int codim = 0;
    int proj_dim = 0;
    /// One associated prime of each codimension in (codim, proj_dim], when found.
    std::map<int, MonomialPrime> witnesses;
    std::vector<int> missing;
    bool holds() const noexcept { return missing.empty(); }
};

/// Every codimension strictly above codim(M) up to proj_dim(S/M) is attained
/// by an associated prime. Requires generic M.
SpectrumReport check_embedded_spectrum(const MonomialIdeal& m, Field field = Field::rationals());

struct ChainReport {
    /// For each associated prime, a chain dropping codimension by one at each
    /// step and ending at a minimal prime (empty when none exists).
    std::vector<std::pair<MonomialPrime, std::vector<MonomialPrime>>> chains;
    std::vector<MonomialPrime> failures;
    bool holds() const noexcept { return failures.empty(); }
};

ChainReport check_saturated_chains(const MonomialIdeal& m);

struct ConnectivityReport {
    std::vector<std::pair<MonomialPrime, MonomialPrime>> disconnected;
    bool holds() const noexcept { return disconnected.empty(); }
};

/// Any two associated primes are joined by a sequence P_0, ..., P_t in Ass
/// with codim(P_i + P_{i-1}) = min(codim P_i, codim P_{i-1}) + 1.
ConnectivityReport connectivity_sequence(const MonomialIdeal& m);

/// On every facet σ of the extended Scarf complex: |σ ∩ generators| = codim M
/// and |σ ∩ markers| = dim S/M. Requires generic M with no embedded primes.
bool check_facet_cardinalities(const MonomialIdeal& m);

struct ShellabilityReport {
    bool cohen_macaulay = false;
    ShellingResult scarf;
    ShellingResult stanley_reisner;
    bool holds() const noexcept {
        return cohen_macaulay && scarf.verdict != ShellingResult::Verdict::not_shellable &&
               stanley_reisner.verdict != ShellingResult::Verdict::not_shellable;
    }
};

/// CM, Δ_M shellable and V(M) shellable, for generic M with no embedded primes.
ShellabilityReport shellability_consequences(const MonomialIdeal& m, Field field = Field::rationals(),
                                             std::size_t facet_cutoff = kDefaultShellingCutoff);

}  // namespace monideal
