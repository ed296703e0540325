#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monideal/complexes.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Outcome of the generator-pair genericity test. Indices are 0-based
/// positions in the canonical generator list.
struct GenericityReport {
    bool is_generic = true;
    /// Pairs (i, j), i < j, sharing a positive exponent with no witness.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    /// First admissible witness l (canonical order) for each pair that needs one.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> witnesses;
};

/// For every pair of generators with the same positive exponent in some
/// variable, look for a third generator dividing their lcm with a quotient of
/// full support.
GenericityReport is_generic(const MonomialIdeal& m);

/// The stricter condition: no two generators share a positive exponent in any variable.
bool is_generic_old(const MonomialIdeal& m);

/// For generic M and a generator subset `sigma` outside the Scarf complex,
/// a generator m dividing m_sigma with supp(m_sigma / m) = supp(m_sigma).
/// Throws PreconditionError if M is not generic or sigma is a Scarf face,
/// ConsistencyError if no witness exists.
Monomial non_scarf_witness(const MonomialIdeal& m, Face sigma);

/// Faces of the Scarf complex of the ordered generator list: subsets whose
/// lcm is attained by no other subset. Built level by level using the exact
/// local test "no generator outside sigma divides m_sigma and no vertex of
/// sigma can be dropped without changing m_sigma". Sorted by size, then bit pattern.
std::vector<Face> scarf_faces(std::span<const Monomial> gens);

/// Independent oracle: bucket all 2^r subsets by label and keep the singleton
/// buckets. Makes no closure assumption. r <= 20. Same order as scarf_faces.
std::vector<Face> scarf_faces_by_bucketing(std::span<const Monomial> gens);

/// Δ_M on vertices "1".."r" (canonical generator order).
LabeledComplex scarf_complex(const MonomialIdeal& m);

/// M* = M + <x_1^D, ..., x_n^D>.
struct ExtendedIdeal {
    MonomialIdeal ideal;
    Exponent D = 0;
    /// Variables whose power x_s^D survives minimalization, in index order.
    std::vector<std::size_t> marker_variables;
};

/// D defaults to 1 + the largest exponent of a minimal generator. An explicit
/// D must exceed every such exponent.
ExtendedIdeal extended_ideal(const MonomialIdeal& m, std::optional<Exponent> d = std::nullopt);

/// Δ_{M*}: vertices "1".."r" for the generators of M, then one marker vertex
/// per surviving x_s^D, named after the variable.
struct ExtendedScarfComplex {
    LabeledComplex labeled;
    std::size_t num_generators = 0;
    Exponent D = 0;
    std::vector<std::size_t> marker_variables;

    Face generator_vertices() const noexcept { return num_generators >= 64 ? ~Face{0} : (Face{1} << num_generators) - 1; }
    Face marker_vertices() const noexcept { return labeled.complex.vertex_mask() & ~generator_vertices(); }
};

ExtendedScarfComplex extended_scarf_complex(const MonomialIdeal& m, std::optional<Exponent> d = std::nullopt);

/// V(M) on the variables: the variable sets containing no generator support.
SimplicialComplex stanley_reisner(const MonomialIdeal& m);

/// Restriction of Δ_{M*} to its marker vertices, re-expressed on all n
/// variables so it can be compared with stanley_reisner(M).
SimplicialComplex marker_restriction(const ExtendedScarfComplex& e, const std::vector<std::string>& names);

/// Irreducible components read off the facets of Δ_{M*}: b_s = (a_σ)_s when it
/// is below D, else 0. Requires generic M.
IrreducibleDecomposition decompose_generic(const MonomialIdeal& m);

/// Edge condition: no edge {i,j} of Δ_M has generators with the
/// same positive exponent in some variable.
bool scarf_edge_condition(const MonomialIdeal& m, const LabeledComplex& scarf);

}  // namespace monideal
