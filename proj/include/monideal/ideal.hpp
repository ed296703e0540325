#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monideal/monomial.hpp"

namespace monideal {

/// Names x1, ..., xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// A monomial ideal in k[x_1..x_n] stored as its minimal generating antichain,
/// sorted in CanonicalOrder. Two ideals are equal iff their representations are.
///
/// The zero ideal (no generators) and the unit ideal (generator 1) can be
/// represented; theorem-level operations reject both via require_proper_nonzero().
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes and sorts `gens`. All generators must have names.size() variables.
    MonomialIdeal(std::vector<std::string> names, std::vector<Monomial> gens);

    /// Same, with default variable names.
    MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

    std::size_t num_vars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const Monomial& operator[](std::size_t i) const { return gens_[i]; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

    /// Throws ZeroIdealError / UnitIdealError.
    void require_proper_nonzero() const;

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;

    /// Largest exponent appearing in any minimal generator (0 for the zero ideal).
    Exponent max_exponent() const noexcept;

    bool operator==(const MonomialIdeal& other) const {
        return num_vars() == other.num_vars() && gens_ == other.gens_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Monomial> gens_;
};

/// The divisibility antichain of `gens`, canonically sorted.
MonomialIdeal minimalize(std::vector<std::string> names, std::vector<Monomial> gens);

/// m^b = <x_s^{b_s} : b_s >= 1>.
struct IrreducibleComponent {
    Monomial bound;

    explicit IrreducibleComponent(Monomial b);

    VarSet support() const { return bound.support(); }
    int codim() const { return popcount(bound.support()); }
    MonomialIdeal as_ideal(std::vector<std::string> names) const;

    /// Ideal inclusion m^this ⊆ m^other.
    bool is_contained_in(const IrreducibleComponent& other) const;

    auto operator<=>(const IrreducibleComponent&) const = default;
    bool operator==(const IrreducibleComponent&) const = default;
};

/// Irredundant irreducible decomposition, components in canonical order of their bounds.
struct IrreducibleDecomposition {
    std::vector<IrreducibleComponent> components;

    std::size_t size() const noexcept { return components.size(); }
    bool operator==(const IrreducibleDecomposition&) const = default;
};

/// Sorts, deduplicates and drops every component that contains another one.
IrreducibleDecomposition make_irredundant(std::vector<IrreducibleComponent> components);

/// A monomial prime <x_s : s in vars>.
struct MonomialPrime {
    VarSet vars = 0;

    int codim() const noexcept { return popcount(vars); }
    bool contains(const MonomialPrime& other) const noexcept { return (other.vars & ~vars) == 0; }

    auto operator<=>(const MonomialPrime&) const = default;
    bool operator==(const MonomialPrime&) const = default;
};

std::vector<std::string> prime_names(const MonomialPrime& p, std::span<const std::string> names);

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Irreducible decomposition by recursive generator splitting: the first
/// generator (canonical order) with at least two support variables is split at
/// its first support variable s as x_s^e * m', recursing on M + <x_s^e> and M + <m'>.
IrreducibleDecomposition irreducible_decomposition_oracle(const MonomialIdeal& m);

/// Intersection of the components, as an ideal.
MonomialIdeal ideal_of(const IrreducibleDecomposition& d, std::vector<std::string> names);

/// Number of standard monomials, or nullopt when infinite.
std::optional<std::uint64_t> colength(const MonomialIdeal& m);

/// Set the variables outside `p` to 1. The result lives in #p variables,
/// keeping the names of the surviving variables in their original order.
MonomialIdeal localize(const MonomialIdeal& m, const MonomialPrime& p);

MonomialIdeal radical(const MonomialIdeal& m);

/// Inclusion-minimal variable sets meeting every generator support, sorted.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& m);

int codim(const MonomialIdeal& m);

}  // namespace monideal
