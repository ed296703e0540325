#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/linalg.hpp"

namespace monideal {

/// x^plus - x^minus with disjoint supports. The common monomial factor of the
/// two terms is divided out at construction, which is valid in lattice ideals
/// where every variable is a nonzerodivisor.
class Binomial {
public:
    Binomial(Monomial plus, Monomial minus);

    const Monomial& plus() const noexcept { return plus_; }
    const Monomial& minus() const noexcept { return minus_; }
    std::size_t num_vars() const noexcept { return plus_.num_vars(); }
    bool is_zero() const noexcept { return plus_ == minus_; }
    /// No coordinate of plus - minus vanishes.
    bool has_full_support() const;
    Binomial negated() const { return Binomial(minus_, plus_); }

    bool operator==(const Binomial&) const = default;

private:
    Monomial plus_;
    Monomial minus_;
};

std::string to_string(const Binomial& b, const std::vector<std::string>& names);

/// Weighted reverse lexicographic order: larger weighted degree wins; ties go
/// to the monomial with the smaller exponent in the last variable (per
/// `variable_order`, largest variable first) where the two differ.
struct TermOrder {
    std::vector<std::int64_t> weights;
    std::vector<std::size_t> variable_order;

    static TermOrder revlex(std::size_t n);
    static TermOrder weighted_revlex(std::vector<std::int64_t> weights);

    std::int64_t degree(const Monomial& m) const;
    /// True when a is strictly larger than b.
    bool greater(const Monomial& a, const Monomial& b) const;
    void validate(std::size_t n) const;
};

/// The binomial with its larger term first.
Binomial oriented(const Binomial& b, const TermOrder& order);

struct BinomialSystem {
    std::vector<std::string> names;
    std::vector<Binomial> binomials;
};

/// "vars:" header then one binomial per line, e.g. `a*c - b^2`.
BinomialSystem parse_binomials(std::string_view text);
std::string format_binomials(const BinomialSystem& s);

inline constexpr std::int64_t kDefaultDegreeCap = 200;

/// Reduced Gröbner basis, each element oriented with its leading term first,
/// sorted by leading term (largest first). Throws CutoffExceeded when an
/// S-pair degree passes `degree_cap`.
std::vector<Binomial> buchberger(const std::vector<Binomial>& gens, const TermOrder& order,
                                 std::int64_t degree_cap = kDefaultDegreeCap);

/// Ideal of the leading terms.
MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, const TermOrder& order, std::vector<std::string> names);

struct IngenReport {
    MonomialIdeal initial;
    bool generic = false;
    bool generic_old = false;
    bool scarf_exact = false;
    bool scarf_minimal = false;
    bool edge_condition = false;
};

/// Revlex initial ideal of a full-support binomial system and its genericity.
/// Throws PreconditionError when some generator lacks full support.
IngenReport check_ingen(const BinomialSystem& s, const TermOrder& order, Field field = Field::rationals());

struct PdBoundReport {
    int codim = 0;
    int proj_dim = 0;
    std::int64_t bound = 0;
    bool holds() const noexcept { return proj_dim <= bound; }
};

/// proj_dim(S/M) <= 2^c - 1 for the initial ideal M.
PdBoundReport check_pd_bound(const MonomialIdeal& initial, Field field = Field::rationals());

struct ConjectureReport {
    int proj_dim = 0;
    std::vector<int> associated_codims;
    bool holds = false;
    /// Whether a failure would contradict a theorem (revlex, full-support input).
    bool asserted = false;
};

/// Whether some associated prime has codim equal to proj_dim(S/M). Report only.
ConjectureReport conjecture_report(const MonomialIdeal& initial, bool asserted, Field field = Field::rationals());

/// Initial ideals for all weight vectors in {lo..hi}^n with revlex tie-breaking,
/// deduplicated and sorted.
std::vector<MonomialIdeal> census_initial_ideals(const BinomialSystem& s, std::int64_t lo, std::int64_t hi);

}  // namespace monideal
