#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monideal/binomial.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// <(Π_{s∈I} x_s)^{n-|I|+1} : ∅ ≠ I ⊆ {1..n}>.
MonomialIdeal tree_ideal(std::size_t n);

/// <x_1^{π(1)} ... x_n^{π(n)} : π a permutation>.
MonomialIdeal permutahedron_ideal(std::size_t n);

/// ⋂_{i=1..r} <x_1^i, ..., x_{c-1}^i, x_{c-1+i}> in c-1+r variables.
MonomialIdeal optimal_ideal(std::size_t c, std::size_t r);

/// <x_1,y_1> ∩ ... ∩ <x_n,y_n> in variables x1..xn, y1..yn.
MonomialIdeal paired_primes_ideal(std::size_t n);

struct Fixture {
    std::string name;
    MonomialIdeal ideal;
};

/// <x,y> ∩ <x²,y²,z²> ∩ <x,z>.
MonomialIdeal three_component_ideal();
/// <ac, bd, a³b², a²b³>.
MonomialIdeal codim_gap_ideal();
/// <x², xy, xz>.
MonomialIdeal chain_gap_ideal();
/// <x,y²> ∩ <y,z> ∩ <z²,w>: pure and connected in codimension one but not (S_2).
MonomialIdeal non_s2_ideal();
/// <x,y> ∩ <y²,z²> ∩ <z,w>: same associated primes, Cohen-Macaulay.
MonomialIdeal cm_partner_ideal();

/// The named monomial fixtures above plus small members of each family.
std::vector<Fixture> fixtures();

/// Seven full-support binomials in a,b,c,d defining a monomial curve.
BinomialSystem curve_lattice_system();
/// ac - b², ad - bc, bd - c².
BinomialSystem twisted_cubic_system();

/// Deterministic 64-bit generator; draws use plain modular reduction so a
/// seed gives the same stream on every platform.
class CorpusRng {
public:
    explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

struct CorpusParams {
    std::size_t count = 100;
    std::size_t max_vars = 4;
    std::size_t max_generators = 6;
    Exponent max_exponent = 4;
};

enum class CorpusKind { any, generic, cogeneric, uniform_generic, bivariate_generic };

CorpusKind parse_corpus_kind(const std::string& name);

/// Random nonzero proper ideals, with n in [2, max_vars] and up to
/// max_generators generators. Generic members are found by rejection;
/// cogeneric members are Alexander duals of generic ones.
std::vector<MonomialIdeal> generate_corpus(CorpusKind kind, std::uint64_t seed, const CorpusParams& params);

}  // namespace monideal
