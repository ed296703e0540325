#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monideal/complexes.hpp"
#include "monideal/ideal.hpp"
#include "monideal/linalg.hpp"

namespace monideal {

/// One free generator: which face it comes from and its multidegree.
struct BasisElement {
    Face face = 0;
    Monomial degree;
};

/// Nonzero differential entry: coefficient * x^exponent from source column to target row.
struct DifferentialEntry {
    std::size_t row = 0;  // index into strands[h-1]
    std::size_t col = 0;  // index into strands[h]
    int coefficient = 0;
    Monomial exponent;
};

/// F_0 <- F_1 <- ... with sparse signed-monomial differentials.
/// differentials[h] maps strands[h] to strands[h-1]; differentials[0] is empty.
struct MultigradedFreeComplex {
    std::size_t num_vars = 0;
    std::vector<std::vector<BasisElement>> strands;
    std::vector<std::vector<DifferentialEntry>> differentials;

    std::vector<std::size_t> ranks() const;
    std::size_t length() const;  // largest h with a nonzero strand
};

/// Free complex supported on `faces` (must be closed under subsets) with the
/// simplicial differential d(e_σ) = Σ ±(m_σ / m_{σ∖i}) e_{σ∖i}; strand h holds
/// the faces with h vertices. Labels are lcms of `gens`.
MultigradedFreeComplex simplicial_free_complex(const std::vector<Monomial>& gens, std::size_t n,
                                               const std::vector<Face>& faces);

/// Algebraic Scarf complex of S/M. Throws PreconditionError if Δ_M is not
/// closed under taking subsets.
MultigradedFreeComplex algebraic_scarf(const MonomialIdeal& m);

inline constexpr std::size_t kDefaultTaylorMaxGenerators = 20;

/// Taylor resolution of S/M (full simplex on the generators).
MultigradedFreeComplex taylor_complex(const MonomialIdeal& m, std::size_t max_generators = kDefaultTaylorMaxGenerators);

/// Consecutive differentials compose to zero and every entry is homogeneous.
bool is_complex(const MultigradedFreeComplex& f);

/// No entry is a unit (nonzero constant).
bool is_minimal(const MultigradedFreeComplex& f);

struct ExactnessReport {
    bool exact = true;
    /// First multidegree where homology is wrong.
    std::optional<Monomial> counterexample;
};

/// Whether F is a resolution of S/M: for every multidegree b in the lcm
/// closure of the basis degrees and the generators (plus b = 0), the
/// degree-b vector-space complex has homology k in degree 0 exactly when
/// x^b is not in M, and nothing else. A sequence of maps that is not a
/// complex is reported as inexact without a counterexample.
ExactnessReport is_exact(const MultigradedFreeComplex& f, const MonomialIdeal& m, Field field = Field::rationals());

/// β_{i,b}; the S/M convention throughout unless a function says otherwise.
class BettiTable {
public:
    void add(int i, const Monomial& b, std::size_t rank);
    std::size_t at(int i, const Monomial& b) const;
    std::size_t total(int i) const;
    std::vector<std::size_t> totals() const;  // index = homological degree
    int max_index() const;                    // -1 if empty
    const std::map<std::pair<int, Monomial>, std::size_t>& entries() const noexcept { return entries_; }

    /// β_i(M) = β_{i+1}(S/M).
    BettiTable shifted_to_module() const;

    bool operator==(const BettiTable&) const = default;

private:
    std::map<std::pair<int, Monomial>, std::size_t> entries_;
};

/// All lcms of nonempty generator subsets, sorted.
std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& gens, std::size_t n);

/// The upper Koszul simplicial complex K^b(M): squarefree τ ⊆ supp(b) with
/// x^{b-τ} ∈ M, on vertices = the variables.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& m, const Monomial& b);

/// β_{i,b}(S/M) = dim H~_{i-2}(K^b(M)) for b in the lcm lattice, plus β_{0,0} = 1.
BettiTable betti_oracle(const MonomialIdeal& m, Field field = Field::rationals());

/// Betti numbers read off any free resolution: dim of the homology of F ⊗ k
/// in each multidegree (only unit entries survive tensoring with k).
BettiTable betti_from_complex(const MultigradedFreeComplex& f, Field field = Field::rationals());

/// Betti table of the complex itself when it is minimal (one entry per basis element).
BettiTable basis_degree_table(const MultigradedFreeComplex& f);

int proj_dim(const MonomialIdeal& m, Field field = Field::rationals());
int depth(const MonomialIdeal& m, Field field = Field::rationals());
bool is_cohen_macaulay(const MonomialIdeal& m, Field field = Field::rationals());
/// Total Betti number of S/M in homological degree proj_dim.
std::size_t cm_type(const MonomialIdeal& m, Field field = Field::rationals());

/// Same invariants from an already computed table.
int proj_dim(const BettiTable& t);

}  // namespace monideal
