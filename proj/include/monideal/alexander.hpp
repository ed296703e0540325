#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monideal/complexes.hpp"
#include "monideal/ideal.hpp"
#include "monideal/linalg.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"

namespace monideal {

/// The duality bound a.
struct DualContext {
    Monomial a;

    /// a = (D-1, ..., D-1) with D = 1 + the largest generator exponent of M.
    static DualContext standard(const MonomialIdeal& m);
    /// Throws PreconditionError unless a_s is at least every s-th generator exponent.
    void validate_for(const MonomialIdeal& m) const;
};

/// (b^a)_s = a_s + 1 - b_s when b_s >= 1, else 0. Requires b <= a.
Monomial dual_vector(const Monomial& b, const DualContext& ctx);

/// M^a, computed from the irreducible components and from the generators
/// separately; throws ConsistencyError if the two disagree.
MonomialIdeal alexander_dual(const MonomialIdeal& m, const DualContext& ctx);

struct CogenericityReport {
    bool is_cogeneric = true;
    /// Component index pairs sharing a minimal generator with no witness component.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> witnesses;
    /// Result of is_generic on the dual, which must agree.
    bool dual_is_generic = true;
    IrreducibleDecomposition decomposition;
};

/// Direct test on the irredundant irreducible decomposition, cross-checked
/// against genericity of the Alexander dual (ConsistencyError on mismatch).
CogenericityReport is_cogeneric(const MonomialIdeal& m);

/// Extended Scarf complex of M^a with a = (D-1, ...), vertices "1".."r"
/// (one per irreducible component) then variable markers.
struct CoScarfComplex {
    ExtendedScarfComplex extended;
    IrreducibleDecomposition decomposition;
    MonomialIdeal dual;
    /// Faces whose label has full support, sorted by size then bit pattern.
    std::vector<Face> interior;

    const LabeledComplex& labeled() const noexcept { return extended.labeled; }
    Exponent D() const noexcept { return extended.D; }
    bool is_interior(Face f) const;
    /// Display form of a face, e.g. "{1,2,x}".
    std::string face_name(Face f) const;
};

/// Requires cogeneric M unless `allow_noncogeneric`. Also checks that the
/// label of every face inside {1..r} is the dual of the sum of its components.
CoScarfComplex co_scarf(const MonomialIdeal& m, bool allow_noncogeneric = false);

/// #supp(m_f) - #f.
int excess(Face f, const LabeledComplex& k);

/// Minimal free resolution of M (module convention): faces σ of the interior
/// in homological degree n - #σ and multidegree D - a_σ.
MultigradedFreeComplex algebraic_co_scarf(const CoScarfComplex& cs, std::size_t n);
MultigradedFreeComplex algebraic_co_scarf(const MonomialIdeal& m, bool allow_noncogeneric = false);

/// Prepends S in degree 0 and maps each generator of F_0 to ± its monomial,
/// giving a resolution of S/M from a resolution of M. The signs are chosen
/// so that the composite with d_1 vanishes.
MultigradedFreeComplex shifted_augmentation(const MultigradedFreeComplex& f);

/// Minimal dimension of an interior co-Scarf face.
int depth_cogeneric(const MonomialIdeal& m);

/// Serre's (S_2) at monomial primes: for every monomial P containing a
/// minimal prime, depth < 2 at P forces depth = dim at P.
struct SerreReport {
    bool holds = true;
    std::optional<MonomialPrime> failing_prime;
};
SerreReport serre_s2(const MonomialIdeal& m, Field field = Field::rationals());

struct CohenMacaulayReport {
    bool a_cohen_macaulay = false;
    bool b_serre = false;
    bool c_component_codims = false;
    bool d_excess = false;
    bool e_interior = false;
    int codim = 0;

    bool all_equal() const noexcept {
        return a_cohen_macaulay == b_serre && b_serre == c_component_codims && c_component_codims == d_excess &&
               d_excess == e_interior;
    }
};

/// The five Cohen-Macaulay criteria for a cogeneric ideal, each evaluated on its own.
CohenMacaulayReport cm_cogeneric(const MonomialIdeal& m, Field field = Field::rationals());

struct TypeBoundReport {
    bool applicable = false;
    std::size_t type = 0;
    std::size_t components = 0;
    bool holds = true;
};

/// type(S/M) >= number of irreducible components, for CM cogeneric M of codim >= 2.
TypeBoundReport cm_type_bound(const MonomialIdeal& m, Field field = Field::rationals());

/// S/M Cohen-Macaulay of type 1.
bool gorenstein(const MonomialIdeal& m, Field field = Field::rationals());

/// Principal or irreducible.
bool principal_or_irreducible(const MonomialIdeal& m);

/// β_{i, b^a}(M^a) <= Σ_{c·F = b} β_{#F-i-1, c}(M) in the module convention,
/// F = supp(b). Both sides from betti_oracle.
struct BettiInequalityCheck {
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    bool holds() const noexcept { return lhs <= rhs; }
};
BettiInequalityCheck betti_inequality_check(const MonomialIdeal& m, const DualContext& ctx, int i, const Monomial& b,
                                    Field field = Field::rationals());

struct BettiInequalitySweep {
    std::size_t checked = 0;
    std::size_t equalities = 0;
    std::vector<std::pair<int, Monomial>> failures;
    bool holds() const noexcept { return failures.empty(); }
};

/// Every b in the box [0, a] and every homological degree 0..n.
BettiInequalitySweep betti_inequality_sweep(const MonomialIdeal& m, const DualContext& ctx, Field field = Field::rationals());

struct GeneratorBoundReport {
    bool applicable = false;
    int codim = 0;
    std::size_t components = 0;
    std::size_t generators = 0;
    std::size_t bound = 0;
    bool bound_holds = true;
    bool tight = false;
    bool cohen_macaulay = false;
    /// Tight bound forces CM; for c = 2, CM iff exactly r + 1 generators.
    bool consequences_hold = true;
};
GeneratorBoundReport generator_bound_cogeneric(const MonomialIdeal& m, Field field = Field::rationals());

}  // namespace monideal
