#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monideal/complexes.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Integer polynomial, coefficient i is the coefficient of x^i. Trailing zeros are trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);

    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    std::int64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::int64_t at_one() const noexcept;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    bool operator==(const IntPolynomial&) const = default;

    std::string to_string() const;  // "[1, 2, 1]"

private:
    void trim();
    std::vector<std::int64_t> c_;
};

/// h(x) = Σ_i f_{i-1} x^i (1-x)^{d-i}. Requires dim K <= d - 1; zero for the void complex.
IntPolynomial h_polynomial(const SimplicialComplex& k, std::size_t d);

/// Same transform applied to an arbitrary face list (e.g. the interior faces).
IntPolynomial h_polynomial_of_faces(const std::vector<Face>& faces, std::size_t d);

/// Γ_F for a labeled triangulation of the simplex on the variables: the
/// faces whose label support lies in F.
SimplicialComplex restrict_to_support(const LabeledComplex& gamma, VarSet f);

/// Faces whose label support is the full variable set.
std::vector<Face> interior_faces(const LabeledComplex& gamma);

/// ℓ_W = Σ_{F ⊆ W} (-1)^{#W-#F} h(Γ_F, x) with ambient dimension #F.
IntPolynomial local_h(const LabeledComplex& gamma, VarSet w);

/// h(Γ, x) = Σ_W ℓ_W(Γ_W, x) as an exact polynomial identity.
bool check_decomposition(const LabeledComplex& gamma);

struct LocalHReport {
    bool decomposition = true;
    bool symmetric = true;
    bool nonnegative = true;
    bool unimodal_bound = true;         // ℓ_i >= ℓ_1 for 1 <= i <= #W-1
    bool interior_vertex_count = true;  // ℓ_1(Γ_W) = interior vertices of Γ_W, #W >= 2
    bool facet_count = true;            // h(Γ, 1) = number of facets
    bool interior_reversal = true;      // h_i(int Γ) = h_{n-i}(Γ)
    std::vector<std::string> findings;

    bool all() const noexcept {
        return decomposition && symmetric && nonnegative && unimodal_bound && interior_vertex_count && facet_count &&
               interior_reversal;
    }
};

LocalHReport check_local_h_properties(const LabeledComplex& gamma);

struct ComponentBoundReport {
    bool applicable = false;
    int support_size = 0;
    std::size_t generators = 0;
    std::size_t components = 0;
    std::size_t bound = 0;
    /// 1 + Σ_{#W=c} Σ_{i=1}^{c-1} ℓ_i(Γ_W), the intermediate quantity of the counting argument.
    std::int64_t local_sum = 0;
    bool holds = true;
};

/// At least (c-1) r + 1 irreducible components for generic M whose generators
/// all have support size c. Non-generic input throws; non-uniform support is
/// reported as not applicable.
ComponentBoundReport check_component_bound(const MonomialIdeal& m);

struct BivariateReport {
    std::size_t generators = 0;
    std::size_t components = 0;
    bool exactly_r_plus_one = false;
    bool edges_small = false;  // #supp(m_σ) <= 3 on every edge of Δ_M
    bool holds() const noexcept { return exactly_r_plus_one == edges_small; }
};

/// Requires generic M with every generator bivariate.
BivariateReport check_bivariate(const MonomialIdeal& m);

struct InteriorFaceReport {
    std::size_t special_vertices = 0;  // vertices of `points` whose label support has size c
    bool hypothesis = false;           // no interior face of dimension n-c-1
    std::size_t interior_top = 0;      // interior faces of dimension n-c
    bool holds() const noexcept { return !hypothesis || interior_top >= special_vertices; }
};

/// Interior faces of dimension n-c against the number of points lying in the
/// relative interior of (c-1)-faces, taken from the vertices in `points`.
/// For c = 1 those faces are the corners of the simplex, which hold no new
/// points, so the count is 0.
InteriorFaceReport check_interior_face_count(const LabeledComplex& gamma, int c, Face points);

}  // namespace monideal
