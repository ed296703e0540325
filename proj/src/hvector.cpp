#include "monideal/hvector.hpp"

#include <algorithm>
#include <bit>

#include "monideal/error.hpp"
#include "monideal/scarf.hpp"

namespace monideal {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPolynomial::at_one() const noexcept {
    std::int64_t s = 0;
    for (auto v : c_) s += v;
    return s;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<std::int64_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] + o[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<std::int64_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] - o[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

IntPolynomial h_polynomial_of_faces(const std::vector<Face>& faces, std::size_t d) {
    std::vector<std::int64_t> f(d + 1, 0);
    for (Face face : faces) {
        const auto size = static_cast<std::size_t>(face_size(face));
        if (size > d) throw PreconditionError("h_polynomial: face larger than the ambient simplex");
        ++f[size];
    }
    const IntPolynomial one_minus_x({1, -1});
    IntPolynomial h;
    for (std::size_t i = 0; i <= d; ++i) {
        if (f[i] == 0) continue;
        std::vector<std::int64_t> mono(i + 1, 0);
        mono[i] = f[i];
        IntPolynomial term(std::move(mono));
        for (std::size_t k = i; k < d; ++k) term = term * one_minus_x;
        h += term;
    }
    return h;
}

IntPolynomial h_polynomial(const SimplicialComplex& k, std::size_t d) {
    if (k.is_void()) return {};
    return h_polynomial_of_faces(k.all_faces(), d);
}

SimplicialComplex restrict_to_support(const LabeledComplex& gamma, VarSet f) {
    Face keep = 0;
    for (std::size_t v = 0; v < gamma.vertex_labels.size(); ++v) {
        if ((gamma.vertex_labels[v].support() & ~f) == 0) keep |= Face{1} << v;
    }
    return gamma.complex.restriction(keep);
}

std::vector<Face> interior_faces(const LabeledComplex& gamma) {
    const VarSet all = full_varset(gamma.num_vars);
    std::vector<Face> out;
    for (Face f : gamma.complex.all_faces()) {
        if (gamma.label(f).support() == all) out.push_back(f);
    }
    return out;
}

IntPolynomial local_h(const LabeledComplex& gamma, VarSet w) {
    IntPolynomial total;
    VarSet f = w;
    while (true) {
        const IntPolynomial h = h_polynomial(restrict_to_support(gamma, f), static_cast<std::size_t>(popcount(f)));
        total = ((popcount(w) - popcount(f)) % 2 == 0) ? total + h : total - h;
        if (f == 0) break;
        f = (f - 1) & w;
    }
    return total;
}

bool check_decomposition(const LabeledComplex& gamma) {
    const VarSet all = full_varset(gamma.num_vars);
    IntPolynomial sum;
    for (VarSet w = 0;; ++w) {
        sum += local_h(gamma, w);
        if (w == all) break;
    }
    return sum == h_polynomial(gamma.complex, gamma.num_vars);
}

LocalHReport check_local_h_properties(const LabeledComplex& gamma) {
    LocalHReport r;
    const std::size_t n = gamma.num_vars;
    const VarSet all = full_varset(n);
    const IntPolynomial h = h_polynomial(gamma.complex, n);
    IntPolynomial sum;
    for (VarSet w = 0;; ++w) {
        const IntPolynomial l = local_h(gamma, w);
        sum += l;
        const int size = popcount(w);
        const std::string where = "W=" + std::to_string(w) + " l=" + l.to_string();
        for (int i = 0; i <= size; ++i) {
            if (l[static_cast<std::size_t>(i)] != l[static_cast<std::size_t>(size - i)]) {
                if (r.symmetric) r.findings.push_back("asymmetric local h at " + where);
                r.symmetric = false;
            }
            if (l[static_cast<std::size_t>(i)] < 0) {
                if (r.nonnegative) r.findings.push_back("negative local h at " + where);
                r.nonnegative = false;
            }
            if (i >= 1 && i <= size - 1 && l[static_cast<std::size_t>(i)] < l[1]) {
                if (r.unimodal_bound) r.findings.push_back("l_i < l_1 at " + where);
                r.unimodal_bound = false;
            }
        }
        if (size >= 2) {
            std::int64_t interior_vertices = 0;
            for (const Monomial& label : gamma.vertex_labels) {
                if (label.support() == w) ++interior_vertices;
            }
            if (l[1] != interior_vertices) {
                r.findings.push_back("l_1 differs from the interior vertex count at " + where);
                r.interior_vertex_count = false;
            }
        }
        if (w == all) break;
    }
    r.decomposition = sum == h;
    if (!r.decomposition) r.findings.push_back("local h sum " + sum.to_string() + " differs from h " + h.to_string());
    r.facet_count = h.at_one() == static_cast<std::int64_t>(gamma.complex.facets().size());
    const IntPolynomial hint = h_polynomial_of_faces(interior_faces(gamma), n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (hint[i] != h[n - i]) r.interior_reversal = false;
    }
    if (!r.interior_reversal) r.findings.push_back("interior h " + hint.to_string() + " is not the reverse of " + h.to_string());
    return r;
}

ComponentBoundReport check_component_bound(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    if (!is_generic(m).is_generic) throw PreconditionError("check_component_bound needs a generic ideal");
    ComponentBoundReport r;
    r.generators = m.size();
    r.support_size = popcount(m[0].support());
    r.applicable = std::all_of(m.generators().begin(), m.generators().end(),
                               [&](const Monomial& g) { return popcount(g.support()) == r.support_size; });
    if (!r.applicable) return r;
    const ExtendedScarfComplex ext = extended_scarf_complex(m);
    r.components = ext.labeled.complex.facets().size();
    if (r.components != irreducible_decomposition_oracle(m).size()) {
        throw ConsistencyError("check_component_bound: facet count differs from the component count");
    }
    const int c = r.support_size;
    r.bound = static_cast<std::size_t>(c - 1) * r.generators + 1;
    r.local_sum = 1;
    const VarSet all = full_varset(m.num_vars());
    for (VarSet w = 1; w <= all && w != 0; ++w) {
        if (popcount(w) != c) continue;
        const IntPolynomial l = local_h(ext.labeled, w);
        for (int i = 1; i <= c - 1; ++i) r.local_sum += l[static_cast<std::size_t>(i)];
    }
    r.holds = r.components >= r.bound && static_cast<std::int64_t>(r.components) >= r.local_sum;
    return r;
}

BivariateReport check_bivariate(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    if (!is_generic(m).is_generic) throw PreconditionError("check_bivariate needs a generic ideal");
    for (const Monomial& g : m.generators()) {
        if (popcount(g.support()) != 2) throw PreconditionError("check_bivariate needs bivariate generators");
    }
    BivariateReport r;
    r.generators = m.size();
    r.components = irreducible_decomposition_oracle(m).size();
    r.exactly_r_plus_one = r.components == r.generators + 1;
    const LabeledComplex scarf = scarf_complex(m);
    r.edges_small = true;
    for (Face f : scarf.complex.all_faces()) {
        if (face_size(f) == 2 && popcount(scarf.label(f).support()) > 3) r.edges_small = false;
    }
    return r;
}

InteriorFaceReport check_interior_face_count(const LabeledComplex& gamma, int c, Face points) {
    InteriorFaceReport r;
    const int n = static_cast<int>(gamma.num_vars);
    for (std::size_t v = 0; v < gamma.vertex_labels.size(); ++v) {
        if (c >= 2 && (points >> v & 1U) && popcount(gamma.vertex_labels[v].support()) == c) ++r.special_vertices;
    }
    const std::vector<Face> interior = interior_faces(gamma);
    r.hypothesis = std::none_of(interior.begin(), interior.end(), [&](Face f) { return face_size(f) == n - c; });
    r.interior_top = static_cast<std::size_t>(
        std::count_if(interior.begin(), interior.end(), [&](Face f) { return face_size(f) == n - c + 1; }));
    return r;
}

}  // namespace monideal
