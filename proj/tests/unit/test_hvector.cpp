#include "doctest.h"
#include "monideal/alexander.hpp"
#include "monideal/error.hpp"
#include "monideal/hvector.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"
#include "oracles.hpp"

using namespace monideal;
using oracle::ideal;

namespace {

using Poly = IntPolynomial;

/// The simplex on the variables, unsubdivided.
LabeledComplex trivial_triangulation(std::size_t n) {
    std::vector<std::string> names;
    std::vector<Monomial> labels;
    for (std::size_t s = 0; s < n; ++s) {
        names.push_back(std::to_string(s + 1));
        std::vector<Exponent> e(n, 0);
        e[s] = 1;
        labels.emplace_back(e);
    }
    return LabeledComplex{SimplicialComplex(names, {full_varset(n)}), labels, n};
}

}  // namespace

TEST_SUITE("h-polynomials") {
    TEST_CASE("small complexes") {
        std::vector<std::string> v{"1", "2", "3"};
        CHECK(h_polynomial(SimplicialComplex(v, {0b011, 0b101, 0b110}), 2) == Poly({1, 1, 1}));
        CHECK(h_polynomial(SimplicialComplex(v, {0b111}), 3) == Poly({1}));
        CHECK(h_polynomial(SimplicialComplex(), 2).is_zero());
        CHECK_THROWS_AS(h_polynomial(SimplicialComplex(v, {0b111}), 2), PreconditionError);
        CHECK(Poly({1, 2}) * Poly({1, 2}) == Poly({1, 4, 4}));
        CHECK(Poly({1, 4, 1}).to_string() == "[1, 4, 1]");
    }

    TEST_CASE("tree ideal of three variables") {
        const auto e = extended_scarf_complex(tree_ideal(3));
        CHECK(h_polynomial(e.labeled.complex, 3) == Poly({1, 4, 1}));
        CHECK(h_polynomial_of_faces(interior_faces(e.labeled), 3) == Poly({0, 1, 4, 1}));
    }
}

TEST_SUITE("local h-polynomials") {
    TEST_CASE("trivial triangulation") {
        const auto t = trivial_triangulation(3);
        CHECK(local_h(t, 0) == Poly({1}));
        for (VarSet w = 1; w <= 0b111; ++w) CHECK(local_h(t, w).is_zero());
        CHECK(check_decomposition(t));
    }

    TEST_CASE("subdivided segment") {
        const auto e = extended_scarf_complex(ideal("x,y", {"x*y"}));
        CHECK(local_h(e.labeled, 0b11) == Poly({0, 1}));
        CHECK(local_h(e.labeled, 0b01).is_zero());
        CHECK(check_local_h_properties(e.labeled).all());
    }

    TEST_CASE("properties on generic extended complexes") {
        for (const auto& m : oracle::corpus(CorpusKind::generic, 61, 200)) {
            const auto e = extended_scarf_complex(m);
            const auto r = check_local_h_properties(e.labeled);
            CHECK_MESSAGE(r.all(), oracle::repro("generic", 61, 200, m));
            CHECK(h_polynomial(e.labeled.complex, m.num_vars()).at_one() ==
                  static_cast<std::int64_t>(e.labeled.complex.facets().size()));
        }
    }

    TEST_CASE("properties on co-Scarf complexes") {
        for (const auto& m : oracle::corpus(CorpusKind::cogeneric, 62, 200)) {
            const auto r = check_local_h_properties(co_scarf(m).labeled());
            CHECK_MESSAGE(r.all(), oracle::repro("cogeneric", 62, 200, m));
        }
    }
}

TEST_SUITE("component counts") {
    TEST_CASE("uniform support lower bound") {
        std::size_t applicable = 0;
        for (const auto& m : oracle::corpus(CorpusKind::uniform_generic, 63, 200)) {
            const auto r = check_component_bound(m);
            if (!r.applicable) continue;
            ++applicable;
            const std::size_t components = irreducible_decomposition_oracle(m).size();
            CHECK(r.components == components);
            CHECK(r.bound == static_cast<std::size_t>(r.support_size - 1) * m.size() + 1);
            CHECK_MESSAGE(components >= r.bound, oracle::repro("uniform-generic", 63, 200, m));
            CHECK(r.local_sum <= static_cast<std::int64_t>(components));
        }
        CHECK(applicable > 100);
        CHECK_THROWS_AS(check_component_bound(paired_primes_ideal(2)), PreconditionError);
        CHECK_FALSE(check_component_bound(tree_ideal(2)).applicable);
    }

    TEST_CASE("bivariate generators") {
        for (const auto& m : oracle::corpus(CorpusKind::bivariate_generic, 64, 200)) {
            const auto r = check_bivariate(m);
            const std::size_t components = irreducible_decomposition_oracle(m).size();
            CHECK(r.exactly_r_plus_one == (components == m.size() + 1));
            const auto scarf = scarf_complex(m);
            bool small = true;
            for (Face f : scarf.complex.all_faces()) {
                if (face_size(f) == 2) small = small && popcount(scarf.label(f).support()) <= 3;
            }
            CHECK(r.edges_small == small);
            CHECK_MESSAGE(r.holds(), oracle::repro("bivariate-generic", 64, 200, m));
        }
    }

    TEST_CASE("bivariate statement needs genericity") {
        const auto paired = paired_primes_ideal(2);
        CHECK(paired.size() == 4);
        CHECK(irreducible_decomposition_oracle(paired).size() == 2);
        CHECK_THROWS_AS(check_bivariate(paired), PreconditionError);
        CHECK_THROWS_AS(check_bivariate(ideal("x,y,z", {"x*y", "y*z"})), PreconditionError);
    }

    TEST_CASE("interior face count on Cohen-Macaulay cogeneric ideals") {
        std::size_t cm = 0;
        for (const auto& m : oracle::corpus(CorpusKind::cogeneric, 65, 200)) {
            if (!is_cohen_macaulay(m)) continue;
            ++cm;
            const auto cs = co_scarf(m);
            const auto r = check_interior_face_count(cs.labeled(), codim(m), cs.extended.generator_vertices());
            CHECK_MESSAGE(r.holds(), oracle::repro("cogeneric", 65, 200, m));
        }
        CHECK(cm > 20);
    }
}
