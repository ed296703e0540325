#include <set>

#include "doctest.h"
#include "monideal/alexander.hpp"
#include "monideal/error.hpp"
#include "monideal/scarf.hpp"
#include "oracles.hpp"

using namespace monideal;
using oracle::ideal;

namespace {

MonomialIdeal lattice_initial_ideal() {
    return ideal("a,b,c,d", {"a^4", "a^3*c^2", "a^2*b^3", "a*b^2*c", "b^4", "b^3*c^2", "c^3"});
}

std::size_t index_of(const MonomialIdeal& m, const Monomial& g) {
    return static_cast<std::size_t>(std::find(m.generators().begin(), m.generators().end(), g) - m.generators().begin());
}

}  // namespace

TEST_SUITE("genericity") {
    TEST_CASE("tree ideals are generic only in the new sense") {
        for (std::size_t n = 1; n <= 4; ++n) {
            CHECK(is_generic(tree_ideal(n)).is_generic);
            CHECK(is_generic_old(tree_ideal(n)) == (n <= 2));
        }
    }

    TEST_CASE("witness for the lattice initial ideal") {
        const auto m = lattice_initial_ideal();
        const auto r = is_generic(m);
        CHECK(r.is_generic);
        CHECK_FALSE(is_generic_old(m));
        const auto i = index_of(m, Monomial{3, 0, 2, 0});
        const auto j = index_of(m, Monomial{0, 3, 2, 0});
        REQUIRE(r.witnesses.count({std::min(i, j), std::max(i, j)}) == 1);
        CHECK(m[r.witnesses.at({std::min(i, j), std::max(i, j)})] == Monomial{1, 2, 1, 0});
    }

    TEST_CASE("two generators sharing an exponent are never generic") {
        const auto r = is_generic(ideal("x,y,z", {"x^2*y", "x^2*z"}));
        CHECK_FALSE(r.is_generic);
        CHECK(r.violations == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
        CHECK(is_generic_old(ideal("x,y", {"x^2", "y^3"})));
    }

    TEST_CASE("witnesses satisfy the definition") {
        for (const auto& m : oracle::corpus(CorpusKind::any, 21, 200)) {
            const auto r = is_generic(m);
            CHECK(r.is_generic == r.violations.empty());
            for (const auto& [pair, l] : r.witnesses) {
                CHECK(l != pair.first);
                CHECK(l != pair.second);
                CHECK(m[l].divides_with_full_support_quotient(lcm(m[pair.first], m[pair.second])));
            }
        }
    }

    TEST_CASE("localizations of generic ideals are generic") {
        for (const auto& m : oracle::corpus(CorpusKind::generic, 22, 150)) {
            for (VarSet p = 1; p <= full_varset(m.num_vars()); ++p) {
                const auto local = localize(m, MonomialPrime{p});
                if (local.is_unit()) continue;
                CHECK_MESSAGE(is_generic(local).is_generic, oracle::repro("generic", 22, 150, m));
            }
        }
    }
}

TEST_SUITE("scarf complex") {
    TEST_CASE("small Scarf complexes") {
        CHECK(scarf_complex(tree_ideal(2)).complex.facets() == std::vector<Face>{0b011, 0b110});
        const auto dual = ideal("x,y,z", {"x^2*y^2", "x*y*z", "x^2*z^2"});
        // canonical order: x^2y^2, x^2z^2, xyz
        CHECK(scarf_complex(dual).complex.facets() == std::vector<Face>{0b101, 0b110});
        CHECK(scarf_complex(ideal("x,y", {"x*y"})).complex.facets() == std::vector<Face>{0b1});
        const auto squarefree = scarf_complex(ideal("x,y,z", {"x*y", "x*z", "y*z"}));
        CHECK(squarefree.complex.facets() == std::vector<Face>{0b001, 0b010, 0b100});
    }

    TEST_CASE("local test agrees with bucketing all subsets") {
        for (const auto& m : oracle::corpus(CorpusKind::any, 23, 300)) {
            CHECK_MESSAGE(scarf_faces(m.generators()) == scarf_faces_by_bucketing(m.generators()),
                          oracle::repro("any", 23, 300, m));
        }
    }

    TEST_CASE("Scarf faces form a complex with distinct labels") {
        for (const auto& m : oracle::corpus(CorpusKind::any, 24, 200)) {
            const auto faces = scarf_faces(m.generators());
            const std::set<Face> set(faces.begin(), faces.end());
            std::set<Monomial> labels;
            const auto k = scarf_complex(m);
            for (Face f : faces) {
                labels.insert(k.label(f));
                for (Face rest = f; rest; rest &= rest - 1) CHECK(set.count(f & ~(rest & (~rest + 1))) == 1);
            }
            CHECK(labels.size() == faces.size());
        }
    }

    TEST_CASE("edge condition holds for generic ideals") {
        for (const auto& m : oracle::corpus(CorpusKind::generic, 25, 150)) CHECK(scarf_edge_condition(m, scarf_complex(m)));
    }

    TEST_CASE("non-Scarf faces have a full-support witness") {
        const auto dual = ideal("x,y,z", {"x^2*y^2", "x*y*z", "x^2*z^2"});
        CHECK(non_scarf_witness(dual, 0b011) == Monomial{1, 1, 1});
        CHECK_THROWS_AS(non_scarf_witness(tree_ideal(2), 0b011), PreconditionError);
        CHECK(non_scarf_witness(tree_ideal(2), 0b101) == tree_ideal(2)[1]);
        CHECK_THROWS_AS(non_scarf_witness(ideal("x,y,z", {"x^2*y", "x^2*z"}), 0b11), PreconditionError);
        const auto tree3 = tree_ideal(3);
        CHECK(non_scarf_witness(tree3, 0b1111111).divides(lcm_of(tree3.generators(), 3)));
        for (const auto& m : oracle::corpus(CorpusKind::generic, 26, 100)) {
            const auto k = scarf_complex(m);
            for (Face f = 1; f < (Face{1} << m.size()); ++f) {
                if (k.complex.contains(f)) continue;
                const Monomial w = non_scarf_witness(m, f);
                CHECK(w.divides_with_full_support_quotient(k.label(f)));
            }
        }
    }
}

TEST_SUITE("extended scarf complex") {
    TEST_CASE("extended ideals") {
        const auto e = extended_ideal(ideal("x,y,z", {"x^2*y^2", "x*y*z", "x^2*z^2"}));
        CHECK(e.D == 3);
        CHECK(e.ideal.size() == 6);
        CHECK(e.marker_variables == std::vector<std::size_t>{0, 1, 2});
        const auto t = extended_ideal(tree_ideal(2));
        CHECK(t.ideal == tree_ideal(2));
        CHECK(t.marker_variables.empty());
        CHECK(extended_ideal(ideal("x", {"x"})).D == 2);
        CHECK_THROWS_AS(extended_ideal(tree_ideal(2), 2), PreconditionError);
    }

    TEST_CASE("extended complexes of small ideals") {
        const auto xy = extended_scarf_complex(ideal("x,y", {"x*y"}));
        CHECK(xy.labeled.complex.vertices() == std::vector<std::string>{"1", "x", "y"});
        CHECK(xy.labeled.complex.facets() == std::vector<Face>{0b011, 0b101});
        CHECK(extended_scarf_complex(tree_ideal(2)).labeled.complex == scarf_complex(tree_ideal(2)).complex);
        const auto dual = extended_scarf_complex(ideal("x,y,z", {"x^2*y^2", "x*y*z", "x^2*z^2"}));
        bool found = false;
        for (Face f : dual.labeled.complex.facets()) found = found || dual.labeled.label(f) == Monomial{1, 3, 3};
        CHECK(found);
    }

    TEST_CASE("restrictions give the Scarf and Stanley-Reisner complexes") {
        for (const auto& m : oracle::corpus(CorpusKind::generic, 27, 150)) {
            const auto e = extended_scarf_complex(m);
            const auto gens = e.labeled.complex.restriction(e.generator_vertices());
            const auto scarf = scarf_complex(m);
            CHECK(gens.all_faces() == scarf.complex.all_faces());
            CHECK(marker_restriction(e, m.names()) == stanley_reisner(m));
        }
    }

    TEST_CASE("generic extended complexes are pseudomanifolds with boundary") {
        for (const auto& m : oracle::corpus(CorpusKind::generic, 28, 150)) {
            const auto e = extended_scarf_complex(m);
            const auto& k = e.labeled.complex;
            const int n = static_cast<int>(m.num_vars());
            CHECK(k.is_pure());
            CHECK(k.dimension() == n - 1);
            for (Face ridge : k.all_faces()) {
                if (face_size(ridge) != n - 1) continue;
                const auto cofaces = std::count_if(k.facets().begin(), k.facets().end(), [&](Face f) { return is_subface(ridge, f); });
                CHECK(cofaces <= 2);
                const bool boundary = e.labeled.label(ridge).support() != full_varset(m.num_vars());
                CHECK((cofaces == 1) == boundary);
            }
        }
    }

    TEST_CASE("the complex does not depend on the choice of D") {
        for (const auto& m : oracle::corpus(CorpusKind::generic, 29, 100)) {
            const auto a = extended_scarf_complex(m);
            const auto b = extended_scarf_complex(m, a.D + 1);
            CHECK(a.labeled.complex == b.labeled.complex);
        }
    }

    TEST_CASE("Stanley-Reisner complexes") {
        CHECK(stanley_reisner(ideal("x,y", {"x*y"})).facets() == std::vector<Face>{0b01, 0b10});
        CHECK(stanley_reisner(three_component_ideal()).facets() == std::vector<Face>{0b010, 0b100});
    }

    TEST_CASE("decomposition from facets") {
        const auto dual = ideal("x,y,z", {"x^2*y^2", "x*y*z", "x^2*z^2"});
        const auto d = decompose_generic(dual);
        std::set<Monomial> bounds;
        for (const auto& c : d.components) bounds.insert(c.bound);
        CHECK(bounds == std::set<Monomial>{Monomial{0, 2, 1}, Monomial{2, 0, 1}, Monomial{0, 1, 2}, Monomial{2, 1, 0},
                                           Monomial{1, 0, 0}});
        const auto t = decompose_generic(tree_ideal(2));
        CHECK(t.size() == 2);
        CHECK_THROWS_AS(decompose_generic(ideal("x,y,z", {"x*y", "x*z", "y*z"})), PreconditionError);
        for (const auto& m : oracle::corpus(CorpusKind::generic, 30, 200)) {
            const auto g = decompose_generic(m);
            CHECK_MESSAGE(g == irreducible_decomposition_oracle(m), oracle::repro("generic", 30, 200, m));
            CHECK(g.size() == extended_scarf_complex(m).labeled.complex.facets().size());
        }
    }
}
