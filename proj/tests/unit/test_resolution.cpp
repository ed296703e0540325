#include "doctest.h"
#include "monideal/error.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"
#include "oracles.hpp"

using namespace monideal;
using oracle::ideal;

namespace {

using Ranks = std::vector<std::size_t>;

/// Stanley-Reisner ideal of the six-vertex projective plane: the ten
/// triangles missing from the triangulation.
MonomialIdeal projective_plane_ideal() {
    const std::vector<std::vector<int>> tris{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                             {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    std::set<VarSet> faces;
    for (const auto& t : tris) faces.insert(VarSet{1} << (t[0] - 1) | VarSet{1} << (t[1] - 1) | VarSet{1} << (t[2] - 1));
    std::vector<Monomial> gens;
    for (VarSet s = 0; s < 64; ++s) {
        if (popcount(s) != 3 || faces.count(s)) continue;
        std::vector<Exponent> e(6, 0);
        for (int v = 0; v < 6; ++v) e[v] = (s >> v) & 1U;
        gens.emplace_back(e);
    }
    return MonomialIdeal(6, gens);
}

}  // namespace

TEST_SUITE("resolutions") {
    TEST_CASE("Betti numbers of small ideals") {
        CHECK(betti_oracle(tree_ideal(2)).totals() == Ranks{1, 3, 2});
        CHECK(betti_oracle(ideal("x,y", {"x", "y"})).totals() == Ranks{1, 2, 1});
        CHECK(betti_oracle(ideal("x,y", {"x*y"})).totals() == Ranks{1, 1});
        CHECK(betti_oracle(three_component_ideal()).totals() == Ranks{1, 5, 5, 1});
        CHECK(betti_oracle(ideal("x,y", {"x", "y"})).at(2, Monomial{1, 1}) == 1);
        CHECK(betti_oracle(tree_ideal(3)).totals() == Ranks{1, 7, 12, 6});
    }

    TEST_CASE("Scarf complex of a generic ideal is its minimal resolution") {
        const auto f = algebraic_scarf(tree_ideal(2));
        CHECK(f.ranks() == Ranks{1, 3, 2});
        CHECK(is_complex(f));
        CHECK(is_minimal(f));
        CHECK(is_exact(f, tree_ideal(2)).exact);
        for (const auto& m : oracle::corpus(CorpusKind::generic, 31, 200)) {
            const auto s = algebraic_scarf(m);
            CHECK(is_complex(s));
            CHECK(is_minimal(s));
            CHECK_MESSAGE(is_exact(s, m).exact, oracle::repro("generic", 31, 200, m));
            CHECK(basis_degree_table(s) == betti_oracle(m));
        }
    }

    TEST_CASE("Scarf complex of a non-generic ideal can fail to resolve") {
        const auto m = ideal("x,y,z", {"x*y", "x*z", "y*z"});
        const auto s = algebraic_scarf(m);
        CHECK(s.ranks() == Ranks{1, 3});
        const auto report = is_exact(s, m);
        CHECK_FALSE(report.exact);
        REQUIRE(report.counterexample.has_value());
        CHECK(*report.counterexample == Monomial{1, 1, 1});
        CHECK(betti_oracle(m).totals() == Ranks{1, 3, 2});
    }

    TEST_CASE("Taylor complex resolves but is not minimal") {
        const auto t = taylor_complex(tree_ideal(2));
        CHECK(t.ranks() == Ranks{1, 3, 3, 1});
        CHECK(is_complex(t));
        CHECK_FALSE(is_minimal(t));
        CHECK(is_exact(t, tree_ideal(2)).exact);
        CHECK_THROWS_AS(taylor_complex(tree_ideal(3), 5), CutoffExceeded);
    }

    TEST_CASE("Betti numbers from the Taylor complex match the oracle") {
        for (const auto& m : oracle::corpus(CorpusKind::any, 32, 150)) {
            if (m.size() > 8) continue;
            const auto t = taylor_complex(m);
            CHECK(is_complex(t));
            CHECK(is_exact(t, m).exact);
            CHECK_MESSAGE(betti_from_complex(t) == betti_oracle(m), oracle::repro("any", 32, 150, m));
        }
    }

    TEST_CASE("Betti degrees lie in the lcm lattice") {
        for (const auto& m : oracle::corpus(CorpusKind::any, 33, 150)) {
            const auto lattice = lcm_lattice(m.generators(), m.num_vars());
            const auto table = betti_oracle(m);
            for (const auto& [key, rank] : table.entries()) {
                if (key.first == 0) continue;
                CHECK(std::binary_search(lattice.begin(), lattice.end(), key.second));
                CHECK(rank > 0);
            }
        }
    }

    TEST_CASE("projective dimension, depth and type") {
        const auto cross = ideal("a,b,c,d", {"a*c", "a*d", "b*c", "b*d"});
        CHECK(proj_dim(cross) == 3);
        CHECK(depth(cross) == 1);
        CHECK_FALSE(is_cohen_macaulay(cross));
        CHECK(proj_dim(ideal("x,y", {"x^2", "y^3"})) == 2);
        CHECK(is_cohen_macaulay(ideal("x,y", {"x^2", "y^3"})));
        CHECK(cm_type(ideal("x,y", {"x^2", "y^3"})) == 1);
        CHECK(cm_type(tree_ideal(2)) == 2);
        CHECK(depth(three_component_ideal()) == 0);
        CHECK(is_cohen_macaulay(ideal("x,y,z", {"x*y"})));
    }

    TEST_CASE("small complexes agree over every field") {
        for (const auto& m : oracle::corpus(CorpusKind::any, 34, 100)) {
            const auto q = betti_oracle(m);
            CHECK(betti_oracle(m, Field::prime(2)) == q);
            CHECK(betti_oracle(m, Field::prime(3)) == q);
        }
    }

    TEST_CASE("projective plane ideal depends on the characteristic") {
        const auto m = projective_plane_ideal();
        CHECK(m.size() == 10);
        CHECK(proj_dim(m) == 3);
        CHECK(is_cohen_macaulay(m));
        CHECK(proj_dim(m, Field::prime(2)) == 4);
        CHECK_FALSE(is_cohen_macaulay(m, Field::prime(2)));
    }

    TEST_CASE("module convention shift") {
        const auto t = betti_oracle(tree_ideal(2)).shifted_to_module();
        CHECK(t.totals() == Ranks{3, 2});
    }

    TEST_CASE("upper Koszul complex") {
        const auto m = ideal("x,y", {"x", "y"});
        const auto k = upper_koszul_complex(m, Monomial{1, 1});
        CHECK(k.facets() == std::vector<Face>{0b01, 0b10});
        CHECK(upper_koszul_complex(m, Monomial{0, 0}).is_void());
    }
}
