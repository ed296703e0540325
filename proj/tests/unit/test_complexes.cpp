#include <numeric>

#include "doctest.h"
#include "monideal/complexes.hpp"
#include "monideal/error.hpp"
#include "monideal/scarf.hpp"
#include "oracles.hpp"

using namespace monideal;

namespace {

SimplicialComplex on(std::size_t v, std::vector<Face> faces) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= v; ++i) names.push_back(std::to_string(i));
    return SimplicialComplex(names, std::move(faces));
}

/// Each facet after the first meets the earlier ones in a pure
/// codimension-one subcomplex of its boundary.
bool valid_shelling(const std::vector<Face>& order) {
    for (std::size_t k = 1; k < order.size(); ++k) {
        std::vector<Face> meets;
        for (std::size_t j = 0; j < k; ++j) meets.push_back(order[k] & order[j]);
        for (Face m : meets) {
            const bool covered = std::any_of(meets.begin(), meets.end(), [&](Face big) {
                return is_subface(m, big) && face_size(big) == face_size(order[k]) - 1;
            });
            if (!covered) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("complexes") {
    TEST_CASE("faces and f-vectors") {
        CHECK(on(2, {0b11}).f_vector() == std::vector<std::uint64_t>{1, 2, 1});
        const auto triangle = on(3, {0b011, 0b101, 0b110});
        CHECK(triangle.f_vector() == std::vector<std::uint64_t>{1, 3, 3});
        CHECK(triangle.dimension() == 1);
        CHECK(triangle.is_pure());
        CHECK(on(3, {0b011, 0b100}).is_pure() == false);
        CHECK(on(2, {0}).dimension() == -1);
        CHECK(SimplicialComplex().is_void());
        CHECK(on(3, {0b011, 0b001}).facets() == std::vector<Face>{0b011});
    }

    TEST_CASE("restriction keeps faces inside the vertex set") {
        const auto k = on(3, {0b111});
        CHECK(k.restriction(0).facets() == std::vector<Face>{0});
        CHECK(k.restriction(0b101).facets() == std::vector<Face>{0b101});
    }

    TEST_CASE("reduced homology of small complexes") {
        CHECK(reduced_homology_ranks(on(0, {0})) == std::vector<std::size_t>{1});
        CHECK(reduced_homology_ranks(on(3, {0b011, 0b101, 0b110})) == std::vector<std::size_t>{0, 0, 1});
        CHECK(reduced_homology_ranks(on(4, {0b0111, 0b1011, 0b1101})) == std::vector<std::size_t>{0, 0, 0, 0});
        CHECK(reduced_homology_ranks(on(4, {0b0011, 0b1100})) == std::vector<std::size_t>{0, 1, 0});
        CHECK(reduced_homology_ranks(SimplicialComplex()).empty());
    }

    TEST_CASE("Euler characteristic matches homology") {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            CorpusRng rng(seed);
            std::vector<Face> faces;
            for (int i = 0; i < 5; ++i) faces.push_back(rng.below(64));
            const auto k = on(6, faces);
            const auto f = k.f_vector();
            const auto h = reduced_homology_ranks(k);
            long long chi = 0, alt = 0;
            for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(f[i]);
            for (std::size_t i = 0; i < h.size(); ++i) alt += (i % 2 ? -1 : 1) * static_cast<long long>(h[i]);
            CHECK(chi == alt);
            CHECK(reduced_homology_ranks(k, Field::prime(2)).size() == h.size());
        }
    }

    TEST_CASE("homology depends on the field for the projective plane") {
        // Six-vertex triangulation of the real projective plane.
        const std::vector<std::vector<int>> tris{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                                 {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
        std::vector<Face> faces;
        for (const auto& t : tris) {
            Face f = 0;
            for (int v : t) f |= Face{1} << (v - 1);
            faces.push_back(f);
        }
        const auto rp2 = on(6, faces);
        CHECK(reduced_homology_ranks(rp2) == std::vector<std::size_t>{0, 0, 0, 0});
        CHECK(reduced_homology_ranks(rp2, Field::prime(2)) == std::vector<std::size_t>{0, 0, 1, 1});
    }

    TEST_CASE("shellability search") {
        const auto triangle = on(3, {0b011, 0b101, 0b110});
        const auto s = is_shellable(triangle);
        CHECK(s.verdict == ShellingResult::Verdict::shellable);
        CHECK(valid_shelling(s.order));
        CHECK(is_shellable(on(4, {0b0011, 0b1100})).verdict == ShellingResult::Verdict::not_shellable);
        CHECK_THROWS_AS(is_shellable(on(3, {0b011, 0b100})), PreconditionError);
        const auto scarf = scarf_complex(tree_ideal(3));
        const auto t = is_shellable(scarf.complex);
        CHECK(t.verdict == ShellingResult::Verdict::shellable);
        CHECK(valid_shelling(t.order));
        CHECK(is_shellable(scarf.complex, 3).verdict == ShellingResult::Verdict::indeterminate);
    }

    TEST_CASE("JSON exchange round trip") {
        const auto e = extended_scarf_complex(three_component_ideal());
        const std::string text = to_json(e.labeled);
        const LabeledComplex back = labeled_complex_from_json(text);
        CHECK(back.complex == e.labeled.complex);
        CHECK(back.vertex_labels == e.labeled.vertex_labels);
        CHECK(to_json(back) == text);
    }

    TEST_CASE("labels of a restriction are the labels of the whole") {
        const auto e = extended_scarf_complex(tree_ideal(3));
        const Face w = e.generator_vertices();
        const auto restricted = e.labeled.complex.restriction(w);
        for (Face f : restricted.all_faces()) CHECK(e.labeled.complex.contains(f));
        CHECK(e.labeled.label(0) == Monomial(3));
    }
}
