#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monideal/linalg.hpp"
#include "monideal/monomial.hpp"

namespace monideal {

/// A face is a set of vertex indices, bit v set iff vertex v is in the face.
using Face = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int face_size(Face f) noexcept { return popcount(f); }
inline bool is_subface(Face small, Face big) noexcept { return (small & ~big) == 0; }

/// Abstract simplicial complex on an ordered, named vertex list.
///
/// Stored by its facets (an inclusion antichain, sorted). A complex with no
/// facets is the void complex; the complex {∅} has the single facet 0.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// `faces` may contain non-maximal faces; only the maximal ones are kept.
    SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> faces);

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    const std::vector<Face>& facets() const noexcept { return facets_; }

    bool is_void() const noexcept { return facets_.empty(); }
    bool contains(Face f) const;

    /// -1 for {∅}; the void complex also reports -1.
    int dimension() const;
    bool is_pure() const;

    /// Every face, sorted by size then bit pattern.
    std::vector<Face> all_faces() const;

    /// (f_{-1}, f_0, ..., f_dim). Empty for the void complex.
    std::vector<std::uint64_t> f_vector() const;

    /// Faces contained in W; the vertex list is unchanged.
    SimplicialComplex restriction(Face w) const;

    /// Vertices that lie in no facet.
    Face unused_vertices() const;

    Face vertex_mask() const noexcept;
    std::string face_key(Face f) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Face> facets_;
};

struct ShellingResult {
    enum class Verdict { shellable, not_shellable, indeterminate };
    Verdict verdict = Verdict::indeterminate;
    /// A shelling order of the facets when shellable.
    std::vector<Face> order;
};

inline constexpr std::size_t kDefaultShellingCutoff = 12;

/// Exhaustive search for a (pure) shelling: dynamic programming over sets of
/// already placed facets. Non-pure input throws PreconditionError; more than
/// `facet_cutoff` facets returns Verdict::indeterminate.
ShellingResult is_shellable(const SimplicialComplex& k, std::size_t facet_cutoff = kDefaultShellingCutoff);

inline constexpr std::size_t kDefaultMaxHomologyColumns = 5000;

/// Ranks (dim H~_{-1}, ..., dim H~_{dim K}) of reduced simplicial homology.
/// Empty for the void complex. Throws CutoffExceeded if some boundary matrix
/// would have more than `max_columns` columns.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& k, Field field = Field::rationals(),
                                                std::size_t max_columns = kDefaultMaxHomologyColumns);

/// A simplicial complex whose vertices carry exponent vectors; the label of a
/// face is the coordinatewise maximum over its vertices (0 for ∅).
struct LabeledComplex {
    SimplicialComplex complex;
    std::vector<Monomial> vertex_labels;
    std::size_t num_vars = 0;

    Monomial label(Face f) const;
    /// #supp(label(f)) - #f.
    int excess(Face f) const;
};

/// {"vertices": [...], "facets": [[...]], "labels": {"a,b": [..]}} with one
/// label entry per face (key "" for the empty face).
std::string to_json(const LabeledComplex& k);
std::string to_json(const SimplicialComplex& k);

/// Inverse of to_json(LabeledComplex); the vertex labels are read back from
/// the single-vertex faces.
LabeledComplex labeled_complex_from_json(const std::string& text);

}  // namespace monideal
