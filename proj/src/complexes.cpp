#include "monideal/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "monideal/error.hpp"

namespace monideal {

namespace {

bool face_order(Face a, Face b) {
    const int sa = face_size(a), sb = face_size(b);
    return sa != sb ? sa < sb : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() > kMaxVertices) throw PreconditionError("too many vertices for a face bitmask");
    const Face all = vertex_mask();
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return face_size(a) > face_size(b) || (face_size(a) == face_size(b) && a < b); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (Face f : faces) {
        if (!is_subface(f, all)) throw PreconditionError("face uses an unknown vertex");
        const bool covered = std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return is_subface(f, g); });
        if (!covered) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), face_order);
}

Face SimplicialComplex::vertex_mask() const noexcept {
    return vertices_.size() >= 64 ? ~Face{0} : ((Face{1} << vertices_.size()) - 1);
}

bool SimplicialComplex::contains(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return is_subface(f, g); });
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (Face f : facets_) d = std::max(d, face_size(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    const int s = face_size(facets_.front());
    return std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return face_size(f) == s; });
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face> seen;
    for (Face f : facets_) {
        // enumerate submasks of f, including f and 0
        Face sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
    if (is_void()) return {};
    std::vector<std::uint64_t> f(static_cast<std::size_t>(dimension() + 2), 0);
    for (Face face : all_faces()) ++f[static_cast<std::size_t>(face_size(face))];
    return f;
}

SimplicialComplex SimplicialComplex::restriction(Face w) const {
    std::vector<Face> faces;
    faces.reserve(facets_.size());
    for (Face f : facets_) faces.push_back(f & w);
    return SimplicialComplex(vertices_, std::move(faces));
}

Face SimplicialComplex::unused_vertices() const {
    Face used = 0;
    for (Face f : facets_) used |= f;
    return vertex_mask() & ~used;
}

std::string SimplicialComplex::face_key(Face f) const {
    std::string key;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (f >> v & 1U) {
            if (!key.empty()) key += ',';
            key += vertices_[v];
        }
    }
    return key;
}

ShellingResult is_shellable(const SimplicialComplex& k, std::size_t facet_cutoff) {
    if (!k.is_pure()) throw PreconditionError("shellability is only defined here for pure complexes");
    const auto& facets = k.facets();
    const std::size_t m = facets.size();
    ShellingResult result;
    if (m <= 1) {
        result.verdict = ShellingResult::Verdict::shellable;
        result.order = facets;
        return result;
    }
    if (m > facet_cutoff || m > 30) return result;

    // can_follow(S, k): facet k meets the union of facets in S in a nonempty
    // union of its codimension-one faces.
    auto can_follow = [&](std::uint32_t placed, std::size_t next) {
        const Face f = facets[next];
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(placed >> j & 1U)) continue;
            any = true;
            const Face meet = facets[j] & f;
            bool inside_ridge = false;
            for (std::size_t i = 0; i < m && !inside_ridge; ++i) {
                if (!(placed >> i & 1U)) continue;
                const Face ridge = facets[i] & f;
                inside_ridge = face_size(f & ~facets[i]) == 1 && is_subface(meet, ridge);
            }
            if (!inside_ridge) return false;
        }
        return any;
    };

    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<std::int8_t> reachable(std::size_t{1} << m, 0);
    std::vector<std::int8_t> last(std::size_t{1} << m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        reachable[std::size_t{1} << i] = 1;
        last[std::size_t{1} << i] = static_cast<std::int8_t>(i);
    }
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (!reachable[s]) continue;
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint32_t t = s | (std::uint32_t{1} << i);
            if (t == s || reachable[t]) continue;
            if (can_follow(s, i)) {
                reachable[t] = 1;
                last[t] = static_cast<std::int8_t>(i);
            }
        }
    }
    if (!reachable[full]) {
        result.verdict = ShellingResult::Verdict::not_shellable;
        return result;
    }
    result.verdict = ShellingResult::Verdict::shellable;
    std::vector<Face> order;
    for (std::uint32_t s = full; s; s &= ~(std::uint32_t{1} << last[s])) order.push_back(facets[static_cast<std::size_t>(last[s])]);
    std::reverse(order.begin(), order.end());
    result.order = std::move(order);
    return result;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& k, Field field, std::size_t max_columns) {
    if (k.is_void()) return {};
    const std::vector<Face> faces = k.all_faces();
    const int top = k.dimension();
    // faces_by_size[s] lists faces with s vertices (dimension s-1)
    std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(top + 2));
    for (Face f : faces) by_size[static_cast<std::size_t>(face_size(f))].push_back(f);
    for (const auto& layer : by_size) {
        if (layer.size() > max_columns) {
            throw CutoffExceeded("homology: " + std::to_string(layer.size()) + " faces in one dimension exceeds cap " +
                                 std::to_string(max_columns));
        }
    }
    // boundary_rank[s] = rank of the boundary map from faces of size s to size s-1
    std::vector<std::size_t> boundary_rank(by_size.size() + 1, 0);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        const auto& src = by_size[s];
        const auto& tgt = by_size[s - 1];
        std::map<Face, std::size_t> index;
        for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(tgt[i], i);
        SparseIntMatrix d(src.size(), tgt.size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            int position = 0;
            for (Face rest = src[i]; rest; rest &= rest - 1, ++position) {
                const Face v = rest & (~rest + 1);
                d.add(i, index.at(src[i] & ~v), position % 2 == 0 ? 1 : -1);
            }
        }
        boundary_rank[s] = rank(d, field);
    }
    std::vector<std::size_t> ranks(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        ranks[s] = by_size[s].size() - boundary_rank[s] - boundary_rank[s + 1];
    }
    return ranks;
}

Monomial LabeledComplex::label(Face f) const {
    Monomial acc(num_vars);
    for (std::size_t v = 0; v < vertex_labels.size(); ++v) {
        if (f >> v & 1U) acc = lcm(acc, vertex_labels[v]);
    }
    return acc;
}

int LabeledComplex::excess(Face f) const { return popcount(label(f).support()) - face_size(f); }

namespace {

nlohmann::json face_names(const SimplicialComplex& k, Face f) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t v = 0; v < k.num_vertices(); ++v) {
        if (f >> v & 1U) arr.push_back(k.vertices()[v]);
    }
    return arr;
}

nlohmann::json complex_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["vertices"] = k.vertices();
    nlohmann::json facets = nlohmann::json::array();
    for (Face f : k.facets()) facets.push_back(face_names(k, f));
    j["facets"] = std::move(facets);
    return j;
}

}  // namespace

std::string to_json(const SimplicialComplex& k) { return complex_json(k).dump(); }

std::string to_json(const LabeledComplex& k) {
    nlohmann::json j = complex_json(k.complex);
    nlohmann::json labels = nlohmann::json::object();
    for (Face f : k.complex.all_faces()) labels[k.complex.face_key(f)] = k.label(f).vector();
    j["labels"] = std::move(labels);
    return j.dump();
}

LabeledComplex labeled_complex_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < vertices.size(); ++v) index.emplace(vertices[v], v);
    std::vector<Face> facets;
    for (const auto& facet : j.at("facets")) {
        Face f = 0;
        for (const auto& name : facet) f |= Face{1} << index.at(name.get<std::string>());
        facets.push_back(f);
    }
    LabeledComplex out;
    const auto& labels = j.at("labels");
    out.num_vars = labels.at("").size();
    out.complex = SimplicialComplex(vertices, std::move(facets));
    for (const std::string& v : vertices) {
        const auto it = labels.find(v);
        out.vertex_labels.emplace_back(it == labels.end() ? std::vector<Exponent>(out.num_vars, 0)
                                                          : it->get<std::vector<Exponent>>());
    }
    return out;
}

}  // namespace monideal
