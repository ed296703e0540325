#include "monideal/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "monideal/alexander.hpp"
#include "monideal/error.hpp"
#include "monideal/scarf.hpp"

namespace monideal {

namespace {

std::vector<std::string> names_of(std::string_view letters) {
    std::vector<std::string> out;
    for (char c : letters) out.emplace_back(1, c);
    return out;
}

MonomialIdeal irreducible(const std::vector<std::string>& names, std::vector<Exponent> bound) {
    return IrreducibleComponent(Monomial(std::move(bound))).as_ideal(names);
}

}  // namespace

MonomialIdeal tree_ideal(std::size_t n) {
    if (n == 0 || n > 16) throw PreconditionError("tree_ideal: n must be between 1 and 16");
    std::vector<Monomial> gens;
    for (VarSet set = 1; set <= full_varset(n); ++set) {
        const auto power = static_cast<Exponent>(n) - popcount(set) + 1;
        std::vector<Exponent> e(n, 0);
        for (std::size_t s = 0; s < n; ++s) {
            if (set >> s & 1U) e[s] = power;
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal permutahedron_ideal(std::size_t n) {
    if (n == 0 || n > 9) throw PreconditionError("permutahedron_ideal: n must be between 1 and 9");
    std::vector<Exponent> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Monomial> gens;
    do {
        gens.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal optimal_ideal(std::size_t c, std::size_t r) {
    if (c == 0 || r == 0) throw PreconditionError("optimal_ideal: c and r must be positive");
    const std::size_t n = c - 1 + r;
    const std::vector<std::string> names = default_variable_names(n);
    std::vector<MonomialIdeal> parts;
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<Exponent> b(n, 0);
        for (std::size_t s = 0; s + 1 < c; ++s) b[s] = static_cast<Exponent>(i);
        b[c - 2 + i] = 1;
        parts.push_back(irreducible(names, std::move(b)));
    }
    return intersect(parts);
}

MonomialIdeal paired_primes_ideal(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    std::vector<MonomialIdeal> parts;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Exponent> b(2 * n, 0);
        b[i] = 1;
        b[n + i] = 1;
        parts.push_back(irreducible(names, std::move(b)));
    }
    return intersect(parts);
}

MonomialIdeal three_component_ideal() {
    const auto names = names_of("xyz");
    const std::vector<MonomialIdeal> parts{irreducible(names, {1, 1, 0}), irreducible(names, {2, 2, 2}),
                                           irreducible(names, {1, 0, 1})};
    return intersect(parts);
}

MonomialIdeal codim_gap_ideal() {
    return MonomialIdeal(names_of("abcd"), {Monomial{1, 0, 1, 0}, Monomial{0, 1, 0, 1}, Monomial{3, 2, 0, 0}, Monomial{2, 3, 0, 0}});
}

MonomialIdeal chain_gap_ideal() {
    return MonomialIdeal(names_of("xyz"), {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, 1}});
}

MonomialIdeal non_s2_ideal() {
    const auto names = names_of("xyzw");
    const std::vector<MonomialIdeal> parts{irreducible(names, {1, 2, 0, 0}), irreducible(names, {0, 1, 1, 0}),
                                           irreducible(names, {0, 0, 2, 1})};
    return intersect(parts);
}

MonomialIdeal cm_partner_ideal() {
    const auto names = names_of("xyzw");
    const std::vector<MonomialIdeal> parts{irreducible(names, {1, 1, 0, 0}), irreducible(names, {0, 2, 2, 0}),
                                           irreducible(names, {0, 0, 1, 1})};
    return intersect(parts);
}

std::vector<Fixture> fixtures() {
    std::vector<Fixture> out{
        {"three-components", three_component_ideal()},
        {"three-components-dual", alexander_dual(three_component_ideal(), DualContext::standard(three_component_ideal()))},
        {"codim-gap", codim_gap_ideal()},
        {"chain-gap", chain_gap_ideal()},
        {"non-s2", non_s2_ideal()},
        {"cm-partner", cm_partner_ideal()},
        {"paired-primes-2", paired_primes_ideal(2)},
    };
    for (std::size_t n = 2; n <= 3; ++n) {
        out.push_back({"tree-" + std::to_string(n), tree_ideal(n)});
        out.push_back({"permutahedron-" + std::to_string(n), permutahedron_ideal(n)});
    }
    for (std::size_t c = 2; c <= 3; ++c) {
        for (std::size_t r = 1; r <= 3; ++r) {
            out.push_back({"optimal-" + std::to_string(c) + "-" + std::to_string(r), optimal_ideal(c, r)});
        }
    }
    return out;
}

BinomialSystem curve_lattice_system() {
    BinomialSystem s;
    s.names = names_of("abcd");
    auto m = [](Exponent a, Exponent b, Exponent c, Exponent d) { return Monomial{a, b, c, d}; };
    s.binomials = {
        Binomial(m(4, 0, 0, 0), m(0, 1, 1, 1)), Binomial(m(3, 0, 2, 0), m(0, 2, 0, 2)),
        Binomial(m(2, 3, 0, 0), m(0, 0, 2, 2)), Binomial(m(1, 2, 1, 0), m(0, 0, 0, 3)),
        Binomial(m(0, 4, 0, 0), m(2, 0, 1, 1)), Binomial(m(0, 3, 2, 0), m(3, 0, 0, 2)),
        Binomial(m(0, 0, 3, 0), m(1, 1, 0, 1)),
    };
    return s;
}

BinomialSystem twisted_cubic_system() {
    BinomialSystem s;
    s.names = names_of("abcd");
    s.binomials = {Binomial(Monomial{1, 0, 1, 0}, Monomial{0, 2, 0, 0}), Binomial(Monomial{1, 0, 0, 1}, Monomial{0, 1, 1, 0}),
                   Binomial(Monomial{0, 1, 0, 1}, Monomial{0, 0, 2, 0})};
    return s;
}

CorpusKind parse_corpus_kind(const std::string& name) {
    if (name == "any") return CorpusKind::any;
    if (name == "generic") return CorpusKind::generic;
    if (name == "cogeneric") return CorpusKind::cogeneric;
    if (name == "uniform-generic") return CorpusKind::uniform_generic;
    if (name == "bivariate-generic") return CorpusKind::bivariate_generic;
    throw PreconditionError("unknown corpus kind '" + name + "'");
}

namespace {

std::vector<Monomial> random_generators(CorpusRng& rng, const CorpusParams& p, std::size_t n, std::size_t r, int c) {
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<Exponent> e(n, 0);
        if (c > 0) {
            std::vector<std::size_t> vars(n);
            std::iota(vars.begin(), vars.end(), std::size_t{0});
            for (int i = 0; i < c; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                std::swap(vars[ui], vars[ui + rng.below(n - ui)]);
                e[vars[ui]] = 1 + static_cast<Exponent>(rng.below(static_cast<std::uint64_t>(p.max_exponent)));
            }
        } else {
            do {
                for (auto& x : e) x = static_cast<Exponent>(rng.below(static_cast<std::uint64_t>(p.max_exponent) + 1));
            } while (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; }));
        }
        gens.emplace_back(std::move(e));
    }
    return gens;
}

/// Draws up to 32 generator lists of the chosen size and keeps the first
/// whose generators are all minimal, else the one with most minimal generators.
MonomialIdeal random_ideal(CorpusRng& rng, const CorpusParams& p, std::optional<int> support_size) {
    const std::size_t n = 2 + rng.below(std::max<std::size_t>(p.max_vars, 2) - 1);
    const std::size_t r = 1 + rng.below(p.max_generators);
    int c = 0;
    if (support_size) c = *support_size > 0 ? *support_size : 2 + static_cast<int>(rng.below(n - 1));
    MonomialIdeal best;
    for (int attempt = 0; attempt < 32; ++attempt) {
        MonomialIdeal m(n, random_generators(rng, p, n, r, c));
        if (m.size() > best.size()) best = std::move(m);
        if (best.size() == r) break;
    }
    return best;
}

}  // namespace

std::vector<MonomialIdeal> generate_corpus(CorpusKind kind, std::uint64_t seed, const CorpusParams& params) {
    if (params.max_vars < 2 || params.max_generators < 1 || params.max_exponent < 1) {
        throw PreconditionError("corpus parameters too small");
    }
    CorpusRng rng(seed);
    std::vector<MonomialIdeal> out;
    while (out.size() < params.count) {
        switch (kind) {
            case CorpusKind::any:
                out.push_back(random_ideal(rng, params, std::nullopt));
                break;
            case CorpusKind::generic: {
                MonomialIdeal m = random_ideal(rng, params, std::nullopt);
                if (is_generic(m).is_generic) out.push_back(std::move(m));
                break;
            }
            case CorpusKind::cogeneric: {
                MonomialIdeal m = random_ideal(rng, params, std::nullopt);
                if (is_generic(m).is_generic) out.push_back(alexander_dual(m, DualContext::standard(m)));
                break;
            }
            case CorpusKind::uniform_generic:
            case CorpusKind::bivariate_generic: {
                const int c = kind == CorpusKind::bivariate_generic ? 2 : 0;
                MonomialIdeal m = random_ideal(rng, params, c);
                const int size = popcount(m[0].support());
                const bool uniform = std::all_of(m.generators().begin(), m.generators().end(),
                                                 [&](const Monomial& g) { return popcount(g.support()) == size; });
                if (uniform && is_generic(m).is_generic) out.push_back(std::move(m));
                break;
            }
        }
    }
    return out;
}

}  // namespace monideal
