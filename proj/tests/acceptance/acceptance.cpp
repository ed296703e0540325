// Runs the thirteen acceptance criteria and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "monideal/alexander.hpp"
#include "monideal/assoc.hpp"
#include "monideal/binomial.hpp"
#include "monideal/corpus.hpp"
#include "monideal/error.hpp"
#include "monideal/hvector.hpp"
#include "monideal/report.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"
#include "monideal/text_format.hpp"
#include "monideal/verify.hpp"

using namespace monideal;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

/// Accumulates failures; the first few are kept as the detail line.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        passed_ = false;
        if (++failures_ <= 3) problems_ += (problems_.empty() ? "" : "; ") + what;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
    Outcome outcome() const {
        if (passed_) return {true, notes_};
        return {false, std::to_string(failures_) + " failure(s): " + problems_};
    }

private:
    bool passed_ = true;
    std::size_t failures_ = 0;
    std::string problems_;
    std::string notes_;
};

MonomialIdeal ideal(const std::string& vars, const std::vector<std::string>& gens) {
    std::string text = "vars: " + vars + "\n";
    for (const auto& g : gens) text += g + "\n";
    return parse_ideal(text);
}

std::vector<MonomialIdeal> corpus(CorpusKind kind, std::uint64_t seed, std::size_t count) {
    CorpusParams p;
    p.count = count;
    p.max_vars = 4;
    p.max_generators = 6;
    p.max_exponent = 4;
    return generate_corpus(kind, seed, p);
}

std::string show(const MonomialIdeal& m) {
    std::string out = "<";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ", " : "") + to_string(m[i], m.names());
    return out + ">";
}

std::string count_of(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

Outcome example_pipeline() {
    Tally t;
    const std::vector<MonomialIdeal> parts{ideal("x,y,z", {"x", "y"}), ideal("x,y,z", {"x^2", "y^2", "z^2"}),
                                           ideal("x,y,z", {"x", "z"})};
    const auto m = intersect(parts);
    t.expect(m == ideal("x,y,z", {"y*z^2", "x*z^2", "y^2*z", "x*y^2", "x^2"}), "intersection is " + show(m));

    const DualContext ctx{Monomial{2, 2, 2}};
    const auto dual = alexander_dual(m, ctx);
    t.expect(dual == ideal("x,y,z", {"x^2*y^2", "x*y*z", "x^2*z^2"}), "dual is " + show(dual));

    const std::set<Monomial> printed{Monomial{0, 2, 1}, Monomial{2, 0, 1}, Monomial{0, 1, 2}, Monomial{2, 1, 0},
                                     Monomial{1, 0, 0}};
    std::set<Monomial> oracle_bounds, scarf_bounds;
    for (const auto& c : irreducible_decomposition_oracle(dual).components) oracle_bounds.insert(c.bound);
    for (const auto& c : decompose_generic(dual).components) scarf_bounds.insert(c.bound);
    t.expect(oracle_bounds == printed && oracle_bounds.size() == 5, "dual decomposition differs (oracle)");
    t.expect(scarf_bounds == printed, "dual decomposition differs (extended Scarf facets)");

    // Vertices are numbered by component in the order <x,y>, <x^2,y^2,z^2>, <x,z>;
    // the dual generator of a component identifies it.
    const CoScarfComplex cs = co_scarf(m);
    const std::map<Monomial, std::string> number{{Monomial{2, 2, 0}, "1"}, {Monomial{1, 1, 1}, "2"}, {Monomial{2, 0, 2}, "3"}};
    const auto& vertices = cs.labeled().complex.vertices();
    std::set<std::string> interior;
    for (Face f : cs.interior) {
        std::vector<std::string> nums, vars;
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            if (!(f >> k & 1U)) continue;
            if (k < cs.extended.num_generators) {
                nums.push_back(number.at(cs.labeled().vertex_labels[k]));
            } else {
                vars.push_back(vertices[k]);
            }
        }
        std::sort(nums.begin(), nums.end());
        std::string name = "{";
        for (const auto& s : nums) name += (name.size() > 1 ? "," : "") + s;
        for (const auto& s : vars) name += (name.size() > 1 ? "," : "") + s;
        interior.insert(name + "}");
    }
    const std::set<std::string> listed{"{2}",     "{1,2}",   "{2,3}",   "{2,x}",   "{2,y}",  "{2,z}",
                                       "{1,2,x}", "{1,2,y}", "{2,3,x}", "{2,3,z}", "{2,y,z}"};
    t.expect(interior == listed, "interior faces differ");

    t.expect(betti_oracle(m).totals() == std::vector<std::size_t>{1, 5, 5, 1}, "Betti totals differ");
    const auto f = algebraic_co_scarf(cs, 3);
    t.expect(f.ranks() == std::vector<std::size_t>{5, 5, 1}, "co-Scarf resolution shape differs");
    std::set<Monomial> facet_degrees;
    for (const auto& e : f.strands[0]) facet_degrees.insert(e.degree);
    const std::set<Monomial> expected{Monomial{0, 1, 2}, Monomial{1, 0, 2}, Monomial{0, 2, 1}, Monomial{1, 2, 0},
                                      Monomial{2, 0, 0}};
    t.expect(facet_degrees == expected, "facet degrees differ");
    t.expect(is_exact(shifted_augmentation(f), m).exact, "co-Scarf complex does not resolve");
    t.note("11 interior faces, shape (1,5,5,1)");
    return t.outcome();
}

Outcome tree_ideals() {
    Tally t;
    const std::map<std::size_t, std::uint64_t> colengths{{2, 3}, {3, 16}, {4, 125}};
    const std::map<std::size_t, std::size_t> facets{{2, 2}, {3, 6}, {4, 24}};
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::string tag = "n=" + std::to_string(n) + ": ";
        const auto m = tree_ideal(n);
        t.expect(is_generic(m).is_generic, tag + "not generic");
        if (n >= 3) t.expect(!is_generic_old(m), tag + "generic in the old sense");
        t.expect(colength(m) == colengths.at(n), tag + "colength");
        const auto scarf = scarf_complex(m);
        t.expect(scarf.complex.facets().size() == facets.at(n), tag + "Scarf facet count");
        const auto f = algebraic_scarf(m);
        t.expect(is_exact(f, m).exact, tag + "Scarf complex not exact");
        t.expect(is_minimal(f), tag + "Scarf complex not minimal");
        t.expect(is_cohen_macaulay(m), tag + "not Cohen-Macaulay");
        t.expect(!associated_primes(m).has_embedded(), tag + "embedded prime");
        if (n <= 3) {
            const auto s = shellability_consequences(m);
            t.expect(s.scarf.verdict == ShellingResult::Verdict::shellable, tag + "Scarf complex not shellable");
            t.expect(s.stanley_reisner.verdict == ShellingResult::Verdict::shellable, tag + "V(M) not shellable");
        }
    }
    t.note("n = 2, 3, 4");
    return t.outcome();
}

Outcome tree_permutahedron() {
    Tally t;
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto tree = tree_ideal(n);
        const DualContext ctx{Monomial(std::vector<Exponent>(n, static_cast<Exponent>(n)))};
        const auto dual = alexander_dual(tree, ctx);
        std::size_t factorial = 1;
        for (std::size_t k = 2; k <= n; ++k) factorial *= k;
        t.expect(dual == permutahedron_ideal(n), "n=" + std::to_string(n) + ": dual is not the permutahedron ideal");
        t.expect(dual.size() == factorial, "n=" + std::to_string(n) + ": generator count");
        t.expect(alexander_dual(dual, ctx) == tree, "n=" + std::to_string(n) + ": not an involution");
    }
    t.note("n = 2, 3, 4");
    return t.outcome();
}

Outcome genericity_equivalence() {
    Tally t;
    std::size_t generic = 0, total = 0;
    for (const auto& m : corpus(CorpusKind::any, 4, 500)) {
        ++total;
        const bool g = is_generic(m).is_generic;
        generic += g;
        const auto f = algebraic_scarf(m);
        const bool resolves = is_exact(f, m).exact && is_minimal(f) && scarf_edge_condition(m, scarf_complex(m));
        t.expect(g == resolves, "discrepancy on " + show(m));
    }
    t.note(count_of(total, "ideals") + ", " + count_of(generic, "generic"));
    return t.outcome();
}

Outcome oracle_concordance() {
    Tally t;
    std::size_t generic = 0, faces = 0;
    for (const auto& m : corpus(CorpusKind::any, 5, 500)) {
        const auto oracle = betti_oracle(m);
        const auto scarf = scarf_complex(m);
        for (Face f : scarf.complex.all_faces()) {
            ++faces;
            t.expect(oracle.at(face_size(f), scarf.label(f)) >= 1, "Scarf face without Betti number in " + show(m));
        }
        if (!is_generic(m).is_generic) continue;
        ++generic;
        t.expect(betti_from_complex(taylor_complex(m)) == oracle, "Taylor homology differs on " + show(m));
        t.expect(basis_degree_table(algebraic_scarf(m)) == oracle, "Scarf strands differ on " + show(m));
    }
    t.note(count_of(generic, "generic members") + ", " + count_of(faces, "Scarf faces checked"));
    return t.outcome();
}

Outcome generic_primes() {
    Tally t;
    std::size_t embedded = 0;
    for (const auto& m : corpus(CorpusKind::generic, 6, 500)) {
        t.expect(check_embedded_spectrum(m).holds(), "spectrum gap in " + show(m));
        t.expect(check_saturated_chains(m).holds(), "missing chain in " + show(m));
        embedded += associated_primes(m).has_embedded();
    }
    const auto ass = associated_primes(codim_gap_ideal());
    const VarSet low = 0b0011, high = 0b1111;
    t.expect(ass.contains(MonomialPrime{low}) && ass.contains(MonomialPrime{high}), "fixture lacks <a,b> or <a,b,c,d>");
    for (const auto& p : ass.primes) {
        const bool between = p.vars != low && p.vars != high && (low & ~p.vars) == 0;
        t.expect(!between, "fixture has a prime between <a,b> and <a,b,c,d>");
    }
    t.note("500 generic ideals, " + count_of(embedded, "with embedded primes") +
           "; fixture has no associated prime between <a,b> and <a,b,c,d>");
    return t.outcome();
}

Outcome lattice_ideals() {
    Tally t;
    const auto s = curve_lattice_system();
    const auto order = TermOrder::revlex(4);
    const auto in = initial_ideal(buchberger(s.binomials, order), order, s.names);
    t.expect(in == ideal("a,b,c,d", {"a^4", "a^3*c^2", "a^2*b^3", "a*b^2*c", "b^4", "b^3*c^2", "c^3"}),
             "initial ideal is " + show(in));
    const auto ingen = check_ingen(s, order);
    t.expect(ingen.generic && ingen.scarf_exact && ingen.scarf_minimal && ingen.edge_condition, "initial ideal check");
    t.expect(!check_saturated_chains(chain_gap_ideal()).holds(), "<x^2,xy,xz> has saturated chains");

    const auto census = census_initial_ideals(twisted_cubic_system(), 1, 8);
    t.expect(census.size() == 8, "census found " + std::to_string(census.size()) + " ideals");
    std::size_t not_cm = 0;
    for (const auto& m : census) {
        t.expect(check_pd_bound(m).holds(), "proj-dim bound fails on " + show(m));
        if (is_cohen_macaulay(m)) continue;
        ++not_cm;
        const auto e = associated_primes(m).embedded();
        t.expect(std::any_of(e.begin(), e.end(), [](const MonomialPrime& p) { return p.codim() == 3; }),
                 "no embedded codim-3 prime in " + show(m));
    }
    t.expect(not_cm == 4, count_of(not_cm, "non-CM ideals"));
    t.note(count_of(census.size(), "initial ideals") + ", " + count_of(not_cm, "not CM"));
    return t.outcome();
}

Outcome cm_criteria() {
    Tally t;
    std::size_t cm = 0;
    for (const auto& m : corpus(CorpusKind::cogeneric, 8, 200)) {
        const auto r = cm_cogeneric(m);
        t.expect(r.all_equal(), "criteria disagree on " + show(m));
        cm += r.a_cohen_macaulay;
    }
    const auto bad = non_s2_ideal();
    const auto good = cm_partner_ideal();
    t.expect(depth(bad) == 1, "depth of M");
    t.expect(!serre_s2(bad).holds, "M satisfies (S2)");
    t.expect(is_cohen_macaulay(good), "M' not Cohen-Macaulay");
    t.expect(associated_primes(bad).primes == associated_primes(good).primes, "associated primes differ");
    t.note("200 cogeneric ideals, " + count_of(cm, "Cohen-Macaulay"));
    return t.outcome();
}

Outcome type_and_gorenstein() {
    Tally t;
    std::size_t applicable = 0, gorenstein_count = 0;
    for (const auto& m : corpus(CorpusKind::cogeneric, 9, 200)) {
        const auto r = cm_type_bound(m);
        if (r.applicable) {
            ++applicable;
            t.expect(r.holds, "type below component count on " + show(m));
        }
        const bool g = gorenstein(m);
        gorenstein_count += g;
        t.expect(g == principal_or_irreducible(m), "Gorenstein mismatch on " + show(m));
    }
    t.note(count_of(applicable, "CM of codim >= 2") + ", " + count_of(gorenstein_count, "Gorenstein"));
    return t.outcome();
}

Outcome betti_inequality() {
    Tally t;
    std::size_t checked = 0, members = 0;
    for (const auto kind : {CorpusKind::any, CorpusKind::generic, CorpusKind::cogeneric}) {
        for (const auto& m : corpus(kind, 10, 200)) {
            const auto sweep = betti_inequality_sweep(m, DualContext::standard(m));
            ++members;
            checked += sweep.checked;
            t.expect(sweep.holds(), "inequality fails on " + show(m));
        }
    }
    t.note(count_of(members, "ideals") + ", " + count_of(checked, "(i, b) pairs"));
    return t.outcome();
}

Outcome component_counts() {
    Tally t;
    std::size_t uniform = 0;
    for (const auto& m : corpus(CorpusKind::uniform_generic, 11, 200)) {
        const auto r = check_component_bound(m);
        if (!r.applicable) continue;
        ++uniform;
        t.expect(r.holds, "component bound fails on " + show(m));
    }
    for (std::size_t c = 2; c <= 3; ++c) {
        for (std::size_t r = 1; r <= 4; ++r) {
            const auto m = optimal_ideal(c, r);
            const auto g = generator_bound_cogeneric(m);
            const std::string tag = "optimal(" + std::to_string(c) + "," + std::to_string(r) + ")";
            t.expect(is_cogeneric(m).is_cogeneric, tag + " not cogeneric");
            t.expect(g.applicable && m.size() == (c - 1) * r + 1 && g.tight, tag + " misses the bound");
            t.expect(is_cohen_macaulay(m), tag + " not Cohen-Macaulay");
        }
    }
    std::size_t bi_yes = 0, bi_no = 0;
    for (const auto& m : corpus(CorpusKind::bivariate_generic, 11, 200)) {
        const auto b = check_bivariate(m);
        t.expect(b.holds(), "bivariate equivalence fails on " + show(m));
        (b.exactly_r_plus_one ? bi_yes : bi_no) += 1;
    }
    t.expect(bi_yes > 0 && bi_no > 0, "bivariate corpus covers one direction only");
    std::size_t ht2_cm = 0, ht2_not = 0;
    // Duals of bivariate generic ideals: cogeneric with every component of codim 2.
    for (const auto& b : corpus(CorpusKind::bivariate_generic, 111, 300)) {
        const auto m = alexander_dual(b, DualContext::standard(b));
        const auto g = generator_bound_cogeneric(m);
        if (!g.applicable || g.codim != 2) continue;
        t.expect(g.bound_holds && g.consequences_hold, "codim-2 equivalence fails on " + show(m));
        (g.cohen_macaulay ? ht2_cm : ht2_not) += 1;
    }
    t.expect(ht2_cm > 0 && ht2_not > 0, "codim-2 corpus covers one direction only (" + std::to_string(ht2_cm) + " CM, " + std::to_string(ht2_not) + " not)");
    const auto paired = paired_primes_ideal(2);
    bool refused = false;
    try {
        check_bivariate(paired);
    } catch (const PreconditionError&) {
        refused = true;
    }
    t.expect(refused && !is_generic(paired).is_generic, "paired-primes ideal not rejected");
    t.note(count_of(uniform, "uniform-support ideals") + "; bivariate " + std::to_string(bi_yes) + " with r+1 / " +
           std::to_string(bi_no) + " without; codim 2 " + std::to_string(ht2_cm) + " CM / " + std::to_string(ht2_not) +
           " not");
    return t.outcome();
}

Outcome h_vectors() {
    Tally t;
    std::size_t complexes = 0, counted = 0;
    for (const auto& m : corpus(CorpusKind::generic, 12, 200)) {
        const auto r = check_local_h_properties(extended_scarf_complex(m).labeled);
        ++complexes;
        t.expect(r.all(), "extended Scarf of " + show(m) + ": " + (r.findings.empty() ? "" : r.findings.front()));
    }
    for (const auto& m : corpus(CorpusKind::cogeneric, 12, 200)) {
        const auto cs = co_scarf(m);
        const auto r = check_local_h_properties(cs.labeled());
        ++complexes;
        t.expect(r.all(), "co-Scarf of " + show(m) + ": " + (r.findings.empty() ? "" : r.findings.front()));
        if (!is_cohen_macaulay(m)) continue;
        ++counted;
        const auto b = check_interior_face_count(cs.labeled(), codim(m), cs.extended.generator_vertices());
        t.expect(b.hypothesis && b.holds(), "interior face count fails on " + show(m));
    }
    t.note(count_of(complexes, "triangulations") + ", " + count_of(counted, "CM co-Scarf complexes"));
    return t.outcome();
}

Outcome determinism() {
    Tally t;
    CorpusParams p;
    p.count = 200;
    const Config config;
    const std::string a = verify_corpus(CorpusKind::any, 13, p, config).to_json();
    const std::string b = verify_corpus(CorpusKind::any, 13, p, config).to_json();
    t.expect(a == b, "corpus reports differ");
    const std::string c = verify_all(three_component_ideal(), config).to_json();
    t.expect(c == verify_all(three_component_ideal(), config).to_json(), "verify-all reports differ");
    t.note("report digest " + digest(a));
    return t.outcome();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"three-component example pipeline", example_pipeline},
        {"tree ideals", tree_ideals},
        {"tree and permutahedron duality", tree_permutahedron},
        {"genericity iff Scarf resolution with edge condition", genericity_equivalence},
        {"Betti oracle, Taylor and Scarf agree", oracle_concordance},
        {"associated primes of generic ideals", generic_primes},
        {"lattice initial ideals and census", lattice_ideals},
        {"Cohen-Macaulay criteria for cogeneric ideals", cm_criteria},
        {"type and Gorenstein", type_and_gorenstein},
        {"dual Betti inequality", betti_inequality},
        {"component and generator counts", component_counts},
        {"h-vectors and local h-vectors", h_vectors},
        {"deterministic reports", determinism},
    };
    bool all = true;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.passed;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail << ") " << timing << std::endl;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", total);
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << " in " << timing << std::endl;
    return all ? 0 : 1;
}
