#include "monideal/binomial.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "monideal/assoc.hpp"
#include "monideal/error.hpp"
#include "monideal/resolution.hpp"
#include "monideal/scarf.hpp"
#include "monideal/text_format.hpp"

namespace monideal {

Binomial::Binomial(Monomial plus, Monomial minus) {
    if (plus.num_vars() != minus.num_vars()) throw PreconditionError("binomial terms have different lengths");
    const Monomial common = gcd(plus, minus);
    plus_ = plus / common;
    minus_ = minus / common;
}

bool Binomial::has_full_support() const { return (plus_.support() | minus_.support()) == full_varset(num_vars()); }

std::string to_string(const Binomial& b, const std::vector<std::string>& names) {
    return to_string(b.plus(), names) + " - " + to_string(b.minus(), names);
}

TermOrder TermOrder::revlex(std::size_t n) { return weighted_revlex(std::vector<std::int64_t>(n, 1)); }

TermOrder TermOrder::weighted_revlex(std::vector<std::int64_t> weights) {
    TermOrder t;
    t.variable_order.resize(weights.size());
    std::iota(t.variable_order.begin(), t.variable_order.end(), std::size_t{0});
    t.weights = std::move(weights);
    t.validate(t.weights.size());
    return t;
}

void TermOrder::validate(std::size_t n) const {
    if (weights.size() != n || variable_order.size() != n) throw PreconditionError("term order has the wrong length");
    if (std::any_of(weights.begin(), weights.end(), [](std::int64_t w) { return w <= 0; })) {
        throw PreconditionError("term order weights must be positive");
    }
    std::vector<std::size_t> sorted = variable_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] != i) throw PreconditionError("variable order is not a permutation");
    }
}

std::int64_t TermOrder::degree(const Monomial& m) const {
    std::int64_t d = 0;
    for (std::size_t s = 0; s < m.num_vars(); ++s) d += weights[s] * m[s];
    return d;
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
    const std::int64_t da = degree(a), db = degree(b);
    if (da != db) return da > db;
    for (auto it = variable_order.rbegin(); it != variable_order.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] < b[*it];
    }
    return false;
}

Binomial oriented(const Binomial& b, const TermOrder& order) {
    return order.greater(b.minus(), b.plus()) ? b.negated() : b;
}

BinomialSystem parse_binomials(std::string_view text) {
    const TextDocument doc = read_document(text);
    BinomialSystem s;
    s.names = doc.names;
    for (const auto& line : doc.body) {
        const std::size_t dash = line.text.find('-');
        if (dash == std::string::npos) throw ParseError(line.number, 1, "expected a binomial of the form u - v");
        if (line.text.find('-', dash + 1) != std::string::npos) throw ParseError(line.number, dash + 2, "unexpected '-'");
        const std::string_view lhs = std::string_view(line.text).substr(0, dash);
        const std::string_view rhs = std::string_view(line.text).substr(dash + 1);
        Binomial b(parse_monomial(lhs, s.names, line.number, 1), parse_monomial(rhs, s.names, line.number, dash + 2));
        if (b.is_zero()) throw ParseError(line.number, 1, "binomial is zero");
        s.binomials.push_back(std::move(b));
    }
    if (s.binomials.empty()) throw ParseError(doc.body.empty() ? 1 : doc.body.back().number, 1, "no binomials given");
    return s;
}

std::string format_binomials(const BinomialSystem& s) {
    std::string out = "vars: ";
    for (std::size_t i = 0; i < s.names.size(); ++i) out += (i ? "," : "") + s.names[i];
    out += '\n';
    for (const Binomial& b : s.binomials) out += to_string(b, s.names) + '\n';
    return out;
}

namespace {

// Reduces the leading term against `basis` until no leading term divides it;
// nullopt for zero.
std::optional<Binomial> reduce(Binomial f, const std::vector<Binomial>& basis, const TermOrder& order) {
    f = oriented(f, order);
    while (!f.is_zero()) {
        const auto it = std::find_if(basis.begin(), basis.end(), [&](const Binomial& g) { return g.plus().divides(f.plus()); });
        if (it == basis.end()) return f;
        f = oriented(Binomial((f.plus() / it->plus()) * it->minus(), f.minus()), order);
    }
    return std::nullopt;
}

}  // namespace

std::vector<Binomial> buchberger(const std::vector<Binomial>& gens, const TermOrder& order, std::int64_t degree_cap) {
    if (gens.empty()) return {};
    order.validate(gens.front().num_vars());
    std::vector<Binomial> basis;
    for (const Binomial& g : gens) {
        if (auto r = reduce(g, basis, order)) basis.push_back(*r);
    }
    // (degree of lcm, i, j); std::set gives the normal selection strategy deterministically
    std::set<std::tuple<std::int64_t, std::size_t, std::size_t>> pairs;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial l = lcm(basis[i].plus(), basis[j].plus());
            if (gcd(basis[i].plus(), basis[j].plus()).is_one()) continue;
            pairs.emplace(order.degree(l), i, j);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);
    while (!pairs.empty()) {
        const auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (deg > degree_cap) throw CutoffExceeded("buchberger: S-pair degree exceeds cap " + std::to_string(degree_cap));
        const Monomial l = lcm(basis[i].plus(), basis[j].plus());
        const Binomial s((l / basis[i].plus()) * basis[i].minus(), (l / basis[j].plus()) * basis[j].minus());
        if (auto r = reduce(s, basis, order)) {
            basis.push_back(*r);
            add_pairs(basis.size() - 1);
        }
    }
    // minimal basis, then tail reduction
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !basis[j].plus().divides(basis[i].plus())) continue;
            redundant = basis[j].plus() != basis[i].plus() || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Binomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Binomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        Binomial f = minimal[i];
        while (true) {
            bool changed = false;
            for (const Binomial& g : others) {
                if (g.plus().divides(f.minus())) {
                    f = Binomial(f.plus(), (f.minus() / g.plus()) * g.minus());
                    changed = true;
                    break;
                }
            }
            if (!changed) break;
        }
        reduced.push_back(f);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Binomial& a, const Binomial& b) { return order.greater(a.plus(), b.plus()); });
    return reduced;
}

MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, const TermOrder& order, std::vector<std::string> names) {
    std::vector<Monomial> leads;
    for (const Binomial& b : gb) leads.push_back(oriented(b, order).plus());
    return MonomialIdeal(std::move(names), std::move(leads));
}

IngenReport check_ingen(const BinomialSystem& s, const TermOrder& order, Field field) {
    for (const Binomial& b : s.binomials) {
        if (!b.has_full_support()) throw PreconditionError("check_ingen needs binomials with full support");
    }
    IngenReport r;
    r.initial = initial_ideal(buchberger(s.binomials, order), order, s.names);
    r.generic = is_generic(r.initial).is_generic;
    r.generic_old = is_generic_old(r.initial);
    const MultigradedFreeComplex f = algebraic_scarf(r.initial);
    r.scarf_exact = is_exact(f, r.initial, field).exact;
    r.scarf_minimal = is_minimal(f);
    r.edge_condition = scarf_edge_condition(r.initial, scarf_complex(r.initial));
    return r;
}

PdBoundReport check_pd_bound(const MonomialIdeal& initial, Field field) {
    PdBoundReport r;
    r.codim = codim(initial);
    r.proj_dim = proj_dim(initial, field);
    r.bound = (std::int64_t{1} << r.codim) - 1;
    return r;
}

ConjectureReport conjecture_report(const MonomialIdeal& initial, bool asserted, Field field) {
    ConjectureReport r;
    r.asserted = asserted;
    r.proj_dim = proj_dim(initial, field);
    for (const MonomialPrime& p : associated_primes(initial).primes) r.associated_codims.push_back(p.codim());
    r.holds = std::find(r.associated_codims.begin(), r.associated_codims.end(), r.proj_dim) != r.associated_codims.end();
    return r;
}

std::vector<MonomialIdeal> census_initial_ideals(const BinomialSystem& s, std::int64_t lo, std::int64_t hi) {
    if (lo <= 0 || hi < lo) throw PreconditionError("census: weight box must satisfy 1 <= lo <= hi");
    const std::size_t n = s.names.size();
    const std::int64_t side = hi - lo + 1;
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= static_cast<std::size_t>(side);

    auto weight_vector = [&](std::size_t index) {
        std::vector<std::int64_t> w(n);
        for (std::size_t k = 0; k < n; ++k) {
            w[k] = lo + static_cast<std::int64_t>(index % static_cast<std::size_t>(side));
            index /= static_cast<std::size_t>(side);
        }
        return w;
    };
    auto run = [&](std::size_t begin, std::size_t step) {
        std::map<std::vector<Monomial>, MonomialIdeal> found;
        for (std::size_t k = begin; k < total; k += step) {
            const TermOrder order = TermOrder::weighted_revlex(weight_vector(k));
            MonomialIdeal in = initial_ideal(buchberger(s.binomials, order), order, s.names);
            found.emplace(in.generators(), std::move(in));
        }
        return found;
    };
    const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), 8);
    std::vector<std::future<std::map<std::vector<Monomial>, MonomialIdeal>>> tasks;
    for (std::size_t w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, run, w, workers));
    std::map<std::vector<Monomial>, MonomialIdeal> all;
    for (auto& t : tasks) all.merge(t.get());
    std::vector<MonomialIdeal> out;
    for (auto& [key, ideal] : all) out.push_back(std::move(ideal));
    return out;
}

}  // namespace monideal
