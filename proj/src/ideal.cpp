#include "monideal/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "monideal/error.hpp"

namespace monideal {

std::vector<std::string> default_variable_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

namespace {

std::vector<Monomial> antichain(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), CanonicalOrder{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // A generator can only be divided by one of no larger total degree.
    std::vector<std::size_t> by_degree(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) by_degree[i] = i;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) {
        return gens[a].total_degree() < gens[b].total_degree();
    });
    std::vector<bool> keep(gens.size(), true);
    std::vector<std::size_t> kept;
    for (std::size_t idx : by_degree) {
        for (std::size_t k : kept) {
            if (gens[k].divides(gens[idx])) {
                keep[idx] = false;
                break;
            }
        }
        if (keep[idx]) kept.push_back(idx);
    }
    std::vector<Monomial> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (keep[i]) out.push_back(std::move(gens[i]));
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> names, std::vector<Monomial> gens)
    : names_(std::move(names)) {
    if (names_.size() > kMaxVariables) {
        throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    for (const Monomial& g : gens) {
        if (g.num_vars() != names_.size()) {
            throw PreconditionError("generator has " + std::to_string(g.num_vars()) + " variables, ring has " +
                                    std::to_string(names_.size()));
        }
    }
    gens_ = antichain(std::move(gens));
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens)
    : MonomialIdeal(default_variable_names(n), std::move(gens)) {}

void MonomialIdeal::require_proper_nonzero() const {
    if (is_zero()) throw ZeroIdealError();
    if (is_unit()) throw UnitIdealError();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

Exponent MonomialIdeal::max_exponent() const noexcept {
    Exponent m = 0;
    for (const Monomial& g : gens_) m = std::max(m, g.max_exponent());
    return m;
}

MonomialIdeal minimalize(std::vector<std::string> names, std::vector<Monomial> gens) {
    return MonomialIdeal(std::move(names), std::move(gens));
}

IrreducibleComponent::IrreducibleComponent(Monomial b) : bound(std::move(b)) {
    if (bound.is_one()) throw PreconditionError("irreducible component must be a proper ideal (bound is zero)");
}

MonomialIdeal IrreducibleComponent::as_ideal(std::vector<std::string> names) const {
    std::vector<Monomial> gens;
    for (std::size_t s = 0; s < bound.num_vars(); ++s) {
        if (bound[s] >= 1) gens.push_back(Monomial::pure_power(bound.num_vars(), s, bound[s]));
    }
    return MonomialIdeal(std::move(names), std::move(gens));
}

bool IrreducibleComponent::is_contained_in(const IrreducibleComponent& other) const {
    // every generator x_s^{b_s} must be divisible by some x_s^{c_s}
    for (std::size_t s = 0; s < bound.num_vars(); ++s) {
        if (bound[s] == 0) continue;
        if (other.bound[s] == 0 || other.bound[s] > bound[s]) return false;
    }
    return true;
}

IrreducibleDecomposition make_irredundant(std::vector<IrreducibleComponent> components) {
    std::sort(components.begin(), components.end(),
              [](const IrreducibleComponent& a, const IrreducibleComponent& b) { return a.bound > b.bound; });
    components.erase(std::unique(components.begin(), components.end()), components.end());
    IrreducibleDecomposition out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < components.size() && !redundant; ++j) {
            redundant = j != i && components[j].is_contained_in(components[i]);
        }
        if (!redundant) out.components.push_back(components[i]);
    }
    return out;
}

std::vector<std::string> prime_names(const MonomialPrime& p, std::span<const std::string> names) {
    std::vector<std::string> out;
    for (std::size_t s = 0; s < names.size(); ++s) {
        if (p.vars >> s & 1U) out.push_back(names[s]);
    }
    return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars()) throw PreconditionError("intersect: ideals live in different rings");
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const Monomial& g : a.generators()) {
        for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
    }
    return MonomialIdeal(a.names(), std::move(gens));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
    if (ideals.empty()) throw PreconditionError("intersect: empty list of ideals");
    MonomialIdeal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
    return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars()) throw PreconditionError("sum: ideals live in different rings");
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.names(), std::move(gens));
}

namespace {

void split_recursively(const std::vector<Monomial>& gens, std::size_t n,
                       std::set<std::vector<Monomial>>& seen, std::vector<IrreducibleComponent>& out) {
    if (!seen.insert(gens).second) return;
    const Monomial* mixed = nullptr;
    for (const Monomial& g : gens) {
        if (popcount(g.support()) >= 2) {
            mixed = &g;
            break;
        }
    }
    if (mixed == nullptr) {
        std::vector<Exponent> b(n, 0);
        for (const Monomial& g : gens) {
            const int s = std::countr_zero(g.support());
            b[static_cast<std::size_t>(s)] = g[static_cast<std::size_t>(s)];
        }
        out.emplace_back(Monomial(std::move(b)));
        return;
    }
    const auto s = static_cast<std::size_t>(std::countr_zero(mixed->support()));
    const Monomial power = Monomial::pure_power(n, s, (*mixed)[s]);
    std::vector<Exponent> rest = mixed->vector();
    rest[s] = 0;
    const Monomial cofactor(std::move(rest));

    std::vector<Monomial> left = gens;
    left.push_back(power);
    std::vector<Monomial> right = gens;
    right.push_back(cofactor);
    split_recursively(antichain(std::move(left)), n, seen, out);
    split_recursively(antichain(std::move(right)), n, seen, out);
}

}  // namespace

IrreducibleDecomposition irreducible_decomposition_oracle(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    std::set<std::vector<Monomial>> seen;
    std::vector<IrreducibleComponent> raw;
    split_recursively(m.generators(), m.num_vars(), seen, raw);
    IrreducibleDecomposition d = make_irredundant(std::move(raw));
    if (ideal_of(d, m.names()) != m) {
        throw ConsistencyError("irreducible decomposition does not intersect back to the input ideal");
    }
    return d;
}

MonomialIdeal ideal_of(const IrreducibleDecomposition& d, std::vector<std::string> names) {
    if (d.components.empty()) throw PreconditionError("empty decomposition");
    MonomialIdeal acc = d.components.front().as_ideal(names);
    for (std::size_t i = 1; i < d.components.size(); ++i) acc = intersect(acc, d.components[i].as_ideal(names));
    return acc;
}

std::optional<std::uint64_t> colength(const MonomialIdeal& m) {
    const std::size_t n = m.num_vars();
    if (m.is_zero()) return std::nullopt;
    std::vector<Exponent> box(n, -1);
    for (const Monomial& g : m.generators()) {
        if (g.is_one()) return 0;
        if (popcount(g.support()) == 1) {
            const auto s = static_cast<std::size_t>(std::countr_zero(g.support()));
            box[s] = g[s];
        }
    }
    std::uint64_t volume = 1;
    for (Exponent b : box) {
        if (b < 0) return std::nullopt;
        volume *= static_cast<std::uint64_t>(b);
        if (volume > (std::uint64_t{1} << 32)) throw CutoffExceeded("colength: staircase box too large to enumerate");
    }
    std::uint64_t count = 0;
    std::vector<Exponent> u(n, 0);
    for (std::uint64_t k = 0; k < volume; ++k) {
        std::uint64_t rem = k;
        for (std::size_t s = 0; s < n; ++s) {
            u[s] = static_cast<Exponent>(rem % static_cast<std::uint64_t>(box[s]));
            rem /= static_cast<std::uint64_t>(box[s]);
        }
        if (!m.contains(Monomial(u))) ++count;
    }
    return count;
}

MonomialIdeal localize(const MonomialIdeal& m, const MonomialPrime& p) {
    std::vector<std::size_t> kept;
    std::vector<std::string> names;
    for (std::size_t s = 0; s < m.num_vars(); ++s) {
        if (p.vars >> s & 1U) {
            kept.push_back(s);
            names.push_back(m.names()[s]);
        }
    }
    if ((p.vars & ~full_varset(m.num_vars())) != 0) throw PreconditionError("localize: prime uses unknown variables");
    std::vector<Monomial> gens;
    for (const Monomial& g : m.generators()) {
        std::vector<Exponent> v;
        v.reserve(kept.size());
        for (std::size_t s : kept) v.push_back(g[s]);
        gens.emplace_back(std::move(v));
    }
    return MonomialIdeal(std::move(names), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& m) {
    std::vector<Monomial> gens;
    for (const Monomial& g : m.generators()) {
        std::vector<Exponent> v(m.num_vars(), 0);
        for (std::size_t s = 0; s < v.size(); ++s) v[s] = g[s] > 0 ? 1 : 0;
        gens.emplace_back(std::move(v));
    }
    return MonomialIdeal(m.names(), std::move(gens));
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    std::vector<VarSet> covers{0};
    const MonomialIdeal rad = radical(m);
    for (const Monomial& g : rad.generators()) {
        const VarSet supp = g.support();
        std::vector<VarSet> next;
        for (VarSet c : covers) {
            if (c & supp) {
                next.push_back(c);
                continue;
            }
            for (VarSet rest = supp; rest; rest &= rest - 1) next.push_back(c | (rest & -rest));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        covers.clear();
        for (VarSet c : next) {
            const bool has_smaller = std::any_of(next.begin(), next.end(),
                                                 [&](VarSet d) { return d != c && (d & ~c) == 0; });
            if (!has_smaller) covers.push_back(c);
        }
    }
    std::vector<MonomialPrime> out;
    out.reserve(covers.size());
    for (VarSet c : covers) out.push_back(MonomialPrime{c});
    std::sort(out.begin(), out.end());
    return out;
}

int codim(const MonomialIdeal& m) {
    int best = static_cast<int>(m.num_vars()) + 1;
    for (const MonomialPrime& p : minimal_primes(m)) best = std::min(best, p.codim());
    return best;
}

}  // namespace monideal
