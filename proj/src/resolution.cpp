#include "monideal/resolution.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <set>
#include <thread>
#include <unordered_map>

#include "monideal/error.hpp"
#include "monideal/scarf.hpp"

namespace monideal {

std::vector<std::size_t> MultigradedFreeComplex::ranks() const {
    std::vector<std::size_t> out;
    out.reserve(strands.size());
    for (const auto& s : strands) out.push_back(s.size());
    return out;
}

std::size_t MultigradedFreeComplex::length() const {
    std::size_t len = 0;
    for (std::size_t h = 0; h < strands.size(); ++h) {
        if (!strands[h].empty()) len = h;
    }
    return len;
}

MultigradedFreeComplex simplicial_free_complex(const std::vector<Monomial>& gens, std::size_t n,
                                               const std::vector<Face>& faces) {
    MultigradedFreeComplex f;
    f.num_vars = n;
    std::size_t top = 0;
    for (Face face : faces) top = std::max(top, static_cast<std::size_t>(face_size(face)));
    f.strands.resize(top + 1);
    f.differentials.resize(top + 1);

    std::vector<Face> sorted = faces;
    std::sort(sorted.begin(), sorted.end(), [](Face a, Face b) {
        return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
    });
    std::unordered_map<Face, std::size_t> index;
    auto label = [&](Face face) {
        Monomial acc(n);
        for (Face rest = face; rest; rest &= rest - 1) acc = lcm(acc, gens[static_cast<std::size_t>(std::countr_zero(rest))]);
        return acc;
    };
    for (Face face : sorted) {
        auto& strand = f.strands[static_cast<std::size_t>(face_size(face))];
        index.emplace(face, strand.size());
        strand.push_back(BasisElement{face, label(face)});
    }
    for (std::size_t h = 1; h <= top; ++h) {
        for (std::size_t col = 0; col < f.strands[h].size(); ++col) {
            const BasisElement& src = f.strands[h][col];
            int position = 1;
            for (Face rest = src.face; rest; rest &= rest - 1, ++position) {
                const Face tau = src.face & ~(rest & (~rest + 1));
                const auto it = index.find(tau);
                if (it == index.end()) throw PreconditionError("free complex: face set is not closed under taking subsets");
                const BasisElement& tgt = f.strands[h - 1][it->second];
                f.differentials[h].push_back(
                    DifferentialEntry{it->second, col, position % 2 == 1 ? 1 : -1, src.degree / tgt.degree});
            }
        }
    }
    return f;
}

MultigradedFreeComplex algebraic_scarf(const MonomialIdeal& m) {
    m.require_proper_nonzero();
    return simplicial_free_complex(m.generators(), m.num_vars(), scarf_faces(m.generators()));
}

MultigradedFreeComplex taylor_complex(const MonomialIdeal& m, std::size_t max_generators) {
    m.require_proper_nonzero();
    if (m.size() > max_generators) {
        throw CutoffExceeded("Taylor complex: " + std::to_string(m.size()) + " generators exceeds cap " +
                             std::to_string(max_generators));
    }
    std::vector<Face> faces;
    const std::size_t total = std::size_t{1} << m.size();
    faces.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) faces.push_back(mask);
    return simplicial_free_complex(m.generators(), m.num_vars(), faces);
}

bool is_complex(const MultigradedFreeComplex& f) {
    for (std::size_t h = 1; h < f.differentials.size(); ++h) {
        for (const auto& e : f.differentials[h]) {
            if (e.coefficient == 0) return false;
            if (f.strands[h - 1][e.row].degree * e.exponent != f.strands[h][e.col].degree) return false;
        }
    }
    for (std::size_t h = 2; h < f.differentials.size(); ++h) {
        std::unordered_map<std::size_t, std::vector<const DifferentialEntry*>> lower_by_col;
        for (const auto& e : f.differentials[h - 1]) lower_by_col[e.col].push_back(&e);
        std::map<std::pair<std::size_t, std::size_t>, long long> product;
        for (const auto& upper : f.differentials[h]) {
            const auto it = lower_by_col.find(upper.row);
            if (it == lower_by_col.end()) continue;
            for (const DifferentialEntry* lower : it->second) {
                product[{lower->row, upper.col}] += static_cast<long long>(lower->coefficient) * upper.coefficient;
            }
        }
        for (const auto& [key, value] : product) {
            if (value != 0) return false;
        }
    }
    return true;
}

bool is_minimal(const MultigradedFreeComplex& f) {
    for (const auto& d : f.differentials) {
        for (const auto& e : d) {
            if (e.exponent.is_one()) return false;
        }
    }
    return true;
}

namespace {

std::vector<Monomial> lcm_closure(std::vector<Monomial> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::set<Monomial> closure;
    for (const Monomial& x : elements) {
        std::vector<Monomial> fresh{x};
        for (const Monomial& l : closure) fresh.push_back(lcm(x, l));
        closure.insert(fresh.begin(), fresh.end());
    }
    return {closure.begin(), closure.end()};
}

// Rank of d_h restricted to the selected basis elements of strands h and h-1.
std::size_t restricted_rank(const MultigradedFreeComplex& f, std::size_t h, const std::vector<std::vector<std::size_t>>& local,
                            Field field, bool units_only) {
    if (h == 0 || h >= f.differentials.size()) return 0;
    std::size_t rows = 0, cols = 0;
    for (std::size_t v : local[h]) rows += v != SIZE_MAX;
    for (std::size_t v : local[h - 1]) cols += v != SIZE_MAX;
    if (rows == 0 || cols == 0) return 0;
    SparseIntMatrix mat(rows, cols);
    for (const auto& e : f.differentials[h]) {
        if (units_only && !e.exponent.is_one()) continue;
        const std::size_t r = local[h][e.col];
        const std::size_t c = local[h - 1][e.row];
        if (r == SIZE_MAX || c == SIZE_MAX) continue;
        mat.add(r, c, e.coefficient);
    }
    return rank(mat, field);
}

template <typename Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(count);
    const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), 8);
    if (workers <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
        }));
    }
    for (auto& t : tasks) t.get();
    return out;
}

}  // namespace

ExactnessReport is_exact(const MultigradedFreeComplex& f, const MonomialIdeal& m, Field field) {
    if (!is_complex(f)) return ExactnessReport{false, std::nullopt};
    std::vector<Monomial> seeds = m.generators();
    for (const auto& strand : f.strands) {
        for (const auto& e : strand) seeds.push_back(e.degree);
    }
    std::vector<Monomial> degrees = lcm_closure(std::move(seeds));
    degrees.insert(degrees.begin(), Monomial(m.num_vars()));

    const auto failures = parallel_map(degrees.size(), [&](std::size_t k) -> bool {
        const Monomial& b = degrees[k];
        std::vector<std::vector<std::size_t>> local(f.strands.size());
        std::vector<std::size_t> dims(f.strands.size(), 0);
        for (std::size_t h = 0; h < f.strands.size(); ++h) {
            local[h].assign(f.strands[h].size(), SIZE_MAX);
            for (std::size_t i = 0; i < f.strands[h].size(); ++i) {
                if (f.strands[h][i].degree.divides(b)) local[h][i] = dims[h]++;
            }
        }
        std::vector<std::size_t> rk(f.strands.size() + 1, 0);
        for (std::size_t h = 1; h < f.strands.size(); ++h) rk[h] = restricted_rank(f, h, local, field, false);
        for (std::size_t h = 0; h < f.strands.size(); ++h) {
            const std::size_t homology = dims[h] - rk[h] - rk[h + 1];
            const std::size_t expected = (h == 0 && !m.contains(b)) ? 1 : 0;
            if (homology != expected) return true;
        }
        return false;
    });
    ExactnessReport report;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        if (failures[k]) {
            report.exact = false;
            report.counterexample = degrees[k];
            break;
        }
    }
    return report;
}

void BettiTable::add(int i, const Monomial& b, std::size_t rank) {
    if (rank == 0) return;
    entries_[{i, b}] += rank;
}

std::size_t BettiTable::at(int i, const Monomial& b) const {
    const auto it = entries_.find({i, b});
    return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
    std::size_t t = 0;
    for (const auto& [key, value] : entries_) {
        if (key.first == i) t += value;
    }
    return t;
}

std::vector<std::size_t> BettiTable::totals() const {
    const int top = max_index();
    std::vector<std::size_t> out(static_cast<std::size_t>(top + 1), 0);
    for (const auto& [key, value] : entries_) {
        if (key.first >= 0) out[static_cast<std::size_t>(key.first)] += value;
    }
    return out;
}

int BettiTable::max_index() const {
    int top = -1;
    for (const auto& [key, value] : entries_) top = std::max(top, key.first);
    return top;
}

BettiTable BettiTable::shifted_to_module() const {
    BettiTable out;
    for (const auto& [key, value] : entries_) {
        if (key.first >= 1) out.add(key.first - 1, key.second, value);
    }
    return out;
}

std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& gens, std::size_t n) {
    (void)n;
    return lcm_closure(gens);
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& m, const Monomial& b) {
    std::vector<Face> faces;
    const VarSet supp = b.support();
    VarSet sub = supp;
    std::vector<Exponent> shifted(b.vector());
    while (true) {
        for (std::size_t s = 0; s < shifted.size(); ++s) shifted[s] = b[s] - static_cast<Exponent>(sub >> s & 1U);
        if (m.contains(Monomial(shifted))) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & supp;
    }
    return SimplicialComplex(m.names(), std::move(faces));
}

BettiTable betti_oracle(const MonomialIdeal& m, Field field) {
    m.require_proper_nonzero();
    const std::vector<Monomial> lattice = lcm_lattice(m.generators(), m.num_vars());
    const auto homology = parallel_map(lattice.size(), [&](std::size_t k) {
        return reduced_homology_ranks(upper_koszul_complex(m, lattice[k]), field);
    });
    BettiTable table;
    table.add(0, Monomial(m.num_vars()), 1);
    for (std::size_t k = 0; k < lattice.size(); ++k) {
        for (std::size_t idx = 0; idx < homology[k].size(); ++idx) {
            table.add(static_cast<int>(idx) + 1, lattice[k], homology[k][idx]);
        }
    }
    return table;
}

BettiTable betti_from_complex(const MultigradedFreeComplex& f, Field field) {
    std::set<Monomial> degrees;
    for (const auto& strand : f.strands) {
        for (const auto& e : strand) degrees.insert(e.degree);
    }
    BettiTable table;
    for (const Monomial& b : degrees) {
        std::vector<std::vector<std::size_t>> local(f.strands.size());
        std::vector<std::size_t> dims(f.strands.size(), 0);
        for (std::size_t h = 0; h < f.strands.size(); ++h) {
            local[h].assign(f.strands[h].size(), SIZE_MAX);
            for (std::size_t i = 0; i < f.strands[h].size(); ++i) {
                if (f.strands[h][i].degree == b) local[h][i] = dims[h]++;
            }
        }
        std::vector<std::size_t> rk(f.strands.size() + 1, 0);
        for (std::size_t h = 1; h < f.strands.size(); ++h) rk[h] = restricted_rank(f, h, local, field, true);
        for (std::size_t h = 0; h < f.strands.size(); ++h) table.add(static_cast<int>(h), b, dims[h] - rk[h] - rk[h + 1]);
    }
    return table;
}

BettiTable basis_degree_table(const MultigradedFreeComplex& f) {
    BettiTable table;
    for (std::size_t h = 0; h < f.strands.size(); ++h) {
        for (const auto& e : f.strands[h]) table.add(static_cast<int>(h), e.degree, 1);
    }
    return table;
}

int proj_dim(const BettiTable& t) { return t.max_index(); }

int proj_dim(const MonomialIdeal& m, Field field) { return proj_dim(betti_oracle(m, field)); }

int depth(const MonomialIdeal& m, Field field) { return static_cast<int>(m.num_vars()) - proj_dim(m, field); }

bool is_cohen_macaulay(const MonomialIdeal& m, Field field) { return proj_dim(m, field) == codim(m); }

std::size_t cm_type(const MonomialIdeal& m, Field field) {
    const BettiTable t = betti_oracle(m, field);
    return t.total(proj_dim(t));
}

}  // namespace monideal
