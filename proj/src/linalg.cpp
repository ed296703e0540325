#include "monideal/linalg.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <unordered_map>

#include "monideal/error.hpp"

namespace monideal {

Field Field::prime(std::uint32_t p) {
    if (p < 2 || p > 32749) throw PreconditionError("field characteristic must be a prime <= 32749");
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) throw PreconditionError(std::to_string(p) + " is not prime");
    }
    return Field{p};
}

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("p:", 0) == 0) {
        try {
            return prime(static_cast<std::uint32_t>(std::stoul(text.substr(2))));
        } catch (const std::logic_error&) {
            throw PreconditionError("bad field `" + text + "`");
        }
    }
    throw PreconditionError("bad field `" + text + "` (expected q or p:<prime>)");
}

std::string Field::name() const { return characteristic == 0 ? "q" : "p:" + std::to_string(characteristic); }

void SparseIntMatrix::add(std::size_t r, std::size_t c, std::int64_t value) {
    if (r >= rows_.size() || c >= cols_) throw PreconditionError("matrix index out of range");
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == c) {
        it->value += value;
        if (it->value == 0) row.erase(it);
    } else if (value != 0) {
        row.insert(it, Entry{c, value});
    }
}

namespace {

struct BigEntry {
    std::size_t col;
    mpz_class value;
};
using BigRow = std::vector<BigEntry>;

// r <- b*r - a*p, where a = lead(r), b = lead(p) share the leading column.
BigRow eliminate(const BigRow& r, const BigRow& p) {
    const mpz_class a = r.front().value;
    const mpz_class b = p.front().value;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const mpz_class fa = a / g;
    const mpz_class fb = b / g;
    BigRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].col < p[j].col)) {
            out.push_back({r[i].col, fb * r[i].value});
            ++i;
        } else if (i == r.size() || p[j].col < r[i].col) {
            out.push_back({p[j].col, -fa * p[j].value});
            ++j;
        } else {
            mpz_class v = fb * r[i].value - fa * p[j].value;
            if (v != 0) out.push_back({r[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    if (!out.empty()) {
        mpz_class content = 0;
        for (const auto& e : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.value.get_mpz_t());
        if (content > 1) {
            for (auto& e : out) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), content.get_mpz_t());
        }
    }
    return out;
}

std::size_t rank_rational(const SparseIntMatrix& m) {
    std::vector<BigRow> basis;
    std::unordered_map<std::size_t, std::size_t> pivot_of;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigRow row;
        row.reserve(m.row(r).size());
        for (const auto& e : m.row(r)) row.push_back({e.col, mpz_class(static_cast<long>(e.value))});
        while (!row.empty()) {
            const auto it = pivot_of.find(row.front().col);
            if (it == pivot_of.end()) {
                pivot_of.emplace(row.front().col, basis.size());
                basis.push_back(std::move(row));
                break;
            }
            row = eliminate(row, basis[it->second]);
        }
    }
    return basis.size();
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

std::size_t rank_modular(const SparseIntMatrix& m, std::int64_t p) {
    using Row = std::vector<std::pair<std::size_t, std::int64_t>>;
    std::vector<Row> basis;
    std::unordered_map<std::size_t, std::size_t> pivot_of;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Row row;
        for (const auto& e : m.row(r)) {
            const std::int64_t v = ((e.value % p) + p) % p;
            if (v) row.emplace_back(e.col, v);
        }
        while (!row.empty()) {
            const auto it = pivot_of.find(row.front().first);
            if (it == pivot_of.end()) {
                const std::int64_t inv = inverse_mod(row.front().second, p);
                for (auto& e : row) e.second = e.second * inv % p;
                pivot_of.emplace(row.front().first, basis.size());
                basis.push_back(std::move(row));
                break;
            }
            const Row& piv = basis[it->second];
            const std::int64_t f = row.front().second;
            Row out;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    out.push_back(row[i++]);
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    out.emplace_back(piv[j].first, (p - f * piv[j].second % p) % p);
                    ++j;
                } else {
                    const std::int64_t v = ((row[i].second - f * piv[j].second) % p + p) % p;
                    if (v) out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(out);
        }
    }
    return basis.size();
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m, Field field) {
    if (field.characteristic == 0) return rank_rational(m);
    return rank_modular(m, field.characteristic);
}

}  // namespace monideal
