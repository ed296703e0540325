#include "monideal/monomial.hpp"

#include <algorithm>
#include <limits>

#include "monideal/error.hpp"

namespace monideal {

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) {
        throw PreconditionError("monomials live in different rings (" + std::to_string(a.num_vars()) +
                                " vs " + std::to_string(b.num_vars()) + " variables)");
    }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    if (exps_.size() > kMaxVariables) {
        throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    for (Exponent e : exps_) {
        if (e < 0) throw PreconditionError("negative exponent " + std::to_string(e));
    }
}

Monomial Monomial::pure_power(std::size_t n, std::size_t var, Exponent e) {
    std::vector<Exponent> v(n, 0);
    v.at(var) = e;
    return Monomial(std::move(v));
}

std::int64_t Monomial::total_degree() const noexcept {
    std::int64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

Exponent Monomial::max_exponent() const noexcept {
    Exponent m = 0;
    for (Exponent e : exps_) m = std::max(m, e);
    return m;
}

VarSet Monomial::support() const noexcept {
    VarSet s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0) s |= VarSet{1} << i;
    }
    return s;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    require_same_length(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

bool Monomial::divides_with_full_support_quotient(const Monomial& other) const {
    require_same_length(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (other.exps_[i] == 0) {
            if (exps_[i] != 0) return false;
        } else if (exps_[i] >= other.exps_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_length(*this, other);
    std::vector<Exponent> v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::int64_t s = std::int64_t{exps_[i]} + other.exps_[i];
        if (s > std::numeric_limits<Exponent>::max()) throw Error("exponent overflow in monomial product");
        v[i] = static_cast<Exponent>(s);
    }
    return Monomial(std::move(v));
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw PreconditionError("monomial quotient is not exact");
    std::vector<Exponent> v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] - other.exps_[i];
    return Monomial(std::move(v));
}

Monomial Monomial::restricted_to(VarSet vars) const {
    std::vector<Exponent> v(exps_.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (vars >> i & 1U) v[i] = exps_[i];
    }
    return Monomial(std::move(v));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    std::vector<Exponent> v(a.num_vars());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a[i], b[i]);
    return Monomial(std::move(v));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    std::vector<Exponent> v(a.num_vars());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a[i], b[i]);
    return Monomial(std::move(v));
}

Monomial lcm_of(std::span<const Monomial> ms, std::size_t n) {
    Monomial acc(n);
    for (const Monomial& m : ms) acc = lcm(acc, m);
    return acc;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
    std::string out;
    for (std::size_t s = 0; s < m.num_vars(); ++s) {
        if (m[s] == 0) continue;
        if (!out.empty()) out += '*';
        out += s < names.size() ? names[s] : "x" + std::to_string(s + 1);
        if (m[s] != 1) out += '^' + std::to_string(m[s]);
    }
    return out.empty() ? "1" : out;
}

std::string exponent_string(const Monomial& m) {
    std::string out;
    for (std::size_t s = 0; s < m.num_vars(); ++s) {
        if (s) out += ',';
        out += std::to_string(m[s]);
    }
    return out;
}

}  // namespace monideal
