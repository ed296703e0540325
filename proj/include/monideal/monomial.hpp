#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monideal {

using Exponent = std::int32_t;

/// Set of variable indices, bit s set iff x_s is present.
using VarSet = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 64;

inline int popcount(VarSet s) noexcept { return std::popcount(s); }

inline constexpr VarSet full_varset(std::size_t n) noexcept {
    return n >= 64 ? ~VarSet{0} : ((VarSet{1} << n) - 1);
}

/// x^a for a fixed-length exponent vector a in N^n. Also used for multidegrees.
///
/// The length never changes after construction and every entry is >= 0.
/// The built-in ordering is lexicographic on the exponent vector.
class Monomial {
public:
    Monomial() = default;

    /// The monomial 1 in n variables.
    explicit Monomial(std::size_t n) : exps_(n, 0) {}

    explicit Monomial(std::vector<Exponent> exps);
    Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

    static Monomial pure_power(std::size_t n, std::size_t var, Exponent e);

    std::size_t num_vars() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t s) const { return exps_[s]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }
    const std::vector<Exponent>& vector() const noexcept { return exps_; }

    std::int64_t total_degree() const noexcept;
    Exponent max_exponent() const noexcept;
    VarSet support() const noexcept;
    bool is_one() const noexcept;

    /// True iff this monomial divides `other`.
    bool divides(const Monomial& other) const;

    /// True iff this divides `other` and other/this has the same support as `other`,
    /// i.e. the exponent here is strictly smaller on every variable of supp(other).
    bool divides_with_full_support_quotient(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;

    /// other must divide *this.
    Monomial operator/(const Monomial& other) const;

    /// Entry-wise product with the indicator of `vars` (the vector b*F).
    Monomial restricted_to(VarSet vars) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// lcm of a set; lcm of the empty set is the monomial 1 in n variables.
Monomial lcm_of(std::span<const Monomial> ms, std::size_t n);

/// Canonical generator order: descending lexicographic on exponent vectors
/// (x^2 before xy before y^2 when x > y).
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

/// `x^2*y*z^3` style text; "1" for the unit monomial.
std::string to_string(const Monomial& m, std::span<const std::string> names);

/// Comma separated exponent list, e.g. "2,0,1".
std::string exponent_string(const Monomial& m);

}  // namespace monideal
