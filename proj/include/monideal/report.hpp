#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "monideal/complexes.hpp"
#include "monideal/ideal.hpp"
#include "monideal/resolution.hpp"

namespace monideal {

enum class Status { pass, fail, not_applicable };

std::string status_name(Status s);

struct Verdict {
    std::string check;
    Status status = Status::not_applicable;
    std::string witness;
};

/// Outcome of one CLI run. Serialized with sorted keys; timing is only
/// emitted when recorded, so identical inputs give identical bytes.
struct RunReport {
    std::string command;
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    nlohmann::json data = nlohmann::json::object();
    std::vector<Verdict> verdicts;
    std::optional<double> timing_ms;

    void add(std::string check, Status status, std::string witness = {});
    void add(std::string check, bool passed, std::string witness = {});
    bool any_failed() const;
    std::string to_json() const;
    std::string to_text() const;
};

/// 64-bit FNV-1a, as 16 hex digits.
std::string digest(std::string_view bytes);

/// [{"i": .., "degree": [..], "rank": ..}, ...]
nlohmann::json betti_json(const BettiTable& t);

/// Total Betti numbers per homological degree, as aligned columns.
std::string betti_grid(const BettiTable& t);

nlohmann::json monomial_list_json(const std::vector<Monomial>& ms, const std::vector<std::string>& names);
nlohmann::json decomposition_json(const IrreducibleDecomposition& d, const std::vector<std::string>& names);
nlohmann::json prime_json(const MonomialPrime& p, const std::vector<std::string>& names);

}  // namespace monideal
