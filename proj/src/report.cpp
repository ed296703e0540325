#include "monideal/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace monideal {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::not_applicable:
            return "na";
    }
    return "na";
}

void RunReport::add(std::string check, Status status, std::string witness) {
    verdicts.push_back(Verdict{std::move(check), status, std::move(witness)});
}

void RunReport::add(std::string check, bool passed, std::string witness) {
    add(std::move(check), passed ? Status::pass : Status::fail, std::move(witness));
}

bool RunReport::any_failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::fail; });
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    if (seed) j["seed"] = *seed;
    j["data"] = data;
    nlohmann::json list = nlohmann::json::array();
    for (const Verdict& v : verdicts) {
        list.push_back({{"check", v.check}, {"status", status_name(v.status)}, {"witness", v.witness}});
    }
    j["verdicts"] = std::move(list);
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j.dump(2) + "\n";
}

std::string RunReport::to_text() const {
    std::ostringstream out;
    for (const auto& [key, value] : data.items()) out << key << ": " << value.dump() << "\n";
    for (const Verdict& v : verdicts) {
        out << "[" << status_name(v.status) << "] " << v.check;
        if (!v.witness.empty()) out << "  (" << v.witness << ")";
        out << "\n";
    }
    return out.str();
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json betti_json(const BettiTable& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, rank] : t.entries()) {
        out.push_back({{"i", key.first}, {"degree", key.second.vector()}, {"rank", rank}});
    }
    return out;
}

std::string betti_grid(const BettiTable& t) {
    const std::vector<std::size_t> totals = t.totals();
    std::vector<std::string> head, body;
    std::size_t width = 1;
    for (std::size_t i = 0; i < totals.size(); ++i) {
        head.push_back(std::to_string(i));
        body.push_back(std::to_string(totals[i]));
        width = std::max({width, head.back().size(), body.back().size()});
    }
    auto row = [&](const std::string& label, const std::vector<std::string>& cells) {
        std::string line = label;
        for (const auto& c : cells) line += std::string(width + 2 - c.size(), ' ') + c;
        return line + "\n";
    };
    return row("i    ", head) + row("beta ", body);
}

nlohmann::json monomial_list_json(const std::vector<Monomial>& ms, const std::vector<std::string>& names) {
    nlohmann::json out = nlohmann::json::array();
    for (const Monomial& m : ms) out.push_back(to_string(m, names));
    return out;
}

nlohmann::json decomposition_json(const IrreducibleDecomposition& d, const std::vector<std::string>& names) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : d.components) {
        nlohmann::json gens = nlohmann::json::array();
        for (std::size_t s = 0; s < names.size(); ++s) {
            if (c.bound[s] > 0) gens.push_back(to_string(Monomial::pure_power(names.size(), s, c.bound[s]), names));
        }
        out.push_back(std::move(gens));
    }
    return out;
}

nlohmann::json prime_json(const MonomialPrime& p, const std::vector<std::string>& names) {
    return prime_names(p, names);
}

}  // namespace monideal
