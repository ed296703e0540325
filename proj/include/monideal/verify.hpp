#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/corpus.hpp"
#include "monideal/ideal.hpp"
#include "monideal/linalg.hpp"
#include "monideal/report.hpp"

namespace monideal {

/// Size caps for the expensive checks. Each can be overridden from a
/// key=value config file.
struct Limits {
    std::size_t subset_max_generators = 20;  // bucketing all 2^r generator subsets
    std::size_t taylor_max_generators = 12;
    std::size_t shelling_cutoff = kDefaultShellingCutoff;
    std::size_t inequality_max_vars = 4;
};

struct Config {
    Field field = Field::rationals();
    Limits limits;
    /// One line per overridden cap.
    std::vector<std::string> warnings;
};

/// Reads `key = value` lines ('#' comments, blank lines allowed). Keys:
/// field, subset_max_generators, taylor_max_generators, shelling_cutoff,
/// inequality_max_vars. Unknown keys and bad values raise ParseError.
void apply_config(Config& config, std::string_view text);

/// Every theorem check that applies to M. Verdicts are theorem checks (a
/// failure is a finding); conjectures and non-asserted facts go in `data`.
RunReport verify_all(const MonomialIdeal& m, const Config& config);

/// verify_all over a generated corpus; per-member summaries in data, one
/// aggregated verdict per check name.
RunReport verify_corpus(CorpusKind kind, std::uint64_t seed, const CorpusParams& params, const Config& config);

}  // namespace monideal
