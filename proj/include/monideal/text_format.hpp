#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// Parsed content of the shared text format: a `vars:` header line followed
/// by one entry per line. Blank lines and lines starting with '#' are skipped.
struct TextDocument {
    std::vector<std::string> names;
    struct Line {
        std::size_t number;  // 1-based
        std::string text;
    };
    std::vector<Line> body;
};

TextDocument read_document(std::string_view text);

/// Parses a product like `x^2*y*z^3` (whitespace-insensitive). `column0` is the
/// 1-based column of text[0] in its line, for diagnostics.
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& names, std::size_t line,
                        std::size_t column0 = 1);

/// Ideal format: header `vars: x,y,z`, then one generator per line. The unit
/// monomial `1` is rejected, and so is a file with no generators.
MonomialIdeal parse_ideal(std::string_view text);

std::string format_ideal(const MonomialIdeal& m);

std::string read_file(const std::string& path);

}  // namespace monideal
