#include "monideal/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "monideal/error.hpp"

namespace monideal {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

class Cursor {
public:
    Cursor(std::string_view text, std::size_t line, std::size_t column0)
        : text_(text), line_(line), column0_(column0) {}

    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column0_ + pos_, what); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
        throw ParseError(line_, column0_ + pos, what);
    }
    std::size_t position() {
        skip_space();
        return pos_;
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected a variable name");
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    long long integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > std::numeric_limits<Exponent>::max()) {
                pos_ = start;
                fail("exponent too large");
            }
            ++pos_;
        }
        return v;
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t column0_;
    std::size_t pos_ = 0;
};

}  // namespace

TextDocument read_document(std::string_view text) {
    TextDocument doc;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        ++line_no;
        start = end + 1;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (!have_header) {
            const std::size_t lead = raw.find_first_not_of(" \t");
            if (line.substr(0, 5) != "vars:") throw ParseError(line_no, lead + 1, "expected header `vars: ...`");
            std::string_view rest = line.substr(5);
            std::size_t col = lead + 6;
            while (true) {
                const std::size_t comma = rest.find(',');
                const std::string_view item = rest.substr(0, comma);
                Cursor c(item, line_no, col);
                std::string name = c.identifier();
                if (!c.at_end()) c.fail("unexpected character in variable list");
                if (std::find(doc.names.begin(), doc.names.end(), name) != doc.names.end()) {
                    c.fail("duplicate variable name `" + name + "`");
                }
                doc.names.push_back(std::move(name));
                if (comma == std::string_view::npos) break;
                rest.remove_prefix(comma + 1);
                col += comma + 1;
            }
            if (doc.names.size() > kMaxVariables) throw ParseError(line_no, 1, "too many variables");
            have_header = true;
        } else {
            doc.body.push_back({line_no, std::string(raw)});
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing `vars:` header");
    return doc;
}

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& names, std::size_t line,
                        std::size_t column0) {
    Cursor c(text, line, column0);
    std::vector<Exponent> exps(names.size(), 0);
    if (c.peek() == '1') {
        c.integer();
        if (!c.at_end()) c.fail("unexpected text after `1`");
        return Monomial(std::move(exps));
    }
    while (true) {
        const std::size_t start = c.position();
        const std::string name = c.identifier();
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) c.fail_at(start, "unknown variable `" + name + "`");
        long long e = 1;
        if (c.peek() == '^') {
            c.advance();
            e = c.integer();
        }
        auto& slot = exps[static_cast<std::size_t>(it - names.begin())];
        if (slot + e > std::numeric_limits<Exponent>::max()) c.fail("exponent too large");
        slot += static_cast<Exponent>(e);
        if (c.at_end()) break;
        if (c.peek() != '*') c.fail("expected `*` or end of term");
        c.advance();
    }
    return Monomial(std::move(exps));
}

MonomialIdeal parse_ideal(std::string_view text) {
    const TextDocument doc = read_document(text);
    std::vector<Monomial> gens;
    for (const auto& line : doc.body) {
        const std::size_t lead = line.text.find_first_not_of(" \t");
        Monomial m = parse_monomial(std::string_view(line.text).substr(lead), doc.names, line.number, lead + 1);
        if (m.is_one()) throw ParseError(line.number, lead + 1, "the unit monomial `1` is not allowed as a generator");
        gens.push_back(std::move(m));
    }
    if (gens.empty()) throw ParseError(1, 1, "no generators (the zero ideal is not accepted)");
    return MonomialIdeal(doc.names, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& m) {
    std::ostringstream out;
    out << "vars: ";
    for (std::size_t i = 0; i < m.names().size(); ++i) out << (i ? "," : "") << m.names()[i];
    out << '\n';
    for (const Monomial& g : m.generators()) out << to_string(g, m.names()) << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open `" + path + "`");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace monideal
