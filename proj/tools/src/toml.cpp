#include "cancelfield_cli/toml.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace cancelfield::cli {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    TomlDocument run() {
        TomlDocument doc;
        std::string current;
        doc[current].line = 1;
        while (!eof()) {
            skip_ws();
            if (eof()) break;
            const char c = peek();
            if (c == '#') {
                skip_comment();
            } else if (c == '\n' || c == '\r') {
                newline();
            } else if (c == '[') {
                const std::size_t hl = line_, hc = col_;
                advance();
                skip_ws();
                std::string name = bare_key();
                skip_ws();
                expect(']');
                if (doc.count(name) != 0) fail("table [" + name + "] defined twice", hl, hc);
                doc[name].line = hl;
                current = std::move(name);
                end_of_line();
            } else {
                const std::size_t kl = line_, kc = col_;
                std::string key = bare_key();
                skip_ws();
                if (!eof() && peek() == '.') fail("dotted keys are not supported");
                expect('=');
                skip_ws();
                TomlValue v = value();
                auto& tab = doc[current];
                if (tab.entries.count(key) != 0) fail("key '" + key + "' defined twice", kl, kc);
                tab.entries.emplace(std::move(key), std::move(v));
                end_of_line();
            }
        }
        return doc;
    }

private:
    bool eof() const noexcept { return pos_ >= s_.size(); }
    char peek() const noexcept { return s_[pos_]; }

    void advance() {
        ++pos_;
        ++col_;
    }

    void newline() {
        if (peek() == '\r') {
            advance();
            if (eof() || peek() != '\n') fail("bare carriage return");
        }
        ++pos_;
        ++line_;
        col_ = 1;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
    [[noreturn]] static void fail(const std::string& msg, std::size_t l, std::size_t c) { throw ParseError(msg, l, c); }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
    }

    void skip_comment() {
        while (!eof() && peek() != '\n' && peek() != '\r') advance();
    }

    // Whitespace and newlines and comments, for use inside arrays.
    void skip_blank() {
        for (;;) {
            skip_ws();
            if (eof()) return;
            if (peek() == '#') {
                skip_comment();
            } else if (peek() == '\n' || peek() == '\r') {
                newline();
            } else {
                return;
            }
        }
    }

    void end_of_line() {
        skip_ws();
        if (eof()) return;
        if (peek() == '#') skip_comment();
        if (eof()) return;
        if (peek() != '\n' && peek() != '\r') fail(std::string("unexpected '") + peek() + "' after value");
        newline();
    }

    void expect(char c) {
        if (eof()) fail(std::string("expected '") + c + "' before end of input");
        if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
        advance();
    }

    static bool key_char(char c) noexcept {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
    }

    std::string bare_key() {
        const std::size_t start = pos_;
        while (!eof() && key_char(peek())) advance();
        if (pos_ == start) fail(eof() ? "expected a key" : std::string("invalid key character '") + peek() + "'");
        return std::string(s_.substr(start, pos_ - start));
    }

    TomlValue value() {
        if (eof()) fail("expected a value");
        TomlValue out;
        out.line = line_;
        out.column = col_;
        const char c = peek();
        if (c == '"') {
            out.v = basic_string();
        } else if (c == '\'') {
            out.v = literal_string();
        } else if (c == '[') {
            out.v = array();
        } else if (s_.substr(pos_, 4) == "true") {
            pos_ += 4;
            col_ += 4;
            out.v = true;
        } else if (s_.substr(pos_, 5) == "false") {
            pos_ += 5;
            col_ += 5;
            out.v = false;
        } else {
            number(out);
        }
        return out;
    }

    std::string basic_string() {
        advance();
        std::string out;
        for (;;) {
            if (eof() || peek() == '\n' || peek() == '\r') fail("unterminated string");
            const char c = peek();
            advance();
            if (c == '"') return out;
            if (c != '\\') {
                out.push_back(c);
                continue;
            }
            if (eof()) fail("unterminated escape");
            const char e = peek();
            advance();
            switch (e) {
            case '"': out.push_back('"'); break;
            case '\\': out.push_back('\\'); break;
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            case 'r': out.push_back('\r'); break;
            default: fail(std::string("unsupported escape '\\") + e + "'");
            }
        }
    }

    std::string literal_string() {
        advance();
        const std::size_t start = pos_;
        while (!eof() && peek() != '\'' && peek() != '\n') advance();
        if (eof() || peek() != '\'') fail("unterminated literal string");
        std::string out(s_.substr(start, pos_ - start));
        advance();
        return out;
    }

    TomlValue::Array array() {
        advance();
        TomlValue::Array out;
        for (;;) {
            skip_blank();
            if (eof()) fail("unterminated array");
            if (peek() == ']') {
                advance();
                return out;
            }
            TomlValue v = value();
            if (v.is_array()) fail("nested arrays are not supported", v.line, v.column);
            out.push_back(std::move(v));
            skip_blank();
            if (eof()) fail("unterminated array");
            if (peek() == ',') {
                advance();
            } else if (peek() != ']') {
                fail(std::string("expected ',' or ']' in array, found '") + peek() + "'");
            }
        }
    }

    void number(TomlValue& out) {
        const std::size_t start = pos_;
        while (!eof()) {
            const char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '+' && c != '-' && c != '.' && c != '_') break;
            advance();
        }
        std::string tok;
        for (char c : s_.substr(start, pos_ - start)) {
            if (c != '_') tok.push_back(c);
        }
        if (tok.empty()) fail(std::string("unexpected '") + peek() + "'", out.line, out.column);
        std::string_view body = tok;
        bool neg = false;
        if (body.front() == '+' || body.front() == '-') {
            neg = body.front() == '-';
            body.remove_prefix(1);
        }
        if (body == "inf") {
            out.v = neg ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
            return;
        }
        if (body == "nan") {
            out.v = std::numeric_limits<double>::quiet_NaN();
            return;
        }
        const bool is_float = tok.find_first_of(".eE") != std::string::npos;
        const char* b = tok.data();
        const char* e = tok.data() + tok.size();
        if (*b == '+') ++b;
        if (is_float) {
            double d = 0;
            auto [p, ec] = std::from_chars(b, e, d);
            if (ec != std::errc() || p != e) fail("invalid number '" + tok + "'", out.line, out.column);
            out.v = d;
        } else {
            std::int64_t i = 0;
            auto [p, ec] = std::from_chars(b, e, i);
            if (ec != std::errc() || p != e) fail("invalid value '" + tok + "'", out.line, out.column);
            out.v = i;
        }
    }

    std::string_view s_;
    std::size_t pos_{0};
    std::size_t line_{1};
    std::size_t col_{1};
};

} // namespace

TomlDocument parse_toml(std::string_view text) { return Parser(text).run(); }

} // namespace cancelfield::cli
