#pragma once

#include "cancelfield/error.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cancelfield::cli {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public Error {
public:
    ValidationError(std::string key, const std::string& msg) : Error(key + ": " + msg), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// Subset: [table] headers, bare keys, basic and literal strings, integers,
// floats (incl. inf/nan), booleans, single-level arrays. No inline tables,
// dotted keys or dates.
struct TomlValue {
    using Array = std::vector<TomlValue>;
    std::variant<bool, std::int64_t, double, std::string, Array> v;
    std::size_t line{0};
    std::size_t column{0};

    bool is_bool() const noexcept { return std::holds_alternative<bool>(v); }
    bool is_int() const noexcept { return std::holds_alternative<std::int64_t>(v); }
    bool is_float() const noexcept { return std::holds_alternative<double>(v); }
    bool is_number() const noexcept { return is_int() || is_float(); }
    bool is_string() const noexcept { return std::holds_alternative<std::string>(v); }
    bool is_array() const noexcept { return std::holds_alternative<Array>(v); }
};

struct TomlTable {
    std::map<std::string, TomlValue> entries;
    std::size_t line{0};
};

/// Table name → table; the root table has the empty name.
using TomlDocument = std::map<std::string, TomlTable>;

TomlDocument parse_toml(std::string_view text);

} // namespace cancelfield::cli
