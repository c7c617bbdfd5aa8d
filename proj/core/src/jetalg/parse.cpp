#include "cancelfield/jetalg/parse.hpp"

#include "cancelfield/error.hpp"

#include <cctype>
#include <limits>

namespace cancelfield::jet {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : src_(s) {}

    DiffExpr parse_all() {
        DiffExpr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

    JetVar parse_single_jet() {
        skip_ws();
        std::string ident = identifier();
        JetVar j = jet_from(ident);
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input after jet");
        return j;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ExprParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    DiffExpr expr() {
        DiffExpr e = term();
        for (;;) {
            if (accept('+')) {
                e += term();
            } else if (accept('-')) {
                e -= term();
            } else {
                return e;
            }
        }
    }

    DiffExpr term() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        DiffExpr t = power();
        while (accept('*')) t *= power();
        return negate ? -t : t;
    }

    DiffExpr power() {
        DiffExpr p = primary();
        if (accept('^')) {
            skip_ws();
            auto n = integer();
            if (n > 64) fail("exponent too large");
            p = p.pow(static_cast<std::uint32_t>(n));
        }
        return p;
    }

    unsigned long long integer() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected integer");
        unsigned long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            auto d = static_cast<unsigned>(src_[pos_] - '0');
            if (v > (std::numeric_limits<unsigned long long>::max() - d) / 10) fail("integer overflow");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) fail("expected identifier");
        return std::string(src_.substr(start, pos_ - start));
    }

    // Errors point at the identifier's first character.
    JetVar jet_from(const std::string& ident) {
        pos_ -= ident.size();
        JetVar j = jet_body(ident);
        pos_ += ident.size();
        return j;
    }

    JetVar jet_body(const std::string& ident) {
        auto us = ident.find('_');
        std::string name = ident.substr(0, us);
        auto base = base_from_name(name);
        if (!base) fail("unknown field '" + name + "'");
        JetVar j{*base, 0, 0, 0};
        if (us == std::string::npos) return j;
        std::string suffix = ident.substr(us + 1);
        if (suffix.empty()) fail("empty derivative suffix on '" + name + "'");
        if (*base == Base::zcoord) fail("the coordinate z carries no derivative suffix");
        for (char c : suffix) {
            switch (c) {
            case 't': ++j.dt; break;
            case 'x': ++j.dx; break;
            case 'z': ++j.dz; break;
            default: fail(std::string("bad derivative letter '") + c + "'");
            }
        }
        return j;
    }

    DiffExpr primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            DiffExpr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num(integer());
            if (accept('/')) {
                auto den = integer();
                if (den == 0) fail("zero denominator");
                num /= Rational(den);
            }
            return DiffExpr(num);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident = identifier();
            if (ident == "mu") return DiffExpr::mu();
            if (ident == "kappa") return DiffExpr::kappa();
            return DiffExpr::jet(jet_from(ident));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view src_;
    std::size_t pos_{0};
};

} // namespace

DiffExpr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

JetVar parse_jet(std::string_view text) { return Parser(text).parse_single_jet(); }

} // namespace cancelfield::jet
