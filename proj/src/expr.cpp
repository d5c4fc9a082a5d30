#include "aleph/expr.hpp"

#include <cctype>

namespace aleph::expr {

namespace {

// Shared cursor for both grammars. Tokens are single characters except
// integers, identifiers and the unicode omega alias.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t pos() const { return pos_; }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool eat_char(char c) {
        if (!peek_char(c)) return false;
        ++pos_;
        return true;
    }

    void expect_char(char c, const std::string& expected) {
        if (!eat_char(c)) throw ParseError(pos(), expected);
    }

    // "w" or the UTF-8 omega (lower or upper) as an alias.
    bool eat_omega() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'w' && !is_ident_char(pos_ + 1)) {
            ++pos_;
            return true;
        }
        for (std::string_view om : {"ω", "Ω"}) {
            if (text_.substr(pos_).starts_with(om)) {
                pos_ += om.size();
                return true;
            }
        }
        return false;
    }

    bool eat_keyword(std::string_view kw) {
        skip_ws();
        if (!text_.substr(pos_).starts_with(kw)) return false;
        if (is_ident_char(pos_ + kw.size())) return false;
        pos_ += kw.size();
        return true;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Int eat_integer(const std::string& expected) {
        if (!peek_digit()) throw ParseError(pos(), expected);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    char current() const { return text_[pos_]; }
    bool has_more() const { return pos_ < text_.size(); }

private:
    bool is_ident_char(std::size_t i) const {
        return i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_');
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

using ordinal::Ordinal;
using ordinal::ord_add;
using ordinal::ord_mul;
using ordinal::ord_pow;

Ordinal parse_ord_expr(Cursor& c);

Ordinal parse_ord_atom(Cursor& c) {
    if (c.eat_omega()) return Ordinal::omega();
    if (c.peek_digit()) return Ordinal::finite(c.eat_integer("integer"));
    if (c.eat_char('(')) {
        Ordinal inner = parse_ord_expr(c);
        c.expect_char(')', "')'");
        return inner;
    }
    throw ParseError(c.pos(), "integer, 'w', or '('");
}

Ordinal parse_ord_pow(Cursor& c) {
    Ordinal acc = parse_ord_atom(c);
    while (c.eat_char('^')) acc = ord_pow(acc, parse_ord_atom(c));
    return acc;
}

Ordinal parse_ord_term(Cursor& c) {
    Ordinal acc = parse_ord_pow(c);
    while (c.eat_char('*')) acc = ord_mul(acc, parse_ord_pow(c));
    return acc;
}

Ordinal parse_ord_expr(Cursor& c) {
    Ordinal acc = parse_ord_term(c);
    while (c.eat_char('+')) acc = ord_add(acc, parse_ord_term(c));
    return acc;
}

}  // namespace

ordinal::Ordinal parse_ordinal(std::string_view text) {
    Cursor c(text);
    Ordinal o = parse_ord_expr(c);
    if (!c.at_end()) throw ParseError(c.pos(), "'+', '*', '^', or end of input");
    return o;
}

namespace {

// Exponents that are not a bare integer or a bare `w` need parentheses,
// since `^` is left-associative.
std::string render_exponent(const Ordinal& e) {
    if (e.is_finite()) return e.finite_value().str();
    if (e == Ordinal::omega()) return "w";
    return "(" + render_ordinal(e) + ")";
}

}  // namespace

std::string render_ordinal(const ordinal::Ordinal& o) {
    if (o.is_zero()) return "0";
    std::string out;
    for (const auto& [exp, coeff] : o.terms()) {
        if (!out.empty()) out += " + ";
        if (exp.is_zero()) {
            out += coeff.str();
            continue;
        }
        std::string base = "w";
        if (!(exp == Ordinal::finite(1))) base += "^" + render_exponent(exp);
        out += base;
        if (coeff != 1) out += "*" + coeff.str();
    }
    return out;
}

namespace {

using cardinal::AssumptionMode;
using cardinal::Cardinal;
using cardinal::card_add;
using cardinal::card_mul;
using cardinal::card_pow2;

Cardinal parse_card_expr(Cursor& c, AssumptionMode m);

Cardinal parse_card_factor(Cursor& c, AssumptionMode m) {
    if (c.eat_keyword("aleph")) {
        c.expect_char('(', "'('");
        Int k = c.eat_integer("index");
        c.expect_char(')', "')'");
        return Cardinal::aleph(k.convert_to<std::uint64_t>());
    }
    if (c.eat_keyword("beth")) {
        c.expect_char('(', "'('");
        Int k = c.eat_integer("index");
        c.expect_char(')', "')'");
        return Cardinal::beth(k.convert_to<std::uint64_t>());
    }
    if (c.peek_digit()) {
        std::size_t before = c.pos();
        Int n = c.eat_integer("integer");
        // `2^` is the powerset operator, not an exponentiation grammar.
        if (n == 2 && c.has_more() && c.peek_char('^')) {
            c.eat_char('^');
            return card_pow2(parse_card_factor(c, m), m);
        }
        if (c.peek_char('^')) throw ParseError(before, "'2^' (only base-2 powers exist)");
        return Cardinal::finite(std::move(n));
    }
    if (c.eat_char('(')) {
        Cardinal inner = parse_card_expr(c, m);
        c.expect_char(')', "')'");
        return inner;
    }
    throw ParseError(c.pos(), "integer, 'aleph(k)', 'beth(k)', '2^', or '('");
}

Cardinal parse_card_term(Cursor& c, AssumptionMode m) {
    Cardinal acc = parse_card_factor(c, m);
    while (c.eat_char('*')) acc = card_mul(acc, parse_card_factor(c, m), m);
    return acc;
}

Cardinal parse_card_expr(Cursor& c, AssumptionMode m) {
    Cardinal acc = parse_card_term(c, m);
    while (c.eat_char('+')) acc = card_add(acc, parse_card_term(c, m), m);
    return acc;
}

}  // namespace

CardResult parse_cardinal(std::string_view text, cardinal::AssumptionMode mode) {
    Cursor c(text);
    CardResult result = [&]() -> CardResult {
        if (c.eat_keyword("cmp")) {
            c.expect_char('(', "'('");
            Cardinal a = parse_card_expr(c, mode);
            c.expect_char(',', "','");
            Cardinal b = parse_card_expr(c, mode);
            c.expect_char(')', "')'");
            return cardinal::card_cmp(a, b, mode);
        }
        return parse_card_expr(c, mode);
    }();
    if (!c.at_end()) throw ParseError(c.pos(), "'+', '*', or end of input");
    return result;
}

std::string render_cardinal(const cardinal::Cardinal& c) { return c.str(); }

std::string render_cardinal(const CardResult& r) {
    if (std::holds_alternative<cardinal::Cardinal>(r))
        return std::get<cardinal::Cardinal>(r).str();
    return cardinal::cmp_str(std::get<cardinal::CardCmp>(r));
}

cardinal::AssumptionMode parse_mode(std::string_view name) {
    if (name == "base") return cardinal::AssumptionMode::base;
    if (name == "ch") return cardinal::AssumptionMode::ch;
    if (name == "gch") return cardinal::AssumptionMode::gch;
    throw ParseError(0, "mode 'base', 'ch', or 'gch'");
}

}  // namespace aleph::expr
