#include "aleph/textio.hpp"

#include <cctype>

#include <json.hpp>

namespace aleph::textio {

namespace {

using setcore::Atom;
using setcore::FiniteMap;
using setcore::FiniteRelation;
using setcore::FiniteSet;

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat(std::string_view s) {
        skip_ws();
        if (text.substr(pos).starts_with(s)) {
            pos += s.size();
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) throw ParseError(pos, what);
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
};

Atom parse_atom(Cursor& c) {
    c.skip_ws();
    if (c.pos >= c.text.size()) throw ParseError(c.pos, "atom");
    char ch = c.text[c.pos];
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = c.pos;
        if (ch == '-') ++c.pos;
        if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
            throw ParseError(start, "integer atom");
        while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
            ++c.pos;
        return Atom(std::int64_t(std::stoll(std::string(c.text.substr(start, c.pos - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = c.pos;
        while (c.pos < c.text.size() &&
               (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '_'))
            ++c.pos;
        return Atom(std::string(c.text.substr(start, c.pos - start)));
    }
    throw ParseError(c.pos, "atom (integer or identifier)");
}

}  // namespace

setcore::FiniteSet parse_set(std::string_view text) {
    Cursor c{text};
    c.expect('{', "'{'");
    std::vector<Atom> atoms;
    if (!c.eat('}')) {
        do {
            atoms.push_back(parse_atom(c));
        } while (c.eat(','));
        c.expect('}', "'}' or ','");
    }
    if (!c.at_end()) throw ParseError(c.pos, "end of input");
    return FiniteSet(std::move(atoms));
}

std::string render_set(const setcore::FiniteSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.elements().size(); ++i) {
        if (i) out += ",";
        out += s.elements()[i].str();
    }
    return out + "}";
}

namespace {

std::vector<std::pair<Atom, Atom>> parse_map_pairs(std::string_view text) {
    Cursor c{text};
    c.expect('{', "'{'");
    std::vector<std::pair<Atom, Atom>> pairs;
    if (!c.eat('}')) {
        do {
            Atom from = parse_atom(c);
            if (!c.eat("->")) throw ParseError(c.pos, "'->'");
            Atom to = parse_atom(c);
            pairs.emplace_back(std::move(from), std::move(to));
        } while (c.eat(','));
        c.expect('}', "'}' or ','");
    }
    if (!c.at_end()) throw ParseError(c.pos, "end of input");
    return pairs;
}

}  // namespace

setcore::FiniteMap parse_map(std::string_view text) {
    auto pairs = parse_map_pairs(text);
    std::vector<Atom> domain, image;
    for (const auto& [a, b] : pairs) {
        domain.push_back(a);
        image.push_back(b);
    }
    return FiniteMap(FiniteSet(std::move(domain)), FiniteSet(std::move(image)), std::move(pairs));
}

setcore::FiniteMap parse_map(std::string_view text, const setcore::FiniteSet& codomain) {
    auto pairs = parse_map_pairs(text);
    std::vector<Atom> domain;
    for (const auto& [a, b] : pairs) domain.push_back(a);
    return FiniteMap(FiniteSet(std::move(domain)), codomain, std::move(pairs));
}

std::string render_map(const setcore::FiniteMap& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.pairs().size(); ++i) {
        if (i) out += ", ";
        out += m.pairs()[i].first.str() + "->" + m.pairs()[i].second.str();
    }
    return out + "}";
}

namespace {

std::vector<std::pair<Atom, Atom>> parse_relation_pairs(std::string_view text) {
    Cursor c{text};
    c.expect('[', "'['");
    std::vector<std::pair<Atom, Atom>> pairs;
    if (!c.eat(']')) {
        do {
            c.expect('(', "'('");
            Atom a = parse_atom(c);
            c.expect(',', "','");
            Atom b = parse_atom(c);
            c.expect(')', "')'");
            pairs.emplace_back(std::move(a), std::move(b));
        } while (c.eat(','));
        c.expect(']', "']' or ','");
    }
    if (!c.at_end()) throw ParseError(c.pos, "end of input");
    return pairs;
}

}  // namespace

setcore::FiniteRelation parse_relation(std::string_view text, const setcore::FiniteSet& carrier) {
    return FiniteRelation(carrier, parse_relation_pairs(text));
}

setcore::FiniteRelation parse_relation(std::string_view text) {
    auto pairs = parse_relation_pairs(text);
    std::vector<Atom> atoms;
    for (const auto& [a, b] : pairs) {
        atoms.push_back(a);
        atoms.push_back(b);
    }
    return FiniteRelation(FiniteSet(std::move(atoms)), std::move(pairs));
}

std::string render_relation(const setcore::FiniteRelation& r) {
    std::string out = "[";
    for (std::size_t i = 0; i < r.pairs().size(); ++i) {
        if (i) out += ",";
        out += "(" + r.pairs()[i].first.str() + "," + r.pairs()[i].second.str() + ")";
    }
    return out + "]";
}

ringpoly::Ring parse_ring(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    std::string_view rest = text.substr(c.pos);
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    rest = trim(rest);
    if (rest == "Z") return ringpoly::Ring::integers();
    if (rest == "Q") return ringpoly::Ring::rationals();
    if (rest.starts_with("Z/"))
        return ringpoly::Ring::mod_n(Int(std::string(trim(rest.substr(2)))));
    if (rest.starts_with("GF(") && rest.ends_with(")"))
        return ringpoly::Ring::prime_field(Int(std::string(trim(rest.substr(3, rest.size() - 4)))));
    throw ParseError(c.pos, "ring spec Z, Q, Z/<n>, or GF(<p>)");
}

namespace {

// coefficient := integer [ '/' integer ]
Rat parse_coefficient(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
        ++c.pos;
    if (c.pos == start) throw ParseError(start, "coefficient");
    Int num(std::string(c.text.substr(start, c.pos - start)));
    if (c.eat('/')) {
        c.skip_ws();
        std::size_t dstart = c.pos;
        while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
            ++c.pos;
        if (c.pos == dstart) throw ParseError(dstart, "denominator");
        Int den(std::string(c.text.substr(dstart, c.pos - dstart)));
        if (den == 0) throw ParseError(dstart, "nonzero denominator");
        return Rat(num, den);
    }
    return Rat(num);
}

}  // namespace

ringpoly::Polynomial parse_polynomial(std::string_view text, const ringpoly::Ring& ring) {
    Cursor c{text};
    std::vector<Rat> coeffs;
    auto put = [&](std::size_t k, const Rat& v) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, Rat(0));
        coeffs[k] += v;
    };
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.pos >= c.text.size()) {
            if (first) throw ParseError(c.pos, "polynomial");
            break;
        }
        Rat sign(1);
        if (c.eat('-'))
            sign = -1;
        else if (!c.eat('+') && !first)
            throw ParseError(c.pos, "'+' or '-'");
        c.skip_ws();

        Rat coef(1);
        bool have_coef = false;
        if (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
            coef = parse_coefficient(c);
            have_coef = true;
        }
        c.eat('*');
        c.skip_ws();
        std::size_t power = 0;
        bool have_x = false;
        if (c.pos < c.text.size() && c.text[c.pos] == 'x') {
            ++c.pos;
            have_x = true;
            power = 1;
            if (c.eat('^')) {
                c.skip_ws();
                std::size_t pstart = c.pos;
                while (c.pos < c.text.size() &&
                       std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
                    ++c.pos;
                if (c.pos == pstart) throw ParseError(pstart, "exponent");
                power = std::stoull(std::string(c.text.substr(pstart, c.pos - pstart)));
            }
        }
        if (!have_coef && !have_x) throw ParseError(c.pos, "coefficient or 'x'");
        put(power, sign * coef);
        first = false;
    }
    return ringpoly::Polynomial(ring, std::move(coeffs));
}

namespace {

std::string render_rat(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// One monomial, magnitude only; sign handled by the caller.
std::string render_term(const Rat& coeff, std::size_t k) {
    Rat mag = coeff < 0 ? Rat(-coeff) : coeff;
    std::string out;
    if (k == 0) return render_rat(mag);
    if (!(mag == 1)) out += render_rat(mag);
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
    return out;
}

std::string render_terms(const std::vector<Rat>& coeffs, bool ascending) {
    std::string out;
    auto emit = [&](std::size_t k) {
        const Rat& c = coeffs[k];
        if (c == 0) return;
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += c < 0 ? " - " : " + ";
        out += render_term(c, k);
    };
    if (ascending)
        for (std::size_t k = 0; k < coeffs.size(); ++k) emit(k);
    else
        for (std::size_t k = coeffs.size(); k-- > 0;) emit(k);
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_polynomial(const ringpoly::Polynomial& p) {
    return render_terms(p.coeffs(), /*ascending=*/false);
}

std::string render_series(const ringpoly::TruncatedSeries& s) {
    std::string body = render_terms(s.coeffs(), /*ascending=*/true);
    return body + " + O(x^" + std::to_string(s.precision()) + ")";
}

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, "valid JSON");
    }
}

Int json_to_int(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw ParseError(0, "integer entry");
}

Rat json_to_rat(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    throw ParseError(0, "integer or p/q entry");
}

template <typename T, typename Conv>
Mat<T> parse_matrix(std::string_view text, Conv conv) {
    json j = parse_json(text);
    if (!j.is_array()) throw ParseError(0, "array of rows");
    std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw ParseError(0, "array of rows");
        cols = j[0].size();
    }
    Mat<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(0, "rectangular matrix");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = conv(j[i][k]);
    }
    return m;
}

json int_to_json(const Int& v) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (v > lo && v < hi) return json(v.convert_to<long long>());
    return json(v.str());
}

}  // namespace

Mat<Int> parse_int_matrix(std::string_view text) { return parse_matrix<Int>(text, json_to_int); }
Mat<Rat> parse_rat_matrix(std::string_view text) { return parse_matrix<Rat>(text, json_to_rat); }

std::vector<Int> parse_int_vector(std::string_view text) {
    json j = parse_json(text);
    if (!j.is_array()) throw ParseError(0, "array");
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(json_to_int(v));
    return out;
}

std::vector<Rat> parse_rat_vector(std::string_view text) {
    json j = parse_json(text);
    if (!j.is_array()) throw ParseError(0, "array");
    std::vector<Rat> out;
    for (const auto& v : j) out.push_back(json_to_rat(v));
    return out;
}

std::string render_int_matrix(const Mat<Int>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string render_rat_matrix(const Mat<Rat>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& v = m(i, j);
            if (denominator(v) == 1)
                row.push_back(int_to_json(numerator(v)));
            else
                row.push_back(render_rat(v));
        }
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string render_int_vector(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr.dump();
}

}  // namespace aleph::textio
