// Command-line front end: expression evaluation for ordinals and cardinals,
// and subcommand dispatch into the library. Exit codes: 0 success, 1 parse
// error, 2 domain error.

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aleph/abgroup.hpp"
#include "aleph/cardinal.hpp"
#include "aleph/error.hpp"
#include "aleph/expr.hpp"
#include "aleph/modlin.hpp"
#include "aleph/ordinal.hpp"
#include "aleph/ringpoly.hpp"
#include "aleph/setcore.hpp"
#include "aleph/textio.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace aleph;

// `@file` arguments are replaced by the file contents.
std::string expand(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw Error("FileError", "cannot read " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

struct Output {
    std::string text;
    json result;
};

// Numbers within the double-exact range stay JSON numbers; anything larger
// becomes a decimal string (same convention as the matrix renderer).
json int_vec_json(const std::vector<Int>& v) {
    return json::parse(textio::render_int_vector(v));
}

json int_json(const Int& v) {
    return int_vec_json({v})[0];
}

json class_json(const abgroup::AbGroupClass& c) {
    return json{{"torsion", int_vec_json(c.torsion)}, {"rank", c.free_rank}};
}

json int_mat_json(const Mat<Int>& m) { return json::parse(textio::render_int_matrix(m)); }
json rat_mat_json(const Mat<Rat>& m) { return json::parse(textio::render_rat_matrix(m)); }

std::string flags_text(std::initializer_list<std::pair<const char*, bool>> flags) {
    std::string out;
    for (const auto& [name, value] : flags) {
        if (!out.empty()) out += " ";
        out += std::string(name) + "=" + (value ? "true" : "false");
    }
    return out;
}

modlin::VectorList vectors_arg(const ringpoly::Ring& field, const std::string& payload) {
    Mat<Rat> m = textio::parse_rat_matrix(expand(payload));
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    std::size_t dim = m.cols();
    return modlin::make_vector_list(field, dim, std::move(rows));
}

json vector_list_json(const modlin::VectorList& v) {
    Mat<Rat> m(v.vectors.size(), v.dim);
    for (std::size_t i = 0; i < v.vectors.size(); ++i)
        for (std::size_t j = 0; j < v.dim; ++j) m(i, j) = v.vectors[i][j];
    return rat_mat_json(m);
}

std::vector<ringpoly::Polynomial> parse_ideal_polys(const std::string& arg,
                                                    const ringpoly::Ring& field) {
    std::vector<ringpoly::Polynomial> gens;
    std::stringstream ss(arg);
    std::string piece;
    while (std::getline(ss, piece, ';'))
        gens.push_back(textio::parse_polynomial(piece, field));
    if (gens.empty()) throw ParseError(0, "at least one generator");
    return gens;
}

std::vector<Int> parse_ideal_ints(const std::string& arg) {
    std::vector<Int> gens;
    std::stringstream ss(arg);
    std::string piece;
    while (std::getline(ss, piece, ';')) gens.push_back(Int(piece));
    if (gens.empty()) throw ParseError(0, "at least one generator");
    return gens;
}

// Injections on the naturals written as `k*n+c` (k >= 1, c >= 0), e.g.
// `2n`, `n+1`, `3*n+2`.
std::function<std::uint64_t(std::uint64_t)> parse_linear_injection(const std::string& text) {
    std::uint64_t k = 1, c = 0;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_uint = [&]() -> std::uint64_t {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError(start, "integer");
        return std::stoull(text.substr(start, i - start));
    };
    skip_ws();
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        k = read_uint();
        skip_ws();
        if (i < text.size() && text[i] == '*') ++i;
        skip_ws();
    }
    if (i >= text.size() || text[i] != 'n') throw ParseError(i, "'n'");
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == '+') {
        ++i;
        skip_ws();
        c = read_uint();
        skip_ws();
    }
    if (i != text.size()) throw ParseError(i, "end of input");
    if (k < 1) throw ParseError(0, "coefficient >= 1 (injectivity)");
    return [k, c](std::uint64_t n) { return k * n + c; };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for finite and transfinite set theory and algebra"};
    app.require_subcommand(1);

    std::string mode_name = "base";
    bool json_out = false;
    app.add_option("--mode", mode_name, "assumption mode: base, ch, or gch")
        ->capture_default_str();
    app.add_flag("--json", json_out, "emit structured JSON output");

    std::optional<Output> output;
    auto run = [&](auto fn) {
        return [&output, fn]() { output = fn(); };
    };

    // ord -------------------------------------------------------------------
    auto* ord_cmd = app.add_subcommand("ord", "evaluate an ordinal expression");
    ord_cmd->fallthrough();
    std::string ord_expr;
    ord_cmd->add_option("expr", ord_expr, "expression over w, integers, + * ^")->required();
    ord_cmd->callback(run([&]() -> Output {
        ordinal::Ordinal o = expr::parse_ordinal(expand(ord_expr));
        std::string text = expr::render_ordinal(o);
        cardinal::Cardinal card = ordinal::ord_cardinality(o);
        return {text, json{{"ordinal", text}, {"cardinality", card.str()}}};
    }));

    // card ------------------------------------------------------------------
    auto* card_cmd = app.add_subcommand("card", "evaluate a cardinal expression");
    card_cmd->fallthrough();
    std::string card_expr;
    card_cmd->add_option("expr", card_expr, "expression over aleph(k), beth(k), integers, + * 2^ cmp")
        ->required();
    card_cmd->callback(run([&]() -> Output {
        auto mode = expr::parse_mode(mode_name);
        expr::CardResult r = expr::parse_cardinal(expand(card_expr), mode);
        std::string text = expr::render_cardinal(r);
        if (std::holds_alternative<cardinal::Cardinal>(r))
            return {text, json{{"cardinal", text}, {"mode", mode_name}}};
        return {text, json{{"comparison", text}, {"mode", mode_name}}};
    }));

    // set -------------------------------------------------------------------
    auto* set_cmd = app.add_subcommand("set", "finite sets, maps, and order relations");
    set_cmd->require_subcommand(1);
    set_cmd->fallthrough();

    std::string arg_map, arg_codomain, arg_a, arg_b, arg_f, arg_g, arg_set, arg_universe,
        arg_subset, arg_rel, arg_carrier, arg_p, arg_q, arg_carrier_p, arg_carrier_q;
    std::size_t powerset_bound = 16;

    auto parse_map_arg = [&](const std::string& text, const std::string& codomain) {
        if (codomain.empty()) return textio::parse_map(expand(text));
        return textio::parse_map(expand(text), textio::parse_set(expand(codomain)));
    };

    auto* set_kind = set_cmd->add_subcommand("kind", "injectivity / surjectivity / bijectivity");
    set_kind->fallthrough();
    set_kind->add_option("--map", arg_map, "map literal {a->b, ...}")->required();
    set_kind->add_option("--codomain", arg_codomain, "codomain set (defaults to the image)");
    set_kind->callback(run([&]() -> Output {
        auto k = setcore::check_function_kind(parse_map_arg(arg_map, arg_codomain));
        return {flags_text({{"injective", k.injective},
                            {"surjective", k.surjective},
                            {"bijective", k.bijective}}),
                json{{"injective", k.injective},
                     {"surjective", k.surjective},
                     {"bijective", k.bijective}}};
    }));

    auto* set_invert = set_cmd->add_subcommand("invert", "invert a bijection");
    set_invert->fallthrough();
    set_invert->add_option("--map", arg_map)->required();
    set_invert->add_option("--codomain", arg_codomain);
    set_invert->callback(run([&]() -> Output {
        auto inv = setcore::invert_bijection(parse_map_arg(arg_map, arg_codomain));
        return {textio::render_map(inv), json{{"map", textio::render_map(inv)}}};
    }));

    auto* set_sb = set_cmd->add_subcommand(
        "sb", "Schroeder-Bernstein bijection from injections f: A->B, g: B->A");
    set_sb->fallthrough();
    set_sb->add_option("--a", arg_a)->required();
    set_sb->add_option("--b", arg_b)->required();
    set_sb->add_option("--f", arg_f)->required();
    set_sb->add_option("--g", arg_g)->required();
    set_sb->callback(run([&]() -> Output {
        auto A = textio::parse_set(expand(arg_a));
        auto B = textio::parse_set(expand(arg_b));
        auto f = textio::parse_map(expand(arg_f), B);
        auto g = textio::parse_map(expand(arg_g), A);
        auto h = setcore::schroeder_bernstein_finite(A, B, f, g);
        return {textio::render_map(h), json{{"map", textio::render_map(h)}}};
    }));

    auto* set_pow = set_cmd->add_subcommand("powerset", "all subsets, by size then lex order");
    set_pow->fallthrough();
    set_pow->add_option("--set", arg_set)->required();
    set_pow->add_option("--bound", powerset_bound, "size bound")->capture_default_str();
    set_pow->callback(run([&]() -> Output {
        auto subsets = setcore::powerset(textio::parse_set(expand(arg_set)), powerset_bound);
        std::string text = "[";
        json arr = json::array();
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            if (i) text += ",";
            text += textio::render_set(subsets[i]);
            arr.push_back(textio::render_set(subsets[i]));
        }
        text += "]";
        return {text, json{{"count", subsets.size()}, {"subsets", arr}}};
    }));

    auto* set_char = set_cmd->add_subcommand("char", "characteristic function of a subset");
    set_char->fallthrough();
    set_char->add_option("--universe", arg_universe)->required();
    set_char->add_option("--subset", arg_subset)->required();
    set_char->callback(run([&]() -> Output {
        auto chi = setcore::characteristic_function(textio::parse_set(expand(arg_universe)),
                                                    textio::parse_set(expand(arg_subset)));
        return {textio::render_map(chi), json{{"map", textio::render_map(chi)}}};
    }));

    auto* set_ord = set_cmd->add_subcommand("order-check", "partial / linear / well flags");
    set_ord->fallthrough();
    set_ord->add_option("--relation", arg_rel, "pair list [(a,b),...]")->required();
    set_ord->add_option("--carrier", arg_carrier, "carrier set (defaults to mentioned atoms)");
    set_ord->callback(run([&]() -> Output {
        auto rel = arg_carrier.empty()
                       ? textio::parse_relation(expand(arg_rel))
                       : textio::parse_relation(expand(arg_rel),
                                                textio::parse_set(expand(arg_carrier)));
        auto k = setcore::check_order(rel);
        return {flags_text({{"partial", k.partial}, {"linear", k.linear}, {"well", k.well}}),
                json{{"partial", k.partial}, {"linear", k.linear}, {"well", k.well}}};
    }));

    auto* set_iso = set_cmd->add_subcommand("order-iso", "unique isomorphism of linear orders");
    set_iso->fallthrough();
    set_iso->add_option("--p", arg_p)->required();
    set_iso->add_option("--q", arg_q)->required();
    set_iso->add_option("--carrier-p", arg_carrier_p);
    set_iso->add_option("--carrier-q", arg_carrier_q);
    set_iso->callback(run([&]() -> Output {
        auto p = arg_carrier_p.empty()
                     ? textio::parse_relation(expand(arg_p))
                     : textio::parse_relation(expand(arg_p),
                                              textio::parse_set(expand(arg_carrier_p)));
        auto q = arg_carrier_q.empty()
                     ? textio::parse_relation(expand(arg_q))
                     : textio::parse_relation(expand(arg_q),
                                              textio::parse_set(expand(arg_carrier_q)));
        auto iso = setcore::order_isomorphism(p, q);
        if (!iso) return {"none", json{{"isomorphism", nullptr}}};
        return {textio::render_map(*iso), json{{"isomorphism", textio::render_map(*iso)}}};
    }));

    auto* set_sbp = set_cmd->add_subcommand(
        "sb-point", "evaluate the Schroeder-Bernstein bijection for injections on the naturals");
    set_sbp->fallthrough();
    std::string sbp_f = "2n", sbp_g = "2n";
    std::uint64_t sbp_x = 0, sbp_fuel = 1024;
    set_sbp->add_option("--x", sbp_x, "point to evaluate")->required();
    set_sbp->add_option("--f", sbp_f, "injection A->B as k*n+c")->capture_default_str();
    set_sbp->add_option("--g", sbp_g, "injection B->A as k*n+c")->capture_default_str();
    set_sbp->add_option("--fuel", sbp_fuel, "search and chain budget")->capture_default_str();
    set_sbp->callback(run([&]() -> Output {
        setcore::CountableInjectionPair p{parse_linear_injection(expand(sbp_f)),
                                          parse_linear_injection(expand(sbp_g)), sbp_fuel};
        bool in_e = setcore::sb_point_in_e(p, sbp_x);
        std::uint64_t h = setcore::sb_point_countable(p, sbp_x);
        return {std::to_string(h), json{{"value", h}, {"in_e", in_e}}};
    }));

    // abgroup ---------------------------------------------------------------
    auto* ab_cmd = app.add_subcommand("abgroup", "finitely generated abelian groups");
    ab_cmd->require_subcommand(1);
    ab_cmd->fallthrough();

    std::string ab_matrix, ab_matrix_b, ab_modulus, ab_element, ab_order;
    bool ab_infinite = false;

    auto* ab_classify = ab_cmd->add_subcommand("classify", "invariant factors + free rank");
    ab_classify->fallthrough();
    ab_classify->add_option("--matrix", ab_matrix, "relation matrix, rows = relations")->required();
    ab_classify->callback(run([&]() -> Output {
        auto c = abgroup::classify(textio::parse_int_matrix(expand(ab_matrix)));
        return {class_json(c).dump(), class_json(c)};
    }));

    auto* ab_iso = ab_cmd->add_subcommand("iso", "isomorphism test for two presentations");
    ab_iso->fallthrough();
    ab_iso->add_option("--a", ab_matrix)->required();
    ab_iso->add_option("--b", ab_matrix_b)->required();
    ab_iso->callback(run([&]() -> Output {
        bool iso = abgroup::are_isomorphic(textio::parse_int_matrix(expand(ab_matrix)),
                                           textio::parse_int_matrix(expand(ab_matrix_b)));
        return {iso ? "true" : "false", json{{"isomorphic", iso}}};
    }));

    auto* ab_smith = ab_cmd->add_subcommand("smith", "Smith normal form U*A*V = D");
    ab_smith->fallthrough();
    ab_smith->add_option("--matrix", ab_matrix)->required();
    ab_smith->callback(run([&]() -> Output {
        auto s = abgroup::smith_normal_form(textio::parse_int_matrix(expand(ab_matrix)));
        json j{{"diag", int_vec_json(s.diag)},
               {"U", int_mat_json(s.U)},
               {"D", int_mat_json(s.D)},
               {"V", int_mat_json(s.V)}};
        return {j.dump(), j};
    }));

    auto* ab_div = ab_cmd->add_subcommand("divisors", "elementary divisors (prime powers)");
    ab_div->fallthrough();
    ab_div->add_option("--matrix", ab_matrix)->required();
    ab_div->callback(run([&]() -> Output {
        auto d = abgroup::elementary_divisors(abgroup::classify(textio::parse_int_matrix(expand(ab_matrix))));
        return {textio::render_int_vector(d), json{{"divisors", int_vec_json(d)}}};
    }));

    auto* ab_cyc = ab_cmd->add_subcommand("cyclic", "classification of a cyclic group");
    ab_cyc->fallthrough();
    ab_cyc->add_flag("--infinite", ab_infinite, "the infinite cyclic group Z");
    ab_cyc->add_option("--order", ab_order, "finite order m >= 1");
    ab_cyc->callback(run([&]() -> Output {
        abgroup::CyclicOrder o;
        o.infinite = ab_infinite;
        if (!ab_infinite) {
            if (ab_order.empty()) throw ParseError(0, "--infinite or --order m");
            o.modulus = Int(expand(ab_order));
        }
        auto c = abgroup::cyclic_classify(o);
        return {class_json(c).dump(), class_json(c)};
    }));

    auto* ab_ord = ab_cmd->add_subcommand("element-order", "order of a in Z/m (m = 0 means Z)");
    ab_ord->fallthrough();
    ab_ord->add_option("--modulus", ab_modulus)->required();
    ab_ord->add_option("--element", ab_element)->required();
    ab_ord->callback(run([&]() -> Output {
        auto r = abgroup::element_order(Int(expand(ab_modulus)), Int(expand(ab_element)));
        if (r.infinite) return {"infinite", json{{"order", "infinite"}}};
        return {r.order.str(), json{{"order", int_json(r.order)}}};
    }));

    auto* ab_cosets = ab_cmd->add_subcommand("cosets", "coset representatives of a finite quotient");
    ab_cosets->fallthrough();
    ab_cosets->add_option("--matrix", ab_matrix)->required();
    ab_cosets->callback(run([&]() -> Output {
        auto reps = abgroup::quotient_enumerate(textio::parse_int_matrix(expand(ab_matrix)));
        json arr = json::array();
        for (const auto& r : reps) arr.push_back(int_vec_json(r));
        json j{{"count", reps.size()}, {"reps", arr}};
        return {j.dump(), j};
    }));

    auto* ab_hom = ab_cmd->add_subcommand("hom", "kernel basis and cokernel of Z^n -> Z^k");
    ab_hom->fallthrough();
    ab_hom->add_option("--matrix", ab_matrix, "k x n matrix of the map")->required();
    ab_hom->callback(run([&]() -> Output {
        auto h = abgroup::hom_kernel_image(textio::parse_int_matrix(expand(ab_matrix)));
        json j{{"kernel", int_mat_json(h.kernel_basis)},
               {"cokernel", class_json(h.cokernel)},
               {"image_rank", h.image_rank},
               {"first_iso_ok", h.first_iso_ok}};
        return {j.dump(), j};
    }));

    // poly ------------------------------------------------------------------
    auto* poly_cmd = app.add_subcommand("poly", "polynomials, series, and residue rings");
    poly_cmd->require_subcommand(1);
    poly_cmd->fallthrough();

    std::string poly_ring = "Z", poly_n;
    std::vector<std::string> poly_args;
    std::size_t series_prec = 8;

    auto add_poly_sub = [&](const char* name, const char* desc, std::size_t arity, auto fn) {
        auto* sub = poly_cmd->add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("--ring", poly_ring, "ring spec: Z, Q, Z/<n>, GF(<p>)");
        sub->add_option("polys", poly_args, "polynomial literals")
            ->required()
            ->expected(static_cast<int>(arity));
        sub->callback(run([&, fn]() -> Output {
            auto ring = textio::parse_ring(expand(poly_ring));
            std::vector<ringpoly::Polynomial> ps;
            for (const auto& a : poly_args) ps.push_back(textio::parse_polynomial(expand(a), ring));
            return fn(ring, ps);
        }));
        return sub;
    };

    add_poly_sub("add", "sum of two polynomials", 2,
                 [](const ringpoly::Ring&, const std::vector<ringpoly::Polynomial>& ps) -> Output {
                     auto r = ringpoly::poly_add(ps[0], ps[1]);
                     return {textio::render_polynomial(r),
                             json{{"poly", textio::render_polynomial(r)}}};
                 });
    add_poly_sub("mul", "convolution product", 2,
                 [](const ringpoly::Ring&, const std::vector<ringpoly::Polynomial>& ps) -> Output {
                     auto r = ringpoly::poly_mul(ps[0], ps[1]);
                     return {textio::render_polynomial(r),
                             json{{"poly", textio::render_polynomial(r)}}};
                 });
    add_poly_sub("deg", "degree with deg(0) = -inf", 1,
                 [](const ringpoly::Ring&, const std::vector<ringpoly::Polynomial>& ps) -> Output {
                     auto d = ringpoly::poly_deg(ps[0]);
                     return {d.str(), json{{"degree", d.str()}}};
                 });

    for (const char* name : {"series-add", "series-mul"}) {
        bool is_mul = std::string(name) == "series-mul";
        auto* sub = poly_cmd->add_subcommand(
            name, is_mul ? "truncated series product" : "truncated series sum");
        sub->fallthrough();
        sub->add_option("--ring", poly_ring);
        sub->add_option("--prec", series_prec, "truncation order N")->capture_default_str();
        sub->add_option("polys", poly_args, "series prefixes as polynomials")
            ->required()
            ->expected(2);
        sub->callback(run([&, is_mul]() -> Output {
            auto ring = textio::parse_ring(expand(poly_ring));
            auto a = ringpoly::TruncatedSeries::from_polynomial(
                textio::parse_polynomial(expand(poly_args[0]), ring), series_prec);
            auto b = ringpoly::TruncatedSeries::from_polynomial(
                textio::parse_polynomial(expand(poly_args[1]), ring), series_prec);
            auto r = is_mul ? ringpoly::series_mul(a, b) : ringpoly::series_add(a, b);
            return {textio::render_series(r), json{{"series", textio::render_series(r)}}};
        }));
    }

    auto* poly_units = poly_cmd->add_subcommand("units", "units and zero divisors of Z/n");
    poly_units->fallthrough();
    poly_units->add_option("--n", poly_n)->required();
    poly_units->callback(run([&]() -> Output {
        auto r = ringpoly::units_and_zero_divisors(Int(expand(poly_n)));
        std::string text = "units=" + textio::render_int_vector(r.units) +
                           " zero_divisors=" + textio::render_int_vector(r.zero_divisors);
        return {text, json{{"units", int_vec_json(r.units)},
                           {"zero_divisors", int_vec_json(r.zero_divisors)}}};
    }));

    auto* poly_field = poly_cmd->add_subcommand("field", "finite-domain-to-field check on Z/n");
    poly_field->fallthrough();
    poly_field->add_option("--n", poly_n)->required();
    poly_field->callback(run([&]() -> Output {
        auto r = ringpoly::finite_domain_to_field(Int(expand(poly_n)));
        if (std::holds_alternative<std::pair<Int, Int>>(r)) {
            auto [a, b] = std::get<std::pair<Int, Int>>(r);
            std::string text = "not_domain witness=(" + a.str() + "," + b.str() + ")";
            return {text, json{{"field", false}, {"witness", int_vec_json({a, b})}}};
        }
        const auto& table = std::get<std::vector<Int>>(r);
        std::vector<Int> inv(table.begin() + 1, table.end());
        return {"field inverses=" + textio::render_int_vector(inv),
                json{{"field", true}, {"inverses", int_vec_json(inv)}}};
    }));

    // ideal -----------------------------------------------------------------
    auto* ideal_cmd = app.add_subcommand("ideal", "principal ideal domain calculations");
    ideal_cmd->require_subcommand(1);
    ideal_cmd->fallthrough();

    std::string ideal_ring = "Z", ideal_element, ideal_n;
    std::vector<std::string> ideal_args;

    auto is_z = [&]() { return expand(ideal_ring) == "Z"; };

    auto* ideal_gen = ideal_cmd->add_subcommand(
        "gen", "principal generator; generators separated by ';'");
    ideal_gen->fallthrough();
    ideal_gen->add_option("--ring", ideal_ring, "Z, or a field for F[x]");
    ideal_gen->add_option("ideal", ideal_args, "one ideal literal")->required()->expected(1);
    ideal_gen->callback(run([&]() -> Output {
        if (is_z()) {
            Int g = ringpoly::ideal_principal_generator(
                ringpoly::IdealZ{parse_ideal_ints(expand(ideal_args[0]))});
            return {g.str(), json{{"generator", int_json(g)}}};
        }
        auto field = textio::parse_ring(expand(ideal_ring));
        auto g = ringpoly::ideal_principal_generator(
            ringpoly::IdealFx{field, parse_ideal_polys(expand(ideal_args[0]), field)});
        return {textio::render_polynomial(g), json{{"generator", textio::render_polynomial(g)}}};
    }));

    auto* ideal_member = ideal_cmd->add_subcommand("member", "ideal membership test");
    ideal_member->fallthrough();
    ideal_member->add_option("--ring", ideal_ring);
    ideal_member->add_option("--element", ideal_element)->required();
    ideal_member->add_option("ideal", ideal_args, "one ideal literal")->required()->expected(1);
    ideal_member->callback(run([&]() -> Output {
        bool member;
        if (is_z()) {
            member = ringpoly::ideal_member(Int(expand(ideal_element)),
                                            ringpoly::IdealZ{parse_ideal_ints(expand(ideal_args[0]))});
        } else {
            auto field = textio::parse_ring(expand(ideal_ring));
            member = ringpoly::ideal_member(
                textio::parse_polynomial(expand(ideal_element), field),
                ringpoly::IdealFx{field, parse_ideal_polys(expand(ideal_args[0]), field)});
        }
        return {member ? "true" : "false", json{{"member", member}}};
    }));

    auto* ideal_acc = ideal_cmd->add_subcommand(
        "acc", "stabilization index of an ascending chain of ideals");
    ideal_acc->fallthrough();
    ideal_acc->add_option("--ring", ideal_ring);
    ideal_acc->add_option("chain", ideal_args, "ideal literals, one per chain entry")
        ->required()
        ->expected(-2);
    ideal_acc->callback(run([&]() -> Output {
        std::size_t n;
        if (is_z()) {
            std::vector<ringpoly::IdealZ> chain;
            for (const auto& a : ideal_args) chain.push_back({parse_ideal_ints(expand(a))});
            n = ringpoly::acc_stabilize(chain);
        } else {
            auto field = textio::parse_ring(expand(ideal_ring));
            std::vector<ringpoly::IdealFx> chain;
            for (const auto& a : ideal_args)
                chain.push_back({field, parse_ideal_polys(expand(a), field)});
            n = ringpoly::acc_stabilize(chain);
        }
        return {std::to_string(n), json{{"stabilization_index", n}}};
    }));

    auto* ideal_max = ideal_cmd->add_subcommand("maximal", "maximal ideals of Z/n");
    ideal_max->fallthrough();
    ideal_max->add_option("--n", ideal_n)->required();
    ideal_max->callback(run([&]() -> Output {
        auto gens = ringpoly::maximal_ideals_modn(Int(expand(ideal_n)));
        std::string text = "[";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) text += ",";
            text += "(" + gens[i].str() + ")";
        }
        text += "]";
        return {text, json{{"maximal_ideals", int_vec_json(gens)}}};
    }));

    // lin -------------------------------------------------------------------
    auto* lin_cmd = app.add_subcommand("lin", "exact linear algebra and Z-modules");
    lin_cmd->require_subcommand(1);
    lin_cmd->fallthrough();

    std::string lin_field = "Q", lin_vectors, lin_target, lin_matrix, lin_ring = "Z", lin_f,
                lin_g, lin_rel;

    auto* lin_indep = lin_cmd->add_subcommand("independent", "linear independence test");
    lin_indep->fallthrough();
    lin_indep->add_option("--field", lin_field, "Q or GF(<p>)");
    lin_indep->add_option("--vectors", lin_vectors, "JSON matrix, rows = vectors")->required();
    lin_indep->callback(run([&]() -> Output {
        bool ind = modlin::is_independent(
            vectors_arg(textio::parse_ring(expand(lin_field)), lin_vectors));
        return {ind ? "true" : "false", json{{"independent", ind}}};
    }));

    auto* lin_member = lin_cmd->add_subcommand("member", "span membership test");
    lin_member->fallthrough();
    lin_member->add_option("--field", lin_field);
    lin_member->add_option("--vectors", lin_vectors)->required();
    lin_member->add_option("--target", lin_target, "JSON vector")->required();
    lin_member->callback(run([&]() -> Output {
        auto field = textio::parse_ring(expand(lin_field));
        bool member = modlin::span_member(vectors_arg(field, lin_vectors),
                                          textio::parse_rat_vector(expand(lin_target)));
        return {member ? "true" : "false", json{{"member", member}}};
    }));

    auto* lin_sieve = lin_cmd->add_subcommand("sieve", "drop vectors inside the earlier span");
    lin_sieve->fallthrough();
    lin_sieve->add_option("--field", lin_field);
    lin_sieve->add_option("--vectors", lin_vectors)->required();
    lin_sieve->callback(run([&]() -> Output {
        auto out = modlin::sieve_basis(vectors_arg(textio::parse_ring(expand(lin_field)), lin_vectors));
        json j = vector_list_json(out);
        return {j.dump(), json{{"basis", j}}};
    }));

    auto* lin_extend = lin_cmd->add_subcommand("extend", "complete an independent list to a basis");
    lin_extend->fallthrough();
    lin_extend->add_option("--field", lin_field);
    lin_extend->add_option("--vectors", lin_vectors)->required();
    lin_extend->callback(run([&]() -> Output {
        auto out = modlin::extend_to_basis(vectors_arg(textio::parse_ring(expand(lin_field)), lin_vectors));
        json j = vector_list_json(out);
        return {j.dump(), json{{"basis", j}}};
    }));

    auto* lin_rn = lin_cmd->add_subcommand("rank-nullity", "kernel and image bases of a map");
    lin_rn->fallthrough();
    lin_rn->add_option("--field", lin_field);
    lin_rn->add_option("--matrix", lin_matrix, "k x n matrix")->required();
    lin_rn->callback(run([&]() -> Output {
        auto field = textio::parse_ring(expand(lin_field));
        modlin::LinearMap T{field, textio::parse_rat_matrix(expand(lin_matrix))};
        auto rn = modlin::rank_nullity(T);
        json j{{"kernel", vector_list_json(rn.kernel_basis)},
               {"image", vector_list_json(rn.image_basis)},
               {"nullity", rn.kernel_basis.vectors.size()},
               {"rank", rn.image_basis.vectors.size()}};
        return {j.dump(), j};
    }));

    auto* lin_stacked = lin_cmd->add_subcommand(
        "stacked", "stacked basis of a subgroup of Z^n given by generator rows");
    lin_stacked->fallthrough();
    lin_stacked->add_option("--matrix", lin_matrix)->required();
    lin_stacked->callback(run([&]() -> Output {
        auto sb = modlin::stacked_basis(textio::parse_int_matrix(expand(lin_matrix)));
        json j{{"basis", int_mat_json(sb.basis)},
               {"multipliers", int_vec_json(sb.multipliers)}};
        return {j.dump(), j};
    }));

    auto* lin_proj = lin_cmd->add_subcommand("projective", "projective = free test over Z");
    lin_proj->fallthrough();
    lin_proj->add_option("--matrix", lin_matrix, "presentation matrix")->required();
    lin_proj->callback(run([&]() -> Output {
        bool p = modlin::is_projective_zmodule(textio::parse_int_matrix(expand(lin_matrix)));
        return {p ? "true" : "false", json{{"projective", p}}};
    }));

    auto* lin_split = lin_cmd->add_subcommand(
        "split", "section and retraction of a short exact sequence");
    lin_split->fallthrough();
    lin_split->add_option("--ring", lin_ring, "Z, Q, or GF(<p>)");
    lin_split->add_option("--f", lin_f, "matrix of f (b x a1)")->required();
    lin_split->add_option("--g", lin_g, "matrix of g (a2 x b)")->required();
    lin_split->add_option("--rel", lin_rel, "relations of the right module (Z only)");
    lin_split->callback(run([&]() -> Output {
        if (expand(lin_ring) == "Z") {
            modlin::SesZ s;
            s.f = textio::parse_int_matrix(expand(lin_f));
            s.g = textio::parse_int_matrix(expand(lin_g));
            s.a2_rel = lin_rel.empty() ? Mat<Int>(0, s.g.rows())
                                       : textio::parse_int_matrix(expand(lin_rel));
            auto r = modlin::split_section(s);
            if (!r.has_section)
                throw Error("NoSection", "the sequence does not split over Z");
            json j{{"section", int_mat_json(r.section)},
                   {"retraction", int_mat_json(r.retraction)},
                   {"decomposition", int_mat_json(r.decomposition)}};
            return {j.dump(), j};
        }
        modlin::SesField s{textio::parse_ring(expand(lin_ring)),
                           textio::parse_rat_matrix(expand(lin_f)),
                           textio::parse_rat_matrix(expand(lin_g))};
        auto r = modlin::split_section(s);
        json j{{"section", rat_mat_json(r.section)},
               {"retraction", rat_mat_json(r.retraction)},
               {"decomposition", rat_mat_json(r.decomposition)}};
        return {j.dump(), j};
    }));

    // dispatch ----------------------------------------------------------------
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        if (json_out)
            std::cout << json{{"ok", false},
                              {"error", json{{"code", "ParseError"}, {"message", e.what()}}}}
                             .dump()
                      << "\n";
        else
            std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        if (json_out)
            std::cout << json{{"ok", false},
                              {"error", json{{"code", e.code()}, {"message", e.what()}}}}
                             .dump()
                      << "\n";
        else
            std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 2;
    }

    if (!output) return 1;
    if (json_out)
        std::cout << json{{"ok", true}, {"result", output->result}}.dump() << "\n";
    else
        std::cout << output->text << "\n";
    return 0;
}
