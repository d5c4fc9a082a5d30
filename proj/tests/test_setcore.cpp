#include <doctest.h>

#include <set>

#include "aleph/setcore.hpp"
#include "gen.hpp"

using namespace aleph;
using namespace aleph::setcore;

namespace {

FiniteSet ints(std::initializer_list<std::int64_t> xs) {
    std::vector<Atom> atoms;
    for (auto x : xs) atoms.emplace_back(x);
    return FiniteSet(std::move(atoms));
}

FiniteMap map_of(const FiniteSet& dom, const FiniteSet& cod,
                 std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs) {
    std::vector<std::pair<Atom, Atom>> ps;
    for (auto [a, b] : pairs) ps.emplace_back(Atom(a), Atom(b));
    return FiniteMap(dom, cod, std::move(ps));
}

}  // namespace

TEST_CASE("function kind flags") {
    FiniteSet s3 = ints({0, 1, 2});
    auto k = check_function_kind(FiniteMap::identity(s3));
    CHECK(k.injective);
    CHECK(k.surjective);
    CHECK(k.bijective);

    auto incl = map_of(ints({0, 1}), s3, {{0, 0}, {1, 1}});
    k = check_function_kind(incl);
    CHECK(k.injective);
    CHECK_FALSE(k.surjective);

    auto folded = map_of(s3, ints({0, 1}), {{0, 0}, {1, 0}, {2, 1}});
    k = check_function_kind(folded);
    CHECK_FALSE(k.injective);
    CHECK(k.surjective);
    CHECK_FALSE(k.bijective);
}

TEST_CASE("map invariants are enforced") {
    FiniteSet s = ints({0, 1});
    CHECK_THROWS_WITH_AS(FiniteMap(s, s, {{Atom(std::int64_t(0)), Atom(std::int64_t(1))}}),
                         doctest::Contains("MalformedMap"), Error);
    CHECK_THROWS_AS(map_of(s, s, {{0, 0}, {1, 7}}), Error);
}

TEST_CASE("bijection inversion") {
    FiniteSet s3 = ints({0, 1, 2});
    CHECK(invert_bijection(FiniteMap::identity(s3)) == FiniteMap::identity(s3));

    auto cyc = map_of(s3, s3, {{0, 1}, {1, 2}, {2, 0}});
    auto inv = invert_bijection(cyc);
    CHECK(inv == map_of(s3, s3, {{1, 0}, {2, 1}, {0, 2}}));
    CHECK(compose(inv, cyc) == FiniteMap::identity(s3));
    CHECK(compose(cyc, inv) == FiniteMap::identity(s3));

    auto folded = map_of(ints({0, 1}), ints({0}), {{0, 0}, {1, 0}});
    CHECK_THROWS_WITH_AS(invert_bijection(folded), doctest::Contains("collision: 0 and 1"), Error);
}

TEST_CASE("double inversion is the identity on random bijections") {
    gen::Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        auto s = gen::int_range_set(0, gen::pick(rng, 1, 8));
        auto f = gen::random_injection(rng, s, s);
        CHECK(invert_bijection(invert_bijection(f)) == f);
        CHECK(compose(invert_bijection(f), f) == FiniteMap::identity(s));
    }
}

TEST_CASE("Schroeder-Bernstein, finite construction") {
    FiniteSet s2 = ints({0, 1});
    auto id = FiniteMap::identity(s2);
    CHECK(schroeder_bernstein_finite(s2, s2, id, id) == id);

    auto swap = map_of(s2, s2, {{0, 1}, {1, 0}});
    // g surjective forces E = {}; h = g^-1 = swap.
    CHECK(schroeder_bernstein_finite(s2, s2, id, swap) == swap);

    auto folded = map_of(s2, s2, {{0, 0}, {1, 0}});
    CHECK_THROWS_WITH_AS(schroeder_bernstein_finite(s2, s2, folded, id),
                         doctest::Contains("NotInjective"), Error);
}

TEST_CASE("finite SB output is bijective and matches the E-partition") {
    gen::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        long long n = gen::pick(rng, 1, 7);
        auto A = gen::int_range_set(0, n);
        auto B = gen::int_range_set(100, 100 + n);
        auto f = gen::random_injection(rng, A, B);
        auto g = gen::random_injection(rng, B, A);
        auto h = schroeder_bernstein_finite(A, B, f, g);
        CHECK(check_function_kind(h).bijective);

        // Recompute E by the forward iteration and compare pointwise.
        FiniteSet e = set_difference(A, g.image());
        FiniteSet todo = e;
        while (!todo.empty()) {
            std::vector<Atom> next;
            for (const Atom& x : todo.elements()) next.push_back(g.apply(f.apply(x)));
            FiniteSet stepped(std::move(next));
            todo = set_difference(stepped, e);
            e = set_union(e, stepped);
        }
        auto g_inv = invert_bijection(FiniteMap(B, g.image(), g.pairs()));
        for (const Atom& x : A.elements())
            CHECK(h.apply(x) == (e.contains(x) ? f.apply(x) : g_inv.apply(x)));
    }
}

TEST_CASE("countable SB point evaluation, doubling maps") {
    CountableInjectionPair p{[](std::uint64_t n) { return 2 * n; },
                             [](std::uint64_t n) { return 2 * n; }, 1200};
    CHECK(sb_point_countable(p, 3) == 6);  // odd: in E_0
    CHECK(sb_point_countable(p, 2) == 1);  // B-side stop: g^-1 branch
    CHECK(sb_point_countable(p, 0) == 0);  // cycle at 0: g^-1 branch

    // Forward enumeration of E = union E_n inside the window agrees with the
    // backward-chase classification.
    const std::uint64_t window = 512;
    std::set<std::uint64_t> e;
    std::set<std::uint64_t> layer;
    for (std::uint64_t x = 0; x <= window; ++x)
        if (x % 2 == 1) layer.insert(x);  // E_0 = naturals minus image of g
    while (!layer.empty()) {
        e.insert(layer.begin(), layer.end());
        std::set<std::uint64_t> next;
        for (std::uint64_t x : layer) {
            std::uint64_t y = p.g(p.f(x));
            if (y <= window && !e.contains(y)) next.insert(y);
        }
        layer = std::move(next);
    }
    std::set<std::uint64_t> images;
    for (std::uint64_t x = 0; x <= window; ++x) {
        CHECK(sb_point_in_e(p, x) == e.contains(x));
        CHECK(images.insert(sb_point_countable(p, x)).second);  // h injective here
    }
}

TEST_CASE("countable SB fuel semantics") {
    // g cycles a 64-element window, f is the identity: the backward chain
    // from 0 walks 63, 62, ... without repeating a state. With fuel 63 the
    // preimage searches all succeed but the step budget runs out while states
    // are still new, so the chain is undecided.
    auto cycling_g = [](std::uint64_t n) { return n < 64 ? (n + 1) % 64 : n + 64; };
    auto ident = [](std::uint64_t n) { return n; };
    CountableInjectionPair undecided{ident, cycling_g, 63};
    CHECK_THROWS_WITH_AS(sb_point_countable(undecided, 0), doctest::Contains("FuelExhausted"),
                         Error);
    // One more step of budget reaches the revisit and settles on the
    // g-inverse branch.
    CountableInjectionPair decided{ident, cycling_g, 64};
    CHECK_FALSE(sb_point_in_e(decided, 0));
    CHECK(sb_point_countable(decided, 0) == 63);
}

TEST_CASE("powerset enumeration") {
    CHECK(powerset(FiniteSet()).size() == 1);
    CHECK(powerset(ints({1, 2, 3})).size() == 8);

    auto subsets = powerset(ints({1, 2}));
    REQUIRE(subsets.size() == 4);
    CHECK(subsets[0] == FiniteSet());
    CHECK(subsets[1] == ints({1}));
    CHECK(subsets[2] == ints({2}));
    CHECK(subsets[3] == ints({1, 2}));

    CHECK_THROWS_WITH_AS(powerset(gen::int_range_set(0, 17)), doctest::Contains("TooLarge"),
                         Error);

    for (long long n = 0; n <= 10; ++n)
        CHECK(powerset(gen::int_range_set(0, n)).size() == (std::size_t(1) << n));
}

TEST_CASE("no map from A onto its powerset (Cantor, exhaustively)") {
    for (long long n = 0; n <= 3; ++n) {
        auto a = gen::int_range_set(0, n);
        auto subsets = powerset(a);
        const std::size_t p = subsets.size();
        std::size_t total = 1;
        for (long long i = 0; i < n; ++i) total *= p;
        // Every assignment A -> P(A), checked for surjectivity.
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            std::set<std::size_t> hit;
            for (long long i = 0; i < n; ++i) {
                hit.insert(c % p);
                c /= p;
            }
            CHECK(hit.size() < p);
        }
    }
}

TEST_CASE("characteristic functions") {
    auto x = ints({1, 2, 3});
    auto chi = characteristic_function(x, ints({2}));
    CHECK(chi.apply(Atom(std::int64_t(1))) == Atom(std::int64_t(0)));
    CHECK(chi.apply(Atom(std::int64_t(2))) == Atom(std::int64_t(1)));
    CHECK(chi.apply(Atom(std::int64_t(3))) == Atom(std::int64_t(0)));

    auto all = characteristic_function(x, x);
    for (const auto& [a, b] : all.pairs()) CHECK(b == Atom(std::int64_t(1)));
    auto none = characteristic_function(x, FiniteSet());
    for (const auto& [a, b] : none.pairs()) CHECK(b == Atom(std::int64_t(0)));

    CHECK_THROWS_WITH_AS(characteristic_function(ints({1}), ints({2})),
                         doctest::Contains("NotSubset"), Error);
}

namespace {

FiniteRelation inclusion_order(const std::vector<std::set<int>>& sets,
                               const std::vector<Atom>& names) {
    std::vector<std::pair<Atom, Atom>> pairs;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
                pairs.emplace_back(names[i], names[j]);
    return FiniteRelation(FiniteSet(names), std::move(pairs));
}

}  // namespace

TEST_CASE("order classification") {
    std::vector<Atom> chain_names{Atom("e"), Atom("a"), Atom("ab")};
    auto chain = inclusion_order({{}, {1}, {1, 2}}, chain_names);
    auto k = check_order(chain);
    CHECK(k.partial);
    CHECK(k.linear);
    CHECK(k.well);

    // All four subsets of {1,2}: {1} and {2} are incomparable.
    std::vector<Atom> names{Atom("e"), Atom("a"), Atom("b"), Atom("ab")};
    auto poset = inclusion_order({{}, {1}, {2}, {1, 2}}, names);
    k = check_order(poset);
    CHECK(k.partial);
    CHECK_FALSE(k.linear);
    CHECK_FALSE(k.well);

    auto empty_rel = FiniteRelation(ints({1}), {});
    CHECK_FALSE(check_order(empty_rel).partial);

    CHECK_THROWS_WITH_AS(FiniteRelation(ints({1}), {{Atom(std::int64_t(1)), Atom(std::int64_t(2))}}),
                         doctest::Contains("MalformedRelation"), Error);
}

TEST_CASE("random total orders are well-orders; dropping reflexivity breaks partial") {
    gen::Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        long long n = gen::pick(rng, 1, 9);
        std::vector<Atom> atoms;
        for (long long i = 0; i < n; ++i) atoms.emplace_back(i);
        std::shuffle(atoms.begin(), atoms.end(), rng);
        // atoms[i] below atoms[j] iff i <= j
        std::vector<std::pair<Atom, Atom>> pairs;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i; j < atoms.size(); ++j) pairs.emplace_back(atoms[i], atoms[j]);
        auto rel = FiniteRelation(FiniteSet(atoms), pairs);
        auto k = check_order(rel);
        CHECK(k.linear);
        CHECK(k.well);

        std::vector<std::pair<Atom, Atom>> broken;
        for (const auto& pr : pairs)
            if (!(pr.first == atoms[0] && pr.second == atoms[0])) broken.push_back(pr);
        CHECK_FALSE(check_order(FiniteRelation(FiniteSet(atoms), broken)).partial);
    }
}

TEST_CASE("well-order flag uses the linearity shortcut on large carriers") {
    auto big = FiniteRelation::total_order(gen::int_range_set(0, 14));
    auto k = check_order(big);
    CHECK(k.linear);
    CHECK(k.well);
}

TEST_CASE("exhaustive well-order check agrees with the linearity shortcut") {
    // For finite partial orders, well-ordered and linear coincide; the
    // subset-exhaustive route (carrier <= 12) must reproduce that.
    gen::Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        long long n = gen::pick(rng, 1, 6);
        std::vector<Atom> atoms;
        for (long long i = 0; i < n; ++i) atoms.emplace_back(i);
        // Random reflexive-transitive closure of random pairs, antisymmetric
        // by construction (only i <= j pairs, then closure keeps i <= j).
        std::vector<std::pair<Atom, Atom>> pairs;
        for (long long i = 0; i < n; ++i)
            for (long long j = i; j < n; ++j)
                if (i == j || gen::pick(rng, 0, 2) == 0)
                    pairs.emplace_back(atoms[static_cast<std::size_t>(i)],
                                       atoms[static_cast<std::size_t>(j)]);
        // close under transitivity
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t x = 0; x < pairs.size(); ++x)
                for (std::size_t y = 0; y < pairs.size(); ++y)
                    if (pairs[x].second == pairs[y].first) {
                        std::pair<Atom, Atom> p{pairs[x].first, pairs[y].second};
                        if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) {
                            pairs.push_back(p);
                            grew = true;
                        }
                    }
        }
        auto k = check_order(FiniteRelation(FiniteSet(atoms), pairs));
        CHECK(k.partial);
        CHECK(k.well == k.linear);
    }
}

TEST_CASE("unique order isomorphism between finite linear orders") {
    auto nums = FiniteRelation::total_order(ints({0, 1, 2}));
    std::vector<Atom> syms{Atom("x"), Atom("y"), Atom("z")};
    auto letters = FiniteRelation::total_order(FiniteSet(syms));

    auto iso = order_isomorphism(nums, letters);
    REQUIRE(iso.has_value());
    CHECK(iso->apply(Atom(std::int64_t(0))) == Atom("x"));
    CHECK(iso->apply(Atom(std::int64_t(1))) == Atom("y"));
    CHECK(iso->apply(Atom(std::int64_t(2))) == Atom("z"));

    auto self = order_isomorphism(nums, nums);
    REQUIRE(self.has_value());
    CHECK(*self == FiniteMap::identity(ints({0, 1, 2})));

    CHECK_FALSE(order_isomorphism(nums, FiniteRelation::total_order(ints({0, 1}))).has_value());

    auto not_linear = FiniteRelation(ints({1, 2}), {{Atom(std::int64_t(1)), Atom(std::int64_t(1))},
                                                    {Atom(std::int64_t(2)), Atom(std::int64_t(2))}});
    CHECK_THROWS_WITH_AS(order_isomorphism(not_linear, nums), doctest::Contains("NotLinear"),
                         Error);
}

TEST_CASE("order isomorphism pairs ranked positions regardless of labels") {
    gen::Rng rng(31);
    auto scrambled_order = [&](long long n, long long base) {
        std::vector<Atom> atoms;
        for (long long i = 0; i < n; ++i) atoms.emplace_back(base + i);
        std::shuffle(atoms.begin(), atoms.end(), rng);
        std::vector<std::pair<Atom, Atom>> pairs;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i; j < atoms.size(); ++j) pairs.emplace_back(atoms[i], atoms[j]);
        return std::make_pair(atoms, FiniteRelation(FiniteSet(atoms), pairs));
    };
    for (int t = 0; t < 20; ++t) {
        long long n = gen::pick(rng, 1, 7);
        // Relation order deliberately disagrees with the label order; the
        // pairing must still match the i-th least to the i-th least.
        auto [pa, p] = scrambled_order(n, 0);
        auto [qa, q] = scrambled_order(n, 1000);
        auto iso = order_isomorphism(p, q);
        REQUIRE(iso.has_value());
        for (std::size_t i = 0; i < pa.size(); ++i) CHECK(iso->apply(pa[i]) == qa[i]);
    }
}
