#include "aleph/setcore.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace aleph::setcore {

FiniteSet::FiniteSet(std::vector<Atom> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteSet::contains(const Atom& a) const {
    return std::binary_search(elems_.begin(), elems_.end(), a);
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Atom> out = a.elements();
    out.insert(out.end(), b.elements().begin(), b.elements().end());
    return FiniteSet(std::move(out));
}

FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
    std::vector<Atom> out;
    for (const Atom& x : a.elements())
        if (!b.contains(x)) out.push_back(x);
    return FiniteSet(std::move(out));
}

FiniteMap::FiniteMap(FiniteSet domain, FiniteSet codomain,
                     std::vector<std::pair<Atom, Atom>> pairs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    if (pairs_.size() != domain_.size())
        throw Error("MalformedMap", "expected exactly one pair per domain element, got " +
                                        std::to_string(pairs_.size()) + " pairs for " +
                                        std::to_string(domain_.size()) + " elements");
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].first != domain_.elements()[i])
            throw Error("MalformedMap",
                        "domain element " + domain_.elements()[i].str() + " has no unique pair");
        if (!codomain_.contains(pairs_[i].second))
            throw Error("MalformedMap",
                        "image atom " + pairs_[i].second.str() + " is outside the codomain");
    }
}

FiniteMap FiniteMap::identity(const FiniteSet& s) {
    std::vector<std::pair<Atom, Atom>> pairs;
    for (const Atom& a : s.elements()) pairs.emplace_back(a, a);
    return FiniteMap(s, s, std::move(pairs));
}

const Atom& FiniteMap::apply(const Atom& a) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), a,
                               [](const auto& p, const Atom& key) { return p.first < key; });
    if (it == pairs_.end() || it->first != a)
        throw Error("MalformedMap", "atom " + a.str() + " is not in the domain");
    return it->second;
}

FiniteSet FiniteMap::image() const {
    std::vector<Atom> out;
    for (const auto& [a, b] : pairs_) out.push_back(b);
    return FiniteSet(std::move(out));
}

FunctionKind check_function_kind(const FiniteMap& f) {
    FunctionKind k;
    FiniteSet img = f.image();
    k.injective = img.size() == f.domain().size();
    k.surjective = img.size() == f.codomain().size();
    k.bijective = k.injective && k.surjective;
    return k;
}

namespace {

// First collision under f, if any: two domain atoms with equal image.
std::optional<std::pair<Atom, Atom>> find_collision(const FiniteMap& f) {
    std::map<Atom, Atom> seen;  // image -> first preimage
    for (const auto& [a, b] : f.pairs()) {
        auto [it, fresh] = seen.emplace(b, a);
        if (!fresh) return std::make_pair(it->second, a);
    }
    return std::nullopt;
}

}  // namespace

FiniteMap invert_bijection(const FiniteMap& f) {
    if (auto c = find_collision(f))
        throw Error("NotBijective", "collision: " + c->first.str() + " and " + c->second.str() +
                                        " share the image " + f.apply(c->first).str());
    FiniteSet img = f.image();
    if (img.size() != f.codomain().size()) {
        FiniteSet unhit = set_difference(f.codomain(), img);
        throw Error("NotBijective",
                    "codomain atom " + unhit.elements().front().str() + " has no preimage");
    }
    std::vector<std::pair<Atom, Atom>> inv;
    for (const auto& [a, b] : f.pairs()) inv.emplace_back(b, a);
    return FiniteMap(f.codomain(), f.domain(), std::move(inv));
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
    if (!(f.codomain() == g.domain()))
        throw Error("MalformedMap", "composition domains do not chain");
    std::vector<std::pair<Atom, Atom>> pairs;
    for (const auto& [a, b] : f.pairs()) pairs.emplace_back(a, g.apply(b));
    return FiniteMap(f.domain(), g.codomain(), std::move(pairs));
}

FiniteMap schroeder_bernstein_finite(const FiniteSet& A, const FiniteSet& B,
                                     const FiniteMap& f, const FiniteMap& g) {
    if (!(f.domain() == A) || !(f.codomain() == B) || !(g.domain() == B) || !(g.codomain() == A))
        throw Error("MalformedMap", "f must map A to B and g must map B to A");
    if (auto c = find_collision(f))
        throw Error("NotInjective", "f collides on " + c->first.str() + " and " + c->second.str());
    if (auto c = find_collision(g))
        throw Error("NotInjective", "g collides on " + c->first.str() + " and " + c->second.str());

    FiniteMap g_inv = [&] {
        // g is injective onto its image; invert it there.
        std::vector<std::pair<Atom, Atom>> inv;
        for (const auto& [b, a] : g.pairs()) inv.emplace_back(a, b);
        return FiniteMap(g.image(), B, std::move(inv));
    }();

    FiniteSet e_n = set_difference(A, g.image());  // E_0
    FiniteSet e = e_n;
    while (!e_n.empty()) {
        std::vector<Atom> next;
        for (const Atom& x : e_n.elements()) next.push_back(g.apply(f.apply(x)));
        FiniteSet stepped(std::move(next));  // E_{n+1} = g(f(E_n))
        e_n = set_difference(stepped, e);
        e = set_union(e, stepped);
    }

    std::vector<std::pair<Atom, Atom>> pairs;
    for (const Atom& x : A.elements())
        pairs.emplace_back(x, e.contains(x) ? f.apply(x) : g_inv.apply(x));
    return FiniteMap(A, B, std::move(pairs));
}

namespace {

// Bounded search for the unique k <= fuel with phi(k) == y.
std::optional<std::uint64_t> preimage_within(
    const std::function<std::uint64_t(std::uint64_t)>& phi, std::uint64_t y,
    std::uint64_t fuel) {
    for (std::uint64_t k = 0; k <= fuel; ++k)
        if (phi(k) == y) return k;
    return std::nullopt;
}

}  // namespace

bool sb_point_in_e(const CountableInjectionPair& p, std::uint64_t x) {
    if (p.fuel < 1) throw Error("MalformedMap", "fuel must be at least 1");
    // State = (value, side); side false = A-side, true = B-side.
    std::set<std::pair<std::uint64_t, bool>> visited;
    std::uint64_t cur = x;
    for (std::uint64_t step = 0; step <= p.fuel; ++step) {
        if (!visited.insert({cur, false}).second) return false;  // cycle
        auto b = preimage_within(p.g, cur, p.fuel);
        if (!b) return true;  // landed in E_0 = A \ g(B)
        if (!visited.insert({*b, true}).second) return false;
        auto a = preimage_within(p.f, *b, p.fuel);
        if (!a) return false;  // B-side dead end: chain never reaches E_0
        cur = *a;
    }
    throw Error("FuelExhausted",
                "backward chain from " + std::to_string(x) + " undecided within fuel " +
                    std::to_string(p.fuel));
}

std::uint64_t sb_point_countable(const CountableInjectionPair& p, std::uint64_t x) {
    if (sb_point_in_e(p, x)) return p.f(x);
    auto b = preimage_within(p.g, x, p.fuel);
    if (!b)
        throw Error("NoPreimage", "g^-1 branch chosen but " + std::to_string(x) +
                                      " has no g-preimage within fuel " + std::to_string(p.fuel));
    return *b;
}

std::vector<FiniteSet> powerset(const FiniteSet& A, std::size_t max_size) {
    if (A.size() > max_size)
        throw Error("TooLarge", "powerset of " + std::to_string(A.size()) +
                                    " elements exceeds the bound " + std::to_string(max_size));
    const auto& elems = A.elements();
    std::vector<FiniteSet> subsets;
    subsets.reserve(std::size_t(1) << A.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << A.size()); ++mask) {
        std::vector<Atom> sub;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) sub.push_back(elems[i]);
        subsets.emplace_back(std::move(sub));
    }
    // Canonical enumeration order: by size, then lexicographically on elements.
    std::stable_sort(subsets.begin(), subsets.end(), [](const FiniteSet& a, const FiniteSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return subsets;
}

FiniteMap characteristic_function(const FiniteSet& X, const FiniteSet& A) {
    if (!A.subset_of(X)) throw Error("NotSubset", "A must be a subset of X");
    FiniteSet bits({Atom(std::int64_t(0)), Atom(std::int64_t(1))});
    std::vector<std::pair<Atom, Atom>> pairs;
    for (const Atom& x : X.elements())
        pairs.emplace_back(x, Atom(std::int64_t(A.contains(x) ? 1 : 0)));
    return FiniteMap(X, bits, std::move(pairs));
}

FiniteRelation::FiniteRelation(FiniteSet carrier, std::vector<std::pair<Atom, Atom>> pairs)
    : carrier_(std::move(carrier)), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (const auto& [a, b] : pairs_)
        if (!carrier_.contains(a) || !carrier_.contains(b))
            throw Error("MalformedRelation",
                        "pair (" + a.str() + "," + b.str() + ") leaves the carrier");
}

FiniteRelation FiniteRelation::total_order(const FiniteSet& carrier) {
    std::vector<std::pair<Atom, Atom>> pairs;
    for (const Atom& a : carrier.elements())
        for (const Atom& b : carrier.elements())
            if (a <= b) pairs.emplace_back(a, b);
    return FiniteRelation(carrier, std::move(pairs));
}

bool FiniteRelation::related(const Atom& a, const Atom& b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(a, b));
}

OrderKind check_order(const FiniteRelation& r) {
    const auto& xs = r.carrier().elements();
    const std::size_t n = xs.size();

    bool reflexive = true, transitive = true, antisymmetric = true, total = true;
    for (const Atom& a : xs) reflexive &= r.related(a, a);
    for (std::size_t i = 0; i < n && (transitive || antisymmetric || total); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && r.related(xs[i], xs[j]) && r.related(xs[j], xs[i])) antisymmetric = false;
            if (!r.related(xs[i], xs[j]) && !r.related(xs[j], xs[i])) total = false;
            for (std::size_t k = 0; k < n; ++k)
                if (r.related(xs[i], xs[j]) && r.related(xs[j], xs[k]) && !r.related(xs[i], xs[k]))
                    transitive = false;
        }

    OrderKind kind;
    kind.partial = reflexive && transitive && antisymmetric;
    kind.linear = kind.partial && total;
    if (!kind.partial) {
        kind.well = false;
    } else if (n <= 12) {
        // Explicit definition: every nonempty subset has a least element.
        // (An incomparable pair is a two-element subset without one, so this
        // agrees with the linearity shortcut below.)
        kind.well = true;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n) && kind.well; ++mask) {
            bool found_least = false;
            for (std::size_t i = 0; i < n && !found_least; ++i) {
                if (!(mask & (std::uint64_t(1) << i))) continue;
                bool least = true;
                for (std::size_t j = 0; j < n; ++j)
                    if ((mask & (std::uint64_t(1) << j)) && !r.related(xs[i], xs[j])) least = false;
                found_least = least;
            }
            kind.well = found_least;
        }
    } else {
        kind.well = kind.linear;  // finite linear orders are well-ordered
    }
    return kind;
}

namespace {

// Carrier sorted by the relation; requires linearity (checked by caller).
std::vector<Atom> sort_by_relation(const FiniteRelation& r) {
    std::vector<Atom> xs = r.carrier().elements();
    std::sort(xs.begin(), xs.end(),
              [&](const Atom& a, const Atom& b) { return !(a == b) && r.related(a, b); });
    return xs;
}

}  // namespace

std::optional<FiniteMap> order_isomorphism(const FiniteRelation& p, const FiniteRelation& q) {
    if (!check_order(p).linear) throw Error("NotLinear", "first relation is not a linear order");
    if (!check_order(q).linear) throw Error("NotLinear", "second relation is not a linear order");
    if (p.carrier().size() != q.carrier().size()) return std::nullopt;
    std::vector<Atom> ps = sort_by_relation(p);
    std::vector<Atom> qs = sort_by_relation(q);
    std::vector<std::pair<Atom, Atom>> pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) pairs.emplace_back(ps[i], qs[i]);
    return FiniteMap(p.carrier(), q.carrier(), std::move(pairs));
}

}  // namespace aleph::setcore
