#include "twistcat/thin.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace twistcat {

namespace {

ValidationReport require_thin(const FiniteCategory& a, const FiniteCategory& b) {
    ValidationReport rep;
    if (!is_thin(a)) rep.add("thin/not-thin", {0}, "category A is not thin");
    if (!is_thin(b)) rep.add("thin/not-thin", {1}, "category B is not thin");
    if (a.objects() != b.objects()) rep.add("thin/objects", {}, "object counts differ");
    return rep;
}

std::set<Triple> nonempty_triples(const FiniteCategory& a, const FiniteCategory& b) {
    std::set<Triple> t;
    const int n = a.objects();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!b.hom_nonempty(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (a.hom_nonempty(y, z)) t.insert({x, y, z});
        }
    return t;
}

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
    if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y)
        return std::numeric_limits<std::uint64_t>::max();
    return x * y;
}

}  // namespace

Checked<std::set<Triple>> compute_T(const FiniteCategory& a, const FiniteCategory& b) {
    ValidationReport rep = require_thin(a, b);
    if (!rep.ok()) return Checked<std::set<Triple>>::reject(rep);
    return Checked<std::set<Triple>>::accept(nonempty_triples(a, b));
}

ValidationReport validate_bracket(const FiniteCategory& a, const FiniteCategory& b,
                                  const BracketFunction& bf) {
    ValidationReport rep = require_thin(a, b);
    if (!rep.ok()) return rep;
    const int n = a.objects();
    std::set<Triple> t = nonempty_triples(a, b);

    for (const Triple& tr : t)
        if (!bf.t.count(tr) || !bf.values.count(tr))
            rep.add("bracket/malformed", {tr[0], tr[1], tr[2]}, "nonempty triple missing from T or values");
    for (const Triple& tr : bf.t)
        if (!t.count(tr))
            rep.add("bracket/malformed", {tr[0], tr[1], tr[2]}, "triple in T has an empty hom product");
    for (const auto& [tr, u] : bf.values) {
        if (!t.count(tr))
            rep.add("bracket/malformed", {tr[0], tr[1], tr[2]}, "value on a triple outside T");
        else if (u < 0 || u >= n)
            rep.add("bracket/malformed", {tr[0], tr[1], tr[2]}, "value out of range");
    }
    if (!rep.ok()) return rep;

    for (const auto& [tr, u] : bf.values)
        if (!a.hom_nonempty(tr[0], u) || !b.hom_nonempty(u, tr[2]))
            rep.add("bracket/i", {tr[0], tr[1], tr[2], u},
                    "hom(x,|xyz|) x hom(|xyz|,z) is empty");

    // (ii): premises (y,z,t) in T and (x,y,|yzt|) in T.
    for (const auto& [tr, inner] : bf.values) {
        auto [y, z, tt] = tr;
        for (int x = 0; x < n; ++x) {
            auto mid = bf.values.find({x, y, inner});
            if (mid == bf.values.end()) continue;
            auto rhs = bf.values.find({x, z, tt});
            if (rhs == bf.values.end() || mid->second != rhs->second)
                rep.add("bracket/ii", {x, y, z, tt},
                        "|" + std::to_string(x) + std::to_string(y) + "|" + std::to_string(y) +
                            std::to_string(z) + std::to_string(tt) + "|| != |" + std::to_string(x) +
                            std::to_string(z) + std::to_string(tt) + "|");
        }
    }
    // (iii): premises (x,y,z) in T and (|xyz|,z,t) in T.
    for (const auto& [tr, inner] : bf.values) {
        auto [x, y, z] = tr;
        for (int tt = 0; tt < n; ++tt) {
            auto mid = bf.values.find({inner, z, tt});
            if (mid == bf.values.end()) continue;
            auto rhs = bf.values.find({x, y, tt});
            if (rhs == bf.values.end() || mid->second != rhs->second)
                rep.add("bracket/iii", {x, y, z, tt},
                        "||" + std::to_string(x) + std::to_string(y) + std::to_string(z) + "|" +
                            std::to_string(z) + std::to_string(tt) + "| != |" + std::to_string(x) +
                            std::to_string(y) + std::to_string(tt) + "|");
        }
    }
    for (const auto& [tr, u] : bf.values) {
        if (tr[0] == tr[1] && u != tr[2])
            rep.add("bracket/iv", {tr[0], tr[1], tr[2]}, "|xxy| != y");
        if (tr[1] == tr[2] && u != tr[0])
            rep.add("bracket/v", {tr[0], tr[1], tr[2]}, "|xyy| != x");
    }
    return rep;
}

std::vector<BracketFunction> enumerate_brackets(const FiniteCategory& a, const FiniteCategory& b,
                                                std::uint64_t limit) {
    ValidationReport rep = require_thin(a, b);
    if (!rep.ok()) throw std::invalid_argument("enumerate_brackets requires thin categories");
    const int n = a.objects();
    std::set<Triple> t = nonempty_triples(a, b);

    BracketFunction cur;
    cur.t = t;
    std::vector<Triple> free_triples;
    std::vector<std::vector<int>> cands;
    std::uint64_t bound = 1;
    bool empty_domain = false;
    for (const Triple& tr : t) {
        if (tr[0] == tr[1]) {
            cur.values[tr] = tr[2];  // (iv)
        } else if (tr[1] == tr[2]) {
            cur.values[tr] = tr[0];  // (v)
        } else {
            std::vector<int> c;
            for (int u = 0; u < n; ++u)
                if (a.hom_nonempty(tr[0], u) && b.hom_nonempty(u, tr[2])) c.push_back(u);
            if (c.empty()) empty_domain = true;
            bound = sat_mul(bound, c.size());
            free_triples.push_back(tr);
            cands.push_back(std::move(c));
        }
    }
    if (bound > limit) throw SearchSpaceError(bound, limit);

    std::vector<BracketFunction> out;
    if (empty_domain) return out;

    // Partial check of (ii)/(iii): only instances whose lookups are all
    // assigned can be decided.
    auto consistent = [&]() {
        for (const auto& [tr, inner] : cur.values) {
            auto [y, z, tt] = tr;
            for (int x = 0; x < n; ++x) {
                auto mid = cur.values.find({x, y, inner});
                if (mid == cur.values.end()) continue;
                auto rhs = cur.values.find({x, z, tt});
                if (rhs != cur.values.end() && mid->second != rhs->second) return false;
            }
        }
        for (const auto& [tr, inner] : cur.values) {
            auto [x, y, z] = tr;
            for (int tt = 0; tt < n; ++tt) {
                auto mid = cur.values.find({inner, z, tt});
                if (mid == cur.values.end()) continue;
                auto rhs = cur.values.find({x, y, tt});
                if (rhs != cur.values.end() && mid->second != rhs->second) return false;
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == free_triples.size()) {
            if (validate_bracket(a, b, cur).ok()) out.push_back(cur);
            return;
        }
        for (int u : cands[i]) {
            cur.values[free_triples[i]] = u;
            if (consistent()) self(self, i + 1);
        }
        cur.values.erase(free_triples[i]);
    };
    if (!consistent()) return out;
    dfs(dfs, 0);
    return out;
}

TwistingSystem bracket_to_twisting(const FiniteCategory& a, const FiniteCategory& b,
                                   const BracketFunction& bf) {
    TwistingSystem r(b.size(), a.size());
    for (const auto& [tr, u] : bf.values) {
        auto [x, y, z] = tr;
        auto fs = b.hom(x, y), gs = a.hom(y, z);
        auto gps = a.hom(x, u), fps = b.hom(u, z);
        if (fs.empty() || gs.empty() || gps.empty() || fps.empty())
            throw std::invalid_argument("bracket_to_twisting requires a valid bracket");
        r.set(fs[0], gs[0], {u, gps[0], fps[0]});
    }
    return r;
}

BracketFunction twisting_to_bracket(const FiniteCategory& a, const FiniteCategory& b,
                                    const TwistingSystem& r) {
    BracketFunction bf;
    bf.t = nonempty_triples(a, b);
    for (const Triple& tr : bf.t) {
        int f = b.hom(tr[0], tr[1])[0];
        int g = a.hom(tr[1], tr[2])[0];
        bf.values[tr] = r.at(f, g).u;
    }
    return bf;
}

Checked<CstResult> construct_CST(const FiniteCategory& a, const FiniteCategory& b,
                                 const BracketFunction& bf) {
    ValidationReport rep = validate_bracket(a, b, bf);
    if (!rep.ok()) return Checked<CstResult>::reject(rep);
    const int n = a.objects();

    CstResult res;
    res.category = FiniteCategory(n);
    // hom(x, y) is a set of objects u; morphism order is (x, y, u)
    // ascending, matching nothing in particular but fixed.
    std::map<Triple, int> id_of;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int u = 0; u < n; ++u)
                if (a.hom_nonempty(x, u) && b.hom_nonempty(u, y))
                    id_of[{x, y, u}] = res.category.add_morphism(y, x);
    for (int x = 0; x < n; ++x) res.category.set_identity(x, id_of.at({x, x, x}));
    for (const auto& [k1, m1] : id_of)
        for (const auto& [k2, m2] : id_of) {
            if (k1[1] != k2[0]) continue;  // src of first must be tgt of second
            int u = k1[2], y = k1[1], v = k2[2];
            int w = bf.values.at({u, y, v});
            res.category.set_compose(m1, m2, id_of.at({k1[0], k2[1], w}));
        }
    ValidationReport cat_rep = validate_category(res.category);
    if (!cat_rep.ok()) {
        ValidationReport out;
        out.add("cst/not-a-category", {}, "C(S,T,|...|) failed category validation");
        out.merge(cat_rep);
        return Checked<CstResult>::reject(out);
    }

    auto prod = twisted_tensor_product(a, b, bracket_to_twisting(a, b, bf));
    if (!prod.ok()) return Checked<CstResult>::reject(prod.report);
    res.product = std::move(*prod);

    res.to_product.object_map.resize(n);
    for (int x = 0; x < n; ++x) res.to_product.object_map[x] = x;
    res.to_product.morphism_map.resize(res.category.size());
    for (const auto& [k, m] : id_of) {
        int g = a.hom(k[0], k[2])[0];
        int f = b.hom(k[2], k[1])[0];
        res.to_product.morphism_map[m] = *res.product.id_of(k[2], g, f);
    }
    return Checked<CstResult>::accept(std::move(res));
}

}  // namespace twistcat
