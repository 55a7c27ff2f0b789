#include <algorithm>
#include <map>
#include <random>

#include <doctest.h>

#include "support.hpp"
#include "twistcat/thin.hpp"

using namespace twistcat;
using test::involution_groupoid;

namespace {

FiniteCategory chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) rel.push_back({x, y});
    return *from_preorder(n, rel).value;
}

// The closed form given for self-paired posets: |xyz| = z unless y = z,
// else x.
BracketFunction default_poset_bracket(const FiniteCategory& p) {
    BracketFunction bf;
    bf.t = *compute_T(p, p).value;
    for (const Triple& tr : bf.t) bf.values[tr] = tr[1] != tr[2] ? tr[2] : tr[0];
    return bf;
}

// The poset-form conditions, checked directly on the two relations.
// (i), (iv), (v) go first: once they hold, every lookup made by (ii) and
// (iii) provably lies inside T.
bool poset_conditions_hold(int n, const std::vector<std::vector<bool>>& pre,
                           const std::vector<std::vector<bool>>& leq,
                           const std::map<Triple, int>& val) {
    auto v = [&](int x, int y, int z) { return val.at({x, y, z}); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (!(pre[x][y] && leq[y][z])) continue;
                int u = v(x, y, z);
                if (!(leq[x][u] && pre[u][z])) return false;  // (i)
                if (x == y && u != z) return false;           // (iv)
                if (y == z && u != x) return false;           // (v)
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t) {
                    // (ii): x pre y pre z leq t
                    if (pre[x][y] && pre[y][z] && leq[z][t]) {
                        if (v(x, y, v(y, z, t)) != v(x, z, t)) return false;
                    }
                    // (iii): x pre y leq z leq t
                    if (pre[x][y] && leq[y][z] && leq[z][t]) {
                        if (v(v(x, y, z), z, t) != v(x, y, t)) return false;
                    }
                }
    return true;
}

}  // namespace

TEST_CASE("compute_T on the 2-chain") {
    FiniteCategory c = chain(2);
    auto t = compute_T(c, c);
    REQUIRE(t.ok());
    CHECK(*t == std::set<Triple>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

TEST_CASE("compute_T on the involution groupoid pair is all of S^3") {
    FiniteCategory g = involution_groupoid();
    auto t = compute_T(g, g);
    REQUIRE(t.ok());
    CHECK(t->size() == 8);
}

TEST_CASE("compute_T on discrete categories is the diagonal") {
    FiniteCategory d = test::discrete_category(3);
    auto t = compute_T(d, d);
    REQUIRE(t.ok());
    CHECK(*t == std::set<Triple>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
}

TEST_CASE("compute_T refuses non-thin input") {
    auto z2 = *from_group(test::cyclic_table(2), 0).value;
    CHECK(!compute_T(z2, z2).ok());
}

TEST_CASE("the involution bracket validates") {
    FiniteCategory g = involution_groupoid();
    CHECK(validate_bracket(g, g, test::involution_bracket()).ok());
}

TEST_CASE("the default poset bracket validates on every poset <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& rel : test::all_posets(n)) {
            FiniteCategory p = *from_preorder(n, rel).value;
            CHECK(validate_bracket(p, p, default_poset_bracket(p)).ok());
        }
}

TEST_CASE("|121| = 1 is refuted by condition (ii)") {
    FiniteCategory g = involution_groupoid();
    BracketFunction bf = test::involution_bracket();
    bf.values[{0, 1, 0}] = 0;  // one-based labels: |121| = 1
    auto rep = validate_bracket(g, g, bf);
    REQUIRE(!rep.ok());
    CHECK(rep.has_tag_prefix("bracket/ii"));
}

TEST_CASE("values off T are malformed") {
    FiniteCategory c = chain(2);
    BracketFunction bf = default_poset_bracket(c);
    bf.values[{1, 0, 0}] = 0;  // hom_B(1,0) is empty
    auto rep = validate_bracket(c, c, bf);
    REQUIRE(!rep.ok());
    CHECK(rep.items[0].tag == "bracket/malformed");
}

TEST_CASE("enumerate_brackets finds exactly one for the involution pair") {
    FiniteCategory g = involution_groupoid();
    auto brackets = enumerate_brackets(g, g);
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0] == test::involution_bracket());
}

TEST_CASE("the 2-chain self-pair has exactly one bracket") {
    FiniteCategory c = chain(2);
    auto brackets = enumerate_brackets(c, c);
    CHECK(brackets.size() == 1);
}

TEST_CASE("bracket enumeration honours the limit") {
    FiniteCategory c = chain(3);
    CHECK_THROWS_AS(enumerate_brackets(c, c, 2), SearchSpaceError);
}

TEST_CASE("3-chain brackets match the brute-force oracle") {
    FiniteCategory c = chain(3);
    auto fast = enumerate_brackets(c, c);
    auto slow = test::brute_force_brackets(c, c);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    for (const auto& bf : fast)
        CHECK(validate_twisting_system(c, c, bracket_to_twisting(c, c, bf)).ok());
}

TEST_CASE("bracket and twisting enumerations agree on every poset pair <= 3") {
    for (int n = 1; n <= 3; ++n) {
        auto posets = test::all_posets(n);
        for (const auto& rel_a : posets)
            for (const auto& rel_b : posets) {
                FiniteCategory a = *from_preorder(n, rel_a).value;
                FiniteCategory b = *from_preorder(n, rel_b).value;
                auto brackets = enumerate_brackets(a, b);
                auto systems = enumerate_twisting_systems(a, b);
                CHECK(brackets.size() == systems.size());
                for (const auto& bf : brackets) {
                    TwistingSystem r = bracket_to_twisting(a, b, bf);
                    CHECK(std::find(systems.begin(), systems.end(), r) != systems.end());
                    CHECK(twisting_to_bracket(a, b, r) == bf);
                }
                // Thin factors: no system may fail to be simple.
                for (const auto& r : systems) CHECK(extract_simple(a, b, r).has_value());
            }
    }
}

TEST_CASE("bracket and twisting enumerations agree on sampled poset pairs at n = 4") {
    auto posets = test::all_posets(4);
    std::mt19937 rng(20240818);
    for (int trial = 0; trial < 30; ++trial) {
        const auto& rel_a = posets[rng() % posets.size()];
        const auto& rel_b = posets[rng() % posets.size()];
        FiniteCategory a = *from_preorder(4, rel_a).value;
        FiniteCategory b = *from_preorder(4, rel_b).value;
        auto brackets = enumerate_brackets(a, b);
        auto systems = enumerate_twisting_systems(a, b);
        CHECK(brackets.size() == systems.size());
        for (const auto& bf : brackets) {
            TwistingSystem r = bracket_to_twisting(a, b, bf);
            CHECK(std::find(systems.begin(), systems.end(), r) != systems.end());
        }
    }
}

TEST_CASE("bracket/twisting conversion round-trips on the involution example") {
    FiniteCategory g = involution_groupoid();
    BracketFunction bf = test::involution_bracket();
    CHECK(twisting_to_bracket(g, g, bracket_to_twisting(g, g, bf)) == bf);
}

TEST_CASE("construct_CST on the involution example is the bicrossed groupoid") {
    FiniteCategory g = involution_groupoid();
    auto res = construct_CST(g, g, test::involution_bracket());
    REQUIRE(res.ok());
    CHECK(res->category.size() == 8);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(res->category.hom(x, y).size() == 2);
    CHECK(validate_category(res->category).ok());
    CHECK(is_groupoid(res->category).has_value());
    CHECK(validate_functor(res->category, res->product.category, res->to_product).ok());
}

TEST_CASE("construct_CST of the discrete bracket is discrete") {
    FiniteCategory d = test::discrete_category(2);
    auto brackets = enumerate_brackets(d, d);
    REQUIRE(brackets.size() == 1);
    auto res = construct_CST(d, d, brackets[0]);
    REQUIRE(res.ok());
    CHECK(res->category.size() == 2);
}

TEST_CASE("construct_CST is isomorphic to the product for every 3-chain bracket") {
    FiniteCategory c = chain(3);
    for (const auto& bf : enumerate_brackets(c, c)) {
        auto res = construct_CST(c, c, bf);
        REQUIRE(res.ok());
        REQUIRE(res->category.size() == res->product.category.size());
        CHECK(validate_functor(res->category, res->product.category, res->to_product).ok());
        // Bijective on morphisms, and the inverse is a functor too.
        std::vector<int> inverse(res->category.size(), -1);
        for (int m = 0; m < res->category.size(); ++m) {
            CHECK(inverse[res->to_product.morphism_map[m]] == -1);
            inverse[res->to_product.morphism_map[m]] = m;
        }
        Functor back{res->to_product.object_map, inverse};
        CHECK(validate_functor(res->product.category, res->category, back).ok());
    }
}

TEST_CASE("poset conditions match the thin conditions on all poset pairs <= 3") {
    for (int n = 1; n <= 3; ++n) {
        auto posets = test::all_posets(n);
        for (const auto& rel_b : posets)
            for (const auto& rel_a : posets) {
                FiniteCategory a = *from_preorder(n, rel_a).value;
                FiniteCategory b = *from_preorder(n, rel_b).value;
                std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
                std::vector<std::vector<bool>> pre(n, std::vector<bool>(n, false));
                for (auto [x, y] : rel_a) leq[x][y] = true;
                for (auto [x, y] : rel_b) pre[x][y] = true;
                auto t = compute_T(a, b);
                std::vector<Triple> triples(t->begin(), t->end());
                if (triples.empty()) continue;

                // Exhaust small spaces, sample valid-plus-corrupted
                // otherwise.
                double space = 1;
                for (std::size_t i = 0; i < triples.size(); ++i) space *= n;
                std::vector<std::map<Triple, int>> candidates;
                if (space <= 2048) {
                    std::vector<int> assign(triples.size(), 0);
                    while (true) {
                        std::map<Triple, int> val;
                        for (std::size_t i = 0; i < triples.size(); ++i)
                            val[triples[i]] = assign[i];
                        candidates.push_back(std::move(val));
                        std::size_t i = 0;
                        for (; i < assign.size(); ++i) {
                            if (++assign[i] < n) break;
                            assign[i] = 0;
                        }
                        if (i == assign.size()) break;
                    }
                } else {
                    for (const auto& bf : enumerate_brackets(a, b)) {
                        candidates.push_back(bf.values);
                        for (const Triple& tr : triples)
                            for (int u = 0; u < n; ++u) {
                                auto corrupted = bf.values;
                                corrupted[tr] = u;
                                candidates.push_back(std::move(corrupted));
                            }
                    }
                }
                for (const auto& val : candidates) {
                    BracketFunction bf;
                    bf.t = *t;
                    bf.values = val;
                    CHECK(validate_bracket(a, b, bf).ok() ==
                          poset_conditions_hold(n, pre, leq, val));
                }
            }
    }
}
