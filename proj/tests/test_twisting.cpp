#include <doctest.h>

#include "support.hpp"
#include "twistcat/thin.hpp"
#include "twistcat/twisting.hpp"

using namespace twistcat;
using test::discrete_category;
using test::involution_groupoid;

namespace {

TwistingSystem involution_twisting() {
    FiniteCategory g = involution_groupoid();
    return bracket_to_twisting(g, g, test::involution_bracket());
}

}  // namespace

TEST_CASE("the involution twisting system validates") {
    FiniteCategory g = involution_groupoid();
    CHECK(validate_twisting_system(g, g, involution_twisting()).ok());
}

TEST_CASE("the discrete forced system validates") {
    FiniteCategory d = discrete_category(3);
    TwistingSystem r(3, 3);
    for (int x = 0; x < 3; ++x) r.set(x, x, {x, x, x});
    CHECK(validate_twisting_system(d, d, r).ok());
}

TEST_CASE("a corrupted entry is caught by the diagram checks") {
    FiniteCategory g = involution_groupoid();
    TwistingSystem r = involution_twisting();
    // Send R(u^-1, u) into the other summand: (Id_1, Id_1) at u = 1 is
    // well typed but breaks the compatibility with composition.
    r.set(3, 2, {1, 1, 1});
    auto rep = validate_twisting_system(g, g, r);
    REQUIRE(!rep.ok());
    bool d1_or_d2 = rep.has_tag_prefix("twist/D1") || rep.has_tag_prefix("twist/D2");
    CHECK(d1_or_d2);
}

TEST_CASE("typing errors are reported before diagram checks") {
    FiniteCategory g = involution_groupoid();
    TwistingSystem r = involution_twisting();
    r.set(0, 0, {0, 1, 0});  // A-component Id_1 cannot sit in hom(0, 0)
    auto rep = validate_twisting_system(g, g, r);
    REQUIRE(!rep.ok());
    CHECK(rep.items[0].tag.starts_with("twist/typing"));
}

TEST_CASE("extract_simple on the involution example recovers the bracket") {
    FiniteCategory g = involution_groupoid();
    auto st = extract_simple(g, g, involution_twisting());
    REQUIRE(st.has_value());
    CHECK(st->bracket.at({0, 1, 0}) == 1);  // |121| = 2
    CHECK(st->bracket.at({1, 0, 1}) == 0);  // |212| = 1
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            CHECK(st->bracket.at({x, x, y}) == y);
            CHECK(st->bracket.at({x, y, y}) == x);
        }
}

TEST_CASE("extract_simple on discrete categories gives the diagonal bracket") {
    FiniteCategory d = discrete_category(2);
    TwistingSystem r(2, 2);
    for (int x = 0; x < 2; ++x) r.set(x, x, {x, x, x});
    auto st = extract_simple(d, d, r);
    REQUIRE(st.has_value());
    CHECK(st->bracket.size() == 2);
    CHECK(st->bracket.at({0, 0, 0}) == 0);
    CHECK(st->bracket.at({1, 1, 1}) == 1);
}

TEST_CASE("non-simple systems exist and extract_simple refuses them") {
    auto [a, b] = test::parallel_pair_categories();
    REQUIRE(validate_category(a).ok());
    REQUIRE(validate_category(b).ok());
    auto systems = enumerate_twisting_systems(a, b);
    // Two free pairs (f,g) and (f,g~), three candidates each, and no
    // diagram instance constrains them.
    REQUIRE(systems.size() == 9);
    int simple = 0, non_simple = 0;
    for (const auto& r : systems) {
        CHECK(validate_twisting_system(a, b, r).ok());
        if (extract_simple(a, b, r))
            ++simple;
        else
            ++non_simple;
    }
    // Within the block (0,1,2) the two entries pick independently among
    // summand 0 (two ways) and summand 2 (one way).
    CHECK(simple == 5);
    CHECK(non_simple == 4);
}

TEST_CASE("one-object systems are always simple") {
    auto z2 = *from_group(test::cyclic_table(2), 0).value;
    auto z3 = *from_group(test::cyclic_table(3), 0).value;
    auto systems = enumerate_twisting_systems(z3, z2);
    REQUIRE(!systems.empty());
    for (const auto& s : systems) CHECK(extract_simple(z3, z2, s).has_value());
}

TEST_CASE("matched pair conversions are mutually inverse") {
    FiniteCategory g = involution_groupoid();
    auto st = *extract_simple(g, g, involution_twisting());
    MatchedPair mp = twisting_to_matched_pair(st);
    SimpleTwisting back = matched_pair_to_twisting(mp);
    CHECK(back == st);
    CHECK(twisting_to_matched_pair(back) == mp);
    CHECK(simple_to_twisting(g, g, back) == involution_twisting());
}

TEST_CASE("round trip is the identity on all enumerated systems of small categories") {
    std::vector<std::pair<FiniteCategory, FiniteCategory>> pairs;
    FiniteCategory g = involution_groupoid();
    pairs.push_back({g, g});
    auto chain = *from_preorder(2, {{0, 0}, {1, 1}, {0, 1}}).value;
    pairs.push_back({chain, chain});
    auto z2 = *from_group(test::cyclic_table(2), 0).value;
    auto z3 = *from_group(test::cyclic_table(3), 0).value;
    pairs.push_back({z3, z2});
    for (const auto& [a, b] : pairs)
        for (const auto& r : enumerate_twisting_systems(a, b)) {
            auto st = extract_simple(a, b, r);
            if (!st) continue;
            CHECK(simple_to_twisting(a, b, matched_pair_to_twisting(twisting_to_matched_pair(*st))) ==
                  r);
        }
}

TEST_CASE("validate_matched_pair accepts the involution example") {
    FiniteCategory g = involution_groupoid();
    auto mp = twisting_to_matched_pair(*extract_simple(g, g, involution_twisting()));
    CHECK(validate_matched_pair(g, g, mp).ok());
}

TEST_CASE("Z2 acting on Z3 by inversion is a matched pair") {
    auto z2 = *from_group(test::cyclic_table(2), 0).value;
    auto z3 = *from_group(test::cyclic_table(3), 0).value;
    MatchedPair mp(2, 3);
    mp.bracket[{0, 0, 0}] = 0;
    for (int f = 0; f < 2; ++f)
        for (int gm = 0; gm < 3; ++gm)
            mp.set(f, gm, f == 0 ? gm : (3 - gm) % 3, f);
    CHECK(validate_matched_pair(z3, z2, mp).ok());

    SUBCASE("a non-action left table is caught by condition (ii)") {
        MatchedPair bad = mp;
        bad.set(1, 1, 1, 1);  // t |> a = a breaks (t t) |> a = a
        auto rep = validate_matched_pair(z3, z2, bad);
        REQUIRE(!rep.ok());
        CHECK(rep.has_tag_prefix("mp/ii"));
    }
}

TEST_CASE("enumerate_twisting_systems on the involution pair finds exactly one") {
    FiniteCategory g = involution_groupoid();
    auto systems = enumerate_twisting_systems(g, g);
    REQUIRE(systems.size() == 1);
    CHECK(systems[0] == involution_twisting());
}

TEST_CASE("discrete categories admit exactly one system") {
    FiniteCategory d = discrete_category(4);
    auto systems = enumerate_twisting_systems(d, d);
    CHECK(systems.size() == 1);
}

TEST_CASE("every enumerated system validates and respects D3/D4 pointwise") {
    auto z2 = *from_group(test::cyclic_table(2), 0).value;
    auto z3 = *from_group(test::cyclic_table(3), 0).value;
    auto systems = enumerate_twisting_systems(z3, z2);
    CHECK(!systems.empty());
    for (const auto& r : systems) {
        CHECK(validate_twisting_system(z3, z2, r).ok());
        for (int g = 0; g < 3; ++g) {
            const auto& e = r.at(z2.identity(0), g);
            CHECK(e.u == 0);
            CHECK(e.gp == g);
            CHECK(e.fp == z2.identity(0));
        }
        for (int f = 0; f < 2; ++f) {
            const auto& e = r.at(f, z3.identity(0));
            CHECK(e.u == 0);
            CHECK(e.gp == z3.identity(0));
            CHECK(e.fp == f);
        }
    }
}

TEST_CASE("enumeration output is duplicate-free and canonically ordered") {
    auto z2 = *from_group(test::cyclic_table(2), 0).value;
    auto z3 = *from_group(test::cyclic_table(3), 0).value;
    auto systems = enumerate_twisting_systems(z3, z2);
    for (std::size_t i = 1; i < systems.size(); ++i) {
        bool less = false, equal = true;
        for (std::size_t k = 0; k < systems[i].entries.size(); ++k) {
            auto tup = [](const TwistingSystem::Entry& e) {
                return std::array<int, 3>{e.u, e.gp, e.fp};
            };
            if (tup(systems[i - 1].entries[k]) != tup(systems[i].entries[k])) {
                less = tup(systems[i - 1].entries[k]) < tup(systems[i].entries[k]);
                equal = false;
                break;
            }
        }
        CHECK(!equal);
        CHECK(less);
    }
}

TEST_CASE("the limit guard throws with the computed bound") {
    auto z2 = *from_group(test::cyclic_table(2), 0).value;
    auto z3 = *from_group(test::cyclic_table(3), 0).value;
    CHECK_THROWS_AS(enumerate_twisting_systems(z3, z2, 5), SearchSpaceError);
    try {
        enumerate_twisting_systems(z3, z2, 5);
    } catch (const SearchSpaceError& e) {
        CHECK(e.bound == 36);  // two free pairs, six candidates each
        CHECK(e.limit == 5);
    }
}
