#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "twistcat/category.hpp"
#include "twistcat/validation.hpp"

namespace twistcat {

// Element-wise twisting system between categories B and A on the same
// object set. For f in hom_B(x, y) and g in hom_A(y, z), R(f, g) is a
// triple (u, g', f') with g' in hom_A(x, u) and f' in hom_B(u, z); the u
// component records which summand of the coproduct the pair lands in.
// Entries are stored for every (f, g) pair of B x A; only composable
// pairs (src_B(f) == tgt_A(g)) may carry a defined entry.
struct TwistingSystem {
    struct Entry {
        int u = -1;
        int gp = -1;
        int fp = -1;
        bool defined() const { return u >= 0; }
        bool operator==(const Entry&) const = default;
    };

    int b_size = 0;
    int a_size = 0;
    std::vector<Entry> entries;  // b_size * a_size, row = f

    TwistingSystem() = default;
    TwistingSystem(int b_size_, int a_size_)
        : b_size(b_size_), a_size(a_size_),
          entries(static_cast<std::size_t>(b_size_) * a_size_) {}

    const Entry& at(int f, int g) const {
        return entries[static_cast<std::size_t>(f) * a_size + g];
    }
    void set(int f, int g, Entry e) { entries[static_cast<std::size_t>(f) * a_size + g] = e; }

    bool operator==(const TwistingSystem&) const = default;
};

using Triple = std::array<int, 3>;

// A twisting system whose entries for each object triple (x, y, z) all
// land in the single summand bracket[(x, y, z)].
struct SimpleTwisting {
    struct Tilde {
        int gp = -1;
        int fp = -1;
        bool defined() const { return gp >= 0; }
        bool operator==(const Tilde&) const = default;
    };

    std::map<Triple, int> bracket;  // defined exactly on nonempty triples
    int b_size = 0;
    int a_size = 0;
    std::vector<Tilde> tilde;

    SimpleTwisting() = default;
    SimpleTwisting(int b_size_, int a_size_)
        : b_size(b_size_), a_size(a_size_),
          tilde(static_cast<std::size_t>(b_size_) * a_size_) {}

    const Tilde& at(int f, int g) const {
        return tilde[static_cast<std::size_t>(f) * a_size + g];
    }
    void set(int f, int g, Tilde t) { tilde[static_cast<std::size_t>(f) * a_size + g] = t; }

    bool operator==(const SimpleTwisting&) const = default;
};

// The same data split into a left action (f, g) -> f |> g in
// hom_A(x, bracket) and a right action (f, g) -> f <| g in
// hom_B(bracket, z).
struct MatchedPair {
    std::map<Triple, int> bracket;
    int b_size = 0;
    int a_size = 0;
    std::vector<int> left;   // b_size * a_size, -1 = undefined
    std::vector<int> right;

    MatchedPair() = default;
    MatchedPair(int b_size_, int a_size_)
        : b_size(b_size_), a_size(a_size_),
          left(static_cast<std::size_t>(b_size_) * a_size_, -1),
          right(static_cast<std::size_t>(b_size_) * a_size_, -1) {}

    int left_at(int f, int g) const { return left[static_cast<std::size_t>(f) * a_size + g]; }
    int right_at(int f, int g) const { return right[static_cast<std::size_t>(f) * a_size + g]; }
    void set(int f, int g, int gp, int fp) {
        left[static_cast<std::size_t>(f) * a_size + g] = gp;
        right[static_cast<std::size_t>(f) * a_size + g] = fp;
    }

    bool operator==(const MatchedPair&) const = default;
};

// Checks entry typing first, then the four defining diagram families
// pointwise:
//   D1: R(f o f', g)  agrees with R applied in two steps along B
//   D2: R(f, g o g')  agrees with R applied in two steps along A
//   D3: R(1_x^B, g) = (y, g, 1_y^B)
//   D4: R(f, 1_y^A) = (x, 1_x^A, f)
// A and B must be valid categories on the same object set.
ValidationReport validate_twisting_system(const FiniteCategory& a, const FiniteCategory& b,
                                          const TwistingSystem& r);

// Splits R into (bracket, tilde) iff the entries of every object triple
// share one summand; nullopt otherwise. Assumes a valid system.
std::optional<SimpleTwisting> extract_simple(const FiniteCategory& a, const FiniteCategory& b,
                                             const TwistingSystem& r);

SimpleTwisting matched_pair_to_twisting(const MatchedPair& mp);
MatchedPair twisting_to_matched_pair(const SimpleTwisting& st);

// Reattaches the summand components recorded in the bracket.
TwistingSystem simple_to_twisting(const FiniteCategory& a, const FiniteCategory& b,
                                  const SimpleTwisting& st);

// The five matched-pair conditions for ordinary categories. Bracket
// defects are reported with the offending equation, e.g. "|xy|yzt|| != |xzt|".
ValidationReport validate_matched_pair(const FiniteCategory& a, const FiniteCategory& b,
                                       const MatchedPair& mp);

// All twisting systems between B and A, complete and duplicate-free, in
// canonical ascending order of the entry tables. Entries on identity
// pairs are forced by D3/D4 before the search branches. Throws
// SearchSpaceError when the product of candidate-set sizes over the free
// pairs exceeds `limit`.
std::vector<TwistingSystem> enumerate_twisting_systems(const FiniteCategory& a,
                                                       const FiniteCategory& b,
                                                       std::uint64_t limit = 100'000'000);

}  // namespace twistcat
