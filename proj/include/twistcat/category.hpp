#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twistcat/validation.hpp"

namespace twistcat {

// A finite category given by explicit tables.
//
// Direction convention (used across the whole library and all file
// formats): the hom-set hom(x, y) is { m | tgt(m) == x, src(m) == y }, so
// a member of hom(x, y) is an arrow y -> x. This is the reverse of the
// "hom(x, y) = arrows x -> y" convention some software uses.
//
// compose(f, g) is "g then f": it is defined exactly when
// src(f) == tgt(g), and a lawful result has tgt == tgt(f), src == src(g).
//
// Objects are 0..objects-1, morphism ids are dense 0..size-1. The tables
// may hold out-of-range or ill-typed entries; validate_category reports
// such defects instead of assuming them away.
class FiniteCategory {
public:
    struct Mor {
        int src = 0;
        int tgt = 0;
        bool operator==(const Mor&) const = default;
    };

    FiniteCategory() = default;
    explicit FiniteCategory(int objects) : objects_(objects) {}

    int objects() const { return objects_; }
    int size() const { return static_cast<int>(morphisms_.size()); }

    int add_morphism(int src, int tgt);
    void set_identity(int object, int morphism);
    void set_compose(int f, int g, int result);
    void add_stray_entry(int f, int g, int result) { stray_.push_back({f, g, result}); }

    int src(int m) const { return morphisms_[m].src; }
    int tgt(int m) const { return morphisms_[m].tgt; }
    const std::vector<Mor>& morphisms() const { return morphisms_; }
    const std::vector<int>& identity_table() const { return identity_; }
    const std::vector<std::array<int, 3>>& stray_entries() const { return stray_; }

    int identity(int object) const { return identity_[object]; }
    bool composable(int f, int g) const { return src(f) == tgt(g); }
    bool compose_defined(int f, int g) const { return table_[index(f, g)] >= 0; }
    int compose(int f, int g) const { return table_[index(f, g)]; }

    // Ascending morphism ids of hom(x, y) = { m : y -> x }.
    std::vector<int> hom(int x, int y) const;
    bool hom_nonempty(int x, int y) const;

    bool operator==(const FiniteCategory&) const = default;

private:
    std::size_t index(int f, int g) const {
        return static_cast<std::size_t>(f) * morphisms_.size() + static_cast<std::size_t>(g);
    }

    int objects_ = 0;
    std::vector<Mor> morphisms_;
    std::vector<int> identity_;              // object -> morphism id
    std::vector<int> table_;                 // size x size, -1 = undefined
    std::vector<std::array<int, 3>> stray_;  // compose triples with out-of-range f or g
};

// A functor between finite categories, stored as explicit maps.
struct Functor {
    std::vector<int> object_map;    // dom object -> cod object
    std::vector<int> morphism_map;  // dom morphism -> cod morphism

    bool operator==(const Functor&) const = default;
};

// Checks every axiom family over the full tables.
//   malformed/* : ids out of range, missing or stray compose entries
//   axiom/*     : identity typing, compose typing, unit laws, associativity
// Later families are only checked once the earlier ones are clean, so a
// typing defect is reported as such and not as a cascade of unit or
// associativity failures.
ValidationReport validate_category(const FiniteCategory& c);

// Functor axioms: src/tgt preservation under the object map, identities
// to identities, compatibility with composition. Both categories are
// assumed valid.
ValidationReport validate_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                                  const Functor& f);

// Two-sided inverse table (morphism -> morphism) iff every morphism is
// invertible; nullopt otherwise. Assumes a valid category.
std::optional<std::vector<int>> is_groupoid(const FiniteCategory& c);

// True iff every hom-set has at most one element.
bool is_thin(const FiniteCategory& c);

// One-object category from a group/monoid multiplication table
// (table[i][j] = i*j). The table must be a Latin square with the given
// unit; associativity is checked, not assumed.
Checked<FiniteCategory> from_group(const std::vector<std::vector<int>>& table, int unit);

// Thin category of a preorder: one morphism y -> x in hom(x, y) per pair
// (x, y) in the relation. Rejects non-reflexive or non-transitive input
// with a witness.
Checked<FiniteCategory> from_preorder(int n, const std::vector<std::pair<int, int>>& relation);

struct WideSubcategory {
    FiniteCategory sub;  // re-indexed, ascending original morphism id order
    Functor inclusion;   // sub -> ambient
};

// Inclusion of the wide subcategory spanned by the given morphisms, iff
// the subset contains every identity and is closed under composition.
std::optional<WideSubcategory> wide_subcategory_check(const FiniteCategory& c,
                                                      const std::vector<int>& morphism_subset);

}  // namespace twistcat
