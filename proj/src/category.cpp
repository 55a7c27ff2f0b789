#include "twistcat/category.hpp"

#include <algorithm>
#include <string>

namespace twistcat {

namespace {

std::string mor_name(int m) { return "m" + std::to_string(m); }

}  // namespace

int FiniteCategory::add_morphism(int src, int tgt) {
    int id = size();
    morphisms_.push_back({src, tgt});
    // Grow the compose table, keeping existing entries in place.
    std::vector<int> grown(static_cast<std::size_t>(id + 1) * (id + 1), -1);
    for (int f = 0; f < id; ++f)
        for (int g = 0; g < id; ++g)
            grown[static_cast<std::size_t>(f) * (id + 1) + g] = table_[static_cast<std::size_t>(f) * id + g];
    table_ = std::move(grown);
    return id;
}

void FiniteCategory::set_identity(int object, int morphism) {
    if (identity_.size() < static_cast<std::size_t>(objects_)) identity_.resize(objects_, -1);
    identity_[object] = morphism;
}

void FiniteCategory::set_compose(int f, int g, int result) {
    table_[index(f, g)] = result;
}

std::vector<int> FiniteCategory::hom(int x, int y) const {
    std::vector<int> out;
    for (int m = 0; m < size(); ++m)
        if (morphisms_[m].tgt == x && morphisms_[m].src == y) out.push_back(m);
    return out;
}

bool FiniteCategory::hom_nonempty(int x, int y) const {
    for (const Mor& m : morphisms_)
        if (m.tgt == x && m.src == y) return true;
    return false;
}

ValidationReport validate_category(const FiniteCategory& c) {
    ValidationReport rep;
    const int n = c.objects();
    const int m = c.size();
    auto in_obj = [n](int x) { return 0 <= x && x < n; };
    auto in_mor = [m](int f) { return 0 <= f && f < m; };

    // Stage 1: the tables must make sense as tables.
    for (int f = 0; f < m; ++f) {
        if (!in_obj(c.src(f)) || !in_obj(c.tgt(f)))
            rep.add("malformed/morphism-endpoints", {f},
                    mor_name(f) + " has src/tgt outside 0.." + std::to_string(n - 1));
    }
    if (static_cast<int>(c.identity_table().size()) != n) {
        rep.add("malformed/identity-size", {},
                "identity table has " + std::to_string(c.identity_table().size()) +
                    " entries for " + std::to_string(n) + " objects");
    } else {
        for (int x = 0; x < n; ++x)
            if (!in_mor(c.identity(x)))
                rep.add("malformed/identity-range", {x},
                        "identity of object " + std::to_string(x) + " is not a morphism id");
    }
    for (const auto& [f, g, h] : c.stray_entries())
        rep.add("malformed/stray-pair", {f, g, h}, "compose entry with out-of-range pair ids");
    if (!rep.ok()) return rep;

    for (int f = 0; f < m; ++f) {
        for (int g = 0; g < m; ++g) {
            bool comp = c.composable(f, g);
            bool defined = c.compose_defined(f, g);
            if (comp && !defined)
                rep.add("malformed/missing-pair", {f, g},
                        "composable pair (" + mor_name(f) + "," + mor_name(g) + ") has no entry");
            if (!comp && defined)
                rep.add("malformed/stray-pair", {f, g, c.compose(f, g)},
                        "non-composable pair (" + mor_name(f) + "," + mor_name(g) + ") has an entry");
            if (comp && defined && !in_mor(c.compose(f, g)))
                rep.add("malformed/compose-range", {f, g, c.compose(f, g)},
                        "compose(" + mor_name(f) + "," + mor_name(g) + ") is not a morphism id");
        }
    }
    if (!rep.ok()) return rep;

    // Stage 2: typing. identity(x) must live in hom(x, x); a composite
    // must have tgt of f and src of g.
    for (int x = 0; x < n; ++x) {
        int e = c.identity(x);
        if (c.src(e) != x || c.tgt(e) != x)
            rep.add("axiom/identity-typing", {x, e},
                    "identity of object " + std::to_string(x) + " is not an endomorphism of it");
    }
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g)
            if (c.composable(f, g)) {
                int h = c.compose(f, g);
                if (c.tgt(h) != c.tgt(f) || c.src(h) != c.src(g))
                    rep.add("axiom/compose-typing", {f, g, h},
                            "compose(" + mor_name(f) + "," + mor_name(g) + ") lands in the wrong hom-set");
            }
    if (!rep.ok()) return rep;

    // Stage 3: unit laws and associativity. Everything is well-typed now,
    // so every expression below is defined.
    for (int f = 0; f < m; ++f) {
        if (c.compose(c.identity(c.tgt(f)), f) != f)
            rep.add("axiom/unit-left", {f}, "1 o " + mor_name(f) + " != " + mor_name(f));
        if (c.compose(f, c.identity(c.src(f))) != f)
            rep.add("axiom/unit-right", {f}, mor_name(f) + " o 1 != " + mor_name(f));
    }
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (!c.composable(f, g)) continue;
            for (int h = 0; h < m; ++h) {
                if (!c.composable(g, h)) continue;
                if (c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)))
                    rep.add("axiom/associativity", {f, g, h},
                            "(" + mor_name(f) + " o " + mor_name(g) + ") o " + mor_name(h) +
                                " != " + mor_name(f) + " o (" + mor_name(g) + " o " + mor_name(h) + ")");
            }
        }
    return rep;
}

ValidationReport validate_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                                  const Functor& f) {
    ValidationReport rep;
    if (static_cast<int>(f.object_map.size()) != dom.objects() ||
        static_cast<int>(f.morphism_map.size()) != dom.size()) {
        rep.add("functor/shape", {}, "object or morphism map has the wrong length");
        return rep;
    }
    for (int x = 0; x < dom.objects(); ++x)
        if (f.object_map[x] < 0 || f.object_map[x] >= cod.objects()) {
            rep.add("functor/object-range", {x}, "object map out of range");
            return rep;
        }
    for (int m = 0; m < dom.size(); ++m)
        if (f.morphism_map[m] < 0 || f.morphism_map[m] >= cod.size()) {
            rep.add("functor/morphism-range", {m}, "morphism map out of range");
            return rep;
        }
    for (int m = 0; m < dom.size(); ++m) {
        int fm = f.morphism_map[m];
        if (cod.src(fm) != f.object_map[dom.src(m)] || cod.tgt(fm) != f.object_map[dom.tgt(m)])
            rep.add("functor/endpoints", {m, fm}, "image of " + mor_name(m) + " has wrong endpoints");
    }
    for (int x = 0; x < dom.objects(); ++x)
        if (f.morphism_map[dom.identity(x)] != cod.identity(f.object_map[x]))
            rep.add("functor/identity", {x}, "identity of object " + std::to_string(x) + " not preserved");
    for (int a = 0; a < dom.size(); ++a)
        for (int b = 0; b < dom.size(); ++b)
            if (dom.composable(a, b)) {
                int lhs = f.morphism_map[dom.compose(a, b)];
                int rhs = cod.compose(f.morphism_map[a], f.morphism_map[b]);
                if (lhs != rhs)
                    rep.add("functor/composition", {a, b},
                            "F(" + mor_name(a) + " o " + mor_name(b) + ") != F(" + mor_name(a) +
                                ") o F(" + mor_name(b) + ")");
            }
    return rep;
}

std::optional<std::vector<int>> is_groupoid(const FiniteCategory& c) {
    std::vector<int> inv(c.size(), -1);
    for (int f = 0; f < c.size(); ++f) {
        for (int g : c.hom(c.src(f), c.tgt(f))) {
            if (c.compose(f, g) == c.identity(c.tgt(f)) &&
                c.compose(g, f) == c.identity(c.src(f))) {
                inv[f] = g;
                break;
            }
        }
        if (inv[f] < 0) return std::nullopt;
    }
    return inv;
}

bool is_thin(const FiniteCategory& c) {
    for (int x = 0; x < c.objects(); ++x)
        for (int y = 0; y < c.objects(); ++y)
            if (c.hom(x, y).size() > 1) return false;
    return true;
}

Checked<FiniteCategory> from_group(const std::vector<std::vector<int>>& table, int unit) {
    ValidationReport rep;
    const int n = static_cast<int>(table.size());
    if (n == 0 || unit < 0 || unit >= n) {
        rep.add("group/shape", {unit}, "empty table or unit index out of range");
        return Checked<FiniteCategory>::reject(rep);
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) {
            rep.add("group/shape", {i}, "row " + std::to_string(i) + " has wrong length");
            return Checked<FiniteCategory>::reject(rep);
        }
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n) {
                rep.add("group/range", {i, j, table[i][j]}, "table entry out of range");
                return Checked<FiniteCategory>::reject(rep);
            }
    }
    for (int i = 0; i < n && rep.ok(); ++i) {
        if (table[unit][i] != i || table[i][unit] != i)
            rep.add("group/unit", {i}, "unit row/column does not fix element " + std::to_string(i));
    }
    // Latin square: each row and column is a permutation.
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (int j = 0; j < n; ++j) {
            if (row[table[i][j]])
                rep.add("group/latin-row", {i, j}, "row " + std::to_string(i) + " repeats a value");
            row[table[i][j]] = true;
            if (col[table[j][i]])
                rep.add("group/latin-col", {i, j}, "column " + std::to_string(i) + " repeats a value");
            col[table[j][i]] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    rep.add("group/associativity", {i, j, k}, "(i*j)*k != i*(j*k)");
    if (!rep.ok()) return Checked<FiniteCategory>::reject(rep);

    FiniteCategory c(1);
    for (int i = 0; i < n; ++i) c.add_morphism(0, 0);
    c.set_identity(0, unit);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.set_compose(i, j, table[i][j]);
    return Checked<FiniteCategory>::accept(std::move(c));
}

Checked<FiniteCategory> from_preorder(int n, const std::vector<std::pair<int, int>>& relation) {
    ValidationReport rep;
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (const auto& [x, y] : relation) {
        if (x < 0 || x >= n || y < 0 || y >= n) {
            rep.add("preorder/range", {x, y}, "pair outside 0.." + std::to_string(n - 1));
            return Checked<FiniteCategory>::reject(rep);
        }
        rel[x][y] = true;
    }
    for (int x = 0; x < n; ++x)
        if (!rel[x][x])
            rep.add("preorder/reflexivity", {x}, "(x,x) missing for x=" + std::to_string(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (rel[x][y] && rel[y][z] && !rel[x][z])
                    rep.add("preorder/transitivity", {x, y, z}, "(x,y),(y,z) present but (x,z) missing");
    if (!rep.ok()) return Checked<FiniteCategory>::reject(rep);

    // Pair (x, y) in the relation contributes the morphism y -> x, i.e.
    // hom(x, y) is a singleton exactly on related pairs.
    FiniteCategory c(n);
    std::vector<std::vector<int>> id_of(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rel[x][y]) id_of[x][y] = c.add_morphism(y, x);
    for (int x = 0; x < n; ++x) c.set_identity(x, id_of[x][x]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (rel[x][y] && rel[y][z]) c.set_compose(id_of[x][y], id_of[y][z], id_of[x][z]);
    return Checked<FiniteCategory>::accept(std::move(c));
}

std::optional<WideSubcategory> wide_subcategory_check(const FiniteCategory& c,
                                                      const std::vector<int>& morphism_subset) {
    std::vector<bool> in(c.size(), false);
    for (int m : morphism_subset) {
        if (m < 0 || m >= c.size()) return std::nullopt;
        in[m] = true;
    }
    for (int x = 0; x < c.objects(); ++x)
        if (!in[c.identity(x)]) return std::nullopt;
    for (int f = 0; f < c.size(); ++f)
        for (int g = 0; g < c.size(); ++g)
            if (in[f] && in[g] && c.composable(f, g) && !in[c.compose(f, g)]) return std::nullopt;

    WideSubcategory out;
    out.sub = FiniteCategory(c.objects());
    std::vector<int> to_sub(c.size(), -1);
    for (int m = 0; m < c.size(); ++m)
        if (in[m]) {
            to_sub[m] = out.sub.add_morphism(c.src(m), c.tgt(m));
            out.inclusion.morphism_map.push_back(m);
        }
    for (int x = 0; x < c.objects(); ++x) {
        out.sub.set_identity(x, to_sub[c.identity(x)]);
        out.inclusion.object_map.push_back(x);
    }
    for (int f = 0; f < c.size(); ++f)
        for (int g = 0; g < c.size(); ++g)
            if (in[f] && in[g] && c.composable(f, g))
                out.sub.set_compose(to_sub[f], to_sub[g], to_sub[c.compose(f, g)]);
    return out;
}

}  // namespace twistcat
