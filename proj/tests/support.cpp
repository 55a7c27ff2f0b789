#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace twistcat::test {

FiniteCategory involution_groupoid() {
    FiniteCategory c(2);
    c.add_morphism(0, 0);  // Id_0
    c.add_morphism(1, 1);  // Id_1
    c.add_morphism(1, 0);  // u : 1 -> 0
    c.add_morphism(0, 1);  // u^-1 : 0 -> 1
    c.set_identity(0, 0);
    c.set_identity(1, 1);
    c.set_compose(0, 0, 0);
    c.set_compose(0, 2, 2);
    c.set_compose(1, 1, 1);
    c.set_compose(1, 3, 3);
    c.set_compose(2, 1, 2);
    c.set_compose(2, 3, 0);  // u o u^-1 = Id_0
    c.set_compose(3, 0, 3);
    c.set_compose(3, 2, 1);  // u^-1 o u = Id_1
    return c;
}

BracketFunction involution_bracket() {
    BracketFunction bf;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) bf.t.insert({x, y, z});
    bf.values[{0, 0, 0}] = 0;
    bf.values[{0, 0, 1}] = 1;
    bf.values[{0, 1, 1}] = 0;
    bf.values[{0, 1, 0}] = 1;  // |121| = 2 in one-based labels
    bf.values[{1, 1, 1}] = 1;
    bf.values[{1, 1, 0}] = 0;
    bf.values[{1, 0, 0}] = 1;
    bf.values[{1, 0, 1}] = 0;  // |212| = 1
    return bf;
}

FiniteCategory discrete_category(int n) {
    FiniteCategory c(n);
    for (int x = 0; x < n; ++x) {
        c.add_morphism(x, x);
        c.set_identity(x, x);
        c.set_compose(x, x, x);
    }
    return c;
}

ParallelPair parallel_pair_categories() {
    ParallelPair p{FiniteCategory(3), FiniteCategory(3)};
    for (int x = 0; x < 3; ++x) {
        p.a.add_morphism(x, x);
        p.b.add_morphism(x, x);
    }
    int g = p.a.add_morphism(2, 1);   // g : 2 -> 1
    int gt = p.a.add_morphism(2, 1);  // g~
    int k = p.a.add_morphism(2, 0);   // k : 2 -> 0
    int f = p.b.add_morphism(1, 0);   // f : 1 -> 0
    int h = p.b.add_morphism(2, 0);   // h : 2 -> 0
    int ht = p.b.add_morphism(2, 0);  // h~
    for (int x = 0; x < 3; ++x) {
        p.a.set_identity(x, x);
        p.b.set_identity(x, x);
        p.a.set_compose(x, x, x);
        p.b.set_compose(x, x, x);
    }
    for (int m : {g, gt, k}) {
        p.a.set_compose(p.a.tgt(m), m, m);
        p.a.set_compose(m, 2, m);
    }
    for (int m : {f, h, ht}) {
        p.b.set_compose(p.b.tgt(m), m, m);
        p.b.set_compose(m, p.b.src(m), m);
    }
    return p;
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<int>> klein_table() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return t;
}

std::vector<std::vector<int>> s3_table() {
    auto idx = [](int i, int j) { return ((i % 3 + 3) % 3) * 2 + (j % 2 + 2) % 2; };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 2; ++l)
                    t[idx(i, j)][idx(k, l)] = idx(i + (j == 0 ? k : -k), j + l);
    return t;
}

std::vector<std::vector<int>> s3_table_sr() {
    auto idx = [](int j, int i) { return (j % 2 + 2) % 2 * 3 + ((i % 3 + 3) % 3); };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i)
            for (int l = 0; l < 2; ++l)
                for (int k = 0; k < 3; ++k)
                    t[idx(j, i)][idx(l, k)] = idx(j + l, (l == 0 ? i : -i) + k);
    return t;
}

bool tables_isomorphic(const std::vector<std::vector<int>>& t1,
                       const std::vector<std::vector<int>>& t2) {
    if (t1.size() != t2.size()) return false;
    const int n = static_cast<int>(t1.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Plain bijection sweep; fine at order <= 8.
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (perm[t1[i][j]] != t2[perm[i]][perm[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::vector<std::pair<int, int>>> all_posets(int n) {
    std::vector<std::pair<int, int>> off_diag;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) off_diag.push_back({x, y});
    std::vector<std::vector<std::pair<int, int>>> out;
    const int bits = static_cast<int>(off_diag.size());
    for (int mask = 0; mask < (1 << bits); ++mask) {
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
        for (int x = 0; x < n; ++x) rel[x][x] = true;
        for (int b = 0; b < bits; ++b)
            if (mask & (1 << b)) rel[off_diag[b].first][off_diag[b].second] = true;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                if (rel[x][y] && rel[y][x] && x != y) ok = false;  // antisymmetry
                for (int z = 0; z < n && ok; ++z)
                    if (rel[x][y] && rel[y][z] && !rel[x][z]) ok = false;
            }
        if (!ok) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rel[x][y]) pairs.push_back({x, y});
        out.push_back(std::move(pairs));
    }
    return out;
}

std::vector<BracketFunction> brute_force_brackets(const FiniteCategory& a,
                                                  const FiniteCategory& b) {
    auto t = compute_T(a, b);
    std::vector<Triple> triples(t->begin(), t->end());
    const int n = a.objects();
    std::vector<BracketFunction> out;
    std::vector<int> assign(triples.size(), 0);
    while (true) {
        BracketFunction bf;
        bf.t = *t;
        for (std::size_t i = 0; i < triples.size(); ++i) bf.values[triples[i]] = assign[i];
        if (validate_bracket(a, b, bf).ok()) out.push_back(std::move(bf));
        std::size_t i = 0;
        for (; i < assign.size(); ++i) {
            if (++assign[i] < n) break;
            assign[i] = 0;
        }
        if (i == assign.size()) break;
    }
    return out;
}

Bialgebra group_bialgebra(const std::vector<std::vector<int>>& table, int unit) {
    const int n = static_cast<int>(table.size());
    Bialgebra b{Algebra(n), Coalgebra(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.alg.m(i, j, table[i][j]) = Rational(1);
    b.alg.unit[unit] = Rational(1);
    for (int k = 0; k < n; ++k) {
        b.coa.c(k, k, k) = Rational(1);
        b.coa.counit[k] = Rational(1);
    }
    return b;
}

Algebra poly_trunc_algebra() {
    Algebra a(2);
    a.m(0, 0, 0) = Rational(1);
    a.m(0, 1, 1) = Rational(1);
    a.m(1, 0, 1) = Rational(1);
    // x * x = 0
    a.unit[0] = Rational(1);
    return a;
}

LinearMap permutation_twist(int na, int nb, const std::vector<std::vector<int>>& act) {
    LinearMap r(na * nb, nb * na);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < na; ++i) r.at(act[j][i] * nb + j, j * na + i) = Rational(1);
    return r;
}

}  // namespace twistcat::test
