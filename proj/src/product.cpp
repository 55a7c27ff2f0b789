#include "twistcat/product.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace twistcat {

std::optional<int> TwistedProduct::id_of(int u, int g, int f) const {
    std::array<int, 3> key{u, g, f};
    auto it = std::lower_bound(tagging.begin(), tagging.end(), key);
    if (it == tagging.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - tagging.begin());
}

Checked<TwistedProduct> twisted_tensor_product(const FiniteCategory& a, const FiniteCategory& b,
                                               const TwistingSystem& r) {
    if (a.objects() != b.objects())
        throw std::invalid_argument("product requires equal object sets");
    const int n = a.objects();

    TwistedProduct p;
    p.category = FiniteCategory(n);
    for (int u = 0; u < n; ++u)
        for (int g = 0; g < a.size(); ++g) {
            if (a.src(g) != u) continue;
            for (int f = 0; f < b.size(); ++f) {
                if (b.tgt(f) != u) continue;
                p.category.add_morphism(b.src(f), a.tgt(g));
                p.tagging.push_back({u, g, f});
            }
        }

    for (int x = 0; x < n; ++x)
        p.category.set_identity(x, *p.id_of(x, a.identity(x), b.identity(x)));

    for (int m1 = 0; m1 < p.category.size(); ++m1) {
        auto [u, g, f] = p.tagging[m1];
        for (int m2 = 0; m2 < p.category.size(); ++m2) {
            if (!p.category.composable(m1, m2)) continue;
            auto [v, g2, f2] = p.tagging[m2];
            const auto& e = r.at(f, g2);
            int res = *p.id_of(e.u, a.compose(g, e.gp), b.compose(e.fp, f2));
            p.category.set_compose(m1, m2, res);
        }
    }

    p.alpha.object_map.resize(n);
    p.beta.object_map.resize(n);
    for (int x = 0; x < n; ++x) p.alpha.object_map[x] = p.beta.object_map[x] = x;
    for (int g = 0; g < a.size(); ++g)
        p.alpha.morphism_map.push_back(*p.id_of(a.src(g), g, b.identity(a.src(g))));
    for (int f = 0; f < b.size(); ++f)
        p.beta.morphism_map.push_back(*p.id_of(b.tgt(f), a.identity(b.tgt(f)), f));

    ValidationReport rep = validate_category(p.category);
    if (!rep.ok()) {
        ValidationReport out;
        out.add("product/not-a-category", {}, "twisted tensor product failed category validation");
        out.merge(rep);
        return Checked<TwistedProduct>::reject(out);
    }
    return Checked<TwistedProduct>::accept(std::move(p));
}

std::optional<Factorization> check_factorization(const FiniteCategory& c,
                                                 const std::vector<int>& a_subset,
                                                 const std::vector<int>& b_subset) {
    auto wa = wide_subcategory_check(c, a_subset);
    auto wb = wide_subcategory_check(c, b_subset);
    if (!wa || !wb) return std::nullopt;

    Factorization out;
    std::vector<int> hit(c.size(), 0);
    // phi computed by literal composition in C over all summands.
    for (int u = 0; u < c.objects(); ++u)
        for (int g : a_subset)
            for (int f : b_subset) {
                if (c.src(g) != u || c.tgt(f) != u) continue;
                int comp = c.compose(g, f);
                out.phi.push_back({u, g, f, comp});
                ++hit[comp];
            }
    std::sort(out.phi.begin(), out.phi.end());
    for (int m = 0; m < c.size(); ++m)
        if (hit[m] != 1) return std::nullopt;
    out.psi.resize(c.size());
    for (const auto& [u, g, f, comp] : out.phi) out.psi[comp] = {u, g, f};
    return out;
}

Checked<DerivedTwisting> derive_twisting(const FiniteCategory& c, const std::vector<int>& a_subset,
                                         const std::vector<int>& b_subset) {
    ValidationReport rep;
    auto wa = wide_subcategory_check(c, a_subset);
    auto wb = wide_subcategory_check(c, b_subset);
    if (!wa || !wb) {
        rep.add("derive/not-wide-subcategory", {},
                std::string(!wa ? "A" : "B") + "-subset is not a wide subcategory");
        return Checked<DerivedTwisting>::reject(rep);
    }
    auto fact = check_factorization(c, a_subset, b_subset);
    if (!fact) {
        rep.add("derive/factorization-failed", {}, "composition is not bijective onto the hom-sets");
        return Checked<DerivedTwisting>::reject(rep);
    }

    DerivedTwisting d{std::move(wa->sub), std::move(wa->inclusion), std::move(wb->sub),
                      std::move(wb->inclusion), {}};
    std::vector<int> a_to_sub(c.size(), -1), b_to_sub(c.size(), -1);
    for (int m = 0; m < d.cat_a.size(); ++m) a_to_sub[d.incl_a.morphism_map[m]] = m;
    for (int m = 0; m < d.cat_b.size(); ++m) b_to_sub[d.incl_b.morphism_map[m]] = m;

    // R(f, g) = psi(f o g), composed in C.
    d.twist = TwistingSystem(d.cat_b.size(), d.cat_a.size());
    for (int f = 0; f < d.cat_b.size(); ++f)
        for (int g = 0; g < d.cat_a.size(); ++g) {
            if (d.cat_b.src(f) != d.cat_a.tgt(g)) continue;
            int cf = d.incl_b.morphism_map[f];
            int cg = d.incl_a.morphism_map[g];
            auto [u, gp, fp] = fact->psi[c.compose(cf, cg)];
            d.twist.set(f, g, {u, a_to_sub[gp], b_to_sub[fp]});
        }

    ValidationReport check = validate_twisting_system(d.cat_a, d.cat_b, d.twist);
    if (!check.ok()) {
        ValidationReport out;
        out.add("derive/not-a-twisting-system", {}, "derived map failed the diagram checks");
        out.merge(check);
        return Checked<DerivedTwisting>::reject(out);
    }
    return Checked<DerivedTwisting>::accept(std::move(d));
}

Checked<TwistingSystem> derive_twisting_via_product(const TwistedProduct& p,
                                                    const FiniteCategory& a,
                                                    const FiniteCategory& b) {
    auto d = derive_twisting(p.category, p.alpha.morphism_map, p.beta.morphism_map);
    if (!d.ok()) return Checked<TwistingSystem>::reject(d.report);
    std::vector<int> a_sub_of(p.category.size(), -1), b_sub_of(p.category.size(), -1);
    for (int m = 0; m < d->cat_a.size(); ++m) a_sub_of[d->incl_a.morphism_map[m]] = m;
    for (int m = 0; m < d->cat_b.size(); ++m) b_sub_of[d->incl_b.morphism_map[m]] = m;
    std::vector<int> a_orig(d->cat_a.size()), b_orig(d->cat_b.size());
    for (int g = 0; g < a.size(); ++g) a_orig[a_sub_of[p.alpha.morphism_map[g]]] = g;
    for (int f = 0; f < b.size(); ++f) b_orig[b_sub_of[p.beta.morphism_map[f]]] = f;
    TwistingSystem r(b.size(), a.size());
    for (int f = 0; f < d->cat_b.size(); ++f)
        for (int g = 0; g < d->cat_a.size(); ++g) {
            const auto& e = d->twist.at(f, g);
            if (e.defined()) r.set(b_orig[f], a_orig[g], {e.u, a_orig[e.gp], b_orig[e.fp]});
        }
    return Checked<TwistingSystem>::accept(std::move(r));
}

Checked<std::array<int, 3>> bicrossed_groupoid_inverse(const FiniteCategory& a,
                                                       const FiniteCategory& b,
                                                       const MatchedPair& mp,
                                                       std::array<int, 3> morphism) {
    auto inv_a = is_groupoid(a);
    auto inv_b = is_groupoid(b);
    if (!inv_a || !inv_b) {
        ValidationReport rep;
        rep.add("inverse/not-a-groupoid", {}, std::string(!inv_a ? "A" : "B") + " is not a groupoid");
        return Checked<std::array<int, 3>>::reject(rep);
    }
    auto [u, g, f] = morphism;
    int ginv = (*inv_a)[g];
    int finv = (*inv_b)[f];
    int gp = mp.left_at(finv, ginv);
    int fp = (*inv_b)[mp.right_at(f, gp)];
    return Checked<std::array<int, 3>>::accept({a.src(gp), gp, fp});
}

Checked<SemidirectProduct> semidirect_product(const FiniteCategory& a,
                                              const FiniteCategory& monoid,
                                              const std::vector<std::vector<int>>& action) {
    ValidationReport rep;
    if (monoid.objects() != 1) {
        rep.add("sdp/not-a-monoid", {monoid.objects()}, "acting category must have one object");
        return Checked<SemidirectProduct>::reject(rep);
    }
    const int nb = monoid.size();
    if (static_cast<int>(action.size()) != nb) {
        rep.add("sdp/action-shape", {}, "action table must have one row per monoid element");
        return Checked<SemidirectProduct>::reject(rep);
    }
    for (int m = 0; m < nb; ++m)
        if (static_cast<int>(action[m].size()) != a.size()) {
            rep.add("sdp/action-shape", {m}, "action row has the wrong length");
            return Checked<SemidirectProduct>::reject(rep);
        }
    for (int m = 0; m < nb; ++m)
        for (int g = 0; g < a.size(); ++g) {
            int gp = action[m][g];
            if (gp < 0 || gp >= a.size()) {
                rep.add("sdp/action-range", {m, g, gp}, "action value out of range");
                return Checked<SemidirectProduct>::reject(rep);
            }
            if (a.src(gp) != a.src(g) || a.tgt(gp) != a.tgt(g))
                rep.add("sdp/action-endpoints", {m, g, gp}, "action does not preserve hom-sets");
        }
    if (!rep.ok()) return Checked<SemidirectProduct>::reject(rep);

    int e = monoid.identity(0);
    for (int g = 0; g < a.size(); ++g)
        if (action[e][g] != g) rep.add("sdp/action-unit", {g}, "1 |> g != g");
    for (int m1 = 0; m1 < nb; ++m1)
        for (int m2 = 0; m2 < nb; ++m2)
            for (int g = 0; g < a.size(); ++g)
                if (action[monoid.compose(m1, m2)][g] != action[m1][action[m2][g]])
                    rep.add("sdp/action-associativity", {m1, m2, g}, "(f f') |> g != f |> (f' |> g)");
    // The two equations of the semidirect construction.
    for (int m = 0; m < nb; ++m) {
        for (int x = 0; x < a.objects(); ++x)
            if (action[m][a.identity(x)] != a.identity(x))
                rep.add("sdp/action-identity", {m, x}, "f |> 1 != 1");
        for (int g = 0; g < a.size(); ++g)
            for (int g2 = 0; g2 < a.size(); ++g2)
                if (a.composable(g, g2) &&
                    action[m][a.compose(g, g2)] != a.compose(action[m][g], action[m][g2]))
                    rep.add("sdp/action-composition", {m, g, g2},
                            "f |> (g o g') != (f |> g) o (f |> g')");
    }
    if (!rep.ok()) return Checked<SemidirectProduct>::reject(rep);

    // One copy of the monoid per object: hom(x, x) = B, hom(x, y) empty.
    const int n = a.objects();
    FiniteCategory bhat(n);
    auto bhat_id = [nb](int x, int m) { return x * nb + m; };
    for (int x = 0; x < n; ++x)
        for (int m = 0; m < nb; ++m) bhat.add_morphism(x, x);
    for (int x = 0; x < n; ++x) {
        bhat.set_identity(x, bhat_id(x, e));
        for (int m1 = 0; m1 < nb; ++m1)
            for (int m2 = 0; m2 < nb; ++m2)
                bhat.set_compose(bhat_id(x, m1), bhat_id(x, m2), bhat_id(x, monoid.compose(m1, m2)));
    }

    MatchedPair mp(bhat.size(), a.size());
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            if (a.hom_nonempty(x, z)) mp.bracket[{x, x, z}] = z;
    for (int x = 0; x < n; ++x)
        for (int m = 0; m < nb; ++m)
            for (int g = 0; g < a.size(); ++g)
                if (a.tgt(g) == x) mp.set(bhat_id(x, m), g, action[m][g], bhat_id(a.src(g), m));

    ValidationReport mp_rep = validate_matched_pair(a, bhat, mp);
    if (!mp_rep.ok()) {
        ValidationReport out;
        out.add("sdp/matched-pair", {}, "semidirect datum does not form a matched pair");
        out.merge(mp_rep);
        return Checked<SemidirectProduct>::reject(out);
    }

    auto prod =
        twisted_tensor_product(a, bhat, simple_to_twisting(a, bhat, matched_pair_to_twisting(mp)));
    if (!prod.ok()) return Checked<SemidirectProduct>::reject(prod.report);
    return Checked<SemidirectProduct>::accept({std::move(*prod), std::move(bhat), std::move(mp)});
}

}  // namespace twistcat
