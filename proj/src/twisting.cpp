#include "twistcat/twisting.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace twistcat {

namespace {

std::string obj(int x) { return std::to_string(x); }

bool is_identity_of(const FiniteCategory& c, int m) {
    int x = c.src(m);
    return x == c.tgt(m) && c.identity(x) == m;
}

}  // namespace

ValidationReport validate_twisting_system(const FiniteCategory& a, const FiniteCategory& b,
                                          const TwistingSystem& r) {
    if (a.objects() != b.objects())
        throw std::invalid_argument("twisting system requires equal object sets");
    ValidationReport rep;
    if (r.b_size != b.size() || r.a_size != a.size()) {
        rep.add("twist/shape", {r.b_size, r.a_size},
                "entry table sized for " + std::to_string(r.b_size) + "x" +
                    std::to_string(r.a_size) + " morphisms, categories have " +
                    std::to_string(b.size()) + "x" + std::to_string(a.size()));
        return rep;
    }
    const int n = a.objects();

    // Typing: defined exactly on composable pairs, components in the
    // hom-sets forced by (f, g) and the chosen summand u.
    for (int f = 0; f < b.size(); ++f)
        for (int g = 0; g < a.size(); ++g) {
            bool comp = b.src(f) == a.tgt(g);
            const auto& e = r.at(f, g);
            if (!comp) {
                if (e.defined())
                    rep.add("twist/domain", {f, g}, "entry on a non-composable pair");
                continue;
            }
            if (!e.defined()) {
                rep.add("twist/missing", {f, g}, "composable pair without an entry");
                continue;
            }
            if (e.u < 0 || e.u >= n || e.gp < 0 || e.gp >= a.size() || e.fp < 0 ||
                e.fp >= b.size()) {
                rep.add("twist/range", {f, g}, "entry components out of range");
                continue;
            }
            if (a.tgt(e.gp) != b.tgt(f) || a.src(e.gp) != e.u)
                rep.add("twist/typing", {f, g, e.gp},
                        "A-component not in hom(" + obj(b.tgt(f)) + "," + obj(e.u) + ")");
            if (b.tgt(e.fp) != e.u || b.src(e.fp) != a.src(g))
                rep.add("twist/typing", {f, g, e.fp},
                        "B-component not in hom(" + obj(e.u) + "," + obj(a.src(g)) + ")");
        }
    if (!rep.ok()) return rep;

    // D3 / D4: identity pairs are sent to the forced entries.
    for (int g = 0; g < a.size(); ++g) {
        int f = b.identity(a.tgt(g));
        const auto& e = r.at(f, g);
        if (e.u != a.src(g) || e.gp != g || e.fp != b.identity(a.src(g)))
            rep.add("twist/D3", {f, g}, "R(1,g) != (g,1)");
    }
    for (int f = 0; f < b.size(); ++f) {
        int g = a.identity(b.src(f));
        const auto& e = r.at(f, g);
        if (e.u != b.tgt(f) || e.gp != a.identity(b.tgt(f)) || e.fp != f)
            rep.add("twist/D4", {f, g}, "R(f,1) != (1,f)");
    }

    // D1: both ways of pushing g through a composite f o f' agree.
    for (int f = 0; f < b.size(); ++f)
        for (int f2 = 0; f2 < b.size(); ++f2) {
            if (!b.composable(f, f2)) continue;
            for (int g = 0; g < a.size(); ++g) {
                if (b.src(f2) != a.tgt(g)) continue;
                const auto& e1 = r.at(f2, g);
                const auto& e2 = r.at(f, e1.gp);
                const auto& e3 = r.at(b.compose(f, f2), g);
                if (e3.u != e2.u || e3.gp != e2.gp || e3.fp != b.compose(e2.fp, e1.fp))
                    rep.add("twist/D1", {f, f2, g},
                            "R(f o f', g) disagrees with the two-step image");
            }
        }
    // D2: likewise along a composite g o g' in A.
    for (int f = 0; f < b.size(); ++f)
        for (int g = 0; g < a.size(); ++g) {
            if (b.src(f) != a.tgt(g)) continue;
            for (int g2 = 0; g2 < a.size(); ++g2) {
                if (!a.composable(g, g2)) continue;
                const auto& e1 = r.at(f, g);
                const auto& e2 = r.at(e1.fp, g2);
                const auto& e3 = r.at(f, a.compose(g, g2));
                if (e3.u != e2.u || e3.gp != a.compose(e1.gp, e2.gp) || e3.fp != e2.fp)
                    rep.add("twist/D2", {f, g, g2},
                            "R(f, g o g') disagrees with the two-step image");
            }
        }
    return rep;
}

std::optional<SimpleTwisting> extract_simple(const FiniteCategory& a, const FiniteCategory& b,
                                             const TwistingSystem& r) {
    const int n = a.objects();
    SimpleTwisting st(b.size(), a.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto fs = b.hom(x, y);
            if (fs.empty()) continue;
            for (int z = 0; z < n; ++z) {
                auto gs = a.hom(y, z);
                if (gs.empty()) continue;
                int u = -1;
                for (int f : fs)
                    for (int g : gs) {
                        const auto& e = r.at(f, g);
                        if (u < 0) u = e.u;
                        if (e.u != u) return std::nullopt;
                    }
                if (!a.hom_nonempty(x, u) || !b.hom_nonempty(u, z)) return std::nullopt;
                st.bracket[{x, y, z}] = u;
                for (int f : fs)
                    for (int g : gs) {
                        const auto& e = r.at(f, g);
                        st.set(f, g, {e.gp, e.fp});
                    }
            }
        }
    return st;
}

SimpleTwisting matched_pair_to_twisting(const MatchedPair& mp) {
    SimpleTwisting st(mp.b_size, mp.a_size);
    st.bracket = mp.bracket;
    for (int f = 0; f < mp.b_size; ++f)
        for (int g = 0; g < mp.a_size; ++g)
            if (mp.left_at(f, g) >= 0) st.set(f, g, {mp.left_at(f, g), mp.right_at(f, g)});
    return st;
}

MatchedPair twisting_to_matched_pair(const SimpleTwisting& st) {
    MatchedPair mp(st.b_size, st.a_size);
    mp.bracket = st.bracket;
    for (int f = 0; f < st.b_size; ++f)
        for (int g = 0; g < st.a_size; ++g)
            if (st.at(f, g).defined()) mp.set(f, g, st.at(f, g).gp, st.at(f, g).fp);
    return mp;
}

TwistingSystem simple_to_twisting(const FiniteCategory& a, const FiniteCategory& b,
                                  const SimpleTwisting& st) {
    TwistingSystem r(st.b_size, st.a_size);
    for (int f = 0; f < st.b_size; ++f)
        for (int g = 0; g < st.a_size; ++g) {
            const auto& t = st.at(f, g);
            if (!t.defined()) continue;
            auto it = st.bracket.find({b.tgt(f), b.src(f), a.src(g)});
            int u = it == st.bracket.end() ? -1 : it->second;
            r.set(f, g, {u, t.gp, t.fp});
        }
    return r;
}

ValidationReport validate_matched_pair(const FiniteCategory& a, const FiniteCategory& b,
                                       const MatchedPair& mp) {
    if (a.objects() != b.objects())
        throw std::invalid_argument("matched pair requires equal object sets");
    ValidationReport rep;
    if (mp.b_size != b.size() || mp.a_size != a.size()) {
        rep.add("mp/shape", {mp.b_size, mp.a_size}, "action tables sized for the wrong categories");
        return rep;
    }
    const int n = a.objects();

    // Domain and typing. The bracket lives exactly on the triples with a
    // nonempty hom product; the actions exactly on composable pairs.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                bool in_t = b.hom_nonempty(x, y) && a.hom_nonempty(y, z);
                bool has = mp.bracket.count({x, y, z}) > 0;
                if (in_t && !has)
                    rep.add("mp/bracket-domain", {x, y, z}, "bracket missing on a nonempty triple");
                if (!in_t && has)
                    rep.add("mp/bracket-domain", {x, y, z}, "bracket value off the nonempty triples");
                if (has) {
                    int u = mp.bracket.at({x, y, z});
                    if (u < 0 || u >= n)
                        rep.add("mp/bracket-range", {x, y, z, u}, "bracket value out of range");
                }
            }
    for (int f = 0; f < b.size(); ++f)
        for (int g = 0; g < a.size(); ++g) {
            bool comp = b.src(f) == a.tgt(g);
            int gp = mp.left_at(f, g), fp = mp.right_at(f, g);
            if (!comp) {
                if (gp >= 0 || fp >= 0)
                    rep.add("mp/domain", {f, g}, "action on a non-composable pair");
                continue;
            }
            if (gp < 0 || fp < 0 || gp >= a.size() || fp >= b.size()) {
                rep.add("mp/missing", {f, g}, "composable pair without both actions");
                continue;
            }
            auto it = mp.bracket.find({b.tgt(f), b.src(f), a.src(g)});
            if (it == mp.bracket.end()) continue;  // already reported above
            int u = it->second;
            if (a.tgt(gp) != b.tgt(f) || a.src(gp) != u)
                rep.add("mp/typing", {f, g, gp}, "f |> g lands outside hom(tgt f, |xyz|)");
            if (b.tgt(fp) != u || b.src(fp) != a.src(g))
                rep.add("mp/typing", {f, g, fp}, "f <| g lands outside hom(|xyz|, src g)");
        }
    if (!rep.ok()) return rep;

    auto bracket = [&](int x, int y, int z) { return mp.bracket.at({x, y, z}); };

    // (i) nonemptiness transport.
    for (const auto& [t, u] : mp.bracket)
        if (!a.hom_nonempty(t[0], u) || !b.hom_nonempty(u, t[2]))
            rep.add("mp/i", {t[0], t[1], t[2], u},
                    "hom(" + obj(t[0]) + ",|xyz|) x hom(|xyz|," + obj(t[2]) + ") is empty");

    // (ii) composites in B.
    for (int f = 0; f < b.size(); ++f)
        for (int f2 = 0; f2 < b.size(); ++f2) {
            if (!b.composable(f, f2)) continue;
            for (int g = 0; g < a.size(); ++g) {
                if (b.src(f2) != a.tgt(g)) continue;
                int x = b.tgt(f), y = b.src(f), z = b.src(f2), t = a.src(g);
                int inner = bracket(y, z, t);
                // (x, y, inner) can fall outside T only when (i) already
                // failed for (y, z, t); that defect is reported there.
                auto outer = mp.bracket.find({x, y, inner});
                if (outer != mp.bracket.end() && outer->second != bracket(x, z, t))
                    rep.add("mp/ii-bracket", {x, y, z, t}, "|xy|yzt|| != |xzt|");
                if (mp.left_at(b.compose(f, f2), g) != mp.left_at(f, mp.left_at(f2, g)))
                    rep.add("mp/ii-left", {f, f2, g}, "(f o f') |> g != f |> (f' |> g)");
                int rhs = b.compose(mp.right_at(f, mp.left_at(f2, g)), mp.right_at(f2, g));
                if (mp.right_at(b.compose(f, f2), g) != rhs)
                    rep.add("mp/ii-right", {f, f2, g},
                            "(f o f') <| g != [f <| (f' |> g)] o (f' <| g)");
            }
        }

    // (iii) composites in A.
    for (int f = 0; f < b.size(); ++f)
        for (int g = 0; g < a.size(); ++g) {
            if (b.src(f) != a.tgt(g)) continue;
            for (int g2 = 0; g2 < a.size(); ++g2) {
                if (!a.composable(g, g2)) continue;
                int x = b.tgt(f), y = b.src(f), z = a.src(g), t = a.src(g2);
                auto outer = mp.bracket.find({bracket(x, y, z), z, t});
                if (outer != mp.bracket.end() && outer->second != bracket(x, y, t))
                    rep.add("mp/iii-bracket", {x, y, z, t}, "||xyz|zt| != |xyt|");
                if (mp.right_at(f, a.compose(g, g2)) != mp.right_at(mp.right_at(f, g), g2))
                    rep.add("mp/iii-right", {f, g, g2}, "f <| (g o g') != (f <| g) <| g'");
                int rhs = a.compose(mp.left_at(f, g), mp.left_at(mp.right_at(f, g), g2));
                if (mp.left_at(f, a.compose(g, g2)) != rhs)
                    rep.add("mp/iii-left", {f, g, g2},
                            "f |> (g o g') != (f |> g) o [(f <| g) |> g']");
            }
        }

    // (iv) identities of B act trivially.
    for (int g = 0; g < a.size(); ++g) {
        int x = a.tgt(g), y = a.src(g);
        int f = b.identity(x);
        if (bracket(x, x, y) != y) rep.add("mp/iv-bracket", {x, x, y}, "|xxy| != y");
        if (mp.left_at(f, g) != g) rep.add("mp/iv-left", {f, g}, "1 |> g != g");
        if (mp.right_at(f, g) != b.identity(y)) rep.add("mp/iv-right", {f, g}, "1 <| g != 1");
    }
    // (v) identities of A are absorbed.
    for (int f = 0; f < b.size(); ++f) {
        int x = b.tgt(f), y = b.src(f);
        int g = a.identity(y);
        if (bracket(x, y, y) != x) rep.add("mp/v-bracket", {x, y, y}, "|xyy| != x");
        if (mp.left_at(f, g) != a.identity(x)) rep.add("mp/v-left", {f, g}, "f |> 1 != 1");
        if (mp.right_at(f, g) != f) rep.add("mp/v-right", {f, g}, "f <| 1 != f");
    }
    return rep;
}

namespace {

class TwistingEnumerator {
public:
    TwistingEnumerator(const FiniteCategory& a, const FiniteCategory& b, std::uint64_t limit)
        : a_(a), b_(b), cur_(b.size(), a.size()) {
        // Identity pairs are forced by D3/D4; everything else branches.
        std::uint64_t bound = 1;
        bool empty_domain = false;
        for (int f = 0; f < b.size(); ++f)
            for (int g = 0; g < a.size(); ++g) {
                if (b.src(f) != a.tgt(g)) continue;
                if (is_identity_of(b_, f)) {
                    cur_.set(f, g, {a.src(g), g, b.identity(a.src(g))});
                } else if (is_identity_of(a_, g)) {
                    cur_.set(f, g, {b.tgt(f), a.identity(b.tgt(f)), f});
                } else {
                    auto cands = candidates(f, g);
                    if (cands.empty()) empty_domain = true;
                    bound = sat_mul(bound, cands.size());
                    free_.push_back({f, g});
                    cands_.push_back(std::move(cands));
                }
            }
        if (bound > limit) throw SearchSpaceError(bound, limit);
        empty_domain_ = empty_domain;
        collect_instances();
    }

    std::vector<TwistingSystem> run() {
        if (!empty_domain_) dfs(0);
        return std::move(out_);
    }

private:
    static std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
        if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y)
            return std::numeric_limits<std::uint64_t>::max();
        return x * y;
    }

    std::vector<TwistingSystem::Entry> candidates(int f, int g) const {
        std::vector<TwistingSystem::Entry> out;
        for (int u = 0; u < a_.objects(); ++u)
            for (int gp : a_.hom(b_.tgt(f), u))
                for (int fp : b_.hom(u, a_.src(g))) out.push_back({u, gp, fp});
        return out;
    }

    void collect_instances() {
        for (int f = 0; f < b_.size(); ++f)
            for (int f2 = 0; f2 < b_.size(); ++f2) {
                if (!b_.composable(f, f2)) continue;
                for (int g = 0; g < a_.size(); ++g)
                    if (b_.src(f2) == a_.tgt(g)) d1_.push_back({f, f2, g});
            }
        for (int f = 0; f < b_.size(); ++f)
            for (int g = 0; g < a_.size(); ++g) {
                if (b_.src(f) != a_.tgt(g)) continue;
                for (int g2 = 0; g2 < a_.size(); ++g2)
                    if (a_.composable(g, g2)) d2_.push_back({f, g, g2});
            }
    }

    // Checks only instances whose whole lookup chain is already assigned;
    // any extension of a failing partial assignment fails validation.
    bool consistent() const {
        for (const auto& [f, f2, g] : d1_) {
            const auto& e1 = cur_.at(f2, g);
            if (!e1.defined()) continue;
            const auto& e2 = cur_.at(f, e1.gp);
            if (!e2.defined()) continue;
            const auto& e3 = cur_.at(b_.compose(f, f2), g);
            if (!e3.defined()) continue;
            if (e3.u != e2.u || e3.gp != e2.gp || e3.fp != b_.compose(e2.fp, e1.fp)) return false;
        }
        for (const auto& [f, g, g2] : d2_) {
            const auto& e1 = cur_.at(f, g);
            if (!e1.defined()) continue;
            const auto& e2 = cur_.at(e1.fp, g2);
            if (!e2.defined()) continue;
            const auto& e3 = cur_.at(f, a_.compose(g, g2));
            if (!e3.defined()) continue;
            if (e3.u != e2.u || e3.gp != a_.compose(e1.gp, e2.gp) || e3.fp != e2.fp) return false;
        }
        return true;
    }

    void dfs(std::size_t i) {
        if (i == free_.size()) {
            if (validate_twisting_system(a_, b_, cur_).ok()) out_.push_back(cur_);
            return;
        }
        auto [f, g] = free_[i];
        for (const auto& cand : cands_[i]) {
            cur_.set(f, g, cand);
            if (consistent()) dfs(i + 1);
        }
        cur_.set(f, g, {});
    }

    const FiniteCategory& a_;
    const FiniteCategory& b_;
    TwistingSystem cur_;
    bool empty_domain_ = false;
    std::vector<std::pair<int, int>> free_;
    std::vector<std::vector<TwistingSystem::Entry>> cands_;
    std::vector<std::array<int, 3>> d1_, d2_;
    std::vector<TwistingSystem> out_;
};

}  // namespace

std::vector<TwistingSystem> enumerate_twisting_systems(const FiniteCategory& a,
                                                       const FiniteCategory& b,
                                                       std::uint64_t limit) {
    if (a.objects() != b.objects())
        throw std::invalid_argument("twisting system requires equal object sets");
    return TwistingEnumerator(a, b, limit).run();
}

}  // namespace twistcat
