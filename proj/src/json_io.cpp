#include "twistcat/json_io.hpp"

#include <fstream>
#include <set>

namespace twistcat::io {

namespace {

void expect_keys(const json& j, const std::set<std::string>& keys, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
    for (const auto& [k, v] : j.items())
        if (!keys.count(k)) throw ParseError(what + ": unknown key \"" + k + "\"");
    for (const auto& k : keys)
        if (!j.contains(k)) throw ParseError(what + ": missing key \"" + k + "\"");
}

int get_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + ": expected an integer");
    return j.get<int>();
}

std::vector<int> int_row(const json& j, std::size_t len, const std::string& what) {
    if (!j.is_array() || j.size() != len)
        throw ParseError(what + ": expected an array of " + std::to_string(len) + " integers");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(get_int(v, what));
    return out;
}

Rational get_rational(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + ": rationals are \"p/q\" strings");
    auto r = Rational::parse(j.get<std::string>());
    if (!r) throw ParseError(what + ": bad rational \"" + j.get<std::string>() + "\"");
    return *r;
}

// Every linear-structure file carries the tensor index convention in its
// header: in X (x) Y, the X factor is the slow index.
constexpr const char* kConvention = "first-factor-slow";

void check_convention(const json& j, const std::string& what) {
    if (j.at("convention") != kConvention)
        throw ParseError(what + ": convention must be \"" + kConvention + "\"");
}

}  // namespace

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json category_to_json(const FiniteCategory& c) {
    json j;
    j["objects"] = c.objects();
    json mors = json::array();
    for (int m = 0; m < c.size(); ++m)
        mors.push_back({{"id", m}, {"src", c.src(m)}, {"tgt", c.tgt(m)}});
    j["morphisms"] = std::move(mors);
    j["identity"] = c.identity_table();
    json comp = json::array();
    for (int f = 0; f < c.size(); ++f)
        for (int g = 0; g < c.size(); ++g)
            if (c.compose_defined(f, g)) comp.push_back({f, g, c.compose(f, g)});
    j["compose"] = std::move(comp);
    return j;
}

FiniteCategory category_from_json(const json& j) {
    expect_keys(j, {"objects", "morphisms", "identity", "compose"}, "category");
    int n = get_int(j["objects"], "category.objects");
    if (n < 0) throw ParseError("category.objects: negative count");
    if (!j["morphisms"].is_array()) throw ParseError("category.morphisms: expected an array");
    const auto& mors = j["morphisms"];
    const int m = static_cast<int>(mors.size());

    FiniteCategory c(n);
    std::vector<FiniteCategory::Mor> by_id(m);
    std::vector<bool> seen(m, false);
    for (const auto& rec : mors) {
        expect_keys(rec, {"id", "src", "tgt"}, "category.morphisms[]");
        int id = get_int(rec["id"], "morphism id");
        if (id < 0 || id >= m || seen[id])
            throw ParseError("category.morphisms: ids must be dense 0.." + std::to_string(m - 1));
        seen[id] = true;
        by_id[id] = {get_int(rec["src"], "morphism src"), get_int(rec["tgt"], "morphism tgt")};
    }
    for (int id = 0; id < m; ++id) c.add_morphism(by_id[id].src, by_id[id].tgt);

    if (!j["identity"].is_array() || static_cast<int>(j["identity"].size()) != n)
        throw ParseError("category.identity: expected one entry per object");
    for (int x = 0; x < n; ++x) c.set_identity(x, get_int(j["identity"][x], "identity entry"));

    if (!j["compose"].is_array()) throw ParseError("category.compose: expected an array");
    std::set<std::pair<int, int>> used;
    for (const auto& tr : j["compose"]) {
        auto t = int_row(tr, 3, "category.compose[]");
        if (t[0] < 0 || t[0] >= m || t[1] < 0 || t[1] >= m) {
            c.add_stray_entry(t[0], t[1], t[2]);
            continue;
        }
        if (!used.insert({t[0], t[1]}).second)
            throw ParseError("category.compose: duplicate pair (" + std::to_string(t[0]) + "," +
                             std::to_string(t[1]) + ")");
        c.set_compose(t[0], t[1], t[2]);
    }
    return c;
}

json functor_to_json(const Functor& f) {
    return json{{"object_map", f.object_map}, {"morphism_map", f.morphism_map}};
}

Functor functor_from_json(const json& j) {
    expect_keys(j, {"object_map", "morphism_map"}, "functor");
    Functor f;
    for (const auto& v : j["object_map"]) f.object_map.push_back(get_int(v, "functor object_map"));
    for (const auto& v : j["morphism_map"])
        f.morphism_map.push_back(get_int(v, "functor morphism_map"));
    return f;
}

json report_to_json(const ValidationReport& r) {
    json items = json::array();
    for (const auto& v : r.items)
        items.push_back({{"axiom", v.tag}, {"witness", v.witness}, {"message", v.message}});
    return json{{"violations", items}};
}

json twisting_to_json(const TwistingSystem& r) {
    json entries = json::array();
    for (int f = 0; f < r.b_size; ++f)
        for (int g = 0; g < r.a_size; ++g) {
            const auto& e = r.at(f, g);
            if (e.defined()) entries.push_back({f, g, e.u, e.gp, e.fp});
        }
    return json{{"entries", entries}};
}

TwistingSystem twisting_from_json(const json& j, int b_size, int a_size) {
    expect_keys(j, {"entries"}, "twisting");
    TwistingSystem r(b_size, a_size);
    std::set<std::pair<int, int>> used;
    for (const auto& row : j["entries"]) {
        auto t = int_row(row, 5, "twisting.entries[]");
        if (t[0] < 0 || t[0] >= b_size || t[1] < 0 || t[1] >= a_size)
            throw ParseError("twisting.entries: morphism ids out of range");
        if (!used.insert({t[0], t[1]}).second)
            throw ParseError("twisting.entries: duplicate pair");
        r.set(t[0], t[1], {t[2], t[3], t[4]});
    }
    return r;
}

json matched_pair_to_json(const MatchedPair& mp) {
    json bracket = json::array(), left = json::array(), right = json::array();
    for (const auto& [t, u] : mp.bracket) bracket.push_back({t[0], t[1], t[2], u});
    for (int f = 0; f < mp.b_size; ++f)
        for (int g = 0; g < mp.a_size; ++g) {
            if (mp.left_at(f, g) >= 0) left.push_back({f, g, mp.left_at(f, g)});
            if (mp.right_at(f, g) >= 0) right.push_back({f, g, mp.right_at(f, g)});
        }
    return json{{"bracket", bracket}, {"left", left}, {"right", right}};
}

MatchedPair matched_pair_from_json(const json& j, int b_size, int a_size) {
    expect_keys(j, {"bracket", "left", "right"}, "matched-pair");
    MatchedPair mp(b_size, a_size);
    for (const auto& row : j["bracket"]) {
        auto t = int_row(row, 4, "matched-pair.bracket[]");
        if (mp.bracket.count({t[0], t[1], t[2]}))
            throw ParseError("matched-pair.bracket: duplicate triple");
        mp.bracket[{t[0], t[1], t[2]}] = t[3];
    }
    auto fill = [&](const json& arr, std::vector<int>& table, const std::string& what) {
        std::set<std::pair<int, int>> used;
        for (const auto& row : arr) {
            auto t = int_row(row, 3, what);
            if (t[0] < 0 || t[0] >= b_size || t[1] < 0 || t[1] >= a_size)
                throw ParseError(what + ": morphism ids out of range");
            if (!used.insert({t[0], t[1]}).second) throw ParseError(what + ": duplicate pair");
            table[static_cast<std::size_t>(t[0]) * a_size + t[1]] = t[2];
        }
    };
    fill(j["left"], mp.left, "matched-pair.left");
    fill(j["right"], mp.right, "matched-pair.right");
    return mp;
}

json bracket_to_json(const BracketFunction& bf) {
    json t = json::array(), values = json::array();
    for (const auto& tr : bf.t) t.push_back({tr[0], tr[1], tr[2]});
    for (const auto& [tr, u] : bf.values) values.push_back({tr[0], tr[1], tr[2], u});
    return json{{"T", t}, {"values", values}};
}

BracketFunction bracket_from_json(const json& j) {
    expect_keys(j, {"T", "values"}, "bracket");
    BracketFunction bf;
    for (const auto& row : j["T"]) {
        auto t = int_row(row, 3, "bracket.T[]");
        bf.t.insert({t[0], t[1], t[2]});
    }
    for (const auto& row : j["values"]) {
        auto t = int_row(row, 4, "bracket.values[]");
        if (bf.values.count({t[0], t[1], t[2]})) throw ParseError("bracket.values: duplicate triple");
        bf.values[{t[0], t[1], t[2]}] = t[3];
    }
    return bf;
}

json product_to_json(const TwistedProduct& p) {
    json tagging = json::array();
    for (int m = 0; m < p.category.size(); ++m)
        tagging.push_back({m, p.tagging[m][0], p.tagging[m][1], p.tagging[m][2]});
    return json{{"category", category_to_json(p.category)},
                {"alpha", functor_to_json(p.alpha)},
                {"beta", functor_to_json(p.beta)},
                {"tagging", tagging}};
}

TwistedProduct product_from_json(const json& j) {
    expect_keys(j, {"category", "alpha", "beta", "tagging"}, "product");
    TwistedProduct p;
    p.category = category_from_json(j["category"]);
    p.alpha = functor_from_json(j["alpha"]);
    p.beta = functor_from_json(j["beta"]);
    p.tagging.resize(p.category.size());
    std::vector<bool> seen(p.category.size(), false);
    for (const auto& row : j["tagging"]) {
        auto t = int_row(row, 4, "product.tagging[]");
        if (t[0] < 0 || t[0] >= p.category.size() || seen[t[0]])
            throw ParseError("product.tagging: ids must be dense");
        seen[t[0]] = true;
        p.tagging[t[0]] = {t[1], t[2], t[3]};
    }
    return p;
}

std::vector<int> subset_from_json(const json& j) {
    expect_keys(j, {"morphisms"}, "subset");
    std::vector<int> out;
    for (const auto& v : j["morphisms"]) out.push_back(get_int(v, "subset.morphisms"));
    return out;
}

std::vector<std::vector<int>> action_from_json(const json& j, int monoid_size, int cat_size) {
    expect_keys(j, {"action"}, "action");
    std::vector<std::vector<int>> out(monoid_size, std::vector<int>(cat_size, -1));
    for (const auto& row : j["action"]) {
        auto t = int_row(row, 3, "action.action[]");
        if (t[0] < 0 || t[0] >= monoid_size || t[1] < 0 || t[1] >= cat_size)
            throw ParseError("action.action: ids out of range");
        if (out[t[0]][t[1]] >= 0) throw ParseError("action.action: duplicate pair");
        out[t[0]][t[1]] = t[2];
    }
    for (const auto& row : out)
        for (int v : row)
            if (v < 0) throw ParseError("action.action: missing pair");
    return out;
}

json linear_map_to_json(const LinearMap& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return json{{"convention", kConvention}, {"rows", m.rows}, {"cols", m.cols},
                {"entries", rows}};
}

LinearMap linear_map_from_json(const json& j) {
    expect_keys(j, {"convention", "rows", "cols", "entries"}, "linear-map");
    check_convention(j, "linear-map");
    int rows = get_int(j["rows"], "linear-map.rows");
    int cols = get_int(j["cols"], "linear-map.cols");
    if (rows < 0 || cols < 0) throw ParseError("linear-map: negative shape");
    LinearMap m(rows, cols);
    if (!j["entries"].is_array() || static_cast<int>(j["entries"].size()) != rows)
        throw ParseError("linear-map.entries: expected one row per matrix row");
    for (int r = 0; r < rows; ++r) {
        const auto& row = j["entries"][r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("linear-map.entries: row has the wrong length");
        for (int c = 0; c < cols; ++c) m.at(r, c) = get_rational(row[c], "linear-map entry");
    }
    return m;
}

namespace {

json constants_to_json(const std::vector<Rational>& v, int dim) {
    json out = json::array();
    for (int i = 0; i < dim; ++i)
        for (int jx = 0; jx < dim; ++jx)
            for (int k = 0; k < dim; ++k) {
                const Rational& r = v[(static_cast<std::size_t>(i) * dim + jx) * dim + k];
                if (!r.is_zero()) out.push_back({i, jx, k, r.str()});
            }
    return out;
}

void constants_from_json(const json& arr, std::vector<Rational>& v, int dim,
                         const std::string& what) {
    if (!arr.is_array()) throw ParseError(what + ": expected an array");
    std::set<std::array<int, 3>> used;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 4) throw ParseError(what + ": expected [i,j,k,\"p/q\"]");
        int i = get_int(row[0], what), jx = get_int(row[1], what), k = get_int(row[2], what);
        if (i < 0 || jx < 0 || k < 0 || i >= dim || jx >= dim || k >= dim)
            throw ParseError(what + ": index out of range");
        if (!used.insert({i, jx, k}).second) throw ParseError(what + ": duplicate entry");
        v[(static_cast<std::size_t>(i) * dim + jx) * dim + k] = get_rational(row[3], what);
    }
}

json vector_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& r : v) out.push_back(r.str());
    return out;
}

std::vector<Rational> vector_from_json(const json& arr, int dim, const std::string& what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
        throw ParseError(what + ": expected " + std::to_string(dim) + " rationals");
    std::vector<Rational> v;
    for (const auto& e : arr) v.push_back(get_rational(e, what));
    return v;
}

}  // namespace

json algebra_to_json(const Algebra& a) {
    return json{{"convention", kConvention}, {"dim", a.dim},
                {"mult", constants_to_json(a.mult, a.dim)}, {"unit", vector_to_json(a.unit)}};
}

Algebra algebra_from_json(const json& j) {
    expect_keys(j, {"convention", "dim", "mult", "unit"}, "algebra");
    check_convention(j, "algebra");
    int dim = get_int(j["dim"], "algebra.dim");
    if (dim < 0) throw ParseError("algebra.dim: negative");
    Algebra a(dim);
    constants_from_json(j["mult"], a.mult, dim, "algebra.mult");
    a.unit = vector_from_json(j["unit"], dim, "algebra.unit");
    return a;
}

json coalgebra_to_json(const Coalgebra& c) {
    return json{{"convention", kConvention}, {"dim", c.dim},
                {"comult", constants_to_json(c.comult, c.dim)},
                {"counit", vector_to_json(c.counit)}};
}

Coalgebra coalgebra_from_json(const json& j) {
    expect_keys(j, {"convention", "dim", "comult", "counit"}, "coalgebra");
    check_convention(j, "coalgebra");
    int dim = get_int(j["dim"], "coalgebra.dim");
    if (dim < 0) throw ParseError("coalgebra.dim: negative");
    Coalgebra c(dim);
    constants_from_json(j["comult"], c.comult, dim, "coalgebra.comult");
    c.counit = vector_from_json(j["counit"], dim, "coalgebra.counit");
    return c;
}

json bialgebra_to_json(const Bialgebra& b) {
    return json{{"convention", kConvention},
                {"dim", b.alg.dim},
                {"mult", constants_to_json(b.alg.mult, b.alg.dim)},
                {"unit", vector_to_json(b.alg.unit)},
                {"comult", constants_to_json(b.coa.comult, b.coa.dim)},
                {"counit", vector_to_json(b.coa.counit)}};
}

Bialgebra bialgebra_from_json(const json& j) {
    expect_keys(j, {"convention", "dim", "mult", "unit", "comult", "counit"}, "bialgebra");
    check_convention(j, "bialgebra");
    int dim = get_int(j["dim"], "bialgebra.dim");
    if (dim < 0) throw ParseError("bialgebra.dim: negative");
    Bialgebra b{Algebra(dim), Coalgebra(dim)};
    constants_from_json(j["mult"], b.alg.mult, dim, "bialgebra.mult");
    b.alg.unit = vector_from_json(j["unit"], dim, "bialgebra.unit");
    constants_from_json(j["comult"], b.coa.comult, dim, "bialgebra.comult");
    b.coa.counit = vector_from_json(j["counit"], dim, "bialgebra.counit");
    return b;
}

json linear_category_to_json(const LinearCategory& c) {
    json dims = json::array();
    for (int x = 0; x < c.objects; ++x) {
        json row = json::array();
        for (int y = 0; y < c.objects; ++y) row.push_back(c.dim(x, y));
        dims.push_back(std::move(row));
    }
    json comp = json::array();
    for (const auto& [key, map] : c.compose)
        for (int k = 0; k < map.rows; ++k)
            for (int col = 0; col < map.cols; ++col) {
                if (map.at(k, col).is_zero()) continue;
                int d2 = c.dim(key[1], key[2]);
                comp.push_back({key[0], key[1], key[2], col / d2, col % d2, k, map.at(k, col).str()});
            }
    json ident = json::array();
    for (const auto& v : c.identity) ident.push_back(vector_to_json(v));
    return json{{"convention", kConvention}, {"objects", c.objects}, {"dims", dims},
                {"compose", comp}, {"identity", ident}};
}

LinearCategory linear_category_from_json(const json& j) {
    expect_keys(j, {"convention", "objects", "dims", "compose", "identity"}, "linear-category");
    check_convention(j, "linear-category");
    LinearCategory c;
    c.objects = get_int(j["objects"], "linear-category.objects");
    if (c.objects < 0) throw ParseError("linear-category.objects: negative");
    if (!j["dims"].is_array() || static_cast<int>(j["dims"].size()) != c.objects)
        throw ParseError("linear-category.dims: expected one row per object");
    for (const auto& row : j["dims"])
        for (int d : int_row(row, c.objects, "linear-category.dims[]")) {
            if (d < 0) throw ParseError("linear-category.dims: negative dimension");
            c.dims.push_back(d);
        }
    if (!j["identity"].is_array() || static_cast<int>(j["identity"].size()) != c.objects)
        throw ParseError("linear-category.identity: expected one vector per object");
    for (int x = 0; x < c.objects; ++x)
        c.identity.push_back(
            vector_from_json(j["identity"][x], c.dim(x, x), "linear-category.identity[]"));
    for (const auto& row : j["compose"]) {
        if (!row.is_array() || row.size() != 7)
            throw ParseError("linear-category.compose: expected [x,y,z,i,j,k,\"p/q\"]");
        int x = get_int(row[0], "compose"), y = get_int(row[1], "compose"),
            z = get_int(row[2], "compose");
        int i = get_int(row[3], "compose"), jj = get_int(row[4], "compose"),
            k = get_int(row[5], "compose");
        if (x < 0 || y < 0 || z < 0 || x >= c.objects || y >= c.objects || z >= c.objects)
            throw ParseError("linear-category.compose: object out of range");
        int d1 = c.dim(x, y), d2 = c.dim(y, z), dz = c.dim(x, z);
        if (i < 0 || i >= d1 || jj < 0 || jj >= d2 || k < 0 || k >= dz)
            throw ParseError("linear-category.compose: basis index out of range");
        auto it = c.compose.find({x, y, z});
        if (it == c.compose.end())
            it = c.compose.emplace(Triple{x, y, z}, LinearMap(dz, d1 * d2)).first;
        Rational& slot = it->second.at(k, i * d2 + jj);
        if (!slot.is_zero()) throw ParseError("linear-category.compose: duplicate entry");
        slot = get_rational(row[6], "linear-category.compose");
    }
    return c;
}

json module_action_to_json(const ModuleAction& a) {
    json act = json::array();
    for (const auto& [key, map] : a.action) {
        int d = a.cat.dim(key.first, key.second);
        if (d == 0) continue;
        for (int out = 0; out < map.rows; ++out)
            for (int col = 0; col < map.cols; ++col) {
                if (map.at(out, col).is_zero()) continue;
                act.push_back({key.first, key.second, col / d, col % d, out,
                               map.at(out, col).str()});
            }
    }
    return json{{"convention", kConvention}, {"bialgebra", bialgebra_to_json(a.h)},
                {"category", linear_category_to_json(a.cat)}, {"action", act}};
}

ModuleAction module_action_from_json(const json& j) {
    expect_keys(j, {"convention", "bialgebra", "category", "action"}, "module-category");
    check_convention(j, "module-category");
    ModuleAction a;
    a.h = bialgebra_from_json(j["bialgebra"]);
    a.cat = linear_category_from_json(j["category"]);
    int nh = a.h.dim();
    for (const auto& row : j["action"]) {
        if (!row.is_array() || row.size() != 6)
            throw ParseError("module-category.action: expected [x,y,h,i,j,\"p/q\"]");
        int x = get_int(row[0], "action"), y = get_int(row[1], "action");
        int h = get_int(row[2], "action"), i = get_int(row[3], "action"),
            out = get_int(row[4], "action");
        if (x < 0 || y < 0 || x >= a.cat.objects || y >= a.cat.objects)
            throw ParseError("module-category.action: object out of range");
        int d = a.cat.dim(x, y);
        if (h < 0 || h >= nh || i < 0 || i >= d || out < 0 || out >= d)
            throw ParseError("module-category.action: basis index out of range");
        auto it = a.action.find({x, y});
        if (it == a.action.end())
            it = a.action.emplace(std::pair{x, y}, LinearMap(d, nh * d)).first;
        Rational& slot = it->second.at(out, h * d + i);
        if (!slot.is_zero()) throw ParseError("module-category.action: duplicate entry");
        slot = get_rational(row[5], "module-category.action");
    }
    return a;
}

}  // namespace twistcat::io
