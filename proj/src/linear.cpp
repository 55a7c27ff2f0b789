#include "twistcat/linear.hpp"

#include <string>

namespace twistcat {

LinearMap LinearMap::identity(int n) {
    LinearMap m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

LinearMap LinearMap::flip(int dx, int dy) {
    LinearMap m(dy * dx, dx * dy);
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dy; ++j) m.at(j * dx + i, i * dy + j) = Rational(1);
    return m;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
    LinearMap out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
        }
    return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix sum shape mismatch");
    LinearMap out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix diff shape mismatch");
    LinearMap out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
    return out;
}

bool LinearMap::is_zero() const {
    for (const Rational& x : a)
        if (!x.is_zero()) return false;
    return true;
}

LinearMap kron(const LinearMap& x, const LinearMap& y) {
    LinearMap out(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            const Rational& v = x.at(i, j);
            if (v.is_zero()) continue;
            for (int k = 0; k < y.rows; ++k)
                for (int l = 0; l < y.cols; ++l)
                    out.at(i * y.rows + k, j * y.cols + l) = v * y.at(k, l);
        }
    return out;
}

LinearMap Algebra::mult_map() const {
    LinearMap out(dim, dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) out.at(k, i * dim + j) = m(i, j, k);
    return out;
}

LinearMap Algebra::unit_map() const {
    LinearMap out(dim, 1);
    for (int i = 0; i < dim; ++i) out.at(i, 0) = unit[i];
    return out;
}

LinearMap Coalgebra::comult_map() const {
    LinearMap out(dim * dim, dim);
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) out.at(i * dim + j, k) = c(k, i, j);
    return out;
}

LinearMap Coalgebra::counit_map() const {
    LinearMap out(1, dim);
    for (int i = 0; i < dim; ++i) out.at(0, i) = counit[i];
    return out;
}

LinearMap LinearCategory::compose_map(int x, int y, int z) const {
    auto it = compose.find({x, y, z});
    if (it != compose.end()) return it->second;
    return LinearMap(dim(x, z), dim(x, y) * dim(y, z));
}

void LinearCategory::drop_zero_compose_maps() {
    for (auto it = compose.begin(); it != compose.end();)
        it = it->second.is_zero() ? compose.erase(it) : std::next(it);
}

LinearMap ModuleAction::action_map(int x, int y) const {
    auto it = action.find({x, y});
    if (it != action.end()) return it->second;
    return LinearMap(cat.dim(x, y), h.dim() * cat.dim(x, y));
}

namespace {

Rational delta(int i, int j) { return Rational(i == j ? 1 : 0); }

LinearMap column(const std::vector<Rational>& v) {
    LinearMap out(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) out.at(static_cast<int>(i), 0) = v[i];
    return out;
}

}  // namespace

ValidationReport validate_algebra(const Algebra& alg) {
    ValidationReport rep;
    const int n = alg.dim;
    if (static_cast<int>(alg.mult.size()) != n * n * n ||
        static_cast<int>(alg.unit.size()) != n) {
        rep.add("lin/shape", {n}, "multiplication or unit array has the wrong size");
        return rep;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational lhs, rhs;
                    for (int p = 0; p < n; ++p) {
                        lhs += alg.m(i, j, p) * alg.m(p, k, l);
                        rhs += alg.m(j, k, p) * alg.m(i, p, l);
                    }
                    if (!(lhs == rhs)) {
                        rep.add("lin/assoc", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)");
                        l = n; k = n;  // one report per (i, j)
                    }
                }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Rational left, right;
            for (int i = 0; i < n; ++i) {
                left += alg.unit[i] * alg.m(i, j, k);
                right += alg.m(j, i, k) * alg.unit[i];
            }
            if (!(left == delta(j, k))) {
                rep.add("lin/unit-left", {j}, "1 e_j != e_j");
                break;
            }
            if (!(right == delta(j, k))) {
                rep.add("lin/unit-right", {j}, "e_j 1 != e_j");
                break;
            }
        }
    return rep;
}

ValidationReport validate_coalgebra(const Coalgebra& coa) {
    ValidationReport rep;
    const int n = coa.dim;
    if (static_cast<int>(coa.comult.size()) != n * n * n ||
        static_cast<int>(coa.counit.size()) != n) {
        rep.add("lin/shape", {n}, "comultiplication or counit array has the wrong size");
        return rep;
    }
    LinearMap d = coa.comult_map();
    LinearMap lhs = kron(d, LinearMap::identity(n)) * d;
    LinearMap rhs = kron(LinearMap::identity(n), d) * d;
    if (!(lhs == rhs)) rep.add("lin/coassoc", {}, "(Delta x I) Delta != (I x Delta) Delta");
    LinearMap e = coa.counit_map();
    if (!(kron(e, LinearMap::identity(n)) * d == LinearMap::identity(n)))
        rep.add("lin/counit-left", {}, "(eps x I) Delta != id");
    if (!(kron(LinearMap::identity(n), e) * d == LinearMap::identity(n)))
        rep.add("lin/counit-right", {}, "(I x eps) Delta != id");
    return rep;
}

ValidationReport validate_bialgebra(const Bialgebra& b) {
    ValidationReport rep = validate_algebra(b.alg);
    rep.merge(validate_coalgebra(b.coa));
    if (b.alg.dim != b.coa.dim) {
        rep.add("lin/shape", {b.alg.dim, b.coa.dim}, "algebra and coalgebra dimensions differ");
        return rep;
    }
    if (!rep.ok()) return rep;
    const int n = b.dim();
    LinearMap m = b.alg.mult_map(), d = b.coa.comult_map();
    LinearMap i_n = LinearMap::identity(n);
    // Delta is an algebra map for the flip-braided tensor square.
    LinearMap mult_sq = kron(m, m) * kron(i_n, kron(LinearMap::flip(n, n), i_n));
    if (!(d * m == mult_sq * kron(d, d)))
        rep.add("bialg/delta-mult", {}, "Delta(ab) != Delta(a)Delta(b)");
    LinearMap e = b.coa.counit_map();
    if (!(e * m == kron(e, e)))
        rep.add("bialg/eps-mult", {}, "eps(ab) != eps(a)eps(b)");
    LinearMap u = b.alg.unit_map();
    if (!(d * u == kron(u, u)))
        rep.add("bialg/delta-unit", {}, "Delta(1) != 1 x 1");
    if (!(e * u == LinearMap::identity(1)))
        rep.add("bialg/eps-unit", {}, "eps(1) != 1");
    return rep;
}

ValidationReport validate_linear_category(const LinearCategory& cat) {
    ValidationReport rep;
    const int n = cat.objects;
    if (static_cast<int>(cat.dims.size()) != n * n ||
        static_cast<int>(cat.identity.size()) != n) {
        rep.add("lincat/shape", {}, "dims or identity table has the wrong size");
        return rep;
    }
    for (int d : cat.dims)
        if (d < 0) {
            rep.add("lincat/shape", {}, "negative hom dimension");
            return rep;
        }
    for (const auto& [key, map] : cat.compose) {
        auto [x, y, z] = key;
        if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) {
            rep.add("lincat/shape", {x, y, z}, "composition key out of range");
            return rep;
        }
        if (map.rows != cat.dim(x, z) || map.cols != cat.dim(x, y) * cat.dim(y, z)) {
            rep.add("lincat/shape", {x, y, z}, "composition matrix has the wrong shape");
            return rep;
        }
    }
    for (int x = 0; x < n; ++x)
        if (static_cast<int>(cat.identity[x].size()) != cat.dim(x, x)) {
            rep.add("lincat/shape", {x}, "identity vector has the wrong length");
            return rep;
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t) {
                    LinearMap lhs = cat.compose_map(x, y, t) *
                                    kron(LinearMap::identity(cat.dim(x, y)), cat.compose_map(y, z, t));
                    LinearMap rhs = cat.compose_map(x, z, t) *
                                    kron(cat.compose_map(x, y, z), LinearMap::identity(cat.dim(z, t)));
                    if (!(lhs == rhs))
                        rep.add("lincat/assoc", {x, y, z, t}, "composition is not associative");
                }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (cat.dim(x, y) == 0) continue;
            LinearMap i_xy = LinearMap::identity(cat.dim(x, y));
            if (!(cat.compose_map(x, y, y) * kron(i_xy, column(cat.identity[y])) == i_xy))
                rep.add("lincat/unit-right", {x, y}, "f o 1 != f on hom(x,y)");
            if (!(cat.compose_map(x, x, y) * kron(column(cat.identity[x]), i_xy) == i_xy))
                rep.add("lincat/unit-left", {x, y}, "1 o f != f on hom(x,y)");
        }
    return rep;
}

ValidationReport validate_module_category(const ModuleAction& act) {
    ValidationReport rep = validate_bialgebra(act.h);
    rep.merge(validate_linear_category(act.cat));
    if (!rep.ok()) return rep;
    const int nh = act.h.dim();
    const int n = act.cat.objects;
    for (const auto& [key, map] : act.action) {
        auto [x, y] = key;
        if (x < 0 || y < 0 || x >= n || y >= n || map.rows != act.cat.dim(x, y) ||
            map.cols != nh * act.cat.dim(x, y)) {
            rep.add("modcat/shape", {x, y}, "action matrix has the wrong shape");
            return rep;
        }
    }
    LinearMap i_h = LinearMap::identity(nh);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = act.cat.dim(x, y);
            if (d == 0) continue;
            LinearMap rho = act.action_map(x, y);
            if (!(rho * kron(i_h, rho) == rho * kron(act.h.alg.mult_map(), LinearMap::identity(d))))
                rep.add("modcat/assoc", {x, y}, "h . (h' . f) != (h h') . f on hom(x,y)");
            if (!(rho * kron(act.h.alg.unit_map(), LinearMap::identity(d)) == LinearMap::identity(d)))
                rep.add("modcat/unit", {x, y}, "1 . f != f on hom(x,y)");
        }
    // Composition is a map of H-modules, H acting on the tensor input
    // through Delta.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int d1 = act.cat.dim(x, y), d2 = act.cat.dim(y, z);
                LinearMap c = act.cat.compose_map(x, y, z);
                LinearMap lhs = act.action_map(x, z) * kron(i_h, c);
                LinearMap rhs = c * kron(act.action_map(x, y), act.action_map(y, z)) *
                                kron(i_h, kron(LinearMap::flip(nh, d1), LinearMap::identity(d2))) *
                                kron(act.h.coa.comult_map(), LinearMap::identity(d1 * d2));
                if (!(lhs == rhs))
                    rep.add("modcat/compose-linear", {x, y, z},
                            "composition is not H-linear on hom(x,y) x hom(y,z)");
            }
    for (int x = 0; x < n; ++x) {
        if (act.cat.dim(x, x) == 0) continue;
        LinearMap one = column(act.cat.identity[x]);
        if (!(act.action_map(x, x) * kron(i_h, one) == one * act.h.coa.counit_map()))
            rep.add("modcat/identity-linear", {x}, "h . 1 != eps(h) 1 at object x");
    }
    return rep;
}

ValidationReport validate_twisting_map(const Algebra& a, const Algebra& b, const LinearMap& r) {
    ValidationReport rep;
    const int na = a.dim, nb = b.dim;
    if (r.rows != na * nb || r.cols != nb * na) {
        rep.add("twist-map/shape", {r.rows, r.cols},
                "R must be a (" + std::to_string(na * nb) + " x " + std::to_string(nb * na) +
                    ") matrix B x A -> A x B");
        return rep;
    }
    LinearMap i_a = LinearMap::identity(na), i_b = LinearMap::identity(nb);
    LinearMap ma = a.mult_map(), mb = b.mult_map();
    LinearMap ua = a.unit_map(), ub = b.unit_map();

    if (!(r * kron(mb, i_a) == kron(i_a, mb) * kron(r, i_b) * kron(i_b, r)))
        rep.add("twist-map/fm1", {}, "(fm1) fails: R(b x A) != (A x b)(R x B)(B x R)");
    if (!(r * kron(i_b, ma) == kron(ma, i_b) * kron(i_a, r) * kron(r, i_a)))
        rep.add("twist-map/fm2", {}, "(fm2) fails: R(B x a) != (a x B)(A x R)(R x A)");
    if (!(r * kron(ub, i_a) == kron(i_a, ub)))
        rep.add("twist-map/fm3", {}, "(fm3) fails: R(1_B x A) != A x 1_B");
    if (!(r * kron(i_b, ua) == kron(ua, i_b)))
        rep.add("twist-map/fm4", {}, "(fm4) fails: R(B x 1_A) != 1_A x B");
    return rep;
}

Checked<Algebra> twisted_tensor_algebra(const Algebra& a, const Algebra& b, const LinearMap& r) {
    ValidationReport rep = validate_twisting_map(a, b, r);
    if (!rep.ok()) return Checked<Algebra>::reject(rep);
    const int na = a.dim, nb = b.dim, n = na * nb;

    LinearMap mult = kron(a.mult_map(), b.mult_map()) *
                     kron(LinearMap::identity(na), kron(r, LinearMap::identity(nb)));
    Algebra out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.m(i, j, k) = mult.at(k, i * n + j);
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p) out.unit[i * nb + p] = a.unit[i] * b.unit[p];

    ValidationReport check = validate_algebra(out);
    if (!check.ok()) {
        ValidationReport fail;
        fail.add("twist-map/product-invalid", {}, "twisted tensor algebra failed validation");
        fail.merge(check);
        return Checked<Algebra>::reject(fail);
    }
    return Checked<Algebra>::accept(std::move(out));
}

Coalgebra tensor_coalgebra(const Coalgebra& d1, const Coalgebra& d2) {
    const int n1 = d1.dim, n2 = d2.dim;
    Coalgebra out(n1 * n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            for (int p = 0; p < n1; ++p)
                for (int q = 0; q < n1; ++q)
                    for (int s = 0; s < n2; ++s)
                        for (int t = 0; t < n2; ++t)
                            out.c(i * n2 + j, p * n2 + s, q * n2 + t) = d1.c(i, p, q) * d2.c(j, s, t);
            out.counit[i * n2 + j] = d1.counit[i] * d2.counit[j];
        }
    return out;
}

bool is_coalgebra_map(const Coalgebra& c, const Coalgebra& d, const LinearMap& f) {
    if (f.rows != d.dim || f.cols != c.dim) return false;
    if (!(d.comult_map() * f == kron(f, f) * c.comult_map())) return false;
    return d.counit_map() * f == c.counit_map();
}

Checked<SplitMaps> split_coalgebra_map(const Coalgebra& c, const Coalgebra& d1,
                                       const Coalgebra& d2, const LinearMap& f) {
    ValidationReport rep;
    Coalgebra d12 = tensor_coalgebra(d1, d2);
    if (f.rows != d12.dim || f.cols != c.dim) {
        rep.add("split/shape", {f.rows, f.cols}, "f must map C into D1 x D2");
        return Checked<SplitMaps>::reject(rep);
    }
    if (!is_coalgebra_map(c, d12, f)) {
        rep.add("split/not-coalgebra-map", {}, "f is not a morphism of coalgebras");
        return Checked<SplitMaps>::reject(rep);
    }
    SplitMaps out;
    out.f1 = kron(LinearMap::identity(d1.dim), d2.counit_map()) * f;
    out.f2 = kron(d1.counit_map(), LinearMap::identity(d2.dim)) * f;
    if (!(kron(out.f1, out.f2) * c.comult_map() == f)) {
        rep.add("split/reconstruction", {}, "(f1 x f2) Delta != f");
        return Checked<SplitMaps>::reject(rep);
    }
    return Checked<SplitMaps>::accept(std::move(out));
}

Checked<LinearMap> assemble_coalgebra_map(const Coalgebra& c, const Coalgebra& d1,
                                          const Coalgebra& d2, const LinearMap& f1,
                                          const LinearMap& f2) {
    ValidationReport rep;
    if (!is_coalgebra_map(c, d1, f1) || !is_coalgebra_map(c, d2, f2)) {
        rep.add("assemble/not-coalgebra-map", {}, "f1 or f2 is not a morphism of coalgebras");
        return Checked<LinearMap>::reject(rep);
    }
    LinearMap lhs = kron(f2, f1) * c.comult_map();
    LinearMap rhs = LinearMap::flip(d1.dim, d2.dim) * kron(f1, f2) * c.comult_map();
    if (!(lhs == rhs)) {
        rep.add("assemble/symmetry", {}, "(f2 x f1) Delta != flip (f1 x f2) Delta");
        return Checked<LinearMap>::reject(rep);
    }
    LinearMap f = kron(f1, f2) * c.comult_map();
    if (!is_coalgebra_map(c, tensor_coalgebra(d1, d2), f) ||
        !(kron(LinearMap::identity(d1.dim), d2.counit_map()) * f == f1) ||
        !(kron(d1.counit_map(), LinearMap::identity(d2.dim)) * f == f2)) {
        rep.add("assemble/reconstruction", {}, "assembled map fails the splitting identities");
        return Checked<LinearMap>::reject(rep);
    }
    return Checked<LinearMap>::accept(std::move(f));
}

Checked<Bialgebra> double_cross_product(const Bialgebra& a, const Bialgebra& b,
                                        const LinearMap& left, const LinearMap& right) {
    ValidationReport rep = validate_bialgebra(a);
    rep.merge(validate_bialgebra(b));
    if (!rep.ok()) {
        ValidationReport out;
        out.add("dcp/input", {}, "input is not a bialgebra");
        out.merge(rep);
        return Checked<Bialgebra>::reject(out);
    }
    const int na = a.dim(), nb = b.dim();
    if (left.rows != na || left.cols != nb * na || right.rows != nb || right.cols != nb * na) {
        rep.add("dcp/shape", {}, "action maps must be B x A -> A and B x A -> B");
        return Checked<Bialgebra>::reject(rep);
    }
    Coalgebra ba = tensor_coalgebra(b.coa, a.coa);
    if (!is_coalgebra_map(ba, a.coa, left))
        rep.add("dcp/coalgebra-map", {0}, "left action is not a coalgebra map");
    if (!is_coalgebra_map(ba, b.coa, right))
        rep.add("dcp/coalgebra-map", {1}, "right action is not a coalgebra map");
    if (!rep.ok()) return Checked<Bialgebra>::reject(rep);

    LinearMap i_a = LinearMap::identity(na), i_b = LinearMap::identity(nb);
    LinearMap dba = ba.comult_map();
    LinearMap r = kron(left, right) * dba;

    // (bi1) symmetry of the two splittings.
    if (!(kron(right, left) * dba == LinearMap::flip(na, nb) * r))
        rep.add("dcp/bi1", {}, "(bi1) fails: (<| x |>) Delta != flip (|> x <|) Delta");
    // Module laws.
    if (!(left * kron(b.alg.mult_map(), i_a) == left * kron(i_b, left)))
        rep.add("dcp/module-left", {}, "(ff') |> g != f |> (f' |> g)");
    if (!(left * kron(b.alg.unit_map(), i_a) == i_a))
        rep.add("dcp/module-left-unit", {}, "1 |> g != g");
    if (!(right * kron(i_b, a.alg.mult_map()) == right * kron(right, i_a)))
        rep.add("dcp/module-right", {}, "f <| (gg') != (f <| g) <| g'");
    if (!(right * kron(i_b, a.alg.unit_map()) == i_b))
        rep.add("dcp/module-right-unit", {}, "f <| 1 != f");
    // Compatibilities (bi2)-(bi5).
    if (!(right * kron(b.alg.mult_map(), i_a) ==
          b.alg.mult_map() * kron(right, i_b) * kron(i_b, kron(left, right)) * kron(i_b, dba)))
        rep.add("dcp/bi2", {}, "(bi2) fails");
    if (!(left * kron(i_b, a.alg.mult_map()) ==
          a.alg.mult_map() * kron(i_a, left) * kron(kron(left, right), i_a) * kron(dba, i_a)))
        rep.add("dcp/bi3", {}, "(bi3) fails");
    if (!(right * kron(b.alg.unit_map(), i_a) == b.alg.unit_map() * a.coa.counit_map()))
        rep.add("dcp/bi4", {}, "(bi4) fails: 1 <| g != eps(g) 1");
    if (!(left * kron(i_b, a.alg.unit_map()) == a.alg.unit_map() * b.coa.counit_map()))
        rep.add("dcp/bi5", {}, "(bi5) fails: f |> 1 != eps(f) 1");
    if (!rep.ok()) return Checked<Bialgebra>::reject(rep);

    auto alg = twisted_tensor_algebra(a.alg, b.alg, r);
    if (!alg.ok()) return Checked<Bialgebra>::reject(alg.report);
    Bialgebra out{std::move(*alg), tensor_coalgebra(a.coa, b.coa)};
    ValidationReport check = validate_bialgebra(out);
    if (!check.ok()) {
        ValidationReport fail;
        fail.add("dcp/product-invalid", {}, "double cross product failed bialgebra validation");
        fail.merge(check);
        return Checked<Bialgebra>::reject(fail);
    }
    return Checked<Bialgebra>::accept(std::move(out));
}

LinearCategory one_object_category(const Algebra& a) {
    LinearCategory cat;
    cat.objects = 1;
    cat.dims = {a.dim};
    if (a.dim > 0) cat.compose[{0, 0, 0}] = a.mult_map();
    cat.identity = {a.unit};
    return cat;
}

LinearCategory diagonal_category(const Algebra& a, int objects) {
    LinearCategory cat;
    cat.objects = objects;
    cat.dims.assign(static_cast<std::size_t>(objects) * objects, 0);
    for (int x = 0; x < objects; ++x) {
        cat.dims[static_cast<std::size_t>(x) * objects + x] = a.dim;
        if (a.dim > 0) cat.compose[{x, x, x}] = a.mult_map();
        cat.identity.push_back(a.unit);
    }
    return cat;
}

Checked<LinearCategory> smash_product(const ModuleAction& act) {
    ValidationReport rep = validate_module_category(act);
    if (!rep.ok()) return Checked<LinearCategory>::reject(rep);
    const int n = act.cat.objects;
    const int nh = act.h.dim();

    LinearCategory out;
    out.objects = n;
    out.dims.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.dims[static_cast<std::size_t>(x) * n + y] = act.cat.dim(x, y) * nh;
    for (int x = 0; x < n; ++x) {
        std::vector<Rational> one(static_cast<std::size_t>(act.cat.dim(x, x)) * nh);
        for (int i = 0; i < act.cat.dim(x, x); ++i)
            for (int p = 0; p < nh; ++p) one[static_cast<std::size_t>(i) * nh + p] =
                act.cat.identity[x][i] * act.h.alg.unit[p];
        out.identity.push_back(std::move(one));
    }
    LinearMap i_h = LinearMap::identity(nh);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int d1 = act.cat.dim(x, y), d2 = act.cat.dim(y, z), dz = act.cat.dim(x, z);
                if (d1 * nh == 0 || d2 * nh == 0 || dz * nh == 0) continue;
                // (f x h)(f' x h') = sum f (h_(1).f') x h_(2) h'
                LinearMap step1 = kron(LinearMap::identity(d1),
                                       kron(act.h.coa.comult_map(), LinearMap::identity(d2 * nh)));
                LinearMap step2 = kron(LinearMap::identity(d1 * nh),
                                       kron(LinearMap::flip(nh, d2), i_h));
                LinearMap step3 = kron(LinearMap::identity(d1),
                                       kron(act.action_map(y, z), act.h.alg.mult_map()));
                LinearMap comp = kron(act.cat.compose_map(x, y, z), i_h) * step3 * step2 * step1;
                out.compose[{x, y, z}] = std::move(comp);
            }

    out.drop_zero_compose_maps();
    ValidationReport check = validate_linear_category(out);
    if (!check.ok()) {
        ValidationReport fail;
        fail.add("smash/product-invalid", {}, "smash product failed category validation");
        fail.merge(check);
        return Checked<LinearCategory>::reject(fail);
    }
    return Checked<LinearCategory>::accept(std::move(out));
}

LinearMap LinearSimpleTwisting::tilde_map(const LinearCategory& a, const LinearCategory& b, int x,
                                          int y, int z) const {
    auto it = tilde.find({x, y, z});
    if (it != tilde.end()) return it->second;
    int u = bracket.at({x, y, z});
    return LinearMap(a.dim(x, u) * b.dim(u, z), b.dim(x, y) * a.dim(y, z));
}

ValidationReport validate_linear_simple_twisting(const LinearCategory& a, const LinearCategory& b,
                                                 const LinearSimpleTwisting& st) {
    ValidationReport rep;
    if (a.objects != b.objects) {
        rep.add("lst/objects", {a.objects, b.objects}, "object counts differ");
        return rep;
    }
    const int n = a.objects;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto it = st.bracket.find({x, y, z});
                if (it == st.bracket.end() || it->second < 0 || it->second >= n) {
                    rep.add("lst/bracket", {x, y, z}, "bracket must be total with values in range");
                    return rep;
                }
            }
    for (const auto& [key, map] : st.tilde) {
        auto [x, y, z] = key;
        if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) {
            rep.add("lst/shape", {x, y, z}, "tilde key out of range");
            return rep;
        }
        int u = st.bracket.at(key);
        if (map.rows != a.dim(x, u) * b.dim(u, z) || map.cols != b.dim(x, y) * a.dim(y, z)) {
            rep.add("lst/shape", {x, y, z}, "tilde matrix has the wrong shape");
            return rep;
        }
    }
    auto br = [&](int x, int y, int z) { return st.bracket.at({x, y, z}); };

    // (i): pushing a composite of B through the twist.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t) {
                    int p = br(y, z, t), q = br(x, y, p);
                    LinearMap lhs = kron(LinearMap::identity(a.dim(x, q)), b.compose_map(q, p, t)) *
                                    kron(st.tilde_map(a, b, x, y, p), LinearMap::identity(b.dim(p, t))) *
                                    kron(LinearMap::identity(b.dim(x, y)), st.tilde_map(a, b, y, z, t));
                    LinearMap rhs = st.tilde_map(a, b, x, z, t) *
                                    kron(b.compose_map(x, y, z), LinearMap::identity(a.dim(z, t)));
                    if (q == br(x, z, t)) {
                        if (!(lhs == rhs)) rep.add("lst/i", {x, y, z, t}, "B-composite identity fails");
                    } else if (!lhs.is_zero() || !rhs.is_zero()) {
                        rep.add("lst/i-zero", {x, y, z, t},
                                "|xy|yzt|| != |xzt| but a side of the B-composite identity is nonzero");
                    }
                }
    // (ii): pushing a composite of A through the twist.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int t = 0; t < n; ++t) {
                    int p = br(x, y, z), q = br(p, z, t);
                    LinearMap lhs = kron(a.compose_map(x, p, q), LinearMap::identity(b.dim(q, t))) *
                                    kron(LinearMap::identity(a.dim(x, p)), st.tilde_map(a, b, p, z, t)) *
                                    kron(st.tilde_map(a, b, x, y, z), LinearMap::identity(a.dim(z, t)));
                    LinearMap rhs = st.tilde_map(a, b, x, y, t) *
                                    kron(LinearMap::identity(b.dim(x, y)), a.compose_map(y, z, t));
                    if (q == br(x, y, t)) {
                        if (!(lhs == rhs)) rep.add("lst/ii", {x, y, z, t}, "A-composite identity fails");
                    } else if (!lhs.is_zero() || !rhs.is_zero()) {
                        rep.add("lst/ii-zero", {x, y, z, t},
                                "||xyz|zt| != |xyt| but a side of the A-composite identity is nonzero");
                    }
                }
    // (iii) and (iv): units.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            LinearMap one_b = b.dim(x, x) > 0 ? column(b.identity[x]) : LinearMap(0, 1);
            LinearMap lhs3 = st.tilde_map(a, b, x, x, y) *
                             kron(one_b, LinearMap::identity(a.dim(x, y)));
            LinearMap rhs3 = kron(LinearMap::identity(a.dim(x, y)),
                                  b.dim(y, y) > 0 ? column(b.identity[y]) : LinearMap(0, 1));
            if (br(x, x, y) == y) {
                if (!(lhs3 == rhs3)) rep.add("lst/iii", {x, y}, "B-unit identity fails");
            } else if (!lhs3.is_zero() || !rhs3.is_zero()) {
                rep.add("lst/iii-zero", {x, y}, "|xxy| != y but a side of the B-unit identity is nonzero");
            }
            LinearMap one_a = a.dim(y, y) > 0 ? column(a.identity[y]) : LinearMap(0, 1);
            LinearMap lhs4 = st.tilde_map(a, b, x, y, y) *
                             kron(LinearMap::identity(b.dim(x, y)), one_a);
            LinearMap rhs4 = kron(a.dim(x, x) > 0 ? column(a.identity[x]) : LinearMap(0, 1),
                                  LinearMap::identity(b.dim(x, y)));
            if (br(x, y, y) == x) {
                if (!(lhs4 == rhs4)) rep.add("lst/iv", {x, y}, "A-unit identity fails");
            } else if (!lhs4.is_zero() || !rhs4.is_zero()) {
                rep.add("lst/iv-zero", {x, y}, "|xyy| != x but a side of the A-unit identity is nonzero");
            }
        }
    return rep;
}

Checked<LinearCategory> linear_twisted_product(const LinearCategory& a, const LinearCategory& b,
                                               const LinearSimpleTwisting& st) {
    ValidationReport rep = validate_linear_simple_twisting(a, b, st);
    if (!rep.ok()) return Checked<LinearCategory>::reject(rep);
    const int n = a.objects;

    LinearCategory out;
    out.objects = n;
    out.dims.resize(static_cast<std::size_t>(n) * n);
    // Block offset of summand u inside hom(x, y).
    auto offset = [&](int x, int y, int u) {
        int off = 0;
        for (int w = 0; w < u; ++w) off += a.dim(x, w) * b.dim(w, y);
        return off;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.dims[static_cast<std::size_t>(x) * n + y] = offset(x, y, n);

    for (int x = 0; x < n; ++x) {
        std::vector<Rational> one(out.dims[static_cast<std::size_t>(x) * n + x]);
        int off = offset(x, x, x);
        for (int i = 0; i < a.dim(x, x); ++i)
            for (int j = 0; j < b.dim(x, x); ++j)
                one[off + i * b.dim(x, x) + j] = a.identity[x][i] * b.identity[x][j];
        out.identity.push_back(std::move(one));
    }

    auto dimC = [&](int x, int y) { return out.dims[static_cast<std::size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (dimC(x, y) == 0 || dimC(y, z) == 0 || dimC(x, z) == 0) continue;
                LinearMap comp(dimC(x, z), dimC(x, y) * dimC(y, z));
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        int da1 = a.dim(x, u), db1 = b.dim(u, y);
                        int da2 = a.dim(y, v), db2 = b.dim(v, z);
                        if (da1 * db1 * da2 * db2 == 0) continue;
                        int w = st.bracket.at({u, y, v});
                        LinearMap t = st.tilde_map(a, b, u, y, v);
                        LinearMap ca = a.compose_map(x, u, w);
                        LinearMap cb = b.compose_map(w, v, z);
                        int offw = offset(x, z, w), off1 = offset(x, y, u), off2 = offset(y, z, v);
                        for (int i = 0; i < da1; ++i)
                            for (int j = 0; j < db1; ++j)
                                for (int i2 = 0; i2 < da2; ++i2)
                                    for (int j2 = 0; j2 < db2; ++j2) {
                                        int colc = (off1 + i * db1 + j) * dimC(y, z) +
                                                   (off2 + i2 * db2 + j2);
                                        for (int k1 = 0; k1 < a.dim(u, w); ++k1)
                                            for (int l1 = 0; l1 < b.dim(w, v); ++l1) {
                                                const Rational& tc =
                                                    t.at(k1 * b.dim(w, v) + l1, j * da2 + i2);
                                                if (tc.is_zero()) continue;
                                                for (int k = 0; k < a.dim(x, w); ++k)
                                                    for (int l = 0; l < b.dim(w, z); ++l) {
                                                        Rational coef =
                                                            tc *
                                                            ca.at(k, i * a.dim(u, w) + k1) *
                                                            cb.at(l, l1 * b.dim(v, z) + j2);
                                                        if (!coef.is_zero())
                                                            comp.at(offw + k * b.dim(w, z) + l,
                                                                    colc) += coef;
                                                    }
                                            }
                                    }
                    }
                out.compose[{x, y, z}] = std::move(comp);
            }

    out.drop_zero_compose_maps();
    ValidationReport check = validate_linear_category(out);
    if (!check.ok()) {
        ValidationReport fail;
        fail.add("lst/product-invalid", {}, "linear twisted product failed category validation");
        fail.merge(check);
        return Checked<LinearCategory>::reject(fail);
    }
    return Checked<LinearCategory>::accept(std::move(out));
}

}  // namespace twistcat
