#pragma once

#include <map>
#include <vector>

#include "twistcat/rational.hpp"
#include "twistcat/twisting.hpp"
#include "twistcat/validation.hpp"

namespace twistcat {

// Dense matrix of exact rationals, row-major. Zero-dimensional shapes
// are legal and behave as the corresponding zero objects.
//
// Tensor index convention, used everywhere and in the file formats: in a
// product X (x) Y the X factor is the slow (outer) index, so basis
// vector e_i (x) e_j of X (x) Y has index i * dim(Y) + j.
struct LinearMap {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    LinearMap() = default;
    LinearMap(int rows_, int cols_)
        : rows(rows_), cols(cols_), a(static_cast<std::size_t>(rows_) * cols_) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static LinearMap identity(int n);
    static LinearMap flip(int dx, int dy);  // X (x) Y -> Y (x) X

    LinearMap operator*(const LinearMap& o) const;
    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    bool is_zero() const;

    bool operator==(const LinearMap&) const = default;
};

LinearMap kron(const LinearMap& x, const LinearMap& y);

// e_i e_j = sum_k mult[i][j][k] e_k; the unit is a coordinate vector.
struct Algebra {
    int dim = 0;
    std::vector<Rational> mult;  // dim^3, index ((i*dim)+j)*dim+k
    std::vector<Rational> unit;  // dim

    Algebra() = default;
    explicit Algebra(int dim_)
        : dim(dim_), mult(static_cast<std::size_t>(dim_) * dim_ * dim_), unit(dim_) {}

    Rational& m(int i, int j, int k) {
        return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const Rational& m(int i, int j, int k) const {
        return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    LinearMap mult_map() const;  // dim x dim^2
    LinearMap unit_map() const;  // dim x 1

    bool operator==(const Algebra&) const = default;
};

// Delta(e_k) = sum_{i,j} comult[k][i][j] e_i (x) e_j.
struct Coalgebra {
    int dim = 0;
    std::vector<Rational> comult;  // dim^3, index ((k*dim)+i)*dim+j
    std::vector<Rational> counit;  // dim

    Coalgebra() = default;
    explicit Coalgebra(int dim_)
        : dim(dim_), comult(static_cast<std::size_t>(dim_) * dim_ * dim_), counit(dim_) {}

    Rational& c(int k, int i, int j) {
        return comult[(static_cast<std::size_t>(k) * dim + i) * dim + j];
    }
    const Rational& c(int k, int i, int j) const {
        return comult[(static_cast<std::size_t>(k) * dim + i) * dim + j];
    }
    LinearMap comult_map() const;  // dim^2 x dim
    LinearMap counit_map() const;  // 1 x dim

    bool operator==(const Coalgebra&) const = default;
};

struct Bialgebra {
    Algebra alg;
    Coalgebra coa;

    int dim() const { return alg.dim; }
    bool operator==(const Bialgebra&) const = default;
};

// A K-linear category with finitely many objects and finite-dimensional
// hom-spaces, as composition structure constants. Composition maps are
// stored for triples whose three hom dimensions are all positive; the
// rest are zero maps by convention.
struct LinearCategory {
    int objects = 0;
    std::vector<int> dims;  // objects x objects, dims[x*objects+y] = dim hom(x,y)
    std::map<Triple, LinearMap> compose;          // (x,y,z): hom(x,z) x (hom(x,y)*hom(y,z))
    std::vector<std::vector<Rational>> identity;  // per object, a vector in hom(x,x)

    int dim(int x, int y) const { return dims[static_cast<std::size_t>(x) * objects + y]; }
    LinearMap compose_map(int x, int y, int z) const;  // explicit, zero where absent

    // Canonical form never stores an all-zero composition map.
    void drop_zero_compose_maps();

    bool operator==(const LinearCategory&) const = default;
};

// An action of a bialgebra H on every hom-space of a linear category,
// with composition and identities H-linear.
struct ModuleAction {
    Bialgebra h;
    LinearCategory cat;
    std::map<std::pair<int, int>, LinearMap> action;  // (x,y): hom(x,y) x (dim H * hom(x,y))

    LinearMap action_map(int x, int y) const;

    bool operator==(const ModuleAction&) const = default;
};

enum class LinearKind { Algebra, Coalgebra, Bialgebra, LinearCategory, ModuleCategory };

// Every defining identity, checked exactly over the rationals. Shape
// defects are reported before (and instead of) axiom failures.
ValidationReport validate_algebra(const Algebra& a);
ValidationReport validate_coalgebra(const Coalgebra& c);
ValidationReport validate_bialgebra(const Bialgebra& b);
ValidationReport validate_linear_category(const LinearCategory& c);
ValidationReport validate_module_category(const ModuleAction& act);

// Twisting map axioms for R: B (x) A -> A (x) B between algebras:
//   (fm1) R(b (x) A)    = (A (x) b)(R (x) B)(B (x) R)
//   (fm2) R(B (x) a)    = (a (x) B)(A (x) R)(R (x) A)
//   (fm3) R(1_B (x) A)  = A (x) 1_B
//   (fm4) R(B (x) 1_A)  = 1_A (x) B
ValidationReport validate_twisting_map(const Algebra& a, const Algebra& b, const LinearMap& r);

// Algebra on A (x) B with multiplication (a (x) b)(A (x) R (x) B). The
// result is independently re-validated for associativity and units.
Checked<Algebra> twisted_tensor_algebra(const Algebra& a, const Algebra& b, const LinearMap& r);

// Splitting of a coalgebra map f: C -> D1 (x) D2 into
// f1 = (D1 (x) eps)f and f2 = (eps (x) D2)f, and its converse.
struct SplitMaps {
    LinearMap f1;
    LinearMap f2;
};
Checked<SplitMaps> split_coalgebra_map(const Coalgebra& c, const Coalgebra& d1,
                                       const Coalgebra& d2, const LinearMap& f);
Checked<LinearMap> assemble_coalgebra_map(const Coalgebra& c, const Coalgebra& d1,
                                          const Coalgebra& d2, const LinearMap& f1,
                                          const LinearMap& f2);

bool is_coalgebra_map(const Coalgebra& c, const Coalgebra& d, const LinearMap& f);

// The tensor-product coalgebra D1 (x) D2 (flip braiding).
Coalgebra tensor_coalgebra(const Coalgebra& d1, const Coalgebra& d2);

// Double cross product A |><| B of a matched pair of bialgebras, with
// left: B (x) A -> A and right: B (x) A -> B. The matched-pair axioms
// (coalgebra maps, module laws, the symmetry condition and the four
// compatibility identities) are validated first; violations carry the
// offending equation tag.
Checked<Bialgebra> double_cross_product(const Bialgebra& a, const Bialgebra& b,
                                        const LinearMap& left, const LinearMap& right);

// Smash product A # H: hom(x,y) = hom_A(x,y) (x) H with
//   (f (x) h)(f' (x) h') = sum f (h_(1) . f') (x) h_(2) h'.
Checked<LinearCategory> smash_product(const ModuleAction& act);

// One-object linear categories and the diagonal inflation used by the
// smash product.
LinearCategory one_object_category(const Algebra& a);
LinearCategory diagonal_category(const Algebra& a, int objects);

// Tilde maps of a linear simple twisting: per triple (x, y, z), a map
// hom_B(x,y) (x) hom_A(y,z) -> hom_A(x,|xyz|) (x) hom_B(|xyz|,z).
// Absent entries are zero maps.
struct LinearSimpleTwisting {
    std::map<Triple, int> bracket;    // total on S^3
    std::map<Triple, LinearMap> tilde;

    LinearMap tilde_map(const LinearCategory& a, const LinearCategory& b, int x, int y,
                        int z) const;
};

// Conditions of the linear classification: for each (x, y, z, t), when
// the relevant bracket equality holds the corresponding compatibility
// identity must hold as matrices; when it fails, both sides must be
// zero maps.
ValidationReport validate_linear_simple_twisting(const LinearCategory& a, const LinearCategory& b,
                                                 const LinearSimpleTwisting& st);

// The twisted tensor product of linear categories along a simple
// twisting: hom(x,y) = sum_u hom_A(x,u) (x) hom_B(u,y), basis blocks in
// ascending u. Validated before being returned.
Checked<LinearCategory> linear_twisted_product(const LinearCategory& a, const LinearCategory& b,
                                               const LinearSimpleTwisting& st);

}  // namespace twistcat
