#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twistcat/category.hpp"
#include "twistcat/twisting.hpp"
#include "twistcat/validation.hpp"

namespace twistcat {

// The twisted tensor product A (x)_R B. Its morphisms are the triples
// (u, g, f) with g in hom_A(x, u) and f in hom_B(u, y), given dense ids
// in ascending lexicographic (u, g, f) order; `tagging` maps a product
// morphism id back to its triple.
struct TwistedProduct {
    FiniteCategory category;
    Functor alpha;  // A -> category, g |-> (g, 1)
    Functor beta;   // B -> category, f |-> (1, f)
    std::vector<std::array<int, 3>> tagging;

    std::optional<int> id_of(int u, int g, int f) const;
};

// Composition is routed through R:
//   (g, f) o (g', f') = (g o g1, f1 o f')   where (w, g1, f1) = R(f, g').
// Works for any valid twisting system, simple or not; the result is
// re-validated as a category instead of trusting the construction.
Checked<TwistedProduct> twisted_tensor_product(const FiniteCategory& a, const FiniteCategory& b,
                                               const TwistingSystem& r);

// phi on each hom-set sends (g, f) to g o f, composed in C. Present iff
// every phi is a bijection onto hom_C.
struct Factorization {
    // Sorted ascending by (u, g, f); entries {u, g, f, c} with c = g o f.
    std::vector<std::array<int, 4>> phi;
    // C morphism id -> (u, g, f); the inverse map psi.
    std::vector<std::array<int, 3>> psi;
};

std::optional<Factorization> check_factorization(const FiniteCategory& c,
                                                 const std::vector<int>& a_subset,
                                                 const std::vector<int>& b_subset);

// The twisting system R(f, g) = psi(f o g) of a category factorized
// through two wide subcategories, expressed over the re-indexed
// subcategories. The output is re-validated before being returned.
struct DerivedTwisting {
    FiniteCategory cat_a;
    Functor incl_a;
    FiniteCategory cat_b;
    Functor incl_b;
    TwistingSystem twist;
};

Checked<DerivedTwisting> derive_twisting(const FiniteCategory& c, const std::vector<int>& a_subset,
                                         const std::vector<int>& b_subset);

// Derives through the images of alpha and beta and translates the result
// back to the morphism ids of the original factors, so that deriving
// from twisted_tensor_product(a, b, r) returns r entrywise.
Checked<TwistingSystem> derive_twisting_via_product(const TwistedProduct& p,
                                                    const FiniteCategory& a,
                                                    const FiniteCategory& b);

// Closed-form inverse of (g, f) in the bicrossed product of a matched
// pair of groupoids:
//   g' = f^-1 |> g^-1,   f' = [f <| g'] ^-1.
// Takes and returns (u, g, f) triples in the product tagging.
Checked<std::array<int, 3>> bicrossed_groupoid_inverse(const FiniteCategory& a,
                                                       const FiniteCategory& b,
                                                       const MatchedPair& mp,
                                                       std::array<int, 3> morphism);

// Semidirect product of a category with a monoid acting on its hom-sets.
// `monoid` must be a one-object category; action[b][g] gives b |> g. The
// action axioms are validated, then the matched pair with trivial right
// action is built and handed to twisted_tensor_product. The inflated
// copy of the monoid (one copy per object of A) is returned alongside.
struct SemidirectProduct {
    TwistedProduct product;
    FiniteCategory inflated_monoid;
    MatchedPair pair;
};

Checked<SemidirectProduct> semidirect_product(const FiniteCategory& a,
                                              const FiniteCategory& monoid,
                                              const std::vector<std::vector<int>>& action);

}  // namespace twistcat
