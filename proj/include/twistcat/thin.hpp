#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "twistcat/category.hpp"
#include "twistcat/product.hpp"
#include "twistcat/twisting.hpp"
#include "twistcat/validation.hpp"

namespace twistcat {

// Between thin categories a twisting system is determined by a bracket
// function on T, the triples (x, y, z) with hom_B(x, y) and hom_A(y, z)
// both nonempty. Values off T are never stored.
struct BracketFunction {
    std::set<Triple> t;
    std::map<Triple, int> values;

    bool operator==(const BracketFunction&) const = default;
};

// The triples with a nonempty hom product. Errors if either category is
// not thin.
Checked<std::set<Triple>> compute_T(const FiniteCategory& a, const FiniteCategory& b);

// Bracket conditions for thin categories:
//   (i)   nonemptiness transport to hom_A(x,|xyz|) x hom_B(|xyz|,z)
//   (ii)  |xy|yzt|| = |xzt|
//   (iii) ||xyz|zt| = |xyt|
//   (iv)  |xxy| = y
//   (v)   |xyy| = x
// Values off T (or missing on T) are reported as malformed.
ValidationReport validate_bracket(const FiniteCategory& a, const FiniteCategory& b,
                                  const BracketFunction& bf);

// All valid bracket functions on T, canonically ordered. Values forced
// by (iv)/(v) are seeded before branching.
std::vector<BracketFunction> enumerate_brackets(const FiniteCategory& a, const FiniteCategory& b,
                                                std::uint64_t limit = 100'000'000);

// The bijection of the thin classification:
//   R(f, g) = (the arrow of hom_A(x,|xyz|), the arrow of hom_B(|xyz|,z)).
TwistingSystem bracket_to_twisting(const FiniteCategory& a, const FiniteCategory& b,
                                   const BracketFunction& bf);
BracketFunction twisting_to_bracket(const FiniteCategory& a, const FiniteCategory& b,
                                    const TwistingSystem& r);

// The category C(S, T, |...|): hom(x, y) = { u | hom_A(x,u), hom_B(u,y)
// nonempty }, composition u o v = |uyv|, identity of x is x itself.
// Isomorphic to the twisted tensor product of the same bracket; the
// isomorphism (and the product it lands in) are returned.
struct CstResult {
    FiniteCategory category;
    TwistedProduct product;
    Functor to_product;
};

Checked<CstResult> construct_CST(const FiniteCategory& a, const FiniteCategory& b,
                                 const BracketFunction& bf);

}  // namespace twistcat
