#pragma once

// Shared fixtures and independent oracles for the test suites. The
// oracles here deliberately avoid the library's optimized paths: group
// isomorphism is a raw bijection search, bracket enumeration a raw
// assignment sweep.

#include <string>
#include <vector>

#include "twistcat/category.hpp"
#include "twistcat/linear.hpp"
#include "twistcat/thin.hpp"
#include "twistcat/twisting.hpp"

namespace twistcat::test {

// The two-object groupoid of the final example: morphisms
// 0 = Id_0, 1 = Id_1, 2 = u in hom(0,1), 3 = u^-1 in hom(1,0).
FiniteCategory involution_groupoid();

// Its unique twisting system against itself, built from the bracket
// |010| = 1, |101| = 0, |xxy| = y, |xyy| = x.
BracketFunction involution_bracket();

FiniteCategory discrete_category(int n);

// A pair (A, B) on three objects whose free twisting entries are fully
// unconstrained: A has parallel arrows g, g~ in hom(1,2) and k in
// hom(0,2); B has f in hom(0,1) and parallel h, h~ in hom(0,2). Every
// assignment of the two free pairs is a valid system, so non-simple
// systems exist here.
struct ParallelPair {
    FiniteCategory a;
    FiniteCategory b;
};
ParallelPair parallel_pair_categories();

std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> klein_table();
// S3 on basis r^i s^j, index i*2+j, with s r s = r^-1.
std::vector<std::vector<int>> s3_table();
// S3 on basis s^j r^i, index j*3+i.
std::vector<std::vector<int>> s3_table_sr();

// Brute-force isomorphism search between multiplication tables.
bool tables_isomorphic(const std::vector<std::vector<int>>& t1,
                       const std::vector<std::vector<int>>& t2);

// All labeled posets on n elements, as relation pair lists.
std::vector<std::vector<std::pair<int, int>>> all_posets(int n);

// Oracle: every function T -> S accepted by validate_bracket, found by
// exhaustive assignment (no propagation).
std::vector<BracketFunction> brute_force_brackets(const FiniteCategory& a,
                                                  const FiniteCategory& b);

// Group algebra of a multiplication table as a (group-like) bialgebra.
Bialgebra group_bialgebra(const std::vector<std::vector<int>>& table, int unit);

// Q[x]/(x^2) on basis {1, x}.
Algebra poly_trunc_algebra();

// Twisting map of two one-object matched-pair actions:
// R(t^j (x) a^i) = (lact applied) (x) t^j, for Set-style permutation
// actions given as act[j][i] = index of t^j |> a^i.
LinearMap permutation_twist(int na, int nb, const std::vector<std::vector<int>>& act);

}  // namespace twistcat::test
