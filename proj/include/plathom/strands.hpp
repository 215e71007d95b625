/// \file strands.hpp
/// The strands algebra A_n of weighted monotone bijections (paper §4.1.1),
/// its quotient 𝒜_n by the two-sided ideal (R_i R_{i-1}, L_{i-1} L_i)
/// (paper §7), the interval-state algebra ℬ'(2n+1, n) realized through the
/// state map, and the isomorphism check for h : ℬ̄'(2n+1, n) → 𝒜_n.
///
/// Subsets of [2n] are bitmasks: bit (i-1) set means element i is present.
/// A monotone bijection is determined by its source/target subsets, so a
/// basis element of A_n is (u-exponent vector, source mask, target mask).

#pragma once

#include "plathom/linalg.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace plathom {

/// One weighted-bijection term c * u^e * P with P : s1 -> s2.
struct StrandsTerm {
    Rat c;
    std::vector<int> u;  ///< exponents of u_1 .. u_{2n}
    unsigned s1 = 0;     ///< source subset of [2n]
    unsigned s2 = 0;     ///< target subset of [2n]
};

/// Canonicalized rational combination of weighted monotone bijections.
/// The vanishing rule (forced by R4+R5, see spec design decision and the
/// module's open question): a term u^m (s -> t) is zero when it lies in the
/// two-sided ideal generated by the crowded relations u_i iota_S = 0 for
/// {i, i+1} ⊆ S; concretely, when m covers e_i plus the weight of factoring
/// the bijection through some crowded state.  The endpoint-only rule is a
/// special case but is not product-closed and fails associativity at n = 2.
struct StrandsElement {
    int n = 0;  ///< subsets live in [2n]
    std::vector<StrandsTerm> terms;

    bool is_zero() const { return terms.empty(); }
};

bool strands_equal(const StrandsElement& a, const StrandsElement& b);
StrandsElement strands_zero(int n);
StrandsElement strands_add(const StrandsElement& a, const StrandsElement& b);
StrandsElement strands_scale(const StrandsElement& a, const Rat& c);

/// Concatenation product with the u^{alpha_i} weights:
///   alpha_i = #{j : max{j, P2(P1(j))} <= i <  P1(j)}   (strand peaks over i)
///           + #{j : min{j, P2(P1(j))} >  i >= P1(j)}   (strand dips under i)
/// (dip condition corrected from the printed text; decisions ledger 3).
StrandsElement multiply(const StrandsElement& a, const StrandsElement& b);

/// --- generators (paper §4.1.1) ---
StrandsElement iota(int n, unsigned S);          ///< idempotent, |S| = n
StrandsElement strands_one(int n);               ///< sum of all idempotents
StrandsElement iota_containing(int n, int i);    ///< iota_i = sum_{S ∋ i} iota_S
StrandsElement gen_R(int n, int i);              ///< R_i, 1 <= i <= 2n-1
StrandsElement gen_L(int n, int i);              ///< L_i, 1 <= i <= 2n-1
StrandsElement gen_u(int n, int i);              ///< u_i, 1 <= i <= 2n
StrandsElement rho(int n, int i, int j);         ///< R_i R_{i+1} ... R_{j-1}, i < j
StrandsElement delta_elt(int n, int j, int i);   ///< L_{j-1} L_{j-2} ... L_i, j > i

struct SuiteReport {
    bool ok = true;
    int checked = 0;
    std::string detail;  ///< first few violation witnesses
};

/// Exhaustive check of relations R1-R5 plus the derived vanishing
/// u_i iota_S = 0 for {i, i+1} ⊆ S, with u-powers up to degree_bound.
SuiteReport relation_suite(int n, int degree_bound);

/// (a b) c == a (b c) over all triples from the generator list extended by
/// the quadratic u-monomials (u-degree of any triple product <= 3+...).
SuiteReport associativity_suite(int n);

/// Quotient 𝒜_n = A_n / (R_i R_{i-1}, L_{i-1} L_i : 2 <= i <= 2n-1),
/// computed as a breadth-first rewriting closure: the echelon span of every
/// ideal element u^m · P · g · Q whose terms stay within the u-degree bound.
/// No confluence claim; the closure is exhaustive within the bound.
class AnQuotient {
  public:
    AnQuotient(int n, int degree_bound);

    /// Canonical representative of a + ideal; idempotent.
    /// Throws "degree bound exceeded" if a has a term above the bound.
    StrandsElement normal_form(const StrandsElement& a) const;

    int dim() const;          ///< dim of the quotient at u-degree <= bound
    int ambient_dim() const;  ///< basis count of A_n at u-degree <= bound
    int degree_bound() const { return bound_; }
    int n() const { return n_; }

    SVec to_vec(const StrandsElement& a) const;
    StrandsElement from_vec(const SVec& v) const;

  private:
    int n_;
    int bound_;
    std::vector<std::tuple<std::vector<int>, unsigned, unsigned>> cols_;
    std::map<std::tuple<std::vector<int>, unsigned, unsigned>, int> index_;
    EchelonBasis ideal_;
};

/// Local state for ℬ'(m, k): bit (i-1) set means the midpoint i + 1/2 is
/// in x (1 <= i <= m-1); i.e. x ⊂ {3/2, 5/2, ..., m - 1/2}.
struct LocalState {
    int m = 0;
    unsigned mask = 0;
};

/// S_x = {i : i + 1/2 ∉ x} ⊂ [2n] for m = 2n+1; throws on size mismatch.
unsigned state_map(const LocalState& x);

/// Verifies the §7 isomorphism h : ℬ̄'(2n+1, n) → 𝒜_n on the generators
/// h(I_x) = iota_{S_x}, h(R'_i) = L_{i-1}, h(L'_i) = R_{i-1},
/// h(u_i a) = u_{i-1} a: images of relations B1-B4, and a bounded-degree
/// dimension count (the multiplicative closure of the images spans 𝒜_n).
SuiteReport iso_check(int n, int degree_bound);

}  // namespace plathom
