/// \file homology.hpp
/// Windowed graded homology with class representatives, the vertex-level
/// homology H(C(S), d₀) with the free-module certificate, the E₂ page of
/// H₁₊₁, the δ-graded total homology H₁₋₁, and the executable MOY /
/// invariance / composition-product checks.
///
/// All windows carry a boundary-vanishing certificate: homology must vanish
/// on the two outermost gradings of each end of the window, otherwise
/// "window too small" is thrown (ledger 15).

#pragma once

#include "plathom/chain.hpp"
#include "plathom/graded.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace plathom {

/// Homology at one grading: an echelon span holding the boundary rows first
/// (n_bound of them) and then one reduced cycle row per homology class.
struct HomologyPresentation {
    int ambient = 0;
    EchelonBasis span{0};
    int n_bound = 0;

    int dim() const { return span.rank() - n_bound; }
    /// Ambient cycle representing class k.
    const SVec& rep(int k) const { return span.basis_row(n_bound + k); }
    /// Class coordinates of a cycle x; throws if x is not in ker d.
    SVec project(const SVec& x) const;
};

/// H = ker(d_out) / im(d_in); d_in columns are vectors in the same ambient
/// space as d_out's domain.
HomologyPresentation homology_presentation(const Mat& d_out, const Mat& d_in);

/// Homology of a complex with differential of degree −2 over the window
/// [q_lo, q_hi].  diff(q) maps C_q → C_{q−2}; slices above q_hi are treated
/// as zero.  Asserts d² = 0 on the window and the boundary-vanishing
/// certificate at {q_hi, q_hi−1, q_lo, q_lo+1}.
GradedDims graded_homology(int q_lo, int q_hi, const std::function<int(int)>& dim,
                           const std::function<Mat(int)>& diff,
                           std::map<int, HomologyPresentation>* pres = nullptr);

/// H(C(S), d₀) of a single resolution, in vertex-level quantum gradings.
struct VertexHomology {
    int k = 0;          ///< circles of the unoriented smoothing
    GradedDims local;   ///< vertex-level q dims (no cube shift)
    std::map<int, HomologyPresentation> pres;
};
VertexHomology vertex_homology(VertexData& V, int margin = 4);

/// Free-module certificate: dim H = binomial distribution {k−2t: C(k,t)} and
/// the square-free U-monomials in one edge per circle, applied to the top
/// class, form a basis in every grading.
struct ModuleReport {
    bool binomial_ok = false;
    bool free_ok = false;
    std::string detail;
};

struct ResolutionResult {
    int k = 0;
    int shift = 0;       ///< |v| + n₊ − 2 n₋ (link-diagram signs)
    GradedDims dims;     ///< shifted quantum dims of H(S)
    ModuleReport report;
};
ResolutionResult resolution_homology(const SingularGraph& g, int margin = 4);

/// U-action identities on H(S): U_i = −U_j for the two in-edges and the two
/// out-edges of every 4-valent vertex, cup, and cap; U_e² = 0; and all edges
/// of one smoothed circle act equal up to that sign rule.
struct UActionReport {
    bool ok = false;
    std::string detail;
};
UActionReport u_action_identities(const SingularGraph& g, int margin = 4);

/// E₂ page of H₁₊₁: homology of (⊕_u H(C(u), d₀), d₁*), reported at
/// (h = |u| − n₋, q_total).  Asserts (d₁*)² = 0.
BigradedDims e2_page(const PlatWord& w, int margin = 4);

/// δ-graded total homology H₁₋₁ of (C, d₀ + d₁); δ = q_local − |u| + n₊.
GradedDims total_homology(const PlatWord& w, int margin = 4);

struct CheckReport {
    bool ok = false;
    std::string detail;
    GradedDims lhs, rhs;
};

/// MOY relations as graded-dimension identities, shift-normalized through the
/// free-module theorem (ledger 10, 11, 19).  kind: 0 = disjoint circle,
/// 1 = MOY I, 2 = MOY II (site = singular crossing index), 3 = MOY III
/// (site = first crossing of an all-singular braid-relation triple).
CheckReport moy_check(int kind, const PlatWord& w, const ResolutionVector& v, int site,
                      int margin = 4);

/// δ-graded H₁₋₁ equality across a plat move.  move: "RI", "RII", "RIII",
/// "twist_top", "twist_bottom", "cap_swap", "cup_swap"; site is the pair
/// index (twists/swaps), insertion position (RII) or crossing index (RIII).
CheckReport invariance_check(const std::string& move, const PlatWord& w, int site,
                             int margin = 4);

/// Lemma "compproduct": H(S)_q ≅ ⊕_Z H₁^±(b(S−Z)) {T₁(Z) − T₂(Z) + w(Z)}
/// in vertex-level quantum gradings.
CheckReport composition_product_check(const SingularGraph& g, int margin = 4);

}  // namespace plathom
