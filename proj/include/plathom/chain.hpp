/// \file chain.hpp
/// Graded pieces of M(S) and 𝓜(S) = M/LM, the Koszul differential d₀, the
/// Uᵢ-action matrices, the edge maps d± between adjacent resolutions, and the
/// signed cube of a plat word.
///
/// Gradings: 𝔤𝔯_q(x_Z) = T₁(Z) − T₂(Z) + E(Z) + w(Z) at the vertex level; the
/// total complex shifts by |v| + n₊ − 2n₋ and δ = 𝔤𝔯_q(total) − 2|v| + 2n₋.

#pragma once

#include "plathom/cycles.hpp"
#include "plathom/diagram.hpp"
#include "plathom/linalg.hpp"

#include <map>
#include <memory>
#include <vector>

namespace plathom {

struct GradingData {
    int T1 = 0, T2 = 0, E = 0, w = 0;
    int gr_q() const { return T1 - T2 + E + w; }
};

GradingData grade_cycle(const SingularGraph& g, CycleMask Z);

/// Lexicographically smallest member of m's congruence class under the
/// rewrites U_{i(v)}U_{j(v)} <-> U_{k(v)}U_{l(v)} for v disjoint from Z.
Monomial canonical_monomial(const SingularGraph& g, CycleMask Z, const Monomial& m);

/// All degree-d canonical monomials in non-Z variables (sorted).
std::vector<Monomial> congruence_classes(const SingularGraph& g, CycleMask Z, int d);

/// Graded basis of M(S), built lazily downward from the top grading.  Basis
/// elements are pairs (Z, canonical monomial) with 𝔤𝔯_q(x_Z) − 2 deg = q.
class ModuleSlices {
  public:
    using BasisElem = std::pair<CycleMask, Monomial>;

    ModuleSlices(const SingularGraph& g, const CellComplex& cc);

    const SingularGraph& graph() const { return *g_; }
    const CellComplex& cellcx() const { return *cc_; }
    const std::vector<CycleMask>& cycles() const { return cycles_; }
    int grade(CycleMask Z) const { return grade_of_.at(Z); }
    int q_top() const { return q_top_; }

    void ensure(int q_min);
    int dim(int q);
    const std::vector<BasisElem>& basis(int q);
    /// Coordinates of a normalized FormalSum whose terms all lie in grading q.
    SVec coords(const FormalSum& s, int q);
    FormalSum element(int q, int idx);

  private:
    const SingularGraph* g_;
    const CellComplex* cc_;
    std::vector<CycleMask> cycles_;
    std::map<CycleMask, int> grade_of_;
    int q_top_ = 0;
    int built_down_to_ = 0;  ///< all slices with q >= this value exist
    std::map<int, std::vector<BasisElem>> basis_;
    std::map<int, std::map<BasisElem, int>> index_;
    std::map<CycleMask, std::vector<std::vector<Monomial>>> canon_by_degree_;
};

/// Quotient presentations of 𝓜(S)_q = M(S)_q / span(L_v · M(S)_{q+2}).
class ScriptM {
  public:
    explicit ScriptM(ModuleSlices& ms) : ms_(&ms) {}

    ModuleSlices& slices() { return *ms_; }
    void ensure(int q_min);
    const QuotientPresentation& pres(int q);
    int dim(int q);
    /// Coordinates of a normalized FormalSum in the quotient basis at q.
    SVec coords(const FormalSum& s, int q);
    /// Ambient representative (as a FormalSum) of quotient basis vector k.
    FormalSum rep(int q, int k);

  private:
    ModuleSlices* ms_;
    std::map<int, QuotientPresentation> pres_;
};

/// sum of sign * (U_e . s) over (edge, sign) pairs, normalized.
FormalSum apply_linear(const SingularGraph& g, const CellComplex& cc, const FormalSum& s,
                       const std::vector<std::pair<int, int>>& terms);

/// L_{w_i±} = cap i in-edges minus cup i out-edges; L'_{w_i±} = all plus.
std::vector<std::pair<int, int>> closing_L(const SingularGraph& g, int i);
std::vector<std::pair<int, int>> closing_L_prime(const SingularGraph& g, int i);
/// L_v = U_{i(v)} + U_{j(v)} − U_{k(v)} − U_{l(v)} for 4-valent v.
std::vector<std::pair<int, int>> vertex_L(const SingularGraph& g, int v);

/// One cube vertex (or a standalone resolution): graph, cells, module slices.
struct VertexData {
    SingularGraph g;
    CellComplex cc;
    std::unique_ptr<ModuleSlices> ms;
    std::unique_ptr<ScriptM> sm;

    explicit VertexData(SingularGraph graph);
    VertexData(const VertexData&) = delete;  // ms/sm point into g/cc

    /// dim C_q = 2^n_pairs · dim 𝓜_q (the Koszul factor has 2^n states).
    int cdim(int q);
    /// Basis index of (ε, 𝓜-basis index m) in C_q.
    int cindex(unsigned eps, int m, int q);
};

/// d₀ on C = 𝓜 ⊗ K: the block for Koszul factor i flips ε_i, multiplying by
/// L_{w_i} (1→0) or L'_{w_i} (0→1), with sign (−1)^{#{j<i: ε_j=1}}.
/// Matrix from C_q to C_{q−2}.
Mat koszul_d0(VertexData& V, int q);

/// Multiplication by U_e (identity on the Koszul factor): C_q → C_{q−2}.
Mat u_action_matrix(VertexData& V, int e, int q);

/// The full cube of resolutions of a plat word.
struct Cube {
    PlatWord word;
    int N = 0;  ///< number of crossings
    int n_plus = 0, n_minus = 0;
    std::vector<std::unique_ptr<VertexData>> verts;  ///< indexed by cube vertex bitmask

    int height(unsigned u) const { return __builtin_popcount(u); }
    /// 𝔤𝔯_q(total) − 𝔤𝔯_q(vertex-level) at cube vertex u.
    int shift(unsigned u) const { return height(u) + n_plus - 2 * n_minus; }
    /// Cube edge sign (−1)^{Σ_{j<c} u_j}.
    int edge_sign(unsigned u, int c) const;
    /// 4-valent vertex of crossing c in verts[u].g (bit must be singular).
    int crossing_vertex(unsigned u, int c) const;
};

Cube build_cube(const PlatWord& w);

/// Unsigned edge map d± (identity on the Koszul factor) from C(u)_q to
/// C(u|1<<c)_{q−1} in vertex-level gradings; d⁺ for a positive crossing,
/// d⁻ for a negative one.
Mat edge_matrix(Cube& cube, unsigned u, int c, int q);

/// d⁻ / d⁺ on a single normalized module term, for tests and the assembly.
/// src/dst are the singular/smooth (d⁻) or smooth/singular (d⁺) vertex data.
FormalSum edge_minus_term(VertexData& sing, VertexData& smooth, int v4, const Term& t);
FormalSum edge_plus_term(VertexData& smooth, VertexData& sing, int v4, const Term& t);

/// Transfer a cycle between two resolutions of the same word differing at
/// smoothed/singularized crossings: the target cycle covering the same
/// (column, band) set.  Throws if the coverage does not transfer.
CycleMask transfer_cycle(const SingularGraph& src, const SingularGraph& dst, CycleMask Z);

/// Edge of dst covering the same (column, lowest band) point as src edge e.
int transfer_edge(const SingularGraph& src, const SingularGraph& dst, int e);

}  // namespace plathom
