/// \file cycles.hpp
/// Cycle enumeration and the disk calculus of §3.2: minimal disks D(Z, e_i)
/// and D(Z, v), disk coefficients U(D), the cycle-push action of U_i, the
/// vertex operator f_v, and formal sums with the action-normal form.
///
/// Cycles are edge subsets (bitmask) forming n disjoint bottom-to-top paths.

#pragma once

#include "plathom/diagram.hpp"
#include "plathom/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace plathom {

using CycleMask = std::uint64_t;

/// All cycles of the closed resolution, deterministic order.
std::vector<CycleMask> enumerate_cycles(const SingularGraph& g);

/// Independent transfer-matrix oracle: counts cycles by a level-by-level
/// occupancy DP (no path enumeration).
long cycle_count_oracle(const SingularGraph& g);

/// Exponent vector over edge variables.
struct Monomial {
    std::vector<std::uint16_t> e;

    explicit Monomial(int nedges = 0) : e(static_cast<size_t>(nedges), 0) {}
    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }
    /// True if some variable of an edge in Z has positive exponent.
    bool touches(CycleMask z) const;
};

struct Disk {
    int v_b = -1, v_t = -1;
    std::vector<int> left_path;   ///< edges of Z, bottom to top
    std::vector<int> right_path;  ///< edges of S, bottom to top
    std::vector<int> cell_set;    ///< sorted cell ids
    std::vector<int> in_edges;    ///< I(D)
    std::vector<int> out_edges;   ///< O(D)
};

/// Smallest disk of the family D(Z, e_i); none if the family is empty.
/// Asserts the intersection property (cell_set contained in every member).
std::optional<Disk> minimal_disk(const SingularGraph& g, const CellComplex& cc, CycleMask Z, int ei);

/// Same for the vertex family D(Z, v); requires v on Z.
std::optional<Disk> minimal_disk_vertex(const SingularGraph& g, const CellComplex& cc, CycleMask Z,
                                        int v);

/// U(D): product of variables over I(D) ∪ O(D).
Monomial disk_coefficient(const SingularGraph& g, const Disk& d);

struct PushResult {
    enum Kind { Unchanged, Zero, Pushed } kind = Unchanged;
    Monomial coeff;
    CycleMask target = 0;
};

/// Module action of U_{e_i} on x_Z (§3.2 case list).
PushResult apply_U(const SingularGraph& g, const CellComplex& cc, CycleMask Z, int ei);

/// Vertex operator f_v on x_Z.  Kind Unchanged ("diagonal") means multiply by
/// U_{i(v)} U_{j(v)}; Pushed/Zero are the disk cases for v on Z.
PushResult apply_fv(const SingularGraph& g, const CellComplex& cc, CycleMask Z, int v);

/// A term c * m * x_Z with a raw (uncanonicalized) monomial m.
struct Term {
    Rat c;
    Monomial m;
    CycleMask z;
    bool operator==(const Term& o) const { return c == o.c && m == o.m && z == o.z; }
};
using FormalSum = std::vector<Term>;

/// Action-normal form: repeatedly applies the module action until no term's
/// monomial touches its own cycle, then combines like terms.
FormalSum normalize(const SingularGraph& g, const CellComplex& cc, FormalSum s);

/// s := U_e . s (module action), normalized.
FormalSum mult_U(const SingularGraph& g, const CellComplex& cc, const FormalSum& s, int e);

/// s := f_v(s), normalized.
FormalSum mult_fv(const SingularGraph& g, const CellComplex& cc, const FormalSum& s, int v);

/// 0 = none, 1 = one incoming + one outgoing edge of v lies in Z.
/// Throws if Z meets v in any other pattern.
int cycle_at_vertex(const SingularGraph& g, CycleMask Z, int v);

/// True if some edge of Z is incident to vertex u.
bool vertex_on_cycle(const SingularGraph& g, CycleMask Z, int u);

}  // namespace plathom
