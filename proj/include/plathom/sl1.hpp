/// \file sl1.hpp
/// The 𝔰𝔩₁ complexes of §5.2 for braid closures b(S−Z): bivalent and
/// 4-valent vertex matrix factorizations, tensored with Koszul signs, and the
/// two-stage homology H₁^± = H(H(C₁, d₀₊), d₀₋*).

#pragma once

#include "plathom/cycles.hpp"
#include "plathom/diagram.hpp"
#include "plathom/graded.hpp"
#include "plathom/linalg.hpp"

#include <vector>

namespace plathom {

/// One tensor factor of C₁(S).  Variables are re-indexed edges of the closed
/// diagram; `ei,ej` are the in/out edges of a bivalent vertex, `ei,ej,ek,el`
/// the (i,j,k,l) roles of a 4-valent vertex.
struct Sl1Factor {
    bool four = false;
    int ei = -1, ej = -1, ek = -1, el = -1;
};

struct Sl1Complex {
    int nvars = 0;
    std::vector<Sl1Factor> factors;
};

/// b(S−Z): delete the edges of Z; 4-valent vertices crossed by Z become
/// bivalent; each cup/cap pair becomes one bivalent closing vertex joining
/// the cap's surviving in-edge to the cup's surviving out-edge.
Sl1Complex build_sl1_closure(const SingularGraph& g, CycleMask Z);

/// The k-component unlink closure: k strands, one closing vertex each.
Sl1Complex sl1_unlink(int k);

/// H₁^±: homology first by d₀₊, then by the induced d₀₋*; reported over
/// (quantum, horizontal) bigradings.  Throws "window too small" when the
/// boundary-vanishing certificate fails at the bottom of the q-window.
BigradedDims sl1_pm_homology(const Sl1Complex& c, int margin = 4);

}  // namespace plathom
