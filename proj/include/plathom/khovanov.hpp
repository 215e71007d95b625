/// \file khovanov.hpp
/// Independent Khovanov homology oracle over Q (paper §2).  Shares only the
/// PlatWord input with the main pipeline; circle tracing is re-implemented
/// here on purpose so that E2-vs-oracle agreement is evidence, not tautology.

#pragma once

#include "plathom/diagram.hpp"
#include "plathom/graded.hpp"
#include "plathom/linalg.hpp"

#include <cstdint>
#include <vector>

namespace plathom {

struct KhPiece {
    std::vector<int> bits;  ///< cube vertex u
    int k = 0;              ///< number of circles of D_u
    int gr_h = 0;           ///< |u| - n_-
    int gr_q_one = 0;       ///< gr_q(1 in R_u) = n_+ - 2 n_- + |u| + k_u
    // Basis: subsets of circles as bitmasks 0..2^k-1 (X_c for c in the mask);
    // gr_q(mask) = gr_q_one - 2*popcount(mask).
};

struct KhComplex {
    PlatWord word;
    std::vector<KhPiece> pieces;                 ///< indexed by vertex number
    std::vector<std::vector<int>> circle_of_segment;  ///< per vertex, for edge maps
};

/// Build the full unoriented cube with Frobenius edge maps; d^2 = 0 is
/// asserted by kh_homology.
KhComplex kh_complex(const PlatWord& w);

/// Circle count of the resolution of w at bits (oracle-side tracing).
int kh_circle_count(const PlatWord& w, const std::vector<int>& bits);

struct KhResult {
    BigradedDims hq;    ///< dims over (gr_h, gr_q)
    GradedDims delta;   ///< dims over gr_q - 2 gr_h
};

KhResult kh_homology(const PlatWord& w);

}  // namespace plathom
