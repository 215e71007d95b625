/// \file diagram.hpp
/// Plat braid words, singular resolutions as planar leveled graphs, the
/// unoriented smoothing, and the cell decomposition used by disk search.
///
/// Geometry convention: a resolved plat diagram lives on 2n vertical strand
/// columns (1..2n).  Cups sit at level 0 joining columns (2i-1, 2i); caps sit
/// at the top level joining the same columns.  Crossing t of the word owns
/// level t; when the resolution bit singularizes it, a 4-valent vertex joins
/// columns (p, p+1) at that level, otherwise the crossing disappears (the
/// oriented smoothing is two parallel strands).  Edges are maximal vertical
/// segments, indexed bottom-to-top then left-to-right.

#pragma once

#include <string>
#include <vector>

namespace plathom {

struct PlatWord {
    struct Crossing {
        int pos;   ///< in [1, 2n-1]
        int sign;  ///< +1 or -1
    };
    int n_pairs = 0;
    std::vector<Crossing> crossings;

    int strands() const { return 2 * n_pairs; }
    /// Counts of positive/negative crossings of the oriented plat closure
    /// (link-diagram signs, which differ from the braid-generator signs at
    /// crossings where the plat strands are antiparallel).
    int n_plus() const;
    int n_minus() const;
};

/// Per-crossing sign of the oriented link diagram p(w).  Each component is
/// oriented by its first (deterministic) traversal; crossing signs of knots
/// are orientation-independent.
std::vector<int> link_signs(const PlatWord& w);

/// Parse `n=<int>; word=[+p,-p,...]`.  Throws std::runtime_error on
/// malformed tokens, out-of-range positions, or non-positive n.
PlatWord parse_plat(const std::string& text);
std::string serialize_plat(const PlatWord& w);

struct ResolutionVector {
    std::vector<int> bits;  ///< one bit per crossing
    int height() const;     ///< |v| = number of 1s
};

/// Positive crossing: bit 0 = oriented smoothing, bit 1 = singularization.
/// Negative crossing: bit 0 = singularization, bit 1 = oriented smoothing.
bool bit_is_singular(int sign, int bit);

enum class VertexKind { FourValent, Cup, Cap };

struct Vertex {
    VertexKind kind;
    int level;  ///< 0 = cups, word-index level for 4-valent, top for caps
    int pos;    ///< leftmost column touched (p for 4-valent, 2i-1 for cup/cap)
    int in[2] = {-1, -1};   ///< incoming edges (left, right); 4-valent: i(v), j(v)
    int out[2] = {-1, -1};  ///< outgoing edges (left, right); 4-valent: k(v), l(v)
};

struct Edge {
    int col;       ///< strand column in [1, 2n]
    int lo_level;  ///< level of the tail vertex
    int hi_level;  ///< level of the head vertex
    int tail;      ///< vertex index
    int head;      ///< vertex index
    int lo_tag;    ///< crossing index of the tail event, or -1 for a cup
    int hi_tag;    ///< crossing index of the head event, or word size for a cap
};

struct SingularGraph {
    int n_pairs = 0;
    int n_word = 0;  ///< number of crossings in the originating word
    int n_plus = 0;
    int n_minus = 0;
    ResolutionVector resolution;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<int> four_valent;  ///< indices of 4-valent vertices, by level
    std::vector<int> cups;         ///< cup vertex indices, left to right
    std::vector<int> caps;         ///< cap vertex indices, left to right

    int strands() const { return 2 * n_pairs; }
    int top_level() const { return n_word + 1; }
    int height() const { return resolution.height(); }  ///< |v|
    int n_sing() const { return static_cast<int>(four_valent.size()); }

    // Role maps for a 4-valent vertex.
    int ie(int v) const { return vertices[v].in[0]; }   ///< i(v): left incoming
    int je(int v) const { return vertices[v].in[1]; }   ///< j(v): right incoming
    int ke(int v) const { return vertices[v].out[0]; }  ///< k(v): left outgoing
    int le(int v) const { return vertices[v].out[1]; }  ///< l(v): right outgoing
};

/// Build the complete resolution of w at v.
SingularGraph resolve(const PlatWord& w, const ResolutionVector& v);

struct SmoothedDiagram {
    int circle_count = 0;
    std::vector<int> circle_of_edge;  ///< edge index -> circle id
    std::vector<int> strand_of_edge;  ///< edge index -> strand column
};

/// Unoriented smoothing sm(p(S)): every 4-valent vertex becomes the turnback.
SmoothedDiagram smooth(const SingularGraph& g);

struct Cell {
    int gap;       ///< between columns gap and gap+1
    int lo_level;  ///< level of the lower bounding event
    int hi_level;  ///< level of the upper bounding event
};

struct CellComplex {
    std::vector<Cell> cells;
    int n_gaps = 0;
    int n_bands = 0;  ///< level bands 0..top_level-1
    /// Cell id containing horizontal gap `gap` at the band [level, level+1),
    /// or -1 if that band lies in the unbounded face.
    int cell_at(int gap, int band) const;

  private:
    friend CellComplex cells(const SingularGraph& g);
    std::vector<int> lookup_;  ///< (gap-1)*n_bands + band -> cell id or -1
};

CellComplex cells(const SingularGraph& g);

}  // namespace plathom
