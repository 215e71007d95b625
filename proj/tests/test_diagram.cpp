#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/diagram.hpp"
#include "plathom/khovanov.hpp"

#include <functional>
#include <string>
#include <vector>

using namespace plathom;

namespace {

SingularGraph resolve_bits(const std::string& text, const std::vector<int>& bits) {
    PlatWord w = parse_plat(text);
    ResolutionVector v;
    v.bits = bits;
    return resolve(w, v);
}

const char* kCorpus[] = {
    "n=1; word=[]",
    "n=1; word=[+1]",
    "n=1; word=[-1]",
    "n=2; word=[+2]",
    "n=2; word=[+2,+2]",
    "n=2; word=[+2,+2,+2]",
    "n=2; word=[-2,-2,-2]",
    "n=2; word=[+1,+2,+1]",
    "n=2; word=[+2,+1,+3,+2]",
    "n=2; word=[+2,+2,+2,+2,-2]",
};

}  // namespace

TEST_CASE("parse and serialize round trip") {
    for (const char* t : kCorpus) {
        PlatWord w = parse_plat(t);
        CHECK(serialize_plat(w) == t);
    }
    PlatWord w = parse_plat("n=2; word=[+2,-1]");
    CHECK(w.n_pairs == 2);
    CHECK(w.crossings.size() == 2);
    CHECK(w.crossings[1].sign == -1);
    CHECK(w.n_plus() + w.n_minus() == 2);
}

TEST_CASE("link-diagram crossing signs") {
    // A braid-positive kink on a cup pair is a link-negative crossing: the
    // plat strands are antiparallel there.
    auto kink = link_signs(parse_plat("n=1; word=[+1]"));
    CHECK(kink == std::vector<int>{-1});
    auto kink_neg = link_signs(parse_plat("n=1; word=[-1]"));
    CHECK(kink_neg == std::vector<int>{1});
    // The sigma_2^3 plat is the right-handed trefoil: all three crossings are
    // link-positive even though the strands run antiparallel.
    auto tref = link_signs(parse_plat("n=2; word=[+2,+2,+2]"));
    CHECK(tref == std::vector<int>({1, 1, 1}));
    CHECK(parse_plat("n=2; word=[+2,+2,+2]").n_plus() == 3);
    auto mirror = link_signs(parse_plat("n=2; word=[-2,-2,-2]"));
    CHECK(mirror == std::vector<int>({-1, -1, -1}));
}

TEST_CASE("parse errors") {
    CHECK_THROWS(parse_plat("word=[+1]"));
    CHECK_THROWS(parse_plat("n=0; word=[]"));
    CHECK_THROWS(parse_plat("n=1; word=[+2]"));  // position out of range
    CHECK_THROWS(parse_plat("n=1; word=[1]"));   // missing sign
    CHECK_THROWS(parse_plat("n=1; word=[+x]"));
}

TEST_CASE("bit semantics") {
    CHECK_FALSE(bit_is_singular(+1, 0));
    CHECK(bit_is_singular(+1, 1));
    CHECK(bit_is_singular(-1, 0));
    CHECK_FALSE(bit_is_singular(-1, 1));
}

TEST_CASE("trivial 2-strand diagram") {
    SingularGraph g = resolve_bits("n=1; word=[]", {});
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 2);
    CHECK(g.four_valent.empty());
    CHECK(cells(g).cells.size() == 1);
    CHECK(smooth(g).circle_count == 1);
}

TEST_CASE("single singularization on 2 strands") {
    SingularGraph g = resolve_bits("n=1; word=[+1]", {1});
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges.size() == 4);
    CHECK(g.four_valent.size() == 1);
    int v = g.four_valent[0];
    CHECK(g.ie(v) >= 0);
    CHECK(g.edges[g.ie(v)].col == 1);
    CHECK(g.edges[g.je(v)].col == 2);
    CHECK(cells(g).cells.size() == 2);
    CHECK(smooth(g).circle_count == 2);
}

TEST_CASE("trefoil all-singular resolution") {
    SingularGraph g = resolve_bits("n=2; word=[+2,+2,+2]", {1, 1, 1});
    CHECK(g.vertices.size() == 7);   // 2 cups + 3 vertices + 2 caps
    CHECK(g.edges.size() == 10);
    CHECK(cells(g).cells.size() == 4);
    // Euler: V - E + F = 2 with F = bounded cells + outer face.
    CHECK(7 - 10 + (4 + 1) == 2);
}

TEST_CASE("Euler formula across the corpus") {
    for (const char* t : kCorpus) {
        PlatWord w = parse_plat(t);
        int N = static_cast<int>(w.crossings.size());
        for (unsigned u = 0; u < (1u << N); ++u) {
            std::vector<int> bits(N);
            for (int i = 0; i < N; ++i) bits[i] = (u >> i) & 1u;
            ResolutionVector rv;
            rv.bits = bits;
            SingularGraph g = resolve(w, rv);
            int V = static_cast<int>(g.vertices.size());
            int E = static_cast<int>(g.edges.size());
            int F = static_cast<int>(cells(g).cells.size()) + 1;
            // Planar graphs satisfy V - E + F = 1 + #components (the outer
            // face is shared, each extra component contributes one more face
            // deficit).  Count components by union-find over the edges.
            std::vector<int> parent(V);
            for (int i = 0; i < V; ++i) parent[i] = i;
            std::function<int(int)> find = [&](int x) {
                return parent[x] == x ? x : parent[x] = find(parent[x]);
            };
            for (const Edge& ed : g.edges) parent[find(ed.tail)] = find(ed.head);
            int comps = 0;
            for (int i = 0; i < V; ++i) comps += (find(i) == i);
            CHECK(V - E + F == 1 + comps);
            // Smoothing circle count agrees with the independent Khovanov
            // oracle tracer.
            CHECK(smooth(g).circle_count == kh_circle_count(w, bits));
        }
    }
}

TEST_CASE("edge adjacency is consistent") {
    SingularGraph g = resolve_bits("n=2; word=[+2,+1,+3,+2]", {1, 1, 1, 1});
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        CHECK(ed.lo_level < ed.hi_level);
        const Vertex& tv = g.vertices[ed.tail];
        const Vertex& hv = g.vertices[ed.head];
        CHECK(tv.level == ed.lo_level);
        CHECK(hv.level == ed.hi_level);
        bool t_has = tv.out[0] == static_cast<int>(e) || tv.out[1] == static_cast<int>(e);
        bool h_has = hv.in[0] == static_cast<int>(e) || hv.in[1] == static_cast<int>(e);
        CHECK(t_has);
        CHECK(h_has);
    }
}
