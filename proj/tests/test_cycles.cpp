#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/chain.hpp"
#include "plathom/cycles.hpp"

#include <algorithm>
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
    "n=1; word=[]", "n=1; word=[+1]", "n=2; word=[+2]", "n=2; word=[+2,+2]",
    "n=2; word=[+2,+2,+2]", "n=2; word=[+1,+2,+1]", "n=2; word=[+2,+1,+3,+2]",
};

int edge_at(const SingularGraph& g, int col, int lo) {
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e].col == col && g.edges[e].lo_level == lo) return static_cast<int>(e);
    REQUIRE(false);
    return -1;
}

// Normal forms are raw: two equal module elements can differ by the monomial
// congruence U_i U_j = U_k U_l at cycle-disjoint vertices.  Canonicalize each
// term's coefficient before comparing.
FormalSum canon(const SingularGraph& g, FormalSum s) {
    for (Term& t : s) t.m = canonical_monomial(g, t.z, t.m);
    std::sort(s.begin(), s.end(), [](const Term& a, const Term& b) {
        if (a.z != b.z) return a.z < b.z;
        return a.m < b.m;
    });
    FormalSum out;
    for (Term& t : s) {
        if (!out.empty() && out.back().z == t.z && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }),
              out.end());
    return out;
}

}  // namespace

TEST_CASE("cycle enumeration matches the transfer-matrix oracle") {
    for (const char* t : kCorpus) {
        PlatWord w = parse_plat(t);
        int N = static_cast<int>(w.crossings.size());
        for (unsigned u = 0; u < (1u << N); ++u) {
            ResolutionVector rv;
            for (int i = 0; i < N; ++i) rv.bits.push_back((u >> i) & 1u);
            SingularGraph g = resolve(w, rv);
            auto cyc = enumerate_cycles(g);
            CHECK(static_cast<long>(cyc.size()) == cycle_count_oracle(g));
            // Every enumerated mask is a union of n disjoint strands: each cup
            // and cap meets exactly one chosen edge.
            for (CycleMask Z : cyc) {
                for (int c : g.cups) {
                    const Vertex& vx = g.vertices[c];
                    CHECK((((Z >> vx.out[0]) & 1) + ((Z >> vx.out[1]) & 1)) == 1);
                }
            }
        }
    }
}

TEST_CASE("trivial diagram: 2 cycles and the basic push") {
    SingularGraph g = resolve_bits("n=1; word=[]", {});
    CellComplex cc = cells(g);
    auto cyc = enumerate_cycles(g);
    REQUIRE(cyc.size() == 2);
    int e1 = edge_at(g, 1, 0), e2 = edge_at(g, 2, 0);
    CycleMask Z1 = 1ull << e1, Z2 = 1ull << e2;

    PushResult p = apply_U(g, cc, Z1, e1);
    CHECK(p.kind == PushResult::Pushed);
    CHECK(p.target == Z2);
    CHECK(p.coeff.degree() == 0);  // no vertices on the disk boundary

    CHECK(apply_U(g, cc, Z2, e2).kind == PushResult::Zero);   // rightmost strand
    CHECK(apply_U(g, cc, Z2, e1).kind == PushResult::Unchanged);
}

TEST_CASE("single singularization: pushes and the vertex operator") {
    SingularGraph g = resolve_bits("n=1; word=[+1]", {1});
    CellComplex cc = cells(g);
    REQUIRE(enumerate_cycles(g).size() == 4);
    int v = g.four_valent[0];
    int e1 = g.ie(v), e2 = g.je(v), e3 = g.ke(v), e4 = g.le(v);
    CycleMask Z13 = (1ull << e1) | (1ull << e3);
    CycleMask Z14 = (1ull << e1) | (1ull << e4);
    CycleMask Z23 = (1ull << e2) | (1ull << e3);
    CycleMask Z24 = (1ull << e2) | (1ull << e4);

    PushResult p1 = apply_U(g, cc, Z13, e1);
    CHECK(p1.kind == PushResult::Pushed);
    CHECK(p1.target == Z23);
    CHECK(p1.coeff.degree() == 0);

    PushResult p3 = apply_U(g, cc, Z13, e3);
    CHECK(p3.kind == PushResult::Pushed);
    CHECK(p3.target == Z14);
    CHECK(p3.coeff.degree() == 0);

    // Pushing the rightmost strand gives zero.
    CHECK(apply_U(g, cc, Z24, e2).kind == PushResult::Zero);
    CHECK(apply_U(g, cc, Z24, e4).kind == PushResult::Zero);
    CHECK(apply_U(g, cc, Z23, e2).kind == PushResult::Zero);

    // The vertex disk for Z = e1e3 would need its right boundary to pass
    // through v itself (a pinch), so the embedded-disk family is empty and
    // f_v(x_{e1e3}) = 0 -- matching f_v = U_i o U_j, which is also 0.
    CHECK(apply_fv(g, cc, Z13, v).kind == PushResult::Zero);
    CHECK(cycle_at_vertex(g, Z13, v) == 1);
    CHECK(cycle_at_vertex(g, Z14, v) == 1);
}

TEST_CASE("normalize reaches action-normal form") {
    SingularGraph g = resolve_bits("n=1; word=[]", {});
    CellComplex cc = cells(g);
    int e1 = edge_at(g, 1, 0), e2 = edge_at(g, 2, 0);
    CycleMask Z1 = 1ull << e1, Z2 = 1ull << e2;

    // U1^2 . x_{Z1} = U1 . x_{Z2}: one push, then U1 acts freely (e1 not in
    // Z2), so the normal form is the single term U1 x_{Z2}.
    Term t;
    t.c = 1;
    t.m = Monomial(2);
    t.m.e[e1] = 2;
    t.z = Z1;
    FormalSum nf = normalize(g, cc, {t});
    REQUIRE(nf.size() == 1);
    CHECK(nf[0].z == Z2);
    CHECK(nf[0].m.e[e1] == 1);
    CHECK(nf[0].m.degree() == 1);

    // U2^2 . x_{Z2} = U2 . 0 = 0 (rightmost strand pushes to zero).
    Term t2;
    t2.c = 1;
    t2.m = Monomial(2);
    t2.m.e[e2] = 2;
    t2.z = Z2;
    CHECK(normalize(g, cc, {t2}).empty());

    // U1 . x_{Z1} = x_{Z2}, and like terms combine.
    Term s = t;
    s.m.e[e1] = 1;
    FormalSum r = normalize(g, cc, {s, s});
    REQUIRE(r.size() == 1);
    CHECK(r[0].z == Z2);
    CHECK(r[0].c == Rat(2));
    CHECK(r[0].m.degree() == 0);
}

TEST_CASE("f_v = U_i o U_j, commutativity, and Q_v = 0 across the corpus") {
    for (const char* t : kCorpus) {
        PlatWord w = parse_plat(t);
        int N = static_cast<int>(w.crossings.size());
        for (unsigned u = 0; u < (1u << N); ++u) {
            ResolutionVector rv;
            for (int i = 0; i < N; ++i) rv.bits.push_back((u >> i) & 1u);
            SingularGraph g = resolve(w, rv);
            CellComplex cc = cells(g);
            auto cyc = enumerate_cycles(g);
            for (CycleMask Z : cyc) {
                Term base;
                base.c = 1;
                base.m = Monomial(static_cast<int>(g.edges.size()));
                base.z = Z;
                FormalSum x = {base};
                for (int v : g.four_valent) {
                    // f_v = U_{i(v)} o U_{j(v)} = U_{k(v)} o U_{l(v)}.
                    FormalSum fv = canon(g, mult_fv(g, cc, x, v));
                    FormalSum uij = canon(g, mult_U(g, cc, mult_U(g, cc, x, g.je(v)), g.ie(v)));
                    FormalSum ukl = canon(g, mult_U(g, cc, mult_U(g, cc, x, g.le(v)), g.ke(v)));
                    CHECK(fv == uij);
                    CHECK(fv == ukl);
                }
                // Commutativity of the action on a couple of edge pairs.
                for (size_t a = 0; a < g.edges.size(); a += 3)
                    for (size_t b = a + 1; b < g.edges.size(); b += 2) {
                        FormalSum ab = canon(g, mult_U(g, cc, mult_U(g, cc, x, static_cast<int>(a)),
                                                       static_cast<int>(b)));
                        FormalSum ba = canon(g, mult_U(g, cc, mult_U(g, cc, x, static_cast<int>(b)),
                                                       static_cast<int>(a)));
                        CHECK(ab == ba);
                    }
            }
        }
    }
}

TEST_CASE("grading drops by 2 under every push") {
    for (const char* t : kCorpus) {
        PlatWord w = parse_plat(t);
        int N = static_cast<int>(w.crossings.size());
        for (unsigned u = 0; u < (1u << N); ++u) {
            ResolutionVector rv;
            for (int i = 0; i < N; ++i) rv.bits.push_back((u >> i) & 1u);
            SingularGraph g = resolve(w, rv);
            CellComplex cc = cells(g);
            for (CycleMask Z : enumerate_cycles(g)) {
                int q = grade_cycle(g, Z).gr_q();
                for (size_t e = 0; e < g.edges.size(); ++e) {
                    if (!((Z >> e) & 1ull)) continue;
                    PushResult p = apply_U(g, cc, Z, static_cast<int>(e));
                    if (p.kind != PushResult::Pushed) continue;
                    int q2 = grade_cycle(g, p.target).gr_q();
                    CHECK(q - 2 == q2 - 2 * p.coeff.degree());
                }
            }
        }
    }
}
