#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/sl1.hpp"

using namespace plathom;

namespace {

SingularGraph resolve_bits(const char* text, const std::vector<int>& bits) {
    PlatWord w = parse_plat(text);
    ResolutionVector v;
    v.bits = bits;
    return resolve(w, v);
}

}  // namespace

TEST_CASE("k-unlink closures give Q at (0, -2k)") {
    for (int k = 1; k <= 3; ++k) {
        BigradedDims H = sl1_pm_homology(sl1_unlink(k));
        CHECK(H.total() == 1);
        CHECK(H.at({0, -2 * k}) == 1);
    }
}

TEST_CASE("extra bivalent vertices do not shift the answer") {
    // One circle carrying two bivalent vertices: still Q at (0, -2).
    Sl1Complex c;
    c.nvars = 2;
    c.factors.push_back({false, 0, 1, -1, -1});
    c.factors.push_back({false, 1, 0, -1, -1});
    BigradedDims H = sl1_pm_homology(c);
    CHECK(H.total() == 1);
    CHECK(H.at({0, -2}) == 1);
}

TEST_CASE("trivial diagram closures: one strand deleted leaves an unknot") {
    SingularGraph g = resolve_bits("n=1; word=[]", {});
    auto cyc = enumerate_cycles(g);
    REQUIRE(cyc.size() == 2);
    for (CycleMask Z : cyc) {
        Sl1Complex c = build_sl1_closure(g, Z);
        CHECK(c.nvars == 1);
        REQUIRE(c.factors.size() == 1);
        CHECK(!c.factors[0].four);
        BigradedDims H = sl1_pm_homology(c);
        CHECK(H.total() == 1);
        CHECK(H.at({0, -2}) == 1);
    }
}

TEST_CASE("single singularization: every b(S-Z) is an unknot closure") {
    SingularGraph g = resolve_bits("n=1; word=[+1]", {1});
    auto cyc = enumerate_cycles(g);
    REQUIRE(cyc.size() == 4);
    for (CycleMask Z : cyc) {
        Sl1Complex c = build_sl1_closure(g, Z);
        for (const Sl1Factor& f : c.factors) CHECK(!f.four);
        BigradedDims H = sl1_pm_homology(c);
        CHECK(H.total() == 1);
        CHECK(H.at({0, -2}) == 1);
    }
}

TEST_CASE("4-strand X_2: surviving 4-valent vertex is acyclic, others 2-unlinks") {
    SingularGraph g = resolve_bits("n=2; word=[+2]", {1});
    auto cyc = enumerate_cycles(g);
    REQUIRE(cyc.size() == 3);
    int n_acyclic = 0, n_unlink2 = 0;
    for (CycleMask Z : cyc) {
        Sl1Complex c = build_sl1_closure(g, Z);
        bool has_four = false;
        for (const Sl1Factor& f : c.factors) has_four = has_four || f.four;
        BigradedDims H = sl1_pm_homology(c);
        if (has_four) {
            CHECK(H.total() == 0);  // acyclic when a 4-valent vertex survives
            ++n_acyclic;
        } else {
            CHECK(H.total() == 1);
            CHECK(H.at({0, -4}) == 1);  // two components
            ++n_unlink2;
        }
    }
    CHECK(n_acyclic == 1);
    CHECK(n_unlink2 == 2);
}
