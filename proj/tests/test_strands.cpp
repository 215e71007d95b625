#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/strands.hpp"

using namespace plathom;

namespace {

// mask for a subset given as element list (1-based)
unsigned mask_of(std::initializer_list<int> xs) {
    unsigned m = 0;
    for (int x : xs) m |= 1u << (x - 1);
    return m;
}

}  // namespace

TEST_CASE("figure example: L3 on {1,4} times R1 on {1,3}") {
    int n = 2;
    // P1 = L_3 restricted to source {1,4}; P2 = R_1 restricted to {1,3}.
    StrandsElement P1 = multiply(iota(n, mask_of({1, 4})), gen_L(n, 3));
    StrandsElement P2 = multiply(iota(n, mask_of({1, 3})), gen_R(n, 1));
    StrandsElement P3 = multiply(P1, P2);
    REQUIRE(P3.terms.size() == 1);
    CHECK(P3.terms[0].c == 1);
    CHECK(P3.terms[0].s1 == mask_of({1, 4}));
    CHECK(P3.terms[0].s2 == mask_of({2, 3}));
    CHECK(P3.terms[0].u == std::vector<int>(4, 0));
    // All other products vanish: mismatched middle states.
    CHECK(multiply(P2, P1).is_zero());
}

TEST_CASE("generator identities from the spec examples") {
    for (int n : {1, 2}) {
        // sum_S iota_S = 1.
        StrandsElement one = strands_one(n);
        CHECK(strands_equal(multiply(one, one), one));
        // rho_{i,i+1} = R_i and delta_{i+1,i} = L_i.
        for (int i = 1; i <= 2 * n - 1; ++i) {
            CHECK(strands_equal(rho(n, i, i + 1), gen_R(n, i)));
            CHECK(strands_equal(delta_elt(n, i + 1, i), gen_L(n, i)));
        }
        // R5 in generator form.
        for (int i = 1; i <= 2 * n - 1; ++i) {
            CHECK(strands_equal(multiply(gen_R(n, i), gen_L(n, i)),
                                multiply(iota_containing(n, i), gen_u(n, i))));
            CHECK(strands_equal(multiply(gen_L(n, i), gen_R(n, i)),
                                multiply(iota_containing(n, i + 1), gen_u(n, i))));
        }
    }
    // rho_{2,4} for n = 2 moves a strand from 2 up to 4 along a clear path.
    StrandsElement r = multiply(iota(2, mask_of({1, 2})), rho(2, 2, 4));
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].s2 == mask_of({1, 4}));
    // Moving through an occupied position annihilates: R_i needs i+1 free.
    CHECK(multiply(iota(2, mask_of({1, 3})), rho(2, 1, 4)).is_zero());
}

TEST_CASE("relation suite passes exhaustively for n = 1, 2, 3") {
    for (int n : {1, 2, 3}) {
        CAPTURE(n);
        SuiteReport rep = relation_suite(n, 3);
        INFO(rep.detail);
        CHECK(rep.ok);
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("associativity on all generator triples for n = 1, 2") {
    for (int n : {1, 2}) {
        CAPTURE(n);
        SuiteReport rep = associativity_suite(n);
        INFO(rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("idempotent-indexed decomposition of basis elements") {
    // Every nonzero product of generators satisfies e = iota_{S1} e iota_{S2}
    // with the endpoint states of its terms.
    int n = 2;
    std::vector<StrandsElement> sample = {
        multiply(gen_R(n, 1), gen_R(n, 2)),
        multiply(gen_L(n, 2), gen_u(n, 2)),
        multiply(multiply(gen_R(n, 2), gen_L(n, 2)), gen_R(n, 1)),
    };
    for (const StrandsElement& e : sample)
        for (const StrandsTerm& t : e.terms) {
            StrandsElement b = multiply(multiply(iota(n, t.s1), e), iota(n, t.s2));
            bool found = false;
            for (const StrandsTerm& bt : b.terms)
                found = found || (bt.s1 == t.s1 && bt.s2 == t.s2 && bt.u == t.u && bt.c == t.c);
            CHECK(found);
        }
}

TEST_CASE("quotient normal form kills the ideal generators and is idempotent") {
    int n = 2;
    AnQuotient quo(n, 3);
    CHECK(quo.dim() < quo.ambient_dim());
    for (int i = 2; i <= 2 * n - 1; ++i) {
        CHECK(quo.normal_form(multiply(gen_R(n, i), gen_R(n, i - 1))).is_zero());
        CHECK(quo.normal_form(multiply(gen_L(n, i - 1), gen_L(n, i))).is_zero());
    }
    // Idempotents survive.
    StrandsElement iS = iota(n, mask_of({1, 3}));
    CHECK(strands_equal(quo.normal_form(iS), iS));
    // Idempotency and multiplication compatibility of the normal form.
    StrandsElement a = strands_add(multiply(gen_R(n, 2), gen_R(n, 1)), gen_L(n, 2));
    StrandsElement b = strands_add(gen_R(n, 1), iota(n, mask_of({2, 4})));
    StrandsElement nfa = quo.normal_form(a);
    CHECK(strands_equal(quo.normal_form(nfa), nfa));
    CHECK(strands_equal(quo.normal_form(multiply(a, b)),
                        quo.normal_form(multiply(nfa, quo.normal_form(b)))));
    // Degree guard.
    StrandsElement u4 = gen_u(n, 1);
    for (int k = 0; k < 3; ++k) u4 = multiply(u4, gen_u(n, 1));
    CHECK_THROWS_WITH(quo.normal_form(u4), "degree bound exceeded");
}

TEST_CASE("state_map examples") {
    // n = 1 (m = 3): x = {3/2} -> S = {2}; x = {5/2} -> S = {1}.
    CHECK(state_map({3, 0b01u}) == mask_of({2}));
    CHECK(state_map({3, 0b10u}) == mask_of({1}));
    // |S_x| = n always (n = 2 here).
    for (unsigned x = 0; x < 16; ++x) {
        if (__builtin_popcount(x) != 2) continue;
        CHECK(__builtin_popcount(state_map({5, x})) == 2);
    }
    CHECK_THROWS(state_map({3, 0b11u}));
}

TEST_CASE("isomorphism check for n = 1, 2") {
    for (int n : {1, 2}) {
        CAPTURE(n);
        SuiteReport rep = iso_check(n, 3);
        INFO(rep.detail);
        CHECK(rep.ok);
        CHECK(rep.checked > 0);
    }
}
