#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/khovanov.hpp"

using namespace plathom;

TEST_CASE("unknot, zero crossings") {
    KhResult r = kh_homology(parse_plat("n=1; word=[]"));
    CHECK(r.hq.at({0, 1}) == 1);
    CHECK(r.hq.at({0, -1}) == 1);
    CHECK(r.hq.total() == 2);
    CHECK(r.delta.at(1) == 1);
    CHECK(r.delta.at(-1) == 1);
}

TEST_CASE("unknot via one positive kink") {
    KhResult r = kh_homology(parse_plat("n=1; word=[+1]"));
    CHECK(r.hq.at({0, 1}) == 1);
    CHECK(r.hq.at({0, -1}) == 1);
    CHECK(r.hq.total() == 2);
}

TEST_CASE("unknot via one negative kink") {
    KhResult r = kh_homology(parse_plat("n=1; word=[-1]"));
    CHECK(r.hq.at({0, 1}) == 1);
    CHECK(r.hq.at({0, -1}) == 1);
    CHECK(r.hq.total() == 2);
}

TEST_CASE("two-component unlink") {
    KhResult r = kh_homology(parse_plat("n=2; word=[]"));
    CHECK(r.hq.at({0, 2}) == 1);
    CHECK(r.hq.at({0, 0}) == 2);
    CHECK(r.hq.at({0, -2}) == 1);
    CHECK(r.hq.total() == 4);
}

TEST_CASE("Hopf link") {
    // Under the deterministic component orientations of link_signs, the
    // sigma_2^2 plat is the negative Hopf link (both crossings link-negative).
    PlatWord w = parse_plat("n=2; word=[+2,+2]");
    CHECK(link_signs(w) == std::vector<int>({-1, -1}));
    KhResult r = kh_homology(w);
    CHECK(r.hq.at({0, 0}) == 1);
    CHECK(r.hq.at({0, -2}) == 1);
    CHECK(r.hq.at({-2, -4}) == 1);
    CHECK(r.hq.at({-2, -6}) == 1);
    CHECK(r.hq.total() == 4);
}

TEST_CASE("right-handed trefoil") {
    KhResult r = kh_homology(parse_plat("n=2; word=[+2,+2,+2]"));
    CHECK(r.hq.at({0, 1}) == 1);
    CHECK(r.hq.at({0, 3}) == 1);
    CHECK(r.hq.at({2, 5}) == 1);
    CHECK(r.hq.at({3, 9}) == 1);
    CHECK(r.hq.total() == 4);
    // delta = q - 2h of the four generators: 1, 3, 1, 3.
    CHECK(r.delta.at(1) == 2);
    CHECK(r.delta.at(3) == 2);
}

TEST_CASE("left-handed trefoil is the mirror") {
    KhResult r = kh_homology(parse_plat("n=2; word=[-2,-2,-2]"));
    CHECK(r.hq.at({0, -1}) == 1);
    CHECK(r.hq.at({0, -3}) == 1);
    CHECK(r.hq.at({-2, -5}) == 1);
    CHECK(r.hq.at({-3, -9}) == 1);
    CHECK(r.hq.total() == 4);
}

TEST_CASE("trefoil via sigma1 word and via RII-stabilized word") {
    KhResult a = kh_homology(parse_plat("n=2; word=[+2,+2,+2]"));
    KhResult b = kh_homology(parse_plat("n=2; word=[+2,+2,+2,+2,-2]"));
    CHECK(a.hq == b.hq);
    KhResult c = kh_homology(parse_plat("n=2; word=[+1,+1,+1]"));
    // sigma_1^3 on pair 1 is three successive kinks: plat-closes to a
    // two-component unlink.
    CHECK(c.hq.total() == 4);
}
