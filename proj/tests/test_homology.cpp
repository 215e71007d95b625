#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/homology.hpp"
#include "plathom/khovanov.hpp"

#include <string>
#include <vector>

using namespace plathom;

namespace {

SingularGraph resolve_bits(const char* text, const std::vector<int>& bits) {
    PlatWord w = parse_plat(text);
    ResolutionVector v;
    v.bits = bits;
    return resolve(w, v);
}

GradedDims dims_of(std::initializer_list<std::pair<int, int>> kv) {
    GradedDims d;
    for (auto [k, v] : kv) d.add(k, v);
    return d;
}

}  // namespace

TEST_CASE("homology_presentation on a hand-built exact complex") {
    // Q --A--> Q^2 --B--> Q with A = (1, -1)^T, B = (1, 1): middle H = 0.
    Mat A(2, 1), B(1, 2);
    A.set(0, 0, 1);
    A.set(1, 0, -1);
    B.set(0, 0, 1);
    B.set(0, 1, 1);
    HomologyPresentation H = homology_presentation(B, A);
    CHECK(H.dim() == 0);
    CHECK(H.n_bound == 1);
    // A cycle projects to the zero class.
    CHECK(H.project({{0, Rat(2)}, {1, Rat(-2)}}).empty());
    // Dropping the relation leaves one class.
    HomologyPresentation H2 = homology_presentation(B, Mat(2, 0));
    CHECK(H2.dim() == 1);
    CHECK(H2.project({{0, Rat(3)}, {1, Rat(-3)}}) == SVec{{0, Rat(3)}});
}

TEST_CASE("graded_homology certifies its window") {
    // Zero differential, one generator in every grading: support reaches the
    // window boundary, so the certificate must fail.
    auto dim = [](int) { return 1; };
    auto diff = [](int) { return Mat(1, 1); };
    CHECK_THROWS_WITH(graded_homology(-4, 4, dim, diff), "window too small");
    // Support concentrated inside the window passes.
    auto dim2 = [](int q) { return q == 0 ? 1 : 0; };
    auto diff2 = [&](int q) { return Mat(dim2(q - 2), dim2(q)); };
    GradedDims h = graded_homology(-4, 4, dim2, diff2);
    CHECK(h == dims_of({{0, 1}}));
}

TEST_CASE("vertex homology of the trivial 2-strand diagram") {
    VertexData V(resolve_bits("n=1; word=[]", {}));
    VertexHomology vh = vertex_homology(V);
    CHECK(vh.k == 1);
    CHECK(vh.local == dims_of({{-1, 1}, {1, 1}}));
    CHECK(vh.pres.at(1).dim() == 1);
    CHECK(vh.pres.at(-1).dim() == 1);
}

TEST_CASE("resolution homology: frozen corpus table with freeness certificate") {
    struct Row {
        const char* word;
        std::vector<int> bits;
        int k, shift;
        GradedDims dims;
    };
    const Row rows[] = {
        {"n=1; word=[]", {}, 1, 0, dims_of({{-1, 1}, {1, 1}})},
        {"n=1; word=[+1]", {0}, 1, -2, dims_of({{-3, 1}, {-1, 1}})},
        {"n=1; word=[+1]", {1}, 2, -1, dims_of({{-3, 1}, {-1, 2}, {1, 1}})},
        {"n=2; word=[+2]", {0}, 2, 1, dims_of({{-1, 1}, {1, 2}, {3, 1}})},
        {"n=2; word=[+2]", {1}, 1, 2, dims_of({{1, 1}, {3, 1}})},
        {"n=2; word=[+2,+2]", {0, 0}, 2, -4, dims_of({{-6, 1}, {-4, 2}, {-2, 1}})},
        {"n=2; word=[+2,+2]", {1, 0}, 1, -3, dims_of({{-4, 1}, {-2, 1}})},
        {"n=2; word=[+2,+2]", {0, 1}, 1, -3, dims_of({{-4, 1}, {-2, 1}})},
        {"n=2; word=[+2,+2]", {1, 1}, 2, -2, dims_of({{-4, 1}, {-2, 2}, {0, 1}})},
    };
    for (const Row& r : rows) {
        CAPTURE(r.word);
        ResolutionResult rr = resolution_homology(resolve_bits(r.word, r.bits));
        CHECK(rr.k == r.k);
        CHECK(rr.shift == r.shift);
        CHECK(rr.dims == r.dims);
        CHECK(rr.report.binomial_ok);
        CHECK(rr.report.free_ok);
    }
}

TEST_CASE("all 8 resolutions of the trefoil are free of rank 2^k") {
    PlatWord w = parse_plat("n=2; word=[+2,+2,+2]");
    for (unsigned u = 0; u < 8; ++u) {
        ResolutionVector v;
        for (int i = 0; i < 3; ++i) v.bits.push_back((u >> i) & 1u);
        ResolutionResult rr = resolution_homology(resolve(w, v));
        CHECK(rr.report.binomial_ok);
        CHECK(rr.report.free_ok);
        CHECK(rr.dims.total() == (1 << rr.k));
    }
}

TEST_CASE("U-action identities on homology") {
    CHECK(u_action_identities(resolve_bits("n=1; word=[+1]", {1})).ok);
    CHECK(u_action_identities(resolve_bits("n=2; word=[+2,+2]", {1, 1})).ok);
}

TEST_CASE("E2 page equals the Khovanov oracle") {
    const char* words[] = {"n=1; word=[]",   "n=1; word=[+1]",    "n=1; word=[-1]",
                           "n=2; word=[+2]", "n=2; word=[+2,+2]", "n=2; word=[+2,+2,+2]"};
    for (const char* t : words) {
        CAPTURE(t);
        PlatWord w = parse_plat(t);
        CHECK(e2_page(w) == kh_homology(w).hq);
    }
    // The trefoil's four classes, frozen.
    BigradedDims tre = e2_page(parse_plat("n=2; word=[+2,+2,+2]"));
    CHECK(tre.total() == 4);
    CHECK(tre.at({0, 1}) == 1);
    CHECK(tre.at({0, 3}) == 1);
    CHECK(tre.at({2, 5}) == 1);
    CHECK(tre.at({3, 9}) == 1);
}

TEST_CASE("delta-graded total homology H_{1-1}") {
    CHECK(total_homology(parse_plat("n=1; word=[]")) == dims_of({{-1, 1}, {1, 1}}));
    CHECK(total_homology(parse_plat("n=1; word=[+1]")) == dims_of({{-1, 1}, {1, 1}}));
    CHECK(total_homology(parse_plat("n=1; word=[-1]")) == dims_of({{-1, 1}, {1, 1}}));
    CHECK(total_homology(parse_plat("n=2; word=[+2]")) == dims_of({{-1, 1}, {1, 1}}));
    // Negative Hopf link and trefoil: equal to the Khovanov delta-dims.
    CHECK(total_homology(parse_plat("n=2; word=[+2,+2]")) == dims_of({{-2, 2}, {0, 2}}));
    CHECK(total_homology(parse_plat("n=2; word=[+2,+2,+2]")) == dims_of({{1, 2}, {3, 2}}));
}

TEST_CASE("MOY relations") {
    ResolutionVector v1;
    v1.bits = {1};
    for (int kind : {0, 1, 2}) {
        CAPTURE(kind);
        CheckReport r = moy_check(kind, parse_plat("n=1; word=[+1]"), v1, 0);
        CHECK(r.ok);
    }
    // MOY III, type a (X_2 -> X_2 X_3 X_2) and type b (X_3 -> X_3 X_2 X_3).
    CHECK(moy_check(3, parse_plat("n=2; word=[+2]"), v1, 0).ok);
    CHECK(moy_check(3, parse_plat("n=2; word=[+3]"), v1, 0).ok);
}

TEST_CASE("invariance of H_{1-1} under fast plat moves") {
    CHECK(invariance_check("RI", parse_plat("n=1; word=[]"), 1).ok);
    CHECK(invariance_check("twist_top", parse_plat("n=1; word=[]"), 1).ok);
    CHECK(invariance_check("twist_bottom", parse_plat("n=1; word=[]"), 1).ok);
    CHECK(invariance_check("RII", parse_plat("n=2; word=[+2]"), 2).ok);
    CHECK(invariance_check("RIII", parse_plat("n=2; word=[+1,+2,+1]"), 0).ok);
    // cap_swap / cup_swap run in the acceptance suite (minutes each).
}

TEST_CASE("composition product on 2- and 4-strand resolutions") {
    const char* words[] = {"n=1; word=[]", "n=1; word=[+1]", "n=2; word=[+2]"};
    for (const char* t : words) {
        CAPTURE(t);
        PlatWord w = parse_plat(t);
        int N = static_cast<int>(w.crossings.size());
        for (unsigned u = 0; u < (1u << N); ++u) {
            ResolutionVector v;
            for (int i = 0; i < N; ++i) v.bits.push_back((u >> i) & 1u);
            CHECK(composition_product_check(resolve(w, v)).ok);
        }
    }
}
