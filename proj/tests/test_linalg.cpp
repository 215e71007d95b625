#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plathom/linalg.hpp"

#include <random>

using namespace plathom;

namespace {

Mat random_mat(std::mt19937& rng, int rows, int cols, int density_pct) {
    Mat A(rows, cols);
    std::uniform_int_distribution<int> pick(0, 99);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (pick(rng) < density_pct) {
                int n = num(rng);
                if (n != 0) A.set(r, c, Rat(n, den(rng)));
            }
    return A;
}

}  // namespace

TEST_CASE("sparse vector arithmetic") {
    SVec a = {{0, Rat(1)}, {2, Rat(3)}};
    SVec b = {{1, Rat(2)}, {2, Rat(-3)}};
    SVec s = svec_add(a, b);
    CHECK(s == SVec{{0, Rat(1)}, {1, Rat(2)}});
    CHECK(svec_is_zero(svec_axpy(a, Rat(-1), a)));
    CHECK(svec_scale(a, Rat(0)).empty());
}

TEST_CASE("matrix basics") {
    Mat A(2, 2);
    A.set(0, 0, Rat(1));
    A.set(0, 1, Rat(2));
    A.set(1, 1, Rat(1, 2));
    CHECK(A.get(0, 1) == Rat(2));
    CHECK(A.get(1, 0) == Rat(0));
    Mat B = mat_mul(A, A);
    CHECK(B.get(0, 1) == Rat(3));  // 1*2 + 2*(1/2)
    CHECK(mat_add(A, mat_scale(A, Rat(-1))).is_zero());
}

TEST_CASE("rank: parallel kernel vs serial reference vs dense oracle") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        Mat A = random_mat(rng, 1 + trial % 13, 1 + (trial * 7) % 11, 40);
        int r1 = rank_ff(A);
        int r2 = rank_ff_serial(A);
        int r3 = rank_dense_oracle(A);
        CHECK(r1 == r2);
        CHECK(r1 == r3);
    }
}

TEST_CASE("kernel basis") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 20; ++trial) {
        Mat A = random_mat(rng, 2 + trial % 7, 2 + (trial * 3) % 9, 50);
        auto K = kernel_basis(A);
        CHECK(static_cast<int>(K.size()) == A.cols - rank_ff(A));
        for (const SVec& k : K) CHECK(svec_is_zero(mat_apply(A, k)));
    }
}

TEST_CASE("echelon basis and reduction") {
    EchelonBasis B(3);
    CHECK(B.insert({{0, Rat(1)}, {1, Rat(1)}}));
    CHECK(B.insert({{1, Rat(1)}, {2, Rat(1)}}));
    CHECK_FALSE(B.insert({{0, Rat(1)}, {2, Rat(-1)}}));  // dependent
    CHECK(B.rank() == 2);
    std::vector<Rat> coeff;
    SVec red = B.reduce_tracked({{0, Rat(2)}, {1, Rat(2)}}, coeff);
    CHECK(svec_is_zero(red));
    CHECK(coeff[0] == Rat(2));
}

TEST_CASE("quotient presentation") {
    // Q^3 / (x0 + x1) has dim 2 with basis {x1, x2}.
    auto qp = quotient_by_rows(3, {{{0, Rat(1)}, {1, Rat(1)}}});
    CHECK(qp.dim() == 2);
    SVec p = qp.project({{0, Rat(1)}});  // [x0] = -[x1]
    CHECK(p == SVec{{0, Rat(-1)}});
    CHECK(qp.project({{0, Rat(1)}, {1, Rat(1)}}).empty());
    // include o project on basis vectors is the identity.
    for (int k = 0; k < qp.dim(); ++k) {
        SVec inc = qp.include(k);
        SVec back = qp.project(inc);
        CHECK(back == SVec{{k, Rat(1)}});
    }
}
