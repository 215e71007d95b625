/// \file bench.cpp
/// Benchmark of the OpenMP fraction-free rank kernel against the serial
/// reference, on synthetic sparse matrices and a real cube differential.

#include "plathom/homology.hpp"
#include "plathom/linalg.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace plathom;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void bench_matrix(const char* name, const Mat& A) {
    auto t0 = std::chrono::steady_clock::now();
    int r_par = rank_ff(A);
    auto t1 = std::chrono::steady_clock::now();
    int r_ser = rank_ff_serial(A);
    auto t2 = std::chrono::steady_clock::now();
    std::printf("%-28s %4dx%-4d rank=%-4d parallel %8.3fs  serial %8.3fs  speedup %.2fx%s\n",
                name, A.rows, A.cols, r_par, seconds(t0, t1), seconds(t1, t2),
                seconds(t1, t2) / std::max(seconds(t0, t1), 1e-9),
                r_par == r_ser ? "" : "  RANK MISMATCH");
}

Mat random_sparse(int rows, int cols, int per_row, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> col(0, cols - 1), val(-9, 9);
    Mat A(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < per_row; ++k) {
            int v = val(rng);
            if (v != 0) A.set(r, col(rng), v);
        }
    return A;
}

}  // namespace

int main() {
    bench_matrix("random 400x400 d8", random_sparse(400, 400, 8, 1));
    bench_matrix("random 800x600 d6", random_sparse(800, 600, 6, 2));

    // A real Koszul differential: the all-singular trefoil resolution.
    PlatWord w = parse_plat("n=2; word=[+2,+2,+2]");
    ResolutionVector rv;
    rv.bits = {1, 1, 1};
    VertexData V{resolve(w, rv)};
    int q = V.ms->q_top() - 4;
    bench_matrix("trefoil koszul_d0", koszul_d0(V, q));
    return 0;
}
