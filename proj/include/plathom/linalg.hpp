/// \file linalg.hpp
/// Exact sparse rational linear algebra: echelon bases with projections,
/// fraction-free rank (OpenMP kernel + serial reference), kernels, and a
/// dense elimination oracle used only by tests.
///
/// All arithmetic is arbitrary-precision rational (GMP); no floating point.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace plathom {

using Rat = mpq_class;

/// A sparse vector: entries sorted by index, no zero entries.
using SVec = std::vector<std::pair<int, Rat>>;

/// Row-sparse matrix with explicit dimensions.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<SVec> row;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), row(r) {}

    void set(int r, int c, const Rat& v);
    Rat get(int r, int c) const;
    bool is_zero() const;
};

SVec svec_add(const SVec& a, const SVec& b);
SVec svec_scale(const SVec& a, const Rat& c);
/// a + c*b
SVec svec_axpy(const SVec& a, const Rat& c, const SVec& b);
bool svec_is_zero(const SVec& a);

/// y = A x
SVec mat_apply(const Mat& A, const SVec& x);
/// C = A B
Mat mat_mul(const Mat& A, const Mat& B);
/// C = A + B
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_scale(const Mat& A, const Rat& c);

/// Incremental echelon basis over Q with deterministic pivots; supports
/// reduction of vectors against the basis (with the pivot coordinates
/// recorded on demand).  Used for quotient presentations and homology
/// representatives.
class EchelonBasis {
  public:
    explicit EchelonBasis(int ncols) : ncols_(ncols) {}

    /// Reduce v by the basis in place; returns the reduced vector.
    SVec reduce(SVec v) const;

    /// Reduce v and record, for each basis row used, the coefficient c such
    /// that v_reduced = v - sum c_k row_k.  coeff is indexed by insertion
    /// order of the rows.
    SVec reduce_tracked(SVec v, std::vector<Rat>& coeff) const;

    /// Insert v (reducing it first); returns true if it enlarged the span.
    bool insert(SVec v);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    bool contains_pivot(int col) const;
    const std::vector<int>& pivots() const { return pivot_list_; }
    const SVec& basis_row(int k) const { return rows_[k]; }

  private:
    int ncols_;
    std::vector<SVec> rows_;          // echelon rows, normalized pivot = 1
    std::vector<int> pivot_of_row_;   // pivot column per row
    std::vector<int> row_of_pivot_;   // column -> row index or -1 (lazy map)
    std::vector<int> pivot_list_;     // pivots in insertion order
    std::vector<int> pivot_sorted_;   // pivots sorted ascending (row order)
    void resort();
};

/// Rank by fraction-free elimination over scaled integer rows.  Pivot choice:
/// smallest bit-length entry, ties broken by smallest column then row index.
/// Row updates are OpenMP-parallel when compiled with OpenMP.
int rank_ff(const Mat& A);

/// Serial reference implementation of the same algorithm (no OpenMP), kept
/// for testing and benchmarked against the parallel kernel.
int rank_ff_serial(const Mat& A);

/// Dense naive Gaussian elimination oracle (tests only; O(n^3) mpq).
int rank_dense_oracle(const Mat& A);

/// Basis of ker(A) as columns (each SVec has length A.cols).
std::vector<SVec> kernel_basis(const Mat& A);

/// Presentation of the quotient Q^n / span(relation rows).
struct QuotientPresentation {
    int ambient = 0;                 ///< n
    std::vector<int> basis_cols;     ///< non-pivot columns, ascending
    EchelonBasis rel;                ///< echelon form of the relations
    explicit QuotientPresentation(int n) : ambient(n), rel(n) {}

    int dim() const { return static_cast<int>(basis_cols.size()); }
    /// Coordinates of [x] in the quotient basis.
    SVec project(const SVec& x) const;
    /// Ambient representative of quotient basis vector k (a unit vector).
    SVec include(int k) const;
};

QuotientPresentation quotient_by_rows(int ncols, const std::vector<SVec>& relation_rows);

}  // namespace plathom
