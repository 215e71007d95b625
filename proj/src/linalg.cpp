#include "plathom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace plathom {

void Mat::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::runtime_error("Mat::set: index out of range");
    SVec& rw = row[r];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
    if (it != rw.end() && it->first == c) {
        if (v == 0)
            rw.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        rw.insert(it, {c, v});
    }
}

Rat Mat::get(int r, int c) const {
    const SVec& rw = row[r];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
    if (it != rw.end() && it->first == c) return it->second;
    return Rat(0);
}

bool Mat::is_zero() const {
    for (const SVec& r : row)
        if (!r.empty()) return false;
    return true;
}

SVec svec_axpy(const SVec& a, const Rat& c, const SVec& b) {
    if (c == 0) return a;
    SVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = c * b[j].second;
            if (v != 0) out.push_back({b[j].first, v});
            ++j;
        } else {
            Rat v = a[i].second + c * b[j].second;
            if (v != 0) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

SVec svec_add(const SVec& a, const SVec& b) { return svec_axpy(a, Rat(1), b); }

SVec svec_scale(const SVec& a, const Rat& c) {
    SVec out;
    if (c == 0) return out;
    out.reserve(a.size());
    for (const auto& e : a) out.push_back({e.first, c * e.second});
    return out;
}

bool svec_is_zero(const SVec& a) { return a.empty(); }

SVec mat_apply(const Mat& A, const SVec& x) {
    // A is row-sparse; y_r = <row_r, x>.
    SVec y;
    for (int r = 0; r < A.rows; ++r) {
        Rat s(0);
        const SVec& rw = A.row[r];
        size_t i = 0, j = 0;
        while (i < rw.size() && j < x.size()) {
            if (rw[i].first < x[j].first)
                ++i;
            else if (x[j].first < rw[i].first)
                ++j;
            else {
                s += rw[i].second * x[j].second;
                ++i;
                ++j;
            }
        }
        if (s != 0) y.push_back({r, s});
    }
    return y;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::runtime_error("mat_mul: dimension mismatch");
    Mat C(A.rows, B.cols);
    for (int r = 0; r < A.rows; ++r) {
        SVec acc;
        for (const auto& e : A.row[r]) acc = svec_axpy(acc, e.second, B.row[e.first]);
        C.row[r] = std::move(acc);
    }
    return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::runtime_error("mat_add: dimension mismatch");
    Mat C(A.rows, A.cols);
    for (int r = 0; r < A.rows; ++r) C.row[r] = svec_add(A.row[r], B.row[r]);
    return C;
}

Mat mat_scale(const Mat& A, const Rat& c) {
    Mat C(A.rows, A.cols);
    for (int r = 0; r < A.rows; ++r) C.row[r] = svec_scale(A.row[r], c);
    return C;
}

// ---------------------------------------------------------------------------
// EchelonBasis
// ---------------------------------------------------------------------------

void EchelonBasis::resort() {
    pivot_sorted_ = pivot_of_row_;
    std::sort(pivot_sorted_.begin(), pivot_sorted_.end());
}

bool EchelonBasis::contains_pivot(int col) const {
    if (row_of_pivot_.empty()) return false;
    return row_of_pivot_[col] >= 0;
}

SVec EchelonBasis::reduce(SVec v) const {
    std::vector<Rat> scratch;
    return reduce_tracked(std::move(v), scratch);
}

SVec EchelonBasis::reduce_tracked(SVec v, std::vector<Rat>& coeff) const {
    coeff.assign(rows_.size(), Rat(0));
    if (rows_.empty()) return v;
    // Sweep pivots in ascending column order; subtracting a row only creates
    // entries in strictly larger columns, so one pass suffices.
    for (int p : pivot_sorted_) {
        auto it = std::lower_bound(v.begin(), v.end(), p,
                                   [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
        if (it == v.end() || it->first != p) continue;
        int r = row_of_pivot_[p];
        Rat c = it->second;  // rows are pivot-normalized to 1
        coeff[r] = c;
        v = svec_axpy(v, -c, rows_[r]);
    }
    return v;
}

bool EchelonBasis::insert(SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int p = v.front().first;
    Rat lead = v.front().second;
    for (auto& e : v) e.second /= lead;
    if (row_of_pivot_.empty()) row_of_pivot_.assign(ncols_, -1);
    row_of_pivot_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    pivot_of_row_.push_back(p);
    pivot_list_.push_back(p);
    resort();
    return true;
}

// ---------------------------------------------------------------------------
// Fraction-free rank
// ---------------------------------------------------------------------------

namespace {

using ZVec = std::vector<std::pair<int, mpz_class>>;

ZVec scale_row_to_integer(const SVec& r) {
    mpz_class lcm(1);
    for (const auto& e : r) {
        mpz_class den = e.second.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    ZVec out;
    out.reserve(r.size());
    for (const auto& e : r) {
        mpz_class v = e.second.get_num() * (lcm / e.second.get_den());
        out.push_back({e.first, v});
    }
    return out;
}

void normalize_content(ZVec& r) {
    if (r.empty()) return;
    mpz_class g(0);
    for (const auto& e : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g > 1)
        for (auto& e : r) e.second /= g;
    if (r.front().second < 0)
        for (auto& e : r) e.second = -e.second;
}

// r := pv * r - rv * p, content-normalized (rv = r's entry at the pivot col).
ZVec eliminate_row(const ZVec& r, const ZVec& p, const mpz_class& pv, const mpz_class& rv) {
    ZVec out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back({r[i].first, pv * r[i].second});
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.push_back({p[j].first, -rv * p[j].second});
            ++j;
        } else {
            mpz_class v = pv * r[i].second - rv * p[j].second;
            if (v != 0) out.push_back({r[i].first, v});
            ++i;
            ++j;
        }
    }
    normalize_content(out);
    return out;
}

int rank_ff_impl(const Mat& A, bool parallel) {
    std::vector<ZVec> rows;
    rows.reserve(A.rows);
    for (const SVec& r : A.row) {
        if (r.empty()) continue;
        ZVec z = scale_row_to_integer(r);
        normalize_content(z);
        rows.push_back(std::move(z));
    }
    int rank = 0;
    while (!rows.empty()) {
        // Pivot: smallest bit-length entry; ties by column, then row order.
        size_t best_row = rows.size();
        int best_col = -1;
        size_t best_bits = 0;
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            for (const auto& e : rows[ri]) {
                size_t bits = mpz_sizeinbase(e.second.get_mpz_t(), 2);
                if (best_row == rows.size() || bits < best_bits ||
                    (bits == best_bits && e.first < best_col)) {
                    best_row = ri;
                    best_col = e.first;
                    best_bits = bits;
                }
            }
        }
        if (best_row == rows.size()) break;
        ++rank;
        ZVec pivot_row = std::move(rows[best_row]);
        rows.erase(rows.begin() + static_cast<long>(best_row));
        mpz_class pv;
        for (const auto& e : pivot_row)
            if (e.first == best_col) pv = e.second;

        auto update = [&](ZVec& r) {
            mpz_class rv(0);
            for (const auto& e : r)
                if (e.first == best_col) rv = e.second;
            if (rv != 0) r = eliminate_row(r, pivot_row, pv, rv);
        };
        if (parallel) {
#ifdef PLATHOM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
            for (long ri = 0; ri < static_cast<long>(rows.size()); ++ri) update(rows[ri]);
        } else {
            for (auto& r : rows) update(r);
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const ZVec& r) { return r.empty(); }),
                   rows.end());
    }
    return rank;
}

}  // namespace

int rank_ff(const Mat& A) { return rank_ff_impl(A, true); }
int rank_ff_serial(const Mat& A) { return rank_ff_impl(A, false); }

int rank_dense_oracle(const Mat& A) {
    std::vector<std::vector<Rat>> m(A.rows, std::vector<Rat>(A.cols, Rat(0)));
    for (int r = 0; r < A.rows; ++r)
        for (const auto& e : A.row[r]) m[r][e.first] = e.second;
    int rank = 0;
    int rr = 0;
    for (int c = 0; c < A.cols && rr < A.rows; ++c) {
        int pr = -1;
        for (int r = rr; r < A.rows; ++r)
            if (m[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rr], m[pr]);
        for (int r = 0; r < A.rows; ++r) {
            if (r == rr || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rr][c];
            for (int cc = c; cc < A.cols; ++cc) m[r][cc] -= f * m[rr][cc];
        }
        ++rank;
        ++rr;
    }
    return rank;
}

std::vector<SVec> kernel_basis(const Mat& A) {
    EchelonBasis eb(A.cols);
    for (const SVec& r : A.row) eb.insert(r);
    // Sort echelon rows by pivot descending for back substitution.
    std::vector<int> order(eb.rank());
    for (int i = 0; i < eb.rank(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return eb.basis_row(a).front().first > eb.basis_row(b).front().first;
    });
    std::vector<SVec> out;
    for (int j = 0; j < A.cols; ++j) {
        if (eb.contains_pivot(j)) continue;
        // x_j = 1; solve for pivot coordinates from bottom up.
        std::vector<std::pair<int, Rat>> x{{j, Rat(1)}};
        SVec xv = x;
        for (int k : order) {
            const SVec& rw = eb.basis_row(k);
            int p = rw.front().first;
            // residual = <row, x>
            Rat s(0);
            size_t i = 0, jj = 0;
            while (i < rw.size() && jj < xv.size()) {
                if (rw[i].first < xv[jj].first)
                    ++i;
                else if (xv[jj].first < rw[i].first)
                    ++jj;
                else {
                    s += rw[i].second * xv[jj].second;
                    ++i;
                    ++jj;
                }
            }
            if (s != 0) {
                // rows are pivot-normalized: x_p -= s.
                SVec unit{{p, Rat(1)}};
                xv = svec_axpy(xv, -s, unit);
            }
        }
        out.push_back(std::move(xv));
    }
    return out;
}

SVec QuotientPresentation::project(const SVec& x) const {
    SVec r = rel.reduce(x);
    SVec out;
    out.reserve(r.size());
    for (const auto& e : r) {
        auto it = std::lower_bound(basis_cols.begin(), basis_cols.end(), e.first);
        if (it == basis_cols.end() || *it != e.first)
            throw std::runtime_error("QuotientPresentation::project: residual on pivot column");
        out.push_back({static_cast<int>(it - basis_cols.begin()), e.second});
    }
    return out;
}

SVec QuotientPresentation::include(int k) const {
    return SVec{{basis_cols[static_cast<size_t>(k)], Rat(1)}};
}

QuotientPresentation quotient_by_rows(int ncols, const std::vector<SVec>& relation_rows) {
    QuotientPresentation q(ncols);
    for (const SVec& r : relation_rows) q.rel.insert(r);
    for (int c = 0; c < ncols; ++c)
        if (!q.rel.contains_pivot(c)) q.basis_cols.push_back(c);
    return q;
}

}  // namespace plathom
