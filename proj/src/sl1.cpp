#include "plathom/sl1.hpp"

#include "plathom/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace plathom {

namespace {

// One arrow of a tensor factor: multiply by a polynomial (each term a list of
// variable indices, length 0..2) while moving state `from` -> `to`.
struct Arrow {
    int from, to;
    std::vector<std::pair<std::vector<int>, int>> poly;
};

struct FactorTables {
    std::vector<std::pair<int, int>> states;  // (q, h)
    std::vector<Arrow> plus, minus;
};

// Bivalent vertex, in-edge i / out-edge j (paper 5.2): states (0,-2), (0,0);
// d0+ multiplies by U_i - U_j, d0- by U_i + U_j.
FactorTables bivalent_tables(int i, int j) {
    FactorTables t;
    t.states = {{0, -2}, {0, 0}};
    t.plus = {{0, 1, {{{i}, 1}, {{j}, -1}}}};
    t.minus = {{1, 0, {{{i}, 1}, {{j}, 1}}}};
    return t;
}

// 4-valent vertex with in-edges i,j and out-edges k,l.  States and arrows
// follow the figure in 5.2; the quadratic arrows carry U_k U_l - U_i U_j so
// that each factor satisfies d0+ d0- + d0- d0+ = sum_in U^2 - sum_out U^2
// (the sign the matrix-factorization identity forces; guarded by the global
// d^2 = 0 assertions in graded_homology / the unit tests).
FactorTables four_tables(int i, int j, int k, int l) {
    FactorTables t;
    t.states = {{-1, -4}, {-1, -2}, {1, -2}, {1, 0}};
    std::vector<std::pair<std::vector<int>, int>> L = {{{i}, 1}, {{j}, 1}, {{k}, -1}, {{l}, -1}};
    std::vector<std::pair<std::vector<int>, int>> nL = {{{i}, -1}, {{j}, -1}, {{k}, 1}, {{l}, 1}};
    std::vector<std::pair<std::vector<int>, int>> Lp = {{{i}, 1}, {{j}, 1}, {{k}, 1}, {{l}, 1}};
    std::vector<std::pair<std::vector<int>, int>> nLp = {{{i}, -1}, {{j}, -1}, {{k}, -1}, {{l}, -1}};
    std::vector<std::pair<std::vector<int>, int>> Q = {{{k, l}, 1}, {{i, j}, -1}};
    std::vector<std::pair<std::vector<int>, int>> two = {{{}, 2}};
    t.plus = {{0, 1, L}, {0, 2, Q}, {1, 3, Q}, {2, 3, nL}};
    t.minus = {{1, 0, Lp}, {2, 0, two}, {3, 1, two}, {3, 2, nLp}};
    return t;
}

using StateVec = std::vector<std::uint8_t>;
using Expo = std::vector<std::uint16_t>;

struct Grid {
    int nvars = 0;
    std::vector<FactorTables> factors;

    std::vector<StateVec> tuples;
    std::vector<int> tuple_q, tuple_h;
    std::map<StateVec, int> tuple_id;

    std::map<int, std::vector<Expo>> mons;          // degree -> monomials
    std::map<int, std::map<Expo, int>> mon_id;

    void build_tuples() {
        StateVec cur(factors.size(), 0);
        build_rec(cur, 0, 0, 0);
    }
    void build_rec(StateVec& cur, size_t f, int q, int h) {
        if (f == factors.size()) {
            tuple_id[cur] = static_cast<int>(tuples.size());
            tuples.push_back(cur);
            tuple_q.push_back(q);
            tuple_h.push_back(h);
            return;
        }
        for (size_t s = 0; s < factors[f].states.size(); ++s) {
            cur[f] = static_cast<std::uint8_t>(s);
            build_rec(cur, f + 1, q + factors[f].states[s].first,
                      h + factors[f].states[s].second);
        }
    }

    const std::vector<Expo>& monomials(int d) {
        auto it = mons.find(d);
        if (it != mons.end()) return it->second;
        std::vector<Expo> out;
        Expo cur(static_cast<size_t>(nvars), 0);
        mon_rec(out, cur, 0, d);
        auto& slot = mons[d];
        slot = std::move(out);
        auto& ids = mon_id[d];
        for (size_t i = 0; i < slot.size(); ++i) ids[slot[i]] = static_cast<int>(i);
        return slot;
    }
    void mon_rec(std::vector<Expo>& out, Expo& cur, int v, int left) {
        if (v == nvars - 1) {
            cur[static_cast<size_t>(v)] = static_cast<std::uint16_t>(left);
            out.push_back(cur);
            cur[static_cast<size_t>(v)] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<size_t>(v)] = static_cast<std::uint16_t>(e);
            mon_rec(out, cur, v + 1, left - e);
            cur[static_cast<size_t>(v)] = 0;
        }
    }

    // Basis at (q, h): for each tuple with sum h, monomials of degree
    // (sum q - q) / 2.  Returns per-tuple offsets; total dim in *dim.
    struct Slice {
        std::vector<std::pair<int, int>> tuple_off;  // (tuple id, offset)
        int dim = 0;
    };
    std::map<std::pair<int, int>, Slice> slices;

    const Slice& slice(int q, int h) {
        auto key = std::make_pair(q, h);
        auto it = slices.find(key);
        if (it != slices.end()) return it->second;
        Slice s;
        for (size_t t = 0; t < tuples.size(); ++t) {
            if (tuple_h[t] != h) continue;
            int num = tuple_q[t] - q;
            if (num < 0 || num % 2) continue;
            s.tuple_off.push_back({static_cast<int>(t), s.dim});
            s.dim += static_cast<int>(monomials(num / 2).size());
        }
        return slices.emplace(key, std::move(s)).first->second;
    }

    int state_parity(size_t f, int s) const {
        return (factors[f].states[static_cast<size_t>(s)].second / 2) & 1;
    }

    // d0+/d0- from (q, h); q-degree -2, h-degree +2 (plus) or -2 (minus).
    Mat diff(int q, int h, bool plus) {
        const Slice& src = slice(q, h);
        const Slice& dst = slice(q - 2, h + (plus ? 2 : -2));
        std::vector<std::map<int, Rat>> acc(static_cast<size_t>(dst.dim));
        for (auto [tid, off] : src.tuple_off) {
            const StateVec& tu = tuples[static_cast<size_t>(tid)];
            int deg = (tuple_q[static_cast<size_t>(tid)] - q) / 2;
            const auto& ms = monomials(deg);
            int sign = 1;
            for (size_t f = 0; f < factors.size(); ++f) {
                const auto& arrows = plus ? factors[f].plus : factors[f].minus;
                for (const Arrow& a : arrows) {
                    if (a.from != tu[f]) continue;
                    StateVec tu2 = tu;
                    tu2[f] = static_cast<std::uint8_t>(a.to);
                    int tid2 = tuple_id.at(tu2);
                    int off2 = -1, deg2 = (tuple_q[static_cast<size_t>(tid2)] - (q - 2)) / 2;
                    for (auto [t2, o2] : dst.tuple_off)
                        if (t2 == tid2) off2 = o2;
                    if (off2 < 0) throw std::logic_error("sl1: target tuple missing");
                    const auto& ids2 = (monomials(deg2), mon_id.at(deg2));
                    for (size_t mi = 0; mi < ms.size(); ++mi) {
                        for (const auto& [vars, c] : a.poly) {
                            Expo m2 = ms[mi];
                            for (int v : vars) ++m2[static_cast<size_t>(v)];
                            int col = off + static_cast<int>(mi);
                            int row = off2 + ids2.at(m2);
                            acc[static_cast<size_t>(row)][col] += Rat(sign * c);
                        }
                    }
                }
                sign *= state_parity(f, tu[f]) ? -1 : 1;
            }
        }
        Mat A(dst.dim, src.dim);
        for (int r = 0; r < dst.dim; ++r)
            for (const auto& [c, v] : acc[static_cast<size_t>(r)])
                if (v != 0) A.row[static_cast<size_t>(r)].push_back({c, v});
        return A;
    }
};

}  // namespace

Sl1Complex build_sl1_closure(const SingularGraph& g, CycleMask Z) {
    Sl1Complex c;
    std::vector<int> var(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (!((Z >> e) & 1ull)) var[e] = c.nvars++;
    auto in_z = [&](int e) { return ((Z >> e) & 1ull) != 0; };

    for (int v : g.four_valent) {
        Sl1Factor f;
        if (cycle_at_vertex(g, Z, v) == 1) {
            f.four = false;
            f.ei = var[static_cast<size_t>(in_z(g.ie(v)) ? g.je(v) : g.ie(v))];
            f.ej = var[static_cast<size_t>(in_z(g.ke(v)) ? g.le(v) : g.ke(v))];
        } else {
            f.four = true;
            f.ei = var[static_cast<size_t>(g.ie(v))];
            f.ej = var[static_cast<size_t>(g.je(v))];
            f.ek = var[static_cast<size_t>(g.ke(v))];
            f.el = var[static_cast<size_t>(g.le(v))];
        }
        c.factors.push_back(f);
    }
    // One closing vertex per cup/cap pair: cap's surviving in-edge flows into
    // the cup's surviving out-edge.
    for (int i = 0; i < g.n_pairs; ++i) {
        const Vertex& cap = g.vertices[static_cast<size_t>(g.caps[static_cast<size_t>(i)])];
        const Vertex& cup = g.vertices[static_cast<size_t>(g.cups[static_cast<size_t>(i)])];
        Sl1Factor f;
        f.four = false;
        f.ei = var[static_cast<size_t>(in_z(cap.in[0]) ? cap.in[1] : cap.in[0])];
        f.ej = var[static_cast<size_t>(in_z(cup.out[0]) ? cup.out[1] : cup.out[0])];
        c.factors.push_back(f);
    }
    for (const Sl1Factor& f : c.factors)
        if (f.ei < 0 || f.ej < 0 || (f.four && (f.ek < 0 || f.el < 0)))
            throw std::logic_error("sl1: deleted edge survives in a factor");
    return c;
}

Sl1Complex sl1_unlink(int k) {
    Sl1Complex c;
    c.nvars = k;
    for (int i = 0; i < k; ++i) {
        Sl1Factor f;
        f.four = false;
        f.ei = f.ej = i;
        c.factors.push_back(f);
    }
    return c;
}

BigradedDims sl1_pm_homology(const Sl1Complex& c, int margin) {
    if (c.nvars <= 0 || c.factors.empty()) throw std::invalid_argument("sl1: empty complex");
    Grid grid;
    grid.nvars = c.nvars;
    int h_min = 0, nfour = 0;
    for (const Sl1Factor& f : c.factors) {
        if (f.four) {
            grid.factors.push_back(four_tables(f.ei, f.ej, f.ek, f.el));
            h_min -= 4;
            ++nfour;
        } else {
            grid.factors.push_back(bivalent_tables(f.ei, f.ej));
            h_min -= 2;
        }
    }
    grid.build_tuples();

    const int q_hi = nfour + 4;
    const int q_lo = -2 * margin - 2;

    // Stage 1: homology by d0+ at every (q, h).  Unlike the module slices,
    // every grid slice is finite and exactly computable, so presentations two
    // steps beyond the window make all reported gradings exact; the window
    // only bounds cost, and the bottom-vanishing check guards the support.
    std::map<std::pair<int, int>, HomologyPresentation> pres1;
    for (int h = h_min; h <= 0; h += 2) {
        for (int q = q_lo - 2; q <= q_hi + 2; ++q) {
            Mat d_out = grid.diff(q, h, true);
            Mat d_in = (h - 2 >= h_min) ? grid.diff(q + 2, h - 2, true)
                                        : Mat(grid.slice(q, h).dim, 0);
            if (!mat_mul(d_out, d_in).is_zero()) throw std::logic_error("sl1: d0+^2 != 0");
            pres1[{q, h}] = homology_presentation(d_out, d_in);
        }
    }

    // Stage 2: the induced d0-* on stage-1 classes, (q, h) -> (q-2, h-2).
    std::map<std::pair<int, int>, Mat> ind;
    for (int h = h_min + 2; h <= 0; h += 2) {
        for (int q = q_lo; q <= q_hi + 2; ++q) {
            const HomologyPresentation& S = pres1.at({q, h});
            const HomologyPresentation& T = pres1.at({q - 2, h - 2});
            Mat dm = grid.diff(q, h, false);
            Mat M(T.dim(), S.dim());
            for (int k = 0; k < S.dim(); ++k) {
                SVec y = mat_apply(dm, S.rep(k));
                for (const auto& [r, v] : T.project(y)) M.row[static_cast<size_t>(r)].push_back({k, v});
            }
            for (auto& r : M.row)
                std::sort(r.begin(), r.end());
            ind[{q, h}] = std::move(M);
        }
    }

    BigradedDims out;
    for (int h = h_min; h <= 0; h += 2) {
        for (int q = q_lo; q <= q_hi; ++q) {
            int dim = pres1.at({q, h}).dim();
            auto ito = ind.find({q, h});
            if (ito != ind.end()) dim -= rank_ff(ito->second);
            auto iti = ind.find({q + 2, h + 2});
            if (iti != ind.end()) dim -= rank_ff(iti->second);
            if (dim < 0) throw std::logic_error("sl1: negative homology dimension");
            if (dim > 0) {
                if (q <= q_lo + 1) throw std::runtime_error("window too small");
                out.add({q, h}, dim);
            }
        }
    }
    return out;
}

}  // namespace plathom
