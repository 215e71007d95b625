#include "plathom/khovanov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace plathom {

namespace {

// Independent circle tracing on the (column, band) segment grid.  Bands run
// 0..N between the levels (0 = cups, t = crossing t, N+1 = caps).
struct Tracer {
    int n_pairs;
    int nword;
    std::vector<int> parent;

    Tracer(int np, int nw) : n_pairs(np), nword(nw), parent(static_cast<size_t>(2 * np * (nw + 1))) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int seg(int col, int band) const { return (col - 1) * (nword + 1) + band; }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::vector<int> trace_circles(const PlatWord& w, const std::vector<int>& bits, int& k_out) {
    const int N = static_cast<int>(w.crossings.size());
    Tracer tr(w.n_pairs, N);
    for (int i = 1; i <= w.n_pairs; ++i) {
        tr.unite(tr.seg(2 * i - 1, 0), tr.seg(2 * i, 0));      // cup
        tr.unite(tr.seg(2 * i - 1, N), tr.seg(2 * i, N));      // cap
    }
    for (int t = 0; t < N; ++t) {
        int p = w.crossings[t].pos;
        int s = w.crossings[t].sign;
        // Turnback iff (positive, bit 1) or (negative, bit 0).
        bool turnback = (s > 0 && bits[static_cast<size_t>(t)] == 1) ||
                        (s < 0 && bits[static_cast<size_t>(t)] == 0);
        for (int c = 1; c <= 2 * w.n_pairs; ++c) {
            if (c == p || c == p + 1) continue;
            tr.unite(tr.seg(c, t), tr.seg(c, t + 1));
        }
        if (turnback) {
            tr.unite(tr.seg(p, t), tr.seg(p + 1, t));
            tr.unite(tr.seg(p, t + 1), tr.seg(p + 1, t + 1));
        } else {
            tr.unite(tr.seg(p, t), tr.seg(p, t + 1));
            tr.unite(tr.seg(p + 1, t), tr.seg(p + 1, t + 1));
        }
    }
    int nseg = 2 * w.n_pairs * (N + 1);
    std::vector<int> circle(static_cast<size_t>(nseg));
    std::map<int, int> id_of_root;
    k_out = 0;
    for (int s = 0; s < nseg; ++s) {
        int r = tr.find(s);
        auto it = id_of_root.find(r);
        if (it == id_of_root.end()) it = id_of_root.emplace(r, k_out++).first;
        circle[static_cast<size_t>(s)] = it->second;
    }
    return circle;
}

std::vector<int> bits_of_vertex(unsigned u, int N) {
    std::vector<int> b(static_cast<size_t>(N));
    for (int t = 0; t < N; ++t) b[static_cast<size_t>(t)] = (u >> t) & 1u;
    return b;
}

}  // namespace

int kh_circle_count(const PlatWord& w, const std::vector<int>& bits) {
    int k = 0;
    trace_circles(w, bits, k);
    return k;
}

KhComplex kh_complex(const PlatWord& w) {
    const int N = static_cast<int>(w.crossings.size());
    if (N > 24) throw std::runtime_error("kh_complex: word too long");
    KhComplex kc;
    kc.word = w;
    const int nplus = w.n_plus();
    const int nminus = w.n_minus();
    for (unsigned u = 0; u < (1u << N); ++u) {
        std::vector<int> bits = bits_of_vertex(u, N);
        int k = 0;
        std::vector<int> circ = trace_circles(w, bits, k);
        int h = 0;
        for (int b : bits) h += b;
        KhPiece p;
        p.bits = bits;
        p.k = k;
        p.gr_h = h - nminus;
        p.gr_q_one = nplus - 2 * nminus + h + k;
        kc.pieces.push_back(std::move(p));
        kc.circle_of_segment.push_back(std::move(circ));
    }
    return kc;
}

KhResult kh_homology(const PlatWord& w) {
    const int N = static_cast<int>(w.crossings.size());
    KhComplex kc = kh_complex(w);

    // Group generators (u, mask) by (gr_h, gr_q).
    std::map<std::pair<int, int>, std::vector<std::pair<unsigned, unsigned>>> group;
    std::map<std::pair<unsigned, unsigned>, int> index_in_group;
    for (unsigned u = 0; u < (1u << N); ++u) {
        const KhPiece& p = kc.pieces[u];
        for (unsigned mask = 0; mask < (1u << p.k); ++mask) {
            int q = p.gr_q_one - 2 * __builtin_popcount(mask);
            auto key = std::make_pair(p.gr_h, q);
            index_in_group[{u, mask}] = static_cast<int>(group[key].size());
            group[key].push_back({u, mask});
        }
    }

    // Differential matrices per (h, q) -> (h+1, q).
    std::map<std::pair<int, int>, Mat> dmat;
    for (const auto& [key, gens] : group) {
        auto tkey = std::make_pair(key.first + 1, key.second);
        auto tit = group.find(tkey);
        int tdim = (tit == group.end()) ? 0 : static_cast<int>(tit->second.size());
        Mat M(tdim, static_cast<int>(gens.size()));
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            auto [u, mask] = gens[gi];
            const KhPiece& pu = kc.pieces[u];
            for (int c = 0; c < N; ++c) {
                if ((u >> c) & 1u) continue;
                unsigned v = u | (1u << c);
                const KhPiece& pv = kc.pieces[v];
                int sgn = 1;
                for (int j = 0; j < c; ++j)
                    if ((u >> j) & 1u) sgn = -sgn;
                // Circle correspondence via shared segments.
                const std::vector<int>& cu = kc.circle_of_segment[u];
                const std::vector<int>& cv = kc.circle_of_segment[v];
                std::vector<std::vector<int>> images(static_cast<size_t>(pu.k));
                for (size_t s = 0; s < cu.size(); ++s) {
                    auto& im = images[static_cast<size_t>(cu[s])];
                    if (std::find(im.begin(), im.end(), cv[s]) == im.end()) im.push_back(cv[s]);
                }
                auto emit = [&](unsigned tmask, int coeff) {
                    auto it = index_in_group.find({v, tmask});
                    if (it == index_in_group.end())
                        throw std::runtime_error("kh_homology: target generator missing");
                    M.set(it->second, static_cast<int>(gi),
                          M.get(it->second, static_cast<int>(gi)) + Rat(coeff));
                };
                if (pv.k == pu.k - 1) {
                    // Merge: the two u-circles with the same image.
                    unsigned tmask = 0;
                    bool zero = false;
                    std::vector<int> seen(static_cast<size_t>(pv.k), 0);
                    for (int c2 = 0; c2 < pu.k; ++c2) {
                        if (!((mask >> c2) & 1u)) continue;
                        int img = images[static_cast<size_t>(c2)].at(0);
                        if (seen[static_cast<size_t>(img)]) {
                            zero = true;  // X * X -> 0 on the merged circle
                            break;
                        }
                        seen[static_cast<size_t>(img)] = 1;
                        tmask |= (1u << img);
                    }
                    if (!zero) emit(tmask, sgn);
                } else if (pv.k == pu.k + 1) {
                    // Split: one u-circle has two images.
                    int zc = -1;
                    for (int c2 = 0; c2 < pu.k; ++c2)
                        if (images[static_cast<size_t>(c2)].size() == 2) zc = c2;
                    if (zc < 0) throw std::runtime_error("kh_homology: split circle not found");
                    unsigned base = 0;
                    for (int c2 = 0; c2 < pu.k; ++c2) {
                        if (c2 == zc || !((mask >> c2) & 1u)) continue;
                        base |= (1u << images[static_cast<size_t>(c2)].at(0));
                    }
                    int a = images[static_cast<size_t>(zc)][0];
                    int b = images[static_cast<size_t>(zc)][1];
                    if ((mask >> zc) & 1u) {
                        emit(base | (1u << a) | (1u << b), sgn);  // X -> X1 X2
                    } else {
                        emit(base | (1u << a), sgn);  // 1 -> X1 + X2
                        emit(base | (1u << b), sgn);
                    }
                } else {
                    throw std::runtime_error("kh_homology: circle count changed by != 1");
                }
            }
        }
        dmat[key] = std::move(M);
    }

    // d^2 = 0.
    for (const auto& [key, M] : dmat) {
        auto tkey = std::make_pair(key.first + 1, key.second);
        auto tit = dmat.find(tkey);
        if (tit == dmat.end() || M.rows == 0) continue;
        if (!mat_mul(tit->second, M).is_zero())
            throw std::runtime_error("kh_homology: d^2 != 0");
    }

    KhResult res;
    for (const auto& [key, gens] : group) {
        int dim = static_cast<int>(gens.size());
        int rk_out = rank_ff(dmat.at(key));
        int rk_in = 0;
        auto pit = dmat.find(std::make_pair(key.first - 1, key.second));
        if (pit != dmat.end()) rk_in = rank_ff(pit->second);
        int hdim = dim - rk_out - rk_in;
        if (hdim < 0) throw std::runtime_error("kh_homology: negative homology dimension");
        if (hdim > 0) res.hq.add(key, hdim);
    }
    res.delta = res.hq.collapse(-2, 1);
    return res;
}

}  // namespace plathom
