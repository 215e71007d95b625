#include "plathom/cycles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace plathom {

bool Monomial::touches(CycleMask z) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && (z >> i) & 1ull) return true;
    return false;
}

bool vertex_on_cycle(const SingularGraph& g, CycleMask Z, int u) {
    const Vertex& vx = g.vertices[static_cast<size_t>(u)];
    for (int s = 0; s < 2; ++s) {
        if (vx.in[s] >= 0 && ((Z >> vx.in[s]) & 1ull)) return true;
        if (vx.out[s] >= 0 && ((Z >> vx.out[s]) & 1ull)) return true;
    }
    return false;
}

int cycle_at_vertex(const SingularGraph& g, CycleMask Z, int v) {
    const Vertex& vx = g.vertices[static_cast<size_t>(v)];
    if (vx.kind != VertexKind::FourValent)
        throw std::runtime_error("cycle_at_vertex: not a 4-valent vertex");
    int nin = ((Z >> vx.in[0]) & 1ull) + ((Z >> vx.in[1]) & 1ull);
    int nout = ((Z >> vx.out[0]) & 1ull) + ((Z >> vx.out[1]) & 1ull);
    if (nin == 0 && nout == 0) return 0;
    if (nin == 1 && nout == 1) return 1;
    throw std::runtime_error("cycle_at_vertex: not a cycle at this vertex");
}

std::vector<CycleMask> enumerate_cycles(const SingularGraph& g) {
    if (g.edges.size() > 63) throw std::runtime_error("enumerate_cycles: too many edges");
    std::vector<CycleMask> out;
    // Vertices are level-sorted (cups, 4-valent ascending, caps), so every
    // edge's tail is processed before its head.
    std::vector<int> order;
    for (int c : g.cups) order.push_back(c);
    for (int v : g.four_valent) order.push_back(v);
    for (int c : g.caps) order.push_back(c);

    std::function<void(size_t, CycleMask)> rec = [&](size_t k, CycleMask mask) {
        if (k == order.size()) {
            out.push_back(mask);
            return;
        }
        const Vertex& vx = g.vertices[static_cast<size_t>(order[k])];
        if (vx.kind == VertexKind::Cup) {
            rec(k + 1, mask | (1ull << vx.out[0]));
            rec(k + 1, mask | (1ull << vx.out[1]));
        } else if (vx.kind == VertexKind::FourValent) {
            int nin = ((mask >> vx.in[0]) & 1ull) + ((mask >> vx.in[1]) & 1ull);
            if (nin == 2) return;  // paths may not meet
            if (nin == 0) {
                rec(k + 1, mask);
            } else {
                rec(k + 1, mask | (1ull << vx.out[0]));
                rec(k + 1, mask | (1ull << vx.out[1]));
            }
        } else {  // cap: exactly one incoming edge chosen
            int nin = ((mask >> vx.in[0]) & 1ull) + ((mask >> vx.in[1]) & 1ull);
            if (nin == 1) rec(k + 1, mask);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

long cycle_count_oracle(const SingularGraph& g) {
    // Occupancy DP over column bitmasks, one transfer per 4-valent vertex.
    std::map<std::uint32_t, long> state;
    int n = g.n_pairs;
    for (std::uint32_t choice = 0; choice < (1u << n); ++choice) {
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i) {
            int col = 2 * i + 1 + ((choice >> i) & 1u);  // one strand per cup
            mask |= (1u << col);
        }
        state[mask] += 1;
    }
    for (int fv : g.four_valent) {
        int p = g.vertices[static_cast<size_t>(fv)].pos;
        std::map<std::uint32_t, long> next;
        for (const auto& [mask, cnt] : state) {
            int occ = ((mask >> p) & 1u) + ((mask >> (p + 1)) & 1u);
            if (occ == 2) continue;
            if (occ == 0) {
                next[mask] += cnt;
            } else {
                std::uint32_t base = mask & ~((1u << p) | (1u << (p + 1)));
                next[base | (1u << p)] += cnt;
                next[base | (1u << (p + 1))] += cnt;
            }
        }
        state.swap(next);
    }
    long total = 0;
    for (const auto& [mask, cnt] : state) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            int occ = ((mask >> (2 * i + 1)) & 1u) + ((mask >> (2 * i + 2)) & 1u);
            if (occ != 1) ok = false;
        }
        if (ok) total += cnt;
    }
    return total;
}

namespace {

struct ZPath {
    std::vector<int> edges;     ///< bottom to top
    std::vector<int> vertices;  ///< size edges+1; [0] = cup, back = cap
    int index_of(int e) const {
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == e) return static_cast<int>(i);
        return -1;
    }
};

ZPath path_through(const SingularGraph& g, CycleMask Z, int ei) {
    if (!((Z >> ei) & 1ull)) throw std::runtime_error("path_through: edge not in cycle");
    auto z_in = [&](int v) -> int {
        const Vertex& vx = g.vertices[static_cast<size_t>(v)];
        if (vx.in[0] >= 0 && ((Z >> vx.in[0]) & 1ull)) return vx.in[0];
        if (vx.in[1] >= 0 && ((Z >> vx.in[1]) & 1ull)) return vx.in[1];
        return -1;
    };
    auto z_out = [&](int v) -> int {
        const Vertex& vx = g.vertices[static_cast<size_t>(v)];
        if (vx.out[0] >= 0 && ((Z >> vx.out[0]) & 1ull)) return vx.out[0];
        if (vx.out[1] >= 0 && ((Z >> vx.out[1]) & 1ull)) return vx.out[1];
        return -1;
    };
    // Walk down to the cup.
    std::vector<int> down;
    int e = ei;
    while (true) {
        down.push_back(e);
        int t = g.edges[static_cast<size_t>(e)].tail;
        if (g.vertices[static_cast<size_t>(t)].kind == VertexKind::Cup) break;
        e = z_in(t);
        if (e < 0) throw std::runtime_error("path_through: broken path below");
    }
    std::reverse(down.begin(), down.end());
    // Walk up to the cap.
    std::vector<int> up;
    e = ei;
    while (true) {
        int h = g.edges[static_cast<size_t>(e)].head;
        if (g.vertices[static_cast<size_t>(h)].kind == VertexKind::Cap) break;
        e = z_out(h);
        if (e < 0) throw std::runtime_error("path_through: broken path above");
        up.push_back(e);
    }
    ZPath p;
    p.edges = down;
    p.edges.insert(p.edges.end(), up.begin(), up.end());
    p.vertices.push_back(g.edges[static_cast<size_t>(p.edges.front())].tail);
    for (int pe : p.edges) p.vertices.push_back(g.edges[static_cast<size_t>(pe)].head);
    return p;
}

/// Enumerate all disks with ∂_L = path edges [a, b) and any right path; the
/// left segment must contain the marked edge/vertex per the caller.
void collect_disks(const SingularGraph& g, const CellComplex& cc, const ZPath& P, int a, int b,
                   std::vector<Disk>& out) {
    int v_b = P.vertices[static_cast<size_t>(a)];
    int v_t = P.vertices[static_cast<size_t>(b)];
    int lb = g.vertices[static_cast<size_t>(v_b)].level;
    int lt = g.vertices[static_cast<size_t>(v_t)].level;
    // Column of the left boundary per band.
    std::vector<int> colL(static_cast<size_t>(lt), 0);
    for (int k = a; k < b; ++k) {
        const Edge& ed = g.edges[static_cast<size_t>(P.edges[static_cast<size_t>(k)])];
        for (int band = ed.lo_level; band < ed.hi_level; ++band)
            colL[static_cast<size_t>(band)] = ed.col;
    }
    std::vector<char> on_left_vertex(g.vertices.size(), 0);
    for (int k = a; k <= b; ++k) on_left_vertex[static_cast<size_t>(P.vertices[static_cast<size_t>(k)])] = 1;
    std::vector<char> left_edge(g.edges.size(), 0);
    for (int k = a; k < b; ++k) left_edge[static_cast<size_t>(P.edges[static_cast<size_t>(k)])] = 1;

    std::vector<int> rpath;
    std::function<void(int)> dfs = [&](int u) {
        const Vertex& vu = g.vertices[static_cast<size_t>(u)];
        for (int s = 0; s < 2; ++s) {
            int f = vu.out[s];
            if (f < 0 || left_edge[static_cast<size_t>(f)]) continue;
            const Edge& fe = g.edges[static_cast<size_t>(f)];
            if (fe.hi_level > lt) continue;
            bool ok = true;
            for (int band = fe.lo_level; band < fe.hi_level && ok; ++band)
                if (fe.col <= colL[static_cast<size_t>(band)]) ok = false;
            if (!ok) continue;
            int h = fe.head;
            if (h == v_t) {
                if (fe.hi_level != lt) continue;
                // Complete candidate: collect the enclosed cells.
                rpath.push_back(f);
                std::vector<int> colR(static_cast<size_t>(lt), 0);
                for (int re : rpath) {
                    const Edge& red = g.edges[static_cast<size_t>(re)];
                    for (int band = red.lo_level; band < red.hi_level; ++band)
                        colR[static_cast<size_t>(band)] = red.col;
                }
                std::vector<int> cells_enclosed;
                bool bounded = true;
                for (int band = lb; band < lt && bounded; ++band)
                    for (int gp = colL[static_cast<size_t>(band)];
                         gp < colR[static_cast<size_t>(band)] && bounded; ++gp) {
                        int cid = cc.cell_at(gp, band);
                        if (cid < 0)
                            bounded = false;
                        else
                            cells_enclosed.push_back(cid);
                    }
                if (bounded) {
                    std::sort(cells_enclosed.begin(), cells_enclosed.end());
                    cells_enclosed.erase(std::unique(cells_enclosed.begin(), cells_enclosed.end()),
                                         cells_enclosed.end());
                    Disk d;
                    d.v_b = v_b;
                    d.v_t = v_t;
                    d.left_path.assign(P.edges.begin() + a, P.edges.begin() + b);
                    d.right_path = rpath;
                    d.cell_set = std::move(cells_enclosed);
                    out.push_back(std::move(d));
                }
                rpath.pop_back();
            } else if (fe.hi_level < lt && !on_left_vertex[static_cast<size_t>(h)]) {
                rpath.push_back(f);
                dfs(h);
                rpath.pop_back();
            }
        }
    };
    dfs(v_b);
}

/// Fill I(D), O(D) for a disk whose ∂_L is P.edges[a, b), with the marked
/// region [mark_lo_vertex, mark_hi_vertex] in path-vertex indices: I ranges
/// over vertices (a, mark_lo], O over [mark_hi, b).
void fill_io(const SingularGraph& g, const CellComplex& cc, const ZPath& P, int a, int b,
             int mark_lo, int mark_hi, Disk& d) {
    // An edge belongs to I(D)/O(D) when it is attached to the relevant left
    // boundary segment but is not part of the disk itself: neither a boundary
    // edge nor an edge running through the interior.  (Edges whose far
    // endpoint also lies on the boundary still count; dropping them would
    // break homogeneity of the module action.)
    std::vector<char> on_disk_edge(g.edges.size(), 0);
    for (int k = a; k < b; ++k) on_disk_edge[static_cast<size_t>(P.edges[static_cast<size_t>(k)])] = 1;
    for (int re : d.right_path) on_disk_edge[static_cast<size_t>(re)] = 1;
    auto in_cells = [&](int cell) {
        return cell >= 0 &&
               std::binary_search(d.cell_set.begin(), d.cell_set.end(), cell);
    };
    auto interior = [&](int e) {
        const Edge& ed = g.edges[static_cast<size_t>(e)];
        return in_cells(cc.cell_at(ed.col - 1, ed.lo_level)) &&
               in_cells(cc.cell_at(ed.col, ed.lo_level));
    };
    auto counts = [&](int e) { return !on_disk_edge[static_cast<size_t>(e)] && !interior(e); };
    for (int k = a + 1; k <= mark_lo; ++k) {
        int u = P.vertices[static_cast<size_t>(k)];
        const Vertex& vu = g.vertices[static_cast<size_t>(u)];
        if (vu.kind != VertexKind::FourValent) continue;
        int lin = P.edges[static_cast<size_t>(k - 1)];
        int e = (lin == vu.in[1]) ? vu.in[0] : vu.in[1];
        if (counts(e)) d.in_edges.push_back(e);
    }
    for (int k = mark_hi; k < b; ++k) {
        int u = P.vertices[static_cast<size_t>(k)];
        const Vertex& vu = g.vertices[static_cast<size_t>(u)];
        if (vu.kind != VertexKind::FourValent) continue;
        int lout = P.edges[static_cast<size_t>(k)];
        int e = (lout == vu.out[1]) ? vu.out[0] : vu.out[1];
        if (counts(e)) d.out_edges.push_back(e);
    }
    std::sort(d.in_edges.begin(), d.in_edges.end());
    std::sort(d.out_edges.begin(), d.out_edges.end());
}

std::optional<Disk> minimal_of_family(const SingularGraph& g, const CellComplex& cc,
                                      const ZPath& P, int mark_lo, int mark_hi, int a_max,
                                      int b_min) {
    std::vector<Disk> family;
    for (int a = 0; a <= a_max; ++a)
        for (int b = b_min; b <= static_cast<int>(P.edges.size()); ++b)
            collect_disks(g, cc, P, a, b, family);
    if (family.empty()) return std::nullopt;
    size_t best = 0;
    for (size_t i = 1; i < family.size(); ++i)
        if (family[i].cell_set.size() < family[best].cell_set.size()) best = i;
    for (const Disk& d : family)
        if (!std::includes(d.cell_set.begin(), d.cell_set.end(), family[best].cell_set.begin(),
                           family[best].cell_set.end()))
            throw std::runtime_error("minimal_disk: no common minimal disk (contradicts §3.2)");
    Disk d = family[best];
    // Recover the left segment indices of the winner.
    int a = -1, b = -1;
    for (size_t i = 0; i < P.edges.size(); ++i) {
        if (P.edges[i] == d.left_path.front()) a = static_cast<int>(i);
        if (P.edges[i] == d.left_path.back()) b = static_cast<int>(i) + 1;
    }
    fill_io(g, cc, P, a, b, mark_lo, mark_hi, d);
    return d;
}

}  // namespace

std::optional<Disk> minimal_disk(const SingularGraph& g, const CellComplex& cc, CycleMask Z,
                                 int ei) {
    ZPath P = path_through(g, Z, ei);
    int idx = P.index_of(ei);
    // Left segment = edges [a, b) with a <= idx < b; I-range ends at the tail
    // of e_i (vertex idx), O-range starts at its head (vertex idx+1).
    return minimal_of_family(g, cc, P, idx, idx + 1, idx, idx + 1);
}

std::optional<Disk> minimal_disk_vertex(const SingularGraph& g, const CellComplex& cc, CycleMask Z,
                                        int v) {
    const Vertex& vx = g.vertices[static_cast<size_t>(v)];
    int zin = ((Z >> vx.in[0]) & 1ull) ? vx.in[0] : vx.in[1];
    ZPath P = path_through(g, Z, zin);
    int kv = -1;  // path-vertex index of v
    for (size_t k = 0; k < P.vertices.size(); ++k)
        if (P.vertices[k] == v) kv = static_cast<int>(k);
    if (kv <= 0 || kv >= static_cast<int>(P.vertices.size()) - 1)
        throw std::runtime_error("minimal_disk_vertex: vertex not interior to its strand");
    // v_b, v_t must be distinct from v: a < kv < b.
    return minimal_of_family(g, cc, P, kv, kv, kv - 1, kv + 1);
}

Monomial disk_coefficient(const SingularGraph& g, const Disk& d) {
    Monomial m(static_cast<int>(g.edges.size()));
    for (int e : d.in_edges) m.e[static_cast<size_t>(e)]++;
    for (int e : d.out_edges) m.e[static_cast<size_t>(e)]++;
    return m;
}

namespace {

bool right_boundary_meets_Z_only_at_endpoints(const SingularGraph& g, CycleMask Z, const Disk& d) {
    for (int re : d.right_path)
        if ((Z >> re) & 1ull) return false;
    for (size_t i = 0; i + 1 < d.right_path.size(); ++i) {
        int u = g.edges[static_cast<size_t>(d.right_path[i])].head;
        if (vertex_on_cycle(g, Z, u)) return false;
    }
    return true;
}

CycleMask replace_boundary(CycleMask Z, const Disk& d) {
    CycleMask out = Z;
    for (int e : d.left_path) out &= ~(1ull << e);
    for (int e : d.right_path) out |= (1ull << e);
    return out;
}

bool is_cycle(const SingularGraph& g, CycleMask Z) {
    for (const Vertex& vx : g.vertices) {
        int nin = 0, nout = 0;
        for (int s = 0; s < 2; ++s) {
            if (vx.in[s] >= 0) nin += (Z >> vx.in[s]) & 1ull;
            if (vx.out[s] >= 0) nout += (Z >> vx.out[s]) & 1ull;
        }
        if (vx.kind == VertexKind::Cup && nout != 1) return false;
        if (vx.kind == VertexKind::Cap && nin != 1) return false;
        if (vx.kind == VertexKind::FourValent && !(nin == nout && nin <= 1)) return false;
    }
    return true;
}

}  // namespace

PushResult apply_U(const SingularGraph& g, const CellComplex& cc, CycleMask Z, int ei) {
    PushResult r;
    if (!((Z >> ei) & 1ull)) {
        r.kind = PushResult::Unchanged;
        return r;
    }
    auto d = minimal_disk(g, cc, Z, ei);
    if (!d || !right_boundary_meets_Z_only_at_endpoints(g, Z, *d)) {
        r.kind = PushResult::Zero;
        return r;
    }
    r.kind = PushResult::Pushed;
    r.coeff = disk_coefficient(g, *d);
    r.target = replace_boundary(Z, *d);
    if (!is_cycle(g, r.target)) throw std::runtime_error("apply_U: push did not yield a cycle");
    return r;
}

PushResult apply_fv(const SingularGraph& g, const CellComplex& cc, CycleMask Z, int v) {
    PushResult r;
    if (cycle_at_vertex(g, Z, v) == 0) {
        r.kind = PushResult::Unchanged;  // diagonal: multiply by U_i(v) U_j(v)
        return r;
    }
    auto d = minimal_disk_vertex(g, cc, Z, v);
    if (!d || !right_boundary_meets_Z_only_at_endpoints(g, Z, *d)) {
        r.kind = PushResult::Zero;
        return r;
    }
    r.kind = PushResult::Pushed;
    r.coeff = disk_coefficient(g, *d);
    r.target = replace_boundary(Z, *d);
    if (!is_cycle(g, r.target)) throw std::runtime_error("apply_fv: push did not yield a cycle");
    return r;
}

FormalSum normalize(const SingularGraph& g, const CellComplex& cc, FormalSum s) {
    const CellComplex& cells_ref = cc;
    FormalSum done;
    int guard = 0;
    while (!s.empty()) {
        if (++guard > 100000) throw std::runtime_error("normalize: did not terminate");
        Term t = std::move(s.back());
        s.pop_back();
        int act = -1;
        for (size_t e = 0; e < t.m.e.size(); ++e)
            if (t.m.e[e] > 0 && ((t.z >> e) & 1ull)) {
                act = static_cast<int>(e);
                break;
            }
        if (act < 0) {
            done.push_back(std::move(t));
            continue;
        }
        PushResult pr = apply_U(g, cells_ref, t.z, act);
        if (pr.kind == PushResult::Zero) continue;
        if (pr.kind != PushResult::Pushed) throw std::runtime_error("normalize: unexpected action");
        t.m.e[static_cast<size_t>(act)]--;
        for (size_t e = 0; e < t.m.e.size(); ++e)
            t.m.e[e] = static_cast<std::uint16_t>(t.m.e[e] + pr.coeff.e[e]);
        t.z = pr.target;
        s.push_back(std::move(t));
    }
    // Combine like terms.
    std::sort(done.begin(), done.end(), [](const Term& x, const Term& y) {
        if (x.z != y.z) return x.z < y.z;
        return x.m < y.m;
    });
    FormalSum out;
    for (Term& t : done) {
        if (!out.empty() && out.back().z == t.z && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }),
              out.end());
    return out;
}

FormalSum mult_U(const SingularGraph& g, const CellComplex& cc, const FormalSum& s, int e) {
    FormalSum out;
    for (const Term& t : s) {
        Term nt = t;
        nt.m.e[static_cast<size_t>(e)]++;
        out.push_back(std::move(nt));
    }
    return normalize(g, cc, std::move(out));
}

FormalSum mult_fv(const SingularGraph& g, const CellComplex& cc, const FormalSum& s, int v) {
    FormalSum out;
    for (const Term& t : s) {
        if (cycle_at_vertex(g, t.z, v) == 0) {
            Term nt = t;
            nt.m.e[static_cast<size_t>(g.ie(v))]++;
            nt.m.e[static_cast<size_t>(g.je(v))]++;
            out.push_back(std::move(nt));
        } else {
            PushResult pr = apply_fv(g, cc, t.z, v);
            if (pr.kind == PushResult::Zero) continue;
            Term nt = t;
            for (size_t e = 0; e < nt.m.e.size(); ++e)
                nt.m.e[e] = static_cast<std::uint16_t>(nt.m.e[e] + pr.coeff.e[e]);
            nt.z = pr.target;
            out.push_back(std::move(nt));
        }
    }
    return normalize(g, cc, std::move(out));
}

}  // namespace plathom
