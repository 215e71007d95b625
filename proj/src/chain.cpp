#include "plathom/chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plathom {

GradingData grade_cycle(const SingularGraph& g, CycleMask Z) {
    GradingData gd;
    for (int v : g.four_valent) {
        const Vertex& vx = g.vertices[static_cast<size_t>(v)];
        bool i0 = (Z >> vx.in[0]) & 1ull, i1 = (Z >> vx.in[1]) & 1ull;
        bool o0 = (Z >> vx.out[0]) & 1ull, o1 = (Z >> vx.out[1]) & 1ull;
        if (i0 && o0)
            gd.T1++;
        else if (i1 && o1)
            gd.T2++;
        else if (!i0 && !i1 && !o0 && !o1)
            gd.E++;
    }
    for (int i = 0; i < g.n_pairs; ++i) {
        const Vertex& cup = g.vertices[static_cast<size_t>(g.cups[static_cast<size_t>(i)])];
        const Vertex& cap = g.vertices[static_cast<size_t>(g.caps[static_cast<size_t>(i)])];
        bool cup_left = (Z >> cup.out[0]) & 1ull;
        bool cap_left = (Z >> cap.in[0]) & 1ull;
        if (cup_left && cap_left)
            gd.w++;
        else if (!cup_left && !cap_left)
            gd.w--;
    }
    return gd;
}

Monomial canonical_monomial(const SingularGraph& g, CycleMask Z, const Monomial& m) {
    // Vertices disjoint from Z admit the rewrite U_i U_j <-> U_k U_l.
    std::vector<int> vd;
    for (int v : g.four_valent)
        if (!vertex_on_cycle(g, Z, v)) vd.push_back(v);
    if (vd.empty()) return m;
    std::set<std::vector<std::uint16_t>> seen;
    std::vector<std::vector<std::uint16_t>> queue;
    seen.insert(m.e);
    queue.push_back(m.e);
    while (!queue.empty()) {
        std::vector<std::uint16_t> cur = std::move(queue.back());
        queue.pop_back();
        for (int v : vd) {
            int i = g.ie(v), j = g.je(v), k = g.ke(v), l = g.le(v);
            if (cur[static_cast<size_t>(i)] > 0 && cur[static_cast<size_t>(j)] > 0) {
                auto nxt = cur;
                nxt[static_cast<size_t>(i)]--;
                nxt[static_cast<size_t>(j)]--;
                nxt[static_cast<size_t>(k)]++;
                nxt[static_cast<size_t>(l)]++;
                if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
            }
            if (cur[static_cast<size_t>(k)] > 0 && cur[static_cast<size_t>(l)] > 0) {
                auto nxt = cur;
                nxt[static_cast<size_t>(k)]--;
                nxt[static_cast<size_t>(l)]--;
                nxt[static_cast<size_t>(i)]++;
                nxt[static_cast<size_t>(j)]++;
                if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
            }
        }
    }
    Monomial out(static_cast<int>(m.e.size()));
    out.e = *seen.begin();
    return out;
}

std::vector<Monomial> congruence_classes(const SingularGraph& g, CycleMask Z, int d) {
    std::vector<int> vars;
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (!((Z >> e) & 1ull)) vars.push_back(static_cast<int>(e));
    std::set<std::vector<std::uint16_t>> canon;
    Monomial m(static_cast<int>(g.edges.size()));
    std::function<void(size_t, int)> rec = [&](size_t vi, int rem) {
        if (rem == 0) {
            canon.insert(canonical_monomial(g, Z, m).e);
            return;
        }
        if (vi == vars.size()) return;
        for (int take = 0; take <= rem; ++take) {
            m.e[static_cast<size_t>(vars[vi])] = static_cast<std::uint16_t>(take);
            rec(vi + 1, rem - take);
        }
        m.e[static_cast<size_t>(vars[vi])] = 0;
    };
    rec(0, d);
    std::vector<Monomial> out;
    for (const auto& e : canon) {
        Monomial mm(static_cast<int>(g.edges.size()));
        mm.e = e;
        out.push_back(std::move(mm));
    }
    return out;
}

ModuleSlices::ModuleSlices(const SingularGraph& g, const CellComplex& cc) : g_(&g), cc_(&cc) {
    cycles_ = enumerate_cycles(g);
    if (cycles_.empty()) throw std::runtime_error("ModuleSlices: no cycles");
    q_top_ = -1 << 20;
    for (CycleMask Z : cycles_) {
        int q = grade_cycle(g, Z).gr_q();
        grade_of_[Z] = q;
        q_top_ = std::max(q_top_, q);
        canon_by_degree_[Z].push_back({Monomial(static_cast<int>(g.edges.size()))});
    }
    built_down_to_ = q_top_ + 1;
    for (int q = q_top_ + 1; q <= q_top_ + 4; ++q) basis_[q];  // empty slices above top
}

void ModuleSlices::ensure(int q_min) {
    for (int q = built_down_to_ - 1; q >= q_min; --q) {
        std::vector<BasisElem>& b = basis_[q];
        std::map<BasisElem, int>& idx = index_[q];
        for (CycleMask Z : cycles_) {
            int d2 = grade_of_.at(Z) - q;
            if (d2 < 0 || d2 % 2) continue;
            int d = d2 / 2;
            auto& levels = canon_by_degree_.at(Z);
            if (static_cast<int>(levels.size()) <= d) {
                if (static_cast<int>(levels.size()) != d)
                    throw std::runtime_error("ModuleSlices: degree gap");
                // Generate canonical degree-d monomials from degree d-1.
                std::set<std::vector<std::uint16_t>> canon;
                for (const Monomial& m : levels[static_cast<size_t>(d - 1)]) {
                    for (size_t e = 0; e < g_->edges.size(); ++e) {
                        if ((Z >> e) & 1ull) continue;
                        Monomial m2 = m;
                        m2.e[e]++;
                        canon.insert(canonical_monomial(*g_, Z, m2).e);
                    }
                }
                std::vector<Monomial> lvl;
                for (const auto& e : canon) {
                    Monomial mm(static_cast<int>(g_->edges.size()));
                    mm.e = e;
                    lvl.push_back(std::move(mm));
                }
                levels.push_back(std::move(lvl));
            }
            for (const Monomial& m : levels[static_cast<size_t>(d)]) {
                idx[{Z, m}] = static_cast<int>(b.size());
                b.push_back({Z, m});
            }
        }
        built_down_to_ = q;
    }
}

int ModuleSlices::dim(int q) {
    ensure(q);
    auto it = basis_.find(q);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<ModuleSlices::BasisElem>& ModuleSlices::basis(int q) {
    ensure(q);
    return basis_[q];
}

SVec ModuleSlices::coords(const FormalSum& s, int q) {
    ensure(q);
    std::map<int, Rat> acc;
    const auto& idx = index_[q];
    for (const Term& t : s) {
        Monomial cm = canonical_monomial(*g_, t.z, t.m);
        auto it = idx.find({t.z, cm});
        if (it == idx.end()) throw std::runtime_error("ModuleSlices::coords: term not in grading");
        acc[it->second] += t.c;
    }
    SVec out;
    for (auto& [k, v] : acc)
        if (v != 0) out.push_back({k, v});
    return out;
}

FormalSum ModuleSlices::element(int q, int idx) {
    const BasisElem& be = basis(q)[static_cast<size_t>(idx)];
    Term t;
    t.c = 1;
    t.m = be.second;
    t.z = be.first;
    return {t};
}

void ScriptM::ensure(int q_min) {
    ms_->ensure(q_min);
    for (int q = ms_->q_top(); q >= q_min; --q) pres(q);
}

const QuotientPresentation& ScriptM::pres(int q) {
    auto it = pres_.find(q);
    if (it != pres_.end()) return it->second;
    const SingularGraph& g = ms_->graph();
    const CellComplex& cc = ms_->cellcx();
    int n = ms_->dim(q);
    std::vector<SVec> rows;
    int nup = ms_->dim(q + 2);
    for (int v : g.four_valent) {
        auto L = vertex_L(g, v);
        for (int k = 0; k < nup; ++k) {
            FormalSum s = apply_linear(g, cc, ms_->element(q + 2, k), L);
            SVec row = ms_->coords(s, q);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    auto qp = quotient_by_rows(n, rows);
    return pres_.emplace(q, std::move(qp)).first->second;
}

int ScriptM::dim(int q) { return pres(q).dim(); }

SVec ScriptM::coords(const FormalSum& s, int q) { return pres(q).project(ms_->coords(s, q)); }

FormalSum ScriptM::rep(int q, int k) {
    const QuotientPresentation& p = pres(q);
    return ms_->element(q, p.basis_cols[static_cast<size_t>(k)]);
}

FormalSum apply_linear(const SingularGraph& g, const CellComplex& cc, const FormalSum& s,
                       const std::vector<std::pair<int, int>>& terms) {
    FormalSum acc;
    for (const auto& [e, sgn] : terms) {
        FormalSum part = mult_U(g, cc, s, e);
        for (Term& t : part) {
            t.c *= sgn;
            acc.push_back(std::move(t));
        }
    }
    return normalize(g, cc, std::move(acc));
}

std::vector<std::pair<int, int>> closing_L(const SingularGraph& g, int i) {
    const Vertex& cap = g.vertices[static_cast<size_t>(g.caps[static_cast<size_t>(i)])];
    const Vertex& cup = g.vertices[static_cast<size_t>(g.cups[static_cast<size_t>(i)])];
    return {{cap.in[0], 1}, {cap.in[1], 1}, {cup.out[0], -1}, {cup.out[1], -1}};
}

std::vector<std::pair<int, int>> closing_L_prime(const SingularGraph& g, int i) {
    const Vertex& cap = g.vertices[static_cast<size_t>(g.caps[static_cast<size_t>(i)])];
    const Vertex& cup = g.vertices[static_cast<size_t>(g.cups[static_cast<size_t>(i)])];
    return {{cap.in[0], 1}, {cap.in[1], 1}, {cup.out[0], 1}, {cup.out[1], 1}};
}

std::vector<std::pair<int, int>> vertex_L(const SingularGraph& g, int v) {
    return {{g.ie(v), 1}, {g.je(v), 1}, {g.ke(v), -1}, {g.le(v), -1}};
}

VertexData::VertexData(SingularGraph graph) : g(std::move(graph)), cc(cells(g)) {
    ms = std::make_unique<ModuleSlices>(g, cc);
    sm = std::make_unique<ScriptM>(*ms);
}

int VertexData::cdim(int q) { return (1 << g.n_pairs) * sm->dim(q); }

int VertexData::cindex(unsigned eps, int m, int q) {
    return static_cast<int>(eps) * sm->dim(q) + m;
}

Mat koszul_d0(VertexData& V, int q) {
    const SingularGraph& g = V.g;
    int n = g.n_pairs;
    int dm = V.sm->dim(q);
    int dm2 = V.sm->dim(q - 2);
    Mat out((1 << n) * dm2, (1 << n) * dm);
    if (dm == 0 || dm2 == 0) return out;
    // Per-factor multiplication matrices on the module.
    std::vector<Mat> mat_L(static_cast<size_t>(n)), mat_Lp(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Mat ML(dm2, dm), MLp(dm2, dm);
        auto L = closing_L(g, i);
        auto Lp = closing_L_prime(g, i);
        for (int k = 0; k < dm; ++k) {
            FormalSum rep = V.sm->rep(q, k);
            for (const auto& [r, val] : V.sm->coords(apply_linear(g, V.cc, rep, L), q - 2))
                ML.set(r, k, val);
            for (const auto& [r, val] : V.sm->coords(apply_linear(g, V.cc, rep, Lp), q - 2))
                MLp.set(r, k, val);
        }
        mat_L[static_cast<size_t>(i)] = std::move(ML);
        mat_Lp[static_cast<size_t>(i)] = std::move(MLp);
    }
    for (unsigned eps = 0; eps < (1u << n); ++eps) {
        for (int i = 0; i < n; ++i) {
            unsigned eps2 = eps ^ (1u << i);
            const Mat& coef = ((eps >> i) & 1u) ? mat_L[static_cast<size_t>(i)]
                                                : mat_Lp[static_cast<size_t>(i)];
            int sgn = 1;
            for (int j = 0; j < i; ++j)
                if ((eps >> j) & 1u) sgn = -sgn;
            for (int r = 0; r < coef.rows; ++r)
                for (const auto& [c, val] : coef.row[static_cast<size_t>(r)])
                    out.set(static_cast<int>(eps2) * dm2 + r, static_cast<int>(eps) * dm + c,
                            out.get(static_cast<int>(eps2) * dm2 + r,
                                    static_cast<int>(eps) * dm + c) +
                                Rat(sgn) * val);
        }
    }
    return out;
}

Mat u_action_matrix(VertexData& V, int e, int q) {
    int n = V.g.n_pairs;
    int dm = V.sm->dim(q);
    int dm2 = V.sm->dim(q - 2);
    Mat out((1 << n) * dm2, (1 << n) * dm);
    if (dm == 0 || dm2 == 0) return out;
    Mat blk(dm2, dm);
    for (int k = 0; k < dm; ++k) {
        FormalSum s = mult_U(V.g, V.cc, V.sm->rep(q, k), e);
        for (const auto& [r, val] : V.sm->coords(s, q - 2)) blk.set(r, k, val);
    }
    for (unsigned eps = 0; eps < (1u << n); ++eps)
        for (int r = 0; r < dm2; ++r)
            for (const auto& [c, val] : blk.row[static_cast<size_t>(r)])
                out.set(static_cast<int>(eps) * dm2 + r, static_cast<int>(eps) * dm + c, val);
    return out;
}

int Cube::edge_sign(unsigned u, int c) const {
    int sgn = 1;
    for (int j = 0; j < c; ++j)
        if ((u >> j) & 1u) sgn = -sgn;
    return sgn;
}

int Cube::crossing_vertex(unsigned u, int c) const {
    const SingularGraph& g = verts[u]->g;
    for (int v : g.four_valent)
        if (g.vertices[static_cast<size_t>(v)].level == c + 1) return v;
    throw std::runtime_error("crossing_vertex: crossing not singular at this vertex");
}

Cube build_cube(const PlatWord& w) {
    Cube cube;
    cube.word = w;
    cube.N = static_cast<int>(w.crossings.size());
    if (cube.N > 20) throw std::runtime_error("build_cube: word too long");
    cube.n_plus = w.n_plus();
    cube.n_minus = w.n_minus();
    for (unsigned u = 0; u < (1u << cube.N); ++u) {
        ResolutionVector rv;
        for (int t = 0; t < cube.N; ++t) rv.bits.push_back((u >> t) & 1u);
        cube.verts.push_back(std::make_unique<VertexData>(resolve(w, rv)));
    }
    return cube;
}

int transfer_edge(const SingularGraph& src, const SingularGraph& dst, int e) {
    const Edge& se = src.edges[static_cast<size_t>(e)];
    for (size_t f = 0; f < dst.edges.size(); ++f) {
        const Edge& de = dst.edges[f];
        if (de.col == se.col && de.lo_level <= se.lo_level && se.lo_level < de.hi_level)
            return static_cast<int>(f);
    }
    throw std::runtime_error("transfer_edge: no covering edge");
}

CycleMask transfer_cycle(const SingularGraph& src, const SingularGraph& dst, CycleMask Z) {
    // Coverage of (col, band) points.
    int bands = src.top_level();
    auto at = [&](int col, int b) { return (col - 1) * bands + b; };
    std::vector<char> cov(static_cast<size_t>(src.strands() * bands), 0);
    int nsrc = 0;
    for (size_t e = 0; e < src.edges.size(); ++e) {
        if (!((Z >> e) & 1ull)) continue;
        for (int b = src.edges[e].lo_level; b < src.edges[e].hi_level; ++b) {
            cov[static_cast<size_t>(at(src.edges[e].col, b))] = 1;
            ++nsrc;
        }
    }
    CycleMask out = 0;
    int ndst = 0;
    for (size_t f = 0; f < dst.edges.size(); ++f) {
        const Edge& de = dst.edges[f];
        int covered = 0, total = 0;
        for (int b = de.lo_level; b < de.hi_level; ++b) {
            ++total;
            covered += cov[static_cast<size_t>(at(de.col, b))];
        }
        if (covered == total) {
            out |= (1ull << f);
            ndst += total;
        } else if (covered != 0) {
            throw std::runtime_error("transfer_cycle: partial coverage");
        }
    }
    if (ndst != nsrc) throw std::runtime_error("transfer_cycle: coverage mismatch");
    return out;
}

namespace {

/// Transfer a src-side term (coefficients through the edge correspondence).
Term transfer_term(const SingularGraph& src, const SingularGraph& dst, const Term& t) {
    Term out;
    out.c = t.c;
    out.m = Monomial(static_cast<int>(dst.edges.size()));
    for (size_t e = 0; e < t.m.e.size(); ++e)
        if (t.m.e[e] > 0)
            out.m.e[static_cast<size_t>(transfer_edge(src, dst, static_cast<int>(e)))] =
                static_cast<std::uint16_t>(
                    out.m.e[static_cast<size_t>(transfer_edge(src, dst, static_cast<int>(e)))] +
                    t.m.e[e]);
    out.z = transfer_cycle(src, dst, t.z);
    return out;
}

}  // namespace

FormalSum edge_minus_term(VertexData& sing, VertexData& smooth, int v4, const Term& t) {
    const SingularGraph& g = sing.g;
    const Vertex& vx = g.vertices[static_cast<size_t>(v4)];
    bool i0 = (t.z >> vx.in[0]) & 1ull, i1 = (t.z >> vx.in[1]) & 1ull;
    bool o0 = (t.z >> vx.out[0]) & 1ull, o1 = (t.z >> vx.out[1]) & 1ull;
    FormalSum src_terms;
    if ((!i0 && !i1 && !o0 && !o1) || (i0 && o0)) {
        src_terms.push_back(t);
    } else if (i0 && o1) {
        PushResult pr = apply_U(g, sing.cc, t.z, vx.in[0]);
        if (pr.kind == PushResult::Pushed) {
            Term nt = t;
            for (size_t e = 0; e < nt.m.e.size(); ++e)
                nt.m.e[e] = static_cast<std::uint16_t>(nt.m.e[e] + pr.coeff.e[e]);
            nt.z = pr.target;
            src_terms.push_back(std::move(nt));
        }
    } else if (i1 && o0) {
        PushResult pr = apply_U(g, sing.cc, t.z, vx.out[0]);
        if (pr.kind == PushResult::Pushed) {
            Term nt = t;
            for (size_t e = 0; e < nt.m.e.size(); ++e)
                nt.m.e[e] = static_cast<std::uint16_t>(nt.m.e[e] + pr.coeff.e[e]);
            nt.z = pr.target;
            src_terms.push_back(std::move(nt));
        }
    } else if (i1 && o1) {
        Term nt = t;  // U_1 x_{Z^u}: carry an extra e_1 exponent through q
        nt.m.e[static_cast<size_t>(vx.in[0])]++;
        src_terms.push_back(std::move(nt));
    } else {
        throw std::runtime_error("edge_minus_term: invalid local cycle");
    }
    FormalSum out;
    for (const Term& st : src_terms) out.push_back(transfer_term(g, smooth.g, st));
    return normalize(smooth.g, smooth.cc, std::move(out));
}

FormalSum edge_plus_term(VertexData& smooth, VertexData& sing, int v4, const Term& t) {
    const SingularGraph& gs = sing.g;
    const SingularGraph& gu = smooth.g;
    const Vertex& vx = gs.vertices[static_cast<size_t>(v4)];
    int lvl = vx.level;
    auto smooth_edge_at = [&](int col) {
        for (size_t f = 0; f < gu.edges.size(); ++f)
            if (gu.edges[f].col == col && gu.edges[f].lo_level < lvl && gu.edges[f].hi_level > lvl)
                return static_cast<int>(f);
        throw std::runtime_error("edge_plus_term: smoothing edge not found");
    };
    int e1p = smooth_edge_at(vx.pos);
    int e2p = smooth_edge_at(vx.pos + 1);
    bool z1 = (t.z >> e1p) & 1ull, z2 = (t.z >> e2p) & 1ull;
    FormalSum out;
    if (!z2) {
        // (U_3 - U_2) x_{Z^z}
        Term base = transfer_term(gu, gs, t);
        Term plus = base, minus = base;
        plus.m.e[static_cast<size_t>(vx.out[0])]++;
        minus.m.e[static_cast<size_t>(vx.in[1])]++;
        minus.c = -minus.c;
        out.push_back(std::move(plus));
        out.push_back(std::move(minus));
    } else {
        if (!z1) out.push_back(transfer_term(gu, gs, t));  // x_{Z^z}
        // - U(D(Z, e_2')) x_{e_2'(Z)^z}
        PushResult pr = apply_U(gu, smooth.cc, t.z, e2p);
        if (pr.kind == PushResult::Pushed) {
            Term pushed = t;
            for (size_t e = 0; e < pushed.m.e.size(); ++e)
                pushed.m.e[e] = static_cast<std::uint16_t>(pushed.m.e[e] + pr.coeff.e[e]);
            pushed.z = pr.target;
            pushed.c = -pushed.c;
            out.push_back(transfer_term(gu, gs, pushed));
        }
    }
    return normalize(gs, sing.cc, std::move(out));
}

Mat edge_matrix(Cube& cube, unsigned u, int c, int q) {
    unsigned v = u | (1u << c);
    if (v == u) throw std::runtime_error("edge_matrix: bit already set");
    VertexData& src = *cube.verts[u];
    VertexData& dst = *cube.verts[v];
    bool positive = cube.word.crossings[static_cast<size_t>(c)].sign > 0;
    int v4 = positive ? cube.crossing_vertex(v, c) : cube.crossing_vertex(u, c);
    int n = cube.word.n_pairs;
    int dms = src.sm->dim(q);
    int dmd = dst.sm->dim(q - 1);
    Mat out((1 << n) * dmd, (1 << n) * dms);
    if (dms == 0 || dmd == 0) return out;
    Mat blk(dmd, dms);
    for (int k = 0; k < dms; ++k) {
        FormalSum rep = src.sm->rep(q, k);
        FormalSum img;
        for (const Term& t : rep) {
            FormalSum part = positive ? edge_plus_term(src, dst, v4, t)
                                      : edge_minus_term(src, dst, v4, t);
            for (Term& pt : part) img.push_back(std::move(pt));
        }
        img = normalize(dst.g, dst.cc, std::move(img));
        for (const auto& [r, val] : dst.sm->coords(img, q - 1)) blk.set(r, k, val);
    }
    for (unsigned eps = 0; eps < (1u << n); ++eps)
        for (int r = 0; r < dmd; ++r)
            for (const auto& [cc2, val] : blk.row[static_cast<size_t>(r)])
                out.set(static_cast<int>(eps) * dmd + r, static_cast<int>(eps) * dms + cc2, val);
    return out;
}

}  // namespace plathom
