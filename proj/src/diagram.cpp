#include "plathom/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plathom {

std::vector<int> link_signs(const PlatWord& w) {
    const int N = static_cast<int>(w.crossings.size());
    const int cols = 2 * w.n_pairs;
    // Direction of each (column, band) segment under the link orientation:
    // +1 up, -1 down, 0 unvisited.  Bands run 0..N between event levels.
    std::vector<std::vector<int>> dir(static_cast<size_t>(cols) + 1,
                                      std::vector<int>(static_cast<size_t>(N) + 1, 0));
    auto partner = [](int c) { return (c % 2 == 1) ? c + 1 : c - 1; };
    for (int c0 = 1; c0 <= cols; ++c0) {
        for (int b0 = 0; b0 <= N; ++b0) {
            if (dir[static_cast<size_t>(c0)][static_cast<size_t>(b0)]) continue;
            int c = c0, b = b0, d = 1;
            long guard = 0;
            do {
                dir[static_cast<size_t>(c)][static_cast<size_t>(b)] = d;
                if (d > 0) {
                    if (b == N) {  // cap: over to the partner column, heading down
                        c = partner(c);
                        d = -1;
                    } else {  // crossing at level b+1: strands swap columns
                        int p = w.crossings[static_cast<size_t>(b)].pos;
                        if (c == p) c = p + 1;
                        else if (c == p + 1) c = p;
                        ++b;
                    }
                } else {
                    if (b == 0) {  // cup: partner column, heading up
                        c = partner(c);
                        d = 1;
                    } else {
                        int p = w.crossings[static_cast<size_t>(b - 1)].pos;
                        if (c == p) c = p + 1;
                        else if (c == p + 1) c = p;
                        --b;
                    }
                }
                if (++guard > 8L * (cols + 1) * (N + 1))
                    throw std::runtime_error("link_signs: traversal did not close");
            } while (!(c == c0 && b == b0));
        }
    }
    // Crossing t joins arcs A: (p,t)->(p+1,t+1) and B: (p+1,t)->(p,t+1).
    // A braid-positive generator puts arc A over arc B.  The link sign is the
    // sign of det[over-direction, under-direction].
    std::vector<int> out(static_cast<size_t>(N));
    for (int t = 0; t < N; ++t) {
        int p = w.crossings[static_cast<size_t>(t)].pos;
        int da = dir[static_cast<size_t>(p)][static_cast<size_t>(t)];
        int db = dir[static_cast<size_t>(p) + 1][static_cast<size_t>(t)];
        int ax = da, ay = da;    // arc A flows (+1,+1) when its lower end goes up
        int bx = -db, by = db;   // arc B flows (-1,+1) when its lower end goes up
        int det = (w.crossings[static_cast<size_t>(t)].sign > 0) ? ax * by - ay * bx
                                                                 : bx * ay - by * ax;
        out[static_cast<size_t>(t)] = det > 0 ? 1 : -1;
    }
    return out;
}

int PlatWord::n_plus() const {
    int c = 0;
    for (int s : link_signs(*this)) c += (s > 0);
    return c;
}

int PlatWord::n_minus() const {
    int c = 0;
    for (int s : link_signs(*this)) c += (s < 0);
    return c;
}

int ResolutionVector::height() const {
    int h = 0;
    for (int b : bits) h += b;
    return h;
}

bool bit_is_singular(int sign, int bit) {
    return (sign > 0 && bit == 1) || (sign < 0 && bit == 0);
}

PlatWord parse_plat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("parse_plat: " + why + " in \"" + text + "\"");
    };
    if (s.rfind("n=", 0) != 0) fail("expected 'n='");
    size_t semi = s.find(';');
    if (semi == std::string::npos) fail("expected ';'");
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(s.substr(2, semi - 2), &used);
        if (used != semi - 2) fail("malformed strand count");
    } catch (const std::exception&) {
        fail("malformed strand count");
    }
    if (n <= 0) fail("zero strands");
    std::string rest = s.substr(semi + 1);
    if (rest.rfind("word=[", 0) != 0 || rest.back() != ']') fail("expected 'word=[...]'");
    std::string body = rest.substr(6, rest.size() - 7);
    PlatWord w;
    w.n_pairs = n;
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) fail("malformed token '" + tok + "'");
            int p = 0;
            try {
                size_t used = 0;
                p = std::stoi(tok.substr(1), &used);
                if (used != tok.size() - 1) fail("malformed token '" + tok + "'");
            } catch (const std::exception&) {
                fail("malformed token '" + tok + "'");
            }
            if (p < 1 || p > 2 * n - 1) fail("position out of range");
            w.crossings.push_back({p, tok[0] == '+' ? 1 : -1});
        }
    }
    return w;
}

std::string serialize_plat(const PlatWord& w) {
    std::ostringstream os;
    os << "n=" << w.n_pairs << "; word=[";
    for (size_t i = 0; i < w.crossings.size(); ++i) {
        if (i) os << ",";
        os << (w.crossings[i].sign > 0 ? "+" : "-") << w.crossings[i].pos;
    }
    os << "]";
    return os.str();
}

SingularGraph resolve(const PlatWord& w, const ResolutionVector& v) {
    if (v.bits.size() != w.crossings.size())
        throw std::runtime_error("resolve: resolution length does not match word");
    SingularGraph g;
    g.n_pairs = w.n_pairs;
    g.n_word = static_cast<int>(w.crossings.size());
    g.n_plus = w.n_plus();
    g.n_minus = w.n_minus();
    g.resolution = v;
    int top = g.top_level();

    // Vertices: cups, singular 4-valent vertices (by level), caps.
    for (int i = 0; i < g.n_pairs; ++i) {
        g.cups.push_back(static_cast<int>(g.vertices.size()));
        g.vertices.push_back({VertexKind::Cup, 0, 2 * i + 1, {-1, -1}, {-1, -1}});
    }
    for (int t = 0; t < g.n_word; ++t) {
        if (!bit_is_singular(w.crossings[t].sign, v.bits[t])) continue;
        g.four_valent.push_back(static_cast<int>(g.vertices.size()));
        g.vertices.push_back({VertexKind::FourValent, t + 1, w.crossings[t].pos, {-1, -1}, {-1, -1}});
    }
    for (int i = 0; i < g.n_pairs; ++i) {
        g.caps.push_back(static_cast<int>(g.vertices.size()));
        g.vertices.push_back({VertexKind::Cap, top, 2 * i + 1, {-1, -1}, {-1, -1}});
    }

    // Per-column event lists (vertex index, level, tag).
    struct Ev {
        int vertex;
        int level;
        int tag;
    };
    std::vector<std::vector<Ev>> col_events(static_cast<size_t>(g.strands()) + 1);
    for (int i = 0; i < g.n_pairs; ++i) {
        col_events[static_cast<size_t>(2 * i + 1)].push_back({g.cups[static_cast<size_t>(i)], 0, -1});
        col_events[static_cast<size_t>(2 * i + 2)].push_back({g.cups[static_cast<size_t>(i)], 0, -1});
    }
    for (int fv : g.four_valent) {
        const Vertex& vx = g.vertices[static_cast<size_t>(fv)];
        int tag = vx.level - 1;
        col_events[static_cast<size_t>(vx.pos)].push_back({fv, vx.level, tag});
        col_events[static_cast<size_t>(vx.pos) + 1].push_back({fv, vx.level, tag});
    }
    for (int i = 0; i < g.n_pairs; ++i) {
        col_events[static_cast<size_t>(2 * i + 1)].push_back({g.caps[static_cast<size_t>(i)], top, g.n_word});
        col_events[static_cast<size_t>(2 * i + 2)].push_back({g.caps[static_cast<size_t>(i)], top, g.n_word});
    }

    // Edges: consecutive events per column, then sorted bottom-to-top,
    // left-to-right.
    std::vector<Edge> edges;
    for (int c = 1; c <= g.strands(); ++c) {
        const auto& evs = col_events[static_cast<size_t>(c)];
        for (size_t k = 0; k + 1 < evs.size(); ++k) {
            edges.push_back({c, evs[k].level, evs[k + 1].level, evs[k].vertex, evs[k + 1].vertex,
                             evs[k].tag, evs[k + 1].tag});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.lo_level != b.lo_level) return a.lo_level < b.lo_level;
        return a.col < b.col;
    });
    g.edges = std::move(edges);

    // Fill vertex adjacency (left slot = smaller column).
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        Vertex& tv = g.vertices[static_cast<size_t>(ed.tail)];
        Vertex& hv = g.vertices[static_cast<size_t>(ed.head)];
        int tslot = (ed.col == tv.pos) ? 0 : 1;
        int hslot = (ed.col == hv.pos) ? 0 : 1;
        tv.out[tslot] = static_cast<int>(e);
        hv.in[hslot] = static_cast<int>(e);
    }
    for (const Vertex& vx : g.vertices) {
        bool ok = true;
        if (vx.kind == VertexKind::FourValent)
            ok = vx.in[0] >= 0 && vx.in[1] >= 0 && vx.out[0] >= 0 && vx.out[1] >= 0;
        else if (vx.kind == VertexKind::Cup)
            ok = vx.out[0] >= 0 && vx.out[1] >= 0;
        else
            ok = vx.in[0] >= 0 && vx.in[1] >= 0;
        if (!ok) throw std::runtime_error("resolve: inconsistent vertex adjacency");
    }
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
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

}  // namespace

SmoothedDiagram smooth(const SingularGraph& g) {
    UnionFind uf(static_cast<int>(g.edges.size()));
    for (const Vertex& vx : g.vertices) {
        if (vx.kind == VertexKind::FourValent) {
            uf.unite(vx.in[0], vx.in[1]);    // turnback below
            uf.unite(vx.out[0], vx.out[1]);  // turnback above
        } else if (vx.kind == VertexKind::Cup) {
            uf.unite(vx.out[0], vx.out[1]);
        } else {
            uf.unite(vx.in[0], vx.in[1]);
        }
    }
    SmoothedDiagram sm;
    sm.circle_of_edge.resize(g.edges.size());
    sm.strand_of_edge.resize(g.edges.size());
    std::vector<int> id_of_root(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        int r = uf.find(static_cast<int>(e));
        if (id_of_root[static_cast<size_t>(r)] < 0) id_of_root[static_cast<size_t>(r)] = sm.circle_count++;
        sm.circle_of_edge[e] = id_of_root[static_cast<size_t>(r)];
        sm.strand_of_edge[e] = g.edges[e].col;
    }
    return sm;
}

int CellComplex::cell_at(int gap, int band) const {
    if (gap < 1 || gap > n_gaps || band < 0 || band >= n_bands) return -1;
    return lookup_[static_cast<size_t>(gap - 1) * static_cast<size_t>(n_bands) + static_cast<size_t>(band)];
}

CellComplex cells(const SingularGraph& g) {
    CellComplex cc;
    cc.n_gaps = g.strands() - 1;
    cc.n_bands = g.top_level();
    cc.lookup_.assign(static_cast<size_t>(cc.n_gaps) * static_cast<size_t>(cc.n_bands), -1);
    for (int gap = 1; gap <= cc.n_gaps; ++gap) {
        std::vector<int> levels;
        if (gap % 2 == 1) {
            levels.push_back(0);  // cup spans this gap
        }
        for (int fv : g.four_valent) {
            const Vertex& vx = g.vertices[static_cast<size_t>(fv)];
            if (vx.pos == gap) levels.push_back(vx.level);
        }
        if (gap % 2 == 1) levels.push_back(g.top_level());  // cap
        std::sort(levels.begin(), levels.end());
        for (size_t k = 0; k + 1 < levels.size(); ++k) {
            int id = static_cast<int>(cc.cells.size());
            cc.cells.push_back({gap, levels[k], levels[k + 1]});
            for (int band = levels[k]; band < levels[k + 1]; ++band)
                cc.lookup_[static_cast<size_t>(gap - 1) * static_cast<size_t>(cc.n_bands) +
                           static_cast<size_t>(band)] = id;
        }
    }
    return cc;
}

}  // namespace plathom
