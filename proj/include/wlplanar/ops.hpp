// Graph construction operators: subdivisions, truncation, contraction, apex
// augmentation. All operators here take undirected inputs, emit uncolored
// outputs, and propagate face lists where the construction supports it.
#pragma once

#include <wlplanar/graph.hpp>

namespace wlp {

inline Arc norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Replace edge j by f_j parallel paths of length 2 (f_j = 0 keeps the edge).
// New vertices come after the originals, grouped by edge in edge order; the
// copies of edge j = (v,w) occupy ids n + prefix(f)_j .. +f_j-1.
//
// Face propagation: the walk traversing arc (v,w) routes through the last
// copy, the walk traversing (w,v) through the first copy, and each pair of
// consecutive copies contributes one quadrilateral face.
inline Graph parallel_subdivide(const Graph& h, const std::map<Arc, int>& f) {
    check(!h.directed, "parallel_subdivide: undirected input required");
    for (auto& [e, cnt] : f) check(cnt >= 0, "parallel_subdivide: negative multiplicity");
    auto count_of = [&](int u, int v) {
        auto it = f.find(norm_edge(u, v));
        return it == f.end() ? 0 : it->second;
    };
    Graph g;
    g.n = h.n;
    std::map<Arc, int> first_id;  // first copy id per edge, keyed by normalized pair
    std::vector<int> cnt_per_edge;
    for (auto [u, v] : h.edges) {
        int c = count_of(u, v);
        cnt_per_edge.push_back(c);
        first_id[norm_edge(u, v)] = g.n;
        g.n += c;
    }
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
        auto [u, v] = h.edges[j];
        int c = cnt_per_edge[j];
        if (c == 0) {
            g.edges.push_back({u, v});
            continue;
        }
        int base = first_id[norm_edge(u, v)];
        for (int i = 0; i < c; ++i) {
            g.edges.push_back({u, base + i});
            g.edges.push_back({base + i, v});
        }
    }
    if (h.faces) {
        std::vector<std::vector<int>> fs;
        for (auto& walk : *h.faces) {
            std::vector<int> nw;
            for (std::size_t i = 0; i < walk.size(); ++i) {
                int a = walk[i], b = walk[(i + 1) % walk.size()];
                nw.push_back(a);
                int c = count_of(a, b);
                if (c == 0) continue;
                int base = first_id[norm_edge(a, b)];
                // Forward arc means a < b matches the normalized key order.
                nw.push_back(a < b ? base + c - 1 : base);
            }
            fs.push_back(nw);
        }
        for (std::size_t j = 0; j < h.edges.size(); ++j) {
            auto [u, v] = h.edges[j];
            int c = cnt_per_edge[j];
            int base = first_id[norm_edge(u, v)];
            int lo = std::min(u, v), hi = std::max(u, v);
            for (int i = 0; i + 1 < c; ++i) fs.push_back({lo, base + i, hi, base + i + 1});
        }
        g.faces = std::move(fs);
    }
    return g;
}

// Uniform parallel subdivision: s >= 1 copies per edge.
inline Graph s_subdivide(const Graph& h, int s) {
    check(s >= 1, "s_subdivide: s must be >= 1 (parallel_subdivide handles f(e)=0)");
    std::map<Arc, int> f;
    for (auto [u, v] : h.edges) f[norm_edge(u, v)] = s;
    return parallel_subdivide(h, f);
}

// Replace each edge vw by a 4-cycle attached at opposite corners: vertices
// (vw,1..4) with ids n+4j..n+4j+3 in edge order, quad edges, and links
// v-(vw,1), w-(vw,3). Faces are not propagated.
inline Graph c4_subdivide(const Graph& g0) {
    check(!g0.directed, "c4_subdivide: undirected input required");
    Graph g;
    g.n = g0.n + 4 * (int)g0.edges.size();
    for (std::size_t j = 0; j < g0.edges.size(); ++j) {
        auto [v, w] = g0.edges[j];
        int b = g0.n + 4 * (int)j;
        g.edges.push_back({b, b + 1});
        g.edges.push_back({b + 1, b + 2});
        g.edges.push_back({b + 2, b + 3});
        g.edges.push_back({b + 3, b});
        g.edges.push_back({v, b});
        g.edges.push_back({w, b + 2});
    }
    return g;
}

// Rotation order around each vertex, read off the oriented face walks: in a
// walk ...a,b,c..., vertex c is the successor of a in the rotation at b.
inline std::vector<std::vector<int>> rotation_system(const Graph& g) {
    check(g.faces.has_value(), "rotation_system: face list required");
    auto nb = neighbors(g);
    std::vector<std::map<int, int>> next(g.n);
    for (auto& w : *g.faces)
        for (std::size_t i = 0; i < w.size(); ++i) {
            int a = w[i], b = w[(i + 1) % w.size()], c = w[(i + 2) % w.size()];
            check(!next[b].count(a), "rotation_system: inconsistent face walks");
            next[b][a] = c;
        }
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (nb[v].empty()) continue;
        int start = nb[v][0];
        int cur = start;
        do {
            rot[v].push_back(cur);
            auto it = next[v].find(cur);
            check(it != next[v].end(), "rotation_system: face walks miss an arc");
            cur = it->second;
            check((int)rot[v].size() <= (int)nb[v].size(), "rotation_system: rotation does not close");
        } while (cur != start);
        check(rot[v].size() == nb[v].size(), "rotation_system: rotation skips neighbors");
    }
    return rot;
}

// Truncate every vertex in w_set: replace w by one corner vertex per incident
// edge, joined in a cycle following the rotation order from the face list.
// Kept originals are re-indexed 0..k-1 in original order; corners follow,
// grouped by truncated vertex in ascending order, each group in rotation
// order. Truncating a vertex of degree < 3 is rejected.
inline Graph truncate(const Graph& g, const std::vector<int>& w_set) {
    check(!g.directed, "truncate: undirected input required");
    check(g.faces.has_value(), "truncate: face list required");
    auto rot = rotation_system(g);
    std::vector<char> trunc(g.n, 0);
    for (int w : w_set) {
        check(w >= 0 && w < g.n, "truncate: vertex out of range");
        check((int)rot[w].size() >= 3, "truncate: vertex degree must be at least 3");
        trunc[w] = 1;
    }
    std::vector<int> newid(g.n, -1);
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (!trunc[v]) newid[v] = k++;
    // corner_of[w][u] = id of the corner of w that carries the edge toward u
    std::vector<std::map<int, int>> corner_of(g.n);
    int next = k;
    for (int w = 0; w < g.n; ++w) {
        if (!trunc[w]) continue;
        for (int u : rot[w]) corner_of[w][u] = next++;
    }
    Graph out;
    out.n = next;
    for (auto [u, v] : g.edges) {
        int a = trunc[u] ? corner_of[u][v] : newid[u];
        int b = trunc[v] ? corner_of[v][u] : newid[v];
        out.edges.push_back({a, b});
    }
    for (int w = 0; w < g.n; ++w) {
        if (!trunc[w]) continue;
        int l = (int)rot[w].size();
        for (int i = 0; i < l; ++i)
            out.edges.push_back({corner_of[w][rot[w][i]], corner_of[w][rot[w][(i + 1) % l]]});
    }
    // Faces: rewrite each original walk, replacing a truncated b (between a
    // and c) by its two corners toward a and c; add one reversed polygon per
    // truncated vertex.
    std::vector<std::vector<int>> fs;
    for (auto& walk : *g.faces) {
        std::vector<int> nw;
        int len = (int)walk.size();
        for (int i = 0; i < len; ++i) {
            int a = walk[(i + len - 1) % len], b = walk[i], c = walk[(i + 1) % len];
            if (!trunc[b]) {
                nw.push_back(newid[b]);
            } else {
                nw.push_back(corner_of[b][a]);
                nw.push_back(corner_of[b][c]);
            }
        }
        fs.push_back(nw);
    }
    for (int w = 0; w < g.n; ++w) {
        if (!trunc[w]) continue;
        std::vector<int> poly;
        for (auto it = rot[w].rbegin(); it != rot[w].rend(); ++it) poly.push_back(corner_of[w][*it]);
        fs.push_back(poly);
    }
    out.faces = std::move(fs);
    return out;
}

// Quotient by a vertex partition: one vertex per class (in the given class
// order), an edge between classes whenever some original edge crosses them.
// Loops are dropped, duplicates collapsed; base colorings and faces are
// discarded and the output is undirected.
inline Graph contract_classes(const Graph& g, const std::vector<std::vector<int>>& classes) {
    std::vector<int> cls(g.n, -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (int v : classes[i]) {
            check(v >= 0 && v < g.n, "contract_classes: vertex out of range");
            check(cls[v] == -1, "contract_classes: classes overlap");
            cls[v] = (int)i;
        }
    for (int v = 0; v < g.n; ++v) check(cls[v] != -1, "contract_classes: partition misses a vertex");
    Graph q;
    q.n = (int)classes.size();
    std::set<Arc> had;
    for (auto [u, v] : g.edges) {
        int a = cls[u], b = cls[v];
        if (a == b) continue;
        Arc key = norm_edge(a, b);
        if (had.insert(key).second) q.edges.push_back(key);
    }
    return q;
}

// Add one fresh vertex per face, joined to every vertex on that face's walk.
// Apex ids are n + face index. Each original face of length l becomes l
// triangles in the output face list.
inline Graph apex_augment(const Graph& g) {
    check(!g.directed, "apex_augment: undirected input required");
    check(g.faces.has_value(), "apex_augment: face list required");
    Graph out;
    out.n = g.n + (int)g.faces->size();
    out.edges = g.edges;
    std::vector<std::vector<int>> fs;
    for (std::size_t i = 0; i < g.faces->size(); ++i) {
        int apex = g.n + (int)i;
        auto& walk = g.faces->at(i);
        std::set<int> seen;
        for (int v : walk)
            if (seen.insert(v).second) out.edges.push_back({v, apex});
        for (std::size_t j = 0; j < walk.size(); ++j)
            fs.push_back({walk[j], walk[(j + 1) % walk.size()], apex});
    }
    out.faces = std::move(fs);
    return out;
}

}  // namespace wlp
