// Core graph representation: plain data plus free functions. Vertices are
// dense ints 0..n-1. Directed graphs store ordered pairs in `edges`; for
// undirected graphs the stored orientation carries no meaning. An optional
// base arc coloring is total on the arc set A(G) = {(v,v)} ∪ {(v,w) : vw edge}
// and an optional face list stores oriented boundary walks.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wlp {

using Json = nlohmann::ordered_json;
using Arc = std::pair<int, int>;

struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<Arc> edges;
    std::optional<std::map<Arc, int>> arc_colors;
    std::optional<std::vector<std::vector<int>>> faces;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

// The arcs of g: both orientations of every edge when undirected, the stored
// orientation only when directed. Diagonal loops are not included.
inline std::vector<Arc> arcs(const Graph& g) {
    std::vector<Arc> a;
    for (auto [u, v] : g.edges) {
        a.push_back({u, v});
        if (!g.directed) a.push_back({v, u});
    }
    return a;
}

inline std::vector<std::vector<char>> arc_matrix(const Graph& g) {
    std::vector<std::vector<char>> m(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : arcs(g)) m[u][v] = 1;
    return m;
}

// Underlying-undirected neighbor lists, sorted, without duplicates.
inline std::vector<std::vector<int>> neighbors(const Graph& g) {
    std::vector<std::set<int>> nb(g.n);
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        nb[u].insert(v);
        nb[v].insert(u);
    }
    std::vector<std::vector<int>> out(g.n);
    for (int v = 0; v < g.n; ++v) out[v] = {nb[v].begin(), nb[v].end()};
    return out;
}

inline int degree(const Graph& g, int v) { return (int)neighbors(g)[v].size(); }

// Component label per vertex; labels are dense and ordered by the smallest
// vertex contained in the component.
inline std::vector<int> connected_components(const Graph& g) {
    auto nb = neighbors(g);
    std::vector<int> comp(g.n, -1);
    int next = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : nb[v])
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline int component_count(const Graph& g) {
    auto c = connected_components(g);
    return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

// Subgraph induced on `verts` (kept in the given order, which must be
// duplicate-free). Returns the graph and the original id of each new vertex.
// Base arc colors are restricted; faces are dropped.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> where(g.n, -1);
    for (int i = 0; i < (int)verts.size(); ++i) {
        check(verts[i] >= 0 && verts[i] < g.n, "induced_subgraph: vertex out of range");
        check(where[verts[i]] == -1, "induced_subgraph: duplicate vertex");
        where[verts[i]] = i;
    }
    Graph h;
    h.n = (int)verts.size();
    h.directed = g.directed;
    for (auto [u, v] : g.edges)
        if (u != v && where[u] != -1 && where[v] != -1) h.edges.push_back({where[u], where[v]});
    if (g.arc_colors) {
        std::map<Arc, int> ac;
        for (int i = 0; i < h.n; ++i) ac[{i, i}] = g.arc_colors->at({verts[i], verts[i]});
        for (auto [u, v] : h.edges) {
            ac[{u, v}] = g.arc_colors->at({verts[u], verts[v]});
            if (!g.directed) ac[{v, u}] = g.arc_colors->at({verts[v], verts[u]});
        }
        h.arc_colors = std::move(ac);
    }
    return {h, verts};
}

// Spanning subgraph keeping only the given edges (as unordered endpoint
// pairs). Base arc colors are restricted to the kept arcs plus the diagonal;
// faces are dropped.
inline Graph edge_subgraph(const Graph& g, const std::vector<Arc>& keep) {
    std::set<Arc> want;
    for (auto [u, v] : keep) {
        want.insert({u, v});
        want.insert({v, u});
    }
    Graph h;
    h.n = g.n;
    h.directed = g.directed;
    for (auto [u, v] : g.edges)
        if (want.count({u, v})) h.edges.push_back({u, v});
    if (g.arc_colors) {
        std::map<Arc, int> ac;
        for (int v = 0; v < g.n; ++v) ac[{v, v}] = g.arc_colors->at({v, v});
        for (auto [u, v] : h.edges) {
            ac[{u, v}] = g.arc_colors->at({u, v});
            if (!g.directed) ac[{v, u}] = g.arc_colors->at({v, u});
        }
        h.arc_colors = std::move(ac);
    }
    return h;
}

// Disjoint union; the second graph's vertices are shifted by g1.n (the
// returned offset). Directedness must match. If either side carries a base
// arc coloring, both sides' colorings are materialized verbatim (the default
// coloring fills in for a side without one); callers wanting disjoint color
// namespaces must arrange them beforehand.
inline std::pair<Graph, int> disjoint_union(const Graph& g1, const Graph& g2) {
    check(g1.directed == g2.directed, "disjoint_union: directedness mismatch");
    Graph g;
    g.n = g1.n + g2.n;
    g.directed = g1.directed;
    g.edges = g1.edges;
    for (auto [u, v] : g2.edges) g.edges.push_back({u + g1.n, v + g1.n});
    if (g1.arc_colors || g2.arc_colors) {
        std::map<Arc, int> ac;
        auto put = [&](const Graph& part, int off) {
            if (part.arc_colors) {
                for (auto& [a, c] : *part.arc_colors) ac[{a.first + off, a.second + off}] = c;
            } else {
                for (int v = 0; v < part.n; ++v) ac[{v + off, v + off}] = 1;
                for (auto [u, v] : arcs(part)) ac[{u + off, v + off}] = 2;
            }
        };
        put(g1, 0);
        put(g2, g1.n);
        g.arc_colors = std::move(ac);
    }
    if (g1.faces && g2.faces) {
        std::vector<std::vector<int>> fs = *g1.faces;
        for (auto& w : *g2.faces) {
            std::vector<int> shifted;
            for (int v : w) shifted.push_back(v + g1.n);
            fs.push_back(shifted);
        }
        g.faces = std::move(fs);
    }
    return {g, g1.n};
}

// Structural sanity: ranges, simplicity, coloring totality, and (when faces
// are present) the Euler count per component.
inline void validate(const Graph& g) {
    std::set<Arc> seen;
    for (auto [u, v] : g.edges) {
        check(u >= 0 && u < g.n && v >= 0 && v < g.n, "edge endpoint out of range");
        check(u != v, "loop edges are not allowed");
        Arc key = g.directed ? Arc{u, v} : Arc{std::min(u, v), std::max(u, v)};
        check(!seen.count(key), "duplicate edge");
        seen.insert(key);
    }
    if (g.arc_colors) {
        std::set<Arc> expect;
        for (int v = 0; v < g.n; ++v) expect.insert({v, v});
        for (auto a : arcs(g)) expect.insert(a);
        std::set<Arc> have;
        for (auto& [a, c] : *g.arc_colors) have.insert(a);
        check(have == expect, "arc coloring must be total on the diagonal plus all arcs");
    }
    if (g.faces) {
        auto m = arc_matrix(g);
        for (auto& w : g.faces.value()) {
            check(w.size() >= 2, "face walk too short");
            for (std::size_t i = 0; i < w.size(); ++i) {
                int a = w[i], b = w[(i + 1) % w.size()];
                check(a >= 0 && a < g.n && b >= 0 && b < g.n, "face vertex out of range");
                check(m[a][b] || m[b][a], "face walk uses a non-edge");
            }
        }
        int comps = component_count(g);
        check((int)g.faces->size() == (int)g.edges.size() - g.n + 2 * comps,
              "face count violates the Euler formula");
    }
}

// Strong face-list check: the walks form an oriented combinatorial map, i.e.
// every edge direction is traversed by exactly one walk.
inline void validate_faces_map(const Graph& g) {
    validate(g);
    check(g.faces.has_value(), "no face list");
    std::map<Arc, int> used;
    for (auto& w : g.faces.value())
        for (std::size_t i = 0; i < w.size(); ++i) ++used[{w[i], w[(i + 1) % w.size()]}];
    std::map<Arc, int> expect;
    for (auto [u, v] : g.edges) {
        expect[{u, v}] = 1;
        expect[{v, u}] = 1;
    }
    check(used == expect, "face walks do not traverse every edge direction exactly once");
}

// ---- serialization ----

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["directed"] = g.directed;
    j["n"] = g.n;
    Json es = Json::array();
    for (auto [u, v] : g.edges) es.push_back({u, v});
    j["edges"] = es;
    if (g.arc_colors) {
        Json ac = Json::array();
        for (auto& [a, c] : *g.arc_colors) ac.push_back({a.first, a.second, c});
        j["arc_colors"] = ac;
    }
    if (g.faces) j["faces"] = *g.faces;
    return j;
}

inline Graph graph_from_json(const Json& j) {
    Graph g;
    check(j.is_object(), "graph JSON must be an object");
    check(j.contains("n") && j.contains("edges"), "graph JSON needs n and edges");
    g.directed = j.value("directed", false);
    g.n = j.at("n").get<int>();
    for (auto& e : j.at("edges")) {
        check(e.is_array() && e.size() == 2, "edge entries must be pairs");
        g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    if (j.contains("arc_colors")) {
        std::map<Arc, int> ac;
        for (auto& e : j.at("arc_colors")) {
            check(e.is_array() && e.size() == 3, "arc color entries must be triples");
            ac[{e[0].get<int>(), e[1].get<int>()}] = e[2].get<int>();
        }
        g.arc_colors = std::move(ac);
    }
    if (j.contains("faces")) {
        std::vector<std::vector<int>> fs;
        for (auto& w : j.at("faces")) fs.push_back(w.get<std::vector<int>>());
        g.faces = std::move(fs);
    }
    validate(g);
    return g;
}

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.n << " " << g.edges.size() << " " << (g.directed ? "d" : "u") << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

inline Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    Graph g;
    int m = 0;
    std::string flag;
    check(bool(in >> g.n >> m >> flag), "edge-list header must be: n m [d|u]");
    check(flag == "d" || flag == "u", "edge-list flag must be d or u");
    g.directed = (flag == "d");
    for (int i = 0; i < m; ++i) {
        int u, v;
        check(bool(in >> u >> v), "edge-list body ended early");
        g.edges.push_back({u, v});
    }
    validate(g);
    return g;
}

}  // namespace wlp
