// Structural predicates: planarity (left-right criterion), small-k vertex
// connectivity by exhaustive removal, per-component face counts via Euler,
// color-constrained reachability, and locally determined color sets.
#pragma once

#include <wlplanar/graph.hpp>
#include <wlplanar/wl.hpp>

namespace wlp {

namespace detail {

// Left-right planarity test (orientation + constraint phases, no embedding).
// Operates on the simple undirected support of the input.
class LRPlanarity {
  public:
    explicit LRPlanarity(const Graph& g) {
        n_ = g.n;
        std::set<Arc> seen;
        for (auto [u, v] : g.edges) {
            if (u == v) continue;
            Arc key{std::min(u, v), std::max(u, v)};
            if (seen.insert(key).second) und_.push_back(key);
        }
    }

    bool run() {
        int m = (int)und_.size();
        if (n_ > 2 && m > 3 * n_ - 6) return false;
        adj_.assign(n_, {});
        // Oriented edge ids are assigned during DFS1; reserve 2m slots.
        src_.clear();
        dst_.clear();
        lowpt_.clear();
        lowpt2_.clear();
        nesting_.clear();
        ref_.clear();
        lowpt_edge_.clear();
        stack_bottom_.clear();
        height_.assign(n_, -1);
        parent_edge_.assign(n_, -1);
        half_.assign(n_, {});
        for (int i = 0; i < m; ++i) {
            half_[und_[i].first].push_back(und_[i].second);
            half_[und_[i].second].push_back(und_[i].first);
        }
        oriented_.clear();
        for (int root = 0; root < n_; ++root) {
            if (height_[root] != -1) continue;
            height_[root] = 0;
            if (!dfs1(root)) return false;  // cannot fail, kept for shape
        }
        // Order adjacency by nesting depth.
        for (int v = 0; v < n_; ++v)
            std::sort(adj_[v].begin(), adj_[v].end(),
                      [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        s_.clear();
        for (int root = 0; root < n_; ++root)
            if (parent_edge_[root] == -1 && !adj_[root].empty())
                if (!dfs2(root)) return false;
        return true;
    }

  private:
    struct Interval {
        int high = -1, low = -1;
        bool empty() const { return high == -1 && low == -1; }
    };
    struct ConflictPair {
        Interval l, r;
    };

    int new_edge(int u, int v) {
        src_.push_back(u);
        dst_.push_back(v);
        lowpt_.push_back(height_[u]);
        lowpt2_.push_back(height_[u]);
        nesting_.push_back(0);
        ref_.push_back(-1);
        lowpt_edge_.push_back(-1);
        stack_bottom_.push_back(-1);
        adj_[u].push_back((int)src_.size() - 1);
        return (int)src_.size() - 1;
    }

    bool dfs1(int v) {
        int e = parent_edge_[v];
        for (int w : half_[v]) {
            if (!oriented_.insert({std::min(v, w), std::max(v, w)}).second) continue;
            int ei = new_edge(v, w);
            if (height_[w] == -1) {  // tree edge
                parent_edge_[w] = ei;
                height_[w] = height_[v] + 1;
                if (!dfs1(w)) return false;
            } else {  // back edge
                lowpt_[ei] = height_[w];
            }
            nesting_[ei] = 2 * lowpt_[ei];
            if (lowpt2_[ei] < height_[v]) ++nesting_[ei];  // chordal
            if (e != -1) {
                if (lowpt_[ei] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
                    lowpt_[e] = lowpt_[ei];
                } else if (lowpt_[ei] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
                }
            }
        }
        return true;
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.l.empty()) return lowpt_[p.r.low];
        if (p.r.empty()) return lowpt_[p.l.low];
        return std::min(lowpt_[p.l.low], lowpt_[p.r.low]);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // merge return edges of ei into p.r
        while (true) {
            check(!s_.empty(), "planarity: conflict stack unexpectedly empty");
            ConflictPair q = s_.back();
            s_.pop_back();
            if (!q.l.empty()) std::swap(q.l, q.r);
            if (!q.l.empty()) return false;
            if (lowpt_[q.r.low] > lowpt_[e]) {
                if (p.r.empty())
                    p.r.high = q.r.high;
                else
                    ref_[p.r.low] = q.r.high;
                p.r.low = q.r.low;
            } else {
                ref_[q.r.low] = lowpt_edge_[e];
            }
            if ((int)s_.size() == stack_bottom_[ei]) break;
        }
        // merge conflicting return edges of earlier siblings into p.l
        // The first outgoing edge keeps a return edge at least as deep as
        // ei's, so its pair stays on the stack and the loop cannot run dry.
        while (true) {
            check(!s_.empty(), "planarity: conflict stack unexpectedly empty");
            if (!conflicting(s_.back().l, ei) && !conflicting(s_.back().r, ei)) break;
            ConflictPair q = s_.back();
            s_.pop_back();
            if (conflicting(q.r, ei)) std::swap(q.l, q.r);
            if (conflicting(q.r, ei)) return false;
            if (p.r.low != -1) ref_[p.r.low] = q.r.high;
            if (q.r.low != -1) p.r.low = q.r.low;
            if (p.l.empty())
                p.l.high = q.l.high;
            else
                ref_[p.l.low] = q.l.high;
            p.l.low = q.l.low;
        }
        if (!(p.l.empty() && p.r.empty())) s_.push_back(p);
        return true;
    }

    void trim_back_edges(int u) {
        while (!s_.empty() && lowest(s_.back()) == height_[u]) s_.pop_back();
        if (!s_.empty()) {
            ConflictPair p = s_.back();
            s_.pop_back();
            while (p.l.high != -1 && dst_[p.l.high] == u) p.l.high = ref_[p.l.high];
            if (p.l.high == -1 && p.l.low != -1) {
                ref_[p.l.low] = p.r.low;
                p.l.low = -1;
            }
            while (p.r.high != -1 && dst_[p.r.high] == u) p.r.high = ref_[p.r.high];
            if (p.r.high == -1 && p.r.low != -1) {
                ref_[p.r.low] = p.l.low;
                p.r.low = -1;
            }
            s_.push_back(p);
        }
    }

    bool dfs2(int v) {
        int e = parent_edge_[v];
        bool first_out = true;
        for (int ei : adj_[v]) {
            stack_bottom_[ei] = (int)s_.size();
            int w = dst_[ei];
            if (parent_edge_[w] == ei) {
                if (!dfs2(w)) return false;
            } else {
                lowpt_edge_[ei] = ei;
                ConflictPair p;
                p.r.high = p.r.low = ei;
                s_.push_back(p);
            }
            if (lowpt_[ei] < height_[v]) {  // has a return edge
                if (first_out) {
                    if (e != -1) lowpt_edge_[e] = lowpt_edge_[ei];
                } else {
                    if (!add_constraints(ei, e)) return false;
                }
            }
            first_out = false;
        }
        if (e != -1) {
            int u = src_[e];
            trim_back_edges(u);
            if (lowpt_[e] < height_[u]) {
                check(!s_.empty(), "planarity: conflict stack unexpectedly empty");
                int hl = s_.back().l.high, hr = s_.back().r.high;
                if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr]))
                    ref_[e] = hl;
                else
                    ref_[e] = hr;
            }
        }
        return true;
    }

    int n_ = 0;
    std::vector<Arc> und_;
    std::set<Arc> oriented_;
    std::vector<std::vector<int>> half_;    // undirected adjacency (vertex ids)
    std::vector<std::vector<int>> adj_;     // outgoing oriented edge ids
    std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_, stack_bottom_;
    std::vector<int> height_, parent_edge_;
    std::vector<ConflictPair> s_;
};

}  // namespace detail

// Planarity of the underlying undirected simple graph.
inline bool is_planar(const Graph& g) {
    detail::LRPlanarity lr(g);
    return lr.run();
}

// k-connectivity for k <= 3 by trying every removal of fewer than k vertices.
// Requires n >= k+1 as usual.
inline bool is_k_connected(const Graph& g, int k) {
    check(k >= 1 && k <= 3, "is_k_connected: k must be 1, 2, or 3");
    if (g.n < k + 1) return false;
    auto nb = neighbors(g);
    auto connected_without = [&](int a, int b) {
        int start = -1;
        for (int v = 0; v < g.n; ++v)
            if (v != a && v != b) {
                start = v;
                break;
            }
        if (start == -1) return true;
        std::vector<char> seen(g.n, 0);
        seen[start] = 1;
        std::vector<int> stack = {start};
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : nb[v])
                if (w != a && w != b && !seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        int expect = g.n - (a != -1 ? 1 : 0) - (b != -1 && b != a ? 1 : 0);
        return cnt == expect;
    };
    if (!connected_without(-1, -1)) return false;
    if (k >= 2)
        for (int a = 0; a < g.n; ++a)
            if (!connected_without(a, -1)) return false;
    if (k >= 3)
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b)
                if (!connected_without(a, b)) return false;
    return true;
}

struct ComponentStats {
    std::vector<int> vertices;
    int n = 0, m = 0, f = 0;  // f from Euler: m - n + 2
};

// Components of the subgraph induced by `edge_subset` with their Euler face
// counts. The face formula is only meaningful on planar hosts, so a
// non-planar host is rejected. Vertices touched by no subset edge are not
// reported.
inline std::vector<ComponentStats> component_stats(const Graph& g, const std::vector<Arc>& edge_subset) {
    check(is_planar(g), "component_stats: host graph is not planar");
    Graph sub = edge_subgraph(g, edge_subset);
    auto comp = connected_components(sub);
    std::map<int, ComponentStats> by;
    for (int v = 0; v < sub.n; ++v) {
        by[comp[v]].vertices.push_back(v);
        by[comp[v]].n++;
    }
    for (auto [u, v] : sub.edges) by[comp[u]].m++;
    std::vector<ComponentStats> out;
    for (auto& [c, st] : by) {
        if (st.m == 0) continue;
        st.f = st.m - st.n + 2;
        out.push_back(st);
    }
    return out;
}

// Vertices reachable from v along paths whose internal vertices have
// diagonal colors outside D. Endpoints are exempt; v itself is included.
inline std::vector<int> avoid_reachable(const Graph& g, const PairColoring& pc, const std::set<int>& D, int v) {
    auto nb = neighbors(g);
    std::vector<char> reached(g.n, 0), expanded(g.n, 0);
    reached[v] = 1;
    std::vector<int> queue = {v};
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        if (expanded[u]) continue;
        if (u != v && D.count(pc.at(u, u))) continue;  // u may be an endpoint only
        expanded[u] = 1;
        for (int w : nb[u])
            if (!reached[w]) {
                reached[w] = 1;
                queue.push_back(w);
            }
    }
    std::vector<int> out;
    for (int u = 0; u < g.n; ++u)
        if (reached[u]) out.push_back(u);
    return out;
}

// Directed C-distance: shortest number of steps v = u_0, ..., u_k = w where
// every step satisfies pc(u_{i-1}, u_i) in C. Returns -1 when unreachable.
inline int c_distance(const Graph& g, const PairColoring& pc, const std::set<int>& C, int v, int w) {
    auto nb = neighbors(g);
    std::vector<int> dist(g.n, -1);
    dist[v] = 0;
    std::vector<int> frontier = {v};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            if (x == w) return dist[x];
            for (int y : nb[x])
                if (dist[y] == -1 && C.count(pc.at(x, y))) {
                    dist[y] = dist[x] + 1;
                    next.push_back(y);
                }
        }
        frontier = std::move(next);
    }
    return dist[w];
}

// C is locally determined when every connected component of G[C] carries all
// colors of C on its own edges. C must consist of edge colors.
inline bool locally_determined(const Graph& g, const PairColoring& pc, const std::set<int>& C) {
    std::set<int> edge_colors;
    for (auto [u, v] : arcs(g)) edge_colors.insert(pc.at(u, v));
    for (int c : C) check(edge_colors.count(c) > 0, "locally_determined: color is not an edge color");
    std::vector<Arc> support;
    for (auto [u, v] : g.edges)
        if (u != v && (C.count(pc.at(u, v)) || C.count(pc.at(v, u)))) support.push_back({u, v});
    if (support.empty()) return true;  // C empty: vacuously determined
    Graph sub = edge_subgraph(g, support);
    auto comp = connected_components(sub);
    std::map<int, std::set<int>> colors_in;
    for (auto [u, v] : sub.edges) {
        colors_in[comp[u]].insert(pc.at(u, v));
        colors_in[comp[u]].insert(pc.at(v, u));
    }
    for (auto& [c, present] : colors_in)
        for (int want : C)
            if (!present.count(want)) return false;
    return true;
}

}  // namespace wlp
