// Weisfeiler-Leman machinery: 1-WL on arc-colored graphs, 1-WL on
// pair-colored graphs with individualization, 2-WL over ordered pairs,
// discrete-closure helpers, and cross-graph comparison via disjoint unions.
//
// Color ids are canonical everywhere: each round's signatures are sorted
// globally and dense ids are assigned in that order, so isomorphic inputs
// always produce identical colorings.
#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <numeric>

#include <wlplanar/graph.hpp>

namespace wlp {

struct VertexColoring {
    int rounds = 0;
    int classes = 0;
    std::vector<int> color;
};

struct PairColoring {
    int n = 0;
    int rounds = 0;
    int classes = 0;
    std::vector<int> color;  // row-major n*n
    int at(int v, int w) const { return color[(std::size_t)v * n + w]; }
};

namespace detail {

constexpr std::int64_t kAbsent = (std::int64_t)INT_MIN - 1;

// Base arc color with defaults: diagonal 1, arcs 2 when no custom coloring is
// present; kAbsent for pairs outside A(G).
struct ArcColorView {
    const Graph* g;
    std::vector<std::vector<char>> m;
    explicit ArcColorView(const Graph& gr) : g(&gr), m(arc_matrix(gr)) {}
    std::int64_t operator()(int v, int w) const {
        if (g->arc_colors) {
            auto it = g->arc_colors->find({v, w});
            return it == g->arc_colors->end() ? kAbsent : it->second;
        }
        if (v == w) return 1;
        return m[v][w] ? 2 : kAbsent;
    }
};

// Sort rows of `sig` (index sort) and assign dense ids in sorted order.
// Returns the class count.
template <typename Row>
int assign_dense(const std::vector<Row>& sig, std::vector<int>& out) {
    std::vector<int> idx(sig.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    out.assign(sig.size(), 0);
    int next = -1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++next;
        out[idx[i]] = next;
    }
    return next + 1;
}

}  // namespace detail

// 1-WL with arc colors: chi_0(v) = color(v,v); each round appends the sorted
// multiset of (chi(w), color(v,w), color(w,v)) over underlying neighbors w.
inline VertexColoring wl1(const Graph& g) {
    detail::ArcColorView ac(g);
    auto nb = neighbors(g);
    const int n = g.n;
    VertexColoring vc;
    vc.color.assign(n, 0);
    {
        std::vector<std::array<std::int64_t, 1>> init(n);
        for (int v = 0; v < n; ++v) init[v] = {ac(v, v)};
        vc.classes = detail::assign_dense(init, vc.color);
    }
    for (int round = 1;; ++round) {
        check(round <= n + 1, "wl1: round cap exceeded");
        std::vector<std::vector<std::int64_t>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::array<std::int64_t, 3>> entries;
            entries.reserve(nb[v].size());
            for (int w : nb[v]) entries.push_back({(std::int64_t)vc.color[w], ac(v, w), ac(w, v)});
            std::sort(entries.begin(), entries.end());
            auto& s = sig[v];
            s.push_back(vc.color[v]);
            for (auto& e : entries) s.insert(s.end(), e.begin(), e.end());
        }
        std::vector<int> ncol;
        int nclasses = detail::assign_dense(sig, ncol);
        if (nclasses == vc.classes) break;
        vc.color = std::move(ncol);
        vc.classes = nclasses;
        vc.rounds = round;
    }
    return vc;
}

// 1-WL on a pair-colored graph with an ordered individualized set: the i-th
// individualized vertex starts with its own color; everyone else starts from
// the diagonal pair color. Rounds aggregate over all other vertices w the
// triple (chi(w), pc(v,w), pc(w,v)).
inline VertexColoring wl1_pair(const Graph& g, const PairColoring& pc, const std::vector<int>& individualized) {
    const int n = g.n;
    check(pc.n == n, "wl1_pair: pair coloring size mismatch");
    VertexColoring vc;
    {
        std::vector<std::array<std::int64_t, 2>> init(n);
        for (int v = 0; v < n; ++v) init[v] = {0, (std::int64_t)pc.at(v, v)};
        for (std::size_t i = 0; i < individualized.size(); ++i) {
            int v = individualized[i];
            check(v >= 0 && v < n, "wl1_pair: individualized vertex out of range");
            init[v] = {1, (std::int64_t)i};
        }
        vc.classes = detail::assign_dense(init, vc.color);
    }
    for (int round = 1;; ++round) {
        check(round <= n + 1, "wl1_pair: round cap exceeded");
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::array<int, 3>> entries;
            entries.reserve(n - 1);
            for (int w = 0; w < n; ++w)
                if (w != v) entries.push_back({vc.color[w], pc.at(v, w), pc.at(w, v)});
            std::sort(entries.begin(), entries.end());
            auto& s = sig[v];
            s.push_back(vc.color[v]);
            for (auto& e : entries) s.insert(s.end(), e.begin(), e.end());
        }
        std::vector<int> ncol;
        int nclasses = detail::assign_dense(sig, ncol);
        if (nclasses == vc.classes) break;
        vc.color = std::move(ncol);
        vc.classes = nclasses;
        vc.rounds = round;
    }
    return vc;
}

namespace detail {

// One 2-WL refinement round on top of `col`; writes the refined coloring into
// `col` and returns the new class count.
inline int wl2_round(int n, std::vector<int>& col) {
    const std::size_t L = 1 + (std::size_t)n;  // old color + one packed entry per vertex
    std::vector<std::int64_t> flat((std::size_t)n * n * L);
    std::vector<std::int64_t> entries(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int w = 0; w < n; ++w) {
                std::int64_t a = col[(std::size_t)w * n + y];  // chi(w, y)
                std::int64_t b = col[(std::size_t)x * n + w];  // chi(x, w)
                entries[w] = (a << 31) | b;
            }
            std::sort(entries.begin(), entries.end());
            std::int64_t* seg = &flat[((std::size_t)x * n + y) * L];
            seg[0] = col[(std::size_t)x * n + y];
            std::copy(entries.begin(), entries.end(), seg + 1);
        }
    std::vector<int> idx(n * (std::size_t)n);
    std::iota(idx.begin(), idx.end(), 0);
    auto cmp = [&](int a, int b) {
        const std::int64_t* pa = &flat[(std::size_t)a * L];
        const std::int64_t* pb = &flat[(std::size_t)b * L];
        for (std::size_t i = 0; i < L; ++i) {
            if (pa[i] != pb[i]) return pa[i] < pb[i];
        }
        return false;
    };
    std::sort(idx.begin(), idx.end(), cmp);
    auto same = [&](int a, int b) {
        const std::int64_t* pa = &flat[(std::size_t)a * L];
        const std::int64_t* pb = &flat[(std::size_t)b * L];
        return std::equal(pa, pa + L, pb);
    };
    int next = -1;
    std::vector<int> ncol(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i == 0 || !same(idx[i], idx[i - 1])) ++next;
        ncol[idx[i]] = next;
    }
    col = std::move(ncol);
    return next + 1;
}

}  // namespace detail

// 2-WL over ordered pairs. Initial color: isomorphism type of the ordered
// pair (equality, both arc flags) together with the base colors of (v,v),
// (w,w), (v,w), (w,v). Rounds refine until the class count stops growing;
// the number of classes strictly grows per refining round, so n^2 bounds the
// round count.
inline PairColoring wl2(const Graph& g) {
    const int n = g.n;
    detail::ArcColorView ac(g);
    PairColoring pc;
    pc.n = n;
    {
        std::vector<std::array<std::int64_t, 7>> init((std::size_t)n * n);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                init[(std::size_t)v * n + w] = {v == w ? 1 : 0,
                                                ac.m[v][w],
                                                ac.m[w][v],
                                                ac(v, v),
                                                ac(w, w),
                                                ac(v, w),
                                                ac(w, v)};
        pc.classes = detail::assign_dense(init, pc.color);
    }
    for (int round = 1;; ++round) {
        check(round <= n * n + 1, "wl2: round cap exceeded");
        std::vector<int> col = pc.color;
        int nclasses = detail::wl2_round(n, col);
        if (nclasses == pc.classes) break;
        pc.color = std::move(col);
        pc.classes = nclasses;
        pc.rounds = round;
    }
    return pc;
}

// Fix(lambda): vertices alone in their color class.
inline std::vector<int> fix_of(const VertexColoring& vc) {
    std::map<int, int> count;
    for (int c : vc.color) ++count[c];
    std::vector<int> out;
    for (int v = 0; v < (int)vc.color.size(); ++v)
        if (count[vc.color[v]] == 1) out.push_back(v);
    return out;
}

// Disc_G(individualized) = Fix(WL1(G, WL2(G), individualized)). The pair
// coloring can be passed in to amortize repeated calls.
inline std::vector<int> disc(const Graph& g, const std::vector<int>& individualized, const PairColoring* pre = nullptr) {
    PairColoring local;
    if (!pre) {
        local = wl2(g);
        pre = &local;
    }
    return fix_of(wl1_pair(g, *pre, individualized));
}

// Smallest vertex whose individualization makes the coloring discrete, or -1.
inline int find_fixing_vertex(const Graph& g, const PairColoring* pre = nullptr) {
    PairColoring local;
    if (!pre) {
        local = wl2(g);
        pre = &local;
    }
    for (int v = 0; v < g.n; ++v)
        if ((int)disc(g, {v}, pre).size() == g.n) return v;
    return -1;
}

// Compare two graphs with k-WL: run on the disjoint union and compare the
// per-side color histograms (vertex colors for k = 1, within-side pair colors
// for k = 2). True means the histograms differ, i.e. the graphs are told
// apart (and are certainly non-isomorphic).
inline bool distinguishes(const Graph& g, const Graph& h, int k) {
    check(k == 1 || k == 2, "distinguishes: k must be 1 or 2");
    auto [u, off] = disjoint_union(g, h);
    if (k == 1) {
        auto vc = wl1(u);
        std::vector<int> a(vc.color.begin(), vc.color.begin() + off);
        std::vector<int> b(vc.color.begin() + off, vc.color.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a != b;
    }
    auto pc = wl2(u);
    std::vector<int> a, b;
    for (int v = 0; v < g.n; ++v)
        for (int w = 0; w < g.n; ++w) a.push_back(pc.at(v, w));
    for (int v = 0; v < h.n; ++v)
        for (int w = 0; w < h.n; ++w) b.push_back(pc.at(off + v, off + w));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a != b;
}

// A pair coloring is 2-stable when one refinement round does not split any
// class and it refines the graph's own 2-WL coloring.
inline bool is_k_stable(const Graph& g, const PairColoring& pc) {
    check(pc.n == g.n, "is_k_stable: size mismatch");
    std::vector<int> col = pc.color;
    int nclasses = detail::wl2_round(g.n, col);
    if (nclasses != pc.classes) return false;
    PairColoring ref = wl2(g);
    std::map<int, int> to_ref;
    for (std::size_t i = 0; i < pc.color.size(); ++i) {
        auto [it, fresh] = to_ref.emplace(pc.color[i], ref.color[i]);
        if (!fresh && it->second != ref.color[i]) return false;
    }
    return true;
}

inline Json vertex_coloring_to_json(const VertexColoring& vc) {
    Json j;
    j["kind"] = "vertex";
    j["rounds"] = vc.rounds;
    Json cols = Json::array();
    for (int v = 0; v < (int)vc.color.size(); ++v) cols.push_back({v, vc.color[v]});
    j["colors"] = cols;
    return j;
}

inline Json pair_coloring_to_json(const PairColoring& pc) {
    Json j;
    j["kind"] = "pair";
    j["rounds"] = pc.rounds;
    Json cols = Json::array();
    for (int v = 0; v < pc.n; ++v)
        for (int w = 0; w < pc.n; ++w) cols.push_back({v, w, pc.at(v, w)});
    j["colors"] = cols;
    return j;
}

}  // namespace wlp
