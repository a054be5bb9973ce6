#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <wlplanar/graph.hpp>
#include <wlplanar/wl.hpp>

#include "oracle.hpp"

using wlp::Graph;

namespace {

Graph cycle(int l) {
    Graph g;
    g.n = l;
    for (int i = 0; i < l; ++i) g.edges.push_back({i, (i + 1) % l});
    return g;
}

Graph complete(int n) {
    Graph g;
    g.n = n;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) g.edges.push_back({v, w});
    return g;
}

Graph cube() {
    Graph g;
    g.n = 8;
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
               {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    return g;
}

Graph from_oracle(const oracle::OGraph& o) {
    Graph g;
    g.n = o.n;
    g.directed = o.directed;
    g.edges = o.edges;
    return g;
}

// Two labelings of the same index set describe the same partition iff the
// color pairs form a bijection.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    std::map<int, int> fwd, bwd;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [f, fn] = fwd.emplace(a[i], b[i]);
        if (!fn && f->second != b[i]) return false;
        auto [r, rn] = bwd.emplace(b[i], a[i]);
        if (!rn && r->second != a[i]) return false;
    }
    return true;
}

std::vector<int> flatten(const std::vector<std::vector<int>>& m) {
    std::vector<int> out;
    for (auto& row : m) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace

TEST_CASE("wl2 matches the reference on every connected graph up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        oracle::for_each_graph(n, [&](const oracle::OGraph& o) {
            if (!oracle::connected(o)) return;
            auto ref = oracle::ref_wl2(o);
            auto pc = wlp::wl2(from_oracle(o));
            REQUIRE(pc.classes == oracle::class_count(ref));
            REQUIRE(same_partition(pc.color, flatten(ref)));
        });
    }
}

TEST_CASE("wl2 matches the reference on sampled 7-vertex graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        oracle::OGraph o;
        o.n = 7;
        for (int v = 0; v < 7; ++v)
            for (int w = v + 1; w < 7; ++w)
                if (rng() % 2) o.edges.push_back({v, w});
        auto ref = oracle::ref_wl2(o);
        auto pc = wlp::wl2(from_oracle(o));
        REQUIRE(pc.classes == oracle::class_count(ref));
        REQUIRE(same_partition(pc.color, flatten(ref)));
    }
}

TEST_CASE("wl1 matches the reference refinement on small graphs") {
    for (int n = 1; n <= 5; ++n) {
        oracle::for_each_graph(n, [&](const oracle::OGraph& o) {
            auto ref = oracle::ref_wl1(o);
            auto vc = wlp::wl1(from_oracle(o));
            REQUIRE(same_partition(vc.color, ref));
        });
    }
}

TEST_CASE("frozen class counts: K4 and C5 under 2-WL") {
    REQUIRE(wlp::wl2(complete(4)).classes == 2);
    REQUIRE(wlp::wl2(cycle(5)).classes == 3);
}

TEST_CASE("arc colors feed the refinement") {
    Graph star;
    star.n = 3;
    star.edges = {{0, 1}, {0, 2}};
    std::map<wlp::Arc, int> ac;
    for (int v = 0; v < 3; ++v) ac[{v, v}] = 0;
    ac[{0, 1}] = 5;
    ac[{1, 0}] = 5;
    ac[{0, 2}] = 6;
    ac[{2, 0}] = 6;
    star.arc_colors = ac;
    auto vc = wlp::wl1(star);
    REQUIRE(vc.classes == 3);  // the two leaves differ through their edge colors

    Graph plain = star;
    plain.arc_colors.reset();
    REQUIRE(wlp::wl1(plain).classes == 2);
}

TEST_CASE("directed arcs shape 2-WL colors") {
    Graph dir;
    dir.directed = true;
    dir.n = 3;
    dir.edges = {{0, 1}, {1, 2}, {2, 0}};
    auto pc = wlp::wl2(dir);
    // Forward arcs and backward non-arcs fall into distinct classes.
    REQUIRE(pc.at(0, 1) != pc.at(1, 0));
    REQUIRE(pc.classes == 3);
}

TEST_CASE("frozen: individualizing a cube vertex yields orbit sizes 1,3,3,1") {
    Graph g = cube();
    auto pc = wlp::wl2(g);
    auto vc = wlp::wl1_pair(g, pc, {0});
    std::map<int, int> sizes;
    for (int c : vc.color) ++sizes[c];
    std::vector<int> sorted_sizes;
    for (auto& [c, s] : sizes) sorted_sizes.push_back(s);
    std::sort(sorted_sizes.begin(), sorted_sizes.end());
    REQUIRE(sorted_sizes == std::vector<int>{1, 1, 3, 3});

    // matches the brute-force stabilizer orbits
    auto orbits = oracle::stabilizer_orbits(oracle::cube_graph(), {0});
    std::vector<std::vector<int>> classes_of;
    {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < g.n; ++v) by_color[vc.color[v]].push_back(v);
        for (auto& [c, vs] : by_color) classes_of.push_back(vs);
    }
    auto key = [](std::vector<std::vector<int>> p) {
        for (auto& x : p) std::sort(x.begin(), x.end());
        std::sort(p.begin(), p.end());
        return p;
    };
    REQUIRE(key(classes_of) == key(orbits));

    auto d = wlp::disc(g, {0});
    REQUIRE(d == std::vector<int>{0, 6});  // the vertex and its antipode
}

TEST_CASE("individualized vertices are pairwise split and ordered") {
    Graph g = cycle(6);
    auto pc = wlp::wl2(g);
    auto vc = wlp::wl1_pair(g, pc, {2, 4});
    REQUIRE(vc.color[2] != vc.color[4]);
    auto swapped = wlp::wl1_pair(g, pc, {4, 2});
    REQUIRE(swapped.color[4] == vc.color[2]);
}

TEST_CASE("find_fixing_vertex returns the lowest index or -1") {
    Graph p3;
    p3.n = 3;
    p3.edges = {{0, 1}, {1, 2}};
    REQUIRE(wlp::find_fixing_vertex(p3) == 0);
    REQUIRE(wlp::find_fixing_vertex(cycle(5)) == -1);
    REQUIRE(wlp::find_fixing_vertex(cube()) == -1);
}

TEST_CASE("frozen: C6 versus C3+C3") {
    Graph c6 = cycle(6);
    auto [two_c3, off] = wlp::disjoint_union(cycle(3), cycle(3));
    REQUIRE_FALSE(wlp::distinguishes(c6, two_c3, 1));
    REQUIRE(wlp::distinguishes(c6, two_c3, 2));
    REQUIRE_FALSE(wlp::distinguishes(cube(), cube(), 1));
    REQUIRE_FALSE(wlp::distinguishes(cube(), cube(), 2));
}

TEST_CASE("wl2 canonical ids transport along relabelings") {
    Graph g = cube();
    std::vector<int> perm = {5, 2, 7, 0, 4, 6, 1, 3};
    Graph h;
    h.n = 8;
    for (auto [u, v] : g.edges) h.edges.push_back({perm[u], perm[v]});
    auto pg = wlp::wl2(g), ph = wlp::wl2(h);
    REQUIRE(pg.classes == ph.classes);
    for (int v = 0; v < 8; ++v)
        for (int w = 0; w < 8; ++w) REQUIRE(pg.at(v, w) == ph.at(perm[v], perm[w]));
}

TEST_CASE("is_k_stable accepts wl2 and rejects coarser colorings") {
    for (const Graph& g : {cycle(5), cube(), complete(4)}) {
        REQUIRE(wlp::is_k_stable(g, wlp::wl2(g)));
    }
    Graph p3;
    p3.n = 3;
    p3.edges = {{0, 1}, {1, 2}};
    wlp::PairColoring flat;
    flat.n = 3;
    flat.classes = 1;
    flat.color.assign(9, 0);
    REQUIRE_FALSE(wlp::is_k_stable(p3, flat));
}

TEST_CASE("coloring dumps carry canonical ids") {
    auto vc = wlp::wl1(cycle(4));
    auto vj = wlp::vertex_coloring_to_json(vc);
    REQUIRE(vj["kind"] == "vertex");
    REQUIRE(vj["colors"].size() == 4);

    auto pc = wlp::wl2(cycle(4));
    auto pj = wlp::pair_coloring_to_json(pc);
    REQUIRE(pj["kind"] == "pair");
    REQUIRE(pj["rounds"].get<int>() >= 0);
    REQUIRE(pj["colors"].size() == 16);
    std::string once = pj.dump();
    REQUIRE(wlp::pair_coloring_to_json(wlp::wl2(cycle(4))).dump() == once);
}
