#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include <wlplanar/catalog.hpp>
#include <wlplanar/structure.hpp>

#include "oracle.hpp"

namespace {

using wlp::Family;
using wlp::cat;

wlp::Graph make(int n, std::vector<wlp::Arc> edges, bool directed = false) {
    wlp::Graph g;
    g.n = n;
    g.directed = directed;
    g.edges = std::move(edges);
    return g;
}

oracle::OGraph to_oracle(const wlp::Graph& g) {
    oracle::OGraph og;
    og.n = g.n;
    og.directed = g.directed;
    og.edges = g.edges;
    return og;
}

std::set<wlp::Arc> edge_set(const wlp::Graph& g) {
    std::set<wlp::Arc> s;
    for (auto [u, v] : g.edges) s.insert(g.directed ? wlp::Arc{u, v} : wlp::norm_edge(u, v));
    return s;
}

wlp::Graph relabel(const wlp::Graph& g, std::mt19937& rng) {
    std::vector<int> pi(g.n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    wlp::Graph h;
    h.n = g.n;
    h.directed = g.directed;
    for (auto [u, v] : g.edges) h.edges.push_back({pi[u], pi[v]});
    return h;
}

// Does `map` send g isomorphically onto h?
bool checks_out(const wlp::Graph& g, const wlp::Graph& h, const std::vector<int>& map) {
    if ((int)map.size() != g.n || g.n != h.n) return false;
    std::set<int> image(map.begin(), map.end());
    if ((int)image.size() != g.n) return false;
    std::set<wlp::Arc> hs = edge_set(h), gs;
    for (auto [u, v] : g.edges)
        gs.insert(g.directed ? wlp::Arc{map[u], map[v]} : wlp::norm_edge(map[u], map[v]));
    return gs == hs;
}

std::vector<int> degree_histogram(const wlp::Graph& g) {
    auto nb = wlp::neighbors(g);
    std::vector<int> d;
    for (auto& x : nb) d.push_back((int)x.size());
    std::sort(d.begin(), d.end());
    return d;
}

bool regular(const wlp::Graph& g, int d) {
    auto h = degree_histogram(g);
    return !h.empty() && h.front() == d && h.back() == d;
}

}  // namespace

TEST_CASE("generate: vertex and edge counts match the definitions") {
    struct Row {
        wlp::CatalogId id;
        int n, m;
    };
    std::vector<Row> rows = {
        {cat(Family::Icosidodecahedron), 30, 60},
        {cat(Family::CmStar, 4), 16, 20},
        {cat(Family::K2hStar, 3), 14, 18},
        {cat(Family::Bipyramid, 3), 5, 9},
        {cat(Family::Tetrahedron), 4, 6},
        {cat(Family::Cube), 8, 12},
        {cat(Family::Octahedron), 6, 12},
        {cat(Family::Dodecahedron), 20, 30},
        {cat(Family::Icosahedron), 12, 30},
        {cat(Family::Cuboctahedron), 12, 24},
        {cat(Family::RhombicDodecahedron), 14, 24},
        {cat(Family::RhombicTriacontahedron), 32, 60},
        {cat(Family::Rhombicuboctahedron), 24, 48},
        {cat(Family::Rhombicosidodecahedron), 60, 120},
        {cat(Family::Prism, 5), 10, 15},
        {cat(Family::Antiprism, 4), 8, 16},
        {cat(Family::Complete, 5), 5, 10},
        {cat(Family::CompleteBipartite, 2, 5), 7, 10},
        {cat(Family::Cycle, 7), 7, 7},
        {cat(Family::Star, 6), 7, 6},
        {cat(Family::SSubdivision, cat(Family::Complete, 2), 3), 5, 6},
        {cat(Family::SSubdivision, cat(Family::Cycle, 5), 2), 15, 20},
        {cat(Family::C4Subdivision, cat(Family::Tetrahedron)), 28, 36},
        {cat(Family::CmStar, 2), 8, 10},
        {cat(Family::K2hStar, 5), 22, 30},
    };
    for (auto& r : rows) {
        INFO(wlp::to_string(r.id));
        wlp::Graph g = wlp::generate(r.id);
        CHECK(g.n == r.n);
        CHECK((int)g.edges.size() == r.m);
        wlp::validate(g);
    }
}

TEST_CASE("generate: truncated and chamfered solids are cubic with known counts") {
    struct Row {
        Family base;
        int tn, tm;      // truncated counts (always cubic)
        int cn, cm;      // chamfered counts
        int keep, kdeg;  // chamfering keeps the base's vertices at their degree
    };
    // Truncation turns an n-vertex m-edge solid into a 2m-vertex 3m-edge one;
    // chamfering replaces every edge by a hexagon and leaves the original
    // vertices in place, so only the new vertices are forced to degree 3.
    std::vector<Row> rows = {
        {Family::Tetrahedron, 12, 18, 16, 24, 4, 3},
        {Family::Cube, 24, 36, 32, 48, 8, 3},
        {Family::Octahedron, 24, 36, 30, 48, 6, 4},
        {Family::Dodecahedron, 60, 90, 80, 120, 20, 3},
        {Family::Icosahedron, 60, 90, 72, 120, 12, 5},
    };
    for (auto& r : rows) {
        wlp::Graph t = wlp::generate(cat(Family::Truncated, cat(r.base)));
        INFO("truncated " << wlp::family_name(r.base));
        CHECK(t.n == r.tn);
        CHECK((int)t.edges.size() == r.tm);
        CHECK(regular(t, 3));
        wlp::Graph c = wlp::generate(cat(Family::Chamfered, cat(r.base)));
        INFO("chamfered " << wlp::family_name(r.base));
        CHECK(c.n == r.cn);
        CHECK((int)c.edges.size() == r.cm);
        std::vector<int> want(c.n - r.keep, 3);
        want.insert(want.end(), r.keep, r.kdeg);
        std::sort(want.begin(), want.end());
        CHECK(degree_histogram(c) == want);
    }
    wlp::Graph tc = wlp::generate(cat(Family::Truncated, cat(Family::Cuboctahedron)));
    CHECK(tc.n == 48);
    CHECK((int)tc.edges.size() == 72);
    CHECK(regular(tc, 3));
    wlp::Graph ti = wlp::generate(cat(Family::Truncated, cat(Family::Icosidodecahedron)));
    CHECK(ti.n == 120);
    CHECK((int)ti.edges.size() == 180);
    CHECK(regular(ti, 3));
}

TEST_CASE("generate: polyhedral outputs are 3-connected planar with coherent faces") {
    std::vector<wlp::CatalogId> ids = {
        cat(Family::Complete, 4),
        cat(Family::Tetrahedron),
        cat(Family::Cube),
        cat(Family::Octahedron),
        cat(Family::Dodecahedron),
        cat(Family::Icosahedron),
        cat(Family::Cuboctahedron),
        cat(Family::Icosidodecahedron),
        cat(Family::RhombicDodecahedron),
        cat(Family::RhombicTriacontahedron),
        cat(Family::Rhombicuboctahedron),
        cat(Family::Rhombicosidodecahedron),
        cat(Family::Prism, 3),
        cat(Family::Prism, 6),
        cat(Family::Antiprism, 3),
        cat(Family::Antiprism, 5),
        cat(Family::Bipyramid, 3),
        cat(Family::Bipyramid, 6),
        cat(Family::Truncated, cat(Family::Tetrahedron)),
        cat(Family::Truncated, cat(Family::Cube)),
        cat(Family::Truncated, cat(Family::Octahedron)),
        cat(Family::Truncated, cat(Family::Dodecahedron)),
        cat(Family::Truncated, cat(Family::Icosahedron)),
        cat(Family::Truncated, cat(Family::Cuboctahedron)),
        cat(Family::Truncated, cat(Family::Icosidodecahedron)),
        cat(Family::Chamfered, cat(Family::Tetrahedron)),
        cat(Family::Chamfered, cat(Family::Cube)),
        cat(Family::Chamfered, cat(Family::Octahedron)),
        cat(Family::Chamfered, cat(Family::Dodecahedron)),
        cat(Family::Chamfered, cat(Family::Icosahedron)),
    };
    for (auto& id : ids) {
        INFO(wlp::to_string(id));
        wlp::Graph g = wlp::generate(id);
        wlp::validate_faces_map(g);
        CHECK(wlp::is_planar(g));
        CHECK(wlp::is_k_connected(g, 3));
    }
}

TEST_CASE("generate: non-polyhedral face lists still form combinatorial maps") {
    std::vector<wlp::CatalogId> ids = {
        cat(Family::Complete, 2),    cat(Family::Complete, 3),
        cat(Family::CompleteBipartite, 2, 2), cat(Family::CompleteBipartite, 2, 5),
        cat(Family::Cycle, 3),       cat(Family::Cycle, 8),
        cat(Family::Star, 1),        cat(Family::Star, 5),
    };
    for (auto& id : ids) {
        INFO(wlp::to_string(id));
        wlp::validate_faces_map(wlp::generate(id));
    }
    // K_{3,3} and the starless point have no drawing to offer.
    CHECK_FALSE(wlp::generate(cat(Family::CompleteBipartite, 3, 3)).faces.has_value());
    CHECK_FALSE(wlp::generate(cat(Family::Star, 0)).faces.has_value());
}

TEST_CASE("generate: the three 4-regular members of the edge-transitive list") {
    wlp::Graph octa = wlp::generate(cat(Family::Octahedron));
    CHECK(octa.n == 6);
    CHECK(regular(octa, 4));
    wlp::Graph cubocta = wlp::generate(cat(Family::Cuboctahedron));
    CHECK(cubocta.n == 12);
    CHECK(regular(cubocta, 4));
    wlp::Graph icosidodeca = wlp::generate(cat(Family::Icosidodecahedron));
    CHECK(icosidodeca.n == 30);
    CHECK(regular(icosidodeca, 4));
}

TEST_CASE("edge-transitivity of the small catalog solids, by brute force") {
    // The full automorphism group must put all edges in one orbit. Kept to
    // n <= 14 so exhaustive enumeration stays honest.
    std::vector<wlp::CatalogId> ids = {
        cat(Family::Tetrahedron),    cat(Family::Cube),
        cat(Family::Octahedron),     cat(Family::Icosahedron),
        cat(Family::Cuboctahedron),  cat(Family::RhombicDodecahedron),
    };
    for (auto& id : ids) {
        INFO(wlp::to_string(id));
        wlp::Graph g = wlp::generate(id);
        auto autos = oracle::automorphisms(to_oracle(g));
        REQUIRE(!autos.empty());
        std::set<wlp::Arc> orbit = {wlp::norm_edge(g.edges[0].first, g.edges[0].second)};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto& a : autos)
                for (auto e : orbit) {
                    wlp::Arc img = wlp::norm_edge(a[e.first], a[e.second]);
                    if (orbit.insert(img).second) grew = true;
                }
        }
        CHECK(orbit == edge_set(g));
    }
}

TEST_CASE("directed cube: orientation by bipartition class, arc-transitive") {
    wlp::Graph d = wlp::directed_cube();
    REQUIRE(d.directed);
    REQUIRE(d.n == 8);
    REQUIRE(d.edges.size() == 12);
    // Tails all on vertex 0's side of the bipartition, heads all opposite.
    std::set<int> tails, heads;
    for (auto [u, v] : d.edges) {
        tails.insert(u);
        heads.insert(v);
    }
    CHECK(tails.size() == 4);
    CHECK(heads.size() == 4);
    CHECK(tails.count(0) == 1);
    for (int t : tails) CHECK(heads.count(t) == 0);

    auto autos = oracle::automorphisms(to_oracle(d));
    CHECK(autos.size() == 24);  // rotations of the cube fix the orientation
    std::set<wlp::Arc> orbit = {d.edges[0]};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& a : autos)
            for (auto e : orbit)
                if (orbit.insert({a[e.first], a[e.second]}).second) grew = true;
    }
    CHECK(orbit == edge_set(d));
}

TEST_CASE("snub solids: alternation fixtures have the textbook parameters") {
    wlp::Graph sc = wlp::snub_cube();
    CHECK(sc.n == 24);
    CHECK(sc.edges.size() == 60);
    CHECK(regular(sc, 5));
    CHECK(wlp::is_planar(sc));
    CHECK(wlp::is_k_connected(sc, 3));
    wlp::Graph sd = wlp::snub_dodecahedron();
    CHECK(sd.n == 60);
    CHECK(sd.edges.size() == 150);
    CHECK(regular(sd, 5));
    CHECK(wlp::is_planar(sd));
    CHECK(wlp::is_k_connected(sd, 3));
}

TEST_CASE("isomorphic: prisms, cycles, relabelings") {
    wlp::Graph cube = wlp::generate(cat(Family::Cube));
    wlp::Graph prism4 = wlp::generate(cat(Family::Prism, 4));
    auto hit = wlp::isomorphic(prism4, cube);
    REQUIRE(hit.has_value());
    CHECK(checks_out(prism4, cube, *hit));

    wlp::Graph c6 = wlp::generate(cat(Family::Cycle, 6));
    wlp::Graph two_c3 = make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(wlp::isomorphic(c6, two_c3).has_value());
    CHECK_FALSE(wlp::isomorphic(cube, wlp::generate(cat(Family::Cycle, 8))).has_value());

    std::mt19937 rng(20240817);
    for (auto& id : {cat(Family::Cube), cat(Family::Icosahedron), cat(Family::CmStar, 3),
                     cat(Family::Truncated, cat(Family::Tetrahedron))}) {
        INFO(wlp::to_string(id));
        wlp::Graph g = wlp::generate(id);
        wlp::Graph h = relabel(g, rng);
        auto m = wlp::isomorphic(g, h);
        REQUIRE(m.has_value());
        CHECK(checks_out(g, h, *m));
    }
}

TEST_CASE("isomorphic: direction and arc colors are respected") {
    std::mt19937 rng(7);
    wlp::Graph d = wlp::directed_cube();
    wlp::Graph dr = relabel(d, rng);
    auto m = wlp::isomorphic(d, dr);
    REQUIRE(m.has_value());
    CHECK(checks_out(d, dr, *m));

    // Reversing one arc kills every candidate map.
    wlp::Graph flip = d;
    std::swap(flip.edges[0].first, flip.edges[0].second);
    CHECK_FALSE(wlp::isomorphic(d, flip).has_value());

    // Directed vs undirected never match.
    wlp::Graph u = wlp::generate(cat(Family::Cube));
    CHECK_FALSE(wlp::isomorphic(d, u).has_value());

    // A 4-cycle with one marked edge matches its rotation, not the plain one.
    auto colored_c4 = [](int special) {
        wlp::Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        std::map<wlp::Arc, int> col;
        for (int v = 0; v < 4; ++v) col[{v, v}] = 0;
        for (int j = 0; j < 4; ++j) {
            auto [a, b] = g.edges[j];
            int c = j == special ? 2 : 1;
            col[{a, b}] = c;
            col[{b, a}] = c;
        }
        g.arc_colors = std::move(col);
        return g;
    };
    wlp::Graph one = colored_c4(0), rot = colored_c4(2), plain = colored_c4(-1);
    auto cm = wlp::isomorphic(one, rot);
    REQUIRE(cm.has_value());
    // The marked edge {0,1} must land on the marked edge {2,3}.
    std::set<int> img = {(*cm)[0], (*cm)[1]};
    CHECK(img == std::set<int>{2, 3});
    CHECK_FALSE(wlp::isomorphic(one, plain).has_value());
}

TEST_CASE("normalize_parallel_subdivision: worked examples") {
    wlp::Graph k23 = wlp::generate(cat(Family::CompleteBipartite, 2, 3));
    auto pf = wlp::normalize_parallel_subdivision(k23);
    CHECK(pf.base.n == 2);
    REQUIRE(pf.base.edges.size() == 1);
    CHECK(wlp::norm_edge(pf.base.edges[0].first, pf.base.edges[0].second) == wlp::Arc{0, 1});
    CHECK(pf.f == std::map<wlp::Arc, int>{{{0, 1}, 3}});

    // One midpoint on a single edge: base K2 with f = 1.
    auto p3 = wlp::normalize_parallel_subdivision(make(3, {{0, 1}, {1, 2}}));
    CHECK(p3.base.n == 2);
    CHECK(p3.f == std::map<wlp::Arc, int>{{{0, 1}, 1}});

    // No degree-2 vertices at all: the graph is its own base.
    wlp::Graph tt = wlp::generate(cat(Family::Truncated, cat(Family::Tetrahedron)));
    auto own = wlp::normalize_parallel_subdivision(tt);
    CHECK(own.base.n == tt.n);
    CHECK(edge_set(own.base) == edge_set(tt));
    for (auto& [e, cnt] : own.f) CHECK(cnt == 0);
    CHECK(own.f.size() == tt.edges.size());

    // 2-regular graphs and longer chains are ambiguous, so they are refused.
    REQUIRE_THROWS(wlp::normalize_parallel_subdivision(wlp::generate(cat(Family::Cycle, 6))));
    REQUIRE_THROWS(wlp::normalize_parallel_subdivision(make(4, {{0, 1}, {1, 2}, {2, 3}})));
    // A midpoint next to a surviving direct edge would need a multi-edge base.
    REQUIRE_THROWS(wlp::normalize_parallel_subdivision(
        make(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}})));
    REQUIRE_THROWS(wlp::normalize_parallel_subdivision(wlp::directed_cube()));
}

TEST_CASE("normalize_parallel_subdivision inverts parallel_subdivide") {
    std::mt19937 rng(991);
    std::vector<wlp::CatalogId> bases = {cat(Family::Complete, 4), cat(Family::Cube),
                                         cat(Family::Octahedron), cat(Family::Icosahedron)};
    for (auto& id : bases) {
        wlp::Graph b = wlp::generate(id);
        b.faces.reset();
        for (int trial = 0; trial < 3; ++trial) {
            std::map<wlp::Arc, int> f;
            for (auto [u, v] : b.edges) f[wlp::norm_edge(u, v)] = (int)(rng() % 4);
            wlp::Graph g = wlp::parallel_subdivide(b, f);
            auto pf = wlp::normalize_parallel_subdivision(g);
            INFO(wlp::to_string(id) << " trial " << trial);
            CHECK(pf.base.n == b.n);
            CHECK(edge_set(pf.base) == edge_set(b));
            CHECK(pf.f == f);
        }
    }
}

TEST_CASE("match_catalog: every family round-trips through its own pattern") {
    struct Row {
        wlp::CatalogId id;
        wlp::CatalogId pattern;
    };
    auto wild = [](Family f) { return cat(f); };
    std::vector<Row> rows;
    for (int n = 2; n <= 5; ++n) rows.push_back({cat(Family::Complete, n), wild(Family::Complete)});
    for (int b = 2; b <= 5; ++b)
        rows.push_back({cat(Family::CompleteBipartite, 2, b), wild(Family::CompleteBipartite)});
    rows.push_back({cat(Family::CompleteBipartite, 3, 3), wild(Family::CompleteBipartite)});
    for (int l = 3; l <= 8; ++l) rows.push_back({cat(Family::Cycle, l), wild(Family::Cycle)});
    for (int h = 0; h <= 6; ++h) rows.push_back({cat(Family::Star, h), wild(Family::Star)});
    for (Family f : {Family::Tetrahedron, Family::Cube, Family::Octahedron, Family::Dodecahedron,
                     Family::Icosahedron, Family::Cuboctahedron, Family::Icosidodecahedron,
                     Family::RhombicDodecahedron, Family::RhombicTriacontahedron,
                     Family::Rhombicuboctahedron, Family::Rhombicosidodecahedron})
        rows.push_back({cat(f), cat(f)});
    for (int m = 3; m <= 6; ++m) {
        rows.push_back({cat(Family::Prism, m), wild(Family::Prism)});
        rows.push_back({cat(Family::Antiprism, m), wild(Family::Antiprism)});
        rows.push_back({cat(Family::Bipyramid, m), wild(Family::Bipyramid)});
    }
    for (Family base : {Family::Tetrahedron, Family::Cube, Family::Octahedron,
                        Family::Dodecahedron, Family::Icosahedron}) {
        rows.push_back({cat(Family::Truncated, cat(base)), cat(Family::Truncated, cat(base))});
        rows.push_back({cat(Family::Chamfered, cat(base)), cat(Family::Chamfered, cat(base))});
    }
    for (int s = 1; s <= 3; ++s)
        rows.push_back({cat(Family::SSubdivision, cat(Family::Complete, 2), s),
                        cat(Family::SSubdivision, cat(Family::Complete, 2), -1)});
    rows.push_back({cat(Family::SSubdivision, cat(Family::Cycle, 5), 2),
                    cat(Family::SSubdivision, cat(Family::Cycle, -1), -1)});
    rows.push_back({cat(Family::SSubdivision, cat(Family::Cycle, 4), 3),
                    cat(Family::SSubdivision, cat(Family::Cycle, -1), -1)});
    rows.push_back({cat(Family::SSubdivision, cat(Family::Tetrahedron), 2),
                    cat(Family::SSubdivision, cat(Family::Tetrahedron), -1)});
    rows.push_back({cat(Family::SSubdivision, cat(Family::Cube), 1),
                    cat(Family::SSubdivision, cat(Family::Cube), -1)});
    rows.push_back({cat(Family::SSubdivision, cat(Family::Icosahedron), 1),
                    cat(Family::SSubdivision, cat(Family::Icosahedron), -1)});
    rows.push_back({cat(Family::C4Subdivision, cat(Family::Tetrahedron)),
                    cat(Family::C4Subdivision, cat(Family::Tetrahedron))});
    rows.push_back({cat(Family::C4Subdivision, cat(Family::Cube)),
                    cat(Family::C4Subdivision, cat(Family::Cube))});
    for (int m = 2; m <= 5; ++m) rows.push_back({cat(Family::CmStar, m), wild(Family::CmStar)});
    for (int h = 3; h <= 5; ++h) rows.push_back({cat(Family::K2hStar, h), wild(Family::K2hStar)});

    std::mt19937 rng(5150);
    for (auto& r : rows) {
        INFO(wlp::to_string(r.id));
        wlp::Graph g = relabel(wlp::generate(r.id), rng);
        auto hit = wlp::match_catalog(g, {r.pattern});
        REQUIRE(hit.has_value());
        CHECK(*hit == r.id);
        CHECK(wlp::isomorphic(wlp::generate(*hit), g).has_value());
    }
}

TEST_CASE("match_catalog: parallel subdivisions normalize before matching") {
    wlp::Graph cube = wlp::generate(cat(Family::Cube));
    cube.faces.reset();
    std::map<wlp::Arc, int> f;
    int k = 0;
    for (auto [u, v] : cube.edges) f[wlp::norm_edge(u, v)] = k++ % 4;
    wlp::Graph g = wlp::parallel_subdivide(cube, f);
    auto hit = wlp::match_catalog(g, {cat(Family::ParallelSubdivision, cat(Family::Cube))});
    REQUIRE(hit.has_value());
    CHECK(*hit == cat(Family::ParallelSubdivision, cat(Family::Cube)));

    // An identity subdivision (no midpoints) still counts.
    auto plain = wlp::match_catalog(cube, {cat(Family::ParallelSubdivision, cat(Family::Cube))});
    REQUIRE(plain.has_value());

    // A 2-regular input cannot be normalized, so the pattern just misses.
    CHECK_FALSE(wlp::match_catalog(wlp::generate(cat(Family::Cycle, 6)),
                                   {cat(Family::ParallelSubdivision, cat(Family::Cycle, 3))})
                    .has_value());
}

TEST_CASE("match_catalog: theorem-shaped pattern lists") {
    // The edge-transitive list: the rhombic dodecahedron is found by name.
    std::vector<wlp::CatalogId> thm31 = {
        cat(Family::Tetrahedron),    cat(Family::Cube),
        cat(Family::Dodecahedron),   cat(Family::Icosahedron),
        cat(Family::Octahedron),     cat(Family::Cuboctahedron),
        cat(Family::Icosidodecahedron), cat(Family::RhombicDodecahedron),
        cat(Family::RhombicTriacontahedron),
    };
    std::mt19937 rng(31);
    wlp::Graph rd = relabel(wlp::generate(cat(Family::RhombicDodecahedron)), rng);
    auto hit = wlp::match_catalog(rd, thm31);
    REQUIRE(hit.has_value());
    CHECK(*hit == cat(Family::RhombicDodecahedron));

    // The component-classification list finds a subdivided cycle.
    std::vector<wlp::CatalogId> thm48 = {
        cat(Family::CompleteBipartite, 2, -1),
        cat(Family::SSubdivision, cat(Family::Cycle, -1), 2),
        cat(Family::RhombicDodecahedron),
        cat(Family::RhombicTriacontahedron),
    };
    wlp::Graph sc5 = relabel(wlp::s_subdivide(wlp::generate(cat(Family::Cycle, 5)), 2), rng);
    auto sub = wlp::match_catalog(sc5, thm48);
    REQUIRE(sub.has_value());
    CHECK(*sub == cat(Family::SSubdivision, cat(Family::Cycle, 5), 2));

    // K_{2,4} hits the first case of the same list.
    wlp::Graph k24 = relabel(wlp::generate(cat(Family::CompleteBipartite, 2, 4)), rng);
    auto first = wlp::match_catalog(k24, thm48);
    REQUIRE(first.has_value());
    CHECK(*first == cat(Family::CompleteBipartite, 2, 4));

    // Nothing in the catalog is a tree.
    wlp::Graph tree = make(
        10, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}, {5, 7}, {6, 8}, {8, 9}});
    std::vector<wlp::CatalogId> broad = thm31;
    for (Family f : {Family::Complete, Family::CompleteBipartite, Family::Cycle, Family::Star,
                     Family::Prism, Family::Antiprism, Family::Bipyramid, Family::CmStar,
                     Family::K2hStar})
        broad.push_back(cat(f));
    broad.push_back(cat(Family::SSubdivision, cat(Family::Cycle, -1), -1));
    broad.push_back(cat(Family::SSubdivision, cat(Family::Complete, 2), -1));
    CHECK_FALSE(wlp::match_catalog(tree, broad).has_value());
}

TEST_CASE("match_catalog: the pattern order resolves overlaps") {
    wlp::Graph cube = wlp::generate(cat(Family::Cube));
    auto as_prism = wlp::match_catalog(cube, {cat(Family::Prism), cat(Family::Cube)});
    REQUIRE(as_prism.has_value());
    CHECK(*as_prism == cat(Family::Prism, 4));
    auto as_cube = wlp::match_catalog(cube, {cat(Family::Cube), cat(Family::Prism)});
    REQUIRE(as_cube.has_value());
    CHECK(*as_cube == cat(Family::Cube));

    wlp::Graph octa = wlp::generate(cat(Family::Octahedron));
    auto as_bipyramid =
        wlp::match_catalog(octa, {cat(Family::Bipyramid), cat(Family::Octahedron)});
    REQUIRE(as_bipyramid.has_value());
    CHECK(*as_bipyramid == cat(Family::Bipyramid, 4));
    auto as_antiprism =
        wlp::match_catalog(octa, {cat(Family::Antiprism), cat(Family::Bipyramid)});
    REQUIRE(as_antiprism.has_value());
    CHECK(*as_antiprism == cat(Family::Antiprism, 3));
}

TEST_CASE("catalog ids: string forms round-trip") {
    std::vector<std::string> strings = {
        "complete:4",
        "complete-bipartite:2,3",
        "cycle:5",
        "star:6",
        "tetrahedron",
        "rhombic-triacontahedron",
        "rhombicosidodecahedron",
        "prism:6",
        "antiprism:4",
        "bipyramid:3",
        "truncated:cube",
        "chamfered:dodecahedron",
        "s-subdivision:cycle:5,2",
        "s-subdivision:complete:2,3",
        "s-subdivision:truncated:cube,2",
        "c4-subdivision:tetrahedron",
        "c-star:4",
        "k2h-star:5",
        "parallel-subdivision:cube",
        "truncated:truncated:tetrahedron",
    };
    for (auto& s : strings) {
        INFO(s);
        wlp::CatalogId id = wlp::from_string(s);
        CHECK(wlp::to_string(id) == s);
        CHECK(wlp::from_string(wlp::to_string(id)) == id);
    }
    CHECK(wlp::from_string("truncated:cube") == cat(Family::Truncated, cat(Family::Cube)));
    CHECK(wlp::from_string("s-subdivision:cycle:5,2") ==
          cat(Family::SSubdivision, cat(Family::Cycle, 5), 2));

    for (const char* bad : {"frobnicate", "cycle", "cycle:", "cycle:x", "cycle:3,4",
                            "truncated", "s-subdivision:cube", "tetrahedron:3",
                            "complete-bipartite:2", ""}) {
        INFO(bad);
        REQUIRE_THROWS(wlp::from_string(bad));
    }
}

TEST_CASE("generate: parameter errors") {
    REQUIRE_THROWS(wlp::generate(cat(Family::Complete, 0)));
    REQUIRE_THROWS(wlp::generate(cat(Family::CompleteBipartite, 0, 3)));
    REQUIRE_THROWS(wlp::generate(cat(Family::Cycle, 2)));
    REQUIRE_THROWS(wlp::generate(cat(Family::Star, -1)));
    REQUIRE_THROWS(wlp::generate(cat(Family::Prism, 2)));
    REQUIRE_THROWS(wlp::generate(cat(Family::Antiprism, 2)));
    REQUIRE_THROWS(wlp::generate(cat(Family::Bipyramid, 2)));
    REQUIRE_THROWS(wlp::generate(cat(Family::CmStar, 1)));
    REQUIRE_THROWS(wlp::generate(cat(Family::K2hStar, 2)));
    REQUIRE_THROWS(wlp::generate(cat(Family::Truncated)));
    REQUIRE_THROWS(wlp::generate(cat(Family::Chamfered, cat(Family::Prism, 5))));
    REQUIRE_THROWS(wlp::generate(cat(Family::SSubdivision, cat(Family::Cube), 0)));
    REQUIRE_THROWS(wlp::generate(cat(Family::ParallelSubdivision, cat(Family::Cube))));
}
