#pragma once
// Catalog of the named graph families from the classification: generators
// that carry face lists for the polyhedral entries, an exact isomorphism
// test with Weisfeiler-Leman pruning, the smoothing inverse of parallel
// subdivision, and a matcher that identifies a graph as a parametrized
// catalog member.

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "figures.hpp"
#include "graph.hpp"
#include "ops.hpp"
#include "wl.hpp"

namespace wlp {

enum class Family {
    Complete,
    CompleteBipartite,
    Cycle,
    Star,
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    Cuboctahedron,
    Icosidodecahedron,
    RhombicDodecahedron,
    RhombicTriacontahedron,
    Rhombicuboctahedron,
    Rhombicosidodecahedron,
    Prism,
    Antiprism,
    Bipyramid,
    Truncated,
    Chamfered,
    SSubdivision,
    C4Subdivision,
    CmStar,
    K2hStar,
    ParallelSubdivision,
};

// One catalog member: a family tag, up to two integer parameters and a base
// id for the derived families. Parameter meaning: Complete(a),
// CompleteBipartite(a, b), Cycle(a), Star(a), Prism(a), Antiprism(a),
// Bipyramid(a), CmStar(a), K2hStar(a), SSubdivision(base, a). In a matcher
// pattern, a parameter of -1 asks for inference from the input's counts.
struct CatalogId {
    Family family;
    int a = -1;
    int b = -1;
    std::shared_ptr<const CatalogId> base;
};

inline CatalogId cat(Family f) { return {f, -1, -1, nullptr}; }
inline CatalogId cat(Family f, int a) { return {f, a, -1, nullptr}; }
inline CatalogId cat(Family f, int a, int b) { return {f, a, b, nullptr}; }
inline CatalogId cat(Family f, CatalogId base) {
    return {f, -1, -1, std::make_shared<const CatalogId>(std::move(base))};
}
inline CatalogId cat(Family f, CatalogId base, int a) {
    return {f, a, -1, std::make_shared<const CatalogId>(std::move(base))};
}

inline bool operator==(const CatalogId& x, const CatalogId& y) {
    if (x.family != y.family || x.a != y.a || x.b != y.b) return false;
    if ((x.base == nullptr) != (y.base == nullptr)) return false;
    return !x.base || *x.base == *y.base;
}

inline const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> table = {
        {Family::Complete, "complete"},
        {Family::CompleteBipartite, "complete-bipartite"},
        {Family::Cycle, "cycle"},
        {Family::Star, "star"},
        {Family::Tetrahedron, "tetrahedron"},
        {Family::Cube, "cube"},
        {Family::Octahedron, "octahedron"},
        {Family::Dodecahedron, "dodecahedron"},
        {Family::Icosahedron, "icosahedron"},
        {Family::Cuboctahedron, "cuboctahedron"},
        {Family::Icosidodecahedron, "icosidodecahedron"},
        {Family::RhombicDodecahedron, "rhombic-dodecahedron"},
        {Family::RhombicTriacontahedron, "rhombic-triacontahedron"},
        {Family::Rhombicuboctahedron, "rhombicuboctahedron"},
        {Family::Rhombicosidodecahedron, "rhombicosidodecahedron"},
        {Family::Prism, "prism"},
        {Family::Antiprism, "antiprism"},
        {Family::Bipyramid, "bipyramid"},
        {Family::Truncated, "truncated"},
        {Family::Chamfered, "chamfered"},
        {Family::SSubdivision, "s-subdivision"},
        {Family::C4Subdivision, "c4-subdivision"},
        {Family::CmStar, "c-star"},
        {Family::K2hStar, "k2h-star"},
        {Family::ParallelSubdivision, "parallel-subdivision"},
    };
    return table;
}

inline std::string family_name(Family f) {
    for (auto& [fam, name] : family_names())
        if (fam == f) return name;
    check(false, "family_name: unknown family");
    return {};
}

// Arity groups used by the string forms and the matcher.
inline bool family_has_base(Family f) {
    return f == Family::Truncated || f == Family::Chamfered ||
           f == Family::SSubdivision || f == Family::C4Subdivision ||
           f == Family::ParallelSubdivision;
}
inline int family_int_params(Family f) {
    switch (f) {
        case Family::CompleteBipartite:
            return 2;
        case Family::Complete:
        case Family::Cycle:
        case Family::Star:
        case Family::Prism:
        case Family::Antiprism:
        case Family::Bipyramid:
        case Family::CmStar:
        case Family::K2hStar:
        case Family::SSubdivision:
            return 1;
        default:
            return 0;
    }
}

inline std::string to_string(const CatalogId& id) {
    std::string name = family_name(id.family);
    if (family_has_base(id.family)) {
        check(id.base != nullptr, "to_string: derived family without a base");
        name += ":" + to_string(*id.base);
        if (id.family == Family::SSubdivision) {
            check(id.a >= 1, "to_string: subdivision parameter missing");
            name += "," + std::to_string(id.a);
        }
        return name;
    }
    int ints = family_int_params(id.family);
    if (ints >= 1) {
        check(id.a >= 0, "to_string: parameter missing");
        name += ":" + std::to_string(id.a);
    }
    if (ints >= 2) {
        check(id.b >= 0, "to_string: parameter missing");
        name += "," + std::to_string(id.b);
    }
    return name;
}

namespace detail {

inline int parse_int(const std::string& s) {
    check(!s.empty(), "catalog id: empty number");
    for (char c : s) check(c >= '0' && c <= '9', "catalog id: bad number '" + s + "'");
    return std::stoi(s);
}

}  // namespace detail

inline CatalogId from_string(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
    std::optional<Family> fam;
    for (auto& [f, name] : family_names())
        if (name == head) fam = f;
    check(fam.has_value(), "catalog id: unknown family '" + head + "'");
    if (family_has_base(*fam)) {
        check(!rest.empty(), "catalog id: '" + head + "' needs a base");
        if (*fam == Family::SSubdivision) {
            auto comma = rest.rfind(',');
            check(comma != std::string::npos,
                  "catalog id: s-subdivision needs a base and a count");
            return cat(*fam, from_string(rest.substr(0, comma)),
                       detail::parse_int(rest.substr(comma + 1)));
        }
        return cat(*fam, from_string(rest));
    }
    int ints = family_int_params(*fam);
    if (ints == 0) {
        check(rest.empty(), "catalog id: '" + head + "' takes no parameters");
        return cat(*fam);
    }
    check(!rest.empty(), "catalog id: '" + head + "' needs parameters");
    if (ints == 1) return cat(*fam, detail::parse_int(rest));
    auto comma = rest.find(',');
    check(comma != std::string::npos, "catalog id: '" + head + "' needs two parameters");
    return cat(*fam, detail::parse_int(rest.substr(0, comma)),
               detail::parse_int(rest.substr(comma + 1)));
}

namespace detail {

inline Graph fixed_solid(const std::vector<Arc>& edges,
                         const std::vector<std::vector<int>>& faces) {
    Graph g;
    g.n = 0;
    for (auto [u, v] : edges) g.n = std::max({g.n, u + 1, v + 1});
    g.edges = edges;
    g.faces = faces;
    return g;
}

inline std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> vs(g.n);
    for (int v = 0; v < g.n; ++v) vs[v] = v;
    return vs;
}

// Bipartition side containing vertex 0 (connected bipartite input required).
inline std::vector<int> bipartition_class_of0(const Graph& g) {
    auto nb = neighbors(g);
    std::vector<int> side(g.n, -1);
    std::vector<int> queue{0};
    side[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : nb[queue[i]]) {
            if (side[w] == -1) {
                side[w] = 1 - side[queue[i]];
                queue.push_back(w);
            }
            check(side[w] != side[queue[i]], "bipartition: graph has an odd cycle");
        }
    check((int)queue.size() == g.n, "bipartition: graph must be connected");
    std::vector<int> cls;
    for (int v = 0; v < g.n; ++v)
        if (side[v] == 0) cls.push_back(v);
    return cls;
}

inline std::vector<int> degree_class(const Graph& g, int d) {
    auto nb = neighbors(g);
    std::vector<int> cls;
    for (int v = 0; v < g.n; ++v)
        if ((int)nb[v].size() == d) cls.push_back(v);
    return cls;
}

}  // namespace detail

// Build the named graph. Vertex indexing: cycles run 0..l-1 in cyclic order;
// stars put the hub at 0; complete bipartite puts the a-side first; prisms
// and antiprisms put the top cycle at 0..m-1 and the bottom at m..2m-1;
// bipyramids put the apexes at 0 and 1; C_m* and K_{2,h}* keep each
// quadrilateral contiguous, hubs first for K_{2,h}*. The fixed polyhedra
// follow their reference drawings. Truncation replaces each vertex by a
// cycle of corners in rotation order; chamfering truncates one vertex class
// of the matching rhombic solid (or, for the tetrahedron, one bipartition
// side of the cube).
inline Graph generate(const CatalogId& id) {
    using F = Family;
    Graph g;
    switch (id.family) {
        case F::Complete: {
            check(id.a >= 1, "generate: complete graph needs order at least 1");
            g.n = id.a;
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v) g.edges.push_back({u, v});
            if (g.n == 2) g.faces = {{0, 1}};
            if (g.n == 3) g.faces = {{0, 1, 2}, {2, 1, 0}};
            if (g.n == 4) g.faces = fig::kTetrahedronFaces;
            return g;
        }
        case F::CompleteBipartite: {
            check(id.a >= 1 && id.b >= 1,
                  "generate: complete bipartite graph needs sides at least 1");
            g.n = id.a + id.b;
            for (int u = 0; u < id.a; ++u)
                for (int v = 0; v < id.b; ++v) g.edges.push_back({u, id.a + v});
            if (id.a == 2 && id.b >= 2) {
                std::vector<std::vector<int>> fs;
                for (int i = 0; i < id.b; ++i)
                    fs.push_back({0, 2 + i, 1, 2 + (i + 1) % id.b});
                g.faces = std::move(fs);
            }
            return g;
        }
        case F::Cycle: {
            check(id.a >= 3, "generate: cycle needs length at least 3");
            g.n = id.a;
            for (int i = 0; i < id.a; ++i) g.edges.push_back({i, (i + 1) % id.a});
            std::vector<int> fwd, rev;
            for (int i = 0; i < id.a; ++i) fwd.push_back(i);
            for (int i = id.a - 1; i >= 0; --i) rev.push_back(i);
            g.faces = {fwd, rev};
            return g;
        }
        case F::Star: {
            check(id.a >= 0, "generate: star needs a nonnegative leaf count");
            g.n = id.a + 1;
            for (int i = 1; i <= id.a; ++i) g.edges.push_back({0, i});
            if (id.a >= 1) {
                std::vector<int> walk;
                for (int i = 1; i <= id.a; ++i) {
                    walk.push_back(0);
                    walk.push_back(i);
                }
                g.faces = {walk};
            }
            return g;
        }
        case F::Tetrahedron:
            return detail::fixed_solid(fig::kTetrahedronEdges, fig::kTetrahedronFaces);
        case F::Cube:
            return detail::fixed_solid(fig::kCubeEdges, fig::kCubeFaces);
        case F::Octahedron:
            return detail::fixed_solid(fig::kOctahedronEdges, fig::kOctahedronFaces);
        case F::Dodecahedron:
            return detail::fixed_solid(fig::kDodecahedronEdges, fig::kDodecahedronFaces);
        case F::Icosahedron:
            return detail::fixed_solid(fig::kIcosahedronEdges, fig::kIcosahedronFaces);
        case F::Cuboctahedron:
            return detail::fixed_solid(fig::kCuboctahedronEdges, fig::kCuboctahedronFaces);
        case F::Icosidodecahedron:
            return detail::fixed_solid(fig::kIcosidodecahedronEdges,
                                       fig::kIcosidodecahedronFaces);
        case F::RhombicDodecahedron:
            return detail::fixed_solid(fig::kRhombicDodecahedronEdges,
                                       fig::kRhombicDodecahedronFaces);
        case F::RhombicTriacontahedron:
            return detail::fixed_solid(fig::kRhombicTriacontahedronEdges,
                                       fig::kRhombicTriacontahedronFaces);
        case F::Rhombicuboctahedron:
            return detail::fixed_solid(fig::kRhombicuboctahedronEdges,
                                       fig::kRhombicuboctahedronFaces);
        case F::Rhombicosidodecahedron:
            return detail::fixed_solid(fig::kRhombicosidodecahedronEdges,
                                       fig::kRhombicosidodecahedronFaces);
        case F::Prism: {
            check(id.a >= 3, "generate: prism needs at least 3 sides");
            int m = id.a;
            g.n = 2 * m;
            for (int i = 0; i < m; ++i) {
                g.edges.push_back({i, (i + 1) % m});
                g.edges.push_back({m + i, m + (i + 1) % m});
                g.edges.push_back({i, m + i});
            }
            std::vector<std::vector<int>> fs;
            std::vector<int> top, bottom;
            for (int i = m - 1; i >= 0; --i) top.push_back(i);
            for (int i = 0; i < m; ++i) bottom.push_back(m + i);
            fs.push_back(top);
            fs.push_back(bottom);
            for (int i = 0; i < m; ++i)
                fs.push_back({i, (i + 1) % m, m + (i + 1) % m, m + i});
            g.faces = std::move(fs);
            return g;
        }
        case F::Antiprism: {
            check(id.a >= 3, "generate: antiprism needs at least 3 sides");
            int m = id.a;
            g.n = 2 * m;
            for (int i = 0; i < m; ++i) {
                g.edges.push_back({i, (i + 1) % m});
                g.edges.push_back({m + i, m + (i + 1) % m});
                g.edges.push_back({i, m + i});
                g.edges.push_back({(i + 1) % m, m + i});
            }
            std::vector<std::vector<int>> fs;
            std::vector<int> top, bottom;
            for (int i = 0; i < m; ++i) top.push_back(i);
            for (int i = m - 1; i >= 0; --i) bottom.push_back(m + i);
            fs.push_back(top);
            fs.push_back(bottom);
            for (int i = 0; i < m; ++i) {
                fs.push_back({i, m + i, (i + 1) % m});
                fs.push_back({m + i, m + (i + 1) % m, (i + 1) % m});
            }
            g.faces = std::move(fs);
            return g;
        }
        case F::Bipyramid: {
            check(id.a >= 3, "generate: bipyramid needs order at least 3");
            int m = id.a;
            g.n = m + 2;
            for (int i = 0; i < m; ++i) {
                g.edges.push_back({0, 2 + i});
                g.edges.push_back({1, 2 + i});
                g.edges.push_back({2 + i, 2 + (i + 1) % m});
            }
            std::vector<std::vector<int>> fs;
            for (int i = 0; i < m; ++i) {
                fs.push_back({0, 2 + i, 2 + (i + 1) % m});
                fs.push_back({1, 2 + (i + 1) % m, 2 + i});
            }
            g.faces = std::move(fs);
            return g;
        }
        case F::Truncated: {
            check(id.base != nullptr, "generate: truncation needs a base");
            Graph b = generate(*id.base);
            return truncate(b, detail::all_vertices(b));
        }
        case F::Chamfered: {
            check(id.base != nullptr, "generate: chamfering needs a base");
            switch (id.base->family) {
                case F::Tetrahedron: {
                    Graph c = generate(cat(F::Cube));
                    return truncate(c, detail::bipartition_class_of0(c));
                }
                case F::Cube: {
                    Graph r = generate(cat(F::RhombicDodecahedron));
                    return truncate(r, detail::degree_class(r, 4));
                }
                case F::Octahedron: {
                    Graph r = generate(cat(F::RhombicDodecahedron));
                    return truncate(r, detail::degree_class(r, 3));
                }
                case F::Dodecahedron: {
                    Graph r = generate(cat(F::RhombicTriacontahedron));
                    return truncate(r, detail::degree_class(r, 5));
                }
                case F::Icosahedron: {
                    Graph r = generate(cat(F::RhombicTriacontahedron));
                    return truncate(r, detail::degree_class(r, 3));
                }
                default:
                    check(false,
                          "generate: chamfering is defined for the five Platonic solids");
            }
            return g;
        }
        case F::SSubdivision: {
            check(id.base != nullptr, "generate: subdivision needs a base");
            check(id.a >= 1, "generate: subdivision needs a count of at least 1");
            return s_subdivide(generate(*id.base), id.a);
        }
        case F::C4Subdivision: {
            check(id.base != nullptr, "generate: subdivision needs a base");
            return c4_subdivide(generate(*id.base));
        }
        case F::CmStar: {
            check(id.a >= 2, "generate: C_m* needs order at least 2");
            int m = id.a;
            g.n = 4 * m;
            for (int i = 0; i < m; ++i) {
                int b = 4 * i;
                g.edges.push_back({b, b + 1});
                g.edges.push_back({b + 1, b + 2});
                g.edges.push_back({b + 2, b + 3});
                g.edges.push_back({b + 3, b});
                g.edges.push_back({b + 2, 4 * ((i + 1) % m)});
            }
            return g;
        }
        case F::K2hStar: {
            check(id.a >= 3, "generate: K_{2,h}* needs order at least 3");
            int h = id.a;
            g.n = 2 + 4 * h;
            for (int i = 0; i < h; ++i) {
                int b = 2 + 4 * i;
                g.edges.push_back({b, b + 1});
                g.edges.push_back({b + 1, b + 2});
                g.edges.push_back({b + 2, b + 3});
                g.edges.push_back({b + 3, b});
                g.edges.push_back({0, b});
                g.edges.push_back({1, b + 2});
            }
            return g;
        }
        case F::ParallelSubdivision:
            check(false,
                  "generate: a parallel subdivision carries an edge multiplicity map; "
                  "build it with parallel_subdivide");
    }
    check(false, "generate: unknown family");
    return g;
}

// The cube with all edges directed from the bipartition side of vertex 0 to
// the other side. This directed graph stands in for the edge coloring that
// distinguishes the two cube vertex classes.
inline Graph directed_cube() {
    Graph c = generate(cat(Family::Cube));
    std::vector<char> src(c.n, 0);
    for (int v : detail::bipartition_class_of0(c)) src[v] = 1;
    Graph d;
    d.n = c.n;
    d.directed = true;
    for (auto [u, v] : c.edges) d.edges.push_back(src[u] ? Arc{u, v} : Arc{v, u});
    return d;
}

// Alternation of a bipartite cubic polyhedron with even faces: keep the
// bipartition side of vertex 0 and join, around every face, each kept vertex
// to the next kept vertex along the walk.
inline Graph alternation(const Graph& t) {
    check(t.faces.has_value(), "alternation: face list required");
    std::vector<char> keep(t.n, 0);
    for (int v : detail::bipartition_class_of0(t)) keep[v] = 1;
    std::vector<int> newid(t.n, -1);
    int k = 0;
    for (int v = 0; v < t.n; ++v)
        if (keep[v]) newid[v] = k++;
    std::set<Arc> seen;
    Graph g;
    g.n = k;
    for (auto& walk : *t.faces) {
        std::vector<int> kept;
        for (int v : walk)
            if (keep[v]) kept.push_back(v);
        check(2 * kept.size() == walk.size(), "alternation: faces must alternate sides");
        for (std::size_t i = 0; i < kept.size(); ++i) {
            int u = newid[kept[i]], v = newid[kept[(i + 1) % kept.size()]];
            if (u == v) continue;
            if (seen.insert(norm_edge(u, v)).second) g.edges.push_back({u, v});
        }
    }
    return g;
}

inline Graph snub_cube() {
    return alternation(generate(cat(Family::Truncated, cat(Family::Cuboctahedron))));
}

inline Graph snub_dodecahedron() {
    return alternation(generate(cat(Family::Truncated, cat(Family::Icosidodecahedron))));
}

// Exact isomorphism with 2-WL pruning: the canonical pair colors of the two
// graphs are compared up front (reject on any mismatch of class counts or
// histograms), then a backtracking search maps vertices in an order that
// keeps each new vertex attached to already-mapped ones, restricting
// candidates to the matching diagonal color class and checking adjacency,
// arc colors (when both sides carry them) and pair colors against every
// mapped vertex. Full backtracking keeps the test exact; the colors only
// prune.
inline std::optional<std::vector<int>> isomorphic(const Graph& g0, const Graph& h0) {
    if (g0.n != h0.n || g0.directed != h0.directed ||
        g0.edges.size() != h0.edges.size())
        return std::nullopt;
    const int n = g0.n;
    if (n == 0) return std::vector<int>{};
    bool colored = g0.arc_colors.has_value() && h0.arc_colors.has_value();
    Graph a, b;
    a.n = b.n = n;
    a.directed = b.directed = g0.directed;
    a.edges = g0.edges;
    b.edges = h0.edges;
    if (colored) {
        a.arc_colors = g0.arc_colors;
        b.arc_colors = h0.arc_colors;
    }
    auto nba = neighbors(a), nbb = neighbors(b);
    {
        std::vector<int> da, db;
        for (auto& x : nba) da.push_back((int)x.size());
        for (auto& x : nbb) db.push_back((int)x.size());
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return std::nullopt;
    }
    PairColoring ca = wl2(a), cb = wl2(b);
    if (ca.classes != cb.classes) return std::nullopt;
    {
        std::vector<int> ha = ca.color, hb = cb.color;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }
    // order the search so each vertex arrives with as many mapped neighbors
    // as possible, breaking ties toward small color classes
    std::vector<int> csize(ca.classes, 0);
    for (int v = 0; v < n; ++v) ++csize[ca.at(v, v)];
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, batt = -1, bcls = INT_MAX;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int att = 0;
            for (int w : nba[v])
                if (placed[w]) ++att;
            int cls = csize[ca.at(v, v)];
            if (att > batt || (att == batt && cls < bcls)) {
                best = v;
                batt = att;
                bcls = cls;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    auto am = arc_matrix(a), bm = arc_matrix(b);
    auto color_of = [](const Graph& g, int u, int v) -> long long {
        auto it = g.arc_colors->find({u, v});
        return it == g.arc_colors->end() ? LLONG_MIN : it->second;
    };
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int k) -> bool {
        if (k == n) return true;
        int v = order[k];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cb.at(w, w) != ca.at(v, v)) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int u = order[j], x = map[u];
                if (ca.at(v, u) != cb.at(w, x) || ca.at(u, v) != cb.at(x, w))
                    ok = false;
                else if (am[v][u] != bm[w][x] || am[u][v] != bm[x][w])
                    ok = false;
                else if (colored && (color_of(a, v, u) != color_of(b, w, x) ||
                                     color_of(a, u, v) != color_of(b, x, w)))
                    ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (place(k + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return map;
}

// A graph written as a parallel subdivision: the base keeps the vertices of
// degree other than 2 in their original order, and f counts the length-2
// paths on every base edge (0 marks an edge kept directly).
struct ParallelForm {
    Graph base;
    std::map<Arc, int> f;
};

inline ParallelForm normalize_parallel_subdivision(const Graph& g) {
    check(!g.directed, "normalize_parallel_subdivision: undirected input required");
    auto nb = neighbors(g);
    std::vector<char> mid(g.n, 0);
    bool any = false;
    for (int v = 0; v < g.n; ++v)
        if (nb[v].size() == 2) {
            mid[v] = 1;
            any = true;
        }
    ParallelForm out;
    if (!any) {
        out.base.n = g.n;
        out.base.edges = g.edges;
        for (auto [u, v] : g.edges) out.f[norm_edge(u, v)] = 0;
        return out;
    }
    std::vector<int> newid(g.n, -1);
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (!mid[v]) newid[v] = k++;
    out.base.n = k;
    std::set<Arc> direct;
    for (auto [u, v] : g.edges)
        if (!mid[u] && !mid[v]) {
            out.base.edges.push_back({newid[u], newid[v]});
            direct.insert(norm_edge(newid[u], newid[v]));
            out.f[norm_edge(newid[u], newid[v])] = 0;
        }
    std::map<Arc, int> paths;
    for (int x = 0; x < g.n; ++x) {
        if (!mid[x]) continue;
        int u = nb[x][0], w = nb[x][1];
        check(!mid[u] && !mid[w],
              "normalize_parallel_subdivision: degree-2 vertices form a chain");
        ++paths[norm_edge(newid[u], newid[w])];
    }
    for (auto& [e, count] : paths) {
        check(!direct.count(e),
              "normalize_parallel_subdivision: base would need parallel edges");
        out.base.edges.push_back(e);
        out.f[e] = count;
    }
    return out;
}

namespace detail {

inline std::optional<CatalogId> match_pattern(const Graph& g, const CatalogId& pat);

// Parameter inference from the input's counts: at most one concrete id per
// pattern (two only for the fully open complete bipartite case).
inline std::vector<CatalogId> pattern_candidates(const Graph& g, const CatalogId& pat) {
    using F = Family;
    const int n = g.n;
    const int m = (int)g.edges.size();
    std::vector<CatalogId> out;
    switch (pat.family) {
        case F::Complete: {
            int a = pat.a != -1 ? pat.a : n;
            if (a == n && a >= 1 && 2 * m == a * (a - 1)) out.push_back(cat(F::Complete, a));
            return out;
        }
        case F::CompleteBipartite: {
            std::vector<std::pair<int, int>> sides;
            if (pat.a != -1 && pat.b != -1) {
                sides.push_back({pat.a, pat.b});
            } else if (pat.a != -1) {
                sides.push_back({pat.a, n - pat.a});
            } else {
                std::map<int, int> hist;
                auto nb = neighbors(g);
                for (auto& x : nb) ++hist[(int)x.size()];
                if (hist.size() == 1) {
                    int d = hist.begin()->first;
                    if (n == 2 * d) sides.push_back({d, d});
                } else if (hist.size() == 2) {
                    auto lo = *hist.begin(), hi = *hist.rbegin();
                    if (lo.first == hi.second && hi.first == lo.second)
                        sides.push_back({hi.second, lo.second});
                }
            }
            for (auto [a, b] : sides)
                if (a >= 1 && b >= 1 && n == a + b && m == a * b)
                    out.push_back(cat(F::CompleteBipartite, a, b));
            return out;
        }
        case F::Cycle: {
            int a = pat.a != -1 ? pat.a : n;
            if (a == n && a >= 3 && m == a) out.push_back(cat(F::Cycle, a));
            return out;
        }
        case F::Star: {
            int a = pat.a != -1 ? pat.a : n - 1;
            if (a == n - 1 && a >= 0 && m == a) out.push_back(cat(F::Star, a));
            return out;
        }
        case F::Prism: {
            if (n % 2) return out;
            int a = pat.a != -1 ? pat.a : n / 2;
            if (2 * a == n && a >= 3 && m == 3 * a) out.push_back(cat(F::Prism, a));
            return out;
        }
        case F::Antiprism: {
            if (n % 2) return out;
            int a = pat.a != -1 ? pat.a : n / 2;
            if (2 * a == n && a >= 3 && m == 4 * a) out.push_back(cat(F::Antiprism, a));
            return out;
        }
        case F::Bipyramid: {
            int a = pat.a != -1 ? pat.a : n - 2;
            if (a == n - 2 && a >= 3 && m == 3 * a) out.push_back(cat(F::Bipyramid, a));
            return out;
        }
        case F::CmStar: {
            if (n % 4) return out;
            int a = pat.a != -1 ? pat.a : n / 4;
            if (4 * a == n && a >= 2 && m == 5 * a) out.push_back(cat(F::CmStar, a));
            return out;
        }
        case F::K2hStar: {
            if ((n - 2) % 4) return out;
            int a = pat.a != -1 ? pat.a : (n - 2) / 4;
            if (4 * a + 2 == n && a >= 3 && m == 6 * a) out.push_back(cat(F::K2hStar, a));
            return out;
        }
        case F::SSubdivision: {
            check(pat.base != nullptr, "match_catalog: s-subdivision pattern needs a base");
            if (pat.base->family == F::Cycle && pat.base->a == -1) {
                if (m % 2) return out;
                int l = n - m / 2;
                if (l < 3 || m % (2 * l)) return out;
                int s = m / (2 * l);
                if (s < 1 || n != l * (1 + s)) return out;
                if (pat.a != -1 && pat.a != s) return out;
                out.push_back(cat(F::SSubdivision, cat(F::Cycle, l), s));
                return out;
            }
            Graph base = generate(*pat.base);
            int n0 = base.n, m0 = (int)base.edges.size();
            if (m0 == 0) return out;
            int s;
            if (pat.a != -1) {
                s = pat.a;
            } else {
                if ((n - n0) % m0) return out;
                s = (n - n0) / m0;
            }
            if (s < 1 || n != n0 + s * m0 || m != 2 * s * m0) return out;
            out.push_back(cat(F::SSubdivision, *pat.base, s));
            return out;
        }
        case F::Truncated:
        case F::Chamfered:
        case F::C4Subdivision: {
            check(pat.base != nullptr, "match_catalog: derived pattern needs a base");
            out.push_back(pat);
            return out;
        }
        default:
            out.push_back(pat);
            return out;
    }
}

inline std::optional<CatalogId> match_pattern(const Graph& g, const CatalogId& pat) {
    if (pat.family == Family::ParallelSubdivision) {
        check(pat.base != nullptr, "match_catalog: parallel subdivision pattern needs a base");
        ParallelForm pf;
        try {
            pf = normalize_parallel_subdivision(g);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        auto inner = match_pattern(pf.base, *pat.base);
        if (!inner) return std::nullopt;
        return cat(Family::ParallelSubdivision, *inner);
    }
    for (const CatalogId& id : pattern_candidates(g, pat)) {
        Graph t = generate(id);
        if (t.n != g.n || t.edges.size() != g.edges.size()) continue;
        if (isomorphic(g, t)) return id;
    }
    return std::nullopt;
}

}  // namespace detail

// First pattern whose family contains a graph isomorphic to g wins; numeric
// parameters marked -1 in a pattern are inferred from the input's vertex and
// edge counts before any isomorphism call.
inline std::optional<CatalogId> match_catalog(const Graph& g,
                                              const std::vector<CatalogId>& patterns) {
    for (const auto& pat : patterns) {
        auto hit = detail::match_pattern(g, pat);
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace wlp
