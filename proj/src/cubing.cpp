#include "roller/cubing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "roller/error.hpp"

namespace roller {

std::size_t CubeComplex::dimension() const {
    std::size_t d = edges.empty() ? 0 : 1;
    for (const auto& c : cubes) d = std::max(d, c.transverse.size());
    return d;
}

std::size_t CubeComplex::cube_count(std::size_t d) const {
    if (d == 0) return vertices.size();
    if (d == 1) return edges.size();
    return static_cast<std::size_t>(
        std::count_if(cubes.begin(), cubes.end(), [d](const Cube& c) { return c.transverse.size() == d; }));
}

std::vector<std::vector<std::size_t>> CubeComplex::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

namespace {

void transverse_subsets(const FinitePocSet& P, const std::vector<Element>& M, std::size_t from,
                        std::vector<Element>& cur, std::vector<std::vector<Element>>& out) {
    for (std::size_t i = from; i < M.size(); ++i) {
        bool ok = std::all_of(cur.begin(), cur.end(), [&](Element x) { return transverse(P, x, M[i]); });
        if (!ok) continue;
        cur.push_back(M[i]);
        if (cur.size() >= 2) out.push_back(cur);
        transverse_subsets(P, M, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

CubeComplex build_cubing(const FinitePocSet& P) {
    CubeComplex C;
    C.pairs = P.pairs();
    C.vertices = enumerate_ultrafilters(P);
    std::unordered_map<ElementSet, std::size_t> index;
    for (std::size_t i = 0; i < C.vertices.size(); ++i) index[C.vertices[i].members] = i;

    for (std::size_t u = 0; u < C.vertices.size(); ++u) {
        const auto M = elements_of(min_set(P, C.vertices[u]));
        for (Element a : M) {
            std::size_t v = index.at(flip(P, C.vertices[u], a).members);
            if (u < v) C.edges.push_back({u, v, a});
        }
        std::vector<std::vector<Element>> subsets;
        std::vector<Element> cur;
        transverse_subsets(P, M, 0, cur, subsets);
        std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        for (auto& T : subsets) {
            Cube cube;
            cube.base = u;
            cube.transverse = T;
            const std::size_t corners = std::size_t{1} << T.size();
            cube.vertices.resize(corners);
            bool least = true;
            for (std::size_t mask = 0; mask < corners; ++mask) {
                ElementSet s = C.vertices[u].members;
                for (std::size_t j = 0; j < T.size(); ++j) {
                    if ((mask >> j) & 1u) {
                        s[T[j]] = false;
                        s[star(T[j])] = true;
                    }
                }
                auto it = index.find(s);
                if (it == index.end()) throw Error(Errc::NotIsomorphic, "cube corner is not an ultrafilter");
                cube.vertices[mask] = it->second;
                if (it->second < u) least = false;
            }
            if (least) C.cubes.push_back(std::move(cube));
        }
    }
    std::sort(C.edges.begin(), C.edges.end(),
              [](const CubeEdge& x, const CubeEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    return C;
}

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<std::size_t>>& adj, std::size_t from) {
    std::vector<std::size_t> dist(adj.size(), SIZE_MAX);
    std::deque<std::size_t> q{from};
    dist[from] = 0;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (std::size_t y : adj[x]) {
            if (dist[y] == SIZE_MAX) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    return dist;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

ExtractedHalfspaces extract_halfspaces(const CubeComplex& C) {
    const std::size_t V = C.vertices.size();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_id;
    for (std::size_t i = 0; i < C.edges.size(); ++i)
        edge_id[{std::min(C.edges[i].u, C.edges[i].v), std::max(C.edges[i].u, C.edges[i].v)}] = i;
    auto eid = [&](std::size_t a, std::size_t b) {
        auto it = edge_id.find({std::min(a, b), std::max(a, b)});
        if (it == edge_id.end()) throw Error(Errc::DegenerateWall, "square side is not an edge");
        return it->second;
    };

    UnionFind uf(C.edges.size());
    for (const auto& cube : C.cubes) {
        const std::size_t d = cube.transverse.size();
        for (std::size_t j1 = 0; j1 < d; ++j1) {
            for (std::size_t j2 = j1 + 1; j2 < d; ++j2) {
                for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
                    if ((mask >> j1) & 1u || (mask >> j2) & 1u) continue;
                    std::size_t a = cube.vertices[mask], b = cube.vertices[mask | (std::size_t{1} << j1)];
                    std::size_t c = cube.vertices[mask | (std::size_t{1} << j2)];
                    std::size_t e = cube.vertices[mask | (std::size_t{1} << j1) | (std::size_t{1} << j2)];
                    uf.unite(eid(a, b), eid(c, e));
                    uf.unite(eid(a, c), eid(b, e));
                }
            }
        }
    }

    ExtractedHalfspaces X;
    std::map<std::size_t, std::size_t> wall_of_root;
    for (std::size_t i = 0; i < C.edges.size(); ++i) {
        std::size_t r = uf.find(i);
        if (!wall_of_root.count(r)) {
            wall_of_root[r] = X.wall_edges.size();
            X.wall_edges.emplace_back();
        }
        X.wall_edges[wall_of_root[r]].push_back(i);
    }
    const std::size_t m = X.wall_edges.size();
    if (m > kMaxPairs) throw Error(Errc::Unsupported, "more than 32 walls");

    auto adj = C.adjacency();
    std::vector<std::vector<char>> member;
    for (std::size_t w = 0; w < m; ++w) {
        std::set<std::pair<std::size_t, std::size_t>> cut;
        for (std::size_t i : X.wall_edges[w]) cut.insert({C.edges[i].u, C.edges[i].v});
        auto reach = [&](std::size_t from) {
            std::vector<char> seen(V, 0);
            std::deque<std::size_t> q{from};
            seen[from] = 1;
            while (!q.empty()) {
                std::size_t x = q.front();
                q.pop_front();
                for (std::size_t y : adj[x]) {
                    if (seen[y] || cut.count({std::min(x, y), std::max(x, y)})) continue;
                    seen[y] = 1;
                    q.push_back(y);
                }
            }
            return seen;
        };
        const auto& first = C.edges[X.wall_edges[w].front()];
        auto a = reach(first.u);
        auto b = reach(first.v);
        for (std::size_t x = 0; x < V; ++x) {
            if (a[x] && b[x]) throw Error(Errc::DegenerateWall, "wall " + std::to_string(w + 1) + " does not separate");
            if (!a[x] && !b[x])
                throw Error(Errc::DegenerateWall, "wall " + std::to_string(w + 1) + " leaves more than two components");
        }
        member.push_back(a);
        member.push_back(b);
    }

    X.sides.resize(2 * m);
    for (std::size_t s = 0; s < 2 * m; ++s) {
        for (std::size_t x = 0; x < V; ++x)
            if (member[s][x]) X.sides[s].push_back(x);
        if (X.sides[s].empty()) throw Error(Errc::DegenerateWall, "empty side of wall " + std::to_string(s / 2 + 1));
    }
    std::vector<std::pair<Element, Element>> order;
    for (std::size_t x = 0; x < 2 * m; ++x)
        for (std::size_t y = 0; y < 2 * m; ++y)
            if (x != y && std::includes(X.sides[y].begin(), X.sides[y].end(), X.sides[x].begin(), X.sides[x].end()))
                order.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
    X.pocset = FinitePocSet::from_relation(m, order, false);
    return X;
}

DualityReport duality_roundtrip(const FinitePocSet& P) {
    DualityReport R;
    const CubeComplex C = build_cubing(P);
    R.extracted = extract_halfspaces(C);
    const FinitePocSet& E = R.extracted.pocset;
    if (E.pairs() != P.pairs())
        throw Error(Errc::NotIsomorphic,
                    "pair count " + std::to_string(P.pairs()) + " vs " + std::to_string(E.pairs()));

    R.bijection.assign(P.size(), 0);
    R.bijection[P.zero()] = E.zero();
    R.bijection[P.zero_star()] = E.zero_star();
    std::vector<char> used(E.size(), 0);
    for (Element e = 0; e < 2 * P.pairs(); ++e) {
        std::vector<std::size_t> side;
        for (std::size_t v = 0; v < C.vertices.size(); ++v)
            if (C.vertices[v].contains(e)) side.push_back(v);
        auto it = std::find(R.extracted.sides.begin(), R.extracted.sides.end(), side);
        if (it == R.extracted.sides.end()) throw Error(Errc::NotIsomorphic, "no side matches " + P.name(e));
        auto f = static_cast<Element>(it - R.extracted.sides.begin());
        if (used[f]) throw Error(Errc::NotIsomorphic, "side reused by " + P.name(e));
        used[f] = 1;
        R.bijection[e] = f;
    }
    for (Element a = 0; a < P.size(); ++a) {
        if (R.bijection[star(a)] != star(R.bijection[a]))
            throw Error(Errc::NotIsomorphic, "involution mismatch at " + P.name(a));
        for (Element b = 0; b < P.size(); ++b)
            if (P.leq(a, b) != E.leq(R.bijection[a], R.bijection[b]))
                throw Error(Errc::NotIsomorphic, "order mismatch at " + P.name(a) + "," + P.name(b));
    }

    // vertex map v -> pi_v, compared against the cubing of the extracted poc-set
    const CubeComplex CE = build_cubing(E);
    std::unordered_map<ElementSet, std::size_t> index;
    for (std::size_t i = 0; i < CE.vertices.size(); ++i) index[CE.vertices[i].members] = i;
    if (CE.vertices.size() != C.vertices.size()) throw Error(Errc::NotIsomorphic, "vertex count");
    std::vector<char> hit(CE.vertices.size(), 0);
    for (std::size_t v = 0; v < C.vertices.size(); ++v) {
        ElementSet pv;
        for (Element f = 0; f < 2 * E.pairs(); ++f)
            if (std::binary_search(R.extracted.sides[f].begin(), R.extracted.sides[f].end(), v)) pv[f] = true;
        pv[E.zero_star()] = true;
        for (Element e = 0; e < 2 * P.pairs(); ++e)
            if (C.vertices[v].contains(e) != pv[R.bijection[e]])
                throw Error(Errc::NotIsomorphic, "vertex " + std::to_string(v) + " disagrees at " + P.name(e));
        auto it = index.find(pv);
        if (it == index.end() || hit[it->second])
            throw Error(Errc::NotIsomorphic, "vertex " + std::to_string(v) + " has no image");
        hit[it->second] = 1;
        R.vertex_map.push_back(it->second);
    }
    std::set<std::pair<std::size_t, std::size_t>> target;
    for (const auto& e : CE.edges) target.insert({e.u, e.v});
    if (target.size() != C.edges.size()) throw Error(Errc::NotIsomorphic, "edge count");
    for (const auto& e : C.edges) {
        std::size_t a = R.vertex_map[e.u], b = R.vertex_map[e.v];
        if (!target.count({std::min(a, b), std::max(a, b)}))
            throw Error(Errc::NotIsomorphic, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    for (std::size_t d = 2; d <= std::max(C.dimension(), CE.dimension()); ++d)
        if (C.cube_count(d) != CE.cube_count(d))
            throw Error(Errc::NotIsomorphic, std::to_string(d) + "-cube count");
    return R;
}

}  // namespace roller
