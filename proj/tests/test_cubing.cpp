#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "common.hpp"
#include "roller/cubing.hpp"
#include "roller/error.hpp"

using namespace roller;

namespace {

// oracle: d-cubes are (vertex, d walls) with all 2^d sign variants present,
// each cube seen once from every corner
std::size_t brute_cubes(const FinitePocSet& P, std::size_t d) {
    auto us = enumerate_ultrafilters(P);
    std::set<std::string> have;
    for (const auto& u : us) have.insert(u.members.to_string());
    const std::size_t n = P.pairs();
    std::size_t hits = 0;
    for (const auto& u : us)
        for (std::uint64_t W = 0; W < (std::uint64_t{1} << n); ++W) {
            if (static_cast<std::size_t>(__builtin_popcountll(W)) != d) continue;
            bool all = true;
            for (std::uint64_t sub = W;; sub = (sub - 1) & W) {
                ElementSet v = u.members;
                for (std::size_t i = 0; i < n; ++i)
                    if ((sub >> i) & 1) {
                        v.flip(2 * i);
                        v.flip(2 * i + 1);
                    }
                if (!have.count(v.to_string())) all = false;
                if (sub == 0 || !all) break;
            }
            hits += all;
        }
    return hits >> d;
}

}  // namespace

TEST_CASE("fixture cubings") {
    auto L = build_cubing(load_poc("FIX-LINE3"));
    CHECK(L.vertices.size() == 4);
    CHECK(L.edges.size() == 3);
    CHECK(L.cube_count(2) == 0);
    auto S = build_cubing(load_poc("FIX-SQ"));
    CHECK(S.vertices.size() == 4);
    CHECK(S.edges.size() == 4);
    CHECK(S.cube_count(2) == 1);
    CHECK(S.dimension() == 2);
    auto T = build_cubing(load_poc("FIX-TRIPOD"));
    CHECK(T.vertices.size() == 4);
    CHECK(T.edges.size() == 3);
    CHECK(T.cube_count(2) == 0);
    // star tree: one vertex of degree 3
    auto adj = T.adjacency();
    std::size_t deg3 = 0;
    for (const auto& a : adj) deg3 += a.size() == 3;
    CHECK(deg3 == 1);
}

TEST_CASE("cube counts match the corner oracle on random poc-sets") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 80; ++t) {
        auto P = validate_pocset(random_pocset(1 + t % 6, rng));
        auto C = build_cubing(P);
        for (std::size_t d = 0; d <= P.pairs(); ++d) {
            CAPTURE(d);
            CHECK(C.cube_count(d) == brute_cubes(P, d));
        }
    }
}

TEST_CASE("edges join ultrafilters at distance one; delta equals graph distance") {
    std::mt19937_64 rng(8);
    std::vector<FinitePocSet> ps = {load_poc("FIX-LINE3"), load_poc("FIX-SQ"), load_poc("FIX-TRIPOD")};
    for (int t = 0; t < 40; ++t) ps.push_back(validate_pocset(random_pocset(1 + t % 6, rng)));
    for (const auto& P : ps) {
        auto C = build_cubing(P);
        std::size_t close = 0;
        for (std::size_t i = 0; i < C.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < C.vertices.size(); ++j) close += delta(C.vertices[i], C.vertices[j]) == 1;
        CHECK(close == C.edges.size());
        auto adj = C.adjacency();
        for (std::size_t i = 0; i < C.vertices.size(); ++i) {
            auto dist = bfs_distances(adj, i);
            for (std::size_t j = 0; j < C.vertices.size(); ++j) CHECK(dist[j] == delta(C.vertices[i], C.vertices[j]));
        }
    }
}

TEST_CASE("halfspaces extracted from the complex") {
    auto S = load_poc("FIX-SQ");
    auto X = extract_halfspaces(build_cubing(S));
    CHECK(X.pocset.pairs() == 2);
    CHECK(transverse(X.pocset, X.pocset.plain(0), X.pocset.plain(1)));
    auto L = load_poc("FIX-LINE3");
    auto XL = extract_halfspaces(build_cubing(L));
    CHECK(XL.pocset.pairs() == 3);
    CHECK(dimension(XL.pocset) == 1);
}

TEST_CASE("duality round trip on fixtures and random poc-sets") {
    for (const char* f : {"FIX-LINE3", "FIX-SQ", "FIX-TRIPOD"}) {
        auto P = load_poc(f);
        auto R = duality_roundtrip(P);
        CHECK(R.bijection.size() == P.size());  // trivial pair included
        CHECK(R.extracted.pocset.pairs() == P.pairs());
    }
    auto S = load_poc("FIX-SQ");
    auto R = duality_roundtrip(S);
    // a <-> S_a: the side of h1 holds exactly the vertices containing h1
    auto C = build_cubing(S);
    for (Element e = 0; e < 4; ++e)
        for (std::size_t v : R.extracted.sides[R.bijection[e]]) CHECK(C.vertices[v].contains(e));
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) {
        auto P = validate_pocset(random_pocset(1 + t % 5, rng));
        CHECK_NOTHROW(duality_roundtrip(P));
    }
}
