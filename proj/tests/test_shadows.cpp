#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "common.hpp"
#include "roller/error.hpp"
#include "roller/shadows.hpp"

using namespace roller;

namespace {

// hexagonal tiling by hand: the three normals sum to zero, so n1.p + n2.p + n3.p = 0
// and the slabs [c_i - 1, c_i] meet iff 0 <= c1 + c2 + c3 <= 3
bool hex_consistent(const Cuts& c) {
    auto s = c[0] + c[1] + c[2];
    return 0 <= s && s <= 3;
}
std::int64_t hex_dist(const Cuts& c) {
    auto s = c[0] + c[1] + c[2];
    return std::max<std::int64_t>({0, s - 3, -s});
}

std::vector<Cuts> box(std::size_t k, std::int64_t W) {
    std::vector<Cuts> out{{}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Cuts> nx;
        for (const auto& c : out)
            for (auto v = -W; v <= W; ++v) {
                auto d = c;
                d.push_back(v);
                nx.push_back(d);
            }
        out.swap(nx);
    }
    return out;
}

std::int64_t l1(const Cuts& a, const Cuts& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

ChainUltrafilter cu(const Cuts& c) { return ChainUltrafilter::from_cuts(c); }

}  // namespace

TEST_CASE("consistency against the hand-derived hexagon rule and exact elimination") {
    auto H = load_model("FIX-HEX").geometry;
    ConsistencyOracle O(H);
    CHECK(O.interval_applies());
    for (const auto& c : box(3, 6)) {
        CAPTURE(c[0]);
        CAPTURE(c[1]);
        CAPTURE(c[2]);
        bool want = hex_consistent(c);
        CHECK(O.consistent(c) == want);
        CHECK(O.consistent_interval(c) == want);
        CHECK(O.consistent_general(c) == want);
    }
    CHECK(enumerate_pi0(H, 0) == std::vector<Cuts>{{0, 0, 0}});

    auto Z2 = load_model("FIX-Z2").geometry;
    ConsistencyOracle OZ(Z2);
    CHECK_FALSE(OZ.interval_applies());
    CHECK_ERRC(OZ.consistent_interval({0, 0}), Errc::Unsupported);
    CHECK(enumerate_pi0(Z2, 1).size() == 9);
    for (const auto& c : box(2, 3)) CHECK(OZ.consistent_general(c));

    // closures meet at the origin for h_i(0); for h_i(1) the sum would reach 3
    std::vector<ChainHalfspace> hs{{0, 0, false}, {1, 0, false}, {2, 0, false}};
    CHECK(O.set_consistent(hs));
    hs = {{0, 1, false}, {1, 1, false}, {2, 1, false}};
    CHECK_FALSE(O.set_consistent(hs));
    hs.pop_back();
    CHECK(O.set_consistent(hs));
}

TEST_CASE("Pi0 index counts and distances match brute force") {
    auto H = load_model("FIX-HEX").geometry;
    for (std::int64_t W : {1, 3, 6}) {
        Pi0Index idx(H, W);
        std::size_t n = 0;
        for (const auto& c : box(3, W)) n += hex_consistent(c);
        CHECK(idx.size() == n);
    }
    Pi0Index idx(H, 12);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> v(-4, 4);
    auto pi0 = enumerate_pi0(H, 12);
    for (int t = 0; t < 200; ++t) {
        Cuts q{v(rng), v(rng), v(rng)};
        std::int64_t brute = INT64_MAX;
        for (const auto& p : pi0) brute = std::min(brute, l1(p, q));
        CHECK(idx.dist(q) == brute);
        CHECK(idx.dist(q) == hex_dist(q));
        std::int64_t d = -1;
        auto near = idx.nearest(q, &d);
        CHECK(d == brute);
        for (const auto& p : near) CHECK(l1(p, q) == brute);
        std::size_t all = 0;
        for (const auto& p : pi0) all += l1(p, q) == brute;
        CHECK(near.size() == all);
    }
    Pi0Index small(H, 2);
    CHECK_ERRC(small.nearest({5, 5, 5}), Errc::WindowTooSmall);
}

TEST_CASE("the shadow of (5,5,5) in the hexagonal model") {
    auto H = load_model("FIX-HEX").geometry;
    auto r = shadow_report(H, cu({5, 5, 5}), 8);
    CHECK_FALSE(r.consistent);
    CHECK(r.dist == 12);
    CHECK(r.shadow.size() == 91);
    for (const auto& s : r.shadow) {
        CHECK(s[0] + s[1] + s[2] == 3);
        CHECK(l1(s, {5, 5, 5}) == 12);
    }
    REQUIRE(r.dual_shadow.size() == 3);
    for (const auto& d : r.dual_shadow) CHECK(d == ChainRange{-8, 5});
    CHECK(r.mins.minus == std::vector<ChainHalfspace>{{0, 4, false}, {1, 4, false}, {2, 4, false}});
    CHECK(r.mins.plus == std::vector<ChainHalfspace>{{0, 5, true}, {1, 5, true}, {2, 5, true}});
    CHECK(r.mins.neutral.empty());
    CHECK(r.plus_in_dual);
    CHECK(r.dual_in_pi);
    CHECK(r.three_down);
    CHECK(r.minus_inconsistent);

    auto c = shadow_report(H, cu({1, 1, 1}), 4);
    CHECK(c.consistent);
    CHECK(c.dist == 0);
    CHECK(c.shadow == std::vector<Cuts>{{1, 1, 1}});
    CHECK_ERRC(shadow_report(H, ChainUltrafilter{{CutState::plus(), CutState::at(0), CutState::at(0)}}, 4),
               Errc::NotPrincipal);
}

TEST_CASE("shadow invariants on sampled inconsistent tuples") {
    auto H = load_model("FIX-HEX").geometry;
    Pi0Index idx(H, 12);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> v(-5, 5);
    int seen = 0;
    while (seen < 150) {
        Cuts q{v(rng), v(rng), v(rng)};
        if (hex_consistent(q)) continue;
        ++seen;
        auto r = shadow_report(H, idx, cu(q));
        CHECK(r.dist == hex_dist(q));
        // brute shadow: every consistent tuple at minimal distance
        std::vector<Cuts> want;
        for (const auto& p : enumerate_pi0(H, 12))
            if (l1(p, q) == r.dist) want.push_back(p);
        CHECK(r.shadow == want);
        // dual shadow is the intersection of the shadow's halfspaces
        for (std::size_t i = 0; i < 3; ++i) {
            std::int64_t lo = INT64_MAX, hi = INT64_MIN;
            for (const auto& s : want) {
                lo = std::min(lo, s[i]);
                hi = std::max(hi, s[i]);
            }
            CHECK(r.dual_shadow[i] == ChainRange{lo - 1, hi});
        }
        CHECK(r.plus_in_dual);
        CHECK(r.dual_in_pi);
        CHECK(r.three_down);
        CHECK(r.minus_inconsistent);
        CHECK(level_set_holds(H, q, r.dist));
    }
}

TEST_CASE("level sets on the square grid are trivial") {
    auto Z2 = load_model("FIX-Z2").geometry;
    CHECK(level_set_holds(Z2, {3, -4}, 0));
    CHECK(dist_to_pi0(Pi0Index(Z2, 6), cu({3, -4})) == 0);
}

TEST_CASE("escaping rays") {
    auto H = load_model("FIX-HEX").geometry;
    auto e = escaping_ray(H, parse_signature("(+,+,+)"), 20);
    CHECK(e.success);
    CHECK_FALSE(e.in_image);
    REQUIRE(e.ray.size() == 21);
    for (std::size_t i = 1; i < e.ray.size(); ++i) {
        CHECK(e.ray[i].dist > e.ray[i - 1].dist);
        CHECK(e.ray[i].move_in_min_plus);
        CHECK(e.ray[i].dual_shrinks);
        CHECK(e.ray[i].shadow_grows);
        CHECK(l1(e.ray[i].cuts, e.ray[i - 1].cuts) == 1);
        CHECK(e.ray[i].dist == hex_dist(e.ray[i].cuts));
    }

    auto Z2 = load_model("FIX-Z2").geometry;
    auto f = escaping_ray(Z2, parse_signature("(+,+)"), 20);
    CHECK_FALSE(f.success);
    CHECK(f.failure_step == 1);
    CHECK_FALSE(f.reason.empty());
    CHECK(f.in_image);
}

TEST_CASE("max delta and the surjectivity contract") {
    auto H = load_model("FIX-HEX").geometry;
    for (std::int64_t W : {1, 2, 3, 5}) {
        auto m = max_delta(H, W);
        std::int64_t brute = 0;
        for (const auto& c : box(3, W)) brute = std::max(brute, hex_dist(c));
        CHECK(m.max_delta == brute);
        CHECK(hex_dist(m.argmax) == brute);
    }
    auto Z2 = load_model("FIX-Z2").geometry;
    CHECK(max_delta(Z2, 4).max_delta == 0);

    auto rh = surjectivity_report(H, {2, 4});
    CHECK(rh.uniform);
    CHECK(rh.nonprincipal == 26);
    CHECK(rh.nonprincipal_in_image == 12);
    CHECK(rh.delta_grows);
    REQUIRE(rh.escape.has_value());
    CHECK(rh.escape->success);
    CHECK(rh.contract_ok);

    auto rz = surjectivity_report(Z2, {1, 2});
    CHECK(rz.nonprincipal == 8);
    CHECK(rz.nonprincipal_in_image == 8);
    CHECK_FALSE(rz.delta_grows);
    CHECK(rz.contract_ok);
}

TEST_CASE("flow rays fellow-travel straight rays in cubical models") {
    auto Z2 = load_model("FIX-Z2").geometry;
    auto Z3 = load_model("FIX-Z3").geometry;
    CHECK(fellow_travel(Z2, parse_signature("(+,+)"), 40).within_one);
    CHECK(fellow_travel(Z2, parse_signature("(0,-)"), 40).within_one);
    CHECK(fellow_travel(Z3, parse_signature("(+,-,0)"), 40).within_one);
    CHECK(fellow_travel(Z3, parse_signature("(+,-,+)"), 40).within_one);
    CHECK_ERRC(fellow_travel(load_model("FIX-HEX").geometry, parse_signature("(+,-,0)"), 5), Errc::Unsupported);
}

TEST_CASE("svg rendering") {
    auto H = load_model("FIX-HEX").geometry;
    auto svg = shadow_svg(H, shadow_report(H, cu({2, 2, 2}), 6));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    auto Z3 = load_model("FIX-Z3").geometry;
    CHECK_ERRC(shadow_svg(Z3, shadow_report(Z3, cu({0, 0, 0}), 2)), Errc::Unsupported);
}
