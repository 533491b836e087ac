#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "common.hpp"
#include "roller/error.hpp"
#include "roller/euclid_model.hpp"

using namespace roller;

namespace {

Direction dir(std::initializer_list<std::int64_t> v) {
    ExactVec x;
    for (auto a : v) x.push_back(Exact(a));
    return Direction(x);
}

std::string rs(const Geometry& G, const Direction& d) { return signature_str(rho(G, d)); }

// comparability graph of the image is one cycle through every class
bool single_cycle(const std::vector<Signature>& img) {
    const std::size_t n = img.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (class_leq(img[i], img[j]) || class_leq(img[j], img[i]))) adj[i].push_back(j);
    for (const auto& a : adj)
        if (a.size() != 2) return false;
    std::size_t prev = 0, cur = adj[0][0], steps = 1;
    while (cur != 0) {
        std::size_t nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nx;
        ++steps;
    }
    return steps == n;
}

Line random_line(const Geometry& G, std::mt19937_64& rng, bool surd) {
    std::uniform_int_distribution<int> c(-9, 9), den(2, 13);
    while (true) {
        ExactVec d, b;
        for (std::size_t j = 0; j < G.dim(); ++j) {
            d.push_back(surd ? Exact(Rational(c(rng)), Rational(c(rng) % 3)) : Exact(c(rng)));
            b.push_back(Exact(Rational(c(rng), den(rng))));
        }
        bool zero = true;
        for (const auto& x : d) zero = zero && x.is_zero();
        if (zero) continue;
        try {
            restrict_to_line(G, {b, d}, 2);
            return {b, d};
        } catch (const Error& e) {
            if (e.code() != Errc::LineInsideWall) throw;
        }
    }
}

}  // namespace

TEST_CASE("models load and validate") {
    auto Z2 = load_model("FIX-Z2");
    auto H = load_model("FIX-HEX");
    CHECK(validate_model(Z2).uniform);
    CHECK(validate_model(H).uniform);
    auto L1 = load_model("FIX-LINE1");
    auto chk = validate_model(L1);
    CHECK_FALSE(chk.uniform);
    CHECK(chk.warnings.size() == 1);

    Model bad = Z2;
    bad.geometry.families[1].normal = {Exact(2), Exact(0)};
    CHECK_ERRC(validate_model(bad), Errc::MalformedInput);
    bad = Z2;
    bad.geometry.families[0].normal = {Exact(0), Exact(0)};
    CHECK_ERRC(validate_model(bad), Errc::MalformedInput);
    bad = Z2;
    bad.geometry.families[0].spacing = Rational(0);
    CHECK_ERRC(validate_model(bad), Errc::MalformedInput);
    bad = Z2;
    bad.family.names.push_back("z");
    CHECK_ERRC(validate_model(bad), Errc::MalformedInput);
}

TEST_CASE("directions and rho") {
    CHECK(dir({2, 4}) == dir({1, 2}));
    CHECK_FALSE(dir({-2, 4}) == dir({1, -2}));
    CHECK_ERRC(dir({0, 0}), Errc::ZeroDirection);
    auto G = load_model("FIX-Z2").geometry;
    CHECK(rs(G, dir({1, 0})) == "(+,0)");
    CHECK(rs(G, dir({1, 1})) == "(+,+)");
    CHECK(rs(G, dir({0, -1})) == "(0,-)");
    CHECK(rs(G, dir({-2, 3})) == "(-,+)");
    auto r = classify_direction(G, dir({1, 0}));
    CHECK(r.roles[0] == ChainRole::AllPlus);
    CHECK(r.roles[1] == ChainRole::Parallel);

    auto H = load_model("FIX-HEX").geometry;
    // along n_1 = (0,1): chain 1 up, the others down
    CHECK(rs(H, dir({0, 1})) == "(+,-,-)");
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> c(-50, 50);
    for (int t = 0; t < 2000; ++t) {
        ExactVec v = {Exact(c(rng)), Exact(c(rng))};
        if (v[0].is_zero() && v[1].is_zero()) continue;
        auto s = rho(H, Direction(v));
        CHECK(s != parse_signature("(+,+,+)"));
        CHECK(s != parse_signature("(-,-,-)"));
    }
    CHECK_FALSE(in_image(H, parse_signature("(+,+,+)")));
}

TEST_CASE("planar images") {
    auto G = load_model("FIX-Z2").geometry;
    auto img = rho_image(G);
    CHECK(img.entries.size() == 8);
    std::size_t arcs = 0, points = 0;
    for (const auto& e : img.entries) {
        REQUIRE(e.cells.size() == 1);
        (img.cells[e.cells[0]].arc ? arcs : points)++;
        CHECK(class_codim(e.signature).value == (img.cells[e.cells[0]].arc ? 2u : 1u));
    }
    CHECK(arcs == 4);
    CHECK(points == 4);
    CHECK(signature_str(img.cells[0].signature) == "(+,0)");  // angle 0 first

    auto H = load_model("FIX-HEX").geometry;
    auto hi = rho_image(H);
    CHECK(hi.entries.size() == 12);
    CHECK(single_cycle(hi.signatures()));
    CHECK(safe_components(hi.signatures()).size() == 1);
    CHECK(safe_components(img.signatures()).size() == 1);
    for (const auto& e : hi.entries) {
        auto d = realizing_direction_2d(H, e.signature);
        REQUIRE(d.has_value());
        CHECK(rho(H, *d) == e.signature);
    }
    CHECK_FALSE(realizing_direction_2d(H, parse_signature("(+,0,0)")).has_value());
}

TEST_CASE("the planar image agrees with exact feasibility of sign patterns") {
    for (const char* f : {"FIX-Z2", "FIX-HEX", "FIX-LINE1"}) {
        auto G = load_model(f).geometry;
        std::set<Signature> img;
        for (const auto& s : rho_image(G).signatures()) img.insert(s);
        for (const auto& s : all_signatures(G.chains())) {
            CAPTURE(std::string(f));
            CAPTURE(signature_str(s));
            CHECK(in_image(G, s) == (img.count(s) > 0));
        }
    }
    // non-uniform: the principal class is hit by the vertical directions
    auto L = load_model("FIX-LINE1").geometry;
    CHECK(in_image(L, Signature::principal(1)));
    CHECK(rho_image(L).entries.size() == 3);
}

TEST_CASE("cubical models of every dimension hit every non-principal class") {
    for (int d = 1; d <= 4; ++d) {
        auto G = load_model("FIX-Z" + std::to_string(d)).geometry;
        for (const auto& s : all_signatures(G.chains()))
            CHECK(in_image(G, s) == (class_codim(s).value > 0));
    }
}

TEST_CASE("closure formula") {
    for (const char* f : {"FIX-Z2", "FIX-HEX", "FIX-LINE1"}) {
        auto rep = closure_check(load_model(f).geometry);
        CAPTURE(std::string(f));
        CHECK_MESSAGE(rep.ok, rep.first_violation);
        for (const auto& row : rep.rows) {
            CHECK(row.ff);
            if (row.ff0_applies) CHECK(row.ff0);
        }
    }
}

TEST_CASE("line restriction") {
    auto G = load_model("FIX-Z2").geometry;
    // the x-axis itself lies in a wall
    CHECK_ERRC(restrict_to_line(G, {{Exact(0), Exact(0)}, {Exact(1), Exact(0)}}), Errc::LineInsideWall);
    Line L{{Exact(0), Exact(Rational(1, 2))}, {Exact(1), Exact(0)}};
    auto R = restrict_to_line(G, L, 3);
    CHECK(R.crossing == std::vector<std::size_t>{0});
    CHECK(R.parallel == std::vector<std::size_t>{1});
    CHECK(R.parallel_cuts == std::vector<std::int64_t>{1});
    CHECK(R.walls.size() == 7);
    CHECK(R.collapsed == 0);
    CHECK(R.commutes);
    CHECK(signature_str(R.plus_end.pushed) == "(+,0)");
    CHECK(signature_str(R.minus_end.pushed) == "(-,0)");
    // a point between walls pulls back to its chamber
    auto u = pullback(G, L, CutState::at(0), Exact(Rational(5, 2)));
    CHECK(u == ChainUltrafilter::from_cuts({3, 1}));

    auto H = load_model("FIX-HEX").geometry;
    auto RH = restrict_to_line(H, {{Exact(0), Exact(Rational(1, 2))}, {Exact(1), Exact(0)}}, 3);
    CHECK(RH.parallel == std::vector<std::size_t>{0});
    CHECK(RH.collapsed == 0);
    CHECK(RH.commutes);
    // through a vertex of the tiling the three families meet the line together
    auto RV = restrict_to_line(H, {{Exact(0), Exact(0)}, {Exact(0), Exact(1)}}, 3);
    CHECK(RV.collapsed > 0);
    CHECK(RV.commutes);
}

TEST_CASE("random lines: ends separate and the restriction square commutes") {
    std::mt19937_64 rng(31);
    for (const char* f : {"FIX-Z2", "FIX-HEX"}) {
        auto G = load_model(f).geometry;
        for (int t = 0; t < 100; ++t) {
            Line L = random_line(G, rng, std::string(f) == "FIX-HEX" && t % 2);
            auto E = line_end_incomparability(G, L);
            CHECK(E.incomparable);
            CHECK(restrict_to_line(G, L, 3).commutes);
        }
    }
    // a non-uniform model loses the separation along the missing direction
    auto L1 = load_model("FIX-LINE1").geometry;
    auto E = line_end_incomparability(L1, {{Exact(Rational(1, 2)), Exact(0)}, {Exact(0), Exact(1)}});
    CHECK_FALSE(E.uniform);
    CHECK_FALSE(E.incomparable);
}
