#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "common.hpp"
#include "roller/chain_family.hpp"
#include "roller/error.hpp"

using namespace roller;

namespace {

ChainUltrafilter U(std::initializer_list<CutState> cs) { return ChainUltrafilter{std::vector<CutState>(cs)}; }
CutState C(std::int64_t c) { return CutState::at(c); }
const CutState P = CutState::plus();
const CutState M = CutState::minus();

std::vector<CutState> states(std::int64_t lo, std::int64_t hi) {
    std::vector<CutState> out = {M, P};
    for (auto c = lo; c <= hi; ++c) out.push_back(C(c));
    return out;
}

}  // namespace

TEST_CASE("literals") {
    auto F = ChainFamilyPocSet{{"r", "s", "t"}};
    auto u = parse_chain_ultrafilter(F, "r:+inf s:cut(0) t:cut(-3)");
    CHECK(u == U({P, C(0), C(-3)}));
    CHECK(chain_ultrafilter_str(F, u) == "r:+inf s:cut(0) t:cut(-3)");
    CHECK(parse_signature("(+,0,-)").ends == std::vector<End>{End::Plus, End::Fin, End::Minus});
    CHECK(signature_str(parse_signature("(+,0,-)")) == "(+,0,-)");
    CHECK_ERRC(parse_signature("(+,x)"), Errc::MalformedInput);
    CHECK_ERRC(parse_chain_ultrafilter(F, "r:+inf"), Errc::MalformedInput);
}

TEST_CASE("classes") {
    CHECK(cf_class(U({C(0), C(7)})) == Signature::principal(2));
    CHECK(signature_str(cf_class(U({P, C(0)}))) == "(+,0)");
    CHECK(signature_str(cf_class(U({M, P, P}))) == "(-,+,+)");
}

TEST_CASE("delta and median agree with a finite window poc-set") {
    const std::int64_t W = 4;
    auto win = make_window(2, W);
    auto sts = states(-3, 3);
    for (const auto& a0 : sts)
        for (const auto& a1 : sts)
            for (const auto& b0 : sts)
                for (const auto& b1 : sts) {
                    auto a = U({a0, a1}), b = U({b0, b1});
                    auto ra = win.restrict(a), rb = win.restrict(b);
                    REQUIRE(is_ultrafilter(win.pocset, ra.members).ok);
                    Distance d = delta(a, b);
                    if (!d.infinite) CHECK(d.value == delta(ra, rb));
                    else CHECK(cf_class(a) != cf_class(b));
                }
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> pick(0, sts.size() - 1);
    for (int t = 0; t < 3000; ++t) {
        auto a = U({sts[pick(rng)], sts[pick(rng)]}), b = U({sts[pick(rng)], sts[pick(rng)]}),
             c = U({sts[pick(rng)], sts[pick(rng)]});
        CHECK(win.restrict(median(a, b, c)) == median(win.restrict(a), win.restrict(b), win.restrict(c)));
    }
    CHECK(delta(U({P, C(0)}), U({C(0), C(0)})).infinite);
}

TEST_CASE("truncation against the window definition") {
    CHECK(cf_truncate(U({P, C(0)}), {0, 5, false}) == U({C(5), C(0)}));
    CHECK(cf_truncate(U({C(9), C(2)}), {0, 5, false}) == U({C(5), C(2)}));
    CHECK_ERRC(cf_truncate(U({C(0), C(0)}), ChainHalfspace{0, 5, false}), Errc::NotMember);
    // deeper then shallower equals shallower
    auto xi = U({P, C(0)});
    CHECK(cf_truncate(cf_truncate(xi, {0, 7, false}), {0, 3, false}) == cf_truncate(xi, {0, 3, false}));

    const std::int64_t W = 4;
    auto win = make_window(1, W);
    const auto& Pw = win.pocset;
    for (const auto& s : states(-4, 5))
        for (std::int64_t n = -W; n <= W; ++n)
            for (bool st : {false, true}) {
                ChainHalfspace b{0, n, st};
                auto xi1 = U({s});
                if (!xi1.contains(b)) continue;
                auto r = cf_truncate(xi1, b);
                auto rw = win.restrict(r);
                CHECK(is_ultrafilter(Pw, rw.members).ok);
                // xi minus {h <= b} plus {h >= b*}
                Element eb = win.element(b);
                auto base = win.restrict(xi1);
                for (Element e = 0; e < 2 * Pw.pairs(); ++e) {
                    bool want = Pw.leq(e, eb) ? false : (Pw.leq(star(e), eb) ? true : bool(base.members[e]));
                    CHECK(bool(rw.members[e]) == want);
                }
                CHECK((cf_class(r) == cf_class(xi1)) == s.is_cut());
            }
}

TEST_CASE("class order matches window closure, exhaustively for k <= 3") {
    CHECK(class_leq(parse_signature("(0,0)"), parse_signature("(+,0)")));
    CHECK(class_leq(parse_signature("(+,0)"), parse_signature("(+,+)")));
    CHECK_FALSE(class_leq(parse_signature("(+,0)"), parse_signature("(-,0)")));
    CHECK_FALSE(class_leq(parse_signature("(-,0)"), parse_signature("(+,0)")));
    CHECK_ERRC(class_leq(parse_signature("(+)"), parse_signature("(+,0)")), Errc::ChainCountMismatch);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto all = all_signatures(k);
        for (const auto& a : all)
            for (const auto& b : all) {
                ChainUltrafilter rep;
                for (auto e : b.ends) rep.chains.push_back(e == End::Plus ? P : (e == End::Minus ? M : C(0)));
                bool closure = true;
                for (std::int64_t W : {1, 2, 4}) closure = closure && window_closure_contains(a, rep, W);
                CHECK(class_leq(a, b) == closure);
            }
    }
}

TEST_CASE("codimension, gcd, boundary poset") {
    CHECK(class_codim(Signature::principal(3)).value == 0);
    auto c = class_codim(parse_signature("(+,-)"));
    CHECK(c.value == 2);
    CHECK(signature_str(c.witness) == "(+,0)");
    CHECK(class_codim(parse_signature("(+,+,+)")).value == 3);
    CHECK(signature_str(class_gcd(parse_signature("(+,+)"), parse_signature("(+,-)"))) == "(+,0)");

    for (std::size_t k = 1; k <= 3; ++k) {
        auto all = all_signatures(k);
        CHECK(all.size() == (k == 1 ? 3u : k == 2 ? 9u : 27u));
        for (const auto& s : all) {
            auto cd = class_codim(s);
            if (cd.value > 0) {
                CHECK(class_codim(cd.witness).value == cd.value - 1);
                CHECK(class_leq(cd.witness, s));
                CHECK(cd.witness != s);
            }
        }
        // gcd is the median with Pi on representatives, and the greatest common lower bound
        for (const auto& a : all)
            for (const auto& b : all) {
                auto rep = [](const Signature& s) {
                    ChainUltrafilter u;
                    for (auto e : s.ends) u.chains.push_back(e == End::Plus ? P : (e == End::Minus ? M : C(0)));
                    return u;
                };
                auto g = class_gcd(a, b);
                CHECK(cf_class(median(rep(Signature::principal(k)), rep(a), rep(b))) == g);
                CHECK(class_leq(g, a));
                CHECK(class_leq(g, b));
                for (const auto& l : all)
                    if (class_leq(l, a) && class_leq(l, b)) CHECK(class_leq(l, g));
            }
        auto R = roller_boundary(k);
        CHECK(R.classes.size() == all.size());
        for (std::size_t i = 0; i < R.classes.size(); ++i) CHECK(R.leq(0, i));
    }
}

TEST_CASE("projection and flow") {
    auto s = parse_signature("(+,0)");
    CHECK(project_to_class(s, U({C(3), C(-2)})) == U({P, C(-2)}));
    CHECK(project_to_class(s, project_to_class(s, U({C(3), C(-2)}))) == U({P, C(-2)}));
    CHECK(project_to_class(Signature::principal(2), U({C(3), C(-2)})) == U({C(3), C(-2)}));
    CHECK(flow_step(s, U({C(0), C(0)})) == U({C(1), C(0)}));
    CHECK(flow_step(Signature::principal(2), U({C(4), C(0)})) == U({C(4), C(0)}));
    auto pm = parse_signature("(+,-)");
    auto x = U({C(0), C(0)});
    for (int n = 0; n < 5; ++n) x = flow_step(pm, x);
    CHECK(x == U({C(5), C(-5)}));
    CHECK_ERRC(flow_step(pm, U({P, C(0)})), Errc::NotPrincipal);

    // the flow is the minimal-set flip of the elements pointing away from the class
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> cut(-5, 5), end(0, 2);
    for (int t = 0; t < 300; ++t) {
        std::size_t k = 1 + t % 4;
        Signature sg;
        ChainUltrafilter u;
        for (std::size_t i = 0; i < k; ++i) {
            sg.ends.push_back(static_cast<End>(end(rng)));
            u.chains.push_back(C(cut(rng)));
        }
        ChainUltrafilter v = u;
        for (const auto& a : chain_min_set(u)) {
            End e = sg.ends[a.chain];
            // a plain h(c-1) points down, a star h(c)* points up
            if ((e == End::Plus && a.star) || (e == End::Minus && !a.star)) v.chains[a.chain] = chain_flip(u, a).chains[a.chain];
        }
        CHECK(flow_step(sg, u) == v);
    }
}

TEST_CASE("averaging") {
    auto sigma = U({P, C(0)});
    std::vector<ChainUltrafilter> same(6, sigma);
    for (const auto& a : average_sequence(same, sigma)) CHECK(a == sigma);
    CHECK_ERRC(average_sequence({}, sigma), Errc::EmptySequence);

    std::vector<ChainUltrafilter> seq;
    for (int n = 1; n <= 30; ++n) seq.push_back(U({C(n), C(n % 2 ? -1 : 1)}));
    auto av = average_sequence(seq, sigma);
    auto S = cf_class(sigma);
    std::uint64_t last = UINT64_MAX;
    for (const auto& a : av) {
        auto d = delta(project_to_class(S, a), sigma);
        REQUIRE_FALSE(d.infinite);
        CHECK(d.value <= last);
        last = d.value;
    }
    CHECK(last == 0);
}

TEST_CASE("geodesic limits") {
    auto start = U({C(0), C(0)});
    CHECK(limit_of_geodesic(start, Schedule{{}, {{0, 1}}}) == U({P, C(0)}));
    CHECK(limit_of_geodesic(start, Schedule{{}, {{0, 1}, {1, 1}}}) == U({P, P}));
    CHECK(limit_of_geodesic(start, Schedule{{{1, -1}, {1, -1}}, {{0, -1}}}) == U({M, C(-2)}));
    try {
        limit_of_geodesic(start, Schedule{{{0, 1}, {0, -1}}, {}});
        FAIL("expected NotGeodesic");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotGeodesic);
        CHECK(e.witness() == "steps 1 and 2 flip h_1(0)");
    }
    auto seq = expand_schedule(start, Schedule{{}, {{0, 1}, {1, -1}}}, 10);
    CHECK(seq.size() == 11);
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j < seq.size(); ++j)
            CHECK(delta(seq[i], seq[j]).value == static_cast<std::uint64_t>(i > j ? i - j : j - i));
}
