#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "common.hpp"
#include "roller/error.hpp"
#include "roller/exact.hpp"

using namespace roller;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a + Rational(3, 2) == Rational(0));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_ERRC(Rational(1, 0), Errc::DivisionByZero);
    CHECK_ERRC(Rational(INT64_MAX) + Rational(1), Errc::Overflow);
    CHECK_ERRC(Rational::parse("1/x"), Errc::MalformedInput);
}

TEST_CASE("sqrt3 ring: signs, floors, inverse") {
    Exact r3 = Exact::sqrt3();
    CHECK(r3 * r3 == Exact(3));
    CHECK((Exact(1) - r3).sign() < 0);
    CHECK((Exact(2) - r3).sign() > 0);
    CHECK((Exact(Rational(7, 4)) - r3).sign() > 0);  // 49/16 > 3
    CHECK(r3.floor() == 1);
    CHECK((-r3).floor() == -2);
    CHECK((-r3).ceil() == -1);
    Exact x(Rational(1), Rational(2));
    CHECK(x * x.inverse() == Exact(1));
    CHECK(Exact::parse("-√3/2") == Exact(Rational(0), Rational(-1, 2)));
    CHECK(Exact::parse("sqrt(3)") == r3);
    CHECK(Exact::parse("3√3/4") == Exact(Rational(0), Rational(3, 4)));
    CHECK(Exact::parse("1+2√3") == Exact(Rational(1), Rational(2)));
    CHECK(Exact::parse("-1/2") == Exact(Rational(-1, 2)));
    CHECK(Exact(Rational(0), Rational(-1, 2)).str() == "-√3/2");
    CHECK(Exact(Rational(1), Rational(2)).str() == "1+2√3");
    CHECK_ERRC(Exact(0).inverse(), Errc::DivisionByZero);
}

TEST_CASE("sign agrees with doubles away from zero") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int i = 0; i < 2000; ++i) {
        Exact x(Rational(d(rng), 1 + (d(rng) + 40) % 9), Rational(d(rng), 1 + (d(rng) + 40) % 7));
        double v = x.to_double();
        if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
        CHECK(x.floor() <= v + 1e-9);
        CHECK(x.floor() + 1 > v - 1e-9);
    }
}

namespace {

// vertex oracle: a bounded closed polygon is non-empty iff some pairwise line
// intersection satisfies every constraint
bool vertex_feasible(const std::vector<LinearConstraint>& cs) {
    auto ok = [&](const Exact& x, const Exact& y) {
        for (const auto& c : cs)
            if (c.a[0] * x + c.a[1] * y > c.b) return false;
        return true;
    };
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            Exact det = cs[i].a[0] * cs[j].a[1] - cs[i].a[1] * cs[j].a[0];
            if (det.is_zero()) continue;
            Exact x = (cs[i].b * cs[j].a[1] - cs[i].a[1] * cs[j].b) / det;
            Exact y = (cs[i].a[0] * cs[j].b - cs[i].b * cs[j].a[0]) / det;
            if (ok(x, y)) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("elimination matches the vertex oracle on random bounded polygons") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-4, 4);
    int yes = 0;
    for (int t = 0; t < 600; ++t) {
        std::vector<LinearConstraint> cs = {
            {{Exact(1), Exact(0)}, Exact(10)}, {{Exact(-1), Exact(0)}, Exact(10)},
            {{Exact(0), Exact(1)}, Exact(10)}, {{Exact(0), Exact(-1)}, Exact(10)}};
        int m = 2 + t % 4;
        for (int i = 0; i < m; ++i) {
            Exact a0(Rational(c(rng)), Rational(t % 3 == 0 ? c(rng) : 0));
            cs.push_back({{a0, Exact(c(rng))}, Exact(c(rng))});
        }
        bool f = feasible(cs, 2);
        yes += f;
        CHECK(f == vertex_feasible(cs));
    }
    CHECK(yes > 50);
    CHECK(yes < 590);
}

TEST_CASE("elimination in three variables: a simplex and an empty one") {
    auto e = [](std::int64_t v) { return Exact(v); };
    std::vector<LinearConstraint> simplex = {{{e(-1), e(0), e(0)}, e(0)},
                                            {{e(0), e(-1), e(0)}, e(0)},
                                            {{e(0), e(0), e(-1)}, e(0)},
                                            {{e(1), e(1), e(1)}, e(1)}};
    CHECK(feasible(simplex, 3));
    simplex.push_back({{e(-1), e(-1), e(-1)}, e(-2)});
    CHECK_FALSE(feasible(simplex, 3));
}
