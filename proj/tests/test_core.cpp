#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qwalk;
using qwalk::testing::random_rational;
using qwalk::testing::random_scalar;
using qwalk::testing::random_state;

TEST_CASE("rational arithmetic stays canonical", "[core][rational]") {
    std::mt19937_64 rng(20240601);
    Rational acc = 1;
    for (int i = 0; i < 500; ++i) {
        Rational q = random_rational(rng);
        switch (i % 4) {
        case 0: acc += q; break;
        case 1: acc -= q; break;
        case 2: acc *= q; break;
        case 3:
            if (q != 0)
                acc /= q;
            break;
        }
        REQUIRE(is_canonical(acc));
    }
    REQUIRE(make_rational(6, -4) == make_rational(-3, 2));
    REQUIRE(rational_to_string(Rational(0)) == "0/1");
    REQUIRE(rational_to_string(make_rational(-6, 4)) == "-3/2");
    REQUIRE(parse_rational("-6/4") == make_rational(-3, 2));
    REQUIRE_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
}

TEST_CASE("scalar field operations", "[core][scalar]") {
    Scalar z(make_rational(1, 2), make_rational(-1, 3));
    REQUIRE(z.conj() == Scalar(make_rational(1, 2), make_rational(1, 3)));
    REQUIRE(z.norm_sq() == make_rational(13, 36));
    REQUIRE(z * z.conj() == Scalar(z.norm_sq()));
    Scalar w(Rational(2), Rational(1));
    REQUIRE((z / w) * w == z);
    REQUIRE_THROWS_AS(z / Scalar(), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        REQUIRE((a + b) * (a - b) == a * a - b * b);
        REQUIRE(is_canonical((a * b).re()));
        REQUIRE(is_canonical((a * b).im()));
    }
}

TEST_CASE("support", "[core]") {
    REQUIRE(support(WaveFunction::zero(2)).empty());

    auto psi = moving_min_state(2, Eigenvalue::plus_one());
    REQUIRE(support(psi) == std::set<LatticePoint>{LatticePoint{0, 0},
                                                   LatticePoint{1, 0},
                                                   LatticePoint{0, 1},
                                                   LatticePoint{1, 1}});

    std::set<LatticePoint> nine;
    for (Coord x : {-1, 0, 1})
        for (Coord y : {-1, 0, 1})
            nine.insert(LatticePoint{x, y});
    REQUIRE(support(nine_point_state()) == nine);

    // zero vectors are pruned at construction
    WaveFunction::EntryMap m;
    m[LatticePoint{0, 0}] = AmpVector(4);
    REQUIRE(WaveFunction(2, std::move(m)).is_zero());
}

TEST_CASE("gamma component sums", "[core]") {
    auto psi = moving_min_state(2, Eigenvalue::plus_one());
    REQUIRE(gamma(psi, LatticePoint{0, 0}) == Scalar(2));

    auto ff = flipflop_min_state(2, Eigenvalue::plus_one());
    REQUIRE(gamma(ff, LatticePoint{0, 0}) == Scalar(0));

    REQUIRE(gamma(psi, LatticePoint{5, 5}) == Scalar(0));
    REQUIRE_THROWS_AS(gamma(psi, LatticePoint{0, 0, 0}), std::invalid_argument);

    // cross-check against a naive loop over components
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto s = random_state(rng, 2);
        for (const auto& [x, v] : s.entries()) {
            Scalar sum;
            for (int j = 0; j < s.components(); ++j)
                sum += s.component(x, j);
            REQUIRE(gamma(s, x) == sum);
        }
    }
}

TEST_CASE("to_measure squared norms", "[core]") {
    auto nine = nine_point_state();
    Measure mu = to_measure(nine);
    REQUIRE(mu.at(LatticePoint{0, 0}) == Rational(16));
    REQUIRE(mu.at(LatticePoint{1, 1}) == Rational(2));
    REQUIRE(support(nine).size() == mu.entries().size());
    REQUIRE(to_measure(WaveFunction::zero(2)).entries().empty());
}

TEST_CASE("translate moves the support exactly", "[core]") {
    auto psi = moving_min_state(2, Eigenvalue::plus_one());
    REQUIRE(translate(psi, LatticePoint::origin(2)) == psi);

    LatticePoint v{3, -2};
    auto moved = translate(psi, v);
    std::set<LatticePoint> expect;
    for (const auto& p : support(psi))
        expect.insert(p + v);
    REQUIRE(support(moved) == expect);
    REQUIRE(translate(moved, -v) == psi);
    REQUIRE_THROWS_AS(translate(psi, LatticePoint{1}), std::invalid_argument);
}

TEST_CASE("linear_combine", "[core]") {
    auto psi = moving_min_state(2, Eigenvalue::minus_one());
    REQUIRE(linear_combine({{Scalar(1), psi}, {Scalar(-1), psi}}).is_zero());

    auto doubled = Scalar(2) * psi;
    for (const auto& [x, v] : psi.entries())
        for (int j = 0; j < 4; ++j)
            REQUIRE(doubled.component(x, j) == Scalar(2) * psi.component(x, j));
    REQUIRE(to_measure(doubled).at(LatticePoint{0, 0}) ==
            Rational(4) * to_measure(psi).at(LatticePoint{0, 0}));

    // four translated blocks with the nine-point g reproduce the printed table
    std::vector<std::pair<Scalar, WaveFunction>> terms;
    for (const auto& [p, c] : nine_point_g())
        terms.emplace_back(c, moving_min_state(2, Eigenvalue::plus_one(), p));
    REQUIRE(linear_combine(terms) == nine_point_state());

    REQUIRE_THROWS_AS(linear_combine({}), std::invalid_argument);
}

TEST_CASE("measure scales by |c|^2 exactly", "[core][property]") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto psi = random_state(rng, d);
        Scalar c = random_scalar(rng);
        auto lhs = to_measure(linear_combine({{c, psi}}));
        Rational f = c.norm_sq();
        Measure mu = to_measure(psi);
        Measure::EntryMap scaled;
        for (const auto& [x, v] : mu.entries())
            scaled[x] = f * v;
        REQUIRE(lhs == Measure(d, std::move(scaled)));
    }
}

TEST_CASE("support of a sum is contained in the union", "[core][property]") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto a = random_state(rng, d);
        auto b = random_state(rng, d);
        auto sum_support = support(a + b);
        auto u = support(a);
        auto bs = support(b);
        u.insert(bs.begin(), bs.end());
        for (const auto& p : sum_support)
            REQUIRE(u.count(p) == 1);
    }
}
