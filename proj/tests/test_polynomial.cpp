#include "test_support.hpp"

#include "wronski/errors.hpp"
#include "wronski/polynomial.hpp"
#include "wronski/wronski.hpp"

#include <doctest.h>

#include <random>

using namespace wronski;

namespace {

const std::vector<std::string> xy{"x1", "x2"};

ExactPolynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms, unsigned deg) {
    std::uniform_int_distribution<unsigned> e(0, deg);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    ExactPolynomial p(vars);
    for (int t = 0; t < terms; ++t) {
        ExponentVector ex;
        for (std::size_t v = 0; v < vars.size(); ++v) ex.push_back(e(rng));
        p.add_term(ex, Rational(num(rng), den(rng)));
    }
    return p;
}

struct Line {
    PointConfiguration config{1, {{0}, {1}, {2}}};
    Lifting lifting{{1, 0, 1}};
    VertexColoring coloring = vertex_coloring(as_simplicial_complex(regular_subdivision(config, lifting)));
};

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("grlex order and printing") {
    GrlexLess less;
    CHECK(less({0, 1}, {1, 1}));
    CHECK(less({0, 2}, {1, 1}));
    CHECK_FALSE(less({1, 1}, {0, 2}));
    CHECK(total_degree({3, 0, 15}) == 18);

    auto p = ExactPolynomial::parse("x2^3 + x1*x2*s + s^12 + x1^3*s^15", {"x1", "x2", "s"});
    CHECK(p.to_string() == "x1^3*s^15 + s^12 + x1*x2*s + x2^3");
    CHECK(ExactPolynomial(xy).to_string() == "0");
    CHECK(ExactPolynomial::parse("0", xy).is_zero());
    CHECK(ExactPolynomial::parse("-3/2*x1 + 1", xy).to_string() == "-3/2*x1 + 1");
    CHECK(ExactPolynomial::parse("x1 - x1", xy).is_zero());
    CHECK_THROWS_AS(ExactPolynomial::parse("x1 + y", xy), ParseError);
    CHECK_THROWS_AS(ExactPolynomial::parse("x1 +", xy), ParseError);
}

TEST_CASE("arithmetic and substitution") {
    const auto a = ExactPolynomial::parse("x1 + x2", xy);
    const auto b = ExactPolynomial::parse("x1 - x2", xy);
    CHECK((a * b).to_string() == "x1^2 - x2^2");
    CHECK((a + b) == ExactPolynomial::parse("2*x1", xy));
    CHECK((a - a).is_zero());
    CHECK((Rational(1, 2) * a).to_string() == "1/2*x1 + 1/2*x2");

    const auto p = ExactPolynomial::parse("x1^2*x2 + 3*x2", xy);
    const auto q = p.substitute(1, 2);
    CHECK(q.vars() == std::vector<std::string>{"x1"});
    CHECK(q.to_string() == "2*x1^2 + 6");
    CHECK(p.evaluate({Rational(1, 2), 3}) == Rational(3, 4) + 9);
    CHECK_THROWS_AS(a + ExactPolynomial::parse("x1", {"x1"}), DimensionMismatch);
}

TEST_CASE("center ideal of the reference instance") {
    const auto ideal = example::center_ideal();
    CHECK(ideal.vars() == std::vector<std::string>{"x1", "x2", "s"});
    REQUIRE(ideal.size() == 3);
    CHECK(ideal[0].to_string() == "x1^3*s^15 + s^12 + x1*x2*s + x2^3");
    // x1^2*s^9, not x1^3*s^9: point (2,0) carries lambda = 9 and (3,0) carries 15.
    CHECK(ideal[1].to_string() == "x1^2*s^9 + x2*s^3 + x1*x2^2");
    CHECK(ideal[2].to_string() == "x1*s^8 + x1^2*x2*s^5 + x2^2");
}

TEST_CASE("center ideal on a segment") {
    const Line line;
    CHECK(line.coloring.classes() == std::vector<IndexSet>{{0, 2}, {1}});
    const auto ideal = wronski_center_ideal(line.config, line.lifting, line.coloring);
    CHECK(ideal.vars() == std::vector<std::string>{"x1", "s"});
    CHECK(ideal[0] == ExactPolynomial::parse("s + s*x1^2", {"x1", "s"}));
    CHECK(ideal[1] == ExactPolynomial::parse("x1", {"x1", "s"}));
}

TEST_CASE("center ideal of a unimodular facet with zero lifting is monomial") {
    const auto unit = simplex_lattice_points(2, 1);
    const Lifting zero{{0, 0, 0}};
    const auto coloring = vertex_coloring(as_simplicial_complex(regular_subdivision(unit, zero)));
    const auto ideal = wronski_center_ideal(unit, zero, coloring);
    CHECK(ideal[0].to_string() == "1");
    CHECK(ideal[1].to_string() == "x2");
    CHECK(ideal[2].to_string() == "x1");
}

TEST_CASE("exponent soundness of the center ideal") {
    const auto config = example::points();
    const auto lifting = example::lifting();
    const auto ideal = example::center_ideal();
    std::multiset<ExponentVector> seen;
    for (const auto& g : ideal.polynomials())
        for (const auto& [e, c] : g.terms()) {
            CHECK(c == 1);
            seen.insert(e);
        }
    std::multiset<ExponentVector> expected;
    for (std::size_t j = 0; j < config.size(); ++j)
        expected.insert({static_cast<std::uint32_t>(config[j][0]), static_cast<std::uint32_t>(config[j][1]),
                         static_cast<std::uint32_t>(lifting.values[j])});
    CHECK(seen == expected);
    for (const auto& g : ideal.polynomials()) {
        std::uint64_t xdeg = 0;
        for (const auto& [e, c] : g.terms()) xdeg = std::max<std::uint64_t>(xdeg, e[0] + e[1]);
        CHECK(xdeg <= 3);
    }
}

TEST_CASE("Wronski polynomial and system") {
    const auto config = example::points();
    const auto lifting = example::lifting();
    const auto coloring = example::coloring();
    const auto w = wronski_polynomial(config, lifting, coloring, {19, 8, -19}, Rational(1));
    const auto g = [&](const char* s) { return ExactPolynomial::parse(s, xy); };
    const auto manual = Rational(19) * g("1 + x2^3 + x1*x2 + x1^3") + Rational(8) * g("x2 + x1*x2^2 + x1^2") -
                        Rational(19) * g("x2^2 + x1 + x1^2*x2");
    CHECK(w == manual);

    const auto sys = example::wronski_system();
    CHECK(sys.vars() == xy);
    CHECK(sys[0] == manual);
    CHECK(sys[1].to_string() ==
          "39*x1^3 + 42*x1^2*x2 + 7*x1*x2^2 + 39*x2^3 + 7*x1^2 + 39*x1*x2 + 42*x2^2 + 42*x1 + 7*x2 + 39");

    const auto symbolic = wronski_polynomial(config, lifting, coloring, {1, 0, 0}, std::nullopt);
    CHECK(symbolic == example::center_ideal()[0]);
    CHECK(wronski_polynomial(config, lifting, coloring, {0, 0, 0}, Rational(3)).is_zero());

    const auto same = wronski_system(config, lifting, coloring, CoefficientChoice{{{1, 2, 3}, {1, 2, 3}}}, 2);
    CHECK(same[0] == same[1]);

    const Rational s0(3, 2);
    const auto basis = wronski_system(config, lifting, coloring, CoefficientChoice{{{1, 0, 0}, {0, 1, 0}}}, s0);
    CHECK(basis[0] == example::center_ideal()[0].substitute(2, s0));
    CHECK(basis[1] == example::center_ideal()[1].substitute(2, s0));

    CHECK_THROWS_AS(wronski_polynomial(config, lifting, coloring, {1, 2}, std::nullopt), DimensionMismatch);
    CHECK_THROWS_AS(wronski_system(config, lifting, coloring, CoefficientChoice{{{1, 2, 3}}}, 1),
                    DimensionMismatch);
}

TEST_CASE("Kushnirenko bound and Newton polytopes") {
    CHECK(kushnirenko_bound(example::points()) == 9);
    CHECK(kushnirenko_bound(simplex_lattice_points(2, 1)) == 1);
    CHECK(kushnirenko_bound(PointConfiguration(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 2);
    CHECK(kushnirenko_bound(simplex_lattice_points(3, 2)) == 8);

    const auto np = newton_polytope(example::center_ideal()[0]);
    std::set<LatticePoint> pts(np.points().begin(), np.points().end());
    CHECK(pts == std::set<LatticePoint>{{0, 0, 12}, {0, 3, 0}, {1, 1, 1}, {3, 0, 15}});
    CHECK(newton_polytope(ExactPolynomial::constant(xy, 5)).points() == std::vector<LatticePoint>{{0, 0}});
    CHECK(newton_polytope(ExactPolynomial::parse("x1*x2 + x1*x2", xy)).points() ==
          std::vector<LatticePoint>{{1, 1}});
    CHECK_THROWS_AS(newton_polytope(ExactPolynomial(xy)), ZeroPolynomial);
}

}  // TEST_SUITE

TEST_SUITE("polynomial-properties") {

TEST_CASE("linearity tie between systems and center-ideal generators") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    const auto ideal = example::center_ideal();
    for (int trial = 0; trial < 25; ++trial) {
        CoefficientChoice c;
        for (int k = 0; k < 2; ++k) {
            std::vector<Rational> row;
            for (int i = 0; i < 3; ++i) row.emplace_back(num(rng), den(rng));
            c.rows.push_back(row);
        }
        const Rational s0(num(rng), den(rng));
        const auto sys = wronski_system(example::points(), example::lifting(), example::coloring(), c, s0);
        for (int k = 0; k < 2; ++k) {
            ExactPolynomial sum(xy);
            for (int i = 0; i < 3; ++i) sum += c.rows[k][i] * ideal[i].substitute(2, s0);
            CHECK(sys[k] == sum);
        }
    }
}

TEST_CASE("coloring permutation permutes the generators") {
    auto coloring = example::coloring();
    for (auto& [point, c] : coloring.color) c = (c + 1) % 3;
    const auto permuted = wronski_center_ideal(example::points(), example::lifting(), coloring);
    CHECK(permuted == example::center_ideal());
}

TEST_CASE("printing is a fixed point of parse") {
    std::mt19937_64 rng(9);
    const std::vector<std::string> vars{"x1", "x2", "s"};
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, vars, 1 + trial % 6, 4);
        const auto text = p.to_string();
        const auto q = ExactPolynomial::parse(text, vars);
        CHECK(q == p);
        CHECK(q.to_string() == text);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_poly(rng, xy, 4, 3);
        const auto b = random_poly(rng, xy, 3, 3);
        const auto c = random_poly(rng, xy, 3, 2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const std::vector<Rational> pt{Rational(2, 3), Rational(-5, 2)};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

}  // TEST_SUITE
