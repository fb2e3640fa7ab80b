#include "test_support.hpp"

#include "wronski/errors.hpp"
#include "wronski/mixed_volume.hpp"

#include <doctest.h>

using namespace wronski;

TEST_SUITE("mixed-volume") {

TEST_CASE("normalization MV(P, P) = 2 vol(P)") {
    const auto p = example::points();
    CHECK(mixed_volume({p, p}) == 9);
    CHECK(mixed_volume({p, p}) == kushnirenko_bound(p));
    const auto t = simplex_lattice_points(3, 2);
    CHECK(mixed_volume({t, t, t}) == kushnirenko_bound(t));
    CHECK(mixed_volume({PointConfiguration(1, {{0}, {5}})}) == 5);
}

TEST_CASE("unit segments span the unit square") {
    const PointConfiguration e1(2, {{0, 0}, {1, 0}});
    const PointConfiguration e2(2, {{0, 0}, {0, 1}});
    CHECK(mixed_volume({e1, e2}) == 1);
    CHECK(mixed_volume({e1, e1}) == 0);
}

TEST_CASE("center-ideal Newton polytopes") {
    // 54 confirmed independently with floating convex hulls of the Minkowski sums
    const auto ideal = example::center_ideal();
    std::vector<PointConfiguration> polys;
    for (const auto& g : ideal.polynomials()) polys.push_back(newton_polytope(g));
    CHECK(mixed_volume(polys) == 54);
    CHECK(bernstein_bound(ideal) == 54);
    CHECK(bezout_bound(ideal) == 18 * 11 * 9);
}

TEST_CASE("Wronski system bounds") {
    const auto sys = example::wronski_system();
    CHECK(bernstein_bound(sys) == 9);
    CHECK(bezout_bound(sys) == 9);
}

TEST_CASE("preconditions") {
    const PointConfiguration e1(2, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(mixed_volume({e1}), DimensionMismatch);
    CHECK_THROWS_AS(mixed_volume({e1, PointConfiguration(1, {{0}, {1}})}), DimensionMismatch);
}

}  // TEST_SUITE
