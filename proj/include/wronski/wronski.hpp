#pragma once

#include "wronski/lattice.hpp"
#include "wronski/polynomial.hpp"

#include <optional>

namespace wronski {

// One coefficient per color class for each of the d polynomials of a system.
struct CoefficientChoice {
    std::vector<std::vector<Rational>> rows;
};

/// d+1 generators in (x1..xd, s): for each color class, the sum of
/// s^lambda_j * x^a_j over its points. Classes ordered by smallest member.
PolynomialSystem wronski_center_ideal(const PointConfiguration& config, const Lifting& lifting,
                                      const VertexColoring& coloring);

/// Sum of c_i times generator i. With s0 the variable s is substituted and the
/// result lives in (x1..xd); without it s stays symbolic.
ExactPolynomial wronski_polynomial(const PointConfiguration& config, const Lifting& lifting,
                                   const VertexColoring& coloring, const std::vector<Rational>& c,
                                   const std::optional<Rational>& s0);

PolynomialSystem wronski_system(const PointConfiguration& config, const Lifting& lifting,
                                const VertexColoring& coloring, const CoefficientChoice& c,
                                const Rational& s0);

/// d! vol(conv(A)).
Integer kushnirenko_bound(const PointConfiguration& config);

/// Distinct exponent vectors of the terms, as lattice points in Z^nvars.
PointConfiguration newton_polytope(const ExactPolynomial& poly);

}  // namespace wronski
