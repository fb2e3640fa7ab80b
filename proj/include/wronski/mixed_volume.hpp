#pragma once

#include "wronski/lattice.hpp"
#include "wronski/polynomial.hpp"

namespace wronski {

/// Mixed volume of m lattice polytopes in R^m (m <= 3), by inclusion-exclusion
/// over Minkowski sums: MV = sum over nonempty S of (-1)^(m-|S|) vol(sum_S P_i).
/// Normalized so that MV(P, ..., P) = m! vol(P).
Integer mixed_volume(const std::vector<PointConfiguration>& polytopes);

/// Bernstein count of a square system: mixed volume of its Newton polytopes.
Integer bernstein_bound(const PolynomialSystem& system);

/// Product of the total degrees.
Integer bezout_bound(const PolynomialSystem& system);

}  // namespace wronski
