#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace wronski {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix m);

// Solves the square system a * x = b exactly. Returns false if a is singular.
bool solve_exact(RatMatrix a, std::vector<Rational> b, std::vector<Rational>& x);

// Rank of an integer matrix (rows are vectors).
std::size_t rank(const IntMatrix& rows);

Integer factorial(unsigned n);

Rational power(const Rational& base, unsigned exp);

double to_double(const Rational& q);

}  // namespace wronski
