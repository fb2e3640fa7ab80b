#pragma once

#include "wronski/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wronski {

using ExponentVector = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

std::uint64_t total_degree(const ExponentVector& e);

// Sparse polynomial with exact rational coefficients over a named variable list.
// Zero coefficients are never stored, so structural equality is polynomial equality.
class ExactPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexLess>;

    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<std::string> vars);

    static ExactPolynomial constant(std::vector<std::string> vars, const Rational& c);
    static ExactPolynomial monomial(std::vector<std::string> vars, ExponentVector exps,
                                    const Rational& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t degree() const;

    // Adds c * x^exps, merging with an existing term.
    void add_term(const ExponentVector& exps, const Rational& c);

    ExactPolynomial& operator+=(const ExactPolynomial& o);
    ExactPolynomial& operator-=(const ExactPolynomial& o);
    ExactPolynomial& operator*=(const Rational& c);

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(ExactPolynomial a, const Rational& c) { return a *= c; }
    friend ExactPolynomial operator*(const Rational& c, ExactPolynomial a) { return a *= c; }
    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);

    friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

    /// Substitutes `value` for variable `var`, removing it from the variable list.
    ExactPolynomial substitute(std::size_t var, const Rational& value) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Human-readable form, e.g. "x1^3*s^15 + s^12 - 3/2*x1*x2", terms in
    /// descending graded lexicographic order. The zero polynomial prints "0".
    std::string to_string() const;

    /// Inverse of to_string over the given variable list.
    static ExactPolynomial parse(const std::string& text, std::vector<std::string> vars);

private:
    void check_compatible(const ExactPolynomial& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

class PolynomialSystem {
public:
    PolynomialSystem() = default;
    PolynomialSystem(std::vector<std::string> vars, std::vector<ExactPolynomial> polys);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<ExactPolynomial>& polynomials() const { return polys_; }
    std::size_t size() const { return polys_.size(); }
    const ExactPolynomial& operator[](std::size_t i) const { return polys_[i]; }
    bool is_square() const { return polys_.size() == vars_.size(); }

    friend bool operator==(const PolynomialSystem&, const PolynomialSystem&) = default;

private:
    std::vector<std::string> vars_;
    std::vector<ExactPolynomial> polys_;
};

// "x1", ..., "xd", optionally followed by "s".
std::vector<std::string> standard_vars(std::size_t d, bool with_s);

}  // namespace wronski
