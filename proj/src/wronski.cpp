#include "wronski/wronski.hpp"

#include "wronski/errors.hpp"

#include <algorithm>

namespace wronski {

namespace {

void check_inputs(const PointConfiguration& config, const Lifting& lifting,
                  const VertexColoring& coloring) {
    if (lifting.values.size() != config.size())
        throw DimensionMismatch("lifting length does not match number of points");
    if (coloring.num_colors != static_cast<int>(config.dim()) + 1)
        throw DimensionMismatch("coloring must use d+1 colors");
    for (const auto& [point, c] : coloring.color) {
        if (point >= config.size()) throw DimensionMismatch("colored point out of range");
        if (c < 0 || c > static_cast<int>(config.dim()))
            throw DimensionMismatch("color out of range");
    }
}

ExponentVector lifted_exponent(const PointConfiguration& config, const Lifting& lifting,
                               std::size_t j) {
    if (lifting.values[j] < 0) throw DomainError("negative lifting values cannot be exponents");
    ExponentVector e;
    for (auto v : config[j]) {
        if (v < 0) throw DomainError("negative coordinates cannot be exponents");
        e.push_back(static_cast<std::uint32_t>(v));
    }
    e.push_back(static_cast<std::uint32_t>(lifting.values[j]));
    return e;
}

}  // namespace

PolynomialSystem wronski_center_ideal(const PointConfiguration& config, const Lifting& lifting,
                                      const VertexColoring& coloring) {
    check_inputs(config, lifting, coloring);
    const auto vars = standard_vars(config.dim(), true);
    std::vector<ExactPolynomial> gens;
    for (const auto& cls : coloring.classes()) {
        ExactPolynomial g(vars);
        for (auto j : cls) g.add_term(lifted_exponent(config, lifting, j), 1);
        gens.push_back(std::move(g));
    }
    return PolynomialSystem(vars, std::move(gens));
}

ExactPolynomial wronski_polynomial(const PointConfiguration& config, const Lifting& lifting,
                                   const VertexColoring& coloring, const std::vector<Rational>& c,
                                   const std::optional<Rational>& s0) {
    if (c.size() != config.dim() + 1)
        throw DimensionMismatch("coefficient vector must have d+1 entries");
    const auto ideal = wronski_center_ideal(config, lifting, coloring);
    ExactPolynomial w(ideal.vars());
    for (std::size_t i = 0; i < ideal.size(); ++i) w += c[i] * ideal[i];
    if (!s0) return w;
    return w.substitute(config.dim(), *s0);
}

PolynomialSystem wronski_system(const PointConfiguration& config, const Lifting& lifting,
                                const VertexColoring& coloring, const CoefficientChoice& c,
                                const Rational& s0) {
    if (c.rows.size() != config.dim())
        throw DimensionMismatch("a Wronski system needs d coefficient vectors");
    std::vector<ExactPolynomial> polys;
    for (const auto& row : c.rows) polys.push_back(wronski_polynomial(config, lifting, coloring, row, s0));
    return PolynomialSystem(standard_vars(config.dim(), false), std::move(polys));
}

Integer kushnirenko_bound(const PointConfiguration& config) {
    const Rational v = hull_volume(config) * factorial(static_cast<unsigned>(config.dim()));
    return numerator(v) / denominator(v);
}

PointConfiguration newton_polytope(const ExactPolynomial& poly) {
    if (poly.is_zero()) throw ZeroPolynomial();
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : poly.terms()) pts.emplace_back(e.begin(), e.end());
    std::sort(pts.begin(), pts.end());
    return PointConfiguration(poly.nvars(), std::move(pts));
}

}  // namespace wronski
