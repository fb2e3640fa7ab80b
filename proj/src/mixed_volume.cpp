#include "wronski/mixed_volume.hpp"

#include "wronski/errors.hpp"
#include "wronski/wronski.hpp"

namespace wronski {

Integer mixed_volume(const std::vector<PointConfiguration>& polytopes) {
    const std::size_t m = polytopes.size();
    if (m == 0 || m > 3) throw UnsupportedDimension(m);
    for (const auto& p : polytopes) {
        if (p.dim() != m) throw DimensionMismatch("mixed volume needs m polytopes in dimension m");
        if (p.size() == 0) throw InvalidConfiguration("empty polytope");
    }
    Rational total = 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        PointConfiguration sum;
        bool first = true;
        std::size_t count = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask & (1u << i))) continue;
            ++count;
            sum = first ? polytopes[i] : minkowski_sum(sum, polytopes[i]);
            first = false;
        }
        // lower-dimensional sums have zero volume
        const Rational vol = sum.full_dimensional() ? hull_volume(sum) : Rational(0);
        if ((m - count) % 2 == 0) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    if (denominator(total) != 1) throw DomainError("mixed volume of lattice polytopes is not integral");
    return numerator(total);
}

Integer bernstein_bound(const PolynomialSystem& system) {
    if (!system.is_square()) throw NotSquare(system.size(), system.vars().size());
    std::vector<PointConfiguration> polytopes;
    for (const auto& p : system.polynomials()) polytopes.push_back(newton_polytope(p));
    return mixed_volume(polytopes);
}

Integer bezout_bound(const PolynomialSystem& system) {
    Integer b = 1;
    for (const auto& p : system.polynomials()) b *= p.degree();
    return b;
}

}  // namespace wronski
