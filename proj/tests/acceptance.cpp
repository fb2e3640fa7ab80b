// Acceptance checks on the reference instance. Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.

#include "test_support.hpp"

#include "wronski/homotopy.hpp"
#include "wronski/json_io.hpp"
#include "wronski/lattice.hpp"
#include "wronski/mixed_volume.hpp"
#include "wronski/svg.hpp"
#include "wronski/wronski.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace wronski;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<void(Verdict&)>& body) {
    Verdict v;
    try {
        body(v);
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail << " [exception: " << e.what() << "]";
    }
    if (!v.ok) ++failures;
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << v.detail.str() << std::endl;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

std::size_t torus_nonsingular(const SolveResult& r) {
    std::size_t n = 0;
    for (const auto& s : r.solutions)
        if (!s.singular && s.in_torus) ++n;
    return n;
}

bool conjugate_closed(const SolveResult& r) {
    std::size_t nonreal = 0;
    for (const auto& s : r.solutions) {
        if (s.singular || s.real) continue;
        ++nonreal;
        bool found = false;
        for (const auto& t : r.solutions) {
            double gap = 0.0;
            for (std::size_t j = 0; j < s.coords.size(); ++j)
                gap = std::max(gap, std::abs(std::conj(s.coords[j]) - t.coords[j]) /
                                        std::max(1.0, std::abs(s.coords[j])));
            if (gap < 1e-8) found = true;
        }
        if (!found) return false;
    }
    return nonreal % 2 == 0;
}

bool same_solution_set(const SolveResult& a, const SolveResult& b, double tol) {
    if (a.solutions.size() != b.solutions.size()) return false;
    for (const auto& s : a.solutions) {
        bool found = false;
        for (const auto& t : b.solutions) {
            double gap = 0.0;
            double norm = 1.0;
            for (std::size_t j = 0; j < s.coords.size(); ++j) {
                gap = std::max(gap, std::abs(s.coords[j] - t.coords[j]));
                norm = std::max(norm, std::abs(s.coords[j]));
            }
            if (gap / norm < tol) found = true;
        }
        if (!found) return false;
    }
    return true;
}

bool identical(const SolveResult& a, const SolveResult& b) {
    if (a.solutions.size() != b.solutions.size() || a.paths_diverged != b.paths_diverged) return false;
    for (std::size_t i = 0; i < a.solutions.size(); ++i)
        if (a.solutions[i].coords != b.solutions[i].coords || a.solutions[i].residual != b.solutions[i].residual)
            return false;
    return true;
}

// Newton from a perturbed root: each error at most C * cond * previous^2
// until working precision.
bool quadratic_convergence(const PolynomialSystem& system, const SolveResult& r) {
    const auto f = to_numeric(system);
    for (const auto& s : r.solutions) {
        if (s.singular) continue;
        CVector root(s.coords.size());
        for (std::size_t j = 0; j < s.coords.size(); ++j) root[j] = s.coords[j];
        const double norm = std::max(1.0, root.cwiseAbs().maxCoeff());
        CVector x = root;
        for (Eigen::Index j = 0; j < x.size(); ++j) x[j] *= Complex(1.0 + 1e-5, 1e-5);
        double err = (x - root).cwiseAbs().maxCoeff() / norm;
        for (int it = 0; it < 4 && err > 1e-13; ++it) {
            CVector val;
            CMatrix jac;
            f.evaluate(x, val, jac);
            x -= jac.partialPivLu().solve(val);
            const double next = (x - root).cwiseAbs().maxCoeff() / norm;
            if (next > std::max(1e-12, 1e3 * s.condition * err * err)) return false;
            err = next;
        }
        if (err > 1e-12 * std::max(1.0, s.condition)) return false;
    }
    return true;
}

}  // namespace

int main() {
    const auto config = example::points();
    const auto lifting = example::lifting();
    TrackerSettings torus;
    torus.only_torus = true;

    report(1, "lattice points of 3*Delta_2 in lexicographic order", [&](Verdict& v) {
        const std::vector<LatticePoint> expected{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0},
                                                 {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}};
        v.require(config.points() == expected, "10 points in order");
    });

    report(2, "regular subdivision contains {5,6,8} and {5,7,8}, volumes sum to 9", [&](Verdict& v) {
        const auto sub = regular_subdivision(config, lifting);
        const bool simplicial = std::all_of(sub.cells.begin(), sub.cells.end(),
                                            [](const IndexSet& c) { return c.size() == 3; });
        v.require(simplicial, "simplicial");
        v.require(std::count(sub.cells.begin(), sub.cells.end(), IndexSet{5, 6, 8}) == 1, "{5,6,8}");
        v.require(std::count(sub.cells.begin(), sub.cells.end(), IndexSet{5, 7, 8}) == 1, "{5,7,8}");
        Integer sum = 0;
        for (const auto& c : sub.cells) sum += normalized_volume(config, c);
        v.require(sum == 9, "normalized volume sum");
        v.detail << " (" << sub.cells.size() << " facets, volume sum " << sum << ")";
    });

    const auto complex = as_simplicial_complex(regular_subdivision(config, lifting));

    report(3, "foldable with signature 3", [&](Verdict& v) {
        const auto bip = facet_bipartition(complex);
        v.require(std::holds_alternative<FacetBipartition>(bip), "foldable");
        if (!v.ok) return;
        const auto sigma = signature(config, complex, std::get<FacetBipartition>(bip));
        v.require(sigma == 3, "signature");
        v.detail << " (signature " << sigma << ")";
    });

    report(4, "color classes and center-ideal generators", [&](Verdict& v) {
        const auto coloring = vertex_coloring(complex);
        const auto cls = coloring.classes();
        const std::set<IndexSet> got(cls.begin(), cls.end());
        v.require(got == std::set<IndexSet>{{0, 3, 5, 9}, {1, 6, 7}, {2, 4, 8}}, "partition");
        const auto ideal = wronski_center_ideal(config, lifting, coloring);
        v.require(ideal.size() == 3, "three generators");
        if (!v.ok) return;
        v.require(ideal[0].to_string() == "x1^3*s^15 + s^12 + x1*x2*s + x2^3", "generator 0");
        // x1^2*s^9, not x1^3*s^9: point (2,0) carries lambda = 9
        v.require(ideal[1].to_string() == "x1^2*s^9 + x2*s^3 + x1*x2^2", "generator 1");
        v.require(ideal[2].to_string() == "x1*s^8 + x1^2*x2*s^5 + x2^2", "generator 2");
    });

    const auto ideal = example::center_ideal();
    const auto ideal_result = solve(ideal, torus);

    report(5, "center ideal: 54 nonsingular torus solutions, 2 real, none in s in (0,1)", [&](Verdict& v) {
        const auto& r = ideal_result;
        v.require(torus_nonsingular(r) == 54, "54 nonsingular torus solutions");
        v.require(r.count_nonsingular() == 54, "54 nonsingular");
        v.require(r.count_real_nonsingular() == 2, "2 real");
        v.require(r.count_singular() == 0, "0 singular");
        const auto reals = real_solutions(r);
        v.require(reals.size() == 2, "2 real points");
        if (reals.size() == 2) {
            const double gap = max_point_distance(reals, example::center_real_solutions());
            v.require(gap <= 1e-6, "real coordinates within 1e-6");
            v.detail << " (max coordinate error " << gap << ")";
        }
        const auto check = check_s_interval(r, 2);
        v.require(check.holds, "s interval");
        v.detail << " (" << r.paths_tracked << " paths, " << r.count_nonsingular() << " nonsingular, "
                 << r.count_real_nonsingular() << " real)";
    });

    report(6, "mixed volume 54 and MV(P,P) = 9 = Kushnirenko bound", [&](Verdict& v) {
        std::vector<PointConfiguration> polys;
        for (const auto& g : ideal.polynomials()) polys.push_back(newton_polytope(g));
        const auto mv = mixed_volume(polys);
        v.require(mv == 54, "mixed volume of center ideal");
        const auto pp = mixed_volume({config, config});
        v.require(pp == 9, "MV(P,P)");
        v.require(kushnirenko_bound(config) == pp, "Kushnirenko");
        v.detail << " (MV " << mv << ", MV(P,P) " << pp << ")";
    });

    const auto system = example::wronski_system();
    const auto system_result = solve(system, TrackerSettings{});

    report(7, "Wronski system: 9 nonsingular, 3 real, at least the signature", [&](Verdict& v) {
        const auto& r = system_result;
        v.require(r.count_nonsingular() == 9, "9 nonsingular");
        v.require(r.count_real_nonsingular() == 3, "3 real");
        const auto parts = std::get<FacetBipartition>(facet_bipartition(complex));
        v.require(r.count_real_nonsingular() >= signature(config, complex, parts), "real >= signature");
        v.detail << " (" << r.count_nonsingular() << " nonsingular, " << r.count_real_nonsingular() << " real)";
    });

    report(8, "property suites", [&](Verdict& v) {
        std::mt19937_64 rng(8);
        bool witnesses = true;
        for (int trial = 0; trial < 200; ++trial) {
            const auto c = random_configuration(rng, 4 + trial % 7, 5);
            const auto l = random_lifting(rng, c.size(), 20);
            const auto sub = regular_subdivision(c, l);
            Rational covered = 0;
            for (const auto& cell : sub.cells) {
                AffineWitness w;
                if (!cell_witness(sub, cell, w)) witnesses = false;
                for (std::size_t k = 0; k < c.size(); ++k) {
                    const bool inside = std::binary_search(cell.begin(), cell.end(), k);
                    const Rational lk = l.values[k];
                    if (inside ? w(c[k]) != lk : !(w(c[k]) < lk)) witnesses = false;
                }
                std::vector<LatticePoint> pts;
                for (auto i : cell) pts.push_back(c[i]);
                covered += hull_volume(PointConfiguration(2, pts));
            }
            if (covered != hull_volume(c)) witnesses = false;
            if (sub.cells != oracle::lower_cells_2d(c, l)) witnesses = false;
        }
        v.require(witnesses, "witness soundness and covering on 200 random liftings");

        v.require(conjugate_closed(ideal_result) && conjugate_closed(system_result), "conjugate pairs");
        v.require(ideal_result.count_nonsingular() <= bezout_bound(ideal) &&
                      ideal_result.count_nonsingular() <= bernstein_bound(ideal),
                  "center-ideal bounds");
        v.require(system_result.count_nonsingular() <= bezout_bound(system) &&
                      system_result.count_nonsingular() <= bernstein_bound(system) &&
                      system_result.count_nonsingular() <= kushnirenko_bound(config),
                  "Wronski-system bounds");

        v.require(identical(ideal_result, solve(ideal, torus, Schedule::Serial)), "serial = parallel (center ideal)");
        v.require(identical(system_result, solve(system, TrackerSettings{}, Schedule::Serial)),
                  "serial = parallel (Wronski system)");
        TrackerSettings other = torus;
        other.seed = 782949;
        v.require(same_solution_set(ideal_result, solve(ideal, other), torus.dedupe_tol), "seed independence");
        other = TrackerSettings{};
        other.seed = 782949;
        v.require(same_solution_set(system_result, solve(system, other), 1e-8), "seed independence (system)");

        bool roundtrip = true;
        for (int trial = 0; trial < 50; ++trial) {
            const auto c = random_configuration(rng, 3 + trial % 8, 6);
            const auto l = random_lifting(rng, c.size(), 1000);
            const auto text = [](const io::Json& j) { return io::Json::parse(j.dump()); };
            roundtrip = roundtrip && io::points_from_json(text(io::to_json(c))) == c &&
                        io::lifting_from_json(text(io::to_json(l))) == l;
        }
        const auto back = io::solve_result_from_json(io::Json::parse(io::to_json(ideal_result).dump()));
        roundtrip = roundtrip && identical(back, ideal_result) &&
                    io::system_from_json(io::Json::parse(io::to_json(ideal).dump())) == ideal;
        v.require(roundtrip, "JSON round-trip");

        v.require(quadratic_convergence(ideal, ideal_result) && quadratic_convergence(system, system_result),
                  "Newton quadratic convergence");
    });

    report(9, "figure structure", [&](Verdict& v) {
        const auto parts = std::get<FacetBipartition>(facet_bipartition(complex));
        const auto tri = plot::svg_triangulation(config, complex, parts, vertex_coloring(complex));
        v.require(count(tri, "<polygon ") == complex.facets.size(), "one polygon per facet");
        const plot::PlotOptions defaults;
        const bool two_fills = count(tri, "fill=\"" + defaults.facet_fills[0] + "\" points") > 0 &&
                               count(tri, "fill=\"" + defaults.facet_fills[1] + "\" points") > 0 &&
                               defaults.facet_fills[0] != defaults.facet_fills[1];
        v.require(two_fills, "two facet fills");
        std::size_t colors = 0;
        for (int c = 0; c < 4; ++c)
            if (count(tri, "class=\"vertex color-" + std::to_string(c) + "\"") > 0) ++colors;
        v.require(colors == 3, "three vertex colors");
        const auto curves = plot::svg_implicit_curves(system, real_solutions(system_result));
        v.require(count(curves, "<g class=\"curve\"") == 2, "two curve groups");
        v.require(count(curves, "class=\"marker\"") == 3, "three markers");
    });

    return failures == 0 ? 0 : 1;
}
