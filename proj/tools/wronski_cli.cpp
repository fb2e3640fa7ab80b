// Command-line front end over the wronski library. Data goes to stdout or
// --out and diagnostics to stderr. Exit code 1 marks domain errors and 2 marks
// usage or I/O errors.

#include "wronski/errors.hpp"
#include "wronski/homotopy.hpp"
#include "wronski/json_io.hpp"
#include "wronski/lattice.hpp"
#include "wronski/mixed_volume.hpp"
#include "wronski/svg.hpp"
#include "wronski/wronski.hpp"

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace wronski;
using io::Json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string out;
    std::uint64_t seed = 0;
    TrackerSettings tracker;
    int threads = 0;
    bool serial = false;
    plot::PlotOptions plot;
};

struct GeometryOptions {
    std::vector<std::size_t> simplex;
    std::string points_file;
    std::string lifting;
    std::string lifting_file;
};

void add_geometry(CLI::App* cmd, GeometryOptions& g, bool needs_lifting) {
    auto* simplex = cmd->add_option("--simplex", g.simplex, "lattice points of the k-th dilate of the d-simplex")
                        ->expected(2)
                        ->type_name("D K");
    auto* points = cmd->add_option("--points", g.points_file, "point configuration JSON file");
    simplex->excludes(points);
    if (needs_lifting) {
        auto* inline_l = cmd->add_option("--lifting", g.lifting, "comma-separated lifting values");
        auto* file_l = cmd->add_option("--lifting-file", g.lifting_file, "lifting JSON file");
        inline_l->excludes(file_l);
    }
}

PointConfiguration load_points(const GeometryOptions& g) {
    if (!g.simplex.empty()) return simplex_lattice_points(g.simplex[0], g.simplex[1]);
    if (!g.points_file.empty()) return io::points_from_json(io::read_json_file(g.points_file));
    throw UsageError("one of --simplex or --points is required");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

Lifting load_lifting(const GeometryOptions& g) {
    if (!g.lifting_file.empty()) return io::lifting_from_json(io::read_json_file(g.lifting_file));
    if (g.lifting.empty()) throw UsageError("one of --lifting or --lifting-file is required");
    Lifting l;
    for (const auto& v : split(g.lifting, ',')) {
        try {
            std::size_t used = 0;
            l.values.push_back(std::stoll(v, &used));
            if (used != v.size()) throw std::invalid_argument(v);
        } catch (const std::exception&) {
            throw UsageError("bad lifting value '" + v + "'");
        }
    }
    return l;
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw UsageError("bad rational '" + text + "'");
    }
}

// "19,8,-19;39,7,42"
CoefficientChoice parse_coefficients(const std::string& text) {
    CoefficientChoice c;
    for (const auto& row : split(text, ';')) {
        std::vector<Rational> r;
        for (const auto& v : split(row, ',')) r.push_back(parse_rational(v));
        c.rows.push_back(std::move(r));
    }
    return c;
}

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        io::write_text_file(g.out, text);
    }
}

void emit(const GlobalOptions& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

void emit(const GlobalOptions& g, const PolynomialSystem& system, bool text) {
    if (!text) return emit(g, io::to_json(system));
    std::string lines;
    for (const auto& p : system.polynomials()) lines += p.to_string() + "\n";
    emit(g, lines);
}

TrackerSettings tracker_settings(const GlobalOptions& g, bool only_torus) {
    TrackerSettings s = g.tracker;
    s.seed = g.seed;
    s.only_torus = only_torus;
    return s;
}

SolveResult run_solve(const GlobalOptions& g, const PolynomialSystem& system, bool only_torus) {
#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif
    return solve(system, tracker_settings(g, only_torus), g.serial ? Schedule::Serial : Schedule::Parallel);
}

Json solve_summary(const SolveResult& r) {
    std::size_t torus = 0;
    for (const auto& s : r.solutions)
        if (!s.singular && s.in_torus) ++torus;
    Json reals = Json::array();
    for (const auto& p : real_solutions(r)) reals.push_back(p);
    return Json{{"seed", r.seed},
                {"paths_tracked", r.paths_tracked},
                {"paths_diverged", r.paths_diverged},
                {"paths_failed", r.paths_failed},
                {"nonsingular", r.count_nonsingular()},
                {"nonsingular_in_torus", torus},
                {"singular", r.count_singular()},
                {"real", r.count_real_nonsingular()},
                {"real_solutions", reals}};
}

struct Analysis {
    SimplicialComplex complex;
    FacetBipartition parts;
    VertexColoring coloring;
};

// Throws NotFoldableError when the complex does not fold.
Analysis analyze_foldable(const PointConfiguration& config, const Lifting& lifting) {
    auto complex = as_simplicial_complex(regular_subdivision(config, lifting));
    auto bip = facet_bipartition(complex);
    if (std::holds_alternative<NotFoldable>(bip)) throw NotFoldableError();
    auto coloring = vertex_coloring(complex);
    return {std::move(complex), std::get<FacetBipartition>(bip), std::move(coloring)};
}

std::string parent_dir_join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Foldable triangulations, Wronski systems and their real solutions"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--out,-o", g.out, "write output to this file instead of stdout");
    app.add_option("--seed", g.seed, "seed for the random gamma of the homotopy");
    app.add_option("--threads", g.threads, "OpenMP threads for path tracking (0 = default)");
    app.add_flag("--serial", g.serial, "track paths with the serial reference loop");
    app.add_option("--newton-tol", g.tracker.newton_tol);
    app.add_option("--refine-tol", g.tracker.refine_tol);
    app.add_option("--dedupe-tol", g.tracker.dedupe_tol);
    app.add_option("--real-tol", g.tracker.real_tol);
    app.add_option("--torus-tol", g.tracker.torus_tol);
    app.add_option("--singular-cond", g.tracker.singular_cond);
    app.add_option("--divergence-norm", g.tracker.divergence_norm);
    app.add_option("--min-step", g.tracker.min_step);
    app.add_option("--initial-step", g.tracker.initial_step);
    app.add_option("--end-distance", g.tracker.end_distance);
    app.add_option("--width", g.plot.width);
    app.add_option("--height", g.plot.height);
    app.add_option("--grid", g.plot.grid, "marching-squares cells per axis");

    GeometryOptions geo;
    bool require_foldable = false;
    std::string coeffs;
    std::string s_value = "1";
    std::string system_file;
    std::string solutions_file;
    std::string polytopes_file;
    std::string figures_dir;
    bool only_torus = false;
    bool as_text = false;
    long s_index = -1;

    auto* latpoints = app.add_subcommand("latpoints", "lattice points of a dilated simplex");
    latpoints->add_option("--simplex", geo.simplex)->expected(2)->required()->type_name("D K");

    auto* subdivide = app.add_subcommand("subdivide", "regular subdivision induced by a lifting");
    add_geometry(subdivide, geo, true);

    auto* analyze = app.add_subcommand("analyze", "foldability, signature and vertex coloring");
    add_geometry(analyze, geo, true);
    analyze->add_flag("--require-foldable", require_foldable, "exit 1 if the triangulation is not foldable");

    auto* center = app.add_subcommand("center-ideal", "generators of the Wronski center ideal");
    add_geometry(center, geo, true);
    center->add_flag("--text", as_text, "print one polynomial per line instead of JSON");

    auto* wsys = app.add_subcommand("wronski-system", "Wronski system for given coefficients and s");
    add_geometry(wsys, geo, true);
    wsys->add_option("--c", coeffs, "coefficient rows, e.g. 19,8,-19;39,7,42")->required();
    wsys->add_option("--s", s_value, "rational value substituted for s");
    wsys->add_flag("--text", as_text, "print one polynomial per line instead of JSON");

    auto* solve_cmd = app.add_subcommand("solve", "solve a square polynomial system");
    solve_cmd->add_option("--system", system_file, "polynomial system JSON file (- for stdin)")->required();
    solve_cmd->add_flag("--only-torus", only_torus, "report only solutions with all coordinates nonzero");

    auto* interval = app.add_subcommand("check-interval", "no real solution with s in (0, 1)");
    interval->add_option("--solutions", solutions_file, "solutions JSON file")->required();
    interval->add_option("--s-index", s_index, "coordinate holding s (default: last)");

    auto* mv = app.add_subcommand("mixed-volume", "mixed volume of Newton polytopes");
    auto* mv_sys = mv->add_option("--system", system_file, "square system JSON file");
    auto* mv_pts = mv->add_option("--polytopes", polytopes_file, "JSON array of point configurations");
    mv_sys->excludes(mv_pts);

    auto* plot_cmd = app.add_subcommand("plot", "SVG figures");
    plot_cmd->require_subcommand(1);
    auto* plot_tri = plot_cmd->add_subcommand("triangulation", "colored foldable triangulation");
    add_geometry(plot_tri, geo, true);
    auto* plot_curves = plot_cmd->add_subcommand("curves", "real zero sets of a 2x2 system");
    plot_curves->add_option("--system", system_file, "polynomial system JSON file")->required();
    plot_curves->add_option("--solutions", solutions_file, "solutions JSON whose real points are marked");

    auto* pipeline = app.add_subcommand("pipeline", "full run from points and lifting to real solutions");
    add_geometry(pipeline, geo, true);
    pipeline->add_option("--c", coeffs, "coefficient rows, e.g. 19,8,-19;39,7,42")->required();
    pipeline->add_option("--s", s_value, "rational value substituted for s");
    pipeline->add_option("--figures", figures_dir, "directory for triangulation.svg and curves.svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (latpoints->parsed()) {
            emit(g, io::to_json(load_points(geo)));
        } else if (subdivide->parsed()) {
            const auto sub = regular_subdivision(load_points(geo), load_lifting(geo));
            bool simplicial = std::all_of(sub.cells.begin(), sub.cells.end(),
                                          [&](const IndexSet& c) { return c.size() == sub.config.dim() + 1; });
            Json j = io::to_json(sub);
            j["simplicial"] = simplicial;
            emit(g, j);
        } else if (analyze->parsed()) {
            const auto config = load_points(geo);
            const auto complex = as_simplicial_complex(regular_subdivision(config, load_lifting(geo)));
            Json j = io::to_json(complex);
            Json vols = Json::array();
            for (const auto& f : complex.facets) vols.push_back(normalized_volume(config, f).str());
            j["normalized_volumes"] = vols;
            j["kushnirenko_bound"] = kushnirenko_bound(config).str();
            const auto bip = facet_bipartition(complex);
            if (const auto* nf = std::get_if<NotFoldable>(&bip)) {
                j["foldable"] = false;
                j["odd_cycle"] = nf->odd_cycle;
                emit(g, j);
                if (require_foldable) {
                    std::cerr << "error: triangulation is not foldable\n";
                    return 1;
                }
                return 0;
            }
            const auto& parts = std::get<FacetBipartition>(bip);
            j["foldable"] = true;
            j["bipartition"] = io::to_json(parts);
            j["signature"] = signature(config, complex, parts);
            j["coloring"] = io::to_json(vertex_coloring(complex));
            emit(g, j);
        } else if (center->parsed()) {
            const auto config = load_points(geo);
            const auto lifting = load_lifting(geo);
            const auto a = analyze_foldable(config, lifting);
            emit(g, wronski_center_ideal(config, lifting, a.coloring), as_text);
        } else if (wsys->parsed()) {
            const auto config = load_points(geo);
            const auto lifting = load_lifting(geo);
            const auto a = analyze_foldable(config, lifting);
            emit(g,
                 wronski_system(config, lifting, a.coloring, parse_coefficients(coeffs), parse_rational(s_value)),
                 as_text);
        } else if (solve_cmd->parsed()) {
            const auto system = io::system_from_json(io::read_json_file(system_file));
            emit(g, io::to_json(run_solve(g, system, only_torus)));
        } else if (interval->parsed()) {
            const auto result = io::solve_result_from_json(io::read_json_file(solutions_file));
            std::size_t idx = 0;
            if (s_index >= 0) {
                idx = static_cast<std::size_t>(s_index);
            } else if (!result.solutions.empty()) {
                idx = result.solutions.front().coords.size() - 1;
            }
            const auto check = check_s_interval(result, idx);
            emit(g, Json{{"holds", check.holds}, {"s_values", check.s_values}});
        } else if (mv->parsed()) {
            Integer value;
            if (!system_file.empty()) {
                value = bernstein_bound(io::system_from_json(io::read_json_file(system_file)));
            } else if (!polytopes_file.empty()) {
                const auto j = io::read_json_file(polytopes_file);
                if (!j.is_array()) throw SchemaError("", "expected an array of point configurations");
                std::vector<PointConfiguration> polys;
                for (std::size_t i = 0; i < j.size(); ++i)
                    polys.push_back(io::points_from_json(j[i], "/" + std::to_string(i)));
                value = mixed_volume(polys);
            } else {
                throw UsageError("one of --system or --polytopes is required");
            }
            emit(g, Json{{"mixed_volume", value.str()}});
        } else if (plot_tri->parsed()) {
            const auto config = load_points(geo);
            const auto a = analyze_foldable(config, load_lifting(geo));
            emit(g, plot::svg_triangulation(config, a.complex, a.parts, a.coloring, g.plot));
        } else if (plot_curves->parsed()) {
            const auto system = io::system_from_json(io::read_json_file(system_file));
            std::vector<std::vector<double>> points;
            if (!solutions_file.empty())
                points = real_solutions(io::solve_result_from_json(io::read_json_file(solutions_file)));
            emit(g, plot::svg_implicit_curves(system, points, std::nullopt, g.plot));
        } else if (pipeline->parsed()) {
            const auto config = load_points(geo);
            const auto lifting = load_lifting(geo);
            const auto a = analyze_foldable(config, lifting);
            const auto sigma = signature(config, a.complex, a.parts);

            Json report;
            report["points"] = io::to_json(config);
            report["lifting"] = io::to_json(lifting);
            report["facets"] = io::to_json(a.complex)["facets"];
            Integer vol_sum = 0;
            for (const auto& f : a.complex.facets) vol_sum += normalized_volume(config, f);
            report["normalized_volume_sum"] = vol_sum.str();
            report["foldable"] = true;
            report["signature"] = sigma;
            report["coloring"] = io::to_json(a.coloring);
            report["kushnirenko_bound"] = kushnirenko_bound(config).str();

            const auto ideal = wronski_center_ideal(config, lifting, a.coloring);
            const auto ideal_result = run_solve(g, ideal, true);
            const auto check = check_s_interval(ideal_result, config.dim());
            Json gens = Json::array();
            for (const auto& p : ideal.polynomials()) gens.push_back(p.to_string());
            report["center_ideal"] = Json{{"generators", gens},
                                          {"bernstein_bound", bernstein_bound(ideal).str()},
                                          {"solve", solve_summary(ideal_result)},
                                          {"s_interval", Json{{"holds", check.holds}, {"s_values", check.s_values}}}};

            const auto coefficients = parse_coefficients(coeffs);
            const auto system = wronski_system(config, lifting, a.coloring, coefficients, parse_rational(s_value));
            const auto sys_result = run_solve(g, system, false);
            Json polys = Json::array();
            for (const auto& p : system.polynomials()) polys.push_back(p.to_string());
            const auto real_count = sys_result.count_real_nonsingular();
            report["wronski_system"] = Json{{"polynomials", polys},
                                            {"s", parse_rational(s_value).str()},
                                            {"solve", solve_summary(sys_result)},
                                            {"lower_bound", sigma},
                                            {"lower_bound_met", real_count >= sigma}};

            if (!figures_dir.empty()) {
                std::filesystem::create_directories(figures_dir);
                io::write_text_file(parent_dir_join(figures_dir, "triangulation.svg"),
                                    plot::svg_triangulation(config, a.complex, a.parts, a.coloring, g.plot));
                if (config.dim() == 2) {
                    io::write_text_file(parent_dir_join(figures_dir, "curves.svg"),
                                        plot::svg_implicit_curves(system, real_solutions(sys_result),
                                                                  std::nullopt, g.plot));
                }
            }
            emit(g, report);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const io::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
