#pragma once

#include "wronski/lattice.hpp"
#include "wronski/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wronski::plot {

struct PlotOptions {
    int width = 800;
    int height = 800;
    std::size_t grid = 400;
    std::array<std::string, 2> facet_fills{"#3b3b3b", "#f2f2f2"};
    std::vector<std::string> vertex_colors{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e"};
    std::array<std::string, 2> curve_strokes{"#1f77b4", "#cd5c5c"};
    double stroke_width = 2.0;
};

/// Fill per facet by bipartition side, vertex dots by color class, labels by
/// point index. Elements appear in ascending facet and point order. d = 2 only.
std::string svg_triangulation(const PointConfiguration& config, const SimplicialComplex& complex,
                              const FacetBipartition& parts, const VertexColoring& coloring,
                              const PlotOptions& options = {});

struct Window {
    double xmin = -3.0;
    double xmax = 3.0;
    double ymin = -3.0;
    double ymax = 3.0;
};

/// Bounding box of the points padded by 25% on each side, or [-3, 3]^2 when
/// there are none, then widened to a square so both axes share one scale.
Window default_window(const std::vector<std::vector<double>>& points);

// Node index pair (i, j) of a grid over a window, i along x.
struct GridNode {
    std::size_t i = 0;
    std::size_t j = 0;
};

struct CurveSegment {
    std::array<double, 2> from{};
    std::array<double, 2> to{};
    // The grid edges the endpoints were interpolated on.
    std::array<GridNode, 2> from_edge{};
    std::array<GridNode, 2> to_edge{};
};

/// Coordinate of grid line k of `cells` cells spanning [lo, hi].
double grid_coordinate(double lo, double hi, std::size_t cells, std::size_t k);

/// Sign of p at a point: +1 for >= 0, -1 otherwise. Falls back to exact
/// rational evaluation when the floating value is within rounding error of 0.
int exact_sign(const ExactPolynomial& p, double x, double y);

/// Marching squares over a cells x cells grid. Saddle cells are resolved by
/// the sign of the cell-center average.
std::vector<CurveSegment> marching_squares(const ExactPolynomial& p, const Window& window,
                                           std::size_t cells);

/// Zero sets of a 2x2 system as two curve groups plus the given real points
/// as markers. Throws BadWindow for an empty window.
std::string svg_implicit_curves(const PolynomialSystem& system,
                                const std::vector<std::vector<double>>& real_points,
                                const std::optional<Window>& window = std::nullopt,
                                const PlotOptions& options = {});

}  // namespace wronski::plot
