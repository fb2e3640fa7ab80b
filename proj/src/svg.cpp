#include "wronski/svg.hpp"

#include "wronski/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace wronski::plot {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Maps data coordinates to pixels with one scale for both axes, y up.
class Viewport {
public:
    Viewport(const Window& w, int width, int height, double margin)
        : w_(w), height_(height), margin_(margin) {
        const double sx = (width - 2 * margin) / (w.xmax - w.xmin);
        const double sy = (height - 2 * margin) / (w.ymax - w.ymin);
        scale_ = std::min(sx, sy);
    }
    double x(double v) const { return margin_ + (v - w_.xmin) * scale_; }
    double y(double v) const { return height_ - margin_ - (v - w_.ymin) * scale_; }

private:
    Window w_;
    int height_;
    double margin_;
    double scale_ = 1.0;
};

std::string header(int width, int height) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return os.str();
}

struct FloatTerm {
    double coeff;
    unsigned ex;
    unsigned ey;
};

std::vector<FloatTerm> float_terms(const ExactPolynomial& p) {
    std::vector<FloatTerm> out;
    for (const auto& [e, c] : p.terms()) out.push_back({to_double(c), e[0], e[1]});
    return out;
}

double eval(const std::vector<FloatTerm>& terms, double x, double y, double* magnitude = nullptr) {
    double v = 0.0;
    double mag = 0.0;
    for (const auto& t : terms) {
        const double m = t.coeff * std::pow(x, t.ex) * std::pow(y, t.ey);
        v += m;
        mag += std::abs(m);
    }
    if (magnitude) *magnitude = mag;
    return v;
}

void check_bivariate(const ExactPolynomial& p) {
    if (p.nvars() != 2) throw DimensionMismatch("implicit curves need polynomials in 2 variables");
}

}  // namespace

std::string svg_triangulation(const PointConfiguration& config, const SimplicialComplex& complex,
                              const FacetBipartition& parts, const VertexColoring& coloring,
                              const PlotOptions& options) {
    if (config.dim() != 2) throw UnsupportedDimension(config.dim());
    Window w{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
             std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
    for (const auto& p : config.points()) {
        w.xmin = std::min(w.xmin, double(p[0]));
        w.xmax = std::max(w.xmax, double(p[0]));
        w.ymin = std::min(w.ymin, double(p[1]));
        w.ymax = std::max(w.ymax, double(p[1]));
    }
    if (w.xmax <= w.xmin || w.ymax <= w.ymin) throw BadWindow();
    const Viewport vp(w, options.width, options.height, 0.1 * std::min(options.width, options.height));

    std::vector<int> side(complex.facets.size(), 0);
    for (auto f : parts.white) side.at(f) = 1;

    std::ostringstream os;
    os << header(options.width, options.height);
    os << "<g id=\"facets\" stroke=\"black\" stroke-width=\"" << fmt(options.stroke_width) << "\">\n";
    for (std::size_t f = 0; f < complex.facets.size(); ++f) {
        os << "<polygon class=\"facet " << (side[f] == 0 ? "black" : "white") << "\" data-facet=\"" << f
           << "\" fill=\"" << options.facet_fills[static_cast<std::size_t>(side[f])] << "\" points=\"";
        bool first = true;
        for (auto v : complex.facets[f]) {
            os << (first ? "" : " ") << fmt(vp.x(config[v][0])) << "," << fmt(vp.y(config[v][1]));
            first = false;
        }
        os << "\"/>\n";
    }
    os << "</g>\n<g id=\"vertices\">\n";
    for (const auto& [point, c] : coloring.color) {
        const auto& colors = options.vertex_colors;
        const auto& fill = colors[static_cast<std::size_t>(c) % colors.size()];
        const double cx = vp.x(config[point][0]);
        const double cy = vp.y(config[point][1]);
        os << "<circle class=\"vertex color-" << c << "\" data-point=\"" << point << "\" cx=\"" << fmt(cx)
           << "\" cy=\"" << fmt(cy) << "\" r=\"10.000\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
        os << "<text class=\"label\" x=\"" << fmt(cx + 12) << "\" y=\"" << fmt(cy - 12)
           << "\" font-family=\"sans-serif\" font-size=\"16\">" << point << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

Window default_window(const std::vector<std::vector<double>>& points) {
    Window w;
    if (!points.empty()) {
        w = {points[0].at(0), points[0].at(0), points[0].at(1), points[0].at(1)};
        for (const auto& p : points) {
            w.xmin = std::min(w.xmin, p.at(0));
            w.xmax = std::max(w.xmax, p.at(0));
            w.ymin = std::min(w.ymin, p.at(1));
            w.ymax = std::max(w.ymax, p.at(1));
        }
        const double pad_x = w.xmax > w.xmin ? 0.25 * (w.xmax - w.xmin) : 1.0;
        const double pad_y = w.ymax > w.ymin ? 0.25 * (w.ymax - w.ymin) : 1.0;
        w.xmin -= pad_x;
        w.xmax += pad_x;
        w.ymin -= pad_y;
        w.ymax += pad_y;
    }
    const double half = 0.5 * std::max(w.xmax - w.xmin, w.ymax - w.ymin);
    const double cx = 0.5 * (w.xmin + w.xmax);
    const double cy = 0.5 * (w.ymin + w.ymax);
    return {cx - half, cx + half, cy - half, cy + half};
}

double grid_coordinate(double lo, double hi, std::size_t cells, std::size_t k) {
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(cells);
}

int exact_sign(const ExactPolynomial& p, double x, double y) {
    check_bivariate(p);
    double mag = 0.0;
    const double v = eval(float_terms(p), x, y, &mag);
    // generous bound on accumulated rounding in the floating sum
    if (std::abs(v) > 64.0 * std::numeric_limits<double>::epsilon() * mag) return v >= 0.0 ? 1 : -1;
    const Rational r = p.evaluate({Rational(x), Rational(y)});
    return r >= 0 ? 1 : -1;
}

std::vector<CurveSegment> marching_squares(const ExactPolynomial& p, const Window& window,
                                           std::size_t cells) {
    check_bivariate(p);
    if (!(window.xmax > window.xmin) || !(window.ymax > window.ymin) || cells == 0) throw BadWindow();
    const auto terms = float_terms(p);
    const std::size_t n = cells + 1;
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = grid_coordinate(window.xmin, window.xmax, cells, k);
        ys[k] = grid_coordinate(window.ymin, window.ymax, cells, k);
    }
    std::vector<double> value(n * n);
    std::vector<int> sign(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double mag = 0.0;
            const double v = eval(terms, xs[i], ys[j], &mag);
            value[i * n + j] = v;
            sign[i * n + j] = std::abs(v) > 64.0 * std::numeric_limits<double>::epsilon() * mag
                                  ? (v >= 0.0 ? 1 : -1)
                                  : exact_sign(p, xs[i], ys[j]);
        }
    }

    struct Crossing {
        std::array<double, 2> at;
        std::array<GridNode, 2> edge;
    };
    auto cross = [&](GridNode a, GridNode b) {
        const double va = value[a.i * n + a.j];
        const double vb = value[b.i * n + b.j];
        double s = va / (va - vb);
        if (!std::isfinite(s)) s = 0.5;
        s = std::clamp(s, 0.0, 1.0);
        return Crossing{{xs[a.i] + s * (xs[b.i] - xs[a.i]), ys[a.j] + s * (ys[b.j] - ys[a.j])}, {a, b}};
    };

    std::vector<CurveSegment> out;
    for (std::size_t i = 0; i < cells; ++i) {
        for (std::size_t j = 0; j < cells; ++j) {
            // corners counter-clockwise from lower-left
            const std::array<GridNode, 4> c{GridNode{i, j}, GridNode{i + 1, j}, GridNode{i + 1, j + 1},
                                            GridNode{i, j + 1}};
            std::vector<Crossing> hits;
            for (std::size_t e = 0; e < 4; ++e) {
                const auto& a = c[e];
                const auto& b = c[(e + 1) % 4];
                if (sign[a.i * n + a.j] != sign[b.i * n + b.j]) hits.push_back(cross(a, b));
            }
            if (hits.size() == 2) {
                out.push_back({hits[0].at, hits[1].at, hits[0].edge, hits[1].edge});
            } else if (hits.size() == 4) {
                double center = 0.0;
                for (const auto& k : c) center += value[k.i * n + k.j];
                const int corner0 = sign[c[0].i * n + c[0].j];
                // hits are on edges 0..3; pair the ones cutting off corners of the center's opposite sign
                if ((center >= 0.0 ? 1 : -1) == corner0) {
                    out.push_back({hits[0].at, hits[1].at, hits[0].edge, hits[1].edge});
                    out.push_back({hits[2].at, hits[3].at, hits[2].edge, hits[3].edge});
                } else {
                    out.push_back({hits[3].at, hits[0].at, hits[3].edge, hits[0].edge});
                    out.push_back({hits[1].at, hits[2].at, hits[1].edge, hits[2].edge});
                }
            }
        }
    }
    return out;
}

std::string svg_implicit_curves(const PolynomialSystem& system,
                                const std::vector<std::vector<double>>& real_points,
                                const std::optional<Window>& window, const PlotOptions& options) {
    if (system.size() != 2 || system.vars().size() != 2)
        throw DimensionMismatch("implicit plot needs 2 polynomials in 2 variables");
    const Window w = window ? *window : default_window(real_points);
    if (!(w.xmax > w.xmin) || !(w.ymax > w.ymin)) throw BadWindow();
    const Viewport vp(w, options.width, options.height, 20.0);

    std::ostringstream os;
    os << header(options.width, options.height);
    os << "<g id=\"curves\" fill=\"none\" stroke-width=\"" << fmt(options.stroke_width) << "\">\n";
    for (std::size_t k = 0; k < 2; ++k) {
        os << "<g class=\"curve\" id=\"curve-" << k << "\" stroke=\"" << options.curve_strokes[k] << "\">\n";
        const auto segments = marching_squares(system[k], w, options.grid);
        if (!segments.empty()) {
            os << "<path d=\"";
            bool first = true;
            for (const auto& s : segments) {
                os << (first ? "" : " ") << "M" << fmt(vp.x(s.from[0])) << " " << fmt(vp.y(s.from[1])) << "L"
                   << fmt(vp.x(s.to[0])) << " " << fmt(vp.y(s.to[1]));
                first = false;
            }
            os << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</g>\n<g id=\"markers\" fill=\"black\">\n";
    for (const auto& p : real_points) {
        os << "<circle class=\"marker\" cx=\"" << fmt(vp.x(p.at(0))) << "\" cy=\"" << fmt(vp.y(p.at(1)))
           << "\" r=\"6.000\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace wronski::plot
