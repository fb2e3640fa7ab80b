#include "wronski/lattice.hpp"

#include "wronski/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>

namespace wronski {

namespace {

// Rows a_j - a_base for j in idx \ {base}.
IntMatrix difference_rows(const PointConfiguration& config, const IndexSet& idx) {
    IntMatrix rows;
    const auto& base = config[idx.front()];
    for (std::size_t k = 1; k < idx.size(); ++k) {
        std::vector<Integer> row;
        for (std::size_t c = 0; c < config.dim(); ++c) row.emplace_back(config[idx[k]][c] - base[c]);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const IndexSet&)>& fn) {
    if (k > n) return;
    IndexSet s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        fn(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

std::size_t ridge_overlap(const IndexSet& a, const IndexSet& b) {
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return common;
}

Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return Integer(a[0] - o[0]) * (b[1] - o[1]) - Integer(a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise hull vertices of a planar point set, collinear points dropped.
std::vector<LatticePoint> planar_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

Rational hull_area(const PointConfiguration& config) {
    const auto hull = planar_hull(config.points());
    Integer twice = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        twice += Integer(p[0]) * q[1] - Integer(q[0]) * p[1];
    }
    return Rational(abs(twice), 2);
}

// Brute-force supporting planes: every non-collinear triple whose plane has all
// points on one side bounds a facet. Each facet polygon is fanned and coned to
// a fixed hull vertex.
Rational hull_volume_3d(const PointConfiguration& config) {
    const auto& pts = config.points();
    const std::size_t n = pts.size();
    std::set<IndexSet> facets;
    for_each_subset(n, 3, [&](const IndexSet& t) {
        const auto& a = pts[t[0]];
        const auto& b = pts[t[1]];
        const auto& c = pts[t[2]];
        std::array<Integer, 3> u{Integer(b[0] - a[0]), Integer(b[1] - a[1]), Integer(b[2] - a[2])};
        std::array<Integer, 3> v{Integer(c[0] - a[0]), Integer(c[1] - a[1]), Integer(c[2] - a[2])};
        std::array<Integer, 3> normal{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                      u[0] * v[1] - u[1] * v[0]};
        if (normal[0] == 0 && normal[1] == 0 && normal[2] == 0) return;
        bool pos = false;
        bool neg = false;
        IndexSet on;
        for (std::size_t k = 0; k < n; ++k) {
            Integer s = 0;
            for (int c3 = 0; c3 < 3; ++c3) s += normal[c3] * (pts[k][c3] - a[c3]);
            if (s > 0) pos = true;
            if (s < 0) neg = true;
            if (s == 0) on.push_back(k);
        }
        if (pos && neg) return;
        if (!pos && !neg) return;
        facets.insert(on);
    });

    const auto& apex = pts[*facets.begin()->begin()];
    Integer six_vol = 0;
    for (const auto& facet : facets) {
        // project to the coordinate plane where the facet stays 2-dimensional
        std::vector<LatticePoint> proj;
        std::size_t drop = 0;
        for (; drop < 3; ++drop) {
            std::vector<LatticePoint> cand;
            for (auto k : facet) {
                LatticePoint q;
                for (std::size_t c = 0; c < 3; ++c)
                    if (c != drop) q.push_back(pts[k][c]);
                cand.push_back(q);
            }
            if (planar_hull(cand).size() >= 3) {
                proj = cand;
                break;
            }
        }
        const auto ring = planar_hull(proj);
        std::vector<LatticePoint> lifted;
        for (const auto& q : ring) {
            for (auto k : facet) {
                LatticePoint r;
                for (std::size_t c = 0; c < 3; ++c)
                    if (c != drop) r.push_back(pts[k][c]);
                if (r == q) {
                    lifted.push_back(pts[k]);
                    break;
                }
            }
        }
        for (std::size_t i = 1; i + 1 < lifted.size(); ++i) {
            IntMatrix m;
            for (const auto* p : {&lifted[0], &lifted[i], &lifted[i + 1]}) {
                m.push_back({Integer((*p)[0] - apex[0]), Integer((*p)[1] - apex[1]),
                             Integer((*p)[2] - apex[2])});
            }
            six_vol += abs(determinant(m));
        }
    }
    return Rational(six_vol, 6);
}

}  // namespace

PointConfiguration::PointConfiguration(std::size_t dim, std::vector<LatticePoint> points)
    : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) throw InvalidConfiguration("dimension must be positive");
    std::set<LatticePoint> seen;
    for (const auto& p : points_) {
        if (p.size() != dim_) throw InvalidConfiguration("point has wrong number of coordinates");
        if (!seen.insert(p).second) throw InvalidConfiguration("repeated point in configuration");
    }
}

bool PointConfiguration::full_dimensional() const {
    if (points_.size() < dim_ + 1) return false;
    IndexSet all(points_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return rank(difference_rows(*this, all)) == dim_;
}

std::vector<IndexSet> VertexColoring::classes() const {
    std::map<int, IndexSet> by_color;
    for (const auto& [point, c] : color) by_color[c].push_back(point);
    std::vector<IndexSet> out;
    for (auto& [c, members] : by_color) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

PointConfiguration simplex_lattice_points(std::size_t d, std::size_t k) {
    if (d == 0) throw InvalidConfiguration("dimension must be positive");
    std::vector<LatticePoint> pts;
    LatticePoint cur(d, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == d) {
            pts.push_back(cur);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(0, static_cast<std::int64_t>(k));
    return PointConfiguration(d, std::move(pts));
}

Rational AffineWitness::operator()(const LatticePoint& p) const {
    Rational v = offset;
    for (std::size_t i = 0; i < slope.size(); ++i) v += slope[i] * p[i];
    return v;
}

bool interpolate_lifting(const PointConfiguration& config, const Lifting& lifting,
                         const IndexSet& simplex, AffineWitness& out) {
    const std::size_t d = config.dim();
    RatMatrix a;
    std::vector<Rational> b;
    for (auto j : simplex) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < d; ++c) row.emplace_back(config[j][c]);
        row.emplace_back(1);
        a.push_back(std::move(row));
        b.emplace_back(lifting.values[j]);
    }
    std::vector<Rational> x;
    if (!solve_exact(std::move(a), std::move(b), x)) return false;
    out.offset = x.back();
    x.pop_back();
    out.slope = std::move(x);
    return true;
}

Subdivision regular_subdivision(const PointConfiguration& config, const Lifting& lifting) {
    if (lifting.values.size() != config.size())
        throw DimensionMismatch("lifting length does not match number of points");
    if (!config.full_dimensional()) throw NonFullDimensional();
    const std::size_t n = config.size();
    std::set<IndexSet> cells;
    for_each_subset(n, config.dim() + 1, [&](const IndexSet& simplex) {
        AffineWitness w;
        if (!interpolate_lifting(config, lifting, simplex, w)) return;
        IndexSet cell;
        for (std::size_t k = 0; k < n; ++k) {
            const Rational v = w(config[k]);
            if (v > lifting.values[k]) return;
            if (v == lifting.values[k]) cell.push_back(k);
        }
        cells.insert(std::move(cell));
    });
    return Subdivision{config, {cells.begin(), cells.end()}, lifting};
}

bool cell_witness(const Subdivision& sub, const IndexSet& cell, AffineWitness& out) {
    const auto& config = sub.config;
    bool found = false;
    IndexSet pick;
    for_each_subset(cell.size(), config.dim() + 1, [&](const IndexSet& local) {
        if (found) return;
        IndexSet simplex;
        for (auto i : local) simplex.push_back(cell[i]);
        if (interpolate_lifting(config, sub.lifting, simplex, out)) {
            found = true;
        }
    });
    if (!found) return false;
    for (std::size_t k = 0; k < config.size(); ++k) {
        const Rational v = out(config[k]);
        const bool inside = std::binary_search(cell.begin(), cell.end(), k);
        if (inside && v != sub.lifting.values[k]) return false;
        if (!inside && v >= sub.lifting.values[k]) return false;
    }
    return true;
}

SimplicialComplex as_simplicial_complex(const Subdivision& sub) {
    for (const auto& cell : sub.cells) {
        if (cell.size() != sub.config.dim() + 1) throw NonSimplicialCell(cell);
    }
    return SimplicialComplex{sub.config, sub.cells};
}

AdjacencyList dual_graph(const SimplicialComplex& complex) {
    const std::size_t d = complex.config.dim();
    const auto& f = complex.facets;
    AdjacencyList adj(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (ridge_overlap(f[i], f[j]) == d) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return adj;
}

std::variant<FacetBipartition, NotFoldable> facet_bipartition(const SimplicialComplex& complex) {
    const auto adj = dual_graph(complex);
    const std::size_t n = adj.size();
    std::vector<int> side(n, -1);
    std::vector<std::size_t> parent(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto v : adj[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    // walk both tree paths up to their common ancestor
                    IndexSet up_u{u};
                    IndexSet up_v{v};
                    std::set<std::size_t> anc_u{u};
                    for (auto w = u; parent[w] != n; w = parent[w]) {
                        up_u.push_back(parent[w]);
                        anc_u.insert(parent[w]);
                    }
                    auto w = v;
                    while (!anc_u.count(w)) {
                        w = parent[w];
                        up_v.push_back(w);
                    }
                    IndexSet cycle;
                    for (auto x : up_u) {
                        cycle.push_back(x);
                        if (x == w) break;
                    }
                    for (std::size_t k = up_v.size() - 1; k-- > 0;) cycle.push_back(up_v[k]);
                    return NotFoldable{std::move(cycle)};
                }
            }
        }
    }
    FacetBipartition parts;
    for (std::size_t i = 0; i < n; ++i) (side[i] == 0 ? parts.black : parts.white).push_back(i);
    return parts;
}

VertexColoring vertex_coloring(const SimplicialComplex& complex) {
    const std::size_t d = complex.config.dim();
    const auto& facets = complex.facets;
    VertexColoring out;
    out.num_colors = static_cast<int>(d + 1);
    if (facets.empty()) return out;
    const auto adj = dual_graph(complex);

    std::vector<bool> seen(facets.size(), false);
    for (std::size_t i = 0; i <= d; ++i) out.color[facets[0][i]] = static_cast<int>(i);
    seen[0] = true;
    std::deque<std::size_t> queue{0};
    std::size_t reached = 1;
    while (!queue.empty()) {
        const auto f = queue.front();
        queue.pop_front();
        for (auto g : adj[f]) {
            const auto& a = facets[f];
            const auto& b = facets[g];
            std::size_t leaving = 0;
            std::size_t entering = 0;
            for (auto v : a)
                if (!std::binary_search(b.begin(), b.end(), v)) leaving = v;
            for (auto v : b)
                if (!std::binary_search(a.begin(), a.end(), v)) entering = v;
            const int c = out.color.at(leaving);
            auto [it, inserted] = out.color.emplace(entering, c);
            if (!inserted && it->second != c) throw NotFoldableError();
            if (!seen[g]) {
                seen[g] = true;
                ++reached;
                queue.push_back(g);
            }
        }
    }
    if (reached != facets.size()) throw DisconnectedComplex();
    for (const auto& f : facets) {
        std::set<int> used;
        for (auto v : f) used.insert(out.color.at(v));
        if (used.size() != d + 1) throw NotFoldableError();
    }
    return out;
}

Integer normalized_volume(const PointConfiguration& config, const IndexSet& facet) {
    if (facet.size() != config.dim() + 1)
        throw DimensionMismatch("facet must have d+1 vertices");
    return abs(determinant(difference_rows(config, facet)));
}

std::size_t signature(const PointConfiguration& config, const SimplicialComplex& complex,
                      const FacetBipartition& parts) {
    auto odd_count = [&](const IndexSet& part) {
        long count = 0;
        for (auto f : part) {
            if (normalized_volume(config, complex.facets.at(f)) % 2 != 0) ++count;
        }
        return count;
    };
    const long diff = odd_count(parts.black) - odd_count(parts.white);
    return static_cast<std::size_t>(diff < 0 ? -diff : diff);
}

Rational hull_volume(const PointConfiguration& config) {
    if (!config.full_dimensional()) throw NonFullDimensional();
    switch (config.dim()) {
        case 1: {
            auto [lo, hi] = std::minmax_element(config.points().begin(), config.points().end());
            return Rational((*hi)[0] - (*lo)[0]);
        }
        case 2:
            return hull_area(config);
        case 3:
            return hull_volume_3d(config);
        default:
            throw UnsupportedDimension(config.dim());
    }
}

PointConfiguration minkowski_sum(const PointConfiguration& a, const PointConfiguration& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("Minkowski summands differ in dimension");
    std::set<LatticePoint> sums;
    for (const auto& p : a.points()) {
        for (const auto& q : b.points()) {
            LatticePoint s(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
            sums.insert(std::move(s));
        }
    }
    return PointConfiguration(a.dim(), {sums.begin(), sums.end()});
}

}  // namespace wronski
