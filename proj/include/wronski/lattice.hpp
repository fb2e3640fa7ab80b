#pragma once

#include "wronski/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace wronski {

using LatticePoint = std::vector<std::int64_t>;
using IndexSet = std::vector<std::size_t>;

// Ordered set of distinct lattice points in Z^d. Index order is significant:
// liftings, colorings and exponents all refer to points by position.
class PointConfiguration {
public:
    PointConfiguration() = default;
    PointConfiguration(std::size_t dim, std::vector<LatticePoint> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<LatticePoint>& points() const { return points_; }

    bool full_dimensional() const;

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<LatticePoint> points_;
};

struct Lifting {
    std::vector<std::int64_t> values;

    friend bool operator==(const Lifting&, const Lifting&) = default;
};

struct Subdivision {
    PointConfiguration config;
    std::vector<IndexSet> cells;
    Lifting lifting;
};

struct SimplicialComplex {
    PointConfiguration config;
    std::vector<IndexSet> facets;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

struct FacetBipartition {
    IndexSet black;
    IndexSet white;
};

// Outcome of a failed 2-coloring: a closed walk of odd length in the dual
// graph, listed as facet indices (the last facet is adjacent to the first).
struct NotFoldable {
    IndexSet odd_cycle;
};

struct VertexColoring {
    std::map<std::size_t, int> color;
    int num_colors = 0;

    // Point indices grouped by color, each class sorted, classes ordered by
    // their smallest member.
    std::vector<IndexSet> classes() const;
};

using AdjacencyList = std::vector<std::vector<std::size_t>>;

/// All v in Z^d with v_i >= 0 and sum(v) <= k, in ascending lexicographic order.
PointConfiguration simplex_lattice_points(std::size_t d, std::size_t k);

/// Exact affine map x -> slope . x + offset.
struct AffineWitness {
    std::vector<Rational> slope;
    Rational offset;

    Rational operator()(const LatticePoint& p) const;
};

/// Interpolates the affine function through the lifted points of `simplex`
/// (d+1 affinely independent indices). Returns false if they are dependent.
bool interpolate_lifting(const PointConfiguration& config, const Lifting& lifting,
                         const IndexSet& simplex, AffineWitness& out);

/// Lower hull cells of the lifted configuration (a_j, lambda_j).
///
/// Every affinely independent (d+1)-subset is interpolated; the subset spans a
/// lower facet iff the interpolant lies weakly below all lifted points. The
/// cell is then every point on the interpolant, so non-generic liftings give
/// cells with more than d+1 points. Cells are sorted, and so is the list.
Subdivision regular_subdivision(const PointConfiguration& config, const Lifting& lifting);

/// Affine witness of a subdivision cell. False if the cell is not a lower face.
bool cell_witness(const Subdivision& sub, const IndexSet& cell, AffineWitness& out);

SimplicialComplex as_simplicial_complex(const Subdivision& sub);

AdjacencyList dual_graph(const SimplicialComplex& complex);

/// Breadth-first 2-coloring of the dual graph, one component at a time in
/// order of lowest facet index; that facet goes black.
std::variant<FacetBipartition, NotFoldable> facet_bipartition(const SimplicialComplex& complex);

/// Proper (d+1)-coloring propagated across ridges from facet 0, whose
/// vertices get colors 0..d in ascending index order.
VertexColoring vertex_coloring(const SimplicialComplex& complex);

Integer normalized_volume(const PointConfiguration& config, const IndexSet& facet);

std::size_t signature(const PointConfiguration& config, const SimplicialComplex& complex,
                      const FacetBipartition& parts);

/// Euclidean volume of conv(A) for d in {1, 2, 3}.
Rational hull_volume(const PointConfiguration& config);

/// Pointwise sums a + b, deduplicated, in lexicographic order.
PointConfiguration minkowski_sum(const PointConfiguration& a, const PointConfiguration& b);

}  // namespace wronski
