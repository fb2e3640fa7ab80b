#pragma once

#include "wronski/polynomial.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace wronski {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

struct NumericTerm {
    Complex coeff;
    std::vector<unsigned> exps;
};

// Floating-point image of a square PolynomialSystem.
class NumericSystem {
public:
    NumericSystem() = default;
    NumericSystem(std::size_t nvars, std::vector<std::vector<NumericTerm>> polys);

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return polys_.size(); }
    const std::vector<std::vector<NumericTerm>>& polynomials() const { return polys_; }
    unsigned degree(std::size_t k) const { return degrees_[k]; }

    void evaluate(const CVector& x, CVector& f) const;
    // Values and Jacobian in one pass.
    void evaluate(const CVector& x, CVector& f, CMatrix& jac) const;
    // Per polynomial, sum over terms of |c| |x^a|. Used to scale residuals.
    Eigen::VectorXd term_magnitudes(const CVector& x) const;

private:
    std::size_t nvars_ = 0;
    std::vector<std::vector<NumericTerm>> polys_;
    std::vector<unsigned> degrees_;
    unsigned max_exp_ = 0;
};

NumericSystem to_numeric(const PolynomialSystem& system);

struct TrackerSettings {
    double newton_tol = 1e-10;
    double refine_tol = 1e-12;
    int max_newton_iters = 3;
    int max_refine_iters = 20;
    double initial_step = 0.05;
    double max_step = 1.0;
    double min_step = 1e-14;
    // Tracking stops at 1 - t = end_distance; the endpoint is then refined on F.
    double end_distance = 1e-40;
    // A refined endpoint may move at most this much (relative) from the path end.
    double endpoint_drift = 1e-6;
    double step_expand = 2.0;
    double step_shrink = 0.5;
    double divergence_norm = 1e8;
    double dedupe_tol = 1e-8;
    double real_tol = 1e-8;
    double torus_tol = 1e-8;
    double singular_cond = 1e12;
    std::uint64_t seed = 0;
    // Consecutive accepted steps before the step grows.
    int expand_after = 3;
    std::size_t max_steps = 200000;
    // Drop endpoints outside (C*)^m from the reported solutions.
    bool only_torus = false;

    // Throws DomainError if a tolerance is not positive or min_step >= initial_step.
    void validate() const;
};

// H(x, t) = (1 - t) gamma G(x) + t F(x), tracked from t = 0 to t = 1.
//
// Paths are parametrized by u = -ln(1 - t), so the remaining distance
// e = 1 - t = exp(-u) is held exactly even when it is far below machine
// epsilon. Roots whose start-system magnitude dwarfs the target's only settle
// once e is tiny, which plain t cannot resolve.
struct Homotopy {
    const NumericSystem* start;
    const NumericSystem* target;
    Complex gamma;

    // h and its x- and u-derivatives at remaining distance e = 1 - t.
    void evaluate(const CVector& x, double e, CVector& h, CMatrix& hx, CVector& hu) const;
};

struct StartSystem {
    NumericSystem system;
    std::vector<CVector> solutions;
};

/// G_k = x_k^{d_k} - 1 with d_k the total degree of target polynomial k;
/// solutions are all tuples of roots of unity, in mixed-radix order.
StartSystem total_degree_start(const NumericSystem& target);

/// Point on the unit circle drawn from a seeded generator.
Complex gamma_from_seed(std::uint64_t seed);

enum class PathStatus { Converged, Diverged, Failed };

struct PathOutcome {
    PathStatus status = PathStatus::Failed;
    CVector endpoint;
    // Parameter reached, as u = -ln(1 - t).
    double u = 0.0;
    std::size_t steps = 0;
    std::size_t rejected = 0;
    std::string reason;
};

/// Adaptive RK4 predictor with Newton corrector, stepping in u. The corrector
/// must reach newton_tol (relative) within max_newton_iters while contracting;
/// otherwise the step shrinks. Steps grow after expand_after consecutive
/// successes. A path diverges when its norm passes divergence_norm or the step
/// underflows min_step. Reaching end_distance counts as converged; whether the
/// endpoint is a root is decided by refinement in solve().
PathOutcome track_path(const Homotopy& h, const CVector& x0, const TrackerSettings& settings);

struct Solution {
    std::vector<Complex> coords;
    double residual = 0.0;
    bool singular = false;
    bool real = false;
    bool in_torus = false;
    // Paths that ended here.
    std::size_t multiplicity = 1;
    double condition = 0.0;
};

struct SolveResult {
    std::vector<Solution> solutions;
    std::size_t paths_tracked = 0;
    std::size_t paths_diverged = 0;
    std::size_t paths_failed = 0;
    // Endpoints dropped because they left the torus (only_torus).
    std::size_t paths_outside_torus = 0;
    std::uint64_t seed = 0;

    std::size_t count_nonsingular() const;
    std::size_t count_singular() const;
    std::size_t count_real_nonsingular() const;
};

enum class Schedule { Serial, Parallel };

/// Tracks every start path. The serial schedule is the reference; the
/// parallel one distributes paths over OpenMP threads and must agree with it
/// exactly, since each path is a pure function of its start point.
std::vector<PathOutcome> track_all(const Homotopy& h, const std::vector<CVector>& starts,
                                   const TrackerSettings& settings, Schedule schedule);

/// Relative residual of f at x: max over k of |f_k(x)| / sum_t |c_t x^a_t|.
double relative_residual(const NumericSystem& f, const CVector& x);

/// Newton refinement on the target system. Returns true when the update
/// dropped below refine_tol within max_refine_iters.
bool refine(const NumericSystem& f, CVector& x, const TrackerSettings& settings);

/// Condition number of the Jacobian with rows scaled by term magnitudes and
/// columns by |x_j|, so it is invariant under rescaling of equations and
/// coordinates.
double scaled_condition(const NumericSystem& f, const CVector& x);

/// Total-degree homotopy on a square system: track, refine, classify, sort
/// canonically and deduplicate.
SolveResult solve(const PolynomialSystem& system, const TrackerSettings& settings,
                  Schedule schedule = Schedule::Parallel);
SolveResult solve(const NumericSystem& system, const TrackerSettings& settings,
                  Schedule schedule = Schedule::Parallel);

/// Real parts of the nonsingular real solutions, sorted lexicographically.
std::vector<std::vector<double>> real_solutions(const SolveResult& result);

struct IntervalCheck {
    bool holds = true;
    std::vector<double> s_values;
};

/// Holds iff no real solution has its s coordinate strictly inside (0, 1).
IntervalCheck check_s_interval(const SolveResult& result, std::size_t s_index);

}  // namespace wronski
