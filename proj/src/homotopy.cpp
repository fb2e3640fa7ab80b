#include "wronski/homotopy.hpp"

#include "wronski/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wronski {

namespace {

double max_norm(const CVector& v) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

bool all_finite(const CVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    }
    return true;
}

// powers[j][e] = x_j^e
std::vector<std::vector<Complex>> power_table(const CVector& x, unsigned max_exp) {
    std::vector<std::vector<Complex>> p(static_cast<std::size_t>(x.size()),
                                        std::vector<Complex>(max_exp + 1));
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        auto& row = p[static_cast<std::size_t>(j)];
        row[0] = 1.0;
        for (unsigned e = 1; e <= max_exp; ++e) row[e] = row[e - 1] * x[j];
    }
    return p;
}

bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

std::vector<Complex> to_std(const CVector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

NumericSystem::NumericSystem(std::size_t nvars, std::vector<std::vector<NumericTerm>> polys)
    : nvars_(nvars), polys_(std::move(polys)) {
    for (const auto& p : polys_) {
        unsigned deg = 0;
        for (const auto& t : p) {
            if (t.exps.size() != nvars_) throw DimensionMismatch("term exponent length mismatch");
            if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
                throw DomainError("non-finite coefficient");
            unsigned d = 0;
            for (auto e : t.exps) {
                d += e;
                max_exp_ = std::max(max_exp_, e);
            }
            deg = std::max(deg, d);
        }
        degrees_.push_back(deg);
    }
}

void NumericSystem::evaluate(const CVector& x, CVector& f) const {
    const auto pw = power_table(x, max_exp_);
    f.setZero(static_cast<Eigen::Index>(polys_.size()));
    for (std::size_t k = 0; k < polys_.size(); ++k) {
        Complex acc = 0.0;
        for (const auto& t : polys_[k]) {
            Complex m = t.coeff;
            for (std::size_t j = 0; j < nvars_; ++j) m *= pw[j][t.exps[j]];
            acc += m;
        }
        f[static_cast<Eigen::Index>(k)] = acc;
    }
}

void NumericSystem::evaluate(const CVector& x, CVector& f, CMatrix& jac) const {
    const auto pw = power_table(x, max_exp_);
    const auto n = static_cast<Eigen::Index>(nvars_);
    f.setZero(static_cast<Eigen::Index>(polys_.size()));
    jac.setZero(static_cast<Eigen::Index>(polys_.size()), n);
    for (std::size_t k = 0; k < polys_.size(); ++k) {
        const auto row = static_cast<Eigen::Index>(k);
        for (const auto& t : polys_[k]) {
            Complex m = t.coeff;
            for (std::size_t j = 0; j < nvars_; ++j) m *= pw[j][t.exps[j]];
            f[row] += m;
            for (std::size_t j = 0; j < nvars_; ++j) {
                const unsigned e = t.exps[j];
                if (e == 0) continue;
                Complex d = t.coeff * static_cast<double>(e) * pw[j][e - 1];
                for (std::size_t i = 0; i < nvars_; ++i)
                    if (i != j) d *= pw[i][t.exps[i]];
                jac(row, static_cast<Eigen::Index>(j)) += d;
            }
        }
    }
}

Eigen::VectorXd NumericSystem::term_magnitudes(const CVector& x) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(polys_.size()));
    for (std::size_t k = 0; k < polys_.size(); ++k) {
        for (const auto& t : polys_[k]) {
            double m = std::abs(t.coeff);
            for (std::size_t j = 0; j < nvars_; ++j)
                m *= std::pow(std::abs(x[static_cast<Eigen::Index>(j)]), t.exps[j]);
            out[static_cast<Eigen::Index>(k)] += m;
        }
    }
    return out;
}

NumericSystem to_numeric(const PolynomialSystem& system) {
    if (!system.is_square()) throw NotSquare(system.size(), system.vars().size());
    std::vector<std::vector<NumericTerm>> polys;
    for (const auto& p : system.polynomials()) {
        std::vector<NumericTerm> terms;
        for (const auto& [e, c] : p.terms()) {
            terms.push_back({Complex(to_double(c), 0.0), {e.begin(), e.end()}});
        }
        polys.push_back(std::move(terms));
    }
    return NumericSystem(system.vars().size(), std::move(polys));
}

void TrackerSettings::validate() const {
    for (double v : {newton_tol, refine_tol, initial_step, max_step, min_step, end_distance,
                     endpoint_drift, step_expand,
                     step_shrink, divergence_norm, dedupe_tol, real_tol, torus_tol, singular_cond}) {
        if (!(v > 0.0)) throw DomainError("tracker tolerances must be strictly positive");
    }
    if (!(min_step < initial_step)) throw DomainError("min_step must be below initial_step");
    if (!(step_shrink < 1.0) || !(step_expand > 1.0))
        throw DomainError("step_shrink must be < 1 and step_expand > 1");
    if (max_newton_iters < 1 || max_refine_iters < 1 || expand_after < 1)
        throw DomainError("iteration counts must be positive");
}

void Homotopy::evaluate(const CVector& x, double e, CVector& h, CMatrix& hx, CVector& hu) const {
    CVector g;
    CMatrix gx;
    CVector f;
    CMatrix fx;
    start->evaluate(x, g, gx);
    target->evaluate(x, f, fx);
    h = e * gamma * g + (1.0 - e) * f;
    hx = e * gamma * gx + (1.0 - e) * fx;
    // dH/du = dH/dt * dt/du with dt/du = e
    hu = e * (f - gamma * g);
}

StartSystem total_degree_start(const NumericSystem& target) {
    const std::size_t m = target.nvars();
    if (target.size() != m) throw NotSquare(target.size(), m);
    std::vector<std::vector<NumericTerm>> polys;
    std::vector<unsigned> degs;
    for (std::size_t k = 0; k < m; ++k) {
        const unsigned d = target.degree(k);
        if (d == 0) throw ZeroDegreePolynomial(k);
        degs.push_back(d);
        std::vector<unsigned> lead(m, 0);
        lead[k] = d;
        polys.push_back({{Complex(1.0, 0.0), lead}, {Complex(-1.0, 0.0), std::vector<unsigned>(m, 0)}});
    }
    StartSystem out{NumericSystem(m, std::move(polys)), {}};

    std::size_t total = 1;
    for (auto d : degs) total *= d;
    out.solutions.reserve(total);
    std::vector<unsigned> digit(m, 0);
    for (std::size_t n = 0; n < total; ++n) {
        CVector x(static_cast<Eigen::Index>(m));
        for (std::size_t k = 0; k < m; ++k) {
            x[static_cast<Eigen::Index>(k)] =
                std::polar(1.0, 2.0 * std::numbers::pi * digit[k] / static_cast<double>(degs[k]));
        }
        out.solutions.push_back(std::move(x));
        for (std::size_t k = m; k-- > 0;) {
            if (++digit[k] < degs[k]) break;
            digit[k] = 0;
        }
    }
    return out;
}

Complex gamma_from_seed(std::uint64_t seed) {
    // splitmix64, so the angle does not depend on the standard library's distributions
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
    return std::polar(1.0, 2.0 * std::numbers::pi * u);
}

PathOutcome track_path(const Homotopy& hom, const CVector& x0, const TrackerSettings& settings) {
    PathOutcome out;
    CVector x = x0;
    const double u_end = -std::log(settings.end_distance);
    double u = 0.0;
    double step = settings.initial_step;
    int streak = 0;

    CVector h;
    CMatrix hx;
    CVector hu;
    auto tangent = [&](const CVector& at, double uu, CVector& v) {
        hom.evaluate(at, std::exp(-uu), h, hx, hu);
        v = hx.partialPivLu().solve(-hu);
        return all_finite(v);
    };
    auto correct = [&](CVector& y, double uu) {
        const double e = std::exp(-uu);
        double prev = 0.0;
        for (int it = 0; it < settings.max_newton_iters; ++it) {
            hom.evaluate(y, e, h, hx, hu);
            const CVector dx = hx.partialPivLu().solve(-h);
            if (!all_finite(dx)) return false;
            y += dx;
            const double nrm = max_norm(dx);
            if (nrm <= settings.newton_tol * (1.0 + max_norm(y))) return true;
            if (it > 0 && nrm > 0.5 * prev) return false;
            prev = nrm;
        }
        return false;
    };

    CVector k1, k2, k3, k4;
    while (u < u_end) {
        if (out.steps + out.rejected >= settings.max_steps) {
            out.status = PathStatus::Failed;
            out.reason = "step budget exhausted";
            break;
        }
        if (max_norm(x) > settings.divergence_norm) {
            out.status = PathStatus::Diverged;
            out.reason = "norm exceeded divergence threshold";
            break;
        }
        const bool last = step >= u_end - u;
        const double du = last ? u_end - u : step;
        bool ok = tangent(x, u, k1) && tangent(x + 0.5 * du * k1, u + 0.5 * du, k2) &&
                  tangent(x + 0.5 * du * k2, u + 0.5 * du, k3) && tangent(x + du * k3, u + du, k4);
        CVector y;
        if (ok) {
            y = x + (du / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            ok = correct(y, last ? u_end : u + du);
        }
        if (ok) {
            x = std::move(y);
            u = last ? u_end : u + du;
            ++out.steps;
            if (++streak >= settings.expand_after) {
                step = std::min(step * settings.step_expand, settings.max_step);
                streak = 0;
            }
        } else {
            ++out.rejected;
            streak = 0;
            step *= settings.step_shrink;
            if (step < settings.min_step) {
                out.status = PathStatus::Diverged;
                out.reason = "step size underflow";
                break;
            }
        }
    }
    if (u >= u_end) out.status = PathStatus::Converged;
    out.u = u;
    out.endpoint = std::move(x);
    return out;
}

std::vector<PathOutcome> track_all(const Homotopy& h, const std::vector<CVector>& starts,
                                   const TrackerSettings& settings, Schedule schedule) {
    std::vector<PathOutcome> out(starts.size());
    const auto n = static_cast<std::ptrdiff_t>(starts.size());
    if (schedule == Schedule::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = track_path(h, starts[i], settings);
        return out;
    }
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = track_path(h, starts[i], settings);
    return out;
}

double relative_residual(const NumericSystem& f, const CVector& x) {
    CVector v;
    f.evaluate(x, v);
    const auto mags = f.term_magnitudes(x);
    double r = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double scale = mags[k] > 0.0 ? mags[k] : 1.0;
        r = std::max(r, std::abs(v[k]) / scale);
    }
    return r;
}

bool refine(const NumericSystem& f, CVector& x, const TrackerSettings& settings) {
    CVector v;
    CMatrix j;
    for (int it = 0; it < settings.max_refine_iters; ++it) {
        f.evaluate(x, v, j);
        const CVector dx = j.partialPivLu().solve(-v);
        if (!all_finite(dx)) return false;
        x += dx;
        if (max_norm(dx) <= settings.refine_tol * (1.0 + max_norm(x))) return true;
    }
    return false;
}

double scaled_condition(const NumericSystem& f, const CVector& x) {
    CVector v;
    CMatrix j;
    f.evaluate(x, v, j);
    const auto mags = f.term_magnitudes(x);
    for (Eigen::Index r = 0; r < j.rows(); ++r) {
        if (mags[r] > 0.0) j.row(r) /= mags[r];
    }
    for (Eigen::Index c = 0; c < j.cols(); ++c) {
        const double s = std::abs(x[c]);
        if (s > 0.0) j.col(c) *= s;
    }
    Eigen::JacobiSVD<CMatrix> svd(j);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0.0;
    const double smin = sv[sv.size() - 1];
    if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
    return sv[0] / smin;
}

std::size_t SolveResult::count_nonsingular() const {
    return static_cast<std::size_t>(
        std::count_if(solutions.begin(), solutions.end(), [](const Solution& s) { return !s.singular; }));
}

std::size_t SolveResult::count_singular() const { return solutions.size() - count_nonsingular(); }

std::size_t SolveResult::count_real_nonsingular() const {
    return static_cast<std::size_t>(std::count_if(solutions.begin(), solutions.end(),
                                                  [](const Solution& s) { return !s.singular && s.real; }));
}

SolveResult solve(const PolynomialSystem& system, const TrackerSettings& settings, Schedule schedule) {
    return solve(to_numeric(system), settings, schedule);
}

SolveResult solve(const NumericSystem& system, const TrackerSettings& settings, Schedule schedule) {
    settings.validate();
    const auto start = total_degree_start(system);
    const Homotopy hom{&start.system, &system, gamma_from_seed(settings.seed)};
    const auto paths = track_all(hom, start.solutions, settings, schedule);

    SolveResult result;
    result.seed = settings.seed;
    result.paths_tracked = paths.size();

    std::vector<Solution> endpoints;
    for (const auto& p : paths) {
        if (p.status == PathStatus::Diverged) {
            ++result.paths_diverged;
            continue;
        }
        if (p.status == PathStatus::Failed) {
            ++result.paths_failed;
            continue;
        }
        CVector x = p.endpoint;
        Solution s;
        const bool converged = refine(system, x, settings);
        if (!all_finite(x)) {
            ++result.paths_failed;
            continue;
        }
        // the path stopped short of a root, e.g. still creeping towards infinity
        if (max_norm(x - p.endpoint) > settings.endpoint_drift * (1.0 + max_norm(x))) {
            ++result.paths_diverged;
            continue;
        }
        s.coords = to_std(x);
        s.residual = relative_residual(system, x);
        s.condition = scaled_condition(system, x);
        s.singular = !converged || s.condition > settings.singular_cond;
        s.real = std::all_of(s.coords.begin(), s.coords.end(),
                             [&](const Complex& c) { return std::abs(c.imag()) < settings.real_tol; });
        s.in_torus = std::all_of(s.coords.begin(), s.coords.end(),
                                 [&](const Complex& c) { return std::abs(c) > settings.torus_tol; });
        endpoints.push_back(std::move(s));
    }

    std::sort(endpoints.begin(), endpoints.end(),
              [](const Solution& a, const Solution& b) { return lex_less(a.coords, b.coords); });
    for (auto& e : endpoints) {
        double scale = 1.0;
        for (const auto& c : e.coords) scale = std::max(scale, std::abs(c));
        auto same = std::find_if(result.solutions.begin(), result.solutions.end(), [&](const Solution& s) {
            double d = 0.0;
            for (std::size_t i = 0; i < s.coords.size(); ++i) d = std::max(d, std::abs(s.coords[i] - e.coords[i]));
            return d <= settings.dedupe_tol * scale;
        });
        if (same != result.solutions.end()) {
            ++same->multiplicity;
            same->singular = true;
            continue;
        }
        result.solutions.push_back(std::move(e));
    }
    if (settings.only_torus) {
        const auto before = result.solutions.size();
        std::erase_if(result.solutions, [](const Solution& s) { return !s.in_torus; });
        result.paths_outside_torus = before - result.solutions.size();
    }
    return result;
}

std::vector<std::vector<double>> real_solutions(const SolveResult& result) {
    std::vector<std::vector<double>> out;
    for (const auto& s : result.solutions) {
        if (!s.real || s.singular) continue;
        std::vector<double> r;
        for (const auto& c : s.coords) r.push_back(c.real());
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntervalCheck check_s_interval(const SolveResult& result, std::size_t s_index) {
    IntervalCheck check;
    for (const auto& s : result.solutions) {
        if (!s.real) continue;
        if (s_index >= s.coords.size()) throw DimensionMismatch("s index out of range");
        const double v = s.coords[s_index].real();
        check.s_values.push_back(v);
        if (v > 0.0 && v < 1.0) check.holds = false;
    }
    return check;
}

}  // namespace wronski
