#include "caloric/bowl_solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "caloric/correction.hpp"
#include "caloric/kernels.hpp"
#include "caloric/least_squares.hpp"

namespace caloric {

namespace {

/// Chebyshev-Gauss points of the first kind on [-1, 1] (no endpoints).
std::vector<double> chebyshev_nodes(int count) {
    std::vector<double> pts(count);
    for (int k = 0; k < count; ++k) {
        pts[k] = std::cos(std::numbers::pi * (k + 0.5) / count);
    }
    return pts;
}

/// Chebyshev-Lobatto points on [-1, 1] (endpoints included); the residual
/// check set reaches the rim of the ball.
std::vector<double> lobatto_nodes(int count) {
    std::vector<double> pts(count + 1);
    for (int k = 0; k <= count; ++k) {
        pts[k] = std::cos(std::numbers::pi * k / count);
    }
    return pts;
}

/// Tensor grid over [-r, r]^N filtered to the closed ball |y| <= r.
std::vector<std::vector<double>> ball_grid(const std::vector<double>& axis, double r, std::size_t n) {
    std::vector<std::vector<double>> pts;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<double> y(n);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = axis[idx[i]] * r;
            s += y[i] * y[i];
        }
        if (s <= r * r * (1.0 + 1e-14)) pts.push_back(std::move(y));
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < axis.size()) break;
            idx[i] = 0;
        }
        if (i == n) break;
    }
    return pts;
}

/// Spatial monomials of total degree <= d, graded-lex.
std::vector<MultiIndex> spatial_basis(std::size_t n, int d) {
    std::vector<MultiIndex> basis;
    for (const MultiIndex& alpha : monomials_up_to_height(n, d)) {
        if (alpha.temporal() == 0 && alpha.total_spatial_degree() <= d) basis.push_back(alpha);
    }
    return basis;
}

double eval_monomial(const MultiIndex& alpha, const std::vector<double>& y) {
    double v = 1.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::uint32_t k = 0; k < alpha.spatial(i); ++k) v *= y[i];
    }
    return v;
}

std::vector<double> centered(const CaloricBowl& bowl, const std::vector<double>& y_scaled) {
    std::vector<double> x(y_scaled.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = bowl.bottom.x[i] + y_scaled[i];
    return x;
}

struct FitWorkspace {
    std::vector<std::vector<double>> fit_nodes;    // centered y
    std::vector<std::vector<double>> check_nodes;  // centered y
    std::vector<double> fit_values;
    std::vector<double> check_values;
};

FitWorkspace sample_boundary(const BoundaryData& phi, const CaloricBowl& bowl, int fit_per_axis,
                             int check_density) {
    FitWorkspace ws;
    const std::size_t n = bowl.spatial_dimension();
    ws.fit_nodes = ball_grid(chebyshev_nodes(fit_per_axis), bowl.opening, n);
    ws.check_nodes = ball_grid(lobatto_nodes(check_density * fit_per_axis), bowl.opening, n);
    ws.fit_values.reserve(ws.fit_nodes.size());
    ws.check_values.reserve(ws.check_nodes.size());
    for (const auto& y : ws.fit_nodes) ws.fit_values.push_back(phi(centered(bowl, y)));
    for (const auto& y : ws.check_nodes) ws.check_values.push_back(phi(centered(bowl, y)));
    return ws;
}

double sup_residual_of(const Polynomial& p, const FitWorkspace& ws) {
    double sup = 0.0;
    for (std::size_t i = 0; i < ws.check_nodes.size(); ++i) {
        const SpaceTimePoint y(ws.check_nodes[i], 0.0);
        sup = std::max(sup, std::abs(p.evaluate(y) - ws.check_values[i]));
    }
    return sup;
}

BoundaryFit fit_on_workspace(const FitWorkspace& ws, std::size_t n, int degree,
                             const FitOptions& options) {
    for (int d = degree;; --d) {
        const std::vector<MultiIndex> basis = spatial_basis(n, d);
        if (ws.fit_nodes.size() < basis.size()) {
            throw std::invalid_argument("fit_boundary_polynomial: fewer nodes than basis functions");
        }
        std::vector<std::vector<double>> a(ws.fit_nodes.size(), std::vector<double>(basis.size()));
        for (std::size_t i = 0; i < ws.fit_nodes.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                a[i][j] = eval_monomial(basis[j], ws.fit_nodes[i]);
            }
        }
        const LeastSquaresResult ls = solve_least_squares(std::move(a), ws.fit_values);
        if (ls.condition_estimate > options.condition_limit && d > 0) continue;  // fall back

        double scale = 1.0;
        for (double v : ws.check_values) scale = std::max(scale, std::abs(v));

        // Exact-coefficient pass: snap near-rationals, keep exact dyadics
        // otherwise; revert wholesale if snapping hurt the residual.
        Polynomial snapped(n), dyadic(n);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const double c = ls.coefficients[j];
            dyadic.add_term(basis[j], rational_from_double(c));
            const auto r = snap_to_rational(c, options.snap_tolerance * std::max(1.0, std::abs(c)),
                                            options.snap_max_denominator);
            snapped.add_term(basis[j], r ? *r : rational_from_double(c));
        }
        const double resid_dyadic = sup_residual_of(dyadic, ws);
        const double resid_snapped = sup_residual_of(snapped, ws);

        BoundaryFit fit;
        if (resid_snapped <= resid_dyadic + 1e-12 * scale) {
            fit.polynomial = std::move(snapped);
            fit.sup_residual = resid_snapped;
        } else {
            fit.polynomial = std::move(dyadic);
            fit.sup_residual = resid_dyadic;
        }
        fit.condition = ls.condition_estimate;
        fit.degree = d;
        return fit;
    }
}

}  // namespace

BoundaryFit fit_boundary_polynomial(const BoundaryData& phi, const CaloricBowl& bowl, int degree,
                                    const FitOptions& options) {
    if (degree < 0) throw std::invalid_argument("fit_boundary_polynomial: degree must be >= 0");
    const int per_axis = options.nodes_per_axis > 0 ? options.nodes_per_axis : 2 * (degree + 1);
    const FitWorkspace ws = sample_boundary(phi, bowl, per_axis, options.check_density);
    return fit_on_workspace(ws, bowl.spatial_dimension(), degree, options);
}

std::vector<std::vector<double>> boundary_fit_offsets(std::size_t spatial_dim, double radius,
                                                      int per_axis) {
    return ball_grid(chebyshev_nodes(per_axis), radius, spatial_dim);
}

std::vector<MultiIndex> spatial_monomials(std::size_t spatial_dim, int degree) {
    return spatial_basis(spatial_dim, degree);
}

BowlSolution solve_bowl(const CaloricBowl& bowl, const BoundaryData& phi,
                        const BowlSolveOptions& options) {
    const std::size_t n = bowl.spatial_dimension();
    if (options.fixed_degree && options.target_tolerance) {
        throw std::invalid_argument("solve_bowl: fixed_degree and target_tolerance are exclusive");
    }
    const int d_max = options.fixed_degree ? *options.fixed_degree : options.max_degree;
    if (d_max < 0) throw std::invalid_argument("solve_bowl: degree must be >= 0");

    // One fixed node set across the escalation keeps the fits nested and the
    // residual non-increasing in the degree.
    FitOptions fit_opts = options.fit;
    if (fit_opts.nodes_per_axis == 0) fit_opts.nodes_per_axis = 2 * (d_max + 1);
    const FitWorkspace ws = sample_boundary(phi, bowl, fit_opts.nodes_per_axis, fit_opts.check_density);

    const ExtensionSolver extender(n, std::max(0, d_max - 2));

    std::optional<BoundaryFit> best;
    const int d_first = options.fixed_degree ? *options.fixed_degree : 0;
    for (int d = d_first; d <= d_max; ++d) {
        BoundaryFit fit = fit_on_workspace(ws, n, d, fit_opts);
        if (!best || fit.sup_residual < best->sup_residual) best = std::move(fit);
        if (options.fixed_degree) break;
        if (options.target_tolerance &&
            options.safety_factor * best->sup_residual <= *options.target_tolerance) {
            break;
        }
        if (!options.target_tolerance && best->sup_residual == 0.0) break;
    }

    BowlSolution out;
    out.degree = best->degree;
    out.condition = best->condition;
    out.certified_error = options.safety_factor * best->sup_residual;
    out.tolerance_met =
        !options.target_tolerance || out.certified_error <= *options.target_tolerance;

    // Extend the centered fit to a caloric polynomial, then translate back.
    const Polynomial centered_u = extender.extend(best->polynomial);
    std::vector<Rational> shift(n + 1);
    for (std::size_t i = 0; i < n; ++i) shift[i] = rational_from_double(-bowl.bottom.x[i]);
    shift[n] = rational_from_double(-bowl.bottom.t);
    out.u = centered_u.translate(shift);

    out.boundary_residuals.reserve(ws.check_nodes.size());
    for (std::size_t i = 0; i < ws.check_nodes.size(); ++i) {
        const SpaceTimePoint y(ws.check_nodes[i], 0.0);
        out.boundary_residuals.emplace_back(centered(bowl, ws.check_nodes[i]),
                                            best->polynomial.evaluate(y) - ws.check_values[i]);
    }
    return out;
}

std::vector<SpaceTimePoint> bowl_interior_samples(const CaloricBowl& bowl, std::size_t count) {
    const std::size_t n = bowl.spatial_dimension();
    std::vector<SpaceTimePoint> pts;
    pts.reserve(count);
    // Low-discrepancy radii/angles/depths from irrational rotations.
    auto fract = [](double v) { return v - std::floor(v); };
    for (std::size_t j = 0; j < count; ++j) {
        const double rho = bowl.opening * 0.92 * std::sqrt(fract(0.6180339887498949 * (j + 1)));
        std::vector<double> y(n, 0.0);
        if (n == 1) {
            y[0] = (j % 2 == 0 ? 1.0 : -1.0) * rho;
        } else {
            const double th = 2.0 * std::numbers::pi * fract(0.7548776662466927 * (j + 1));
            y[0] = rho * std::cos(th);
            y[1] = rho * std::sin(th);
            if (n == 3) {
                const double c = 2.0 * fract(0.8191725133961644 * (j + 1)) - 1.0;
                const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
                y[0] = rho * s * std::cos(th);
                y[1] = rho * s * std::sin(th);
                y[2] = rho * c;
            }
        }
        double ssq = 0.0;
        for (double v : y) ssq += v * v;
        const double frac = 0.1 + 0.8 * fract(0.5698402909980532 * (j + 1));
        const double tau = ssq + (bowl.opening * bowl.opening - ssq) * frac;
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = bowl.bottom.x[i] + y[i];
        pts.emplace_back(std::move(x), bowl.bottom.t + tau);
    }
    return pts;
}

std::vector<HfStage> approximate_h_f(const CaloricBowl& bowl, const BoundaryData& f,
                                     const std::vector<SpaceTimePoint>& probes,
                                     const HfOptions& options) {
    const std::size_t n = bowl.spatial_dimension();

    // Precompute f over the minimization grid.
    const std::vector<std::vector<double>> grid = [&] {
        const int per_axis =
            std::max(2, static_cast<int>(std::round(std::pow(options.regularization_nodes,
                                                             1.0 / static_cast<double>(n)))));
        std::vector<double> axis(per_axis);
        for (int k = 0; k < per_axis; ++k) axis[k] = -1.0 + 2.0 * k / (per_axis - 1);
        return ball_grid(axis, bowl.opening, n);
    }();
    std::vector<double> f_values;
    std::vector<double> lift(grid.size());  // |w|^2 of each grid point
    f_values.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = f(centered(bowl, grid[i]));
        if (!std::isfinite(v) || v > 1e100) {
            throw std::invalid_argument("approximate_h_f: data must be bounded above");
        }
        f_values.push_back(v);
        double s = 0.0;
        for (double c : grid[i]) s += c * c;
        lift[i] = s;
    }

    std::vector<HfStage> stages;
    for (double k : options.lipschitz_schedule) {
        // phi_k(y) = min_w f(w) + k * caloric distance between the lifted
        // boundary points, over w on the grid plus the evaluation point
        // itself (the caloric distance between neighbours scales like the
        // square root of the grid step, so the zero-distance candidate is
        // what keeps phi_k <= f pointwise).
        auto phi_k = [&, k](const std::vector<double>& x) {
            std::vector<double> y(n);
            double ysq = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                y[i] = x[i] - bowl.bottom.x[i];
                ysq += y[i] * y[i];
            }
            double best = f(x);
            for (std::size_t w = 0; w < grid.size(); ++w) {
                double dsq = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double d = grid[w][i] - y[i];
                    dsq += d * d;
                }
                const double dt = lift[w] - ysq;
                const double dist = std::pow(dsq * dsq + dt * dt, 0.25);
                best = std::min(best, f_values[w] + k * dist);
            }
            return best;
        };

        HfStage stage;
        stage.lipschitz = k;
        stage.solution = solve_bowl(bowl, BoundaryData::from_ball_function(phi_k), options.solve);
        stage.probe_values.reserve(probes.size());
        for (const auto& z : probes) stage.probe_values.push_back(stage.solution.u.evaluate(z));
        stages.push_back(std::move(stage));
    }
    return stages;
}

}  // namespace caloric
