#include "caloric/perron.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <numbers>
#include <stdexcept>

#include "caloric/correction.hpp"
#include "caloric/io_format.hpp"
#include "caloric/least_squares.hpp"

namespace caloric {

namespace {

/// Lattice index ranges per axis; empty() marks an unschedulable region.
struct IndexRange {
    std::vector<std::size_t> lo, hi;  // inclusive
    bool valid = false;

    bool overlaps(const IndexRange& other) const {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (hi[i] < other.lo[i] || other.hi[i] < lo[i]) return false;
        }
        return true;
    }
};

/// Covers [lo_phys, hi_phys] with lattice nodes, expanded by one step for
/// interpolation stencils and clamped to the grid. Invalid when the
/// physical region leaves the bounding box.
IndexRange cover_region(const GridFunction& grid, const std::vector<double>& lo_phys,
                        const std::vector<double>& hi_phys) {
    const std::size_t axes = grid.axes();
    const Box& box = grid.domain().bounding_box();
    IndexRange range;
    range.lo.resize(axes);
    range.hi.resize(axes);
    for (std::size_t i = 0; i < axes; ++i) {
        const double span = box.hi[i] - box.lo[i];
        const double tol = 1e-9 * span;
        if (lo_phys[i] < box.lo[i] - tol || hi_phys[i] > box.hi[i] + tol) return range;
        const double h = grid.spacing(i);
        const long ilo = static_cast<long>(std::floor((lo_phys[i] - box.lo[i]) / h + 1e-9)) - 1;
        const long ihi = static_cast<long>(std::ceil((hi_phys[i] - box.lo[i]) / h - 1e-9)) + 1;
        range.lo[i] = static_cast<std::size_t>(std::max(0L, ilo));
        range.hi[i] = static_cast<std::size_t>(
            std::min(static_cast<long>(grid.count(i)) - 1, ihi));
    }
    range.valid = true;
    return range;
}

bool all_non_exterior(const GridFunction& grid, const IndexRange& range) {
    std::vector<std::size_t> idx = range.lo;
    for (;;) {
        if (grid.node_class(grid.flatten(idx)) == NodeClass::exterior) return false;
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] <= range.hi[i]) break;
            idx[i] = range.lo[i];
        }
        if (i == idx.size()) return true;
    }
}

/// Per-run template shared by every scheduled bowl: fit sample offsets on
/// the normal boundary of the doubled bowl, lattice offsets of B-hat, and
/// the collapsed linear map from boundary samples to B-hat values.
struct BowlTemplate {
    std::vector<std::vector<double>> fit_offsets;  // spatial y_k
    std::vector<double> fit_depths;                // |y_k|^2
    std::vector<std::vector<long>> hat_offsets;    // lattice steps, spatial then temporal
    std::vector<std::vector<double>> op;           // |hat| x |fit|
};

BowlTemplate make_template(const GridFunction& grid, const SweepConfig& config) {
    const std::size_t n = grid.spatial_dimension();
    const double r = config.bowl_opening;
    const int degree = config.fit_degree;
    const int per_axis =
        config.fit_nodes_per_axis > 0 ? config.fit_nodes_per_axis : 2 * (degree + 1);

    BowlTemplate tpl;
    tpl.fit_offsets = boundary_fit_offsets(n, 2.0 * r, per_axis);
    tpl.fit_depths.reserve(tpl.fit_offsets.size());
    for (const auto& y : tpl.fit_offsets) {
        double s = 0.0;
        for (double v : y) s += v * v;
        tpl.fit_depths.push_back(s);
    }

    const std::vector<MultiIndex> fit_basis = spatial_monomials(n, degree);
    const std::size_t m = tpl.fit_offsets.size();
    const std::size_t nb = fit_basis.size();
    if (m < nb) throw std::invalid_argument("perron: fewer fit nodes than basis functions");

    auto eval_monomial = [n](const MultiIndex& alpha, const std::vector<double>& y, double tau) {
        double v = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::uint32_t k = 0; k < alpha.spatial(i); ++k) v *= y[i];
        }
        for (std::uint32_t k = 0; k < alpha.temporal(); ++k) v *= tau;
        return v;
    };

    // Pseudoinverse of the fit Vandermonde, column by column.
    std::vector<std::vector<double>> vander(m, std::vector<double>(nb));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            vander[i][j] = eval_monomial(fit_basis[j], tpl.fit_offsets[i], 0.0);
        }
    }
    std::vector<std::vector<double>> pinv(nb, std::vector<double>(m));
    for (std::size_t col = 0; col < m; ++col) {
        std::vector<double> e(m, 0.0);
        e[col] = 1.0;
        const auto ls = solve_least_squares(vander, e);
        for (std::size_t row = 0; row < nb; ++row) pinv[row][col] = ls.coefficients[row];
    }

    // Caloric extension of each fit monomial, as coefficients over the
    // space-time monomials of height <= degree.
    const std::vector<MultiIndex> st_basis = monomials_up_to_height(n, degree);
    std::map<MultiIndex, std::size_t, GradedLexLess> st_index;
    for (std::size_t i = 0; i < st_basis.size(); ++i) st_index.emplace(st_basis[i], i);
    const ExtensionSolver extender(n, std::max(0, degree - 2));
    std::vector<std::vector<double>> ext(st_basis.size(), std::vector<double>(nb, 0.0));
    for (std::size_t j = 0; j < nb; ++j) {
        const Polynomial u = extender.extend(Polynomial::monomial(n, fit_basis[j], 1));
        for (const auto& [alpha, c] : u.terms()) ext[st_index.at(alpha)][j] = c.get_d();
    }

    // B-hat lattice offsets: |dx|^2 < dtau <= r^2 relative to the bottom.
    const double ht = grid.spacing(n);
    const long max_dt = static_cast<long>(std::floor(r * r / ht * (1.0 + 1e-12)));
    std::vector<long> steps(n + 1, 0);
    std::vector<long> max_dx(n);
    for (std::size_t i = 0; i < n; ++i) {
        max_dx[i] = static_cast<long>(std::floor(r / grid.spacing(i)));
    }
    std::vector<std::vector<double>> eval_rows;
    auto emit = [&](const std::vector<long>& offs) {
        double dsq = 0.0;
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = offs[i] * grid.spacing(i);
            dsq += y[i] * y[i];
        }
        const double dtau = offs[n] * ht;
        if (!(dsq < dtau * (1.0 - 1e-12))) return;
        tpl.hat_offsets.push_back(offs);
        std::vector<double> row(st_basis.size());
        for (std::size_t j = 0; j < st_basis.size(); ++j) {
            row[j] = eval_monomial(st_basis[j], y, dtau);
        }
        eval_rows.push_back(std::move(row));
    };
    auto rec = [&](auto&& self, std::size_t axis) -> void {
        if (axis == n) {
            for (long dt = 1; dt <= max_dt; ++dt) {
                steps[n] = dt;
                emit(steps);
            }
            return;
        }
        for (long d = -max_dx[axis]; d <= max_dx[axis]; ++d) {
            steps[axis] = d;
            self(self, axis + 1);
        }
        steps[axis] = 0;
    };
    rec(rec, 0);

    // Collapse: values_on_hat = eval_rows * ext * pinv * data.
    std::vector<std::vector<double>> ext_pinv(st_basis.size(), std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < st_basis.size(); ++i) {
        for (std::size_t k = 0; k < nb; ++k) {
            const double e = ext[i][k];
            if (e == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) ext_pinv[i][j] += e * pinv[k][j];
        }
    }
    tpl.op.assign(tpl.hat_offsets.size(), std::vector<double>(m, 0.0));
    for (std::size_t row = 0; row < tpl.hat_offsets.size(); ++row) {
        for (std::size_t k = 0; k < st_basis.size(); ++k) {
            const double v = eval_rows[row][k];
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) tpl.op[row][j] += v * ext_pinv[k][j];
        }
    }
    return tpl;
}

struct Schedule {
    std::vector<std::size_t> bottoms;      // flat node indices, t slowest
    std::vector<IndexRange> hulls;         // expanded doubled-bowl hulls
    std::vector<std::vector<std::size_t>> waves;  // indices into bottoms, for parallel mode
};

Schedule build_schedule(const GridFunction& grid, const SweepConfig& config) {
    const std::size_t n = grid.spatial_dimension();
    const double r = config.bowl_opening;
    Schedule sched;

    // Lexicographic with t slowest so information propagates the way heat
    // flows: bowls reach upward from their bottoms.
    const std::size_t total = grid.node_count();
    std::vector<std::size_t> order(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        const auto idx = grid.unflatten(flat);
        std::size_t key = idx[n];
        for (std::size_t i = 0; i < n; ++i) key = key * grid.count(i) + idx[i];
        order[flat] = key;
    }
    std::vector<std::size_t> nodes(total);
    for (std::size_t flat = 0; flat < total; ++flat) nodes[flat] = flat;
    std::sort(nodes.begin(), nodes.end(),
              [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });

    for (std::size_t flat : nodes) {
        if (grid.node_class(flat) == NodeClass::exterior) continue;
        const SpaceTimePoint z0 = grid.point(flat);
        std::vector<double> lo(n + 1), hi(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = z0.x[i] - 2.0 * r;
            hi[i] = z0.x[i] + 2.0 * r;
        }
        lo[n] = z0.t;
        hi[n] = z0.t + 4.0 * r * r;
        const IndexRange hull = cover_region(grid, lo, hi);
        if (!hull.valid || !all_non_exterior(grid, hull)) continue;
        sched.bottoms.push_back(flat);
        sched.hulls.push_back(hull);
    }

    if (config.parallel) {
        // Greedy first-fit into waves of pairwise disjoint hulls.
        for (std::size_t b = 0; b < sched.bottoms.size(); ++b) {
            bool placed = false;
            for (auto& wave : sched.waves) {
                bool clash = false;
                for (std::size_t other : wave) {
                    if (sched.hulls[b].overlaps(sched.hulls[other])) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    wave.push_back(b);
                    placed = true;
                    break;
                }
            }
            if (!placed) sched.waves.push_back({b});
        }
    }
    return sched;
}

void apply_bowl(GridFunction& grid, const std::vector<char>& relaxable, const BowlTemplate& tpl,
                std::size_t bottom, int interp_order) {
    const std::size_t n = grid.spatial_dimension();
    const SpaceTimePoint z0 = grid.point(bottom);
    const auto idx0 = grid.unflatten(bottom);

    std::vector<double> data(tpl.fit_offsets.size());
    SpaceTimePoint sample(std::vector<double>(n, 0.0), 0.0);
    for (std::size_t k = 0; k < tpl.fit_offsets.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) sample.x[i] = z0.x[i] + tpl.fit_offsets[k][i];
        sample.t = z0.t + tpl.fit_depths[k];
        data[k] = grid.interpolate(sample, interp_order);
    }

    std::vector<std::size_t> idx(n + 1);
    for (std::size_t row = 0; row < tpl.hat_offsets.size(); ++row) {
        bool in_grid = true;
        for (std::size_t i = 0; i <= n; ++i) {
            const long v = static_cast<long>(idx0[i]) + tpl.hat_offsets[row][i];
            if (v < 0 || v >= static_cast<long>(grid.count(i))) {
                in_grid = false;
                break;
            }
            idx[i] = static_cast<std::size_t>(v);
        }
        if (!in_grid) continue;
        const std::size_t target = grid.flatten(idx);
        if (!relaxable[target]) continue;
        double value = 0.0;
        const auto& oprow = tpl.op[row];
        for (std::size_t k = 0; k < data.size(); ++k) value += oprow[k] * data[k];
        grid.value(target) = value;
    }
}

}  // namespace

SweepResult perron_upper(const DomainSpec& domain, const std::vector<std::size_t>& counts,
                         const Field& phi, const SweepConfig& config) {
    const std::size_t n = domain.spatial_dimension();
    if (!(config.bowl_opening > 0.0)) {
        throw std::invalid_argument("perron_upper: bowl_opening must be positive");
    }
    GridFunction grid(domain, counts);
    for (std::size_t i = 0; i < n; ++i) {
        if (config.bowl_opening < 3.0 * grid.spacing(i) - 1e-12) {
            throw std::invalid_argument("perron_upper: bowl opening spans fewer than 3 lattice steps in x");
        }
    }
    if (config.bowl_opening * config.bowl_opening < 3.0 * grid.spacing(n) - 1e-12) {
        throw std::invalid_argument("perron_upper: bowl opening spans fewer than 3 lattice steps in t");
    }

    const Schedule sched = build_schedule(grid, config);
    if (sched.bottoms.empty()) {
        throw std::runtime_error("perron_upper: no interior bowls at this resolution");
    }
    const BowlTemplate tpl = make_template(grid, config);

    // Coverage: nodes some scheduled bowl can relax.
    std::vector<char> covered(grid.node_count(), 0);
    for (std::size_t b = 0; b < sched.bottoms.size(); ++b) {
        const auto idx0 = grid.unflatten(sched.bottoms[b]);
        std::vector<std::size_t> idx(n + 1);
        for (const auto& offs : tpl.hat_offsets) {
            bool in_grid = true;
            for (std::size_t i = 0; i <= n; ++i) {
                const long v = static_cast<long>(idx0[i]) + offs[i];
                if (v < 0 || v >= static_cast<long>(grid.count(i))) {
                    in_grid = false;
                    break;
                }
                idx[i] = static_cast<std::size_t>(v);
            }
            if (in_grid) covered[grid.flatten(idx)] = 1;
        }
    }

    SweepResult result{.grid = std::move(grid)};
    GridFunction& g = result.grid;

    std::vector<char> relaxable(g.node_count(), 0);
    bool have_boundary = false;
    double m = 0.0, M = 0.0;
    for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
        if (g.node_class(flat) != NodeClass::boundary) continue;
        const double v = phi(g.point(flat));
        if (!have_boundary || v < m) m = v;
        if (!have_boundary || v > M) M = v;
        have_boundary = true;
    }
    if (!have_boundary) throw std::runtime_error("perron_upper: domain has no boundary nodes");
    result.data_min = m;
    result.data_max = M;
    result.bowl_count = sched.bottoms.size();

    for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
        switch (g.node_class(flat)) {
            case NodeClass::exterior:
                g.value(flat) = 0.0;
                break;
            case NodeClass::boundary:
                g.value(flat) = phi(g.point(flat));
                break;
            case NodeClass::interior:
                if (covered[flat]) {
                    relaxable[flat] = 1;
                    // Constant M is a supercaloric majorant of the data.
                    g.value(flat) = config.initial_data ? (*config.initial_data)(g.point(flat)) : M;
                    ++result.relaxed_nodes;
                } else {
                    // Bowl neighbourhoods exit the domain: pin to the data.
                    g.value(flat) = phi(g.point(flat));
                    ++result.pinned_interior_nodes;
                }
                break;
        }
    }

    // Updates and the monotonicity diagnostic compare the grid before and
    // after each full pass; rewrites by overlapping bowls within a pass are
    // internal.
    std::vector<double> before;
    for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
        before = g.values();
        if (config.parallel) {
            for (const auto& wave : sched.waves) {
                // Disjoint hulls: bowls in a wave neither read nor write each
                // other's nodes, so the result matches the sequential order.
                if (wave.size() < 8) {
                    for (std::size_t w : wave) {
                        apply_bowl(g, relaxable, tpl, sched.bottoms[w],
                                   config.interpolation_order);
                    }
                    continue;
                }
                const std::size_t chunk = std::max<std::size_t>(1, wave.size() / 8);
                std::vector<std::future<void>> futures;
                for (std::size_t start = 0; start < wave.size(); start += chunk) {
                    const std::size_t end = std::min(wave.size(), start + chunk);
                    futures.push_back(std::async(std::launch::async, [&, start, end] {
                        for (std::size_t w = start; w < end; ++w) {
                            apply_bowl(g, relaxable, tpl, sched.bottoms[wave[w]],
                                       config.interpolation_order);
                        }
                    }));
                }
                for (auto& f : futures) f.get();
            }
        } else {
            for (std::size_t bottom : sched.bottoms) {
                apply_bowl(g, relaxable, tpl, bottom, config.interpolation_order);
            }
        }
        double max_abs = 0.0, max_inc = 0.0;
        for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
            const double d = g.value(flat) - before[flat];
            max_abs = std::max(max_abs, std::abs(d));
            max_inc = std::max(max_inc, d);
        }
        result.update_trace.push_back(max_abs);
        result.increase_trace.push_back(max_inc);
        result.max_increase = std::max(result.max_increase, max_inc);
        result.sweeps = sweep;
        result.final_update = max_abs;
        if (max_abs < config.tolerance) {
            result.converged = true;
            break;
        }
    }
    return result;
}

SweepResult perron_lower(const DomainSpec& domain, const std::vector<std::size_t>& counts,
                         const Field& phi, const SweepConfig& config) {
    SweepResult res = perron_upper(
        domain, counts, [&phi](const SpaceTimePoint& z) { return -phi(z); }, config);
    for (double& v : res.grid.values()) v = -v;
    const double lo = res.data_min, hi = res.data_max;
    res.data_min = -hi;
    res.data_max = -lo;
    return res;
}

PerronReport perron_solve(const DomainSpec& domain, const std::vector<std::size_t>& counts,
                          const Field& phi, const SweepConfig& config) {
    PerronReport report{.upper = perron_upper(domain, counts, phi, config),
                        .lower = perron_lower(domain, counts, phi, config)};
    report.m = report.upper.data_min;
    report.M = report.upper.data_max;
    report.converged = report.upper.converged && report.lower.converged;
    report.sandwich_tolerance = config.sandwich_tolerance;

    const GridFunction& up = report.upper.grid;
    const GridFunction& low = report.lower.grid;
    report.gap.assign(up.node_count(), 0.0);
    bool first = true;
    bool sandwich = true;
    for (std::size_t flat = 0; flat < up.node_count(); ++flat) {
        if (up.node_class(flat) == NodeClass::exterior) continue;
        const double g = up.value(flat) - low.value(flat);
        report.gap[flat] = g;
        if (first || g > report.max_gap) report.max_gap = g;
        if (first || g < report.min_gap) report.min_gap = g;
        first = false;
        if (low.value(flat) < report.m - config.sandwich_tolerance ||
            up.value(flat) > report.M + config.sandwich_tolerance ||
            g < -2.0 * config.sandwich_tolerance) {
            sandwich = false;
        }
    }
    report.sandwich_ok = sandwich;
    return report;
}

std::string PerronReport::to_json() const {
    JsonWriter w;
    w.field("converged", converged)
        .field("sweeps_upper", static_cast<std::size_t>(upper.sweeps))
        .field("sweeps_lower", static_cast<std::size_t>(lower.sweeps))
        .field("final_update_upper", upper.final_update)
        .field("final_update_lower", lower.final_update)
        .field("max_increase_upper", upper.max_increase)
        .field("m", m)
        .field("M", M)
        .field("max_gap", max_gap)
        .field("min_gap", min_gap)
        .field("sandwich_ok", sandwich_ok)
        .field("sandwich_tolerance", sandwich_tolerance)
        .field("bowl_count", upper.bowl_count)
        .field("relaxed_nodes", upper.relaxed_nodes)
        .field("pinned_interior_nodes", upper.pinned_interior_nodes);
    return w.str();
}

void write_gap_csv(const PerronReport& report, std::ostream& out) {
    const GridFunction& g = report.upper.grid;
    const std::size_t n = g.spatial_dimension();
    out << "i_t";
    for (std::size_t i = 0; i < n; ++i) out << ",i_x" << (i + 1);
    for (std::size_t i = 0; i < n; ++i) out << ",x" << (i + 1);
    out << ",t,gap\n";
    for (std::size_t flat = 0; flat < g.node_count(); ++flat) {
        const auto idx = g.unflatten(flat);
        const SpaceTimePoint z = g.point(idx);
        out << idx[n];
        for (std::size_t i = 0; i < n; ++i) out << ',' << idx[i];
        for (std::size_t i = 0; i < n; ++i) out << ',' << format_double(z.x[i]);
        out << ',' << format_double(z.t) << ',' << format_double(report.gap[flat]) << '\n';
    }
}

ClassifyReport classify_supercaloric(const GridFunction& u, const ClassifyConfig& config) {
    const std::size_t n = u.spatial_dimension();
    if (config.radii.empty()) throw std::invalid_argument("classify_supercaloric: need radii");

    const Field interp = [&u, &config](const SpaceTimePoint& z) {
        return u.interpolate(z, config.interpolation_order);
    };

    std::vector<HeatBallQuadrature> quads;
    std::vector<double> max_dx;
    for (double r : config.radii) {
        quads.emplace_back(SpaceTimePoint(std::vector<double>(n, 0.0), 0.0), r, config.quadrature);
        double mx = 0.0;
        for (const auto& off : quads.back().offsets()) {
            for (double c : off.x) mx = std::max(mx, std::abs(c));
        }
        max_dx.push_back(mx);
    }

    ClassifyReport report;
    for (std::size_t flat = 0; flat < u.node_count(); ++flat) {
        if (u.node_class(flat) == NodeClass::exterior) continue;
        const SpaceTimePoint z = u.point(flat);

        bool testable = true;
        std::vector<double> margins;
        for (std::size_t qi = 0; qi < quads.size(); ++qi) {
            std::vector<double> lo(n + 1), hi(n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = z.x[i] - max_dx[qi];
                hi[i] = z.x[i] + max_dx[qi];
            }
            lo[n] = z.t - config.radii[qi];
            hi[n] = z.t;
            const IndexRange hull = cover_region(u, lo, hi);
            if (!hull.valid || !all_non_exterior(u, hull)) {
                testable = false;
                break;
            }
            margins.push_back(u.value(flat) - mean_value_at(interp, quads[qi], z));
        }
        if (!testable) {
            ++report.skipped;
            continue;
        }

        bool all_super = true, all_sub = true, all_small = true;
        double worst = margins.front();
        for (double mg : margins) {
            if (std::abs(mg) < std::abs(worst)) worst = mg;
            all_super = all_super && mg >= config.band;
            all_sub = all_sub && mg <= -config.band;
            all_small = all_small && std::abs(mg) <= config.band;
        }
        NodeVerdict v;
        v.node = flat;
        v.worst_margin = worst;
        if (all_small) v.verdict = CaloricClass::caloric;
        else if (all_super) v.verdict = CaloricClass::supercaloric;
        else if (all_sub) v.verdict = CaloricClass::subcaloric;
        else v.verdict = CaloricClass::neither;
        report.verdicts.push_back(v);
    }
    return report;
}

GridFunction caloric_regularize(const GridFunction& u, const CaloricBowl& bowl,
                                const SweepConfig& config) {
    const std::size_t n = u.spatial_dimension();
    if (bowl.spatial_dimension() != n) {
        throw std::invalid_argument("caloric_regularize: dimension mismatch");
    }
    const CaloricBowl big = bowl.doubled();

    std::vector<double> lo(n + 1), hi(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = big.bottom.x[i] - big.opening;
        hi[i] = big.bottom.x[i] + big.opening;
    }
    lo[n] = big.bottom.t;
    hi[n] = big.bottom.t + big.opening * big.opening;
    const IndexRange hull = cover_region(u, lo, hi);
    if (!hull.valid || !all_non_exterior(u, hull)) {
        throw std::invalid_argument("caloric_regularize: the doubled bowl must stay inside the domain");
    }

    const BoundaryData data = BoundaryData::from_ball_function([&](const std::vector<double>& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = x[i] - big.bottom.x[i];
            s += d * d;
        }
        return u.interpolate(SpaceTimePoint(x, big.bottom.t + s), config.interpolation_order);
    });
    BowlSolveOptions opts;
    opts.fixed_degree = config.fit_degree;
    if (config.fit_nodes_per_axis > 0) opts.fit.nodes_per_axis = config.fit_nodes_per_axis;
    const BowlSolution sol = solve_bowl(big, data, opts);

    GridFunction out = u;
    for (std::size_t flat = 0; flat < out.node_count(); ++flat) {
        if (bowl.in_hat(out.point(flat))) out.value(flat) = sol.u.evaluate(out.point(flat));
    }
    return out;
}

}  // namespace caloric
