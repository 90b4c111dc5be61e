#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caloric/bowl_solver.hpp"
#include "caloric/grid.hpp"
#include "caloric/heat_ball.hpp"

namespace caloric {

struct SweepConfig {
    /// Bowl opening in domain units; every scheduled bowl must span at
    /// least three lattice steps in each direction (r >= 3 h_x and
    /// r^2 >= 3 h_t).
    double bowl_opening = 0.0;
    int fit_degree = 6;
    int interpolation_order = 2;  // 1 or 2
    double tolerance = 1e-6;
    int max_sweeps = 500;
    /// The sandwich and gap checks of perron_solve run at this tolerance;
    /// it is decoupled from the sweep stopping rule so a tighter sweep can
    /// be verified against the nominal bounds.
    double sandwich_tolerance = 1e-6;
    /// Process batches of bowls with pairwise disjoint doubled bowls
    /// concurrently; output is identical to the sequential batch order.
    bool parallel = false;
    int fit_nodes_per_axis = 0;  // 0 derives 2 (degree + 1)
    /// Relaxable nodes start from this field instead of the constant-M
    /// majorant; a diagnostic hook (e.g. for idempotence checks), not part
    /// of the descending-from-above construction.
    std::optional<Field> initial_data;
};

struct SweepResult {
    GridFunction grid;
    bool converged = false;
    int sweeps = 0;
    double final_update = 0.0;
    /// Largest nodewise increase seen across all sweeps. The first sweeps
    /// mix the constant-M start with pinned data, and the least-squares
    /// bowl fit is not a positive operator, so increases of the order of
    /// the data appear there; once the iterate smooths out, descent is
    /// monotone within fit/interpolation noise (see increase_trace).
    double max_increase = 0.0;
    std::vector<double> update_trace;
    std::vector<double> increase_trace;
    double data_min = 0.0;  // m over boundary samples
    double data_max = 0.0;  // M over boundary samples
    std::size_t bowl_count = 0;
    std::size_t relaxed_nodes = 0;
    std::size_t pinned_interior_nodes = 0;
};

/// The descending sweep toward the upper Perron solution: start at the
/// constant M, pin boundary data, repeatedly replace bowl interiors by their
/// caloric solves until updates drop below tolerance. The data must be
/// evaluable on the closed bounding box (boundary-adjacent nodes whose bowls
/// would leave the domain are pinned to it).
SweepResult perron_upper(const DomainSpec& domain, const std::vector<std::size_t>& counts,
                         const Field& phi, const SweepConfig& config);

/// The lower solution by duality: -perron_upper(-phi), same code path.
SweepResult perron_lower(const DomainSpec& domain, const std::vector<std::size_t>& counts,
                         const Field& phi, const SweepConfig& config);

struct PerronReport {
    SweepResult upper;
    SweepResult lower;
    std::vector<double> gap;  // upper - lower per node; zero on exterior nodes
    double max_gap = 0.0;
    double min_gap = 0.0;
    double m = 0.0;
    double M = 0.0;
    bool sandwich_ok = false;
    double sandwich_tolerance = 0.0;
    bool converged = false;

    /// Flat JSON summary (grids are written as CSV separately).
    std::string to_json() const;
};

PerronReport perron_solve(const DomainSpec& domain, const std::vector<std::size_t>& counts,
                          const Field& phi, const SweepConfig& config);

/// One row per node with the upper-lower gap; same deterministic format as
/// GridFunction::write_csv.
void write_gap_csv(const PerronReport& report, std::ostream& out);

enum class CaloricClass { caloric, supercaloric, subcaloric, neither };

struct ClassifyConfig {
    std::vector<double> radii = {0.1, 0.2};
    QuadratureResolution quadrature;
    int interpolation_order = 2;
    /// Margins within the band count as caloric.
    double band = 1e-5;
};

struct NodeVerdict {
    std::size_t node = 0;
    CaloricClass verdict = CaloricClass::neither;
    /// Signed margin u(z) - M_r(u)(z) of smallest magnitude across radii.
    double worst_margin = 0.0;
};

struct ClassifyReport {
    std::vector<NodeVerdict> verdicts;
    /// Nodes whose heat balls leave the grid (or touch exterior nodes).
    std::size_t skipped = 0;
};

/// Classifies grid nodes by the sign of u(z) - M_r(u)(z) across the tested
/// radii, using interpolated values at the quadrature nodes.
ClassifyReport classify_supercaloric(const GridFunction& u, const ClassifyConfig& config = {});

/// One regularization step u -> u_B: values on B-hat are replaced by the
/// certified caloric solve on the doubled bowl with boundary data
/// interpolated from u; everything else is untouched. Requires the doubled
/// bowl (and its interpolation stencils) to stay inside the domain.
GridFunction caloric_regularize(const GridFunction& u, const CaloricBowl& bowl,
                                const SweepConfig& config);

}  // namespace caloric
