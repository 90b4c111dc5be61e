#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "caloric/bowl_solver.hpp"
#include "caloric/correction.hpp"
#include "caloric/expression.hpp"
#include "caloric/heat_ball.hpp"
#include "caloric/io_format.hpp"
#include "caloric/kernels.hpp"
#include "caloric/perron.hpp"
#include "caloric/poly_io.hpp"
#include "caloric/representation.hpp"

namespace fs = std::filesystem;
using namespace caloric;

namespace {

struct GlobalOptions {
    std::size_t dim = 1;
    double tolerance = -1.0;  // negative: per-command default
    std::string out_dir = ".";
    unsigned long seed = 20240517;
    double resolution = 1.0;
};

void ensure_out_dir(const GlobalOptions& g) { fs::create_directories(g.out_dir); }

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

/// Every run echoes its fully resolved configuration next to its outputs.
void echo_config(const GlobalOptions& g, const std::string& command, JsonWriter details) {
    JsonWriter w;
    w.field("command", command)
        .field("dim", g.dim)
        .field("tolerance", g.tolerance)
        .field("out", g.out_dir)
        .field("seed", static_cast<std::size_t>(g.seed))
        .field("resolution", g.resolution)
        .field_raw("options", details.str());
    write_file(fs::path(g.out_dir) / "run_config.json", w.str());
}

QuadratureResolution scaled_quadrature(double factor) {
    QuadratureResolution res;
    return factor == 1.0 ? res : res.refined(factor);
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

SpaceTimePoint parse_point(const std::string& text, std::size_t dim) {
    const std::vector<double> v = parse_number_list(text);
    if (v.size() != dim + 1) {
        throw std::runtime_error("expected " + std::to_string(dim + 1) +
                                 " comma-separated coordinates (x..., t), got '" + text + "'");
    }
    return SpaceTimePoint(std::vector<double>(v.begin(), v.end() - 1), v.back());
}

// ---------------------------------------------------------------- extend --

int cmd_extend(const GlobalOptions& g, const std::string& poly_text) {
    const Polynomial p = parse_polynomial(poly_text, g.dim);
    const Polynomial q = solve_correction(p);
    const Polynomial u = Polynomial::w(g.dim) * q + p;

    const bool caloric_ok = apply_heat(u).is_zero();
    const bool boundary_ok = substitute_paraboloid(u - p).is_zero();

    std::cout << "p   = " << format_polynomial(p) << "\n";
    std::cout << "q   = " << format_polynomial(q) << "\n";
    std::cout << "u_p = " << format_polynomial(u) << "\n";
    std::cout << "check H(u_p) == 0 exactly:        " << (caloric_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "check w | (u_p - p) exactly:      " << (boundary_ok ? "PASS" : "FAIL") << "\n";

    ensure_out_dir(g);
    JsonWriter details;
    details.field("polynomial", poly_text);
    echo_config(g, "extend", std::move(details));
    JsonWriter report;
    report.field("p", format_polynomial(p))
        .field("q", format_polynomial(q))
        .field("u_p", format_polynomial(u))
        .field("caloric_check", caloric_ok)
        .field("boundary_check", boundary_ok);
    write_file(fs::path(g.out_dir) / "extend.json", report.str());

    return (caloric_ok && boundary_ok) ? 0 : 1;
}

// ------------------------------------------------------------------ bowl --

BoundaryData load_samples(const std::string& path, std::size_t dim) {
    if (dim != 1) throw std::runtime_error("sample files are supported for dimension 1 only");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<double> nodes, values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto v = parse_number_list(line);
        if (v.size() != 2) throw std::runtime_error("sample rows must be 'x,value'");
        nodes.push_back(v[0]);
        values.push_back(v[1]);
    }
    return BoundaryData::from_samples(std::move(nodes), std::move(values));
}

int cmd_bowl(const GlobalOptions& g, const std::string& bottom_text, double opening,
             const std::string& data_expr, const std::string& data_file, int degree, int dmax) {
    const CaloricBowl bowl(parse_point(bottom_text, g.dim), opening);

    std::optional<Expression> expr;
    BoundaryData data = [&]() -> BoundaryData {
        if (!data_file.empty()) return load_samples(data_file, g.dim);
        expr = Expression::parse(data_expr, g.dim);
        return BoundaryData::restrict_to_boundary([&](const SpaceTimePoint& z) { return (*expr)(z); },
                                                  bowl);
    }();

    BowlSolveOptions opts;
    if (degree >= 0) {
        opts.fixed_degree = degree;
    } else if (g.tolerance > 0.0) {
        opts.target_tolerance = g.tolerance;
    }
    opts.max_degree = dmax;

    const BowlSolution sol = solve_bowl(bowl, data, opts);

    std::cout << "u       = " << format_polynomial(sol.u) << "\n";
    std::cout << "epsilon = " << format_double(sol.certified_error) << "\n";
    std::cout << "degree  = " << sol.degree << "\n";
    std::cout << "status  = " << (sol.tolerance_met ? "certified" : "tolerance not met") << "\n";

    ensure_out_dir(g);
    JsonWriter details;
    details.field("bottom", bottom_text)
        .field("opening", opening)
        .field("data", data_file.empty() ? data_expr : data_file)
        .field("degree_request", static_cast<long long>(degree))
        .field("max_degree", static_cast<long long>(dmax));
    echo_config(g, "bowl", std::move(details));

    write_file(fs::path(g.out_dir) / "solution.txt", format_polynomial(sol.u) + "\n");
    JsonWriter report;
    report.field("epsilon", sol.certified_error)
        .field("degree", static_cast<long long>(sol.degree))
        .field("tolerance_met", sol.tolerance_met)
        .field("condition", sol.condition)
        .field("caloric_exact", apply_heat(sol.u).is_zero());
    write_file(fs::path(g.out_dir) / "report.json", report.str());

    std::ostringstream csv;
    for (std::size_t i = 0; i < g.dim; ++i) csv << "x" << (i + 1) << ",";
    csv << "residual\n";
    for (const auto& [x, r] : sol.boundary_residuals) {
        for (double c : x) csv << format_double(c) << ',';
        csv << format_double(r) << '\n';
    }
    write_file(fs::path(g.out_dir) / "residuals.csv", csv.str());

    return sol.tolerance_met ? 0 : 1;
}

// ---------------------------------------------------------------- verify --

struct SuiteOutcome {
    bool pass = true;
    void check(const std::string& name, double margin, double tol) {
        const bool ok = margin <= tol;
        pass = pass && ok;
        std::cout << "  " << (ok ? "PASS" : "FAIL") << "  " << name << "  margin "
                  << format_double(margin) << " (tol " << format_double(tol) << ")\n";
    }
};

std::vector<std::pair<std::string, Field>> comparator_fields(std::size_t dim, unsigned long seed) {
    std::vector<std::pair<std::string, Field>> fields;
    fields.emplace_back("1", [](const SpaceTimePoint&) { return 1.0; });
    fields.emplace_back("|x|^2 + 2Nt", [dim](const SpaceTimePoint& z) {
        return spatial_norm_sq(z) + 2.0 * static_cast<double>(dim) * z.t;
    });
    if (dim == 1) {
        fields.emplace_back("x^3 + 6xt", [](const SpaceTimePoint& z) {
            return z.x[0] * z.x[0] * z.x[0] + 6.0 * z.x[0] * z.t;
        });
        fields.emplace_back("e^t cosh x", [](const SpaceTimePoint& z) {
            return std::exp(z.t) * std::cosh(z.x[0]);
        });
    }
    const SpaceTimePoint pole(std::vector<double>(dim, 0.0), -5.0);
    fields.emplace_back("heat kernel, pole t=-5",
                        [pole](const SpaceTimePoint& z) { return gw_kernel(z - pole); });

    // Seeded random caloric polynomials, exactly caloric by construction.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    const ExtensionSolver extender(dim, 4);
    for (int k = 0; k < 3; ++k) {
        Polynomial p(dim);
        for (const MultiIndex& alpha : monomials_up_to_height(dim, 5)) {
            if (pick(rng) > 0.35) continue;
            const int n = num(rng);
            if (n == 0) continue;
            Rational c(n, den(rng));
            c.canonicalize();
            p.add_term(alpha, c);
        }
        const Polynomial u = extender.extend(p);
        fields.emplace_back("random caloric polynomial #" + std::to_string(k + 1),
                            [u](const SpaceTimePoint& z) { return u.evaluate(z); });
    }
    return fields;
}

int verify_normalization(const GlobalOptions& g, double tol) {
    SuiteOutcome outcome;
    QuadratureResolution res = scaled_quadrature(g.resolution);
    res.normalization_tolerance = tol;
    ensure_out_dir(g);
    int dumped = 0;
    for (double r : {0.1, 0.5, 1.0}) {
        for (const double t0 : {0.0, 0.7}) {
            const SpaceTimePoint pole(std::vector<double>(g.dim, 0.25 * t0), t0);
            const HeatBallQuadrature quad = build_heat_ball_quadrature(pole, r, res);
            outcome.check("M_r(1) at r=" + format_double(r) + " t0=" + format_double(t0),
                          quad.normalization_error(), tol);
            std::ofstream dump(fs::path(g.out_dir) / ("quadrature_" + std::to_string(dumped++) + ".csv"),
                               std::ios::binary);
            write_quadrature_csv(quad, dump);
        }
    }
    return outcome.pass ? 0 : 1;
}

int verify_mean_value(const GlobalOptions& g, double tol) {
    SuiteOutcome outcome;
    const QuadratureResolution res = scaled_quadrature(g.resolution);
    const auto fields = comparator_fields(g.dim, g.seed);
    for (double r : {0.1, 0.5, 1.0}) {
        std::vector<HeatBallQuadrature> quads;
        for (double xc : {-0.5, 0.0, 0.5}) {
            for (double tc : {0.25, 0.5, 0.75}) {
                quads.emplace_back(SpaceTimePoint(std::vector<double>(g.dim, xc), tc), r, res);
            }
        }
        for (const auto& [name, u] : fields) {
            double worst = 0.0;
            for (const auto& quad : quads) {
                worst = std::max(worst, std::abs(mean_value(u, quad) - u(quad.pole())));
            }
            outcome.check(name + " at r=" + format_double(r), worst, tol);
        }
    }
    return outcome.pass ? 0 : 1;
}

int verify_reproduction(const GlobalOptions& g, double tol) {
    SuiteOutcome outcome;
    const CaloricDisk disk(SpaceTimePoint(std::vector<double>(g.dim, 0.0), 0.0), 0.5);
    ReproduceResolution res;
    res.panels = static_cast<int>(std::ceil(res.panels * g.resolution));
    res.order = static_cast<int>(std::ceil(res.order * std::sqrt(g.resolution)));
    res.with_refinement_check = false;

    std::vector<SpaceTimePoint> points;
    for (int k = 0; k < 5; ++k) {
        const double rho = 0.3 * disk.radius * (k + 1) / 5.0;
        points.emplace_back(std::vector<double>(g.dim, (k % 2 ? -rho : rho)),
                            0.15 * disk.radius * disk.radius * (k - 2));
    }

    const auto fields = comparator_fields(g.dim, g.seed);
    std::ostringstream csv;
    csv << "comparator,point,derived_residual,printed_residual\n";
    double worst_printed = 0.0;
    for (const auto& [name, u] : fields) {
        double worst_derived = 0.0;
        for (const auto& z : points) {
            const double derived = std::abs(reproduce(u, z, disk, res, KernelForm::derived).value - u(z));
            const double printed = std::abs(reproduce(u, z, disk, res, KernelForm::printed).value - u(z));
            worst_derived = std::max(worst_derived, derived);
            worst_printed = std::max(worst_printed, printed);
            csv << '"' << name << "\"," << z.str() << ',' << format_double(derived) << ','
                << format_double(printed) << '\n';
        }
        outcome.check("derived kernel reproduces " + name, worst_derived, tol);
    }
    std::cout << "  INFO  printed-formula kernel worst residual " << format_double(worst_printed)
              << " (reported, not asserted)\n";

    ensure_out_dir(g);
    write_file(fs::path(g.out_dir) / "discrepancy.csv", csv.str());
    JsonWriter disc;
    disc.field("derived_kernel_tolerance", tol)
        .field("printed_kernel_worst_residual", worst_printed)
        .field("note", "the printed kernel variant differs by the coefficient of Gamma * Laplacian(psi); residuals reported only");
    write_file(fs::path(g.out_dir) / "discrepancy.json", disc.str());
    return outcome.pass ? 0 : 1;
}

int verify_supercaloric(const GlobalOptions& g, double band) {
    SuiteOutcome outcome;
    if (g.dim != 1) throw std::runtime_error("the supercaloric suite is one-dimensional");
    const DomainSpec rect = DomainSpec::from_boxes({Box{{-1.0, 0.0}, {1.0, 1.0}}});
    ClassifyConfig cfg;
    cfg.band = band;
    cfg.quadrature = scaled_quadrature(g.resolution);

    const std::vector<std::tuple<std::string, Field, CaloricClass>> cases = {
        {"t", [](const SpaceTimePoint& z) { return z.t; }, CaloricClass::supercaloric},
        {"|x|^2", [](const SpaceTimePoint& z) { return spatial_norm_sq(z); }, CaloricClass::subcaloric},
        {"x^2 + 2t", [](const SpaceTimePoint& z) { return spatial_norm_sq(z) + 2.0 * z.t; },
         CaloricClass::caloric},
    };
    for (const auto& [name, field, expected] : cases) {
        GridFunction grid(rect, {21, 21});
        grid.fill(field);
        const ClassifyReport rep = classify_supercaloric(grid, cfg);
        std::size_t wrong = 0;
        double min_abs_margin = 1e300;
        for (const auto& v : rep.verdicts) {
            if (v.verdict != expected) ++wrong;
            min_abs_margin = std::min(min_abs_margin, std::abs(v.worst_margin));
        }
        const bool ok = wrong == 0 && !rep.verdicts.empty();
        outcome.pass = outcome.pass && ok;
        std::cout << "  " << (ok ? "PASS" : "FAIL") << "  " << name << " classified on "
                  << rep.verdicts.size() << " nodes (" << rep.skipped
                  << " skipped), smallest |margin| " << format_double(min_abs_margin) << "\n";
    }
    return outcome.pass ? 0 : 1;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite) {
    ensure_out_dir(g);
    JsonWriter details;
    details.field("suite", suite);
    echo_config(g, "verify", std::move(details));

    std::cout << "suite " << suite << " (dim " << g.dim << ", resolution x"
              << format_double(g.resolution) << ")\n";
    int rc = 0;
    if (suite == "normalization") {
        rc = verify_normalization(g, g.tolerance > 0 ? g.tolerance : 1e-8);
    } else if (suite == "mean-value") {
        rc = verify_mean_value(g, g.tolerance > 0 ? g.tolerance : 1e-6);
    } else if (suite == "reproduction") {
        rc = verify_reproduction(g, g.tolerance > 0 ? g.tolerance : 1e-6);
    } else if (suite == "supercaloric") {
        rc = verify_supercaloric(g, g.tolerance > 0 ? g.tolerance : 1e-5);
    } else {
        throw CLI::ValidationError("verify", "unknown suite '" + suite +
                                                 "' (expected mean-value, reproduction, "
                                                 "normalization, or supercaloric)");
    }
    std::cout << (rc == 0 ? "PASS" : "FAIL") << "\n";
    return rc;
}

// ---------------------------------------------------------------- perron --

std::map<std::string, std::vector<std::string>> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::map<std::string, std::vector<std::string>> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        kv[trim(line.substr(0, eq))].push_back(trim(line.substr(eq + 1)));
    }
    return kv;
}

int cmd_perron(const GlobalOptions& g0, const std::string& config_path) {
    GlobalOptions g = g0;
    const auto kv = parse_config_file(config_path);
    auto get = [&](const std::string& key, const std::string& fallback) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return fallback;
        return it->second.back();
    };
    auto require = [&](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::runtime_error("config: missing required key '" + key + "'");
        return it->second.back();
    };

    g.dim = std::stoul(get("dim", std::to_string(g.dim)));

    std::vector<Box> boxes;
    if (auto it = kv.find("domain.box"); it != kv.end()) {
        for (const std::string& spec : it->second) {
            const auto semi = spec.find(';');
            if (semi == std::string::npos) {
                throw std::runtime_error("config: domain.box must be 'lo... ; hi...'");
            }
            Box b{parse_number_list(spec.substr(0, semi)), parse_number_list(spec.substr(semi + 1))};
            if (b.lo.size() != g.dim + 1 || b.hi.size() != g.dim + 1) {
                throw std::runtime_error("config: domain.box needs dim+1 coordinates per corner");
            }
            boxes.push_back(std::move(b));
        }
    }
    std::optional<Expression> predicate;
    if (auto it = kv.find("domain.predicate"); it != kv.end()) {
        predicate = Expression::parse(it->second.back(), g.dim);
    }
    if (boxes.empty()) throw std::runtime_error("config: at least one domain.box is required");
    const DomainSpec domain = predicate
                                  ? DomainSpec::from_boxes_and_predicate(std::move(boxes), *predicate)
                                  : DomainSpec::from_boxes(std::move(boxes));

    const std::vector<double> counts_d = parse_number_list(require("grid"));
    if (counts_d.size() != g.dim + 1) {
        throw std::runtime_error("config: grid needs one node count per axis (x..., t)");
    }
    std::vector<std::size_t> counts;
    for (double c : counts_d) counts.push_back(static_cast<std::size_t>(c));

    const Expression data = Expression::parse(require("data"), g.dim);

    SweepConfig cfg;
    cfg.bowl_opening = std::stod(require("bowl.opening"));
    cfg.tolerance = std::stod(get("sweep.tolerance", "1e-6"));
    cfg.max_sweeps = std::stoi(get("sweep.max", "500"));
    cfg.sandwich_tolerance = std::stod(get("sweep.sandwich_tol", "1e-6"));
    cfg.fit_degree = std::stoi(get("fit.degree", "6"));
    cfg.fit_nodes_per_axis = std::stoi(get("fit.nodes", "0"));
    cfg.interpolation_order = std::stoi(get("interp.order", "2"));
    const std::string mode = get("sweep.mode", "sequential");
    if (mode == "parallel") cfg.parallel = true;
    else if (mode != "sequential") throw std::runtime_error("config: sweep.mode must be sequential or parallel");
    const bool want_trace = get("trace", "false") == "true";

    const PerronReport report =
        perron_solve(domain, counts, [&](const SpaceTimePoint& z) { return data(z); }, cfg);

    ensure_out_dir(g);
    JsonWriter details;
    details.field("config_file", config_path)
        .field("data", data.text())
        .field("bowl_opening", cfg.bowl_opening)
        .field("sweep_tolerance", cfg.tolerance)
        .field("sweep_max", static_cast<long long>(cfg.max_sweeps))
        .field("sandwich_tolerance", cfg.sandwich_tolerance)
        .field("fit_degree", static_cast<long long>(cfg.fit_degree))
        .field("interpolation_order", static_cast<long long>(cfg.interpolation_order))
        .field("mode", mode);
    echo_config(g, "perron", std::move(details));

    {
        std::ofstream out(fs::path(g.out_dir) / "upper.csv", std::ios::binary);
        report.upper.grid.write_csv(out);
    }
    {
        std::ofstream out(fs::path(g.out_dir) / "lower.csv", std::ios::binary);
        report.lower.grid.write_csv(out);
    }
    {
        std::ofstream out(fs::path(g.out_dir) / "gap.csv", std::ios::binary);
        write_gap_csv(report, out);
    }
    write_file(fs::path(g.out_dir) / "report.json", report.to_json());
    if (want_trace) {
        std::ostringstream csv;
        csv << "sweep,update_upper,update_lower\n";
        const std::size_t rows =
            std::max(report.upper.update_trace.size(), report.lower.update_trace.size());
        for (std::size_t i = 0; i < rows; ++i) {
            csv << (i + 1) << ',';
            csv << (i < report.upper.update_trace.size() ? format_double(report.upper.update_trace[i])
                                                         : std::string())
                << ',';
            csv << (i < report.lower.update_trace.size() ? format_double(report.lower.update_trace[i])
                                                         : std::string())
                << '\n';
        }
        write_file(fs::path(g.out_dir) / "trace.csv", csv.str());
    }

    std::cout << "bowls      = " << report.upper.bowl_count << "\n";
    std::cout << "sweeps     = " << report.upper.sweeps << " (upper), " << report.lower.sweeps
              << " (lower)\n";
    std::cout << "converged  = " << (report.converged ? "yes" : "no") << "\n";
    std::cout << "gap        = [" << format_double(report.min_gap) << ", "
              << format_double(report.max_gap) << "]\n";
    std::cout << "sandwich   = " << (report.sandwich_ok ? "ok" : "violated") << " (m "
              << format_double(report.m) << ", M " << format_double(report.M) << ")\n";
    return report.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"caloric: constructive Dirichlet solves for the heat equation on caloric bowls,\n"
                 "heat-ball mean-value verification, and Perron sweeps on bounded domains"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions g;
    app.add_option("--dim", g.dim, "spatial dimension N")->capture_default_str();
    app.add_option("--tol", g.tolerance, "tolerance override (per-command default when unset)");
    app.add_option("--out", g.out_dir, "output directory")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--resolution", g.resolution, "quadrature resolution scale")->capture_default_str();

    std::string poly_text;
    auto* extend = app.add_subcommand("extend", "caloric extension of a polynomial");
    extend->add_option("polynomial", poly_text, "polynomial in x1..xN and t")->required();

    std::string bottom = "0,0";
    double opening = 1.0;
    std::string data_expr, data_file;
    int degree = -1, dmax = 14;
    auto* bowl = app.add_subcommand("bowl", "certified Dirichlet solve on a caloric bowl");
    bowl->add_option("--bottom", bottom, "bowl bottom as x...,t")->capture_default_str();
    bowl->add_option("--opening", opening, "bowl opening r")->capture_default_str();
    bowl->add_option("--data", data_expr, "boundary data expression in x..., t");
    bowl->add_option("--data-file", data_file, "boundary samples CSV (x,value), dimension 1");
    bowl->add_option("--degree", degree, "fixed fitting degree (otherwise escalate)");
    bowl->add_option("--dmax", dmax, "degree cap for escalation")->capture_default_str();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "invariant suites with margins");
    verify->add_option("suite", suite, "mean-value | reproduction | normalization | supercaloric")
        ->required();

    std::string config_path;
    auto* perron = app.add_subcommand("perron", "Perron sweep from a config file");
    perron->add_option("config", config_path, "key = value config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (extend->parsed()) return cmd_extend(g, poly_text);
        if (bowl->parsed()) {
            if (data_expr.empty() && data_file.empty()) {
                throw CLI::ValidationError("bowl", "one of --data / --data-file is required");
            }
            return cmd_bowl(g, bottom, opening, data_expr, data_file, degree, dmax);
        }
        if (verify->parsed()) return cmd_verify(g, suite);
        if (perron->parsed()) return cmd_perron(g, config_path);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
