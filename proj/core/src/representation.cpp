#include "caloric/representation.hpp"

#include <cmath>
#include <stdexcept>

#include "caloric/gauss_legendre.hpp"
#include "caloric/kernels.hpp"

namespace caloric {

double representation_kernel(const SpaceTimePoint& z, const SpaceTimePoint& zeta,
                             const CutoffFunction& psi, KernelForm form) {
    if (psi.is_flat_at(zeta)) return 0.0;

    const SpaceTimePoint diff = z - zeta;
    if (diff.is_origin()) {
        throw std::domain_error("representation_kernel: kernel pole hit inside the transition region");
    }
    const double gamma = gw_kernel(diff);
    const std::vector<double> grad_gamma = gw_gradient(diff);
    const std::vector<double> grad_psi = psi.gradient(zeta);
    const double lap_psi = psi.laplacian(zeta);
    const double dt_psi = psi.dt(zeta);

    double cross = 0.0;
    for (std::size_t i = 0; i < grad_psi.size(); ++i) cross += grad_gamma[i] * grad_psi[i];

    switch (form) {
        case KernelForm::derived:
            // Gamma * H*psi - 2 <grad Gamma, grad psi>.
            return gamma * (lap_psi + dt_psi) - 2.0 * cross;
        case KernelForm::printed:
            // -Gamma * Hpsi - 2 <grad Gamma, grad psi> + Gamma * (Laplacian psi).
            return -gamma * (lap_psi - dt_psi) - 2.0 * cross + gamma * lap_psi;
    }
    return 0.0;
}

namespace {

double integrate_box(const Field& u, const SpaceTimePoint& z, const CutoffFunction& psi,
                     KernelForm form, int panels, int order) {
    const std::size_t n = z.spatial_dimension();
    const SpaceTimePoint& c = psi.disk().center;
    const double b = psi.outer_radius();

    // Bounding box of supp psi: a caloric-norm ball of radius b.
    std::vector<double> lo(n + 1), hi(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = c.x[i] - b;
        hi[i] = c.x[i] + b;
    }
    lo[n] = c.t - b * b;
    hi[n] = c.t + b * b;

    // The kernel vanishes for zeta.t >= z.t, with an essential boundary layer
    // just below z.t; clip the temporal range there and grade panels into it.
    hi[n] = std::min(hi[n], z.t);

    std::vector<std::vector<double>> nodes(n + 1), weights(n + 1);
    for (std::size_t axis = 0; axis <= n; ++axis) {
        std::vector<double> brk;
        for (int pnl = 0; pnl <= panels; ++pnl) {
            brk.push_back(lo[axis] + (hi[axis] - lo[axis]) * pnl / panels);
        }
        if (axis == n) {
            const double width = brk[panels] - brk[panels - 1];
            brk.pop_back();
            for (int lvl = 1; lvl <= 18; ++lvl) {
                brk.push_back(hi[axis] - width * std::pow(0.45, lvl));
            }
            brk.push_back(hi[axis]);
        }
        for (std::size_t seg = 0; seg + 1 < brk.size(); ++seg) {
            if (!(brk[seg + 1] > brk[seg])) continue;
            auto [xs, ws] = gauss_legendre_on(order, brk[seg], brk[seg + 1]);
            nodes[axis].insert(nodes[axis].end(), xs.begin(), xs.end());
            weights[axis].insert(weights[axis].end(), ws.begin(), ws.end());
        }
    }

    double total = 0.0;
    std::vector<std::size_t> idx(n + 1, 0);
    SpaceTimePoint zeta(std::vector<double>(n, 0.0), 0.0);
    // Odometer over the tensor grid.
    for (;;) {
        double wprod = 1.0;
        for (std::size_t axis = 0; axis <= n; ++axis) wprod *= weights[axis][idx[axis]];
        for (std::size_t i = 0; i < n; ++i) zeta.x[i] = nodes[i][idx[i]];
        zeta.t = nodes[n][idx[n]];
        const double k = representation_kernel(z, zeta, psi, form);
        if (k != 0.0) total += wprod * k * u(zeta);

        std::size_t axis = 0;
        for (; axis <= n; ++axis) {
            if (++idx[axis] < nodes[axis].size()) break;
            idx[axis] = 0;
        }
        if (axis > n) break;
    }
    return total;
}

}  // namespace

ReproduceResult reproduce(const Field& u, const SpaceTimePoint& z, const CaloricDisk& disk,
                          const ReproduceResolution& res, KernelForm form) {
    if (!disk.contains(z)) {
        throw std::invalid_argument("reproduce: evaluation point must lie inside the disk");
    }
    const CutoffFunction psi(disk);
    ReproduceResult out;
    out.value = integrate_box(u, z, psi, form, res.panels, res.order);
    if (res.with_refinement_check) {
        const double refined = integrate_box(u, z, psi, form, res.panels + 2, res.order + 2);
        out.refinement_delta = std::abs(refined - out.value);
    }
    return out;
}

}  // namespace caloric
