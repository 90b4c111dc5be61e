#pragma once

#include <functional>

#include "caloric/cutoff.hpp"
#include "caloric/point.hpp"

namespace caloric {

using Field = std::function<double(const SpaceTimePoint&)>;

/// Which representation kernel to evaluate. `derived` carries the factor 2
/// on Gamma * (Laplacian psi) that the integration by parts produces and is
/// the form that reproduces caloric functions; `printed` is the variant with
/// factor 1, kept for side-by-side residual reporting.
enum class KernelForm { derived, printed };

/// The representation kernel K_D(z, zeta) built from the heat kernel and a
/// cutoff psi: zero wherever psi is locally constant, smooth on D x 2D.
double representation_kernel(const SpaceTimePoint& z, const SpaceTimePoint& zeta,
                             const CutoffFunction& psi, KernelForm form = KernelForm::derived);

struct ReproduceResult {
    double value = 0.0;
    /// Difference against a once-refined quadrature; a convergence
    /// diagnostic, not a rigorous bound.
    double refinement_delta = 0.0;
};

struct ReproduceResolution {
    int panels = 20;     // panels per axis over the bounding box of supp psi
    int order = 12;      // Gauss-Legendre order per panel per axis
    bool with_refinement_check = true;
};

/// Evaluates the reproduction integral of u against K_D over the bounding
/// box of the cutoff support; for caloric u this returns u(z) up to
/// quadrature error. Requires z inside D.
ReproduceResult reproduce(const Field& u, const SpaceTimePoint& z, const CaloricDisk& disk,
                          const ReproduceResolution& res = {},
                          KernelForm form = KernelForm::derived);

}  // namespace caloric
