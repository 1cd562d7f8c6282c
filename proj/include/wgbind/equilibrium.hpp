#ifndef WGBIND_EQUILIBRIUM_HPP
#define WGBIND_EQUILIBRIUM_HPP

#include "wgbind/configuration.hpp"
#include "wgbind/params.hpp"

namespace wgbind {

struct EquilibriumResult {
    ParticleConfiguration configuration;
    double residual = 0.0;  ///< max |F_j| in P_eta units
    int iterations = 0;
    bool converged = false;
    enum class Method { newton, relaxation, hybrid } method = Method::newton;
};

struct EquilibriumOptions {
    double tolerance = 1e-10;   ///< on max |F_j|, P_eta units
    int max_iterations = 100;
    double delta = 1e-6;        ///< finite-difference step, wavelength units
};

/// Newton search for a zero-force configuration, gauge-fixed to the initial
/// center of mass. Steps solve the reduced least-squares system in spacing
/// coordinates (the full Jacobian is singular along uniform displacement);
/// steps are damped when they would violate the ordering or grow the
/// residual. Non-convergence returns the best iterate with converged=false.
EquilibriumResult find_equilibrium(const ParticleConfiguration& initial,
                                   const SystemParams& params,
                                   const EquilibriumOptions& options = {});

/// Overdamped relaxation dx/dt = F / mu_pseudo until max |F_j| falls below
/// the tolerance or t_max elapses. Used as globalization for hard cases and
/// as a continuation seed; the result is re-pinned to the initial center of
/// mass.
EquilibriumResult relax_to_equilibrium(const ParticleConfiguration& initial,
                                       const SystemParams& params,
                                       double pseudo_friction, double t_max,
                                       double tolerance = 1e-10);

/// Finite-difference force Jacobian dF_j/dx_l (F in P_eta units, x in
/// wavelength units) at an arbitrary configuration; 2N field solves.
Eigen::MatrixXd force_jacobian(const ParticleConfiguration& config,
                               const SystemParams& params, double delta);

} // namespace wgbind

#endif
