#include "wgbind/equilibrium.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "wgbind/scatter.hpp"

namespace wgbind {

namespace {

// Positions from spacings with the center of mass pinned to cm.
Eigen::VectorXd positions_from_spacings(const Eigen::VectorXd& spacings, double cm) {
    const Eigen::Index n = spacings.size() + 1;
    Eigen::VectorXd x(n);
    x[0] = 0.0;
    for (Eigen::Index j = 1; j < n; ++j) x[j] = x[j - 1] + spacings[j - 1];
    x.array() += cm - x.mean();
    return x;
}

}  // namespace

Eigen::MatrixXd force_jacobian(const ParticleConfiguration& config,
                               const SystemParams& params, double delta) {
    const Eigen::Index n = config.size();
    Eigen::MatrixXd jac(n, n);
    Eigen::VectorXd x = config.positions;
    for (Eigen::Index l = 0; l < n; ++l) {
        const double saved = x[l];
        x[l] = saved + delta;
        const Eigen::VectorXd fp =
            forces_from_fields(solve_fields<double>(x, params.zeta, params.eta,
                                                    params.wavenumber()),
                               params.pump_pressure());
        x[l] = saved - delta;
        const Eigen::VectorXd fm =
            forces_from_fields(solve_fields<double>(x, params.zeta, params.eta,
                                                    params.wavenumber()),
                               params.pump_pressure());
        x[l] = saved;
        jac.col(l) = (fp - fm) / (2.0 * delta);
    }
    return jac;
}

EquilibriumResult find_equilibrium(const ParticleConfiguration& initial,
                                   const SystemParams& params,
                                   const EquilibriumOptions& options) {
    initial.require_ordered("find_equilibrium");
    const Eigen::Index n = initial.size();
    const double cm0 = initial.center_of_mass();

    EquilibriumResult result;
    result.method = EquilibriumResult::Method::newton;

    if (n == 1) {
        result.configuration = initial;
        result.residual = force_profile(initial, params).cwiseAbs().maxCoeff();
        result.converged = result.residual <= options.tolerance;
        return result;
    }

    ParticleConfiguration current = initial;
    ParticleConfiguration best = initial;
    double best_residual = std::numeric_limits<double>::infinity();

    for (int it = 0; it <= options.max_iterations; ++it) {
        const Eigen::VectorXd f = force_profile(current, params);
        const double residual = f.cwiseAbs().maxCoeff();
        if (residual < best_residual) {
            best_residual = residual;
            best = current;
        }
        if (residual <= options.tolerance) {
            result.configuration = current;
            result.residual = residual;
            result.iterations = it;
            result.converged = true;
            return result;
        }
        if (it == options.max_iterations) break;

        const Eigen::MatrixXd jac = force_jacobian(current, params, options.delta);
        // dF_j/ds_i = sum_{l > i} dF_j/dx_l: forces depend on the gaps only,
        // so the uniform-displacement zero mode drops out of the reduced system.
        Eigen::MatrixXd reduced(n, n - 1);
        for (Eigen::Index i = n - 2; i >= 0; --i) {
            reduced.col(i) = jac.col(i + 1);
            if (i + 1 < n - 1) reduced.col(i) += reduced.col(i + 1);
        }
        const Eigen::VectorXd step = reduced.colPivHouseholderQr().solve(-f);

        Eigen::VectorXd spacings(n - 1);
        for (Eigen::Index i = 0; i < n - 1; ++i)
            spacings[i] = current.positions[i + 1] - current.positions[i];

        const double fnorm = f.norm();
        double alpha = 1.0;
        bool accepted = false;
        while (alpha > 1e-12) {
            const Eigen::VectorXd trial = spacings + alpha * step;
            if (trial.minCoeff() <= 0.0) {
                alpha *= 0.5;  // ordering violation: damp the step
                continue;
            }
            ParticleConfiguration candidate(positions_from_spacings(trial, cm0));
            const double trial_norm = force_profile(candidate, params).norm();
            if (trial_norm <= fnorm * (1.0 + 1e-12) || alpha < 0.02) {
                current = std::move(candidate);
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;  // backtracking exhausted
        result.iterations = it + 1;
    }

    result.configuration = best;
    result.residual = best_residual;
    result.converged = false;
    return result;
}

EquilibriumResult relax_to_equilibrium(const ParticleConfiguration& initial,
                                       const SystemParams& params,
                                       double pseudo_friction, double t_max,
                                       double tolerance) {
    initial.require_ordered("relax_to_equilibrium");
    if (!(pseudo_friction > 0.0))
        throw std::invalid_argument("relax_to_equilibrium: pseudo_friction must be > 0");

    const double cm0 = initial.center_of_mass();
    const double p_eta = params.pump_pressure();
    Eigen::VectorXd x = initial.positions;

    const auto velocity = [&](const Eigen::VectorXd& pos) -> Eigen::VectorXd {
        return force_profile(ParticleConfiguration(pos), params) * p_eta /
               pseudo_friction;
    };

    EquilibriumResult result;
    result.method = EquilibriumResult::Method::relaxation;

    double t = 0.0;
    double residual = force_profile(ParticleConfiguration(x), params).cwiseAbs().maxCoeff();
    int steps = 0;
    while (t < t_max && residual > tolerance) {
        // cap the step so no particle moves more than ~0.005 wavelengths
        const double rate = residual * p_eta / pseudo_friction;
        const double dt = std::min(t_max - t, std::min(2.0, 0.005 / std::max(rate, 1e-300)));
        const Eigen::VectorXd k1 = velocity(x);
        const Eigen::VectorXd k2 = velocity(x + 0.5 * dt * k1);
        const Eigen::VectorXd k3 = velocity(x + 0.5 * dt * k2);
        const Eigen::VectorXd k4 = velocity(x + dt * k3);
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
        ++steps;
        residual = force_profile(ParticleConfiguration(x), params).cwiseAbs().maxCoeff();
    }

    x.array() += cm0 - x.mean();  // gauge: restore the initial center of mass
    result.configuration = ParticleConfiguration(std::move(x));
    result.residual = residual;
    result.iterations = steps;
    result.converged = residual <= tolerance;
    return result;
}

} // namespace wgbind
