#ifndef WGBIND_STABILITY_HPP
#define WGBIND_STABILITY_HPP

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "wgbind/configuration.hpp"
#include "wgbind/params.hpp"

namespace wgbind {

/// Nonlocal coupling matrix D_jl = dF_j/dx_l at an equilibrium, stored in
/// P_eta*k units. Row sums vanish (uniform displacement changes no force).
struct CouplingMatrix {
    Eigen::MatrixXd entries;            ///< P_eta*k units
    ParticleConfiguration origin;
    double delta = 0.0;                 ///< finite-difference step used
    double equilibrium_residual = 0.0;  ///< max |F_j| at origin, P_eta units
    bool non_equilibrium_warning = false;
};

struct Eigenpair {
    std::complex<double> value;
    Eigen::VectorXcd vector;  ///< unit norm, largest-modulus entry real positive
};

/// One collective oscillation mode.
struct Mode {
    std::complex<double> lambda;       ///< coupling eigenvalue, P_eta*k units
    Eigen::VectorXcd vector;
    std::complex<double> omega_plus;   ///< both branches of the frequency,
    std::complex<double> omega_minus;  ///< omega_{2,0} units
    bool zero_mode = false;
    bool stable_at_mu = false;
    bool damp_stabilizable = false;
    bool unstable = false;

    /// Amplitude growth rate max(-Im omega) over both branches, omega_{2,0}
    /// units; positive means antidamping.
    double growth_rate() const;
};

enum class StabilityClass { stable, damp_stabilizable, unstable };

struct ModeSpectrum {
    std::vector<Mode> modes;  ///< ordered by descending Re(lambda)
    bool zero_mode_ambiguous = false;
    StabilityClass overall = StabilityClass::stable;

    /// Max Re(lambda) over modes not flagged as the zero mode, P_eta*k units.
    double max_re_nonzero() const;
};

/// Central-difference coupling matrix from 2N field solves,
/// D_jl ~ [F_j(x_l + delta) - F_j(x_l - delta)] / (2 delta). Sets the
/// non-equilibrium warning when the residual at `equilibrium` exceeds
/// 1e-8 P_eta (the matrix is still returned; stability flags are then
/// meaningless).
CouplingMatrix coupling_matrix(const ParticleConfiguration& equilibrium,
                               const SystemParams& params, double delta = 1e-6);

/// Eigen decomposition of a real matrix; pairs ordered by descending real
/// part, ties by ascending |imaginary part|. Eigenvectors have unit
/// Euclidean norm with the largest-modulus component rotated real positive.
std::vector<Eigenpair> eigen_decompose(const Eigen::MatrixXd& matrix);

/// Oscillation frequencies omega = (i mu +- sqrt(-mu^2 - 4 m lambda)) / (2m)
/// for every eigenvalue, plus zero-mode detection: the smallest-|lambda|
/// eigenvalue whose eigenvector overlaps the uniform vector by >= 0.99 and
/// satisfies |lambda| <= 1e-6 max|lambda|. If no mode qualifies the spectrum
/// is returned with zero_mode_ambiguous set and nothing flagged.
ModeSpectrum mode_spectrum(const CouplingMatrix& coupling, const SystemParams& params);

/// Fills the per-mode stability flags and the overall classification.
/// stable_at_mu holds iff m (Im lambda)^2 <= -mu^2 Re lambda with
/// Re lambda <= 0 (the exact algebraic form of the decay condition;
/// equivalent to both omega branches having Im omega >= -1e-12).
/// damp_stabilizable iff Re lambda < 0; unstable iff Re lambda > 0 or
/// Re lambda = 0 with Im lambda != 0. The zero mode is exempt.
StabilityClass classify_stability(ModeSpectrum& spectrum, const SystemParams& params);

/// Stability sweep over a complex-zeta grid.
struct StabilityMap {
    Eigen::VectorXd re_values;
    Eigen::VectorXd im_values;
    Eigen::MatrixXd max_re;    ///< (im index, re index), P_eta*k units; NaN when unconverged
    Eigen::MatrixXd residual;  ///< equilibrium residual, P_eta units
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> converged;

    int cell_count() const { return int(re_values.size() * im_values.size()); }
    int converged_count() const { return int(converged.count()); }
};

struct StabilityMapOptions {
    double re_min = -0.5, re_max = 0.5;
    int re_steps = 21;
    double im_min = 0.0, im_max = 0.5;
    int im_steps = 11;
    double delta = 1e-6;
    double tolerance = 1e-10;
    int max_iterations = 60;
    int workers = 0;  ///< <= 0: WGBIND_WORKERS env or hardware concurrency
};

/// Per cell: a continuation-seeded equilibrium (seeded row-wise from the
/// nearest-to-zero cell outward, starting from the n = N lattice; failures
/// reseed from the lattice, then fall back to relaxation), its coupling
/// matrix and the max Re over nonzero eigenvalues. Rows are independent
/// work items, so the output does not depend on the worker count.
StabilityMap stability_map(const SystemParams& params_template,
                           const StabilityMapOptions& options);

} // namespace wgbind

#endif
