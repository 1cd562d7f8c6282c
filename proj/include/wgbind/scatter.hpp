#ifndef WGBIND_SCATTER_HPP
#define WGBIND_SCATTER_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>

#include "wgbind/configuration.hpp"
#include "wgbind/errors.hpp"
#include "wgbind/params.hpp"

namespace wgbind {

template <typename Scalar>
using TransferMatrixT = Eigen::Matrix<std::complex<Scalar>, 3, 3>;
using TransferMatrix = TransferMatrixT<double>;

/// Field amplitudes of every particle for one configuration.
///
/// Convention (fixed for this repository, particle index increasing
/// rightward): the left side of particle j carries A_j (outgoing leftward)
/// and B_j (incoming from the left); the right side carries C_j (incoming
/// from the right) and D_j (outgoing rightward). Columns of `amplitudes`
/// are A, B, C, D in that order. Boundary conditions: B_1 = C_N = 0.
template <typename Scalar>
struct FieldStateT {
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 4> amplitudes;
    Scalar pump{};

    Eigen::Index size() const { return amplitudes.rows(); }
    std::complex<Scalar> a(Eigen::Index j) const { return amplitudes(j, 0); }
    std::complex<Scalar> b(Eigen::Index j) const { return amplitudes(j, 1); }
    std::complex<Scalar> c(Eigen::Index j) const { return amplitudes(j, 2); }
    std::complex<Scalar> d(Eigen::Index j) const { return amplitudes(j, 3); }
};
using FieldState = FieldStateT<double>;

/// 3x3 beam-splitter matrix of a single scatterer with coupling zeta,
/// relating (A, B, eta) = M (C, D, eta). Throws SingularCouplingError at
/// the transmission pole zeta = -i.
template <typename Scalar>
TransferMatrixT<Scalar> beam_splitter_matrix(const std::complex<Scalar>& zeta) {
    const std::complex<Scalar> i(0, 1);
    const std::complex<Scalar> iz = i * zeta;
    if (std::abs(Scalar(1) - iz) < Scalar(1e-12) * (Scalar(1) + std::abs(zeta)))
        throw SingularCouplingError("beam_splitter_matrix: zeta = -i is a transmission pole");
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    TransferMatrixT<Scalar> m;
    m << Scalar(1) + iz, iz, (Scalar(1) - iz) * inv_sqrt2,
        -iz, Scalar(1) - iz, (iz - Scalar(1)) * inv_sqrt2,
        std::complex<Scalar>(0), std::complex<Scalar>(0), std::complex<Scalar>(1);
    return m;
}

/// diag(e^{ikd}, e^{-ikd}, 1): carries (A_{j+1}, B_{j+1}, eta) on the left
/// side of particle j+1 across a gap of length d to (C_j, D_j, eta) on the
/// right side of particle j. Negative d gives the inverse propagation.
template <typename Scalar>
TransferMatrixT<Scalar> propagation_matrix(Scalar distance, Scalar k) {
    const std::complex<Scalar> phase = std::polar(Scalar(1), k * distance);
    TransferMatrixT<Scalar> m = TransferMatrixT<Scalar>::Zero();
    m(0, 0) = phase;
    m(1, 1) = std::conj(phase);
    m(2, 2) = std::complex<Scalar>(1);
    return m;
}

/// Ordered product of beam-splitter and propagation matrices spanning the
/// whole array, (A_1, B_1, eta) = M_total (C_N, D_N, eta). The third row
/// stays exactly (0, 0, 1).
template <typename Scalar>
TransferMatrixT<Scalar> total_transfer_matrix(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& positions,
    const std::complex<Scalar>& zeta, Scalar k) {
    const TransferMatrixT<Scalar> bs = beam_splitter_matrix(zeta);
    TransferMatrixT<Scalar> total = bs;
    for (Eigen::Index j = positions.size() - 2; j >= 0; --j) {
        const Scalar gap = positions[j + 1] - positions[j];
        total = (bs * propagation_matrix(gap, k) * total).eval();
    }
    return total;
}

/// Solves the two-point boundary problem for all field amplitudes.
///
/// Imposes C_N = 0, determines the single unknown D_N from the B_1 = 0 row
/// of the total transfer relation, then back-substitutes particle by
/// particle. Throws SingularSystemError when the scalar coefficient of D_N
/// vanishes (resonant divergence).
template <typename Scalar>
FieldStateT<Scalar> solve_fields(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& positions,
    const std::complex<Scalar>& zeta, Scalar eta, Scalar k) {
    using C = std::complex<Scalar>;
    using Vec3 = Eigen::Matrix<C, 3, 1>;
    const Eigen::Index n = positions.size();
    const TransferMatrixT<Scalar> bs = beam_splitter_matrix(zeta);
    const TransferMatrixT<Scalar> total = total_transfer_matrix<Scalar>(positions, zeta, k);

    // B_1 = total(1,1) D_N + total(1,2) eta = 0
    const C coeff = total(1, 1);
    if (std::abs(coeff) < Scalar(1e-12))
        throw SingularSystemError("solve_fields: resonant configuration, boundary coefficient ~ 0");
    const C d_last = -total(1, 2) * eta / coeff;

    FieldStateT<Scalar> fields;
    fields.pump = eta;
    fields.amplitudes.resize(n, 4);

    Vec3 right(C(0), d_last, C(eta));
    Vec3 left = bs * right;
    fields.amplitudes(n - 1, 0) = left[0];
    fields.amplitudes(n - 1, 1) = left[1];
    fields.amplitudes(n - 1, 2) = right[0];
    fields.amplitudes(n - 1, 3) = right[1];
    for (Eigen::Index j = n - 2; j >= 0; --j) {
        const Scalar gap = positions[j + 1] - positions[j];
        right = propagation_matrix(gap, k) * left;
        left = bs * right;
        fields.amplitudes(j, 0) = left[0];
        fields.amplitudes(j, 1) = left[1];
        fields.amplitudes(j, 2) = right[0];
        fields.amplitudes(j, 3) = right[1];
    }
    return fields;
}

/// Radiation-pressure force on every particle,
/// F_j = (|A_j|^2 + |B_j|^2 - |C_j|^2 - |D_j|^2) / 2, divided by the
/// pressure scale P_eta so the result is reported in P_eta units.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> forces_from_fields(
    const FieldStateT<Scalar>& fields, Scalar pump_pressure) {
    const Eigen::Index n = fields.size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> f(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        f[j] = (std::norm(fields.a(j)) + std::norm(fields.b(j)) -
                std::norm(fields.c(j)) - std::norm(fields.d(j))) /
               (Scalar(2) * pump_pressure);
    }
    return f;
}

// Double-precision convenience layer over the templated core.

inline TransferMatrix total_transfer_matrix(const ParticleConfiguration& config,
                                            const SystemParams& params) {
    return total_transfer_matrix<double>(config.positions, params.zeta,
                                         params.wavenumber());
}

inline FieldState solve_fields(const ParticleConfiguration& config,
                               const SystemParams& params) {
    return solve_fields<double>(config.positions, params.zeta, params.eta,
                                params.wavenumber());
}

inline Eigen::VectorXd forces_from_fields(const FieldState& fields,
                                          const SystemParams& params) {
    return forces_from_fields<double>(fields, params.pump_pressure());
}

/// Per-particle forces (P_eta units) for a configuration: the single entry
/// point used by the equilibrium, stability and dynamics modules.
inline Eigen::VectorXd force_profile(const ParticleConfiguration& config,
                                     const SystemParams& params) {
    return forces_from_fields(solve_fields(config, params), params);
}

/// Intensity I(x) = |total field at x|^2 / 2 sampled on a grid, reported in
/// units of I_eta = eta^2/2. Inside the gap right of particle j the field is
/// D_j e^{ik(x-x_j)} + A_{j+1} e^{ik(x_{j+1}-x)}; outside the array a single
/// traveling wave remains. At a particle's exact position the value is the
/// limit from the left gap.
Eigen::VectorXd sample_intensity(const ParticleConfiguration& config,
                                 const SystemParams& params,
                                 const Eigen::VectorXd& grid);

/// Same, reusing an already solved field state.
Eigen::VectorXd sample_intensity(const FieldState& fields,
                                 const ParticleConfiguration& config,
                                 const SystemParams& params,
                                 const Eigen::VectorXd& grid);

} // namespace wgbind

#endif
