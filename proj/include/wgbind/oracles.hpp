#ifndef WGBIND_ORACLES_HPP
#define WGBIND_ORACLES_HPP

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "wgbind/params.hpp"

// Closed-form results for arrays of point scatterers in a single waveguide
// mode. These serve as independent ground truth for the numerical modules;
// all values are reported in the canonical units P_eta (forces), P_eta*k
// (coupling-matrix eigenvalues), I_eta (intensities) and omega_{2,0}
// (frequencies).

namespace wgbind::oracles {

using Complex = std::complex<double>;

/// Eigenvalues (P_eta*k), eigenvectors and oscillation frequencies
/// (omega_{2,0}) of a zero-coupling lattice, in mode order nu = 1..N.
struct ClosedFormSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;  ///< column nu-1 is z_nu, unit norm
    Eigen::VectorXd frequencies;
};

/// sin(p*theta)/sin(theta) for integer p, finite at every removable pole
/// (evaluated through the Chebyshev recurrence near sin(theta) = 0).
double dirichlet_ratio(int p, double theta);

/// Zero-force lattice spacings d_n = (2n-1)/(2N) (wavelength units), n = 1..N.
std::vector<double> lattice_zero_force_spacings(int n_particles);

/// Force on particle j (1-based) of an equidistant zeta = 0 array with
/// spacing d, in P_eta units. Finite for every d; removable poles at
/// d = m*wavelength are evaluated as limits.
double lattice_force_zeta0(int n_particles, double spacing, int j);

/// Outgoing intensity on either side of an equidistant zeta = 0 array,
/// in I_eta units.
double lattice_intensity_zeta0(int n_particles, double spacing);

/// Coupling matrix of the maximal-spacing lattice d = (2N-1)/(2N), zeta = 0,
/// in P_eta*k units: D_jl = sin(|j-l| pi/N) - delta_jl cot(pi/2N).
Eigen::MatrixXd lattice_coupling_matrix_zeta0(int n_particles);

/// Circulant eigensystem of lattice_coupling_matrix_zeta0.
ClosedFormSpectrum lattice_eigensystem_zeta0(int n_particles);

/// Phonon frequencies of the maximal-spacing lattice, omega_{2,0} units;
/// the nu = 1 center-of-mass mode is exactly zero.
Eigen::VectorXd lattice_frequencies_zeta0(int n_particles);

/// Large-N asymptote omega_nu ~ 2(nu-1) sqrt(N / (pi (3 + 4 nu (nu-2)))),
/// omega_{2,0} units, nu >= 2.
double lattice_frequency_asymptote(int n_particles, int nu);

/// Large-N eigenvalues of the smaller-spacing lattices d_n, n < N:
/// lambda_nu = 2 (2n-1)^2 / (4 (nu-1)^2 - (2n-1)^2), P_eta*k units.
double lattice_eigenvalue_small_spacing(int n, int nu);

/// Two-particle force F_1 = -F_2 as a function of complex zeta and distance
/// d, P_eta units. Throws PoleError at a resonant denominator.
double two_particle_force(Complex zeta, double distance);

/// Two-particle coupling matrix, P_eta*k units. Throws PoleError at a
/// resonant denominator.
Eigen::Matrix2d two_particle_coupling_matrix(Complex zeta, double distance);

/// Nonzero coupling eigenvalue at the stable zero-force distances
/// d = (3/4 + n) wavelength, P_eta*k units (negative); the unstable
/// distances d = (1/4 + n) carry the same value with opposite sign.
double two_particle_binding_eigenvalue(Complex zeta);

/// Binding frequency at the stable two-particle distance, omega_{2,0}
/// units: sqrt(|1 - i zeta|^2 / (1 + 2(|zeta|^2 + zeta_i - zeta_r))).
double two_particle_frequency(Complex zeta);

/// First-order (in real zeta) force on the outer particles of an
/// equidistant three-particle array, P_eta units; the middle force is zero.
double three_particle_force_expansion(double zeta_real, double spacing);

} // namespace wgbind::oracles

#endif
