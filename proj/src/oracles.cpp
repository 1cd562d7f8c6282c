#include "wgbind/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wgbind/errors.hpp"

namespace wgbind::oracles {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double dirichlet_ratio(int p, double theta) {
    if (p == 0) return 0.0;
    const double s = std::sin(theta);
    if (std::abs(s) > 1e-6) return std::sin(p * theta) / s;
    // sin(q theta)/sin(theta) = U_{q-1}(cos theta), stable across the pole
    const int q = std::abs(p);
    const double c = std::cos(theta);
    double prev = 0.0, cur = 1.0;  // U_{-1}, U_0
    for (int m = 1; m < q; ++m) {
        const double next = 2.0 * c * cur - prev;
        prev = cur;
        cur = next;
    }
    return p > 0 ? cur : -cur;
}

std::vector<double> lattice_zero_force_spacings(int n_particles) {
    if (n_particles < 2)
        throw std::invalid_argument("lattice_zero_force_spacings: need N >= 2");
    std::vector<double> spacings(n_particles);
    for (int n = 1; n <= n_particles; ++n)
        spacings[n - 1] = (2.0 * n - 1.0) / (2.0 * n_particles);
    return spacings;
}

double lattice_force_zeta0(int n_particles, double spacing, int j) {
    if (j < 1 || j > n_particles)
        throw std::invalid_argument("lattice_force_zeta0: particle index out of range");
    const double half = kPi * spacing;  // k d / 2 with k = 2 pi
    return -std::cos(n_particles * half) * dirichlet_ratio(2 * j - n_particles - 1, half);
}

double lattice_intensity_zeta0(int n_particles, double spacing) {
    const double r = dirichlet_ratio(n_particles, kPi * spacing);
    return 0.5 * r * r;
}

Eigen::MatrixXd lattice_coupling_matrix_zeta0(int n_particles) {
    if (n_particles < 2)
        throw std::invalid_argument("lattice_coupling_matrix_zeta0: need N >= 2");
    const double cot = 1.0 / std::tan(kPi / (2.0 * n_particles));
    Eigen::MatrixXd d(n_particles, n_particles);
    for (int j = 0; j < n_particles; ++j)
        for (int l = 0; l < n_particles; ++l)
            d(j, l) = std::sin(std::abs(j - l) * kPi / n_particles) - (j == l ? cot : 0.0);
    return d;
}

ClosedFormSpectrum lattice_eigensystem_zeta0(int n_particles) {
    if (n_particles < 2)
        throw std::invalid_argument("lattice_eigensystem_zeta0: need N >= 2");
    const int n = n_particles;
    const double cot = 1.0 / std::tan(kPi / (2.0 * n));
    ClosedFormSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.frequencies.resize(n);
    spec.eigenvectors.resize(n, n);
    const double norm = 1.0 / std::sqrt(double(n));
    for (int nu = 1; nu <= n; ++nu) {
        double lambda = 0.0;
        if (nu > 1) {
            const double s = std::sin(kPi * (nu - 1) / n);
            lambda = -2.0 * cot * s * s /
                     (std::cos(kPi / n) - std::cos(kTwoPi * (nu - 1) / n));
        }
        spec.eigenvalues[nu - 1] = lambda;
        spec.frequencies[nu - 1] = std::sqrt(std::max(-lambda, 0.0) / 2.0);
        for (int j = 0; j < n; ++j)
            spec.eigenvectors(j, nu - 1) =
                norm * std::polar(1.0, kTwoPi * (nu - 1) * j / n);
    }
    return spec;
}

Eigen::VectorXd lattice_frequencies_zeta0(int n_particles) {
    return lattice_eigensystem_zeta0(n_particles).frequencies;
}

double lattice_frequency_asymptote(int n_particles, int nu) {
    if (nu < 2) throw std::invalid_argument("lattice_frequency_asymptote: nu >= 2");
    return 2.0 * (nu - 1) *
           std::sqrt(n_particles / (kPi * (3.0 + 4.0 * nu * (nu - 2.0))));
}

double lattice_eigenvalue_small_spacing(int n, int nu) {
    const double odd = 2.0 * n - 1.0;
    const double denom = 4.0 * (nu - 1.0) * (nu - 1.0) - odd * odd;
    return 2.0 * odd * odd / denom;
}

namespace {
// Shared denominator of the two-particle closed forms.
double two_particle_denominator(Complex zeta, double distance) {
    const double zr = zeta.real(), zi = zeta.imag();
    const double az2 = std::norm(zeta);
    const double kd = kTwoPi * distance;
    const double c = std::cos(0.5 * kd);
    return 4.0 * (az2 + zi) * c * c + 2.0 * zr * std::sin(kd) + 1.0;
}
}  // namespace

double two_particle_force(Complex zeta, double distance) {
    const double den = two_particle_denominator(zeta, distance);
    if (std::abs(den) < 1e-12)
        throw PoleError("two_particle_force: resonant denominator");
    return std::norm(Complex(1, 0) - Complex(0, 1) * zeta) *
           std::cos(kTwoPi * distance) / den;
}

Eigen::Matrix2d two_particle_coupling_matrix(Complex zeta, double distance) {
    const double zr = zeta.real(), zi = zeta.imag();
    const double az2 = std::norm(zeta);
    const double kd = kTwoPi * distance;
    const double den = two_particle_denominator(zeta, distance);
    if (std::abs(den) < 1e-12)
        throw PoleError("two_particle_coupling_matrix: resonant denominator");
    const double g = std::norm(Complex(1, 0) - Complex(0, 1) * zeta) *
                     (std::sin(kd) * (2.0 * az2 + 2.0 * zi + 1.0) + 2.0 * zr) /
                     (den * den);
    Eigen::Matrix2d d;
    d << g, -g, -g, g;
    return d;
}

double two_particle_binding_eigenvalue(Complex zeta) {
    const double den = 1.0 + 2.0 * (std::norm(zeta) + zeta.imag() - zeta.real());
    if (std::abs(den) < 1e-12)
        throw PoleError("two_particle_binding_eigenvalue: resonant denominator");
    return -2.0 * std::norm(Complex(1, 0) - Complex(0, 1) * zeta) / den;
}

double two_particle_frequency(Complex zeta) {
    const double den = 1.0 + 2.0 * (std::norm(zeta) + zeta.imag() - zeta.real());
    if (std::abs(den) < 1e-12)
        throw PoleError("two_particle_frequency: resonant denominator");
    const double arg = std::norm(Complex(1, 0) - Complex(0, 1) * zeta) / den;
    if (arg < 0.0)
        throw std::domain_error("two_particle_frequency: unstable distance, negative argument");
    return std::sqrt(arg);
}

double three_particle_force_expansion(double zeta_real, double spacing) {
    const double kd = kTwoPi * spacing;
    return std::cos(kd) + std::cos(2.0 * kd) -
           zeta_real * (2.0 * std::sin(2.0 * kd) + std::sin(3.0 * kd) +
                        std::sin(4.0 * kd));
}

} // namespace wgbind::oracles
