#ifndef WGBIND_PARAMS_HPP
#define WGBIND_PARAMS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace wgbind {

using Complex = std::complex<double>;

/// Physical and numerical constants of a pumped scatterer array.
///
/// Canonical units: wavelength = 1 (k = 2*pi), epsilon_0 = c = 1, mass = 1,
/// eta = sqrt(2) so that the radiation-pressure scale P_eta = eta^2/2 = 1.
/// All derived quantities are recomputed from the stored fields on demand.
struct SystemParams {
    int n_particles = 1;
    Complex zeta{0.0, 0.0};            ///< complex coupling constant
    double eta = std::numbers::sqrt2;  ///< pump scattering amplitude
    double mass = 1.0;
    double friction = 0.0;             ///< linear friction coefficient mu
    double wavelength = 1.0;

    double wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }

    /// Radiation-pressure force scale P_eta = eta^2/2.
    double pump_pressure() const { return 0.5 * eta * eta; }

    /// Intensity scale I_eta = P_eta * c (c = 1).
    double pump_intensity() const { return pump_pressure(); }

    /// Two-particle binding frequency at zeta = 0: omega_{2,0} = sqrt(2 P_eta k / m).
    double binding_frequency() const {
        return std::sqrt(2.0 * pump_pressure() * wavenumber() / mass);
    }

    /// tau_{2,0} = 2*pi / omega_{2,0}.
    double binding_period() const {
        return 2.0 * std::numbers::pi / binding_frequency();
    }

    void validate() const {
        if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
        if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
        if (!(friction >= 0.0)) throw std::invalid_argument("friction must be >= 0");
        if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
        if (!(eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
    }
};

} // namespace wgbind

#endif
