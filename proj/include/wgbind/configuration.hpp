#ifndef WGBIND_CONFIGURATION_HPP
#define WGBIND_CONFIGURATION_HPP

#include <Eigen/Core>
#include <stdexcept>

namespace wgbind {

/// Ordered particle positions (units of wavelength) and, for dynamics,
/// velocities (units of wavelength * omega_{2,0}).
///
/// Strictly increasing positions are required by the analysis entry points
/// (equilibrium search, mode analysis); the field solver itself tolerates
/// coincident or crossed particles so that trajectories can be integrated
/// through near-collisions.
struct ParticleConfiguration {
    Eigen::VectorXd positions;
    Eigen::VectorXd velocities;  ///< empty or same size as positions

    ParticleConfiguration() = default;
    explicit ParticleConfiguration(Eigen::VectorXd x) : positions(std::move(x)) {}
    ParticleConfiguration(Eigen::VectorXd x, Eigen::VectorXd v)
        : positions(std::move(x)), velocities(std::move(v)) {}

    Eigen::Index size() const { return positions.size(); }

    bool ordered() const {
        for (Eigen::Index j = 0; j + 1 < positions.size(); ++j)
            if (!(positions[j] < positions[j + 1])) return false;
        return true;
    }

    double center_of_mass() const { return positions.mean(); }

    /// Throws if positions are not strictly increasing.
    void require_ordered(const char* where) const {
        if (!ordered())
            throw std::invalid_argument(std::string(where) +
                                        ": positions must be strictly increasing");
    }
};

/// Equidistant array of n particles with the given spacing, centered on `center`.
inline ParticleConfiguration lattice_configuration(int n, double spacing,
                                                   double center = 0.0) {
    if (n < 1) throw std::invalid_argument("lattice_configuration: n must be >= 1");
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) x[j] = (j - 0.5 * (n - 1)) * spacing;
    x.array() += center;
    return ParticleConfiguration(std::move(x));
}

} // namespace wgbind

#endif
