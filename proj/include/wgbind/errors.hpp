#ifndef WGBIND_ERRORS_HPP
#define WGBIND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgbind {

/// Coupling constant sits on the transmission pole (zeta = -i).
class SingularCouplingError : public std::domain_error {
public:
    explicit SingularCouplingError(const std::string& what) : std::domain_error(what) {}
};

/// The scalar boundary equation of the field solve has a vanishing
/// coefficient (resonant divergence for the given configuration).
class SingularSystemError : public std::runtime_error {
public:
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form expression was evaluated at a genuine pole of its
/// denominator.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Eigenvalue iteration failed to converge.
class EigenSolverError : public std::runtime_error {
public:
    explicit EigenSolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration (bad key, bad value, conflicting options).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace wgbind

#endif
