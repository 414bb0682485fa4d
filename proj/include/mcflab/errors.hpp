#ifndef MCFLAB_ERRORS_HPP
#define MCFLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct MetricError : Error { using Error::Error; };
struct SpeedError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct SingularDomainError : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct CFLViolation : Error { using Error::Error; };
struct BlowUp : Error { using Error::Error; };
struct TooFewTimeLevels : Error { using Error::Error; };
struct SelfIntersection : Error { using Error::Error; };
struct CollapseError : Error { using Error::Error; };
struct ManifoldError : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct DifferentiationError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

// Raised when an ODE right-hand side hits the 1/w elimination guard.
struct SingularError : Error {
    explicit SingularError(const std::string& what, double w_ = 0.0)
        : Error(what), w(w_) {}
    double w;
};

// Raised when a trajectory leaves the metric's coordinate rectangle.
struct DomainExit : Error {
    explicit DomainExit(const std::string& what, double reached = 0.0)
        : Error(what), parameter_reached(reached) {}
    double parameter_reached;
};

} // namespace mcf

#endif
