#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltmv {

enum class ErrorKind {
    InvalidParameter,
    InvalidHorizon,
    MaturityInPast,
    InvalidRiskAversion,
    InvalidGrid,
    DomainError,
    DegenerateDiscriminant,
    LatentVectorDegeneracy,
    SingularSystem,
    IllConditionedBoundary,
    NumericFailure,
    SimulationFailure,
    InternalConsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors caused by bad user input rather than by the numerics.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Quadrature that could not reach its tolerance; carries the best error estimate.
class NumericFailure : public Error {
public:
    NumericFailure(const std::string& what, double achieved_error)
        : Error(ErrorKind::NumericFailure, what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) fail(kind, what);
}

}  // namespace ltmv
