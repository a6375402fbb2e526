#include "ltmv/errors.hpp"

namespace ltmv {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid parameter";
    case ErrorKind::InvalidHorizon: return "invalid horizon";
    case ErrorKind::MaturityInPast: return "maturity in past";
    case ErrorKind::InvalidRiskAversion: return "invalid risk aversion";
    case ErrorKind::InvalidGrid: return "invalid grid";
    case ErrorKind::DomainError: return "domain error";
    case ErrorKind::DegenerateDiscriminant: return "degenerate discriminant";
    case ErrorKind::LatentVectorDegeneracy: return "latent vector degeneracy";
    case ErrorKind::SingularSystem: return "singular system";
    case ErrorKind::IllConditionedBoundary: return "ill-conditioned boundary system";
    case ErrorKind::NumericFailure: return "numeric failure";
    case ErrorKind::SimulationFailure: return "simulation failure";
    case ErrorKind::InternalConsistency: return "internal consistency";
    }
    return "unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidParameter:
    case ErrorKind::InvalidHorizon:
    case ErrorKind::MaturityInPast:
    case ErrorKind::InvalidRiskAversion:
    case ErrorKind::InvalidGrid:
    case ErrorKind::DomainError:
        return true;
    default:
        return false;
    }
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace ltmv
