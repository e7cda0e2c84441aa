#include "bcauchy/error.hpp"

namespace bcauchy {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
        case ErrorCode::EvaluationFault: return "EvaluationFault";
        case ErrorCode::NotDifferentiable: return "NotDifferentiable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotZeroAtOrigin: return "NotZeroAtOrigin";
        case ErrorCode::WrongSlopeSign: return "WrongSlopeSign";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::Condition3Violated: return "Condition3Violated";
        case ErrorCode::CurveNotOnBoundary: return "CurveNotOnBoundary";
        case ErrorCode::InitialPointOutside: return "InitialPointOutside";
        case ErrorCode::SubstitutionFault: return "SubstitutionFault";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::AmbiguousRegion: return "AmbiguousRegion";
        case ErrorCode::NoCurvesNoRegion: return "NoCurvesNoRegion";
        case ErrorCode::NoDeltaFound: return "NoDeltaFound";
        case ErrorCode::ConstructionUnavailable: return "ConstructionUnavailable";
        case ErrorCode::PolygonExits: return "PolygonExits";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_validation_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::UnknownIdentifier:
        case ErrorCode::InvalidArgument:
        case ErrorCode::NotZeroAtOrigin:
        case ErrorCode::WrongSlopeSign:
        case ErrorCode::NotConvex:
        case ErrorCode::Condition3Violated:
        case ErrorCode::CurveNotOnBoundary:
        case ErrorCode::InitialPointOutside:
        case ErrorCode::SubstitutionFault:
        case ErrorCode::ConfigError:
        case ErrorCode::IoError:
            return true;
        default:
            return false;
    }
}

}  // namespace bcauchy
