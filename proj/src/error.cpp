#include "wkbres/error.hpp"

namespace wkbres {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NoInteriorMaximum: return "NoInteriorMaximum";
        case ErrorCode::EnergyAboveBarrier: return "EnergyAboveBarrier";
        case ErrorCode::EnergyNonPositive: return "EnergyNonPositive";
        case ErrorCode::IntervalNotAllowed: return "IntervalNotAllowed";
        case ErrorCode::IntervalNotForbidden: return "IntervalNotForbidden";
        case ErrorCode::NoSuchResonance: return "NoSuchResonance";
        case ErrorCode::StepTooCoarse: return "StepTooCoarse";
        case ErrorCode::NodeAtMatchPoint: return "NodeAtMatchPoint";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::WrongBasin: return "WrongBasin";
        case ErrorCode::InteriorNode: return "InteriorNode";
        case ErrorCode::RealityViolation: return "RealityViolation";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace wkbres
