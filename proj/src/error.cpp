#include "ordinal/error.hpp"

namespace ordinal {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::DuplicateElement: return "DuplicateElement";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::RedundantCover: return "RedundantCover";
        case ErrorCode::TooManyElements: return "TooManyElements";
        case ErrorCode::NoUniqueBound: return "NoUniqueBound";
        case ErrorCode::NotALattice: return "NotALattice";
        case ErrorCode::LatticeMismatch: return "LatticeMismatch";
        case ErrorCode::TooManyAtoms: return "TooManyAtoms";
        case ErrorCode::NegativeAtomValue: return "NegativeAtomValue";
        case ErrorCode::ZeroMeasureContext: return "ZeroMeasureContext";
        case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
        case ErrorCode::NotQuantifiable: return "NotQuantifiable";
        case ErrorCode::NotSynchronized: return "NotSynchronized";
        case ErrorCode::NonPositiveBoost: return "NonPositiveBoost";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
    }
    return "Unknown";
}

}  // namespace ordinal
