#include "skylr/error.hpp"

namespace skylr {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NoSuchPart: return "NoSuchPart";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::IncomparableShapes: return "IncomparableShapes";
        case ErrorCode::InvalidShape: return "InvalidShape";
        case ErrorCode::InvalidEntry: return "InvalidEntry";
        case ErrorCode::UnorderedTriple: return "UnorderedTriple";
        case ErrorCode::DuplicateInColumn: return "DuplicateInColumn";
        case ErrorCode::NotSSK: return "NotSSK";
        case ErrorCode::NoValidRow: return "NoValidRow";
        case ErrorCode::NotContreLattice: return "NotContreLattice";
        case ErrorCode::NotRearrangement: return "NotRearrangement";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::TooManyRows: return "TooManyRows";
        case ErrorCode::TooManyParts: return "TooManyParts";
        case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
        case ErrorCode::NotInSpan: return "NotInSpan";
        case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace skylr
