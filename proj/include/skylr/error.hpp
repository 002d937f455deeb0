#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skylr {

enum class ErrorCode {
    NoSuchPart,
    SizeMismatch,
    IncomparableShapes,
    InvalidShape,
    InvalidEntry,
    UnorderedTriple,
    DuplicateInColumn,
    NotSSK,
    NoValidRow,
    NotContreLattice,
    NotRearrangement,
    LengthMismatch,
    TooManyRows,
    TooManyParts,
    VariableCountMismatch,
    NotInSpan,
    NonIntegralCoefficient,
    ShapeMismatch,
    Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace skylr
