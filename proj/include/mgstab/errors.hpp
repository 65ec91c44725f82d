#pragma once

#include <stdexcept>
#include <string>

namespace mgstab {

// Every failure carries a code naming the violated invariant; what() starts
// with the code name so CLI error messages stay greppable.
enum class Errc {
    Disconnected,
    DuplicateComponentId,
    UnknownComponentInNode,
    UnknownComponent,
    UnknownNode,
    ImproperSubcurve,
    NonPositiveDegree,
    ComponentMismatch,
    AllZero,
    NegativeEntry,
    ZeroMultirank,
    InvalidMultirank,
    UnsupportedDimension,
    OrderViolation,
    BelowRegularity,
    NonPositiveDenominator,
    NonIntegralDimension,
    NonPositiveDimension,
    RankUnsupported,
    ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace mgstab
