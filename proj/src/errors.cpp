#include "mgstab/errors.hpp"

namespace mgstab {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::Disconnected: return "Disconnected";
        case Errc::DuplicateComponentId: return "DuplicateComponentId";
        case Errc::UnknownComponentInNode: return "UnknownComponentInNode";
        case Errc::UnknownComponent: return "UnknownComponent";
        case Errc::UnknownNode: return "UnknownNode";
        case Errc::ImproperSubcurve: return "ImproperSubcurve";
        case Errc::NonPositiveDegree: return "NonPositiveDegree";
        case Errc::ComponentMismatch: return "ComponentMismatch";
        case Errc::AllZero: return "AllZero";
        case Errc::NegativeEntry: return "NegativeEntry";
        case Errc::ZeroMultirank: return "ZeroMultirank";
        case Errc::InvalidMultirank: return "InvalidMultirank";
        case Errc::UnsupportedDimension: return "UnsupportedDimension";
        case Errc::OrderViolation: return "OrderViolation";
        case Errc::BelowRegularity: return "BelowRegularity";
        case Errc::NonPositiveDenominator: return "NonPositiveDenominator";
        case Errc::NonIntegralDimension: return "NonIntegralDimension";
        case Errc::NonPositiveDimension: return "NonPositiveDimension";
        case Errc::RankUnsupported: return "RankUnsupported";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace mgstab
