#include "clt_lab/error.hpp"

namespace clt {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyLaw: return "EmptyLaw";
    case ErrorKind::NonPositiveMass: return "NonPositiveMass";
    case ErrorKind::MassSumOutOfTolerance: return "MassSumOutOfTolerance";
    case ErrorKind::UnboundedSpan: return "UnboundedSpan";
    case ErrorKind::DegenerateLaw: return "DegenerateLaw";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::InvalidS: return "InvalidS";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SupportOverflow: return "SupportOverflow";
    case ErrorKind::OracleScaleExceeded: return "OracleScaleExceeded";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    }
    return "Unknown";
}

} // namespace clt
