#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clt {

enum class ErrorKind {
    EmptyLaw,
    NonPositiveMass,
    MassSumOutOfTolerance,
    UnboundedSpan,
    DegenerateLaw,
    NonFiniteInput,
    InvalidS,
    InvalidK,
    ParseError,
    SupportOverflow,
    OracleScaleExceeded,
    ScaleExceeded,
};

std::string_view to_string(ErrorKind kind);

// Scale errors signal a resource limit rather than malformed input.
constexpr bool is_scale_error(ErrorKind kind)
{
    return kind == ErrorKind::SupportOverflow || kind == ErrorKind::OracleScaleExceeded ||
           kind == ErrorKind::ScaleExceeded;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace clt
