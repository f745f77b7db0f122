#pragma once

#include "clt_lab/law.hpp"

#include <filesystem>
#include <string_view>

namespace clt {

/// Parses {"atoms":[{"x":"-1","p":"1/2"}, ...]}. Positions and masses are
/// rational ("a/b") or decimal strings; unknown keys are rejected with
/// ParseError.
ExactLaw parse_law_document(std::string_view text);

ExactLaw load_law_file(const std::filesystem::path& path);

} // namespace clt
