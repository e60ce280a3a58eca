#pragma once

#include <filesystem>
#include <iosfwd>

#include "cqfb/analysis.hpp"

namespace cqfb::cli {

/// K lines of K comma-separated non-negative integers (rows = true class).
/// Lines starting with '#' are ignored, as is a first line whose fields are
/// not all integers (a header). Throws FormatError.
ContingencyMatrix read_contingency(std::istream& in);
ContingencyMatrix read_contingency(const std::filesystem::path& path);

}  // namespace cqfb::cli
