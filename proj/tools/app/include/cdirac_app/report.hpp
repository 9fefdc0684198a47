#pragma once

#include <filesystem>
#include <iosfwd>

namespace cdirac::app {

// CSV-style tables for a bundle directory: a pass/fail matrix, then one table per task.
// Throws ParseError when the manifest is missing or malformed.
void render_report(const std::filesystem::path& bundle_dir, std::ostream& out);

}  // namespace cdirac::app
