#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gm/moments.hpp"

namespace gm {

enum class ReportFormat
{
  Csv,
  Json,
};

ReportFormat parse_report_format(std::string const &name);

/// CSV columns: y,family_size,S1,S2,predicted_main,K_fit,C_fit,nonvanishing,threshold.
/// JSON: an array of objects with the same keys, NaN as null. Doubles are
/// written with 17 significant digits.
std::string format_report(std::vector<MomentReport> const &reports, ReportFormat format);

/// Writes format_report() to path through a temporary file; ResourceError on
/// I/O failure.
void emit_report(std::vector<MomentReport> const &reports, ReportFormat format, std::filesystem::path const &path);

/// Inverse of format_report.
std::vector<MomentReport> parse_report(std::string const &text, ReportFormat format);

/// %.17g, with "nan" / "inf" spelled out.
std::string format_double(double x);

/// Writes text to path via a temporary and a rename.
void write_text_file(std::filesystem::path const &path, std::string const &text);

} // namespace gm
