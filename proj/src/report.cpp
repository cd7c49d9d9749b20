#include "gm/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gm/errors.hpp"

namespace gm {

namespace {

constexpr char kCsvHeader[] = "y,family_size,S1,S2,predicted_main,K_fit,C_fit,nonvanishing,threshold";

std::string json_number(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

double parse_double(std::string const &s)
{
  std::size_t used = 0;
  double const v = std::stod(s, &used);
  if (used != s.size()) { throw DomainError("parse_report: bad number '" + s + "'"); }
  return v;
}

double json_double(nlohmann::json const &v) { return v.is_null() ? kNaN : v.get<double>(); }

} // namespace

ReportFormat parse_report_format(std::string const &name)
{
  if (name == "csv") { return ReportFormat::Csv; }
  if (name == "json") { return ReportFormat::Json; }
  throw DomainError("unknown report format '" + name + "' (csv or json)");
}

std::string format_double(double x)
{
  if (std::isnan(x)) { return "nan"; }
  if (std::isinf(x)) { return x > 0 ? "inf" : "-inf"; }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_report(std::vector<MomentReport> const &reports, ReportFormat format)
{
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    os << kCsvHeader << '\n';
    for (auto const &r : reports) {
      os << format_double(r.y) << ',' << r.family_size << ',' << format_double(r.S1) << ',' << format_double(r.S2)
         << ',' << format_double(r.predicted_main) << ',' << format_double(r.K_fit) << ','
         << format_double(r.C_fit) << ',' << r.nonvanishing << ',' << format_double(r.threshold) << '\n';
    }
    return os.str();
  }
  os << "[";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    auto const &r = reports[k];
    os << (k == 0 ? "\n" : ",\n") << "  {\"y\": " << json_number(r.y) << ", \"family_size\": " << r.family_size
       << ", \"S1\": " << json_number(r.S1) << ", \"S2\": " << json_number(r.S2)
       << ", \"predicted_main\": " << json_number(r.predicted_main) << ", \"K_fit\": " << json_number(r.K_fit)
       << ", \"C_fit\": " << json_number(r.C_fit) << ", \"nonvanishing\": " << r.nonvanishing
       << ", \"threshold\": " << json_number(r.threshold) << "}";
  }
  os << (reports.empty() ? "]\n" : "\n]\n");
  return os.str();
}

void write_text_file(std::filesystem::path const &path, std::string const &text)
{
  std::error_code ec;
  if (path.has_parent_path()) { std::filesystem::create_directories(path.parent_path(), ec); }
  auto const tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) { throw ResourceError("cannot open " + tmp.string() + " for writing"); }
    os << text;
    os.flush();
    if (!os) { throw ResourceError("failed writing " + tmp.string()); }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) { throw ResourceError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message()); }
}

void emit_report(std::vector<MomentReport> const &reports, ReportFormat format, std::filesystem::path const &path)
{
  write_text_file(path, format_report(reports, format));
}

std::vector<MomentReport> parse_report(std::string const &text, ReportFormat format)
{
  std::vector<MomentReport> out;
  if (format == ReportFormat::Json) {
    auto const doc = nlohmann::json::parse(text);
    for (auto const &row : doc) {
      MomentReport r;
      r.y = json_double(row.at("y"));
      r.family_size = row.at("family_size").get<i64>();
      r.S1 = json_double(row.at("S1"));
      r.S2 = json_double(row.at("S2"));
      r.predicted_main = json_double(row.at("predicted_main"));
      r.K_fit = json_double(row.at("K_fit"));
      r.C_fit = json_double(row.at("C_fit"));
      r.nonvanishing = row.at("nonvanishing").get<i64>();
      r.threshold = json_double(row.at("threshold"));
      out.push_back(r);
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) { throw DomainError("parse_report: missing CSV header"); }
  while (std::getline(in, line)) {
    if (line.empty()) { continue; }
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) { cells.push_back(cell); }
    if (cells.size() != 9) { throw DomainError("parse_report: expected 9 columns in '" + line + "'"); }
    MomentReport r;
    r.y = parse_double(cells[0]);
    r.family_size = std::stoll(cells[1]);
    r.S1 = parse_double(cells[2]);
    r.S2 = parse_double(cells[3]);
    r.predicted_main = parse_double(cells[4]);
    r.K_fit = parse_double(cells[5]);
    r.C_fit = parse_double(cells[6]);
    r.nonvanishing = std::stoll(cells[7]);
    r.threshold = parse_double(cells[8]);
    out.push_back(r);
  }
  return out;
}

} // namespace gm
