#include "gm/lvalue_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gm/errors.hpp"

namespace gm {

namespace {

constexpr char kHeader[] = "re,im,norm,L,cutoff,tail_bound";

} // namespace

LValueCache::LValueCache(std::filesystem::path file) : file_(std::move(file))
{
  std::ifstream in(file_);
  if (!in) { return; }
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw ResourceError("L-value cache " + file_.string() + " has an unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) { continue; }
    long long re = 0, im = 0, nm = 0, cutoff = 0;
    double value = 0.0, tail = 0.0;
    if (std::sscanf(line.c_str(), "%lld,%lld,%lld,%lf,%lld,%lf", &re, &im, &nm, &value, &cutoff, &tail) != 6) {
      throw ResourceError("L-value cache " + file_.string() + ": malformed row '" + line + "'");
    }
    GaussianInt const c{re, im};
    if (norm(c) != nm) { throw ResourceError("L-value cache " + file_.string() + ": norm mismatch for " + line); }
    entries_[{re, im}] = {c, value, cutoff, tail};
  }
}

std::filesystem::path LValueCache::default_path(std::filesystem::path const &cache_dir)
{
  return cache_dir / "lvalues-v1.csv";
}

std::optional<LCentralValue> LValueCache::find(GaussianInt const &c) const
{
  auto const it = entries_.find({c.re(), c.im()});
  if (it == entries_.end()) { return std::nullopt; }
  return it->second;
}

void LValueCache::insert(LCentralValue const &v) { entries_[{v.c.re(), v.c.im()}] = v; }

void LValueCache::save() const
{
  std::vector<LCentralValue> rows;
  rows.reserve(entries_.size());
  for (auto const &[key, v] : entries_) { rows.push_back(v); }
  std::sort(rows.begin(), rows.end(), [](LCentralValue const &a, LCentralValue const &b) {
    i64 const na = norm(a.c), nb = norm(b.c);
    if (na != nb) { return na < nb; }
    if (a.c.re() != b.c.re()) { return a.c.re() < b.c.re(); }
    return a.c.im() < b.c.im();
  });
  if (file_.has_parent_path()) { std::filesystem::create_directories(file_.parent_path()); }
  auto const tmp = std::filesystem::path(file_).concat(".tmp");
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) { throw ResourceError("cannot write L-value cache " + tmp.string()); }
    os << kHeader << '\n';
    char buf[160];
    for (auto const &v : rows) {
      std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%.17g,%lld,%.17g\n", static_cast<long long>(v.c.re()),
                    static_cast<long long>(v.c.im()), static_cast<long long>(norm(v.c)), v.value,
                    static_cast<long long>(v.cutoff), v.tail_bound);
      os << buf;
    }
    if (!os) { throw ResourceError("failed writing L-value cache " + tmp.string()); }
  }
  std::filesystem::rename(tmp, file_);
}

} // namespace gm
