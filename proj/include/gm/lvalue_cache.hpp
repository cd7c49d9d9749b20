#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>

#include "gm/lfunc.hpp"

namespace gm {

/// Central values on disk, one CSV row per c:
///   re,im,norm,L,cutoff,tail_bound
/// with doubles at 17 significant digits so reloading is exact.
class LValueCache
{
public:
  explicit LValueCache(std::filesystem::path file);

  static std::filesystem::path default_path(std::filesystem::path const &cache_dir);

  std::filesystem::path const &file() const { return file_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<LCentralValue> find(GaussianInt const &c) const;
  void insert(LCentralValue const &v);

  /// Rewrites the whole file (sorted by norm, re, im) through a temporary.
  void save() const;

private:
  std::filesystem::path file_;
  std::map<std::pair<i64, i64>, LCentralValue> entries_;
};

} // namespace gm
