#pragma once

// Append-only count cache: lines `<digest> <m> <N_m>`. Reads take a shared
// advisory lock and appends an exclusive one, each line written by a single
// write call, so readers never observe a torn line. Malformed lines and
// unknown digests are ignored.

#include <map>
#include <optional>
#include <string>

#include "zetalab/poly.hpp"

namespace zetalab::counts {

class CountCache {
 public:
  explicit CountCache(std::string path) : path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

  // All cached counts for a digest, keyed by m. The first entry for a key wins.
  std::map<unsigned, Int> load(const std::string& digest) const;
  std::optional<Int> lookup(const std::string& digest, unsigned m) const;
  void store(const std::string& digest, unsigned m, const Int& count) const;

 private:
  std::string path_;
};

}  // namespace zetalab::counts
