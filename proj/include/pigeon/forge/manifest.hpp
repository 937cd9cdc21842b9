#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pigeon/stretch_map.hpp"

namespace pigeon {

// Line-based instance description: `key=value` lines plus optional
// `begin tm` / `begin circuit` blocks closed by `end`.
struct Manifest {
  std::map<std::string, std::string> values;
  std::map<std::string, std::string> blocks;

  std::string kind() const;
  std::string get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  std::size_t get_size(const std::string& key) const;
  std::optional<std::size_t> find_size(const std::string& key) const;
};

Manifest parse_manifest(std::string_view text);
std::string to_text(const Manifest& m);

// kinds: hard_tt (N [, s_max]), prg (n [, count, c, eps]), extractor (n, eps [, d]),
// rigid (n, r, s, q), kt (n, t, tm block), circuit (circuit block).
StretchMap build_map(const Manifest& m);

}  // namespace pigeon
