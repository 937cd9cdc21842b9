#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pigeon/bits.hpp"
#include "pigeon/gf2m.hpp"

namespace forge {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// "strings <n> <count>" followed by one 0/1 string per line.
std::vector<pigeon::BitString> parse_strings(const std::string& text);
// "alphas <n> <count>" followed by one decimal coefficient per line.
std::vector<pigeon::FieldCtx::Elem> parse_alphas(const std::string& text, std::size_t* n = nullptr);

// Accumulates `key=value` pairs and prints them as one RESULT line.
class Result {
 public:
  template <typename T>
  Result& add(const std::string& key, const T& value) {
    if constexpr (std::is_convertible_v<T, std::string>) {
      fields_.emplace_back(key, std::string(value));
    } else {
      fields_.emplace_back(key, std::to_string(value));
    }
    return *this;
  }
  std::string line() const;
  void print() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace forge
