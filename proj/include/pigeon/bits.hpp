#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pigeon {

// Smallest w with 2^w >= n; ceil_log2(0) == ceil_log2(1) == 0.
constexpr std::size_t ceil_log2(std::uint64_t n) {
  std::size_t w = 0;
  while (w < 64 && (std::uint64_t{1} << w) < n) ++w;
  return w;
}

// A string over {0,1}. Index 0 is the leftmost character, which is also the
// most significant bit when the string is read as an unsigned integer, so
// integer order and lexicographic order coincide for equal lengths.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}

  static BitString from_string(std::string_view text);
  static BitString from_uint(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool v) noexcept { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) noexcept { bits_[i] ^= 1; }
  void push_back(bool v) { bits_.push_back(v ? 1 : 0); }
  void append(const BitString& other);
  void resize(std::size_t n) { bits_.resize(n, 0); }

  BitString slice(std::size_t pos, std::size_t len) const;
  std::uint64_t to_uint() const;  // requires size() <= 64
  std::size_t weight() const noexcept;
  std::string to_string() const;

  friend BitString operator+(BitString a, const BitString& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

  const std::vector<std::uint8_t>& raw() const noexcept { return bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

// Reads n bits at a cursor, advancing it. Used by every payload layout.
class BitReader {
 public:
  explicit BitReader(const BitString& s) : s_(&s) {}
  std::uint64_t take_uint(std::size_t width);
  BitString take(std::size_t width);
  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return s_->size() - pos_; }

 private:
  const BitString* s_;
  std::size_t pos_ = 0;
};

}  // namespace pigeon

template <>
struct std::hash<pigeon::BitString> {
  std::size_t operator()(const pigeon::BitString& s) const noexcept {
    std::size_t h = 1469598103934665603ULL ^ s.size();
    for (auto b : s.raw()) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};
