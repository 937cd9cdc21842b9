#include "pigeon/bits.hpp"

#include <algorithm>

#include "pigeon/error.hpp"

namespace pigeon {

BitString BitString::from_string(std::string_view text) {
  BitString s;
  s.bits_.reserve(text.size());
  for (char ch : text) {
    require(ch == '0' || ch == '1', Errc::parse_error,
            "bit string may only contain '0' and '1', got '" + std::string(1, ch) + "'");
    s.bits_.push_back(ch == '1' ? 1 : 0);
  }
  return s;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  BitString s(width);
  for (std::size_t i = 0; i < width; ++i) {
    std::size_t shift = width - 1 - i;
    s.bits_[i] = shift < 64 ? static_cast<std::uint8_t>((value >> shift) & 1U) : 0;
  }
  return s;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  require(pos + len <= bits_.size(), Errc::invalid_argument, "slice out of range");
  BitString s;
  s.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                 bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return s;
}

std::uint64_t BitString::to_uint() const {
  require(bits_.size() <= 64, Errc::invalid_argument, "to_uint on more than 64 bits");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::size_t BitString::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitString::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ? '1' : '0';
  return out;
}

std::uint64_t BitReader::take_uint(std::size_t width) {
  require(width <= 64 && pos_ + width <= s_->size(), Errc::invalid_argument,
          "payload field overruns its container");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v = (v << 1) | ((*s_)[pos_ + i] ? 1U : 0U);
  pos_ += width;
  return v;
}

BitString BitReader::take(std::size_t width) {
  BitString out = s_->slice(pos_, width);
  pos_ += width;
  return out;
}

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::small_n: return "SMALL_N";
    case Errc::budget: return "BUDGET";
    case Errc::walk_exhausted: return "WALK_EXHAUSTED";
    case Errc::not_found: return "NOT_FOUND";
    case Errc::solver_failure: return "SOLVER_FAILURE";
  }
  return "UNKNOWN";
}

}  // namespace pigeon
