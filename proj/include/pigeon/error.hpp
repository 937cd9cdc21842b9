#pragma once

#include <stdexcept>
#include <string>

namespace pigeon {

enum class Errc {
  invalid_argument,
  parse_error,
  small_n,          // parameters too small for the construction to stretch
  budget,           // exhaustive search would exceed the configured budget
  walk_exhausted,   // backward walk found preimages all the way down
  not_found,        // bounded search completed without a result
  solver_failure,   // external SAT process failed or spoke garbage
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace pigeon
