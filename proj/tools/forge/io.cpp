#include "io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "pigeon/error.hpp"

namespace forge {

using pigeon::Errc;
using pigeon::require;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), Errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), Errc::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

std::vector<pigeon::BitString> parse_strings(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  std::size_t n = 0, count = 0;
  require(static_cast<bool>(in >> tag >> n >> count) && tag == "strings", Errc::parse_error,
          "string-list file must start with `strings <n> <count>`");
  std::vector<pigeon::BitString> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s;
    require(static_cast<bool>(in >> s) && s.size() == n, Errc::parse_error,
            "string " + std::to_string(i) + " must have " + std::to_string(n) + " bits");
    out.push_back(pigeon::BitString::from_string(s));
  }
  return out;
}

std::vector<pigeon::FieldCtx::Elem> parse_alphas(const std::string& text, std::size_t* n_out) {
  std::istringstream in(text);
  std::string tag;
  std::size_t n = 0, count = 0;
  require(static_cast<bool>(in >> tag >> n >> count) && tag == "alphas", Errc::parse_error,
          "coefficient file must start with `alphas <n> <count>`");
  std::vector<pigeon::FieldCtx::Elem> out(count);
  for (auto& a : out) {
    require(static_cast<bool>(in >> a), Errc::parse_error, "expected " + std::to_string(count) + " coefficients");
    require(2 * n >= 64 || a < (pigeon::FieldCtx::Elem{1} << (2 * n)), Errc::parse_error,
            "coefficient exceeds 2n bits");
  }
  if (n_out) *n_out = n;
  return out;
}

std::string Result::line() const {
  std::string s = "RESULT";
  for (const auto& [k, v] : fields_) s += " " + k + "=" + v;
  return s;
}

void Result::print() const { std::cout << line() << std::endl; }

}  // namespace forge
