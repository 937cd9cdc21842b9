#include "pigeon/matrix.hpp"

#include <sstream>

#include "pigeon/error.hpp"

namespace pigeon {

Matrix multiply_f2(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), Errc::invalid_argument, "matrix dimensions do not chain");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      unsigned acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) acc ^= (a(i, t) & b(t, j)) & 1U;
      out(i, j) = static_cast<std::uint16_t>(acc);
    }
  return out;
}

Matrix parse_bit_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  std::size_t rows = 0, cols = 0;
  require(static_cast<bool>(in >> tag >> rows >> cols) && tag == "matrix", Errc::parse_error,
          "matrix file must start with `matrix <rows> <cols>`");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    require(static_cast<bool>(in >> line) && line.size() == cols, Errc::parse_error,
            "matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " bits");
    for (std::size_t c = 0; c < cols; ++c) {
      require(line[c] == '0' || line[c] == '1', Errc::parse_error, "matrix entries must be 0/1");
      m(r, c) = line[c] == '1' ? 1 : 0;
    }
  }
  return m;
}

std::string to_text(const Matrix& m) {
  std::ostringstream out;
  out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (m(r, c) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

}  // namespace pigeon
