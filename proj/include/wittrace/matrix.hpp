#ifndef WITTRACE_MATRIX_HPP
#define WITTRACE_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "wittrace/ring.hpp"

namespace wittrace {

// Dense matrix over a single coefficient ring, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(RingPtr ring, size_t rows, size_t cols);
  static Matrix identity(RingPtr ring, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const RingPtr& ring() const { return ring_; }

  Value& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Value& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  Value trace() const;  // sum of diagonal entries; square only
  Matrix map_entries(const std::function<Value(const Value&)>& f) const;

 private:
  RingPtr ring_;
  size_t rows_, cols_;
  std::vector<Value> e_;
};

struct SmithResult {
  Matrix U, D, V;  // U*m*V = D, U and V unimodular, diagonal divisibility chain
};

// Smith normal form of an integer matrix (ring Z required).
SmithResult smith_normal_form(const Matrix& m);

// Coefficients of det(lambda*I - f), ascending by power, c[n] = 1.
// Division-free (Samuelson-Berkowitz), valid over every supported ring.
std::vector<Value> berkowitz_char_poly(const Matrix& f);

}  // namespace wittrace

#endif
