#ifndef QCOL_MATRIX_HPP
#define QCOL_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "qcol/laurent.hpp"

namespace qcol {

// Dense row-major matrix over Z[t,t^-1].
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_((std::size_t)rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Laurent>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Laurent& at(int r, int c) { return e_[(std::size_t)r * cols_ + c]; }
  const Laurent& at(int r, int c) const { return e_[(std::size_t)r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::vector<Laurent> apply(const std::vector<Laurent>& v) const;  // A * v
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Laurent> e_;
};

}  // namespace qcol

#endif
