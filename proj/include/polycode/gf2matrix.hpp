#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polycode/gf2poly.hpp"

namespace polycode {

// Dense row-major matrix over GF(2). Column c of a row is bit c of its limbs,
// matching the coefficient layout of Gf2Poly.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  // Rows are coefficient vectors; bits at or above cols are dropped.
  static Gf2Matrix from_rows(const std::vector<Gf2Poly>& rows, std::size_t cols);
  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix vstack(const Gf2Matrix& a, const Gf2Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * stride_; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * stride_; }
  Gf2Poly row_poly(std::size_t r) const;
  std::vector<Gf2Poly> row_polys() const;
  void append_row(const Gf2Poly& p);

  bool is_zero() const;
  Gf2Matrix transpose() const;
  Gf2Matrix operator*(const Gf2Matrix& o) const;

  // Reduced row echelon form with zero rows dropped; pivots receives the
  // pivot column of each remaining row.
  Gf2Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  // Basis (as rows) of { v : M v^T = 0 }.
  Gf2Matrix nullspace() const;
  // True when v lies in the row space.
  bool row_space_contains(const Gf2Poly& v) const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace polycode
