#pragma once

// Dense integer matrices and the Smith normal form with unimodular transforms.

#include <cstddef>
#include <vector>

#include "cext/numeric.hpp"

namespace cext {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += q * row b
  void add_row(std::size_t a, std::size_t b, const Integer& q);
  // col a += q * col b
  void add_col(std::size_t a, std::size_t b, const Integer& q);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// P * A * Q = D with D diagonal, d_1 | d_2 | ... (zeros last), P and Q unimodular.
struct SmithForm {
  std::vector<Integer> diagonal;  // min(rows, cols) entries
  std::size_t rank = 0;
  IntMatrix p;      // rows x rows, if requested
  IntMatrix p_inv;  // rows x rows, if requested
  IntMatrix q;      // cols x cols, if requested
  IntMatrix q_inv;  // cols x cols, if requested
};

struct SmithOptions {
  bool track_p = false;
  bool track_q = false;
};

SmithForm smith_normal_form(IntMatrix a, SmithOptions options = {});

std::size_t integer_rank(const IntMatrix& a);

}  // namespace cext
