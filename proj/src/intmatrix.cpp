#include "cext/intmatrix.hpp"

#include <algorithm>
#include <utility>

#include "cext/error.hpp"

namespace cext {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x.is_zero(); });
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product size mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& x = (*this)(b, c);
    if (!x.is_zero()) (*this)(a, c) += q * x;
  }
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& x = (*this)(r, b);
    if (!x.is_zero()) (*this)(r, a) += q * x;
  }
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(a, c) = -(*this)(a, c);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, a) = -(*this)(r, a);
}

namespace {

struct Elimination {
  IntMatrix& a;
  SmithForm& out;
  SmithOptions options;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (options.track_p) {
      out.p.swap_rows(i, j);
      out.p_inv.swap_cols(i, j);
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (options.track_q) {
      out.q.swap_cols(i, j);
      out.q_inv.swap_rows(i, j);
    }
  }
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    a.add_row(i, j, c);
    if (options.track_p) {
      out.p.add_row(i, j, c);
      out.p_inv.add_col(j, i, -c);
    }
  }
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    a.add_col(i, j, c);
    if (options.track_q) {
      out.q.add_col(i, j, c);
      out.q_inv.add_row(j, i, -c);
    }
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (options.track_p) {
      out.p.negate_row(i);
      out.p_inv.negate_col(i);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, SmithOptions options) {
  SmithForm out;
  if (options.track_p) {
    out.p = IntMatrix::identity(a.rows());
    out.p_inv = IntMatrix::identity(a.rows());
  }
  if (options.track_q) {
    out.q = IntMatrix::identity(a.cols());
    out.q_inv = IntMatrix::identity(a.cols());
  }
  Elimination e{a, out, options};
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot of least magnitude in the trailing block.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const Integer& x = a(i, j);
        if (x.is_zero()) continue;
        if (pr == m || abs(x) < abs(a(pr, pc))) {
          pr = i;
          pc = j;
          if (abs(x) == 1) break;
        }
      }
      if (pr != m && abs(a(pr, pc)) == 1) break;
    }
    if (pr == m) break;
    e.swap_rows(t, pr);
    e.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        const Integer q = a(i, t) / a(t, t);
        e.add_row(i, t, -q);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        const Integer q = a(t, j) / a(t, t);
        e.add_col(j, t, -q);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        // Bring the smallest remainder into the pivot and sweep again.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (!a(i, t).is_zero() && abs(a(i, t)) < abs(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!a(t, j).is_zero() && abs(a(t, j)) < abs(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        e.swap_rows(t, bi);
        e.swap_cols(t, bj);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!a(i, j).is_zero() && a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      e.add_row(t, bad, 1);
    }
    if (a(t, t) < 0) e.negate_row(t);
    ++out.rank;
  }
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a(t, t);
  return out;
}

std::size_t integer_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

}  // namespace cext
