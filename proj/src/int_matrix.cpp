#include "fuschar/int_matrix.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace fuschar {

namespace {

// Extended gcd: returns (g, x, y) with a*x + b*y = g, g >= 0.
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("IntMatrix: shape mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

bool IntMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (at(i, c) != 0) return false;
  return true;
}

HnfResult hnf(const IntMatrix& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMatrix::identity(m.rows());
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  const std::size_t rows = m.rows(), cols = m.cols();

  auto combine_rows = [&](IntMatrix& mat, std::size_t r, std::size_t i, const Int& s, const Int& t,
                          const Int& a, const Int& b) {
    // row_r' = s*row_r + t*row_i ; row_i' = -b*row_r + a*row_i  (det = 1)
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      const Int vr = mat.at(r, c), vi = mat.at(i, c);
      mat.at(r, c) = s * vr + t * vi;
      mat.at(i, c) = a * vi - b * vr;
    }
  };
  auto add_multiple = [&](IntMatrix& mat, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(dst, c) -= q * mat.at(src, c);
  };
  auto negate_row = [&](IntMatrix& mat, std::size_t r) {
    for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = -mat.at(r, c);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t first = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (h.at(i, c) != 0) {
        first = i;
        break;
      }
    if (first == rows) continue;
    h.swap_rows(r, first);
    u.swap_rows(r, first);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h.at(i, c) == 0) continue;
      const auto [g, s, t] = egcd(h.at(r, c), h.at(i, c));
      const Int a = h.at(r, c) / g, b = h.at(i, c) / g;
      combine_rows(h, r, i, s, t, a, b);
      combine_rows(u, r, i, s, t, a, b);
    }
    if (h.at(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h.at(i, c), h.at(r, c));
      if (q != 0) {
        add_multiple(h, i, r, q);
        add_multiple(u, i, r, q);
      }
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult res;
  res.s = m;
  res.u = IntMatrix::identity(m.rows());
  res.v = IntMatrix::identity(m.cols());
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  auto swap_cols = [&](IntMatrix& mat, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t rr = 0; rr < mat.rows(); ++rr) std::swap(mat.at(rr, i), mat.at(rr, j));
  };
  // When the entry is an exact multiple of the pivot, eliminate it without
  // touching the pivot row/column (the Bezout combine below may otherwise
  // swap the pivot line for a non-cleared one and cycle forever); the egcd
  // path then always strictly shrinks |pivot|, so the loop terminates.
  auto combine_rows = [&](std::size_t r0, std::size_t r1) {
    const Int piv = s.at(r0, r0), val = s.at(r1, r0);
    if (piv != 0 && val % piv == 0) {
      const Int q = val / piv;
      for (IntMatrix* mat : {&s, &u})
        for (std::size_t c = 0; c < mat->cols(); ++c) mat->at(r1, c) -= q * mat->at(r0, c);
      return;
    }
    const auto [gg, x, y] = egcd(piv, val);
    const Int a = piv / gg, b = val / gg;
    for (IntMatrix* mat : {&s, &u}) {
      for (std::size_t c = 0; c < mat->cols(); ++c) {
        const Int vr = mat->at(r0, c), vi = mat->at(r1, c);
        mat->at(r0, c) = x * vr + y * vi;
        mat->at(r1, c) = a * vi - b * vr;
      }
    }
  };
  auto combine_cols = [&](std::size_t c0, std::size_t c1) {
    const Int piv = s.at(c0, c0), val = s.at(c0, c1);
    if (piv != 0 && val % piv == 0) {
      const Int q = val / piv;
      for (IntMatrix* mat : {&s, &v})
        for (std::size_t rr = 0; rr < mat->rows(); ++rr)
          mat->at(rr, c1) -= q * mat->at(rr, c0);
      return;
    }
    const auto [gg, x, y] = egcd(piv, val);
    const Int a = piv / gg, b = val / gg;
    for (IntMatrix* mat : {&s, &v}) {
      for (std::size_t rr = 0; rr < mat->rows(); ++rr) {
        const Int vc = mat->at(rr, c0), vd = mat->at(rr, c1);
        mat->at(rr, c0) = x * vc + y * vd;
        mat->at(rr, c1) = a * vd - b * vc;
      }
    }
  };

  for (std::size_t t = 0; t < steps; ++t) {
    // Locate a pivot in the trailing submatrix.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows && pi == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;  // trailing submatrix is zero
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    swap_cols(s, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (s.at(i, t) != 0) {
          combine_rows(t, i);
          changed = true;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (s.at(t, j) != 0) {
          combine_cols(t, j);
          changed = true;
        }
      if (changed) continue;
      // Row t and column t are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            for (std::size_t c = 0; c < cols; ++c) s.at(t, c) += s.at(i, c);
            for (std::size_t c = 0; c < rows; ++c) u.at(t, c) += u.at(i, c);
            fixed = true;
          }
      if (!fixed) break;
    }
  }

  for (std::size_t t = 0; t < steps; ++t) {
    if (s.at(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) s.at(t, c) = -s.at(t, c);
      for (std::size_t c = 0; c < rows; ++c) u.at(t, c) = -u.at(t, c);
    }
    if (s.at(t, t) != 0) {
      res.divisors.push_back(s.at(t, t));
      ++res.rank;
    }
  }
  for (std::size_t i = 0; i + 1 < res.divisors.size(); ++i)
    internal_check(res.divisors[i + 1] % res.divisors[i] == 0, "snf: divisor chain violated");
  internal_check(res.u * m * res.v == res.s, "snf: transform identity violated");
  return res;
}

Int int_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("int_det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        internal_check(num % prev == 0, "int_det: Bareiss division not exact");
        a.at(i, j) = num / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

IntMatrix int_kernel_basis(const IntMatrix& m) {
  const SnfResult d = snf(m);
  const std::size_t cols = m.cols();
  const std::size_t dim = cols - d.rank;
  IntMatrix k(dim, cols);
  for (std::size_t t = 0; t < dim; ++t)
    for (std::size_t i = 0; i < cols; ++i) k.at(t, i) = d.v.at(i, d.rank + t);
  // Canonicalize through HNF and verify.
  HnfResult h = hnf(k);
  internal_check(h.rank == dim, "int_kernel_basis: kernel basis not independent");
  IntMatrix out(dim, cols);
  for (std::size_t t = 0; t < dim; ++t)
    for (std::size_t i = 0; i < cols; ++i) out.at(t, i) = h.h.at(t, i);
  for (std::size_t t = 0; t < dim; ++t)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Int acc = 0;
      for (std::size_t i = 0; i < cols; ++i) acc += m.at(r, i) * out.at(t, i);
      internal_check(acc == 0, "int_kernel_basis: claimed kernel vector fails M x = 0");
    }
  return out;
}

std::optional<std::vector<Int>> solve_in_row_lattice(const IntMatrix& h,
                                                     const std::vector<std::size_t>& pivot_cols,
                                                     const std::vector<Int>& target) {
  if (h.rows() != pivot_cols.size() || h.cols() != target.size())
    throw DomainError("solve_in_row_lattice: shape mismatch");
  std::vector<Int> rem = target;
  std::vector<Int> x(h.rows(), Int(0));
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const std::size_t c = pivot_cols[r];
    const Int& pivot = h.at(r, c);
    if (rem[c] % pivot != 0) return std::nullopt;
    x[r] = rem[c] / pivot;
    if (x[r] != 0)
      for (std::size_t j = 0; j < h.cols(); ++j) rem[j] -= x[r] * h.at(r, j);
  }
  for (const Int& v : rem)
    if (v != 0) return std::nullopt;
  return x;
}

std::vector<Int> matrix_row(const IntMatrix& m, std::size_t r) {
  std::vector<Int> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = m.at(r, c);
  return out;
}

}  // namespace fuschar
