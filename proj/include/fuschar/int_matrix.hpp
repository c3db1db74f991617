#pragma once

#include "fuschar/common.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fuschar {

// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  bool row_is_zero(std::size_t i) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Row-style Hermite normal form: U * M = H with U unimodular, H upper
// echelon, pivots positive, entries above each pivot reduced into
// [0, pivot).  Zero rows of H sit at the bottom.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of h
};
HnfResult hnf(const IntMatrix& m);

// Smith normal form: U * M * V = S diagonal with d_i | d_{i+1}, d_i >= 0,
// U and V unimodular.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
  std::vector<Int> divisors;  // the nonzero d_i, in chain order
};
SnfResult snf(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) condensation.
Int int_det(const IntMatrix& m);

// Rows form a basis (in HNF) of the integer kernel {x in Z^cols : M x = 0},
// computed from the Smith decomposition.
IntMatrix int_kernel_basis(const IntMatrix& m);

// Solves x * H = target for integer x, where H's rows are a full-rank HNF
// basis with the given pivot columns; nullopt when target lies outside the
// row lattice.
std::optional<std::vector<Int>> solve_in_row_lattice(const IntMatrix& h,
                                                     const std::vector<std::size_t>& pivot_cols,
                                                     const std::vector<Int>& target);

std::vector<Int> matrix_row(const IntMatrix& m, std::size_t r);

}  // namespace fuschar
