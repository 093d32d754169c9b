#pragma once

#include <string>
#include <vector>

#include "esm/numeric.hpp"

namespace esm {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols, size_t height);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Integer& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(size_t c) const;
  std::vector<Integer> row(size_t r) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_zero() const;
  std::string to_string() const;

  void swap_rows(size_t a, size_t b);
  void swap_cols(size_t a, size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(size_t dst, size_t src, const Integer& k);
  void add_col_multiple(size_t dst, size_t src, const Integer& k);
  void negate_row(size_t r);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix D;  // diagonal, d1 | d2 | ..., nonnegative
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix V;  // unimodular, cols x cols
  size_t rank = 0;
  std::vector<Integer> diagonal() const;
};

// U * M * V = D. Elementary row/column reduction with a minimal-|.| pivot.
SmithForm smith_normal_form(const IntMatrix& M);

/// Finitely generated abelian group presented as Z^free_rank (+) (+)_i Z/torsion[i],
/// with torsion factors > 1 in divisibility order. Generators, when present, are
/// integer vectors in the ambient lattice the group was computed from.
struct AbelianGroup {
  std::vector<Integer> torsion;
  size_t free_rank = 0;
  std::vector<std::vector<Integer>> generators;

  // Invariant-factor list with 0 standing for a free Z summand.
  std::vector<Integer> invariant_factors() const;
  std::string to_string() const;
  // Same group after tensoring with Z_(p): torsion coprime to p dropped.
  AbelianGroup localized(long p) const;
  friend bool same_invariants(const AbelianGroup& a, const AbelianGroup& b) {
    return a.torsion == b.torsion && a.free_rank == b.free_rank;
  }
};

// Z^cols / (column span of M).
AbelianGroup cokernel(const IntMatrix& M);
// ker(M: Z^cols -> Z^rows), a free group; generators form a basis.
AbelianGroup kernel(const IntMatrix& M);
// Basis (as columns) of the lattice spanned by the given generator columns.
IntMatrix lattice_basis(const IntMatrix& generators);
// L / S for sublattices S <= L of Z^n given by spanning columns. Throws
// InternalError when S is not contained in L.
AbelianGroup lattice_quotient(const IntMatrix& L, const IntMatrix& S);

// Solve M y = b over Z_(p) (p > 0) or over Z (p == 0). Returns false if no solution.
bool solvable(const IntMatrix& M, const std::vector<Integer>& b, long p);

}  // namespace esm
