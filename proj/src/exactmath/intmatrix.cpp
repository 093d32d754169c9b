#include "esm/intmatrix.hpp"

#include <sstream>
#include <utility>

#include "esm/error.hpp"

namespace esm {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) fail_input("IntMatrix: ragged rows");
    for (size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& cols, size_t height) {
  IntMatrix m(height, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) fail_input("IntMatrix: column of wrong height");
    for (size_t r = 0; r < height; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Integer> IntMatrix::column(size_t c) const {
  std::vector<Integer> out(rows_);
  for (size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> IntMatrix::row(size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail_input("IntMatrix: dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

void IntMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(size_t a, size_t b) {
  if (a == b) return;
  for (size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Integer& k) {
  if (k == 0) return;
  for (size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Integer& k) {
  if (k == 0) return;
  for (size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(size_t r) {
  for (size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail_input("determinant of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Row operation on D mirrored on U (U <- E U) and on U^{-1} (U^{-1} <- U^{-1} E^{-1}).
struct RowTracker {
  IntMatrix& D;
  IntMatrix& U;
  IntMatrix& Uinv;
  void swap(size_t a, size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    Uinv.swap_cols(a, b);
  }
  void add(size_t dst, size_t src, const Integer& k) {
    D.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    Uinv.add_col_multiple(src, dst, -k);
  }
  void negate(size_t r) {
    D.negate_row(r);
    U.negate_row(r);
    for (size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, r) = -Uinv(i, r);
  }
};

SmithForm smith_with_inverse(const IntMatrix& M, IntMatrix& Uinv) {
  SmithForm f{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()), 0};
  Uinv = IntMatrix::identity(M.rows());
  IntMatrix& D = f.D;
  RowTracker rows{D, f.U, Uinv};
  const size_t nr = D.rows(), nc = D.cols();
  size_t t = 0;
  for (; t < std::min(nr, nc); ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      size_t pr = nr, pc = nc;
      for (size_t i = t; i < nr; ++i)
        for (size_t j = t; j < nc; ++j) {
          if (D(i, j) == 0) continue;
          if (pr == nr || mpz_cmpabs(D(i, j).get_mpz_t(), D(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == nr) goto done;
      rows.swap(t, pr);
      D.swap_cols(t, pc);
      f.V.swap_cols(t, pc);

      bool dirty = false;
      for (size_t i = t + 1; i < nr; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        rows.add(i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
      for (size_t j = t + 1; j < nc; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility chain: pull in any entry the pivot does not divide.
      bool fixed = false;
      for (size_t i = t + 1; i < nr && !fixed; ++i)
        for (size_t j = t + 1; j < nc; ++j) {
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            rows.add(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (D(t, t) < 0) rows.negate(t);
  }
done:
  f.rank = t;
  return f;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  IntMatrix Uinv;
  return smith_with_inverse(M, Uinv);
}

std::vector<Integer> AbelianGroup::invariant_factors() const {
  std::vector<Integer> out = torsion;
  for (size_t i = 0; i < free_rank; ++i) out.emplace_back(0);
  return out;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  return first ? "0" : os.str();
}

AbelianGroup AbelianGroup::localized(long p) const {
  AbelianGroup out;
  out.free_rank = free_rank;
  for (const auto& d : torsion) {
    Integer pp = d / unit_part(d, p);
    if (pp > 1) out.torsion.push_back(pp);
  }
  return out;
}

AbelianGroup cokernel(const IntMatrix& M) {
  IntMatrix Uinv;
  SmithForm f = smith_with_inverse(M, Uinv);
  AbelianGroup g;
  for (size_t i = 0; i < f.rank; ++i) {
    const Integer& d = f.D(i, i);
    if (d == 1) continue;
    g.torsion.push_back(d);
    g.generators.push_back(Uinv.column(i));
  }
  g.free_rank = M.rows() - f.rank;
  for (size_t i = f.rank; i < M.rows(); ++i) g.generators.push_back(Uinv.column(i));
  return g;
}

AbelianGroup kernel(const IntMatrix& M) {
  SmithForm f = smith_normal_form(M);
  AbelianGroup g;
  g.free_rank = M.cols() - f.rank;
  for (size_t i = f.rank; i < M.cols(); ++i) g.generators.push_back(f.V.column(i));
  return g;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  SmithForm f = smith_normal_form(generators);
  IntMatrix gv = generators * f.V;
  IntMatrix basis(generators.rows(), f.rank);
  for (size_t r = 0; r < generators.rows(); ++r)
    for (size_t c = 0; c < f.rank; ++c) basis(r, c) = gv(r, c);
  return basis;
}

namespace {

// Coordinates of s in a lattice basis B (full column rank), or false.
bool coordinates_in(const SmithForm& f, const std::vector<Integer>& s, std::vector<Integer>& out) {
  const IntMatrix& U = f.U;
  std::vector<Integer> y(U.rows());
  for (size_t i = 0; i < U.rows(); ++i)
    for (size_t k = 0; k < U.cols(); ++k) y[i] += U(i, k) * s[k];
  std::vector<Integer> w(f.V.rows());
  for (size_t i = 0; i < y.size(); ++i) {
    if (i < f.rank) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), f.D(i, i).get_mpz_t())) return false;
      w[i] = y[i] / f.D(i, i);
    } else if (y[i] != 0) {
      return false;
    }
  }
  out.assign(f.V.rows(), Integer(0));
  for (size_t i = 0; i < f.V.rows(); ++i)
    for (size_t k = 0; k < f.V.cols(); ++k) out[i] += f.V(i, k) * w[k];
  return true;
}

}  // namespace

AbelianGroup lattice_quotient(const IntMatrix& L, const IntMatrix& S) {
  IntMatrix B = lattice_basis(L);
  SmithForm fb = smith_normal_form(B);
  IntMatrix coords(B.cols(), S.cols());
  for (size_t c = 0; c < S.cols(); ++c) {
    std::vector<Integer> x;
    if (!coordinates_in(fb, S.column(c), x)) fail_internal("lattice_quotient: sublattice not contained in lattice");
    for (size_t r = 0; r < B.cols(); ++r) coords(r, c) = x[r];
  }
  AbelianGroup q = cokernel(coords);
  // Map generators back into the ambient lattice.
  for (auto& g : q.generators) {
    std::vector<Integer> amb(B.rows());
    for (size_t r = 0; r < B.rows(); ++r)
      for (size_t k = 0; k < B.cols(); ++k) amb[r] += B(r, k) * g[k];
    g = std::move(amb);
  }
  return q;
}

bool solvable(const IntMatrix& M, const std::vector<Integer>& b, long p) {
  if (b.size() != M.rows()) fail_input("solvable: right-hand side has wrong length");
  SmithForm f = smith_normal_form(M);
  std::vector<Integer> y(M.rows());
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t k = 0; k < M.rows(); ++k) y[i] += f.U(i, k) * b[k];
  for (size_t i = 0; i < y.size(); ++i) {
    if (i >= f.rank) {
      if (y[i] != 0) return false;
      continue;
    }
    if (y[i] == 0) continue;
    const Integer& d = f.D(i, i);
    if (p == 0) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), d.get_mpz_t())) return false;
    } else if (valuation(y[i], p) < valuation(d, p)) {
      return false;
    }
  }
  return true;
}

}  // namespace esm
