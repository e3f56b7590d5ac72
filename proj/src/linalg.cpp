#include "forge/linalg.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace forge {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// floor quotient, exact GMP semantics
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t r = 0;  // next pivot row
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid in column c over rows r..end until a lone pivot remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs_int(h(i, c)) < abs_int(h(best, c))) best = i;
      }
      if (best == rows) break;  // column is zero below r, no pivot here
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      if (h(r, c) < 0) {
        h.negate_row(r);
        u.negate_row(r);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = fdiv(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) {
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
          Int q = fdiv(h(i, c), h(r, c));
          if (q != 0) {
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
          }
        }
        ++r;
        break;
      }
    }
  }
  return {std::move(h), std::move(u)};
}

std::vector<Int> SmithForm::divisors() const {
  std::vector<Int> ds;
  std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (D(i, i) != 0) ds.push_back(D(i, i));
  return ds;
}

namespace {

// Diagonalize the trailing submatrix of a starting at t; mirrors row ops in u
// and column ops in v. Stops when the trailing block is zero.
void snf_diagonalize(IntMatrix& a, IntMatrix& u, IntMatrix& v, std::size_t t0) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = t0; t < n; ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (bi == rows || abs_int(a(i, j)) < abs_int(a(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) return;  // nothing nonzero remains
      a.swap_rows(t, bi);
      u.swap_rows(t, bi);
      a.swap_cols(t, bj);
      v.swap_cols(t, bj);
      if (a(t, t) < 0) {
        a.negate_row(t);
        u.negate_row(t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = fdiv(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = fdiv(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
  }
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  snf_diagonalize(a, u, v, 0);
  // Enforce the divisor chain d_i | d_{i+1}.
  const std::size_t n = std::min(rows, cols);
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Int& di = a(i, i);
      const Int& dj = a(i + 1, i + 1);
      if (di == 0 && dj != 0) {  // zeros must trail
        a.swap_rows(i, i + 1);
        u.swap_rows(i, i + 1);
        a.swap_cols(i, i + 1);
        v.swap_cols(i, i + 1);
        again = true;
        continue;
      }
      if (di != 0 && dj % di != 0) {
        a.add_row_multiple(i, i + 1, 1);
        u.add_row_multiple(i, i + 1, 1);
        snf_diagonalize(a, u, v, i);
        again = true;
      }
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

IntMatrix kernel_int(const IntMatrix& m) {
  auto [h, u] = hnf(m);
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool z = true;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        z = false;
        break;
      }
    if (z) zero_rows.push_back(i);
  }
  // Rows of U over the zero rows of H span the kernel; the span is a direct
  // summand of Z^rows, so it is saturated. HNF canonicalizes the basis.
  IntMatrix k = u.select_rows(zero_rows);
  return hnf(k).H;
}

Int det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix b = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (b(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && b(p, k) == 0) ++p;
      if (p == n) return 0;
      b.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = b(i, j) * b(k, k) - b(i, k) * b(k, j);
        mpz_divexact(b(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      b(i, k) = 0;
    }
    prev = b(k, k);
  }
  Int d = b(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

Signature signature(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature: non-symmetric matrix");
  const std::size_t n = m.rows();
  RatMatrix a = RatMatrix::from_int(m);
  Signature sig;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) == 0) {
      // prefer a symmetric swap with a later nonzero diagonal
      std::size_t jd = n;
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(j, j) != 0) {
          jd = j;
          break;
        }
      if (jd < n) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(jd, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, jd));
      } else {
        // all later diagonals vanish; use an off-diagonal pivot if any
        std::size_t jo = n;
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            jo = j;
            break;
          }
        if (jo == n) {
          ++sig.zero;  // row i is zero on the remaining block
          continue;
        }
        // symmetric add: (row,col) i += (row,col) jo turns a(i,i) into 2*b
        for (std::size_t k = 0; k < n; ++k) a(i, k) += a(jo, k);
        for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, jo);
      }
    }
    const Rat piv = a(i, i);
    if (piv > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(j, i) == 0) continue;
      Rat f = a(j, i) / piv;
      for (std::size_t k = i; k < n; ++k) a(j, k) -= f * a(i, k);
      for (std::size_t k = i; k < n; ++k) a(k, j) -= f * a(k, i);
    }
  }
  return sig;
}

bool is_unimodular(const IntMatrix& u) {
  if (!u.is_square()) return false;
  Int d = det(u);
  return d == 1 || d == -1;
}

}  // namespace forge
