#pragma once

#include "forge/matrix.hpp"

namespace forge {

struct HnfResult {
  IntMatrix H;  // row Hermite normal form of the input
  IntMatrix U;  // unimodular, H = U * M
};

/// Row Hermite normal form: row-echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Pivot selection takes the smallest absolute
/// value, ties broken by lowest row index.
HnfResult hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix U;  // unimodular row transform
  IntMatrix D;  // diagonal, d1 | d2 | ... | dr >= 0, zeros trailing
  IntMatrix V;  // unimodular column transform, U*M*V = D

  /// Nonzero diagonal entries, in chain order.
  std::vector<Int> divisors() const;
};

SmithForm snf(const IntMatrix& m);

/// Basis of the left integer kernel {v : v*M = 0}, saturated, rows in HNF.
IntMatrix kernel_int(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws std::invalid_argument unless m is square.
Int det(const IntMatrix& m);

struct Signature {
  std::size_t pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Exact inertia of a symmetric matrix (rational symmetric elimination;
/// zero diagonal with a nonzero off-diagonal pivot is handled by a
/// symmetric row/column addition). Throws unless m is symmetric.
Signature signature(const IntMatrix& m);

/// |det U| == 1, exactly.
bool is_unimodular(const IntMatrix& u);

}  // namespace forge
