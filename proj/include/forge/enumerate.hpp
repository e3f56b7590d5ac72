#pragma once

#include "forge/lattice.hpp"

namespace forge {

struct ReducedBasis {
  IntMatrix gram;       // LLL-reduced Gram, caller's sign convention
  IntMatrix transform;  // unimodular; transform * original * transform^T = gram
};

/// LLL reduction with delta = 99/100 on exact rational Gram-Schmidt data.
/// The input must be definite (positive, or negative after global negation);
/// anything else throws std::invalid_argument.
ReducedBasis lll_reduce(const Lattice& l);

struct ShortVectorReport {
  Int requested_norm;
  /// Requested sign is inconsistent with the definiteness of the lattice;
  /// the vector list is empty in that case.
  bool sign_mismatch = false;
  /// One of each +-v pair, original coordinates, sorted lexicographically.
  std::vector<std::vector<Int>> vectors;

  std::size_t count() const { return vectors.size(); }
};

/// Complete list (up to sign) of vectors of the exact norm n, by
/// Fincke-Pohst enumeration on the LLL-reduced basis with exact rational
/// interval bounds. Requires n != 0.
ShortVectorReport vectors_with_norm(const Lattice& l, const Int& n);

/// Minimal |<v,v>| over nonzero v; requires rank >= 1 and a definite lattice.
Int min_norm(const Lattice& l);

}  // namespace forge
