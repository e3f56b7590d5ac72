#pragma once

#include "forge/golay.hpp"
#include "forge/lattice.hpp"

namespace forge {

/// The rank-24 even unimodular lattice whose root system is A1^24,
/// built from the Golay code: vectors of (A1*)^24 whose reduction
/// mod A1^24 is a codeword.
///
/// Coordinates: the 24 positive roots x_1..x_24 are an orthogonal frame
/// with <x_i,x_j> = -2 delta_ij; the lattice basis is stored as rational
/// rows over that frame (denominator 2).
struct NiemeierA1 {
  Lattice lattice;        // 24x24 integral Gram on the chosen basis
  RatMatrix basis;        // basis rows in frame coordinates, HNF over denominator 2
  IntMatrix root_coords;  // row i: x_{i+1} in lattice basis coordinates
};

/// Constructs N and verifies: integral even Gram, det = 1, signature (0,24),
/// index 2^12 over the root span, roots of norm -2 pairwise orthogonal,
/// exactly 48 vectors of norm -2. Any failure throws std::logic_error.
NiemeierA1 build_niemeier(const GolayCode& code);

}  // namespace forge
