#include "forge/niemeier.hpp"

#include "forge/enumerate.hpp"

#include <stdexcept>

namespace forge {

NiemeierA1 build_niemeier(const GolayCode& code) {
  // Work in doubled frame coordinates v = 2x so everything is integral:
  // generators are 2*e_i (the roots) and the codeword indicators (the
  // halved glue vectors). <a/2, b/2> = -(a.b)/2 under the frame form -2*I.
  IntMatrix gens(24 + 12, 24);
  for (std::size_t i = 0; i < 24; ++i) gens(i, i) = 2;
  for (std::size_t r = 0; r < 12; ++r) {
    std::uint32_t w = code.basis()[r];
    for (std::size_t j = 0; j < 24; ++j)
      if ((w >> j) & 1) gens(24 + r, j) = 1;
  }
  IntMatrix h = hnf(gens).H;
  IntMatrix doubled(24, 24);  // top 24 rows; the stack has full rank
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) doubled(i, j) = h(i, j);

  // Gram = -(1/2) * doubled * doubled^T
  IntMatrix ddt = doubled * doubled.transposed();
  IntMatrix gram(24, 24);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) {
      if (ddt(i, j) % 2 != 0) throw std::logic_error("niemeier: non-integral Gram entry");
      gram(i, j) = -ddt(i, j) / 2;
    }
  NiemeierA1 n;
  n.lattice = Lattice(std::move(gram));
  if (!n.lattice.is_even()) throw std::logic_error("niemeier: lattice not even");
  if (n.lattice.determinant() != 1) throw std::logic_error("niemeier: lattice not unimodular");
  Signature sig = n.lattice.signature();
  if (sig.pos != 0 || sig.neg != 24) throw std::logic_error("niemeier: wrong signature");

  // index over the root span A1^24: det(2I)/det(doubled) = 2^24 / 2^12
  Int dh = det(doubled);
  if (dh < 0) dh = -dh;
  if (dh != Int(1) << 12) throw std::logic_error("niemeier: wrong glue index");

  n.basis = RatMatrix(24, 24);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) n.basis(i, j) = make_rat(doubled(i, j), 2);

  // x_i in basis coordinates: solve r * basis = e_i, i.e. r = 2 * row_i(doubled^-1)
  RatMatrix inv = RatMatrix::from_int(doubled).inverse();
  RatMatrix roots_rat = Rat(2) * inv;
  if (!roots_rat.is_integral()) throw std::logic_error("niemeier: roots not lattice vectors");
  n.root_coords = roots_rat.to_int();
  IntMatrix root_gram = n.root_coords * n.lattice.gram() * n.root_coords.transposed();
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j)
      if (root_gram(i, j) != (i == j ? -2 : 0))
        throw std::logic_error("niemeier: root frame is not orthogonal of norm -2");

  ShortVectorReport roots = vectors_with_norm(n.lattice, Int(-2));
  if (roots.count() != 24)  // 24 up to sign = 48 vectors
    throw std::logic_error("niemeier: root count != 48");
  return n;
}

}  // namespace forge
