#pragma once

#include "forge/fqf.hpp"
#include "forge/linalg.hpp"
#include "forge/matrix.hpp"

namespace forge {

/// Free Z-module of finite rank with an integral symmetric bilinear form,
/// given by its Gram matrix on a fixed basis.
class Lattice {
 public:
  Lattice() = default;  // rank 0
  explicit Lattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }

  /// All diagonal entries even, i.e. <x,x> even for every x.
  bool is_even() const;
  Int determinant() const { return det(gram_); }
  bool is_nondegenerate() const { return determinant() != 0; }
  Signature signature() const { return forge::signature(gram_); }

  bool operator==(const Lattice&) const = default;

 private:
  IntMatrix gram_;
};

// Root lattices in the negative definite Dynkin convention
// (diagonal -2, adjacent nodes +1).
Lattice root_lattice_A(std::size_t m);  // m >= 1
Lattice root_lattice_D(std::size_t n);  // n >= 4
Lattice root_lattice_E(std::size_t l);  // l in {6,7,8}
/// Hyperbolic plane [[0,1],[1,0]].
Lattice lattice_U();
/// Rank-1 lattice [[k]]; k must be even.
Lattice lattice_rank1(const Int& k);
/// Orthogonal sum of 24 copies of A1.
Lattice lattice_A1_24();

Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Sublattice of an ambient lattice, spanned by the rows of `basis`
/// (coordinates in the ambient basis). The stored basis is kept in HNF.
class Sublattice {
 public:
  Sublattice(Lattice ambient, IntMatrix basis);

  const Lattice& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

  IntMatrix induced_gram() const;
  Lattice lattice() const { return Lattice(induced_gram()); }

  bool operator==(const Sublattice&) const = default;

 private:
  Lattice ambient_;
  IntMatrix basis_;
};

/// Saturated sublattice {v in ambient : <v,t> = 0 for all t in T}.
Sublattice orthogonal_complement(const Sublattice& t);

/// Smallest primitive sublattice containing T (same rank, finite index).
Sublattice saturation(const Sublattice& t);

/// Intersection of two sublattices of the same ambient.
Sublattice intersect(const Sublattice& a, const Sublattice& b);

/// Discriminant group A_L = L*/L with its Q/2Z-valued quadratic form.
struct DiscriminantForm {
  std::vector<Int> orders;  // cyclic factor orders d_i > 1, divisor chain
  std::vector<Rat> q_diag;  // q(g_i) in [0,2)
  RatMatrix pairings;       // b(g_i,g_j) in [0,1), full symmetric
  RatMatrix lifts;          // rows: representatives of g_i in L*, L-basis coords

  FQF fqf() const;
  Int group_order() const;
};

/// Requires L even and nondegenerate.
DiscriminantForm discriminant_form(const Lattice& l);

/// Minimal number of generators of A_L. Requires L nondegenerate.
std::size_t l_invariant(const Lattice& l);

/// Generators of an isotropic subgroup of A_L, as rational coordinate rows
/// in the L-basis (i.e. lifts in L*).
struct GlueSpec {
  RatMatrix generators;
};

struct Overlattice {
  Lattice lattice;  // integral Gram on the new basis
  RatMatrix basis;  // rows: new basis in old L-coordinates, HNF over a denominator
  Int index;        // [L' : L] = order of the glue subgroup
};

/// Even overlattice determined by an isotropic glue subgroup;
/// |det L'| * index^2 = |det L|. Throws on a non-isotropic glue or when a
/// lift is not in L*.
Overlattice overlattice_from_glue(const Lattice& l, const GlueSpec& glue);

}  // namespace forge
