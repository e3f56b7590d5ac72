#pragma once

#include "forge/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace forge {

/// Element of a finite abelian group, as coefficients on the generators,
/// reduced modulo the generator orders.
using FQFElement = std::vector<Int>;

/// Finite quadratic form: a finite abelian group presented by cyclic
/// generators g_i of order d_i > 1, with q(g_i) in Q/2Z and pairings
/// b(g_i, g_j) in Q/Z.
class FQF {
 public:
  FQF() = default;  // trivial group

  /// `pairings` is the full symmetric matrix of b-values; the diagonal is
  /// forced to q_i mod Z regardless of what is passed.
  FQF(std::vector<Int> orders, std::vector<Rat> q_diag, RatMatrix pairings);

  /// Orthogonal generators (all cross pairings zero).
  static FQF diagonal(std::vector<Int> orders, std::vector<Rat> q_diag);
  static FQF trivial() { return FQF(); }

  std::size_t generator_count() const { return orders_.size(); }
  const std::vector<Int>& orders() const { return orders_; }
  const std::vector<Rat>& q_diag() const { return q_; }
  const RatMatrix& pairings() const { return b_; }

  Int group_order() const;

  bool is_trivial() const { return orders_.empty(); }

  FQFElement zero_element() const { return FQFElement(orders_.size(), Int(0)); }
  FQFElement reduce(FQFElement x) const;
  FQFElement add(const FQFElement& x, const FQFElement& y) const;
  FQFElement scale(const Int& n, const FQFElement& x) const;

  /// Additive order of x in the group.
  Int element_order(const FQFElement& x) const;

  /// q(x) = sum x_i^2 q_i + 2 sum_{i<j} x_i x_j b_ij, in [0,2).
  Rat eval_q(const FQFElement& x) const;
  /// b(x,y), in [0,1).
  Rat eval_b(const FQFElement& x, const FQFElement& y) const;

  /// All group elements in lexicographic coefficient order (first
  /// coordinate most significant). Intended for small groups.
  std::vector<FQFElement> all_elements() const;

  std::string to_string() const;

  bool operator==(const FQF&) const = default;

 private:
  std::vector<Int> orders_;
  std::vector<Rat> q_;  // canonical [0,2)
  RatMatrix b_;         // full symmetric, canonical [0,1), b_ii = q_i mod Z
};

FQF direct_sum(const FQF& a, const FQF& b);
FQF negate(const FQF& f);

/// All elements of exact order n with q(x) = 0 in Q/2Z, lexicographic order.
std::vector<FQFElement> isotropic_elements(const FQF& f, const Int& order);

enum class IsoStatus {
  Found,      // isomorphism exhibited
  None,       // search space exhausted, no isomorphism exists
  Undecided,  // budget exceeded before the space was exhausted
};

struct IsoResult {
  IsoStatus status = IsoStatus::None;
  /// images[i] = image of a's generator i in b, when status == Found.
  std::vector<FQFElement> images;

  bool found() const { return status == IsoStatus::Found; }
};

/// Searches for a group isomorphism a -> b preserving q (and hence b).
/// Generator images are tried in lexicographic element order, so the first
/// isomorphism found is the lexicographically smallest. `budget` caps the
/// number of candidate evaluations; exceeding it yields Undecided, never a
/// silent miss.
IsoResult isomorphic(const FQF& a, const FQF& b, std::uint64_t budget = 1000000);

}  // namespace forge
