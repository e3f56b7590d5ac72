#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/enumerate.hpp"
#include "forge/lattice.hpp"
#include "test_support.hpp"

#include <random>

using namespace forge;
using namespace forge::testsupport;

TEST_CASE("lll leaves a reduced Gram alone") {
  Lattice l(IntMatrix::from_rows({{2, 0}, {0, 2}}));
  ReducedBasis rb = lll_reduce(l);
  CHECK(rb.transform == IntMatrix::identity(2));
  CHECK(rb.gram == l.gram());
}

TEST_CASE("lll performs Lagrange reduction in rank 2") {
  Lattice l(IntMatrix::from_rows({{2, 3}, {3, 6}}));
  ReducedBasis rb = lll_reduce(l);
  CHECK(det(rb.gram) == 3);
  Int off = rb.gram(0, 1);
  CHECK(off * off <= 1);
  CHECK(rb.transform * l.gram() * rb.transform.transposed() == rb.gram);
  CHECK(is_unimodular(rb.transform));
}

TEST_CASE("lll rejects indefinite input") {
  CHECK_THROWS_AS(lll_reduce(lattice_U()), std::invalid_argument);
  CHECK_THROWS_AS(lll_reduce(Lattice(IntMatrix::zero(2, 2))), std::invalid_argument);
}

namespace {

// independent rational Gram-Schmidt for checking reduction postconditions
struct GsoOracle {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> norms;
};

GsoOracle gso_of(const IntMatrix& g) {
  const std::size_t n = g.rows();
  GsoOracle o;
  o.mu.assign(n, {});
  o.norms.assign(n, Rat(0));
  std::vector<std::vector<Rat>> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    o.mu[i].assign(i, Rat(0));
    c[i].assign(i, Rat(0));
    for (std::size_t j = 0; j < i; ++j) {
      Rat v = Rat(g(i, j));
      for (std::size_t t = 0; t < j; ++t) v -= o.mu[j][t] * c[i][t];
      c[i][j] = v;
      o.mu[i][j] = v / o.norms[j];
    }
    Rat nv = Rat(g(i, i));
    for (std::size_t t = 0; t < i; ++t) nv -= o.mu[i][t] * c[i][t];
    o.norms[i] = nv;
  }
  return o;
}

void check_reduced(const IntMatrix& g) {
  GsoOracle o = gso_of(g);
  const Rat delta(99, 100);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(2 * o.mu[i][j] <= 1);
      CHECK(2 * o.mu[i][j] >= -1);
    }
  for (std::size_t k = 1; k < g.rows(); ++k) {
    Rat lhs = o.norms[k];
    Rat rhs = (delta - o.mu[k][k - 1] * o.mu[k][k - 1]) * o.norms[k - 1];
    CHECK(lhs >= rhs);
  }
}

}  // namespace

TEST_CASE("lll output is size-reduced and satisfies the Lovasz condition") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 4;
    IntMatrix g = random_definite_gram(rng, n, false, Int(500));
    check_reduced(lll_reduce(Lattice(g)).gram);
  }
  IntMatrix t = random_unimodular(rng, 8, 50);
  Lattice distorted(t * root_lattice_E(8).gram().negated() * t.transposed());
  check_reduced(lll_reduce(distorted).gram);
}

TEST_CASE("lll restores distorted E8") {
  std::mt19937 rng(777);
  Lattice e8 = root_lattice_E(8);
  for (int trial = 0; trial < 5; ++trial) {
    IntMatrix t = random_unimodular(rng, 8, 40);
    Lattice distorted(t * e8.gram() * t.transposed());
    ReducedBasis rb = lll_reduce(distorted);
    CHECK(det(rb.gram) == 1);  // det preserved
    CHECK(rb.transform * distorted.gram() * rb.transform.transposed() == rb.gram);
    CHECK(is_unimodular(rb.transform));
  }
}

TEST_CASE("roots of A2") {
  ShortVectorReport r = vectors_with_norm(root_lattice_A(2), Int(-2));
  CHECK(r.count() == 3);  // 6 roots, up to sign
  for (const auto& v : r.vectors) {
    IntMatrix x(1, 2);
    x(0, 0) = v[0];
    x(0, 1) = v[1];
    IntMatrix norm = x * root_lattice_A(2).gram() * x.transposed();
    CHECK(norm(0, 0) == -2);
  }
}

TEST_CASE("roots of E8") {
  ShortVectorReport r = vectors_with_norm(root_lattice_E(8), Int(-2));
  CHECK(r.count() == 120);  // 240 roots, up to sign
}

TEST_CASE("sign mismatch yields an empty warning report") {
  ShortVectorReport r = vectors_with_norm(root_lattice_A(2), Int(2));
  CHECK(r.sign_mismatch);
  CHECK(r.count() == 0);
  ShortVectorReport r2 = vectors_with_norm(Lattice(IntMatrix::from_rows({{2}})), Int(-2));
  CHECK(r2.sign_mismatch);
}

TEST_CASE("norm zero is rejected") {
  CHECK_THROWS_AS(vectors_with_norm(root_lattice_A(2), Int(0)), std::invalid_argument);
}

TEST_CASE("minimum norms") {
  CHECK(min_norm(root_lattice_A(1)) == 2);
  CHECK(min_norm(root_lattice_E(8)) == 2);
  CHECK(min_norm(Lattice(IntMatrix::from_rows({{6, 1}, {1, 4}}))) == 4);
  CHECK_THROWS_AS(min_norm(Lattice()), std::invalid_argument);
}

TEST_CASE("enumeration matches box search on random definite lattices") {
  std::mt19937 rng(1889);
  int done = 0;
  while (done < 50) {
    std::size_t n = 1 + done % 4;
    bool negative = done % 3 == 0;
    IntMatrix g = random_definite_gram(rng, n, negative, Int(200));
    Lattice l(g);
    IntMatrix pos = negative ? g.negated() : g;
    Int bound = pos(0, 0);
    for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, Int(pos(i, i)));
    BoxSearchResult oracle = box_search(pos, bound);
    for (Int target = 1; target <= bound; ++target) {
      Int signed_target = negative ? Int(-target) : target;
      ShortVectorReport r = vectors_with_norm(l, signed_target);
      std::size_t expected = oracle.counts.count(target) ? oracle.counts.at(target) : 0;
      CHECK(r.count() == expected);
    }
    ++done;
  }
}

TEST_CASE("counts are invariant under unimodular basis change") {
  std::mt19937 rng(31415);
  Lattice base(root_lattice_A(3).gram().negated());  // positive definite A3
  ShortVectorReport ref = vectors_with_norm(base, Int(2));
  CHECK(ref.count() == 6);
  for (int trial = 0; trial < 8; ++trial) {
    IntMatrix t = random_unimodular(rng, 3, 25);
    Lattice twisted(t * base.gram() * t.transposed());
    CHECK(vectors_with_norm(twisted, Int(2)).count() == ref.count());
    CHECK(min_norm(twisted) == 2);
  }
}

TEST_CASE("reported vectors satisfy the requested norm in original coordinates") {
  std::mt19937 rng(5005);
  for (int trial = 0; trial < 6; ++trial) {
    IntMatrix g = random_definite_gram(rng, 3, false, Int(150));
    Lattice l(g);
    Int target = min_norm(l);
    ShortVectorReport r = vectors_with_norm(l, target);
    CHECK(r.count() > 0);
    for (const auto& v : r.vectors) {
      Int norm = 0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) norm += v[i] * g(i, j) * v[j];
      CHECK(norm == target);
      // canonical representative: first nonzero coordinate positive
      for (const auto& c : v) {
        if (c == 0) continue;
        CHECK(c > 0);
        break;
      }
    }
    // lexicographically sorted and duplicate-free
    for (std::size_t i = 0; i + 1 < r.vectors.size(); ++i) CHECK(r.vectors[i] < r.vectors[i + 1]);
  }
}
