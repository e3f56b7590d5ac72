#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/fqf.hpp"
#include "forge/lattice.hpp"

#include <random>

using namespace forge;

TEST_CASE("q of the zero element vanishes") {
  FQF f = FQF::diagonal({4, 11}, {Rat(5, 4), Rat(4, 11)});
  CHECK(f.eval_q(f.zero_element()) == 0);
}

TEST_CASE("q on multiples of the A9 generator") {
  // Z/10 with q(y) = -9/10: q(5y) = -1/2, canonically 3/2
  FQF f = FQF::diagonal({10}, {Rat(-9, 10)});
  CHECK(f.eval_q({Int(5)}) == Rat(3, 2));
  CHECK(f.eval_q({Int(5)}) == mod_2z(Rat(-1, 2)));
}

TEST_CASE("q on a doubled order-4 generator") {
  FQF f = FQF::diagonal({4}, {Rat(5, 4)});
  CHECK(f.eval_q({Int(2)}) == 1);  // 4 * 5/4 = 5 = 1 mod 2Z
}

TEST_CASE("direct sum concatenates factors") {
  FQF a = FQF::diagonal({4}, {Rat(5, 4)});
  FQF b = FQF::diagonal({11}, {Rat(4, 11)});
  FQF s = direct_sum(a, b);
  CHECK(s.group_order() == 44);
  CHECK(s.orders() == std::vector<Int>{4, 11});
  CHECK(direct_sum(a, FQF::trivial()) == a);
  FQF five = direct_sum(FQF::diagonal({5}, {Rat(-2, 5)}), FQF::diagonal({5}, {Rat(-6, 5)}));
  CHECK(five.group_order() == 25);
}

TEST_CASE("negation") {
  FQF f = FQF::diagonal({4, 11}, {Rat(-5, 4), Rat(-4, 11)});
  FQF n = negate(f);
  CHECK(n.q_diag()[0] == Rat(5, 4));
  CHECK(n.q_diag()[1] == Rat(4, 11));
  CHECK(negate(n) == f);
  CHECK(negate(FQF::trivial()) == FQF::trivial());
  CHECK(isomorphic(n, FQF::diagonal({4, 11}, {Rat(5, 4), Rat(4, 11)})).found());
}

TEST_CASE("element orders") {
  FQF f = FQF::diagonal({4, 11}, {Rat(5, 4), Rat(4, 11)});
  CHECK(f.element_order({Int(0), Int(0)}) == 1);
  CHECK(f.element_order({Int(2), Int(0)}) == 2);
  CHECK(f.element_order({Int(1), Int(1)}) == 44);
  CHECK(f.element_order({Int(2), Int(1)}) == 22);
}

TEST_CASE("isotropic elements of the trivial form") {
  CHECK(isotropic_elements(FQF::trivial(), 1).size() == 1);  // the zero element
  CHECK(isotropic_elements(FQF::trivial(), 2).empty());
}

TEST_CASE("isotropic search finds the h/4 + theta pattern") {
  // q_<44> + the M22 coinvariant form (5/4)+(4/11)
  FQF f = direct_sum(FQF::diagonal({44}, {Rat(1, 44)}),
                     FQF::diagonal({4, 11}, {Rat(5, 4), Rat(4, 11)}));
  auto iso4 = isotropic_elements(f, 4);
  CHECK(!iso4.empty());
  for (const auto& x : iso4) {
    CHECK(f.element_order(x) == 4);
    CHECK(f.eval_q(x) == 0);
    CHECK(x[0] % 11 == 0);  // h-component must be a multiple of h/4
  }
  // completeness against the brute-force definition
  std::size_t direct = 0;
  for (const auto& x : f.all_elements())
    if (f.element_order(x) == 4 && f.eval_q(x) == 0) ++direct;
  CHECK(direct == iso4.size());
}

TEST_CASE("isotropic search at order 24 in the A5x3 shape") {
  FQF f = direct_sum(FQF::diagonal({120}, {Rat(1, 120)}),
                     FQF::diagonal({8, 3, 5}, {Rat(9, 8), Rat(2, 3), Rat(8, 5)}));
  auto iso = isotropic_elements(f, 24);
  CHECK(!iso.empty());
}

TEST_CASE("isomorphism is found between equal forms") {
  FQF f = FQF::diagonal({4, 11}, {Rat(5, 4), Rat(4, 11)});
  IsoResult r = isomorphic(f, f);
  REQUIRE(r.found());
  // identity is the lexicographically smallest q-preserving map here
  for (std::size_t i = 0; i < r.images.size(); ++i) {
    Rat qi = f.eval_q(r.images[i]);
    CHECK(qi == f.q_diag()[i]);
  }
}

TEST_CASE("Z/44 is isomorphic to the split form") {
  FQF cyclic = FQF::diagonal({44}, {Rat(23, 44)});
  FQF split = FQF::diagonal({4, 11}, {Rat(5, 4), Rat(4, 11)});
  IsoResult r = isomorphic(cyclic, split);
  REQUIRE(r.found());
  // verify the map preserves q on every element
  const auto elems = cyclic.all_elements();
  for (const auto& x : elems) {
    FQFElement img = split.zero_element();
    for (std::size_t i = 0; i < r.images.size(); ++i)
      img = split.add(img, split.scale(x[i], r.images[i]));
    CHECK(split.eval_q(img) == cyclic.eval_q(x));
  }
}

TEST_CASE("(5/4) and (3/4) on Z/4 are not isomorphic") {
  FQF a = FQF::diagonal({4}, {Rat(5, 4)});
  FQF b = FQF::diagonal({4}, {Rat(3, 4)});
  CHECK(isomorphic(a, b).status == IsoStatus::None);
}

TEST_CASE("different group orders are definitively non-isomorphic") {
  FQF a = FQF::diagonal({4}, {Rat(5, 4)});
  FQF b = FQF::diagonal({2}, {Rat(1, 2)});
  CHECK(isomorphic(a, b).status == IsoStatus::None);
}

TEST_CASE("an exhausted budget reports undecided") {
  FQF a = FQF::diagonal({11, 11}, {Rat(12, 11), Rat(12, 11)});
  IsoResult r = isomorphic(a, a, /*budget=*/3);
  CHECK(r.status == IsoStatus::Undecided);
}

TEST_CASE("isomorphism is symmetric on a fixture set") {
  std::vector<FQF> fixtures = {
      FQF::diagonal({44}, {Rat(23, 44)}),
      FQF::diagonal({4, 11}, {Rat(5, 4), Rat(4, 11)}),
      FQF::diagonal({4, 11}, {Rat(3, 4), Rat(4, 11)}),
      FQF::diagonal({2, 2}, {Rat(1, 2), Rat(1, 2)}),
  };
  for (const auto& a : fixtures) {
    CHECK(isomorphic(a, a).found());  // reflexive
    for (const auto& b : fixtures) {
      CHECK(isomorphic(a, b).found() == isomorphic(b, a).found());
    }
  }
}

TEST_CASE("bilinear identity q(x+y) = q(x) + q(y) + 2b(x,y)") {
  std::mt19937 rng(606);
  FQF f = discriminant_form(direct_sum(root_lattice_A(7), root_lattice_E(6))).fqf();
  auto elems = f.all_elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int trial = 0; trial < 80; ++trial) {
    const auto& x = elems[pick(rng)];
    const auto& y = elems[pick(rng)];
    Rat lhs = f.eval_q(f.add(x, y));
    Rat rhs = mod_2z(f.eval_q(x) + f.eval_q(y) + 2 * f.eval_b(x, y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("invalid q values for the generator order are rejected") {
  CHECK_THROWS_AS(FQF::diagonal({2}, {Rat(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(FQF::diagonal({1}, {Rat(0)}), std::invalid_argument);
}
