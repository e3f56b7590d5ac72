#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/golay.hpp"

#include <random>

using namespace forge;

namespace {
const GolayCode& code() {
  static GolayCode c = GolayCode::build();
  return c;
}
}  // namespace

TEST_CASE("weight distribution") {
  auto wd = code().weight_distribution();
  CHECK(wd[0] == 1);
  CHECK(wd[8] == 759);
  CHECK(wd[12] == 2576);
  CHECK(wd[16] == 759);
  CHECK(wd[24] == 1);
  std::size_t total = 0;
  for (int w = 0; w <= 24; ++w) {
    total += wd[w];
    if (w != 0 && w != 8 && w != 12 && w != 16 && w != 24) CHECK(wd[w] == 0);
  }
  CHECK(total == 4096);
}

TEST_CASE("contains the all-ones word") {
  CHECK(code().contains(0xFFFFFFu));
}

TEST_CASE("closed under addition") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::size_t> pick(0, 4095);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint32_t a = code().words()[pick(rng)];
    std::uint32_t b = code().words()[pick(rng)];
    CHECK(code().contains(a ^ b));
  }
}

TEST_CASE("self-duality via pairwise intersections") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, 4095);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t a = code().words()[pick(rng)];
    std::uint32_t b = code().words()[pick(rng)];
    CHECK(GolayCode::weight(a & b) % 2 == 0);
  }
}

TEST_CASE("253 octads through a fixed point") {
  std::size_t count = 0;
  for (std::uint32_t w : code().words())
    if (GolayCode::weight(w) == 8 && (w & 1u)) ++count;
  CHECK(count == 253);
}

TEST_CASE("1288 dodecads through a fixed point") {
  std::size_t count = 0;
  for (std::uint32_t w : code().words())
    if (GolayCode::weight(w) == 12 && (w & 1u)) ++count;
  CHECK(count == 1288);
}

TEST_CASE("octad search") {
  auto through1 = code().find_octad(GolayCode::points({1}));
  REQUIRE(through1.has_value());
  CHECK(GolayCode::weight(*through1) == 8);
  CHECK((*through1 & 1u) == 1u);
  // an octad is returned when asked to contain itself
  CHECK(code().find_octad(*through1) == *through1);
  // the returned word is the smallest matching bitmask
  for (std::uint32_t w : code().words()) {
    if (GolayCode::weight(w) != 8 || !(w & 1u)) continue;
    CHECK(*through1 <= w);
    break;
  }
}

TEST_CASE("a 5-subset of an octad plus an outside point blocks the search") {
  // S(5,8,24): five points lie in exactly one octad, so asking for those
  // five plus a point outside that octad is unsatisfiable.
  std::uint32_t octad = *code().find_octad(GolayCode::points({1}));
  std::uint32_t five = 0;
  int taken = 0;
  for (int b = 0; b < 24 && taken < 5; ++b)
    if ((octad >> b) & 1) {
      five |= 1u << b;
      ++taken;
    }
  int outside = 0;
  for (int b = 0; b < 24; ++b)
    if (!((octad >> b) & 1)) {
      outside = b;
      break;
    }
  CHECK_FALSE(code().find_octad(five | (1u << outside)).has_value());
  // while the five alone determine exactly that octad
  CHECK(code().find_octad(five) == octad);
}

TEST_CASE("octad avoiding a point") {
  auto avoiding = code().find_octad(0, GolayCode::points({1}));
  REQUIRE(avoiding.has_value());
  CHECK((*avoiding & 1u) == 0);
  CHECK(GolayCode::weight(*avoiding) == 8);
}

TEST_CASE("dodecad search and complements") {
  auto d = code().find_dodecad(GolayCode::points({1}));
  REQUIRE(d.has_value());
  CHECK(GolayCode::weight(*d) == 12);
  std::uint32_t comp = ~*d & 0xFFFFFFu;
  CHECK(GolayCode::weight(comp) == 12);
  CHECK(code().contains(comp));  // complement of a dodecad is a dodecad
}
