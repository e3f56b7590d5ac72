#include "forge/golay.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace forge {

int GolayCode::weight(std::uint32_t w) { return std::popcount(w); }

std::uint32_t GolayCode::points(std::initializer_list<int> ps) {
  std::uint32_t m = 0;
  for (int p : ps) {
    if (p < 1 || p > 24) throw std::invalid_argument("point out of range 1..24");
    m |= 1u << (p - 1);
  }
  return m;
}

GolayCode GolayCode::build() {
  // Quadratic residues mod 23.
  bool isq[23] = {};
  for (int i = 1; i < 23; ++i) isq[(i * i) % 23] = true;

  std::vector<std::uint32_t> gens;
  for (int s = 0; s < 23; ++s) {
    std::uint32_t w = 1u;  // e_inf = point 1 = bit 0
    for (int q = 1; q < 23; ++q)
      if (isq[q]) w |= 1u << (1 + (q + s) % 23);
    gens.push_back(w);
  }

  // Row reduction over F2 to a reduced echelon basis.
  std::vector<std::uint32_t> basis;
  for (std::uint32_t g : gens) {
    for (std::uint32_t b : basis) {
      std::uint32_t low = b & (~b + 1);
      if (g & low) g ^= b;
    }
    if (g) {
      std::uint32_t low = g & (~g + 1);
      for (auto& b : basis)
        if (b & low) b ^= g;
      basis.push_back(g);
    }
  }
  std::sort(basis.begin(), basis.end());
  if (basis.size() != 12) throw std::logic_error("Golay construction: dimension != 12");

  GolayCode code;
  std::copy(basis.begin(), basis.end(), code.basis_.begin());
  code.words_.reserve(4096);
  for (std::uint32_t m = 0; m < 4096; ++m) {
    std::uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if ((m >> i) & 1) w ^= basis[i];
    code.words_.push_back(w);
  }
  std::sort(code.words_.begin(), code.words_.end());

  // Self-checks: weight set, minimum distance, self-duality.
  for (std::uint32_t w : code.words_) {
    int wt = weight(w);
    if (wt != 0 && wt != 8 && wt != 12 && wt != 16 && wt != 24)
      throw std::logic_error("Golay construction: illegal codeword weight");
  }
  for (std::uint32_t a : basis)
    for (std::uint32_t b : basis)
      if (weight(a & b) % 2 != 0) throw std::logic_error("Golay construction: code not self-dual");
  return code;
}

bool GolayCode::contains(std::uint32_t w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::array<std::size_t, 25> GolayCode::weight_distribution() const {
  std::array<std::size_t, 25> wd{};
  for (std::uint32_t w : words_) ++wd[weight(w)];
  return wd;
}

namespace {

std::optional<std::uint32_t> find_word(const std::vector<std::uint32_t>& words, int target_weight,
                                       std::uint32_t must_contain, std::uint32_t must_avoid) {
  for (std::uint32_t w : words) {
    if (GolayCode::weight(w) != target_weight) continue;
    if ((w & must_contain) != must_contain) continue;
    if (w & must_avoid) continue;
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::uint32_t> GolayCode::find_octad(std::uint32_t must_contain,
                                                   std::uint32_t must_avoid) const {
  return find_word(words_, 8, must_contain, must_avoid);
}

std::optional<std::uint32_t> GolayCode::find_dodecad(std::uint32_t must_contain,
                                                     std::uint32_t must_avoid) const {
  return find_word(words_, 12, must_contain, must_avoid);
}

}  // namespace forge
