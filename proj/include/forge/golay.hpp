#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace forge {

/// The binary [24,12,8] Golay code. Coordinates are the 24 points 1..24,
/// stored as bits 0..23 of a 32-bit word (point p <-> bit p-1). Point 1 is
/// the extended coordinate (infinity); points 2..24 carry the cyclic
/// coordinates 0..22 of the length-23 quadratic residue code.
class GolayCode {
 public:
  /// Builds the code from the quadratic-residue generators
  /// e_inf + sum_{q in QR(23)} e_{q+s}, s = 0..22, row-reduced to a
  /// 12-row systematic basis. All code invariants (dimension 12,
  /// self-duality, weights in {0,8,12,16,24}) are verified; a failure
  /// throws std::logic_error.
  static GolayCode build();

  /// All 4096 codewords, sorted ascending as bitmasks.
  const std::vector<std::uint32_t>& words() const { return words_; }
  const std::array<std::uint32_t, 12>& basis() const { return basis_; }

  bool contains(std::uint32_t w) const;

  /// Count of codewords per weight.
  std::array<std::size_t, 25> weight_distribution() const;

  /// Smallest (as a bitmask) weight-8 codeword containing every point of
  /// `must_contain` and none of `must_avoid`; nullopt when none exists.
  std::optional<std::uint32_t> find_octad(std::uint32_t must_contain,
                                          std::uint32_t must_avoid = 0) const;
  /// Same for weight-12 codewords.
  std::optional<std::uint32_t> find_dodecad(std::uint32_t must_contain,
                                            std::uint32_t must_avoid = 0) const;

  static int weight(std::uint32_t w);
  /// Bitmask for a list of points in 1..24.
  static std::uint32_t points(std::initializer_list<int> ps);

 private:
  GolayCode() = default;
  std::array<std::uint32_t, 12> basis_{};
  std::vector<std::uint32_t> words_;
};

}  // namespace forge
