#pragma once

#include "forge/enumerate.hpp"
#include "forge/fqf.hpp"
#include "forge/golay.hpp"
#include "forge/lattice.hpp"
#include "forge/niemeier.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

// The six point stabilizer subgroups with three orbits on the 24 roots.
enum class CaseId { M22, L34, A7, A8, M11, A5x3 };

struct CaseInfo {
  CaseId id;
  const char* cli_name;
  const char* display_name;
  std::array<int, 3> orbit_sizes;
  long h2;          // = |det of the invariant sublattice|
  long glue_order;  // order of the glue subgroup joining <h> + coinvariant
  int p;            // characteristic of the matching NS lattice
};

const std::array<CaseInfo, 6>& case_table();
const CaseInfo& case_info(CaseId id);
std::optional<CaseId> case_from_cli(std::string_view name);

/// Orbit partition of the 24 root indices (points 1..24) for one case;
/// the first block is the fixed point {1}.
struct OrbitPartition {
  CaseId id;
  std::vector<std::vector<int>> blocks;
};

/// Concrete partition with the per-case structural constraints
/// (octad / dodecad blocks) realized inside the given code.
OrbitPartition make_partition(CaseId id, const GolayCode& code);

/// N^G for a coordinate-permutation action with the given orbits:
/// the saturation of the span of the per-block root indicator vectors.
Sublattice invariant_sublattice(const NiemeierA1& n, const OrbitPartition& p);

/// Neron-Severi lattice of the supersingular K3 surface with Artin
/// invariant 1 in characteristic p, for p in {5, 7, 11}.
struct NSTarget {
  int p = 0;
  int sigma = 1;
  Lattice lattice;
  FQF fqf;
};

NSTarget ns_target(int p);

/// The published diagonal discriminant form for ns_target(p).
FQF ns_reference_form(int p);

struct CaseReport {
  CaseId id{};
  std::string case_name;

  Int det_inv;        // |det N^G|
  FQF q_inv;          // discriminant form of N^G
  FQF q_coinv;        // discriminant form of N_G
  bool forms_negate = false;  // q_coinv isomorphic to -q_inv

  bool root_free = false;  // N_G has no vectors of norm -2
  Int coinv_min_norm;      // minimal |norm| in N_G (4 when root free)

  Int h2;
  Int glue_order;
  std::vector<Int> glue_element;       // coefficients on the A_{<h> + N_G} generators
  std::vector<Int> glue_group_orders;  // orders of those generators
  std::size_t glue_candidates = 0;     // isotropic elements of the required order
  std::size_t glue_valid = 0;          // candidates whose overlattice matches the target

  Int det_s;  // signed determinant of the glued lattice S
  Signature sig_s;
  FQF q_s;
  int target_p = 0;
  bool target_match = false;  // q_s isomorphic to the NS form for target_p

  std::size_t l_coinv = 0;  // minimal generators of A_{N_G} (1 = cyclic)
  std::size_t l_s = 0;
  bool nikulin_ok = false;  // rank >= l(A_S) + 2 and indefinite signature

  bool passed = false;
  std::vector<std::string> failures;
};

CaseReport run_case(CaseId id, const GolayCode& code, const NiemeierA1& n);
CaseReport run_case(CaseId id, const GolayCode& code, const NiemeierA1& n,
                    const OrbitPartition& partition);
/// Convenience: builds the code and N first.
CaseReport run_case(CaseId id);

/// All six cases in table order. workers = 0 takes FORGE_WORKERS from the
/// environment, defaulting to the hardware concurrency (capped at 6).
std::vector<CaseReport> run_all_cases(unsigned workers = 0);

std::string case_report_text(const CaseReport& r);

}  // namespace forge
