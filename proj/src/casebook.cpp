#include "forge/casebook.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <semaphore>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace forge {

const std::array<CaseInfo, 6>& case_table() {
  static const std::array<CaseInfo, 6> table{{
      {CaseId::M22, "M22", "M22", {1, 1, 22}, 44, 4, 11},
      {CaseId::L34, "L34", "L3(4):2", {1, 2, 21}, 84, 12, 7},
      {CaseId::A7, "A7", "2^4:A7", {1, 7, 16}, 56, 8, 7},
      {CaseId::A8, "A8", "A8", {1, 8, 15}, 60, 12, 5},
      {CaseId::M11, "M11", "M11", {1, 11, 12}, 66, 6, 11},
      {CaseId::A5x3, "A5x3", "2^4:(3xA5):2", {1, 3, 20}, 120, 24, 5},
  }};
  return table;
}

const CaseInfo& case_info(CaseId id) {
  for (const auto& c : case_table())
    if (c.id == id) return c;
  throw std::logic_error("case_info: unknown case");
}

std::optional<CaseId> case_from_cli(std::string_view name) {
  for (const auto& c : case_table())
    if (name == c.cli_name) return c.id;
  return std::nullopt;
}

namespace {

std::vector<int> mask_points(std::uint32_t mask) {
  std::vector<int> pts;
  for (int p = 1; p <= 24; ++p)
    if ((mask >> (p - 1)) & 1) pts.push_back(p);
  return pts;
}

std::uint32_t points_mask(const std::vector<int>& pts) {
  std::uint32_t m = 0;
  for (int p : pts) m |= 1u << (p - 1);
  return m;
}

std::vector<int> range_points(int lo, int hi) {
  std::vector<int> pts;
  for (int p = lo; p <= hi; ++p) pts.push_back(p);
  return pts;
}

void validate_partition(const OrbitPartition& part, const GolayCode& code) {
  const CaseInfo& info = case_info(part.id);
  if (part.blocks.size() != 3) throw std::logic_error("partition: expected 3 blocks");
  std::uint32_t all = 0;
  for (std::size_t b = 0; b < 3; ++b) {
    if (part.blocks[b].size() != static_cast<std::size_t>(info.orbit_sizes[b]))
      throw std::logic_error("partition: wrong block size");
    std::uint32_t m = points_mask(part.blocks[b]);
    if (all & m) throw std::logic_error("partition: blocks overlap");
    all |= m;
  }
  if (all != 0xFFFFFFu) throw std::logic_error("partition: blocks do not cover 1..24");
  if (part.blocks[0] != std::vector<int>{1})
    throw std::logic_error("partition: first block must be the fixed point");
  std::uint32_t b01 = points_mask(part.blocks[0]) | points_mask(part.blocks[1]);
  switch (part.id) {
    case CaseId::A7:
      if (GolayCode::weight(b01) != 8 || !code.contains(b01))
        throw std::logic_error("partition: blocks 1+2 must form an octad");
      break;
    case CaseId::A8:
      if (!code.contains(points_mask(part.blocks[1])))
        throw std::logic_error("partition: block 2 must be an octad");
      break;
    case CaseId::M11:
      if (GolayCode::weight(b01) != 12 || !code.contains(b01))
        throw std::logic_error("partition: blocks 1+2 must form a dodecad");
      break;
    default:
      break;
  }
}

}  // namespace

OrbitPartition make_partition(CaseId id, const GolayCode& code) {
  OrbitPartition part;
  part.id = id;
  const std::uint32_t fixed = 1u;  // point 1
  switch (id) {
    case CaseId::M22:
      part.blocks = {{1}, {2}, range_points(3, 24)};
      break;
    case CaseId::L34:
      part.blocks = {{1}, {2, 3}, range_points(4, 24)};
      break;
    case CaseId::A7: {
      auto octad = code.find_octad(fixed);
      if (!octad) throw std::logic_error("make_partition: no octad through point 1");
      std::uint32_t rest = *octad & ~fixed;
      part.blocks = {{1}, mask_points(rest), mask_points(~*octad & 0xFFFFFFu)};
      break;
    }
    case CaseId::A8: {
      auto octad = code.find_octad(0, fixed);
      if (!octad) throw std::logic_error("make_partition: no octad avoiding point 1");
      part.blocks = {{1}, mask_points(*octad), mask_points(~(*octad | fixed) & 0xFFFFFFu)};
      break;
    }
    case CaseId::M11: {
      auto dodecad = code.find_dodecad(fixed);
      if (!dodecad) throw std::logic_error("make_partition: no dodecad through point 1");
      std::uint32_t rest = *dodecad & ~fixed;
      part.blocks = {{1}, mask_points(rest), mask_points(~*dodecad & 0xFFFFFFu)};
      break;
    }
    case CaseId::A5x3:
      part.blocks = {{1}, {2, 3, 4}, range_points(5, 24)};
      break;
  }
  validate_partition(part, code);
  return part;
}

Sublattice invariant_sublattice(const NiemeierA1& n, const OrbitPartition& p) {
  IntMatrix rows(p.blocks.size(), 24);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int pt : p.blocks[b])
      for (std::size_t j = 0; j < 24; ++j) rows(b, j) += n.root_coords(pt - 1, j);
  Sublattice span(n.lattice, std::move(rows));
  return saturation(span);
}

FQF ns_reference_form(int p) {
  switch (p) {
    case 5:
      return FQF::diagonal({5, 5}, {Rat(-2, 5), Rat(-6, 5)});
    case 7:
      return FQF::diagonal({7, 7}, {Rat(-6, 7), Rat(-6, 7)});
    case 11:
      return FQF::diagonal({11, 11}, {Rat(-10, 11), Rat(-10, 11)});
    default:
      throw std::invalid_argument("ns_reference_form: p must be 5, 7 or 11");
  }
}

namespace {

RatMatrix lift_of_element(const DiscriminantForm& df, const std::vector<Int>& coeffs) {
  RatMatrix lift(1, df.lifts.cols());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < df.lifts.cols(); ++j)
      lift(0, j) += Rat(coeffs[i]) * df.lifts(i, j);
  }
  return lift;
}

}  // namespace

NSTarget ns_target(int p) {
  NSTarget t;
  t.p = p;
  t.sigma = 1;
  switch (p) {
    case 7:
      t.lattice = direct_sum(direct_sum(lattice_U(), root_lattice_E(8)),
                             direct_sum(root_lattice_A(6), root_lattice_A(6)));
      break;
    case 11:
      t.lattice = direct_sum(lattice_U(), direct_sum(root_lattice_A(10), root_lattice_A(10)));
      break;
    case 5: {
      Lattice k = direct_sum(direct_sum(lattice_U(), root_lattice_E(7)),
                             direct_sum(root_lattice_A(4), root_lattice_A(9)));
      DiscriminantForm df = discriminant_form(k);
      auto cands = isotropic_elements(df.fqf(), 2);
      if (cands.empty()) throw std::logic_error("ns_target: no order-2 isotropic glue in A_K");
      Overlattice s = overlattice_from_glue(k, GlueSpec{lift_of_element(df, cands.front())});
      if (s.index != 2) throw std::logic_error("ns_target: glue index != 2");
      t.lattice = s.lattice;
      break;
    }
    default:
      throw std::invalid_argument("ns_target: p must be 5, 7 or 11");
  }
  if (t.lattice.rank() != 22) throw std::logic_error("ns_target: rank != 22");
  if (t.lattice.determinant() != -Int(p) * Int(p))
    throw std::logic_error("ns_target: determinant != -p^2");
  if (!(t.lattice.signature() == Signature{1, 21, 0}))
    throw std::logic_error("ns_target: signature != (1,21)");
  t.fqf = discriminant_form(t.lattice).fqf();
  if (!isomorphic(t.fqf, ns_reference_form(p)).found())
    throw std::logic_error("ns_target: discriminant form differs from the reference");
  return t;
}

CaseReport run_case(CaseId id, const GolayCode& code, const NiemeierA1& n) {
  return run_case(id, code, n, make_partition(id, code));
}

CaseReport run_case(CaseId id, const GolayCode& code, const NiemeierA1& n,
                    const OrbitPartition& partition) {
  const CaseInfo& info = case_info(id);
  CaseReport rep;
  rep.id = id;
  rep.case_name = info.display_name;
  rep.target_p = info.p;
  rep.h2 = 0;
  rep.det_s = 0;
  rep.coinv_min_norm = 0;
  auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };

  validate_partition(partition, code);

  Sublattice inv = invariant_sublattice(n, partition);
  if (inv.rank() != 3) fail("invariant sublattice rank != 3");
  Sublattice coinv = orthogonal_complement(inv);
  if (coinv.rank() != 21) fail("coinvariant sublattice rank != 21");

  Lattice inv_lat = inv.lattice();
  Lattice coinv_lat = coinv.lattice();
  Int det_inv = inv_lat.determinant();
  Int det_coinv = coinv_lat.determinant();
  rep.det_inv = det_inv < 0 ? Int(-det_inv) : det_inv;
  Int det_coinv_abs = det_coinv < 0 ? Int(-det_coinv) : det_coinv;
  if (rep.det_inv != info.h2) fail("det of invariant sublattice differs from the case table");
  if (det_coinv_abs != rep.det_inv)
    fail("complementary sublattices have different |det| in a unimodular ambient");

  DiscriminantForm df_inv = discriminant_form(inv_lat);
  DiscriminantForm df_coinv = discriminant_form(coinv_lat);
  rep.q_inv = df_inv.fqf();
  rep.q_coinv = df_coinv.fqf();
  rep.forms_negate = isomorphic(rep.q_coinv, negate(rep.q_inv)).found();
  if (!rep.forms_negate) fail("q of coinvariant lattice is not -q of invariant lattice");

  rep.root_free = vectors_with_norm(coinv_lat, Int(-2)).count() == 0;
  if (!rep.root_free) fail("coinvariant lattice contains norm -2 vectors");
  rep.coinv_min_norm = min_norm(coinv_lat);
  if (rep.coinv_min_norm != 4) fail("coinvariant minimum |norm| != 4");

  rep.h2 = rep.det_inv;
  rep.glue_order = info.glue_order;
  Lattice base = direct_sum(lattice_rank1(rep.h2), coinv_lat);
  DiscriminantForm df_base = discriminant_form(base);
  FQF f_base = df_base.fqf();
  rep.glue_group_orders = f_base.orders();

  NSTarget target = ns_target(info.p);
  auto cands = isotropic_elements(f_base, rep.glue_order);
  rep.glue_candidates = cands.size();
  for (const auto& cand : cands) {
    Overlattice s = overlattice_from_glue(base, GlueSpec{lift_of_element(df_base, cand)});
    if (s.index != rep.glue_order) continue;  // subgroup degenerated, cannot happen
    Int det_s = s.lattice.determinant();
    Signature sig = s.lattice.signature();
    FQF q_s = discriminant_form(s.lattice).fqf();
    bool match = s.lattice.rank() == 22 && det_s == -Int(info.p) * Int(info.p) &&
                 sig == Signature{1, 21, 0} && isomorphic(q_s, target.fqf).found();
    if (!match) continue;
    ++rep.glue_valid;
    if (rep.glue_element.empty()) {
      rep.glue_element = cand;
      rep.det_s = det_s;
      rep.sig_s = sig;
      rep.q_s = std::move(q_s);
      rep.target_match = true;
      rep.l_s = l_invariant(s.lattice);
    }
  }
  if (rep.glue_element.empty()) {
    fail("no isotropic glue of the required order yields the target NS lattice");
  } else if (rep.det_s * Int(rep.glue_order) * Int(rep.glue_order) !=
             -Int(rep.h2) * det_coinv_abs) {
    fail("determinant law |det S| * order^2 = h^2 * |det N_G| violated");
  }

  rep.l_coinv = l_invariant(coinv_lat);
  if (rep.l_coinv != 1) fail("discriminant group of coinvariant lattice is not cyclic");

  rep.nikulin_ok = rep.target_match && rep.l_s + 2 <= 22 && rep.sig_s.pos >= 1 && rep.sig_s.neg >= 1;
  if (!rep.nikulin_ok) fail("uniqueness-in-genus hypotheses (rank >= l+2, indefinite) not met");

  rep.passed = rep.failures.empty();
  return rep;
}

CaseReport run_case(CaseId id) {
  GolayCode code = GolayCode::build();
  NiemeierA1 n = build_niemeier(code);
  return run_case(id, code, n);
}

namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FORGE_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 6u);
}

}  // namespace

std::vector<CaseReport> run_all_cases(unsigned workers) {
  GolayCode code = GolayCode::build();
  NiemeierA1 n = build_niemeier(code);
  unsigned w = resolve_workers(workers);
  std::counting_semaphore<64> slots(w);
  std::vector<std::future<CaseReport>> futures;
  for (const auto& info : case_table()) {
    futures.push_back(std::async(std::launch::async, [&code, &n, &slots, id = info.id] {
      slots.acquire();
      CaseReport r = run_case(id, code, n);
      slots.release();
      return r;
    }));
  }
  std::vector<CaseReport> reports;
  reports.reserve(futures.size());
  for (auto& f : futures) reports.push_back(f.get());  // fixed table order
  return reports;
}

namespace {

std::string fqf_text(const FQF& f) { return f.is_trivial() ? "trivial" : f.to_string(); }

}  // namespace

std::string case_report_text(const CaseReport& r) {
  std::ostringstream os;
  os << "case " << r.case_name << "\n";
  os << "  |det N^G|        " << r.det_inv.get_str() << "\n";
  os << "  q_{N^G}          " << fqf_text(r.q_inv) << "\n";
  os << "  q_{N_G}          " << fqf_text(r.q_coinv) << "\n";
  os << "  q negation       " << (r.forms_negate ? "ok" : "FAIL") << "\n";
  os << "  root free        " << (r.root_free ? "yes" : "NO") << ", min |norm| "
     << r.coinv_min_norm.get_str() << "\n";
  os << "  h^2              " << r.h2.get_str() << "\n";
  os << "  glue             order " << r.glue_order.get_str() << ", element (";
  for (std::size_t i = 0; i < r.glue_element.size(); ++i) {
    if (i) os << ",";
    os << r.glue_element[i].get_str();
  }
  os << ") of Z/";
  for (std::size_t i = 0; i < r.glue_group_orders.size(); ++i) {
    if (i) os << " + Z/";
    os << r.glue_group_orders[i].get_str();
  }
  os << ", " << r.glue_valid << "/" << r.glue_candidates << " candidates valid\n";
  os << "  det S            " << r.det_s.get_str() << ", signature (" << r.sig_s.pos << ","
     << r.sig_s.neg << ")\n";
  os << "  q_S              " << fqf_text(r.q_s) << "\n";
  os << "  target           p=" << r.target_p << " " << (r.target_match ? "matched" : "NOT matched")
     << "\n";
  os << "  l(N_G)           " << r.l_coinv << ", l(A_S) " << r.l_s << ", uniqueness hypotheses "
     << (r.nikulin_ok ? "ok" : "FAIL") << "\n";
  os << "  status           " << (r.passed ? "pass" : "FAIL") << "\n";
  for (const auto& f : r.failures) os << "    ! " << f << "\n";
  return os.str();
}

}  // namespace forge
