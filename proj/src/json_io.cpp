#include "forge/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace forge {

namespace {

nlohmann::ordered_json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace

nlohmann::ordered_json lattice_to_json(const Lattice& l) {
  nlohmann::ordered_json j;
  j["rank"] = l.rank();
  nlohmann::ordered_json gram = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t k = 0; k < l.rank(); ++k) gram.push_back(int_to_json(l.gram()(i, k)));
  j["gram"] = std::move(gram);
  return j;
}

Lattice lattice_from_json(const nlohmann::json& j) {
  if (!j.contains("rank") || !j.contains("gram"))
    throw std::invalid_argument("lattice record needs 'rank' and 'gram'");
  std::size_t n = j.at("rank").get<std::size_t>();
  const auto& gram = j.at("gram");
  if (!gram.is_array() || gram.size() != n * n)
    throw std::invalid_argument("lattice record: gram must hold rank*rank entries");
  IntMatrix g(n, n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) g(i, k) = int_from_json(gram.at(idx++));
  return Lattice(std::move(g));
}

void save_lattice(const std::string& path, const Lattice& l) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << lattice_to_json(l).dump(2) << "\n";
}

Lattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  return lattice_from_json(j);
}

nlohmann::ordered_json fqf_to_json(const FQF& f) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json orders = nlohmann::ordered_json::array();
  for (const auto& d : f.orders()) orders.push_back(int_to_json(d));
  j["orders"] = std::move(orders);
  nlohmann::ordered_json q = nlohmann::ordered_json::array();
  for (const auto& v : f.q_diag()) q.push_back(rat_str(v));
  j["q"] = std::move(q);
  nlohmann::ordered_json b = nlohmann::ordered_json::array();
  bool any = false;
  for (std::size_t i = 0; i < f.generator_count(); ++i)
    for (std::size_t k = i + 1; k < f.generator_count(); ++k)
      if (f.pairings()(i, k) != 0) {
        b.push_back({i, k, rat_str(f.pairings()(i, k))});
        any = true;
      }
  if (any) j["b"] = std::move(b);
  return j;
}

nlohmann::ordered_json case_report_to_json(const CaseReport& r) {
  nlohmann::ordered_json j;
  j["case"] = r.case_name;
  j["detNG"] = int_to_json(r.det_inv);
  j["qNG"] = fqf_to_json(r.q_inv);
  j["qN_G"] = fqf_to_json(r.q_coinv);
  j["rootFree"] = r.root_free;
  j["minNorm"] = int_to_json(r.coinv_min_norm);
  j["h2"] = int_to_json(r.h2);
  j["glueOrder"] = int_to_json(r.glue_order);
  nlohmann::ordered_json elem = nlohmann::ordered_json::array();
  for (const auto& c : r.glue_element) elem.push_back(int_to_json(c));
  j["glueElement"] = std::move(elem);
  nlohmann::ordered_json gorders = nlohmann::ordered_json::array();
  for (const auto& c : r.glue_group_orders) gorders.push_back(int_to_json(c));
  j["glueGroupOrders"] = std::move(gorders);
  j["glueCandidates"] = r.glue_candidates;
  j["glueValid"] = r.glue_valid;
  j["detS"] = int_to_json(r.det_s);
  j["signatureS"] = {r.sig_s.pos, r.sig_s.neg};
  j["qS"] = fqf_to_json(r.q_s);
  j["target_p"] = r.target_p;
  j["targetMatch"] = r.target_match;
  j["lNG"] = r.l_coinv;
  j["lS"] = r.l_s;
  j["nikulinOK"] = r.nikulin_ok;
  j["status"] = r.passed ? "pass" : "fail";
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

}  // namespace forge
