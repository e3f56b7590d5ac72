#include "forge/fqf.hpp"

#include <sstream>
#include <stdexcept>

namespace forge {

FQF::FQF(std::vector<Int> orders, std::vector<Rat> q_diag, RatMatrix pairings)
    : orders_(std::move(orders)), q_(std::move(q_diag)), b_(std::move(pairings)) {
  const std::size_t k = orders_.size();
  if (q_.size() != k || b_.rows() != k || b_.cols() != k)
    throw std::invalid_argument("FQF: inconsistent sizes");
  for (std::size_t i = 0; i < k; ++i) {
    if (orders_[i] < 2) throw std::invalid_argument("FQF: generator order must be > 1");
    q_[i] = mod_2z(q_[i]);
    // d^2 * q(g) must vanish mod 2Z, else q does not extend to Z/d.
    if (mod_2z(Rat(orders_[i] * orders_[i]) * q_[i]) != 0)
      throw std::invalid_argument("FQF: q value incompatible with generator order");
    b_(i, i) = mod_1z(q_[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) b_(i, j) = mod_1z(b_(i, j));
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (b_(i, j) != b_(j, i)) throw std::invalid_argument("FQF: pairings not symmetric");
      if (mod_1z(Rat(orders_[i]) * b_(i, j)) != 0 || mod_1z(Rat(orders_[j]) * b_(i, j)) != 0)
        throw std::invalid_argument("FQF: pairing incompatible with generator orders");
    }
}

FQF FQF::diagonal(std::vector<Int> orders, std::vector<Rat> q_diag) {
  RatMatrix b(orders.size(), orders.size());
  return FQF(std::move(orders), std::move(q_diag), std::move(b));
}

Int FQF::group_order() const {
  Int n = 1;
  for (const auto& d : orders_) n *= d;
  return n;
}

FQFElement FQF::reduce(FQFElement x) const {
  if (x.size() != orders_.size()) throw std::invalid_argument("FQF element: wrong length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), orders_[i].get_mpz_t());
  }
  return x;
}

FQFElement FQF::add(const FQFElement& x, const FQFElement& y) const {
  FQFElement z(orders_.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] + y[i];
  return reduce(std::move(z));
}

FQFElement FQF::scale(const Int& n, const FQFElement& x) const {
  FQFElement z(orders_.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = n * x[i];
  return reduce(std::move(z));
}

Int FQF::element_order(const FQFElement& x) const {
  Int ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x[i].get_mpz_t(), orders_[i].get_mpz_t());
    Int o = orders_[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
  }
  return ord;
}

Rat FQF::eval_q(const FQFElement& x) const {
  Rat s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    s += Rat(x[i] * x[i]) * q_[i];
    for (std::size_t j = i + 1; j < orders_.size(); ++j)
      if (x[j] != 0) s += 2 * Rat(x[i] * x[j]) * b_(i, j);
  }
  return mod_2z(s);
}

Rat FQF::eval_b(const FQFElement& x, const FQFElement& y) const {
  Rat s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    for (std::size_t j = 0; j < orders_.size(); ++j)
      if (x[i] != 0 && y[j] != 0) s += Rat(x[i] * y[j]) * b_(i, j);
  return mod_1z(s);
}

std::vector<FQFElement> FQF::all_elements() const {
  std::vector<FQFElement> out;
  Int total = group_order();
  if (total > 2000000) throw std::domain_error("FQF: group too large to enumerate");
  out.reserve(total.get_ui());
  FQFElement x = zero_element();
  while (true) {
    out.push_back(x);
    // lexicographic increment, last coordinate fastest
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      x[i] += 1;
      if (x[i] < orders_[i]) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (x.size() == 0) return out;
  }
}

std::string FQF::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << " (+) ";
    os << "Z/" << orders_[i].get_str() << ": q=" << q_[i].get_str();
  }
  os << ']';
  bool cross = false;
  for (std::size_t i = 0; i < orders_.size() && !cross; ++i)
    for (std::size_t j = i + 1; j < orders_.size(); ++j)
      if (b_(i, j) != 0) {
        cross = true;
        break;
      }
  if (cross) {
    os << " b={";
    for (std::size_t i = 0; i < orders_.size(); ++i)
      for (std::size_t j = i + 1; j < orders_.size(); ++j)
        if (b_(i, j) != 0) os << " (" << i << ',' << j << ")=" << b_(i, j).get_str();
    os << " }";
  }
  return os.str();
}

FQF direct_sum(const FQF& a, const FQF& b) {
  std::vector<Int> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<Rat> q = a.q_diag();
  q.insert(q.end(), b.q_diag().begin(), b.q_diag().end());
  const std::size_t ka = a.generator_count(), k = orders.size();
  RatMatrix pair(k, k);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j) pair(i, j) = a.pairings()(i, j);
  for (std::size_t i = ka; i < k; ++i)
    for (std::size_t j = ka; j < k; ++j) pair(i, j) = b.pairings()(i - ka, j - ka);
  return FQF(std::move(orders), std::move(q), std::move(pair));
}

FQF negate(const FQF& f) {
  const std::size_t k = f.generator_count();
  std::vector<Rat> q(k);
  RatMatrix pair(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    q[i] = mod_2z(-f.q_diag()[i]);
    for (std::size_t j = 0; j < k; ++j) pair(i, j) = mod_1z(-f.pairings()(i, j));
  }
  return FQF(f.orders(), std::move(q), std::move(pair));
}

std::vector<FQFElement> isotropic_elements(const FQF& f, const Int& order) {
  std::vector<FQFElement> out;
  for (const auto& x : f.all_elements()) {
    if (f.element_order(x) != order) continue;
    if (f.eval_q(x) != 0) continue;
    out.push_back(x);
  }
  return out;
}

namespace {

struct IsoSearch {
  const FQF& a;
  const FQF& b;
  const std::vector<FQFElement>& b_elems;
  std::uint64_t budget;
  std::uint64_t used = 0;
  bool exhausted_cleanly = true;
  std::vector<FQFElement> chosen;

  bool dfs(std::size_t i) {
    if (i == a.generator_count()) return generates_all();
    const Int& d = a.orders()[i];
    const Rat& qi = a.q_diag()[i];
    for (const auto& cand : b_elems) {
      if (used >= budget) {
        exhausted_cleanly = false;
        return false;
      }
      ++used;
      if (b.element_order(cand) != d) continue;
      if (b.eval_q(cand) != qi) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (b.eval_b(chosen[j], cand) != mod_1z(a.pairings()(j, i))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(cand);
      if (dfs(i + 1)) return true;
      if (!exhausted_cleanly) return false;
      chosen.pop_back();
    }
    return false;
  }

  // The candidate map is a homomorphism preserving q by construction
  // (orders divide, q and b match on generators); it is an isomorphism
  // exactly when the images generate all of b.
  bool generates_all() const {
    const Int total = b.group_order();
    auto encode = [&](const FQFElement& x) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        idx = idx * b.orders()[i].get_ui() + x[i].get_ui();
      return idx;
    };
    std::vector<char> seen(total.get_ui(), 0);
    std::vector<FQFElement> queue{b.zero_element()};
    seen[0] = 1;
    std::size_t count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      FQFElement cur = queue[head];
      for (const auto& g : chosen) {
        FQFElement nxt = b.add(cur, g);
        std::uint64_t idx = encode(nxt);
        if (!seen[idx]) {
          seen[idx] = 1;
          ++count;
          queue.push_back(std::move(nxt));
        }
      }
    }
    return Int(count) == total;
  }
};

}  // namespace

IsoResult isomorphic(const FQF& a, const FQF& b, std::uint64_t budget) {
  if (a.group_order() != b.group_order()) return {IsoStatus::None, {}};
  if (a.is_trivial()) return {IsoStatus::Found, {}};
  auto b_elems = b.all_elements();
  IsoSearch search{a, b, b_elems, budget, 0, true, {}};
  if (search.dfs(0)) return {IsoStatus::Found, std::move(search.chosen)};
  return {search.exhausted_cleanly ? IsoStatus::None : IsoStatus::Undecided, {}};
}

}  // namespace forge
