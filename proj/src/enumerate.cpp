#include "forge/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace forge {

namespace {

// floor(q + 1/2), the nearest integer (half rounds up)
Int round_nearest(const Rat& q) {
  Rat s = q + Rat(1, 2);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
  return fl;
}

Int floor_rat(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return fl;
}

Int ceil_rat(const Rat& q) {
  Int cl;
  mpz_cdiv_q(cl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return cl;
}

struct Gso {
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
  std::vector<Rat> norms;            // |b_i*|^2
  bool positive_definite;
};

Gso gram_schmidt(const IntMatrix& g) {
  const std::size_t n = g.rows();
  Gso out;
  out.positive_definite = true;
  out.mu.assign(n, {});
  out.norms.assign(n, Rat(0));
  std::vector<std::vector<Rat>> c(n);  // c[i][j] = <b_i, b*_j>
  for (std::size_t i = 0; i < n; ++i) {
    out.mu[i].assign(i, Rat(0));
    c[i].assign(i, Rat(0));
    for (std::size_t j = 0; j < i; ++j) {
      Rat v = Rat(g(i, j));
      for (std::size_t t = 0; t < j; ++t) v -= out.mu[j][t] * c[i][t];
      c[i][j] = v;
      out.mu[i][j] = v / out.norms[j];
    }
    Rat norm = Rat(g(i, i));
    for (std::size_t t = 0; t < i; ++t) norm -= out.mu[i][t] * c[i][t];
    out.norms[i] = norm;
    if (norm <= 0) {
      out.positive_definite = false;
      return out;
    }
  }
  return out;
}

enum class Definiteness { Positive, Negative };

Definiteness check_definite(const Lattice& l) {
  if (l.rank() == 0) throw std::invalid_argument("definite lattice required, got rank 0");
  Signature s = l.signature();
  if (s.zero == 0 && s.neg == 0) return Definiteness::Positive;
  if (s.zero == 0 && s.pos == 0) return Definiteness::Negative;
  throw std::invalid_argument("definite lattice required");
}

// LLL with delta = 99/100 on a positive definite Gram matrix.
void lll_positive(IntMatrix& g, IntMatrix& t) {
  const std::size_t n = g.rows();
  if (n < 2) return;
  const Rat delta(99, 100);
  Gso gso = gram_schmidt(g);
  if (!gso.positive_definite) throw std::invalid_argument("lll: matrix not positive definite");
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj > 0; --jj) {
      std::size_t j = jj - 1;
      Int r = round_nearest(gso.mu[k][j]);
      if (r == 0) continue;
      // b_k -= r * b_j, mirrored on the Gram matrix and the mu row of k
      g.add_row_multiple(k, j, -r);
      g.add_col_multiple(k, j, -r);
      t.add_row_multiple(k, j, -r);
      Rat rr(r);
      for (std::size_t i = 0; i < j; ++i) gso.mu[k][i] -= rr * gso.mu[j][i];
      gso.mu[k][j] -= rr;
    }
    Rat lhs = gso.norms[k];
    Rat rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.norms[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      g.swap_rows(k, k - 1);
      g.swap_cols(k, k - 1);
      t.swap_rows(k, k - 1);
      gso = gram_schmidt(g);
      k = k > 1 ? k - 1 : 1;
    }
  }
}

// Fincke-Pohst quadratic completion: Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.
std::vector<std::vector<Rat>> fp_decompose(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rat(g(i, j));
  std::vector<Rat> save(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) save[k] = q[i][k];
    for (std::size_t j = i + 1; j < n; ++j) q[i][j] /= q[i][i];
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= save[k] * q[i][l];
  }
  return q;
}

struct FpSearch {
  const std::vector<std::vector<Rat>>& q;
  Rat bound;
  std::size_t n;
  std::vector<Int> x;
  // exact = true: collect only Q(x) == bound; false: all 0 < Q(x) <= bound
  bool exact;
  std::vector<std::pair<std::vector<Int>, Rat>> found;

  // enumerate level i given remaining budget and the shifts from upper levels
  void run(std::size_t level, const Rat& remaining, const std::vector<Rat>& shifts,
           bool all_zero_above) {
    const Rat& qii = q[level][level];
    const Rat& u = shifts[level];
    // integer candidates x with qii*(x+u)^2 <= remaining
    Rat radius2 = remaining / qii;
    // |x + u| <= sqrt(radius2): bound the integer window exactly
    Int r_up;  // integer >= sqrt(radius2)
    {
      Int num_ceil = ceil_rat(radius2);
      mpz_sqrt(r_up.get_mpz_t(), num_ceil.get_mpz_t());
      r_up += 1;
    }
    Int lo = ceil_rat(-u) - r_up - 1;
    Int hi = floor_rat(-u) + r_up + 1;
    std::vector<Int> candidates;
    for (Int v = lo; v <= hi; ++v) {
      if (all_zero_above && v < 0) continue;
      Rat d = Rat(v) + u;
      if (qii * d * d <= remaining) candidates.push_back(v);
    }
    // fixed traversal order: increasing absolute value, positive first
    std::sort(candidates.begin(), candidates.end(), [](const Int& a, const Int& b) {
      Int aa = a < 0 ? Int(-a) : a, ab = b < 0 ? Int(-b) : b;
      if (aa != ab) return aa < ab;
      return a > b;
    });
    for (const Int& v : candidates) {
      Rat d = Rat(v) + u;
      Rat used = q[level][level] * d * d;
      Rat rem = remaining - used;
      x[level] = v;
      if (level == 0) {
        Rat total = bound - rem;
        if (total > 0 && (!exact || rem == 0)) found.emplace_back(x, total);
      } else {
        std::vector<Rat> next = shifts;
        for (std::size_t j = 0; j < level; ++j) next[j] += q[j][level] * Rat(v);
        run(level - 1, rem, next, all_zero_above && v == 0);
      }
    }
  }
};

std::vector<std::pair<std::vector<Int>, Rat>> fp_enumerate(const IntMatrix& g, const Rat& bound,
                                                           bool exact) {
  const std::size_t n = g.rows();
  auto q = fp_decompose(g);
  FpSearch search{q, bound, n, std::vector<Int>(n), exact, {}};
  std::vector<Rat> shifts(n, Rat(0));
  search.run(n - 1, bound, shifts, true);
  return search.found;
}

std::vector<Int> to_original(const std::vector<Int>& x, const IntMatrix& transform) {
  const std::size_t n = transform.cols();
  std::vector<Int> v(n, Int(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) v[j] += x[i] * transform(i, j);
  }
  // canonical sign: first nonzero coordinate positive
  for (const auto& c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& w : v) w = -w;
    break;
  }
  return v;
}

}  // namespace

ReducedBasis lll_reduce(const Lattice& l) {
  Definiteness d = check_definite(l);
  IntMatrix g = d == Definiteness::Negative ? l.gram().negated() : l.gram();
  IntMatrix t = IntMatrix::identity(l.rank());
  lll_positive(g, t);
  if (d == Definiteness::Negative) g = g.negated();
  return {std::move(g), std::move(t)};
}

ShortVectorReport vectors_with_norm(const Lattice& l, const Int& n) {
  if (n == 0) throw std::invalid_argument("vectors_with_norm: need n != 0");
  ShortVectorReport report;
  report.requested_norm = n;
  if (l.rank() == 0) return report;
  Definiteness d = check_definite(l);
  if ((d == Definiteness::Positive && n < 0) || (d == Definiteness::Negative && n > 0)) {
    report.sign_mismatch = true;
    return report;
  }
  ReducedBasis rb = lll_reduce(l);
  IntMatrix g = d == Definiteness::Negative ? rb.gram.negated() : rb.gram;
  Int target = n < 0 ? Int(-n) : n;
  auto hits = fp_enumerate(g, Rat(target), /*exact=*/true);
  for (auto& [x, norm] : hits) report.vectors.push_back(to_original(x, rb.transform));
  std::sort(report.vectors.begin(), report.vectors.end());
  return report;
}

Int min_norm(const Lattice& l) {
  if (l.rank() == 0) throw std::invalid_argument("min_norm: rank 0 lattice");
  Definiteness d = check_definite(l);
  ReducedBasis rb = lll_reduce(l);
  IntMatrix g = d == Definiteness::Negative ? rb.gram.negated() : rb.gram;
  Int bound = g(0, 0);
  for (std::size_t i = 1; i < g.rows(); ++i) bound = std::min(bound, Int(g(i, i)));
  auto hits = fp_enumerate(g, Rat(bound), /*exact=*/false);
  Int best = bound;  // the diagonal norm is attained by a basis vector
  for (auto& [x, norm] : hits) {
    Int nv = norm.get_num();  // norms of lattice vectors are integers
    if (nv < best) best = nv;
  }
  return best;
}

}  // namespace forge
