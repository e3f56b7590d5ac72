#include "forge/lattice.hpp"

#include <set>
#include <stdexcept>

namespace forge {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: Gram matrix not symmetric");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

namespace {

Lattice from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return Lattice(std::move(g));
}

}  // namespace

Lattice root_lattice_A(std::size_t m) {
  if (m < 1) throw std::invalid_argument("root_lattice_A: need m >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return from_edges(m, edges);
}

Lattice root_lattice_D(std::size_t n) {
  if (n < 4) throw std::invalid_argument("root_lattice_D: need n >= 4");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 3, n - 1);
  return from_edges(n, edges);
}

Lattice root_lattice_E(std::size_t l) {
  if (l < 6 || l > 8) throw std::invalid_argument("root_lattice_E: need l in {6,7,8}");
  // chain 0-2-3-4-..., node 1 attached to node 3
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 2}, {1, 3}};
  for (std::size_t i = 2; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
  return from_edges(l, edges);
}

Lattice lattice_U() {
  return Lattice(IntMatrix::from_rows({{0, 1}, {1, 0}}));
}

Lattice lattice_rank1(const Int& k) {
  if (k % 2 != 0) throw std::invalid_argument("lattice_rank1: k must be even");
  IntMatrix g(1, 1);
  g(0, 0) = k;
  return Lattice(std::move(g));
}

Lattice lattice_A1_24() {
  IntMatrix g(24, 24);
  for (std::size_t i = 0; i < 24; ++i) g(i, i) = -2;
  return Lattice(std::move(g));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  IntMatrix g(ra + rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) g(ra + i, ra + j) = b.gram()(i, j);
  return Lattice(std::move(g));
}

Sublattice::Sublattice(Lattice ambient, IntMatrix basis) : ambient_(std::move(ambient)) {
  if (basis.cols() != ambient_.rank())
    throw std::invalid_argument("Sublattice: basis width != ambient rank");
  IntMatrix h = hnf(basis).H;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) throw std::invalid_argument("Sublattice: basis rows not linearly independent");
  }
  basis_ = std::move(h);
}

IntMatrix Sublattice::induced_gram() const {
  return basis_ * ambient_.gram() * basis_.transposed();
}

Sublattice orthogonal_complement(const Sublattice& t) {
  if (!t.ambient().is_nondegenerate())
    throw std::invalid_argument("orthogonal_complement: degenerate ambient");
  // {v : v * (G * B^T) = 0}; kernel_int returns a saturated basis.
  IntMatrix k = kernel_int(t.ambient().gram() * t.basis().transposed());
  return Sublattice(t.ambient(), std::move(k));
}

Sublattice saturation(const Sublattice& t) {
  // sat(B) = Z-annihilator of the Z-annihilator of the rows of B.
  IntMatrix right_kernel = kernel_int(t.basis().transposed());
  IntMatrix sat = kernel_int(right_kernel.transposed());
  return Sublattice(t.ambient(), std::move(sat));
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("intersect: ambient mismatch");
  const std::size_t ra = a.rank();
  IntMatrix stacked = stack_rows(a.basis(), b.basis());
  IntMatrix k = kernel_int(stacked);
  // rows (x | -y) with x*Ba = y*Bb; the intersection is spanned by x*Ba
  IntMatrix x(k.rows(), ra);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < ra; ++j) x(i, j) = k(i, j);
  // x -> x*Ba is injective on the kernel rows, so these rows are independent.
  IntMatrix inter = x * a.basis();
  return Sublattice(a.ambient(), std::move(inter));
}

FQF DiscriminantForm::fqf() const { return FQF(orders, q_diag, pairings); }

Int DiscriminantForm::group_order() const {
  Int n = 1;
  for (const auto& d : orders) n *= d;
  return n;
}

DiscriminantForm discriminant_form(const Lattice& l) {
  if (!l.is_nondegenerate()) throw std::invalid_argument("discriminant_form: degenerate lattice");
  if (!l.is_even()) throw std::invalid_argument("discriminant_form: odd lattice");
  const std::size_t n = l.rank();
  SmithForm sf = snf(l.gram());
  // U*G*V = D. The class of e_i * V^{-1} generates the Z/d_i factor of
  // Z^n / Z^n*G, and its lift in L* is row_i(U) / d_i.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (sf.D(i, i) > 1) keep.push_back(i);
  DiscriminantForm df;
  df.lifts = RatMatrix(keep.size(), n);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    std::size_t i = keep[a];
    df.orders.push_back(sf.D(i, i));
    for (std::size_t j = 0; j < n; ++j) df.lifts(a, j) = make_rat(sf.U(i, j), sf.D(i, i));
  }
  RatMatrix gr = RatMatrix::from_int(l.gram());
  RatMatrix vals = df.lifts * gr * df.lifts.transposed();
  df.q_diag.resize(keep.size());
  df.pairings = RatMatrix(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    df.q_diag[a] = mod_2z(vals(a, a));
    for (std::size_t b = 0; b < keep.size(); ++b) df.pairings(a, b) = mod_1z(vals(a, b));
  }
  return df;
}

std::size_t l_invariant(const Lattice& l) {
  if (!l.is_nondegenerate()) throw std::invalid_argument("l_invariant: degenerate lattice");
  SmithForm sf = snf(l.gram());
  std::size_t count = 0;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (sf.D(i, i) > 1) ++count;
  return count;
}

namespace {

// Canonical coset representative of x + Z^n: every coordinate in [0,1).
std::vector<Rat> coset_rep(const std::vector<Rat>& x) {
  std::vector<Rat> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_1z(x[i]);
  return r;
}

std::vector<Rat> coset_add(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  std::vector<Rat> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_1z(x[i] + y[i]);
  return r;
}

}  // namespace

Overlattice overlattice_from_glue(const Lattice& l, const GlueSpec& glue) {
  const std::size_t n = l.rank();
  if (glue.generators.cols() != n)
    throw std::invalid_argument("overlattice_from_glue: generator width != rank");
  RatMatrix gr = RatMatrix::from_int(l.gram());
  // lifts must land in L*: row * G integral
  RatMatrix dualcheck = glue.generators * gr;
  if (!dualcheck.is_integral())
    throw std::domain_error("overlattice_from_glue: generator not in the dual lattice");

  // Close the glue subgroup of A_L = (Q^n mod Z^n restricted to L*/L).
  std::set<std::vector<Rat>> subgroup;
  std::vector<std::vector<Rat>> queue;
  std::vector<std::vector<Rat>> gens;
  for (std::size_t i = 0; i < glue.generators.rows(); ++i)
    gens.push_back(coset_rep(glue.generators.row(i)));
  std::vector<Rat> zero(n, Rat(0));
  subgroup.insert(zero);
  queue.push_back(zero);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      auto nxt = coset_add(queue[head], g);
      if (subgroup.insert(nxt).second) queue.push_back(nxt);
    }
  }
  // Total isotropy of the subgroup, q = 0 mod 2Z and b = 0 mod Z.
  for (const auto& x : queue) {
    RatMatrix xr(1, n);
    for (std::size_t j = 0; j < n; ++j) xr(0, j) = x[j];
    Rat qx = (xr * gr * xr.transposed())(0, 0);
    if (mod_2z(qx) != 0) throw std::domain_error("overlattice_from_glue: glue subgroup not isotropic (q != 0)");
    for (const auto& y : queue) {
      RatMatrix yr(1, n);
      for (std::size_t j = 0; j < n; ++j) yr(0, j) = y[j];
      Rat bxy = (xr * gr * yr.transposed())(0, 0);
      if (mod_1z(bxy) != 0)
        throw std::domain_error("overlattice_from_glue: glue subgroup not isotropic (b != 0)");
    }
  }
  Int order(queue.size());

  // New lattice = L + glue span: HNF over a common denominator.
  RatMatrix stacked_rat(n + gens.size(), n);
  for (std::size_t i = 0; i < n; ++i) stacked_rat(i, i) = 1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked_rat(n + i, j) = gens[i][j];
  Int den = stacked_rat.common_denominator();
  IntMatrix scaled(n + gens.size(), n);
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = stacked_rat(i, j) * Rat(den);
      scaled(i, j) = v.get_num();
    }
  IntMatrix h = hnf(scaled).H;
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = make_rat(h(i, j), den);

  RatMatrix new_gram_rat = basis * gr * basis.transposed();
  if (!new_gram_rat.is_integral())
    throw std::domain_error("overlattice_from_glue: resulting form is not integral");
  Lattice result(new_gram_rat.to_int());
  if (!result.is_even())
    throw std::domain_error("overlattice_from_glue: resulting lattice is not even");

  // |det L'| * order^2 = |det L|, exact.
  Int det_l = l.determinant();
  Int det_new = result.determinant();
  if (det_new * order * order != det_l)
    throw std::logic_error("overlattice_from_glue: determinant law violated");
  return {std::move(result), std::move(basis), std::move(order)};
}

}  // namespace forge
