#include "jacdecomp/qalgebra.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "jacdecomp/error.hpp"
#include "jacdecomp/poly.hpp"

namespace jacdecomp {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// g * v for v a dense vector of Q[G].
RationalVector left_mul(const FiniteGroup& G, ElementIndex g, const RationalVector& v) {
  RationalVector out(v.size());
  for (ElementIndex x = 0; x < v.size(); ++x) {
    if (sgn(v[x]) != 0) out[G.mul(g, x)] = v[x];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::one(const GroupPtr& g) {
  return element(g, FiniteGroup::identity());
}

GroupAlgebraElement GroupAlgebraElement::element(const GroupPtr& g, ElementIndex x) {
  GroupAlgebraElement a(g);
  a.c_[x] = 1;
  return a;
}

GroupAlgebraElement GroupAlgebraElement::group_sum(const GroupPtr& g) {
  GroupAlgebraElement a(g);
  for (ElementIndex x = 0; x < g->order(); ++x) a.c_[x] = 1;
  return a;
}

GroupAlgebraElement GroupAlgebraElement::subgroup_average(const GroupPtr& g, const Subgroup& h) {
  GroupAlgebraElement a(g);
  Rational w = ratio(1, static_cast<long>(h.order()));
  for (auto x : h.elements()) a.c_[x] = w;
  return a;
}

GroupAlgebraElement GroupAlgebraElement::from_dense(const GroupPtr& g, const RationalVector& v) {
  if (v.size() != g->order()) throw UsageError("dense vector length differs from |G|");
  GroupAlgebraElement a(g);
  for (ElementIndex x = 0; x < v.size(); ++x) {
    if (sgn(v[x]) != 0) a.c_[x] = v[x];
  }
  return a;
}

Rational GroupAlgebraElement::coeff(ElementIndex x) const {
  auto it = c_.find(x);
  return it == c_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::set(ElementIndex x, const Rational& q) {
  if (!group_ || x >= group_->order()) throw UsageError("group element index out of range");
  if (sgn(q) == 0) {
    c_.erase(x);
  } else {
    c_[x] = q;
  }
}

RationalVector GroupAlgebraElement::dense() const {
  RationalVector v(group_->order());
  for (const auto& [x, q] : c_) v[x] = q;
  return v;
}

void GroupAlgebraElement::check_same_group(const GroupAlgebraElement& b) const {
  if (group_ != b.group_) throw UsageError("group algebra elements of different groups");
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& b) const {
  check_same_group(b);
  GroupAlgebraElement r = *this;
  for (const auto& [x, q] : b.c_) r.set(x, r.coeff(x) + q);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& b) const {
  return *this + b.scaled(-1);
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& b) const {
  check_same_group(b);
  const auto& G = *group_;
  RationalVector acc(G.order());
  for (const auto& [x, p] : c_) {
    for (const auto& [y, q] : b.c_) acc[G.mul(x, y)] += p * q;
  }
  return from_dense(group_, acc);
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& q) const {
  GroupAlgebraElement r(group_);
  if (sgn(q) == 0) return r;
  for (const auto& [x, p] : c_) r.c_[x] = p * q;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
  GroupAlgebraElement r(group_);
  for (const auto& [x, p] : c_) r.c_[group_->inv(x)] = p;
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& b) const {
  return group_ == b.group_ && c_ == b.c_;
}

std::string GroupAlgebraElement::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [x, q] : c_) {
    if (!first) os << ", ";
    first = false;
    os << x << ": \"" << q.get_str() << '"';
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Central idempotents

CentralIdempotentSystem central_idempotents(const CharacterTable& table,
                                            const std::vector<RationalCharacter>& orbits) {
  const auto& G = *table.group;
  const auto& classes = G.conjugacy_classes();
  CentralIdempotentSystem sys;
  sys.group = table.group;
  for (const auto& rc : orbits) {
    const auto& row = table.rows[rc.representative()];
    const Rational scale = ratio(table.degrees[rc.representative()], static_cast<long>(G.order()));
    GroupAlgebraElement e(table.group);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      Rational tr = trace_over(row[k], row);
      if (tr != rc.summed[k]) throw InvariantError("trace over the character field mismatch");
      for (auto x : classes[k].elements) e.set(x, scale * tr);
    }
    sys.items.push_back({rc, std::move(e)});
  }
  verify_central_system(sys);
  return sys;
}

void verify_central_system(const CentralIdempotentSystem& sys) {
  const auto one = GroupAlgebraElement::one(sys.group);
  GroupAlgebraElement total(sys.group);
  for (std::size_t i = 0; i < sys.items.size(); ++i) {
    const auto& ei = sys.items[i].e;
    if (!(ei * ei == ei)) throw InvariantError("central idempotent is not idempotent");
    for (auto g : sys.group->generator_indices()) {
      auto x = GroupAlgebraElement::element(sys.group, g);
      if (!(x * ei == ei * x)) throw InvariantError("idempotent is not central");
    }
    for (std::size_t j = i + 1; j < sys.items.size(); ++j) {
      if (!(ei * sys.items[j].e).is_zero()) {
        throw InvariantError("central idempotents are not orthogonal");
      }
    }
    total = total + ei;
  }
  if (!(total == one)) throw InvariantError("central idempotents do not sum to 1");
}

// ---------------------------------------------------------------------------
// Modules

RationalModule left_ideal_module(const GroupPtr& group, const std::vector<RationalVector>& seeds) {
  const auto& G = *group;
  RationalSpan span(G.order());
  std::deque<RationalVector> queue;
  for (const auto& v : seeds) {
    if (span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    RationalVector v = std::move(queue.front());
    queue.pop_front();
    for (auto g : G.generator_indices()) {
      RationalVector w = left_mul(G, g, v);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  RationalModule m;
  m.group = group;
  m.dim = span.rank();
  m.basis = span.basis();
  for (auto g : G.generator_indices()) {
    RatMatrix a(m.dim, m.dim);
    for (std::size_t j = 0; j < m.dim; ++j) {
      RationalVector c = span.coordinates(left_mul(G, g, m.basis[j]));
      for (std::size_t i = 0; i < m.dim; ++i) a(i, j) = c[i];
    }
    m.generators.push_back(std::move(a));
  }
  return m;
}

std::vector<RatMatrix> element_matrices(const RationalModule& m) {
  const auto& G = *m.group;
  const auto& gens = G.generator_indices();
  std::vector<RatMatrix> mats(G.order());
  std::vector<bool> done(G.order(), false);
  mats[0] = RatMatrix::identity(m.dim);
  done[0] = true;
  std::deque<ElementIndex> q{0};
  while (!q.empty()) {
    ElementIndex a = q.front();
    q.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ElementIndex b = G.mul(gens[k], a);
      if (done[b]) continue;
      done[b] = true;
      mats[b] = m.generators[k] * mats[a];
      q.push_back(b);
    }
  }
  for (ElementIndex a = 0; a < G.order(); ++a) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!(m.generators[k] * mats[a] == mats[G.mul(gens[k], a)])) {
        throw InvariantError("module matrices do not define a group action");
      }
    }
  }
  return mats;
}

std::vector<RatMatrix> endomorphism_algebra(const RationalModule& m) {
  const std::size_t n = m.dim;
  RatMatrix sys(m.generators.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& a : m.generators) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        // (T A)_{ij} - (A T)_{ij}
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, i * n + k) += a(k, j);
          sys(row, k * n + j) -= a(i, k);
        }
      }
    }
  }
  std::vector<RatMatrix> basis;
  for (const auto& v : nullspace(sys)) {
    RatMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t(i, j) = v[i * n + j];
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

namespace {

// A proper nonzero submodule from the kernel of a polynomial in an endomorphism, if one is found.
std::optional<std::vector<RationalVector>> split_by(const RationalModule& m, const RatMatrix& t) {
  QPoly mu = minimal_polynomial(t);
  if (mu.degree() <= 1) return std::nullopt;
  std::vector<QPoly> candidates;
  QPoly sq = squarefree_part(mu);
  if (sq.degree() < mu.degree()) candidates.push_back(sq);
  try {
    for (const auto& r : rational_roots(mu)) candidates.push_back(QPoly::x_minus(r));
  } catch (const BoundExceeded&) {
    // Coefficients too large for the divisor search; other candidates still apply.
  }
  for (unsigned j = 1; j <= 4 * m.dim + 4; ++j) {
    QPoly phi = cyclotomic_polynomial(j);
    if (phi.degree() >= mu.degree()) continue;
    if (divmod(mu, phi).second.is_zero()) candidates.push_back(phi);
  }
  for (const auto& c : candidates) {
    auto ker = nullspace(evaluate(c, t));
    if (!ker.empty() && ker.size() < m.dim) {
      std::vector<RationalVector> vecs;
      for (const auto& k : ker) {
        RationalVector v(m.group->order());
        for (std::size_t i = 0; i < m.dim; ++i) {
          if (sgn(k[i]) == 0) continue;
          for (std::size_t x = 0; x < v.size(); ++x) v[x] += k[i] * m.basis[i][x];
        }
        vecs.push_back(std::move(v));
      }
      return vecs;
    }
  }
  return std::nullopt;
}

constexpr int kSplitTrials = 12;

}  // namespace

RationalModule spin_module(const GroupAlgebraElement& e, const CharacterTable& table,
                           const RationalCharacter& rc, std::uint64_t seed) {
  const GroupPtr& group = e.group();
  const auto& G = *group;
  const auto& row_sum = rc.summed;
  const long deg = table.degrees[rc.representative()];

  // Choose H minimizing the positive fixed dimension dim V^H of a constituent V.
  auto fixed = [&](const Subgroup& h) -> Rational {
    Rational s = 0;
    for (auto x : h.elements()) s += row_sum[G.class_of(x)];
    return s / Rational(static_cast<long>(h.order() * rc.d));
  };
  Subgroup best = G.trivial_subgroup();
  Rational best_dim = deg;
  if (deg > 1) {
    for (const auto& h : G.subgroup_lattice().subgroups) {
      Rational f = fixed(h);
      if (sgn(f) > 0 && f < best_dim) {
        best_dim = f;
        best = h;
      }
    }
  }
  GroupAlgebraElement u = e * GroupAlgebraElement::subgroup_average(group, best);
  RationalModule m = left_ideal_module(group, {u.dense()});
  std::ostringstream prov;
  prov << "Q[G] e eps_H, |H| = " << best.order();

  if (best_dim != 1) {
    // Q[G]u may be a proper power of W; look for a nontrivial submodule via endomorphisms.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(-3, 3);
    int trials = 0;
    while (trials < kSplitTrials) {
      auto endo = endomorphism_algebra(m);
      if (endo.size() <= 1) break;
      RatMatrix t(m.dim, m.dim);
      for (const auto& b : endo) t = t + b.scaled(coin(rng));
      auto sub = split_by(m, t);
      if (sub) {
        m = left_ideal_module(group, *sub);
        prov << ", split to dim " << m.dim;
        trials = 0;
      } else {
        ++trials;
      }
    }
  }
  m.seed = seed;
  m.provenance = prov.str();
  return m;
}

// ---------------------------------------------------------------------------
// Primitive idempotents

std::size_t corner_dimension(const GroupAlgebraElement& f) {
  // f Q[G] f is the image of the right ideal f Q[G] under x -> x f.
  const auto& G = *f.group();
  RationalSpan right_ideal(G.order());
  const RationalVector fd = f.dense();
  for (ElementIndex g = 0; g < G.order(); ++g) {
    RationalVector fg(G.order());
    for (const auto& [x, q] : f.coeffs()) fg[G.mul(x, g)] = q;
    right_ideal.insert(std::move(fg));
  }
  RationalSpan corner(G.order());
  for (const auto& b : right_ideal.basis()) {
    corner.insert((GroupAlgebraElement::from_dense(f.group(), b) * f).dense());
  }
  return corner.rank();
}

namespace {

// Orthogonal projection of 1 onto the span of `vecs` for the form <a, b> = sum a_g b_g.
RationalVector project_identity(const std::vector<RationalVector>& vecs) {
  const std::size_t k = vecs.size();
  if (k == 0) return {};
  RatMatrix gram(k, k);
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = vecs[i][FiniteGroup::identity()];
    for (std::size_t j = i; j < k; ++j) gram(i, j) = gram(j, i) = dot(vecs[i], vecs[j]);
  }
  auto c = solve(gram, rhs);
  if (!c) throw InvariantError("singular Gram matrix in projection");
  RationalVector p(vecs[0].size());
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn((*c)[i]) == 0) continue;
    for (std::size_t x = 0; x < p.size(); ++x) p[x] += (*c)[i] * vecs[i][x];
  }
  return p;
}

// Peels one primitive idempotent p off a self-adjoint idempotent f with Q[G]f containing W.
GroupAlgebraElement peel(const GroupAlgebraElement& f, const RationalModule& w,
                         std::mt19937_64& rng) {
  const GroupPtr& group = f.group();
  const auto& G = *group;
  // Basis of the left ideal Q[G]f.
  std::vector<RationalVector> ideal = left_ideal_module(group, {f.dense()}).basis;

  std::uniform_int_distribution<int> coin(-2, 2);
  GroupAlgebraElement wv(group);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RationalVector v(G.order());
    for (const auto& b : w.basis) {
      int c = attempt == 0 ? 1 : coin(rng);
      if (c == 0) continue;
      for (std::size_t x = 0; x < v.size(); ++x) v[x] += Rational(c) * b[x];
    }
    wv = GroupAlgebraElement::from_dense(group, v);
    if (!(f * wv).is_zero()) break;
    wv = GroupAlgebraElement(group);
  }
  if (wv.is_zero()) throw BoundExceeded("no vector of W is moved nontrivially by f");

  // Kernel of x -> x w on Q[G]f.
  RatMatrix images(G.order(), ideal.size());
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    RationalVector img = (GroupAlgebraElement::from_dense(group, ideal[i]) * wv).dense();
    for (std::size_t x = 0; x < img.size(); ++x) images(x, i) = img[x];
  }
  std::vector<RationalVector> kernel;
  for (const auto& c : nullspace(images)) {
    RationalVector v(G.order());
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      if (sgn(c[i]) == 0) continue;
      for (std::size_t x = 0; x < v.size(); ++x) v[x] += c[i] * ideal[i][x];
    }
    kernel.push_back(std::move(v));
  }
  if (ideal.size() - kernel.size() != w.dim) {
    throw InvariantError("image of Q[G]f in W has the wrong dimension");
  }
  GroupAlgebraElement p = f;
  if (!kernel.empty()) p = f - GroupAlgebraElement::from_dense(group, project_identity(kernel));
  if (!(p * p == p) || !(p.adjoint() == p) || !(p * f == p)) {
    throw InvariantError("projection did not yield a self-adjoint idempotent");
  }
  return p;
}

}  // namespace

PrimitiveDecomposition primitive_decomposition(const GroupAlgebraElement& e,
                                               const RationalModule& w, long m, std::size_t d,
                                               std::uint64_t seed) {
  if (m <= 0 || d == 0) throw UsageError("Schur index and field degree must be positive");
  const auto md = static_cast<std::size_t>(m) * d;
  if (w.dim % md != 0) throw InvariantError("module dimension is not a multiple of m d");
  const long deg = static_cast<long>(w.dim / md);
  if (deg % m != 0) throw InvariantError("character degree is not divisible by the Schur index");

  PrimitiveDecomposition out;
  out.parent = e;
  out.m = m;
  out.d = d;
  out.n = deg / m;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  GroupAlgebraElement f = e;
  for (long j = 0; j + 1 < out.n; ++j) {
    GroupAlgebraElement p = peel(f, w, rng);
    out.idempotents.push_back(p);
    f = f - p;
  }
  out.idempotents.push_back(f);

  const std::size_t target = static_cast<std::size_t>(m * m) * d;
  GroupAlgebraElement total(e.group());
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    const auto& p = out.idempotents[i];
    if (!(p * p == p)) throw InvariantError("primitive idempotent is not idempotent");
    for (std::size_t j = i + 1; j < out.idempotents.size(); ++j) {
      if (!(p * out.idempotents[j]).is_zero() || !(out.idempotents[j] * p).is_zero()) {
        throw InvariantError("primitive idempotents are not orthogonal");
      }
    }
    if (corner_dimension(p) != target) {
      throw InvariantError("primitivity certificate dim(pQ[G]p) = m^2 d failed");
    }
    total = total + p;
  }
  if (!(total == e)) throw InvariantError("primitive idempotents do not sum to e");
  return out;
}

ClearedElement denominator_clearing(const GroupAlgebraElement& alpha) {
  ClearedElement out;
  out.multiplier = 1;
  for (const auto& [x, q] : alpha.coeffs()) out.multiplier = lcm(out.multiplier, q.get_den());
  out.integral.assign(alpha.group()->order(), Integer(0));
  for (const auto& [x, q] : alpha.coeffs()) {
    Rational v = q * Rational(out.multiplier);
    out.integral[x] = v.get_num();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariant forms and Schur-relation idempotents

RatMatrix invariant_inner_product(const RationalModule& m) {
  if (endomorphism_algebra(m).size() != 1) {
    throw UsageError("invariant form requires an absolutely irreducible module");
  }
  const auto mats = element_matrices(m);
  RatMatrix b(m.dim, m.dim);
  for (const auto& a : mats) b = b + a.transpose() * a;
  b = b.scaled(ratio(1, static_cast<long>(mats.size())));
  for (const auto& a : m.generators) {
    if (!(a.transpose() * b * a == b)) throw InvariantError("averaged form is not invariant");
  }
  // Positive definiteness via the pivots of symmetric elimination.
  RatMatrix t = b;
  for (std::size_t k = 0; k < m.dim; ++k) {
    if (sgn(t(k, k)) <= 0) throw InvariantError("averaged form is not positive definite");
    for (std::size_t i = k + 1; i < m.dim; ++i) {
      Rational f = t(i, k) / t(k, k);
      for (std::size_t j = k; j < m.dim; ++j) t(i, j) -= f * t(k, j);
    }
  }
  return b;
}

std::vector<RationalVector> orthogonal_basis(const RatMatrix& form) {
  const std::size_t n = form.rows();
  std::vector<RationalVector> out;
  std::vector<RationalVector> images;  // form * w for each w
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector v(n);
    v[i] = 1;
    for (std::size_t j = 0; j < out.size(); ++j) {
      Rational c = dot(v, images[j]) / dot(out[j], images[j]);
      for (std::size_t x = 0; x < n; ++x) v[x] -= c * out[j][x];
    }
    images.push_back(form.apply(v));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<GroupAlgebraElement> schur_relation_idempotents(
    const RationalModule& m, const RatMatrix& form, const std::vector<RationalVector>& basis,
    const GroupAlgebraElement& e_w) {
  if (endomorphism_algebra(m).size() != 1) {
    throw UsageError("Schur relations need an absolutely irreducible module");
  }
  if (basis.size() != m.dim) throw UsageError("basis size differs from the module dimension");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (sgn(dot(basis[i], form.apply(basis[j]))) != 0) {
        throw UsageError("basis is not orthogonal for the invariant form");
      }
    }
  }
  const auto mats = element_matrices(m);
  const auto& G = *m.group;
  std::vector<GroupAlgebraElement> out;
  for (const auto& w : basis) {
    const RationalVector bw = form.apply(w);
    const Rational norm = dot(w, bw);
    const Rational scale =
        Rational(static_cast<long>(m.dim)) / (Rational(static_cast<long>(G.order())) * norm);
    GroupAlgebraElement p(m.group);
    for (ElementIndex g = 0; g < G.order(); ++g) p.set(g, scale * dot(bw, mats[g].apply(w)));
    out.push_back(std::move(p));
  }
  GroupAlgebraElement total(m.group);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(out[i] * out[i] == out[i])) throw InvariantError("p_w is not idempotent");
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i != j && !(out[i] * out[j]).is_zero()) throw InvariantError("p_w not orthogonal");
    }
    total = total + out[i];
  }
  if (!(total == e_w)) throw InvariantError("Schur-relation idempotents do not sum to e_W");
  return out;
}

// ---------------------------------------------------------------------------

AlgebraAnalysis analyze_algebra(const CharacterTable& table, std::uint64_t seed, bool primitive) {
  AlgebraAnalysis out;
  out.table = table;
  auto orbits = galois_orbits(table);
  out.central = central_idempotents(table, orbits);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    OrbitData od;
    od.character = orbits[i];
    od.e = out.central.items[i].e;
    const std::size_t rep = orbits[i].representative();
    const long deg = table.degrees[rep];
    od.module = spin_module(od.e, table, orbits[i], mix_seed(seed, 2 * i));
    od.endo_dim = endomorphism_algebra(od.module).size();
    od.m = schur_index(orbits[i], od.endo_dim);
    od.fs = frobenius_schur(table, rep);
    if (deg % od.m != 0) throw InvariantError("Schur index does not divide the degree");
    if (od.module.dim != orbits[i].d * static_cast<std::size_t>(od.m * deg)) {
      throw InvariantError("irreducible module has dimension other than d m deg");
    }
    if (od.fs == -1 && od.m % 2 != 0) {
      throw InvariantError("indicator -1 with odd Schur index");
    }
    od.n = deg / od.m;
    if (primitive) {
      od.decomposition =
          primitive_decomposition(od.e, od.module, od.m, od.character.d, mix_seed(seed, 2 * i + 1));
    }
    out.orbits.push_back(std::move(od));
  }
  return out;
}

}  // namespace jacdecomp
