#include "jacdecomp/lattice.hpp"

#include <algorithm>
#include <deque>

#include "jacdecomp/error.hpp"

namespace jacdecomp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& cols,
                                  std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw UsageError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw UsageError("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix dimension mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

IntMatrix IntMatrix::scaled(const Integer& s) const {
  IntMatrix out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = Rational((*this)(i, j));
  }
  return m;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Row and column operations on D, mirrored on U (rows), U^-1 (columns) and V (columns).
struct SmithState {
  IntMatrix d, u, u_inv, v;

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    for (std::size_t i = 0; i < u_inv.rows(); ++i) std::swap(u_inv(i, a), u_inv(i, b));
  }
  // row dst += q row src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(dst, j) += q * d(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += q * u(src, j);
    for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, src) -= q * u_inv(i, dst);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) = -d(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
    for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, a) = -u_inv(i, a);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }
  // col dst += q col src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) += q * d(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += q * v(i, src);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  SmithState st{a, IntMatrix::identity(n), IntMatrix::identity(n), IntMatrix::identity(k)};
  std::size_t t = 0;
  while (t < std::min(n, k)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = n, pj = k;
    for (std::size_t i = t; i < n; ++i) {
      for (std::size_t j = t; j < k; ++j) {
        if (st.d(i, j) != 0 && (pi == n || abs(st.d(i, j)) < abs(st.d(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == n) break;
    if (pi != t) st.swap_rows(pi, t);
    if (pj != t) st.swap_cols(pj, t);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (st.d(i, t) == 0) continue;
        Integer q = st.d(i, t) / st.d(t, t);
        if (q != 0) st.add_row(i, t, -q);
        if (st.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (st.d(t, j) == 0) continue;
        Integer q = st.d(t, j) / st.d(t, t);
        if (q != 0) st.add_col(j, t, -q);
        if (st.d(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < n; ++i) {
          if (st.d(i, t) != 0 && abs(st.d(i, t)) < abs(st.d(bi, bj))) bi = i, bj = t;
        }
        for (std::size_t j = t + 1; j < k; ++j) {
          if (st.d(t, j) != 0 && abs(st.d(t, j)) < abs(st.d(bi, bj))) bi = t, bj = j;
        }
        if (bi != t) st.swap_rows(bi, t);
        if (bj != t) st.swap_cols(bj, t);
        continue;
      }
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i) {
        for (std::size_t j = t + 1; j < k; ++j) {
          if (st.d(i, j) % st.d(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == n) break;
      st.add_row(t, bad, Integer(1));
    }
    if (st.d(t, t) < 0) st.negate_row(t);
    ++t;
  }
  SmithForm out{std::move(st.d), std::move(st.u), std::move(st.u_inv), std::move(st.v), t};
  return out;
}

IntMatrix hermite_basis(const IntMatrix& a) {
  // Row Hermite form of the transpose: each generator is a row.
  IntMatrix b = a.transpose();
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j) b(dst, j) += q * b(src, j);
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(b(x, j), b(y, j));
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (b(i, c) != 0 && (best == rows || abs(b(i, c)) < abs(b(best, c)))) best = i;
      }
      if (best == rows) break;
      if (best != r) swap_rows(best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (b(i, c) == 0) continue;
        Integer q = b(i, c) / b(r, c);
        add_row(i, r, -q);
        if (b(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows || b(r, c) == 0) continue;
    if (b(r, c) < 0) {
      for (std::size_t j = 0; j < cols; ++j) b(r, j) = -b(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), b(i, c).get_mpz_t(), b(r, c).get_mpz_t());
      if (q != 0) add_row(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(cols, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(j, i) = b(i, j);
  }
  return out;
}

IntMatrix saturate(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  return hermite_basis(s.u_inv.columns(0, s.rank));
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegralGLattice make_lattice(const GroupPtr& group, std::size_t rank,
                             std::vector<IntMatrix> generator_matrices) {
  const auto& g = *group;
  const auto& gens = g.generator_indices();
  if (generator_matrices.size() != gens.size()) {
    throw UsageError("one matrix per group generator is required");
  }
  IntegralGLattice out;
  out.group = group;
  out.rank = rank;
  for (const auto& m : generator_matrices) {
    if (m.rows() != out.rank || m.cols() != out.rank) throw UsageError("generator matrix shape");
    const Integer det = determinant(m);
    if (det != 1 && det != -1) throw InvariantError("generator matrix is not unimodular");
  }
  out.generators = std::move(generator_matrices);
  out.elements.assign(g.order(), IntMatrix());
  std::vector<bool> seen(g.order(), false);
  out.elements[FiniteGroup::identity()] = IntMatrix::identity(out.rank);
  seen[FiniteGroup::identity()] = true;
  std::deque<ElementIndex> queue{FiniteGroup::identity()};
  while (!queue.empty()) {
    const ElementIndex x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const ElementIndex y = g.mul(gens[s], x);
      if (seen[y]) continue;
      seen[y] = true;
      out.elements[y] = out.generators[s] * out.elements[x];
      queue.push_back(y);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw InvariantError("generators do not reach every group element");
  }
  for (ElementIndex x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (!(out.elements[g.mul(gens[s], x)] == out.generators[s] * out.elements[x])) {
        throw InvariantError("generator matrices do not satisfy the group relations");
      }
    }
  }
  return out;
}

IntegralGLattice regular_lattice(const GroupPtr& group) {
  const auto& g = *group;
  std::vector<IntMatrix> mats;
  for (ElementIndex s : g.generator_indices()) {
    IntMatrix m(g.order(), g.order());
    for (ElementIndex x = 0; x < g.order(); ++x) m(g.mul(s, x), x) = 1;
    mats.push_back(std::move(m));
  }
  return make_lattice(group, g.order(), std::move(mats));
}

IntegralGLattice permutation_lattice(const GroupPtr& group, const Subgroup& m) {
  const auto& g = *group;
  if (!g.is_subgroup(m)) throw UsageError("not a subgroup");
  const auto cosets = g.left_cosets(m);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (ElementIndex x : cosets[c]) coset_of[x] = c;
  }
  std::vector<IntMatrix> mats;
  for (ElementIndex s : g.generator_indices()) {
    IntMatrix a(cosets.size(), cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c) a(coset_of[g.mul(s, cosets[c].front())], c) = 1;
    mats.push_back(std::move(a));
  }
  return make_lattice(group, cosets.size(), std::move(mats));
}

IntMatrix act(const IntegralGLattice& lattice, const std::vector<Integer>& integral) {
  if (integral.size() != lattice.elements.size()) throw UsageError("element length mismatch");
  IntMatrix out(lattice.rank, lattice.rank);
  for (std::size_t x = 0; x < integral.size(); ++x) {
    if (integral[x] != 0) out = out + lattice.elements[x].scaled(integral[x]);
  }
  return out;
}

IntMatrix image_sublattice(const IntegralGLattice& lattice, const GroupAlgebraElement& alpha) {
  if (alpha.group() != lattice.group) throw UsageError("element of a different group");
  return saturate(act(lattice, denominator_clearing(alpha).integral));
}

namespace {

std::size_t combined_rank(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix both(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) both(i, a.cols() + j) = b(i, j);
  }
  return rank(both.to_rational());
}

}  // namespace

SublatticeCertificate isotypical_sublattices(const IntegralGLattice& lattice,
                                             const CentralIdempotentSystem& system) {
  if (system.group != lattice.group) throw UsageError("idempotents of a different group");
  SublatticeCertificate cert;
  std::size_t total = 0;
  for (const auto& item : system.items) {
    IntMatrix basis = image_sublattice(lattice, item.e);
    for (const auto& s : lattice.generators) {
      if (combined_rank(basis, s * basis) != basis.cols()) {
        throw InvariantError("isotypical sublattice is not G-stable");
      }
    }
    total += basis.cols();
    cert.ranks.push_back(basis.cols());
    cert.bases.push_back(std::move(basis));
  }
  if (total != lattice.rank) throw InvariantError("isotypical ranks do not add up to the rank");
  IntMatrix stacked(lattice.rank, lattice.rank);
  std::size_t col = 0;
  for (const auto& b : cert.bases) {
    for (std::size_t j = 0; j < b.cols(); ++j, ++col) {
      for (std::size_t i = 0; i < lattice.rank; ++i) stacked(i, col) = b(i, j);
    }
  }
  cert.index = abs(determinant(stacked));
  if (cert.index == 0) throw InvariantError("isotypical sublattices are not independent");
  return cert;
}

PrimitiveSublattices primitive_sublattices(const IntegralGLattice& lattice,
                                           const PrimitiveDecomposition& decomposition) {
  PrimitiveSublattices out;
  out.isotypical_rank = image_sublattice(lattice, decomposition.parent).cols();
  std::size_t total = 0;
  for (const auto& p : decomposition.idempotents) {
    IntMatrix basis = image_sublattice(lattice, p);
    total += basis.cols();
    out.ranks.push_back(basis.cols());
    out.bases.push_back(std::move(basis));
  }
  if (!out.ranks.empty() &&
      std::adjacent_find(out.ranks.begin(), out.ranks.end(), std::not_equal_to<>()) !=
          out.ranks.end()) {
    throw InvariantError("primitive sublattices have different ranks");
  }
  if (total != out.isotypical_rank) {
    throw InvariantError("primitive sublattice ranks do not add up to the isotypical rank");
  }
  return out;
}

std::vector<RatMatrix> restricted_action(const IntegralGLattice& lattice, const IntMatrix& basis) {
  const RatMatrix b = basis.to_rational();
  std::vector<RatMatrix> out;
  for (const auto& s : lattice.generators) {
    const RatMatrix image = (s * basis).to_rational();
    RatMatrix coords(basis.cols(), basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      const auto x = solve(b, image.column(j));
      if (!x) throw InvariantError("sublattice is not G-stable");
      for (std::size_t i = 0; i < basis.cols(); ++i) {
        if (!is_integer((*x)[i])) throw InvariantError("sublattice is not saturated");
        coords(i, j) = (*x)[i];
      }
    }
    out.push_back(std::move(coords));
  }
  return out;
}

std::size_t hom_dimension(const IntegralGLattice& lattice, const IntMatrix& a, const IntMatrix& b) {
  const std::size_t ra = a.cols();
  const std::size_t rb = b.cols();
  if (ra == 0 || rb == 0) return 0;
  const auto act_a = restricted_action(lattice, a);
  const auto act_b = restricted_action(lattice, b);
  // Unknown T (rb x ra) with T A_s = B_s T for every generator s.
  const std::size_t unknowns = rb * ra;
  RatMatrix system(act_a.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t s = 0; s < act_a.size(); ++s) {
    for (std::size_t i = 0; i < rb; ++i) {
      for (std::size_t j = 0; j < ra; ++j, ++row) {
        for (std::size_t k = 0; k < ra; ++k) system(row, i * ra + k) += act_a[s](k, j);
        for (std::size_t k = 0; k < rb; ++k) system(row, k * ra + j) -= act_b[s](i, k);
      }
    }
  }
  return nullspace(system).size();
}

bool hom_vanishing_check(const IntegralGLattice& lattice, const SublatticeCertificate& cert,
                         std::size_t i, std::size_t j) {
  if (i == j) throw UsageError("hom_vanishing_check needs distinct components");
  if (i >= cert.bases.size() || j >= cert.bases.size()) throw UsageError("component out of range");
  return hom_dimension(lattice, cert.bases[i], cert.bases[j]) == 0;
}

}  // namespace jacdecomp
