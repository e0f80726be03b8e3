#pragma once

#include <cstddef>
#include <vector>

#include "jacdecomp/linalg.hpp"
#include "jacdecomp/perm.hpp"
#include "jacdecomp/qalgebra.hpp"
#include "jacdecomp/rational.hpp"

namespace jacdecomp {

/// Dense row-major matrix over Z.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors of length `rows`.
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix scaled(const Integer& s) const;
  RatMatrix to_rational() const;
  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// U A V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... (nonnegative).
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix v;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Column-style Hermite normal form: the columns of the result form the canonical basis of the
/// lattice spanned by the columns of a (zero columns dropped). Deterministic pivoting.
IntMatrix hermite_basis(const IntMatrix& a);

/// Basis of (span_Q of the columns) intersected with Z^n, in Hermite form.
IntMatrix saturate(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

/// A free Z-module with a G-action by integer matrices.
struct IntegralGLattice {
  GroupPtr group;
  std::size_t rank = 0;
  std::vector<IntMatrix> generators;  // one per group generator
  std::vector<IntMatrix> elements;    // one per group element, indexed like the group
};

/// Builds all element matrices from the generator matrices and verifies that they define a
/// homomorphism with determinant +-1; throws InvariantError otherwise.
IntegralGLattice make_lattice(const GroupPtr& group, std::size_t rank,
                             std::vector<IntMatrix> generator_matrices);
IntegralGLattice regular_lattice(const GroupPtr& group);
/// Action on the left cosets of m, in the order given by FiniteGroup::left_cosets.
IntegralGLattice permutation_lattice(const GroupPtr& group, const Subgroup& m);

/// rho(alpha) = sum_g alpha_g A_g for an integral element.
IntMatrix act(const IntegralGLattice& lattice, const std::vector<Integer>& integral);
/// Saturation of Im rho(m alpha), with m the least denominator-clearing multiplier.
IntMatrix image_sublattice(const IntegralGLattice& lattice, const GroupAlgebraElement& alpha);

struct SublatticeCertificate {
  std::vector<IntMatrix> bases;  // columns span each sublattice
  std::vector<std::size_t> ranks;
  Integer index;  // [Lambda : L_1 + ... + L_r]
};

/// One saturated sublattice per central idempotent; verifies equivariance and rank additivity.
SublatticeCertificate isotypical_sublattices(const IntegralGLattice& lattice,
                                             const CentralIdempotentSystem& system);

struct PrimitiveSublattices {
  std::vector<IntMatrix> bases;
  std::vector<std::size_t> ranks;
  std::size_t isotypical_rank = 0;
};

/// Image sublattices of each primitive idempotent; verifies equal ranks summing to the rank of the
/// parent isotypical sublattice.
PrimitiveSublattices primitive_sublattices(const IntegralGLattice& lattice,
                                           const PrimitiveDecomposition& decomposition);

/// Matrix of each generator on a G-stable saturated sublattice, in the coordinates of `basis`.
std::vector<RatMatrix> restricted_action(const IntegralGLattice& lattice, const IntMatrix& basis);

/// dim_Q Hom_G(L_a (x) Q, L_b (x) Q).
std::size_t hom_dimension(const IntegralGLattice& lattice, const IntMatrix& a, const IntMatrix& b);

/// True iff Hom_G between components i != j of the certificate is zero.
bool hom_vanishing_check(const IntegralGLattice& lattice, const SublatticeCertificate& cert,
                         std::size_t i, std::size_t j);

}  // namespace jacdecomp
