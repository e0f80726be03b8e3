#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jacdecomp/rational.hpp"

namespace jacdecomp {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& s) const;
  RationalVector apply(const RationalVector& v) const;

  bool is_zero() const;
  bool operator==(const RatMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct RowEchelon {
  RatMatrix reduced;                // fully reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

/// Basis (as rows) of { x : m x = 0 }.
std::vector<RationalVector> nullspace(const RatMatrix& m);

/// Some x with m x = b, if one exists.
std::optional<RationalVector> solve(const RatMatrix& m, const RationalVector& b);

RatMatrix inverse(const RatMatrix& m);
Rational determinant(RatMatrix m);

/// Incrementally maintained subspace of Q^n kept in fully reduced echelon form.
/// The echelon rows double as a basis whose coordinates are read off at the pivots.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Adds v; returns false if v was already in the span.
  bool insert(RationalVector v);
  bool contains(const RationalVector& v) const;

  /// Coordinates of v with respect to basis(); v must lie in the span.
  RationalVector coordinates(const RationalVector& v) const;
  RationalVector combine(const RationalVector& coords) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<RationalVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  RationalVector reduce(RationalVector v) const;

  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace jacdecomp
