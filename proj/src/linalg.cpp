#include "jacdecomp/linalg.hpp"

#include <algorithm>
#include <utility>

#include "jacdecomp/error.hpp"

namespace jacdecomp {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw UsageError("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw UsageError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RatMatrix::row(std::size_t i) const {
  return RationalVector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector RatMatrix::column(std::size_t j) const {
  RationalVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  RatMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (sgn(rhs(k, j)) != 0) p(i, j) += a * rhs(k, j);
      }
    }
  }
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  RatMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += rhs.a_[i];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  RatMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= rhs.a_[i];
  return s;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

RationalVector RatMatrix::apply(const RationalVector& v) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) s += (*this)(i, j) * v[j];
    }
    out[i] = s;
  }
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (sgn(m(row, j)) != 0) m(i, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> nullspace(const RatMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RatMatrix& m, const RationalVector& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvariantError("inverse of a non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InvariantError("singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m(piv, col)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

RationalVector RationalSpan::reduce(RationalVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < dim_; ++j) {
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
    }
  }
  return v;
}

bool RationalSpan::insert(RationalVector v) {
  if (v.size() != dim_) throw InvariantError("RationalSpan::insert: dimension mismatch");
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < dim_ && sgn(v[piv]) == 0) ++piv;
  if (piv == dim_) return false;
  Rational inv = 1 / v[piv];
  for (std::size_t j = piv; j < dim_; ++j) v[j] *= inv;
  for (auto& row : rows_) {
    const Rational f = row[piv];
    if (sgn(f) == 0) continue;
    for (std::size_t j = piv; j < dim_; ++j) {
      if (sgn(v[j]) != 0) row[j] -= f * v[j];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RationalSpan::contains(const RationalVector& v) const {
  RationalVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalVector RationalSpan::coordinates(const RationalVector& v) const {
  if (!contains(v)) throw InvariantError("vector is not in the span");
  RationalVector c(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

RationalVector RationalSpan::combine(const RationalVector& coords) const {
  RationalVector v(dim_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(coords[r]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(rows_[r][j]) != 0) v[j] += coords[r] * rows_[r][j];
    }
  }
  return v;
}

}  // namespace jacdecomp
