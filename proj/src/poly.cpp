#include "jacdecomp/poly.hpp"

#include <algorithm>
#include <set>

#include "jacdecomp/error.hpp"

namespace jacdecomp {

QPoly::QPoly(RationalVector coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::x_minus(const Rational& root) { return QPoly({-root, Rational(1)}); }

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& b) const {
  RationalVector r(std::max(c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& b) const {
  RationalVector r(std::max(c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& b) const {
  if (is_zero() || b.is_zero()) return {};
  RationalVector r(c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  RationalVector r = c_;
  Rational inv = 1 / c_.back();
  for (auto& x : r) x *= inv;
  return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  RationalVector r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(r));
}

Rational QPoly::operator()(const Rational& x) const {
  Rational s = 0;
  for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
  return s;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InvariantError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  RationalVector r = a.coeffs();
  const RationalVector& d = b.coeffs();
  RationalVector q(r.size() - d.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = r[i + d.size() - 1] / d.back();
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= q[i] * d[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

namespace {

constexpr unsigned long kMaxRootSearch = 1000000000000UL;

std::vector<Integer> positive_divisors(Integer n) {
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  std::set<Rational> roots;
  if (p.degree() <= 0) return {};
  // Integer primitive form.
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> a;
  for (const auto& c : p.coeffs()) a.push_back(Integer(c * den));
  std::size_t low = 0;
  while (sgn(a[low]) == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  Integer a0 = abs(a[low]), an = abs(a.back());
  if (a0 > kMaxRootSearch || an > kMaxRootSearch) {
    throw BoundExceeded("rational root search: coefficients too large");
  }
  if (static_cast<int>(low) < p.degree()) {
    for (const auto& num : positive_divisors(a0)) {
      for (const auto& q : positive_divisors(an)) {
        for (int sign : {1, -1}) {
          Rational r(num * sign, q);
          r.canonicalize();
          if (sgn(p(r)) == 0) roots.insert(r);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

QPoly cyclotomic_polynomial(unsigned n) {
  RationalVector num(n + 1);
  num[0] = -1;
  num[n] = 1;
  QPoly r(num);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) r = divmod(r, cyclotomic_polynomial(d)).first;
  }
  return r;
}

QPoly minimal_polynomial(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvariantError("minimal polynomial of a non-square matrix");
  auto flat = [](const RatMatrix& x) {
    RationalVector v;
    v.reserve(x.rows() * x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) v.push_back(x(i, j));
    }
    return v;
  };
  RationalSpan span(n * n);
  std::vector<RatMatrix> powers{RatMatrix::identity(n)};
  span.insert(flat(powers[0]));
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = powers.back() * m;
    RationalVector v = flat(next);
    if (span.contains(v)) {
      // Express m^k in the basis of lower powers: solve sum c_j m^j = m^k.
      RatMatrix sys(n * n, k);
      for (std::size_t j = 0; j < k; ++j) {
        RationalVector col = flat(powers[j]);
        for (std::size_t r = 0; r < n * n; ++r) sys(r, j) = col[r];
      }
      auto c = solve(sys, v);
      if (!c) throw InvariantError("minimal polynomial: inconsistent Krylov system");
      RationalVector coeffs(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
      coeffs[k] = 1;
      return QPoly(std::move(coeffs));
    }
    span.insert(std::move(v));
    powers.push_back(std::move(next));
  }
  throw InvariantError("minimal polynomial exceeds the matrix size");
}

RatMatrix evaluate(const QPoly& p, const RatMatrix& m) {
  RatMatrix acc(m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * m + RatMatrix::identity(m.rows()).scaled(c[i]);
  }
  return acc;
}

}  // namespace jacdecomp
