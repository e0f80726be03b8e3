#include "jacdecomp/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "jacdecomp/error.hpp"

namespace jacdecomp {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

struct Field {
  std::uint64_t n;
  std::size_t phi;
  std::vector<RationalVector> power;  // reduced zeta^j for 0 <= j < n
};

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> poly_div_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
  std::vector<Integer> q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

// Callers hold the field-cache mutex, which also guards this memo.
std::vector<Integer> cyclotomic_poly(std::uint64_t n) {
  static std::map<std::uint64_t, std::vector<Integer>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Integer> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  std::vector<Integer> den{1};
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) den = poly_mul(den, cyclotomic_poly(d));
  }
  return memo[n] = poly_div_monic(num, den);
}

std::shared_ptr<const Field> field(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto f = std::make_shared<Field>();
  f->n = n;
  f->phi = euler_phi(n);
  std::vector<Integer> phi_poly = cyclotomic_poly(n);
  f->power.reserve(n);
  RationalVector cur(f->phi);
  cur[0] = 1;
  for (std::uint64_t j = 0; j < n; ++j) {
    f->power.push_back(cur);
    // Multiply by z and reduce with z^phi = -sum c_i z^i.
    Rational top = cur[f->phi - 1];
    for (std::size_t i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < f->phi; ++i) cur[i] -= top * Rational(phi_poly[i]);
    }
  }
  cache.emplace(n, f);
  return f;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic::Cyclotomic(const Rational& q) : n_(1), c_{q} {}

Cyclotomic Cyclotomic::from_powers(std::uint64_t n, const RationalVector& c) {
  if (n == 0) throw UsageError("cyclotomic conductor must be positive");
  auto f = field(n);
  Cyclotomic r;
  r.n_ = n;
  r.c_.assign(f->phi, Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    const auto& p = f->power[j % n];
    for (std::size_t i = 0; i < f->phi; ++i) {
      if (sgn(p[i]) != 0) r.c_[i] += c[j] * p[i];
    }
  }
  return r;
}

Cyclotomic Cyclotomic::from_coeffs(std::uint64_t n, RationalVector coeffs) {
  if (n == 0) throw UsageError("cyclotomic conductor must be positive");
  if (coeffs.size() != euler_phi(n)) throw UsageError("coefficient count must equal phi(n)");
  Cyclotomic r;
  r.n_ = n;
  r.c_ = std::move(coeffs);
  return r;
}

Cyclotomic Cyclotomic::zeta(std::uint64_t n, long k) {
  if (n == 0) throw UsageError("cyclotomic conductor must be positive");
  long nn = static_cast<long>(n);
  long e = ((k % nn) + nn) % nn;
  auto f = field(n);
  return from_coeffs(n, f->power[static_cast<std::size_t>(e)]);
}

Cyclotomic Cyclotomic::embed(std::uint64_t big_n) const {
  if (big_n % n_ != 0) throw UsageError("embedding target must be a multiple of the conductor");
  if (big_n == n_) return *this;
  const std::uint64_t step = big_n / n_;
  RationalVector pw(c_.size() == 0 ? 0 : (c_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) pw[i * step] = c_[i];
  return from_powers(big_n, pw);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& b) const {
  if (n_ != b.n_) {
    std::uint64_t m = lcm_u64(n_, b.n_);
    return embed(m) + b.embed(m);
  }
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& b) const { return *this + (-b); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& b) const {
  if (n_ != b.n_) {
    if (n_ == 1) return b.scaled(c_[0]);
    if (b.n_ == 1) return scaled(b.c_[0]);
    std::uint64_t m = lcm_u64(n_, b.n_);
    return embed(m) * b.embed(m);
  }
  RationalVector prod(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) != 0) prod[i + j] += c_[i] * b.c_[j];
    }
  }
  return from_powers(n_, prod);
}

bool Cyclotomic::operator==(const Cyclotomic& b) const {
  if (n_ == b.n_) return c_ == b.c_;
  std::uint64_t m = lcm_u64(n_, b.n_);
  return embed(m).c_ == b.embed(m).c_;
}

Cyclotomic Cyclotomic::galois(long k) const {
  const long nn = static_cast<long>(n_);
  long kk = ((k % nn) + nn) % nn;
  if (std::gcd(kk, nn) != 1) {
    throw UsageError("galois exponent " + std::to_string(k) + " not coprime to " + std::to_string(n_));
  }
  RationalVector pw(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) pw[(static_cast<std::uint64_t>(kk) * i) % n_] += c_[i];
  }
  return from_powers(n_, pw);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return std::nullopt;
  }
  return c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_);
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const Rational mag = abs(c_[i]);
    if (first) {
      if (sgn(c_[i]) < 0) os << "-";
    } else {
      os << (sgn(c_[i]) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0 && mag != 1) os << "*";
    if (i == 1) os << "z";
    if (i > 1) os << "z^" << i;
  }
  if (first) os << "0";
  if (n_ > 2 && !is_rational()) os << " (z = zeta_" << n_ << ")";
  return os.str();
}

Rational trace_over(const Cyclotomic& a, const std::vector<Cyclotomic>& generators) {
  std::uint64_t big = a.conductor();
  for (const auto& g : generators) big = lcm_u64(big, g.conductor());
  const Cyclotomic x = a.embed(big);
  std::vector<Cyclotomic> gens;
  for (const auto& g : generators) gens.push_back(g.embed(big));

  std::vector<std::uint64_t> units, stab;
  for (std::uint64_t k = 1; k <= big; ++k) {
    if (std::gcd(k, big) != 1) continue;
    units.push_back(k % big);
    bool fixes = true;
    for (const auto& g : gens) {
      if (!(g.galois(static_cast<long>(k)) == g)) {
        fixes = false;
        break;
      }
    }
    if (fixes) stab.push_back(k % big);
  }
  for (auto h : stab) {
    if (!(x.galois(static_cast<long>(h)) == x)) {
      throw UsageError("element does not lie in the given subfield");
    }
  }
  std::vector<bool> covered(big + 1, false);
  Cyclotomic sum(0);
  for (auto k : units) {
    if (covered[k]) continue;
    for (auto h : stab) covered[(k * h) % big] = true;
    sum += x.galois(static_cast<long>(k));
  }
  auto q = sum.is_rational();
  if (!q) throw InvariantError("trace over subfield is not rational");
  return *q;
}

}  // namespace jacdecomp
