#include "jacdecomp/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "jacdecomp/error.hpp"

namespace jacdecomp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw InvariantError("inverse of zero modulo p");
    return pow(a, p - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 choose_prime(u64 exponent, u64 order, u64 limit) {
  for (u64 p = exponent + 1; p <= limit; p += exponent) {
    if (static_cast<u128>(p) * p > static_cast<u128>(4) * order && is_prime(p)) return p;
  }
  throw BoundExceeded("no prime = 1 mod " + std::to_string(exponent) + " below " +
                      std::to_string(limit));
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 2
}

using ModMatrix = std::vector<std::vector<u64>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> mod_rref(const Fp& f, ModMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    u64 inv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

// Kernel of a (square) as row vectors.
ModMatrix mod_kernel(const Fp& f, ModMatrix a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto pivots = mod_rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMatrix ker;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    ker.push_back(std::move(v));
  }
  return ker;
}

// Characteristic polynomial via Hessenberg reduction; coefficients low degree first, monic.
std::vector<u64> mod_charpoly(const Fp& f, ModMatrix h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
    }
    u64 inv = f.inv(h[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      u64 t = f.mul(h[i][m - 1], inv);
      if (t == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(t, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(t, h[j][i]));
    }
  }
  // p_k(x) = char poly of the leading k x k block.
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    // (x - h[k-1][k-1]) * p[k-1]
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[k - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    u64 prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h[k - i][k - i - 1]);
      u64 t = f.mul(prod, h[k - i - 1][k - 1]);
      if (t == 0) continue;
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) {
        cur[j] = f.sub(cur[j], f.mul(t, p[k - i - 1][j]));
      }
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

// Simultaneous eigenvectors of the class matrices, by splitting on random combinations.
std::vector<std::vector<u64>> split_eigenvectors(const Fp& f, const std::vector<ModMatrix>& mats,
                                                 std::size_t s, std::mt19937_64& rng,
                                                 int retries) {
  ModMatrix full(s, std::vector<u64>(s, 0));
  for (std::size_t i = 0; i < s; ++i) full[i][i] = 1;
  std::vector<ModMatrix> pending{full}, done;
  std::uniform_int_distribution<u64> coin(0, f.p - 1);
  int failures = 0;
  while (!pending.empty()) {
    ModMatrix basis = std::move(pending.back());
    pending.pop_back();
    if (basis.size() == 1) {
      done.push_back(std::move(basis));
      continue;
    }
    ModMatrix b = basis;
    auto pivots = mod_rref(f, b);
    const std::size_t k = b.size();
    // Random combination restricted to the subspace; columns are coordinates of M b_i.
    std::vector<u64> coef(mats.size());
    for (auto& c : coef) c = coin(rng);
    ModMatrix restricted(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<u64> img(s, 0);
      for (std::size_t j = 0; j < mats.size(); ++j) {
        if (coef[j] == 0) continue;
        for (std::size_t r = 0; r < s; ++r) {
          u64 acc = 0;
          for (std::size_t c = 0; c < s; ++c) acc = f.add(acc, f.mul(mats[j][r][c], b[i][c]));
          img[r] = f.add(img[r], f.mul(coef[j], acc));
        }
      }
      for (std::size_t q = 0; q < k; ++q) restricted[q][i] = img[pivots[q]];
    }
    auto cp = mod_charpoly(f, restricted);
    std::vector<ModMatrix> parts;
    std::size_t total = 0;
    for (u64 lambda = 0; lambda < f.p; ++lambda) {
      u64 val = 0;
      for (std::size_t i = cp.size(); i-- > 0;) val = f.add(f.mul(val, lambda), cp[i]);
      if (val != 0) continue;
      ModMatrix shifted = restricted;
      for (std::size_t i = 0; i < k; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
      ModMatrix ker = mod_kernel(f, shifted);
      ModMatrix vecs;
      for (const auto& c : ker) {
        std::vector<u64> v(s, 0);
        for (std::size_t i = 0; i < k; ++i) {
          if (c[i] == 0) continue;
          for (std::size_t r = 0; r < s; ++r) v[r] = f.add(v[r], f.mul(c[i], b[i][r]));
        }
        vecs.push_back(std::move(v));
      }
      total += vecs.size();
      parts.push_back(std::move(vecs));
    }
    if (parts.size() < 2 || total != k) {
      if (++failures > retries) {
        throw InvariantError("eigenspace splitting did not diagonalize after " +
                             std::to_string(retries) + " retries");
      }
      pending.push_back(std::move(basis));
      continue;
    }
    for (auto& part : parts) pending.push_back(std::move(part));
  }
  std::vector<std::vector<u64>> out;
  for (auto& d : done) out.push_back(std::move(d[0]));
  return out;
}

bool values_greater(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a[k].coeffs();
    const auto& y = b[k].coeffs();
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      if (x[i] != y[i]) return x[i] > y[i];
    }
  }
  return false;
}

void sort_rows(CharacterTable& t) {
  const std::size_t s = t.rows.size();
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  auto is_trivial = [&](std::size_t r) {
    return std::all_of(t.rows[r].begin(), t.rows[r].end(),
                       [](const Cyclotomic& c) { return c == Cyclotomic(1); });
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return values_greater(t.rows[a], t.rows[b]);
  });
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<long> degrees;
  for (auto i : idx) {
    rows.push_back(std::move(t.rows[i]));
    degrees.push_back(t.degrees[i]);
  }
  t.rows = std::move(rows);
  t.degrees = std::move(degrees);
}

}  // namespace

std::vector<std::size_t> CharacterTable::inverse_class() const {
  const auto& classes = group->conjugacy_classes();
  std::vector<std::size_t> out(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    out[k] = group->class_of(group->inv(classes[k].representative));
  }
  return out;
}

CharacterTable character_table(const GroupPtr& group, const CharacterTableOptions& options) {
  const auto& G = *group;
  const auto& classes = G.conjugacy_classes();
  const std::size_t s = classes.size();
  const u64 order = G.order();
  const u64 e = G.exponent();

  CharacterTable t;
  t.group = group;
  t.exponent = e;
  t.seed = options.seed;
  t.prime = choose_prime(e, order, options.prime_limit);
  const Fp f{t.prime};

  // Class multiplication coefficients: c[j][k][l] = #{x in C_j : x^-1 g_l in C_k}.
  std::vector<ModMatrix> mats(s, ModMatrix(s, std::vector<u64>(s, 0)));
  for (std::size_t l = 0; l < s; ++l) {
    const ElementIndex gl = classes[l].representative;
    for (ElementIndex x = 0; x < order; ++x) {
      std::size_t j = G.class_of(x);
      std::size_t k = G.class_of(G.mul(G.inv(x), gl));
      mats[j][k][l] += 1;
    }
  }
  for (auto& m : mats) {
    for (auto& row : m) {
      for (auto& x : row) x %= f.p;
    }
  }
  std::vector<ModMatrix> useful(mats.begin() + 1, mats.end());  // C_0 is the identity

  std::mt19937_64 rng(options.seed);
  auto vecs = s == 1 ? std::vector<std::vector<u64>>{{1}}
                     : split_eigenvectors(f, useful, s, rng, options.split_retries);
  if (vecs.size() != s) throw InvariantError("wrong number of simultaneous eigenvectors");

  const auto inv_class = t.inverse_class();
  std::vector<u64> h(s);
  for (std::size_t k = 0; k < s; ++k) h[k] = classes[k].elements.size() % f.p;

  const u64 gamma = primitive_root(f);
  const u64 z = f.pow(gamma, (f.p - 1) / e);

  // Powers: class of g_k^t.
  std::vector<std::vector<std::size_t>> power_class(s);
  for (std::size_t k = 0; k < s; ++k) {
    const ElementIndex g = classes[k].representative;
    const std::size_t o = G.element_order(g);
    ElementIndex x = FiniteGroup::identity();
    for (std::size_t tt = 0; tt < o; ++tt) {
      power_class[k].push_back(G.class_of(x));
      x = G.mul(x, g);
    }
  }

  for (auto& v : vecs) {
    if (v[0] == 0) throw InvariantError("eigenvector vanishes at the identity class");
    u64 inv0 = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, inv0);
    u64 sum = 0;
    for (std::size_t k = 0; k < s; ++k) {
      sum = f.add(sum, f.mul(f.mul(v[k], v[inv_class[k]]), f.inv(h[k])));
    }
    const u64 target = f.mul(order % f.p, f.inv(sum));
    long degree = 0;
    for (u64 d = 1; d * d <= order; ++d) {
      if (f.mul(d, d) == target) {
        degree = static_cast<long>(d);
        break;
      }
    }
    if (degree == 0) throw InvariantError("no character degree matches the modular data");

    std::vector<u64> val(s);
    for (std::size_t k = 0; k < s; ++k) {
      val[k] = f.mul(f.mul(v[k], static_cast<u64>(degree)), f.inv(h[k]));
    }
    std::vector<Cyclotomic> row(s);
    for (std::size_t k = 0; k < s; ++k) {
      const std::size_t o = power_class[k].size();
      const u64 zo = f.pow(z, e / o);
      const u64 zo_inv = f.inv(zo);
      const u64 o_inv = f.inv(o % f.p);
      RationalVector mult(e);
      for (std::size_t l = 0; l < o; ++l) {
        u64 acc = 0;
        const u64 step = f.pow(zo_inv, l);
        u64 w = 1;
        for (std::size_t tt = 0; tt < o; ++tt) {
          acc = f.add(acc, f.mul(val[power_class[k][tt]], w));
          w = f.mul(w, step);
        }
        acc = f.mul(acc, o_inv);
        if (acc > static_cast<u64>(degree)) {
          throw InvariantError("eigenvalue multiplicity lift out of range");
        }
        mult[l * (e / o)] = Rational(static_cast<unsigned long>(acc));
      }
      row[k] = Cyclotomic::from_powers(e, mult);
    }
    t.rows.push_back(std::move(row));
    t.degrees.push_back(degree);
  }
  sort_rows(t);
  validate_table(t);
  return t;
}

CharacterTable table_from_rows(const GroupPtr& group, std::vector<std::vector<Cyclotomic>> rows,
                               std::uint64_t seed) {
  CharacterTable t;
  t.group = group;
  t.exponent = group->exponent();
  t.seed = seed;
  for (auto& r : rows) {
    if (r.empty()) throw InvariantError("empty character row");
    auto d = r[0].is_rational();
    if (!d || !is_integer(*d) || sgn(*d) <= 0) throw InvariantError("invalid character degree");
    t.degrees.push_back(d->get_num().get_si());
    for (auto& c : r) {
      if (t.exponent % c.conductor() != 0) throw InvariantError("character value conductor");
      c = c.embed(t.exponent);
    }
  }
  t.rows = std::move(rows);
  validate_table(t);
  return t;
}

Cyclotomic inner_product(const CharacterTable& table, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b) {
  const auto& classes = table.group->conjugacy_classes();
  Cyclotomic sum(0);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    sum += (a[k] * b[k].conj()).scaled(Rational(static_cast<long>(classes[k].elements.size())));
  }
  return sum.scaled(ratio(1, static_cast<long>(table.group->order())));
}

void validate_table(const CharacterTable& t) {
  const auto& classes = t.group->conjugacy_classes();
  const std::size_t s = classes.size();
  const long order = static_cast<long>(t.group->order());
  if (t.rows.size() != s || t.degrees.size() != s) {
    throw InvariantError("character table must be square");
  }
  long sum_sq = 0;
  for (std::size_t a = 0; a < s; ++a) {
    if (t.rows[a].size() != s) throw InvariantError("character row has the wrong length");
    if (!(t.rows[a][0] == Cyclotomic(t.degrees[a]))) {
      throw InvariantError("character value at the identity differs from its degree");
    }
    for (const auto& c : t.rows[a]) {
      for (const auto& q : c.coeffs()) {
        if (!is_integer(q)) throw InvariantError("character value is not an algebraic integer");
      }
    }
    sum_sq += t.degrees[a] * t.degrees[a];
  }
  if (sum_sq != order) throw InvariantError("sum of squared degrees differs from |G|");

  std::vector<std::vector<Cyclotomic>> conj(s);
  for (std::size_t a = 0; a < s; ++a) {
    for (const auto& c : t.rows[a]) conj[a].push_back(c.conj());
  }
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a; b < s; ++b) {
      Cyclotomic sum(0);
      for (std::size_t k = 0; k < s; ++k) {
        sum += (t.rows[a][k] * conj[b][k])
                   .scaled(Rational(static_cast<long>(classes[k].elements.size())));
      }
      if (!(sum == Cyclotomic(a == b ? order : 0))) {
        throw InvariantError("row orthogonality fails for rows " + std::to_string(a) + ", " +
                             std::to_string(b));
      }
    }
  }
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t l = k; l < s; ++l) {
      Cyclotomic sum(0);
      for (std::size_t a = 0; a < s; ++a) sum += t.rows[a][k] * conj[a][l];
      Rational expect = k == l ? ratio(order, static_cast<long>(classes[k].elements.size()))
                               : Rational(0);
      if (!(sum == Cyclotomic(expect))) {
        throw InvariantError("column orthogonality fails for classes " + std::to_string(k) +
                             ", " + std::to_string(l));
      }
    }
  }
}

int frobenius_schur(const CharacterTable& table, std::size_t row) {
  const auto& G = *table.group;
  const auto& classes = G.conjugacy_classes();
  Cyclotomic sum(0);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    ElementIndex g = classes[k].representative;
    sum += table.rows[row][G.class_of(G.mul(g, g))].scaled(
        Rational(static_cast<long>(classes[k].elements.size())));
  }
  auto q = sum.scaled(ratio(1, static_cast<long>(G.order()))).is_rational();
  if (!q || !(*q == -1 || *q == 0 || *q == 1)) {
    throw InvariantError("Frobenius-Schur indicator outside {-1, 0, 1}");
  }
  return static_cast<int>(q->get_num().get_si());
}

std::vector<RationalCharacter> galois_orbits(const CharacterTable& table) {
  const std::size_t s = table.size();
  const long e = static_cast<long>(table.exponent);
  std::map<std::vector<RationalVector>, std::size_t> lookup;
  auto key = [](const std::vector<Cyclotomic>& row) {
    std::vector<RationalVector> k;
    for (const auto& c : row) k.push_back(c.coeffs());
    return k;
  };
  for (std::size_t a = 0; a < s; ++a) lookup.emplace(key(table.rows[a]), a);

  std::vector<bool> seen(s, false);
  std::vector<RationalCharacter> out;
  for (std::size_t a = 0; a < s; ++a) {
    if (seen[a]) continue;
    std::vector<std::size_t> members;
    for (long k = 1; k <= e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      std::vector<Cyclotomic> img;
      for (const auto& c : table.rows[a]) img.push_back(c.galois(k));
      auto it = lookup.find(key(img));
      if (it == lookup.end()) throw InvariantError("Galois orbit is not closed in the table");
      if (std::find(members.begin(), members.end(), it->second) == members.end()) {
        members.push_back(it->second);
      }
    }
    std::sort(members.begin(), members.end());
    RationalCharacter rc;
    rc.members = members;
    rc.d = members.size();
    for (std::size_t k = 0; k < s; ++k) {
      Cyclotomic sum(0);
      for (auto m : members) sum += table.rows[m][k];
      auto q = sum.is_rational();
      if (!q) throw InvariantError("orbit sum of a character is not rational");
      rc.summed.push_back(*q);
    }
    for (auto m : members) seen[m] = true;
    out.push_back(std::move(rc));
  }
  return out;
}

long schur_index(const RationalCharacter& rc, std::size_t endo_dim) {
  if (endo_dim == 0 || endo_dim % rc.d != 0) {
    throw InvariantError("endomorphism dimension is not a multiple of the orbit size");
  }
  const std::size_t sq = endo_dim / rc.d;
  const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(sq))));
  if (m * m != sq) throw InvariantError("endomorphism dimension / d is not a perfect square");
  return static_cast<long>(m);
}

}  // namespace jacdecomp
