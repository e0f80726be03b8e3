#include "jacdecomp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "jacdecomp/error.hpp"

namespace jacdecomp {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw UsageError("image list is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) throw UsageError("invalid cycle");
      used[c[i]] = true;
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw UsageError("permutation degree mismatch");
  std::vector<std::uint32_t> im(degree());
  for (std::size_t x = 0; x < degree(); ++x) im[x] = images_[rhs.images_[x]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(degree());
  for (std::size_t x = 0; x < degree(); ++x) im[images_[x]] = static_cast<std::uint32_t>(x);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Permutation r = identity(degree());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    os << '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) os << ',';
      os << y + 1;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(std::vector<ElementIndex> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(ElementIndex g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& rhs) const {
  if (auto c = order() <=> rhs.order(); c != 0) return c;
  return elements_ <=> rhs.elements_;
}

std::size_t SubgroupLattice::index_of(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h);
  if (it == subgroups.end() || !(*it == h)) throw InvariantError("subgroup not in lattice");
  return static_cast<std::size_t>(it - subgroups.begin());
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
                         GroupLabels labels, std::size_t order_bound)
    : degree_(degree),
      name_(std::move(labels.name)),
      order_bound_(order_bound),
      generators_(std::move(generators)),
      preset_(std::move(labels.preset)),
      named_(std::move(labels.named_subgroups)) {
  if (degree_ == 0) throw UsageError("permutation degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw UsageError("generator degree does not match group degree");
  }

  // Closure by breadth-first search over left multiplication by generators.
  std::set<Permutation> found{Permutation::identity(degree_)};
  std::deque<Permutation> queue{Permutation::identity(degree_)};
  while (!queue.empty()) {
    Permutation a = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Permutation b = g * a;
      if (found.insert(b).second) {
        if (found.size() > order_bound_) {
          throw BoundExceeded("group order exceeds the configured bound " +
                              std::to_string(order_bound_));
        }
        queue.push_back(std::move(b));
      }
    }
  }
  elements_.assign(found.begin(), found.end());
  const std::size_t n = elements_.size();

  for (const auto& g : generators_) generator_indices_.push_back(index_of(g));

  // Multiplication table: row(g*a) = L_g o row(a), filled by BFS from the identity.
  table_.assign(n * n, 0);
  std::vector<std::vector<ElementIndex>> left(generators_.size(), std::vector<ElementIndex>(n));
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    for (std::size_t b = 0; b < n; ++b) left[k][b] = index_of(generators_[k] * elements_[b]);
  }
  std::vector<bool> done(n, false);
  for (std::size_t b = 0; b < n; ++b) table_[b] = static_cast<ElementIndex>(b);
  done[0] = true;
  std::deque<ElementIndex> bfs{0};
  while (!bfs.empty()) {
    ElementIndex a = bfs.front();
    bfs.pop_front();
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      ElementIndex ga = left[k][a];
      if (done[ga]) continue;
      done[ga] = true;
      for (std::size_t b = 0; b < n; ++b) table_[ga * n + b] = left[k][table_[a * n + b]];
      bfs.push_back(ga);
    }
  }

  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<ElementIndex>(b);
        break;
      }
    }
  }

  element_order_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    ElementIndex x = static_cast<ElementIndex>(a);
    std::size_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<ElementIndex>(a));
      ++k;
    }
    element_order_[a] = a == 0 ? 1 : k;
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(element_order_[a]));
  }

  // Conjugacy classes: orbits under conjugation by the generators.
  class_of_.assign(n, static_cast<std::size_t>(-1));
  std::vector<ConjugacyClass> raw;
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] != static_cast<std::size_t>(-1)) continue;
    ConjugacyClass c;
    c.representative = static_cast<ElementIndex>(a);
    std::deque<ElementIndex> q{static_cast<ElementIndex>(a)};
    class_of_[a] = raw.size();
    while (!q.empty()) {
      ElementIndex x = q.front();
      q.pop_front();
      c.elements.push_back(x);
      for (auto g : generator_indices_) {
        ElementIndex y = mul(mul(g, x), inv(g));
        if (class_of_[y] == static_cast<std::size_t>(-1)) {
          class_of_[y] = raw.size();
          q.push_back(y);
        }
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    raw.push_back(std::move(c));
  }
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    if (raw[x].elements.size() != raw[y].elements.size()) {
      return raw[x].elements.size() < raw[y].elements.size();
    }
    return raw[x].representative < raw[y].representative;
  });
  std::vector<std::size_t> new_id(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_id[perm[i]] = i;
    classes_.push_back(std::move(raw[perm[i]]));
  }
  for (auto& c : class_of_) c = new_id[c];
}

std::optional<ElementIndex> FiniteGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<ElementIndex>(it - elements_.begin());
}

ElementIndex FiniteGroup::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx) throw UsageError("permutation " + p.cycle_string() + " is not in the group");
  return *idx;
}

ElementIndex FiniteGroup::power(ElementIndex a, long k) const {
  long ord = static_cast<long>(element_order_[a]);
  long e = ((k % ord) + ord) % ord;
  ElementIndex r = identity();
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (auto a : generator_indices_) {
    for (auto b : generator_indices_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Subgroup FiniteGroup::generated_subgroup(const std::vector<ElementIndex>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<ElementIndex> elems{identity()};
  in[identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto g : gens) {
      ElementIndex y = mul(g, elems[i]);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  return Subgroup(std::move(elems));
}

Subgroup FiniteGroup::subgroup_from_generators(const std::vector<Permutation>& gens) const {
  std::vector<ElementIndex> idx;
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw UsageError("subgroup generator has the wrong degree");
    idx.push_back(index_of(g));
  }
  return generated_subgroup(idx);
}

Subgroup FiniteGroup::trivial_subgroup() const { return Subgroup({identity()}); }

Subgroup FiniteGroup::whole_group() const {
  std::vector<ElementIndex> all(order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(std::move(all));
}

bool FiniteGroup::is_subgroup(const Subgroup& h) const {
  if (h.order() == 0 || !h.contains(identity())) return false;
  if (h.elements().back() >= order()) return false;
  for (auto a : h.elements()) {
    if (!h.contains(inv(a))) return false;
    for (auto b : h.elements()) {
      if (!h.contains(mul(a, b))) return false;
    }
  }
  return true;
}

Subgroup FiniteGroup::conjugate(const Subgroup& h, ElementIndex g) const {
  std::vector<ElementIndex> out;
  out.reserve(h.order());
  ElementIndex gi = inv(g);
  for (auto x : h.elements()) out.push_back(mul(mul(g, x), gi));
  return Subgroup(std::move(out));
}

bool FiniteGroup::are_conjugate(const Subgroup& a, const Subgroup& b) const {
  if (a.order() != b.order()) return false;
  std::set<Subgroup> seen{a};
  std::deque<Subgroup> q{a};
  while (!q.empty()) {
    Subgroup h = std::move(q.front());
    q.pop_front();
    if (h == b) return true;
    for (auto g : generator_indices_) {
      Subgroup c = conjugate(h, g);
      if (seen.insert(c).second) q.push_back(std::move(c));
    }
  }
  return false;
}

std::vector<ElementIndex> FiniteGroup::generating_set(const Subgroup& h) const {
  std::vector<ElementIndex> cand = h.elements();
  std::stable_sort(cand.begin(), cand.end(), [&](ElementIndex x, ElementIndex y) {
    return element_order_[x] > element_order_[y];
  });
  std::vector<ElementIndex> gens;
  Subgroup cur = trivial_subgroup();
  for (auto x : cand) {
    if (cur.order() == h.order()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generated_subgroup(gens);
  }
  return gens;
}

std::vector<std::pair<Subgroup, ElementIndex>> FiniteGroup::cyclic_subgroups() const {
  std::vector<std::pair<Subgroup, ElementIndex>> cyclic;
  std::set<Subgroup> seen;
  for (ElementIndex a = 0; a < order(); ++a) {
    Subgroup c = generated_subgroup({a});
    if (seen.insert(c).second) cyclic.emplace_back(std::move(c), a);
  }
  return cyclic;
}

void FiniteGroup::group_into_classes(SubgroupLattice& lat) const {
  const std::size_t none = static_cast<std::size_t>(-1);
  lat.class_of.assign(lat.subgroups.size(), none);
  lat.classes.clear();
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.class_of[i] != none) continue;
    const std::size_t cid = lat.classes.size();
    lat.classes.emplace_back();
    std::deque<std::size_t> q{i};
    lat.class_of[i] = cid;
    while (!q.empty()) {
      std::size_t k = q.front();
      q.pop_front();
      lat.classes[cid].push_back(k);
      for (auto g : generator_indices_) {
        std::size_t c = lat.index_of(conjugate(lat.subgroups[k], g));
        if (lat.class_of[c] == none) {
          lat.class_of[c] = cid;
          q.push_back(c);
        }
      }
    }
    std::sort(lat.classes[cid].begin(), lat.classes[cid].end());
  }
}

const SubgroupLattice& FiniteGroup::subgroup_lattice() const {
  std::call_once(lattice_once_, [this] {
    auto lat = std::make_unique<SubgroupLattice>();
    // Cyclic subgroups first, then joins with cyclic subgroups until nothing new appears.
    const auto cyclic = cyclic_subgroups();
    std::map<Subgroup, std::vector<ElementIndex>> gens_of;
    std::deque<Subgroup> work;
    for (const auto& [c, a] : cyclic) {
      gens_of.emplace(c, a == identity() ? std::vector<ElementIndex>{} : std::vector<ElementIndex>{a});
      work.push_back(c);
    }
    while (!work.empty()) {
      Subgroup h = std::move(work.front());
      work.pop_front();
      const std::vector<ElementIndex> hg = gens_of.at(h);
      for (const auto& [c, a] : cyclic) {
        if (h.contains(a)) continue;
        std::vector<ElementIndex> jg = hg;
        jg.push_back(a);
        Subgroup j = generated_subgroup(jg);
        if (gens_of.emplace(j, jg).second) work.push_back(std::move(j));
      }
    }
    for (auto& [s, g] : gens_of) lat->subgroups.push_back(s);
    group_into_classes(*lat);
    lattice_ = std::move(lat);
  });
  return *lattice_;
}

bool FiniteGroup::adopt_subgroup_lattice(std::vector<Subgroup> subgroups) const {
  auto lat = std::make_unique<SubgroupLattice>();
  lat->subgroups = std::move(subgroups);
  if (!std::is_sorted(lat->subgroups.begin(), lat->subgroups.end()) ||
      std::adjacent_find(lat->subgroups.begin(), lat->subgroups.end()) != lat->subgroups.end()) {
    throw InvariantError("stored subgroup list is not strictly sorted");
  }
  for (const auto& h : lat->subgroups) {
    if (!is_subgroup(h)) throw InvariantError("stored subgroup list contains a non-subgroup");
  }
  const std::set<Subgroup> known(lat->subgroups.begin(), lat->subgroups.end());
  // Completeness: every cyclic subgroup is present and the list is closed under joins with them.
  const auto cyclic = cyclic_subgroups();
  for (const auto& [c, a] : cyclic) {
    if (!known.count(c)) throw InvariantError("stored subgroup list misses a cyclic subgroup");
  }
  for (const auto& h : lat->subgroups) {
    auto gens = generating_set(h);
    for (const auto& [c, a] : cyclic) {
      if (h.contains(a)) continue;
      gens.push_back(a);
      if (!known.count(generated_subgroup(gens))) {
        throw InvariantError("stored subgroup list is not closed under joins");
      }
      gens.pop_back();
    }
  }
  group_into_classes(*lat);
  bool adopted = false;
  std::call_once(lattice_once_, [&] {
    lattice_ = std::move(lat);
    adopted = true;
  });
  return adopted;
}

std::vector<std::vector<ElementIndex>> FiniteGroup::left_cosets(const Subgroup& m) const {
  if (!is_subgroup(m)) throw UsageError("left_cosets: not a subgroup of the group");
  std::vector<bool> used(order(), false);
  std::vector<std::vector<ElementIndex>> cosets;
  for (ElementIndex g = 0; g < order(); ++g) {
    if (used[g]) continue;
    std::vector<ElementIndex> c;
    c.reserve(m.order());
    for (auto h : m.elements()) {
      ElementIndex x = mul(g, h);
      used[x] = true;
      c.push_back(x);
    }
    std::sort(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }
  return cosets;
}

std::optional<std::string> FiniteGroup::conventional_name(const Subgroup& h) const {
  for (const auto& named : named_) {
    Subgroup s = subgroup_from_generators(named.generators);
    if (are_conjugate(s, h)) return named.name;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

constexpr long kMaxParameter = 1000000;

std::vector<std::uint32_t> iota_cycle(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> c;
  for (std::uint32_t i = from; i < to; ++i) c.push_back(i);
  return c;
}

void check_order(unsigned long long order, std::size_t bound, const std::string& name) {
  if (order > bound) {
    throw BoundExceeded("group " + name + " has order " + std::to_string(order) +
                        ", above the configured bound " + std::to_string(bound));
  }
}

unsigned long long factorial_capped(long n, std::size_t bound) {
  unsigned long long f = 1;
  for (long i = 2; i <= n; ++i) {
    f *= static_cast<unsigned long long>(i);
    if (f > 2 * static_cast<unsigned long long>(bound)) return f;
  }
  return f;
}

// Quaternion units as (basis in {1,i,j,k}, sign); point index 2*basis + (sign < 0).
std::pair<int, int> quat_mul(std::pair<int, int> a, std::pair<int, int> b) {
  static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {basis[a.first][b.first], a.second * b.second * sign[a.first][b.first]};
}

Permutation quat_left(int unit) {
  std::vector<std::uint32_t> im(8);
  for (int p = 0; p < 8; ++p) {
    auto r = quat_mul({unit, 1}, {p / 2, p % 2 ? -1 : 1});
    im[static_cast<std::size_t>(p)] = static_cast<std::uint32_t>(2 * r.first + (r.second < 0));
  }
  return Permutation(std::move(im));
}

}  // namespace

GroupPtr make_preset(const PresetId& id, std::size_t order_bound) {
  const std::string& fam = id.family;
  GroupLabels labels;
  labels.preset = id;
  if (fam == "Q8") {
    if (id.parameter) throw UsageError("Q8 takes no parameter");
    check_order(8, order_bound, "Q8");
    labels.name = "Q8";
    Permutation qi = quat_left(1), qj = quat_left(2), qk = quat_left(3);
    Permutation minus = qi * qi;
    labels.named_subgroups = {{"<-1>", {minus}}, {"<i>", {qi}}, {"<j>", {qj}}, {"<ij>", {qk}}};
    return std::make_shared<const FiniteGroup>(8, std::vector<Permutation>{qi, qj},
                                               std::move(labels), order_bound);
  }
  if (fam != "S" && fam != "A" && fam != "D" && fam != "Z") {
    throw UsageError("unknown preset family '" + fam + "'");
  }
  if (!id.parameter) throw UsageError("preset " + fam + " needs a parameter");
  const long n = *id.parameter;
  const long min_n = fam == "D" ? 3 : 1;
  if (n < min_n || n > kMaxParameter) {
    throw UsageError("parameter " + std::to_string(n) + " out of range for preset " + fam);
  }
  const auto deg = static_cast<std::size_t>(n);
  const auto un = static_cast<std::uint32_t>(n);
  labels.name = fam + std::to_string(n);
  std::vector<Permutation> gens;

  if (fam == "S") {
    check_order(factorial_capped(n, order_bound), order_bound, labels.name);
    if (n >= 2) gens.push_back(Permutation::from_cycles(deg, {{0, 1}}));
    if (n >= 3) gens.push_back(Permutation::from_cycles(deg, {iota_cycle(0, un)}));
    if (n == 4) {
      labels.named_subgroups = {
          {"A4", {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})}},
          {"D4", {Permutation::from_cycles(4, {{0, 2}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})}},
          {"Z", {Permutation::from_cycles(4, {{0, 1, 2, 3}})}},
          {"S3", {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})}},
      };
    }
  } else if (fam == "A") {
    unsigned long long f = factorial_capped(n, order_bound);
    check_order(n >= 2 ? f / 2 : 1, order_bound, labels.name);
    if (n >= 3) gens.push_back(Permutation::from_cycles(deg, {{0, 1, 2}}));
    if (n >= 4) {
      gens.push_back(Permutation::from_cycles(deg, {n % 2 ? iota_cycle(0, un) : iota_cycle(1, un)}));
    }
    if (n == 5) {
      labels.named_subgroups = {
          {"A4", {Permutation::from_cycles(5, {{1, 2}, {3, 4}}), Permutation::from_cycles(5, {{2, 3, 4}})}},
          {"D5", {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{1, 4}, {2, 3}})}},
          {"Z5", {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}},
      };
    }
  } else if (fam == "D") {
    check_order(2ULL * static_cast<unsigned long long>(n), order_bound, labels.name);
    std::vector<std::uint32_t> r_im(deg), s_im(deg);
    for (std::uint32_t i = 0; i < un; ++i) {
      r_im[i] = (i + 1) % un;
      s_im[i] = (un - i) % un;
    }
    Permutation r(r_im), s(s_im);
    gens = {r, s};
    labels.named_subgroups = {{"<r>", {r}}, {"<s>", {s}}};
    if (n % 2 == 0 && (n / 2) % 2 == 1 && n / 2 >= 3) {
      const long q = n / 2;
      Permutation rq = r.pow(q), r2 = r.pow(2);
      labels.named_subgroups.push_back({"D" + std::to_string(q), {s, r2}});
      labels.named_subgroups.push_back({"~D" + std::to_string(q), {rq * s, r2}});
      labels.named_subgroups.push_back({"D2", {s, rq}});
    }
  } else {
    check_order(static_cast<unsigned long long>(n), order_bound, labels.name);
    if (n >= 2) gens.push_back(Permutation::from_cycles(deg, {iota_cycle(0, un)}));
  }
  return std::make_shared<const FiniteGroup>(deg, std::move(gens), std::move(labels), order_bound);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
    throw UsageError("expected a nonnegative integer for " + what + ", got '" + s + "'");
  }
  return std::stol(s);
}

std::vector<Permutation> parse_generator_list(const std::string& text, std::size_t degree) {
  std::vector<Permutation> gens;
  if (text.empty()) return gens;
  for (const auto& g : split(text, ';')) {
    std::vector<std::uint32_t> im;
    for (const auto& x : split(g, ',')) {
      im.push_back(static_cast<std::uint32_t>(parse_long(x, "a permutation image")));
    }
    if (im.size() != degree) {
      throw UsageError("generator '" + g + "' has " + std::to_string(im.size()) +
                       " images, expected " + std::to_string(degree));
    }
    gens.emplace_back(std::move(im));
  }
  return gens;
}

}  // namespace

GroupPtr parse_group_spec(const std::string& spec, std::size_t order_bound) {
  if (spec == "Q8") return make_preset({"Q8", std::nullopt}, order_bound);
  auto parts = split(spec, ':');
  if (parts.size() == 2 && (parts[0] == "S" || parts[0] == "A" || parts[0] == "D" || parts[0] == "Z")) {
    return make_preset({parts[0], parse_long(parts[1], "the preset parameter")}, order_bound);
  }
  if (parts.size() == 3 && parts[0] == "perm") {
    long degree = parse_long(parts[1], "the permutation degree");
    if (degree < 1 || degree > 4096) throw UsageError("permutation degree out of range");
    auto gens = parse_generator_list(parts[2], static_cast<std::size_t>(degree));
    GroupLabels labels;
    labels.name = spec;
    return std::make_shared<const FiniteGroup>(static_cast<std::size_t>(degree), std::move(gens),
                                               std::move(labels), order_bound);
  }
  throw UsageError("unrecognized group spec '" + spec + "'");
}

Subgroup parse_subgroup_spec(const FiniteGroup& g, const std::string& spec) {
  if (spec.empty()) throw UsageError("empty subgroup spec");
  if (spec == "1") return g.trivial_subgroup();
  if (spec == "G") return g.whole_group();
  for (const auto& named : g.conventional_subgroups()) {
    if (named.name == spec) return g.subgroup_from_generators(named.generators);
  }
  return g.subgroup_from_generators(parse_generator_list(spec, g.degree()));
}

}  // namespace jacdecomp
