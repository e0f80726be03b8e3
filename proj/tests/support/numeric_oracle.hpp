#pragma once

// Floating-point character table from the class algebra (Burnside): eigenvectors of a random
// combination of class-multiplication matrices give the central characters. Independent of the
// modular construction used by the library; only meant for small groups.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "jacdecomp/chartab.hpp"
#include "jacdecomp/perm.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Table = std::vector<std::vector<Complex>>;

inline Table numeric_character_table(const jacdecomp::FiniteGroup& g, unsigned seed = 7) {
  const auto& classes = g.conjugacy_classes();
  const std::size_t s = classes.size();
  // a[j](k, l) = #{x in C_j : x^-1 g_l in C_k}, so that omega(C_j) w = a[j] w.
  std::vector<Eigen::MatrixXd> a(s, Eigen::MatrixXd::Zero(s, s));
  for (std::size_t l = 0; l < s; ++l) {
    const auto gl = classes[l].representative;
    for (std::size_t j = 0; j < s; ++j) {
      for (auto x : classes[j].elements) {
        a[j](g.class_of(g.mul(g.inv(x), gl)), l) += 1.0;
      }
    }
  }
  // omega_j omega_k = sum_l c_{jkl} omega_l, with c_{jkl} = a[j](k, l).
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(s, s);
  for (std::size_t j = 0; j < s; ++j) m += dist(rng) * a[j];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  const auto vecs = es.eigenvectors();
  Table out;
  for (std::size_t c = 0; c < s; ++c) {
    std::vector<Complex> w(s);
    for (std::size_t k = 0; k < s; ++k) w[k] = vecs(static_cast<Eigen::Index>(k), c);
    const Complex w0 = w[0];
    for (auto& x : w) x /= w0;
    double norm = 0;
    for (std::size_t k = 0; k < s; ++k) {
      norm += std::norm(w[k]) / static_cast<double>(classes[k].elements.size());
    }
    const double d = std::sqrt(static_cast<double>(g.order()) / norm);
    std::vector<Complex> chi(s);
    for (std::size_t k = 0; k < s; ++k) {
      chi[k] = d * w[k] / static_cast<double>(classes[k].elements.size());
    }
    out.push_back(std::move(chi));
  }
  return out;
}

/// True if every exact row matches a distinct numeric row within tol.
inline bool tables_match(const jacdecomp::CharacterTable& exact, const Table& numeric,
                         double tol = 1e-6) {
  if (exact.rows.size() != numeric.size()) return false;
  std::vector<bool> used(numeric.size(), false);
  for (const auto& row : exact.rows) {
    bool found = false;
    for (std::size_t c = 0; c < numeric.size() && !found; ++c) {
      if (used[c]) continue;
      double err = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        err = std::max(err, std::abs(row[k].to_complex() - numeric[c][k]));
      }
      if (err < tol) {
        used[c] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
