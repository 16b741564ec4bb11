#pragma once

// Independent check routines for the test suites.  Everything here avoids
// the library's normal-form code paths: determinants are Bareiss
// fraction-free, invariant factors come from minor gcds.

#include <random>
#include <vector>

#include "toric/intlinalg.hpp"

namespace oracle {

using toric::Int;
using toric::IntMatrix;
using toric::IntVec;

// fraction-free Bareiss determinant
inline Int det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: square only");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

inline bool unimodular(const IntMatrix& a) {
  Int d = det(a);
  return d == 1 || d == -1;
}

// gcd of all k x k minors, via explicit enumeration (small matrices only)
inline Int minor_gcd(const IntMatrix& a, std::size_t k) {
  const std::size_t m = a.rows(), n = a.cols();
  if (k == 0) return 1;
  if (k > m || k > n) return 0;
  std::vector<std::size_t> ri(k), ci(k);
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  Int g = 0;
  auto advance = [](std::vector<std::size_t>& idx, std::size_t limit) {
    std::size_t k2 = idx.size();
    std::size_t i = k2;
    while (i > 0) {
      --i;
      if (idx[i] != i + limit - k2) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(ri[i], ci[j]);
      Int d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (advance(ci, n));
  } while (advance(ri, m));
  return g;
}

// invariant factors by the minor-gcd characterization
inline std::vector<Int> minor_gcd_factors(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Int g = minor_gcd(a, k);
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim,
                               int entry_bound) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t step = 0; step < 4 * n + 2; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0:
        m.swap_rows(i, j);
        break;
      case 1:
        m.negate_row(i);
        break;
      default:
        if (i != j) m.add_row_multiple(i, j, Int(coeff(rng)));
    }
  }
  return m;
}

}  // namespace oracle
