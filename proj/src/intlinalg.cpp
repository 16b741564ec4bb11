#include "toric/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

Int dot(const IntVec& a, const IntVec& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot(const IntVec& a, const QVec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
  return acc;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("from_rows: ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matmul: shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVec IntMatrix::operator*(const IntVec& x) const {
  if (cols_ != x.size()) throw std::invalid_argument("matvec: shape mismatch");
  IntVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : entries_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
}

namespace {

// quotient minimizing |a - q*b|, b > 0
Int div_nearest(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > b) q += 1;
  return q;
}

Int div_floor(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool abs_less(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition d;
  d.u = IntMatrix::identity(m);
  d.u_inv = IntMatrix::identity(m);
  d.v = IntMatrix::identity(n);
  d.v_inv = IntMatrix::identity(n);
  d.s = a;
  IntMatrix& s = d.s;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    s.swap_rows(i, j);
    d.u.swap_rows(i, j);
    d.u_inv.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    s.swap_cols(i, j);
    d.v.swap_cols(i, j);
    d.v_inv.swap_rows(i, j);
  };
  auto row_negate = [&](std::size_t i) {
    s.negate_row(i);
    d.u.negate_row(i);
    d.u_inv.negate_col(i);
  };
  auto row_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    s.add_row_multiple(dst, src, q);
    d.u.add_row_multiple(dst, src, q);
    d.u_inv.add_col_multiple(src, dst, -q);
  };
  auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    s.add_col_multiple(dst, src, q);
    d.v.add_col_multiple(dst, src, q);
    d.v_inv.add_row_multiple(src, dst, -q);
  };

  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // magnitude-minimizing pivot from the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s(i, j) != 0 && (!found || abs_less(s(i, j), s(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      if (s(t, t) < 0) row_negate(t);
      bool restart = false;
      for (std::size_t i = t + 1; i < m && !restart; ++i) {
        if (s(i, t) == 0) continue;
        row_addmul(i, t, -div_nearest(s(i, t), s(t, t)));
        if (s(i, t) != 0) {  // remainder is smaller than the pivot
          row_swap(t, i);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < n && !restart; ++j) {
        if (s(t, j) == 0) continue;
        col_addmul(j, t, -div_nearest(s(t, j), s(t, t)));
        if (s(t, j) != 0) {
          col_swap(t, j);
          restart = true;
        }
      }
      if (restart) continue;
      // pivot row/column are clear; force the pivot to divide the rest
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_addmul(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }

  for (std::size_t t = 0; t < lim; ++t)
    if (s(t, t) != 0) d.invariant_factors.push_back(s(t, t));
  return d;
}

HermiteForm hnf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm f{a, IntMatrix::identity(n)};
  IntMatrix& h = f.h;

  auto col_swap = [&](std::size_t i, std::size_t j) {
    h.swap_cols(i, j);
    f.transform.swap_cols(i, j);
  };
  auto col_negate = [&](std::size_t j) {
    h.negate_col(j);
    f.transform.negate_col(j);
  };
  auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    h.add_col_multiple(dst, src, q);
    f.transform.add_col_multiple(dst, src, q);
  };

  std::size_t j = 0;
  for (std::size_t i = 0; i < m && j < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = j; c < n; ++c)
        if (h(i, c) != 0 && (best == n || abs_less(h(i, c), h(i, best)))) best = c;
      if (best == n) break;  // no pivot in this row
      col_swap(j, best);
      if (h(i, j) < 0) col_negate(j);
      bool clean = true;
      for (std::size_t c = j + 1; c < n; ++c) {
        if (h(i, c) == 0) continue;
        col_addmul(c, j, -div_floor(h(i, c), h(i, j)));
        if (h(i, c) != 0) clean = false;
      }
      if (!clean) continue;
      // reduce the entries left of the pivot into [0, pivot)
      for (std::size_t c = 0; c < j; ++c)
        col_addmul(c, j, -div_floor(h(i, c), h(i, j)));
      ++j;
      break;
    }
  }
  return f;
}

std::size_t rank(const IntMatrix& a) { return snf(a).invariant_factors.size(); }

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const Int& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out;
}

std::vector<IntVec> kernel_basis(const IntMatrix& a) {
  SmithDecomposition d = snf(a);
  const std::size_t r = d.invariant_factors.size();
  std::vector<IntVec> basis;
  for (std::size_t j = r; j < a.cols(); ++j) basis.push_back(d.v.col(j));
  return lattice_canonical_basis(basis, a.cols());
}

AbelianGroup cokernel(const IntMatrix& a) {
  SmithDecomposition d = snf(a);
  AbelianGroup g;
  g.free_rank = a.rows() - d.invariant_factors.size();
  for (const Int& f : d.invariant_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

std::vector<IntVec> saturate(const std::vector<IntVec>& vectors,
                             std::size_t ambient_rank) {
  if (vectors.empty()) return {};
  SmithDecomposition d = snf(IntMatrix::from_rows(vectors, ambient_rank));
  const std::size_t r = d.invariant_factors.size();
  // row space of the input = Q-span of the first r rows of v_inv, which are
  // part of a unimodular matrix and hence a saturated basis
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(d.v_inv.row(i));
  return lattice_canonical_basis(rows, ambient_rank);
}

std::optional<Int> lattice_index(const std::vector<IntVec>& vectors,
                                 std::size_t ambient_rank) {
  if (vectors.size() < ambient_rank) return std::nullopt;
  SmithDecomposition d = snf(IntMatrix::from_rows(vectors, ambient_rank));
  if (d.invariant_factors.size() < ambient_rank) return std::nullopt;
  Int idx = 1;
  for (const Int& f : d.invariant_factors) idx *= f;
  return idx;
}

std::vector<IntVec> lattice_canonical_basis(const std::vector<IntVec>& vectors,
                                            std::size_t ambient_rank) {
  if (vectors.empty()) return {};
  HermiteForm f = hnf(IntMatrix::from_rows(vectors, ambient_rank).transpose());
  std::vector<IntVec> basis;
  for (std::size_t j = 0; j < f.h.cols(); ++j) {
    IntVec c = f.h.col(j);
    if (is_zero(c)) break;  // zero columns trail
    basis.push_back(std::move(c));
  }
  return basis;
}

bool lattice_equal(const std::vector<IntVec>& a, const std::vector<IntVec>& b,
                   std::size_t ambient_rank) {
  return lattice_canonical_basis(a, ambient_rank) ==
         lattice_canonical_basis(b, ambient_rank);
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  SmithDecomposition d = snf(a);
  const std::size_t r = d.invariant_factors.size();
  IntVec c = d.u * rhs;
  IntVec y(a.cols(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (c[i] % d.s(i, i) != 0) return std::nullopt;
      y[i] = c[i] / d.s(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return d.v * y;
}

IntVec gcd_combination(const IntVec& w) {
  IntVec x(w.size(), 0);
  Int g = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (g == 0) {
      g = abs(w[i]);
      x[i] = w[i] > 0 ? 1 : -1;
      continue;
    }
    Int g2, s, t;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               w[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) x[j] *= s;
    x[i] = t;
    g = g2;
  }
  return x;
}

}  // namespace toric
