#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/intlinalg.hpp"

using namespace toric;

namespace {

IntMatrix mat(const std::vector<std::vector<int>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

IntVec vec(const std::vector<int>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

void check_snf_contract(const IntMatrix& a) {
  SmithDecomposition d = snf(a);
  CHECK(d.u * a * d.v == d.s);
  CHECK(oracle::unimodular(d.u));
  CHECK(oracle::unimodular(d.v));
  CHECK(d.u * d.u_inv == IntMatrix::identity(a.rows()));
  CHECK(d.v * d.v_inv == IntMatrix::identity(a.cols()));
  // diagonal shape, positive pivots, divisibility chain
  for (std::size_t i = 0; i < d.s.rows(); ++i)
    for (std::size_t j = 0; j < d.s.cols(); ++j)
      if (i != j) CHECK(d.s(i, j) == 0);
  for (std::size_t i = 0; i < d.invariant_factors.size(); ++i) {
    CHECK(d.invariant_factors[i] >= 1);
    if (i > 0)
      CHECK(d.invariant_factors[i] % d.invariant_factors[i - 1] == 0);
  }
  CHECK(d.invariant_factors == oracle::minor_gcd_factors(a));
}

void check_hnf_contract(const IntMatrix& a) {
  HermiteForm f = hnf(a);
  CHECK(f.h == a * f.transform);
  CHECK(oracle::unimodular(f.transform));
  // canonical column profile
  std::vector<std::size_t> pivots;
  bool trailing_zero = false;
  for (std::size_t j = 0; j < f.h.cols(); ++j) {
    std::size_t p = f.h.rows();
    for (std::size_t i = 0; i < f.h.rows(); ++i)
      if (f.h(i, j) != 0) {
        p = i;
        break;
      }
    if (p == f.h.rows()) {
      trailing_zero = true;
      continue;
    }
    CHECK(!trailing_zero);  // zero columns only at the end
    if (!pivots.empty()) CHECK(p > pivots.back());
    pivots.push_back(p);
    CHECK(f.h(p, j) > 0);
    for (std::size_t c = j + 1; c < f.h.cols(); ++c) CHECK(f.h(p, c) == 0);
    for (std::size_t c = 0; c < j; ++c) {
      CHECK(f.h(p, c) >= 0);
      CHECK(f.h(p, c) < f.h(p, j));
    }
  }
}

}  // namespace

TEST_CASE("snf on the stated examples") {
  SmithDecomposition id2 = snf(IntMatrix::identity(2));
  CHECK(id2.s == IntMatrix::identity(2));
  CHECK(id2.invariant_factors == std::vector<Int>{1, 1});

  SmithDecomposition d = snf(mat({{2, 4}, {6, 8}}));
  CHECK(d.invariant_factors == std::vector<Int>{2, 4});

  // ray matrix of the cone over the square
  SmithDecomposition rays =
      snf(mat({{1, 0, 1}, {0, -1, 1}, {-1, 0, 1}, {0, 1, 1}}));
  CHECK(rays.invariant_factors == std::vector<Int>{1, 1, 2});
}

TEST_CASE("snf handles empty and degenerate shapes") {
  check_snf_contract(IntMatrix(0, 0));
  check_snf_contract(IntMatrix(0, 3));
  check_snf_contract(IntMatrix(3, 0));
  check_snf_contract(IntMatrix(2, 5));  // zero matrix
}

TEST_CASE("snf agrees with the minor-gcd oracle on random matrices") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 300; ++trial)
    check_snf_contract(oracle::random_matrix(rng, 4, 5));
}

TEST_CASE("hnf on the stated examples") {
  CHECK(hnf(IntMatrix::identity(3)).h == IntMatrix::identity(3));
  CHECK(hnf(mat({{0}, {3}})).h == mat({{0}, {3}}));
  CHECK(hnf(mat({{2, 1}, {0, 1}})).h == mat({{1, 0}, {1, 2}}));
}

TEST_CASE("hnf contract over all small matrices") {
  // exhaustive 2x2 with entries in [-2, 2]
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) check_hnf_contract(mat({{a, b}, {c, d}}));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial)
    check_hnf_contract(oracle::random_matrix(rng, 4, 5));
}

TEST_CASE("hnf output is deterministic for equal column lattices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 3, 4);
    IntMatrix u = oracle::random_unimodular(rng, a.cols());
    CHECK(hnf(a).h == hnf(a * u).h);
  }
}

TEST_CASE("kernel_basis: examples") {
  auto full = kernel_basis(IntMatrix(1, 3));  // zero map
  REQUIRE(full.size() == 3);
  CHECK(lattice_equal(full, IntMatrix::identity(3).row_list(), 3));

  auto k = kernel_basis(mat({{1, 1, 1}}));
  REQUIRE(k.size() == 2);
  for (const IntVec& w : k) CHECK(dot(w, vec({1, 1, 1})) == 0);
  // saturation: the basis matrix has unit invariant factors
  auto factors = snf(IntMatrix::from_rows(k, 3)).invariant_factors;
  CHECK(factors == std::vector<Int>{1, 1});

  // balancing matrix of the three rays of the plane fan, codim 1
  auto rays = kernel_basis(mat({{1, 0, -1}, {0, 1, -1}}));
  REQUIRE(rays.size() == 1);
  CHECK(rays[0] == vec({1, 1, 1}));
}

TEST_CASE("kernel_basis properties on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 5);
    auto k = kernel_basis(a);
    CHECK(k.size() == a.cols() - rank(a));
    for (const IntVec& w : k) CHECK(is_zero(a * w));
    if (!k.empty()) {
      auto factors = snf(IntMatrix::from_rows(k, a.cols())).invariant_factors;
      for (const Int& f : factors) CHECK(f == 1);
    }
  }
}

TEST_CASE("cokernel: examples") {
  CHECK(cokernel(mat({{2}})) == AbelianGroup{0, {2}});
  // the transposed ray matrix of the cone over the square, as a map Z^3 -> Z^4
  CHECK(cokernel(mat({{1, 0, 1}, {0, -1, 1}, {-1, 0, 1}, {0, 1, 1}})) ==
        AbelianGroup{1, {2}});
  CHECK(cokernel(IntMatrix(2, 0)) == AbelianGroup{2, {}});
}

TEST_CASE("cokernel is invariant under unimodular changes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 5);
    IntMatrix l = oracle::random_unimodular(rng, a.rows());
    IntMatrix r = oracle::random_unimodular(rng, a.cols());
    CHECK(cokernel(a) == cokernel(l * a * r));
  }
}

TEST_CASE("saturate: examples and idempotence") {
  CHECK(saturate({vec({2, 0})}, 2) == std::vector<IntVec>{vec({1, 0})});
  auto sat = saturate({vec({1, 1}), vec({1, -1})}, 2);
  CHECK(lattice_equal(sat, IntMatrix::identity(2).row_list(), 2));
  CHECK(snf(mat({{1, 1}, {1, -1}})).invariant_factors == std::vector<Int>{1, 2});
  CHECK(saturate({}, 3).empty());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 4);
    auto once = saturate(a.row_list(), a.cols());
    CHECK(saturate(once, a.cols()) == once);
    if (!once.empty()) {
      auto factors =
          snf(IntMatrix::from_rows(once, a.cols())).invariant_factors;
      for (const Int& f : factors) CHECK(f == 1);
    }
  }
}

TEST_CASE("lattice_index: examples and determinant agreement") {
  CHECK(lattice_index({vec({1, 0}), vec({0, 1})}, 2) == Int(1));
  CHECK(lattice_index({vec({1, 0}), vec({0, 2})}, 2) == Int(2));
  CHECK(!lattice_index({vec({1, 0})}, 2).has_value());

  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 60) {
    IntMatrix a = oracle::random_matrix(rng, 3, 4);
    if (a.rows() != a.cols() || a.rows() == 0) continue;
    Int d = oracle::det(a);
    auto idx = lattice_index(a.row_list(), a.cols());
    if (d == 0) {
      CHECK(!idx.has_value());
    } else {
      CHECK(idx == abs(d));
    }
    ++done;
  }
}

TEST_CASE("solve_integer finds exact solutions when they exist") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 3);
    IntVec x(a.cols());
    for (Int& c : x) c = entry(rng);
    IntVec rhs = a * x;
    auto sol = solve_integer(a, rhs);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == rhs);
  }
  CHECK(!solve_integer(mat({{2}}), vec({1})).has_value());
}

TEST_CASE("canonical lattice bases are basis independent") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 4);
    if (a.rows() == 0) continue;
    auto canon = lattice_canonical_basis(a.row_list(), a.cols());
    IntMatrix u = oracle::random_unimodular(rng, a.rows());
    CHECK(lattice_canonical_basis((u * a).row_list(), a.cols()) == canon);
  }
}

TEST_CASE("gcd_combination pairs to the content") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntVec w(4);
    for (Int& c : w) c = entry(rng);
    if (is_zero(w)) continue;
    CHECK(dot(w, gcd_combination(w)) == content(w));
  }
}

TEST_CASE("abelian group formatting is canonical") {
  CHECK(AbelianGroup{}.to_string() == "0");
  CHECK(AbelianGroup{1, {}}.to_string() == "Z");
  CHECK(AbelianGroup{3, {}}.to_string() == "Z^3");
  CHECK(AbelianGroup{1, {2}}.to_string() == "Z/2 + Z");
  CHECK(AbelianGroup{0, {2, 4}}.to_string() == "Z/2 + Z/4");
}
