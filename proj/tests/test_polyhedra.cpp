#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/polyhedra.hpp"
#include "toric/ratlp.hpp"

using namespace toric;

namespace {

IntVec vec(const std::vector<int>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::vector<IntVec> vecs(const std::vector<std::vector<int>>& vs) {
  std::vector<IntVec> out;
  for (const auto& v : vs) out.push_back(vec(v));
  return out;
}

Cone paper_cone() {
  return Cone::from_generators(
      Lattice{3}, vecs({{1, 0, 1}, {0, -1, 1}, {-1, 0, 1}, {0, 1, 1}}));
}

// membership by generators: is x a nonnegative combination?
bool member_by_generators(const Cone& c, const QVec& x) {
  const std::size_t n = c.lattice().rank;
  const auto& gens = c.generators();
  LinearSystem s(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    QVec unit(gens.size(), Rat(0));
    unit[i] = 1;
    s.add(std::move(unit), Rat(0), Rel::Ge);
  }
  for (std::size_t coord = 0; coord < n; ++coord) {
    QVec row(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) row[i] = Rat(gens[i][coord]);
    s.add(std::move(row), x[coord], Rel::Eq);
  }
  return feasible(s);
}

QVec qpoint(const IntVec& num, int den) {
  QVec out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    out[i] = Rat(num[i], den);
    out[i].canonicalize();
  }
  return out;
}

void check_dual_description(const Cone& c, std::mt19937_64& rng,
                            int points = 1000) {
  const std::size_t n = c.lattice().rank;
  std::uniform_int_distribution<int> num(-8, 8), den(1, 5), lam(0, 4);
  for (int trial = 0; trial < points; ++trial) {
    QVec x(n);
    if (trial % 2 == 0 || c.generators().empty()) {
      IntVec raw(n);
      for (Int& v : raw) v = num(rng);
      x = qpoint(raw, den(rng));
    } else {
      // random nonnegative rational combination: lands inside by construction
      for (const IntVec& g : c.generators()) {
        Rat l(lam(rng), den(rng));
        l.canonicalize();
        for (std::size_t i = 0; i < n; ++i) x[i] += l * Rat(g[i]);
      }
    }
    CHECK(c.contains(x) == member_by_generators(c, x));
  }
}

}  // namespace

TEST_CASE("cone canonicalization primitivizes and dedupes") {
  Cone c = Cone::from_generators(Lattice{2}, vecs({{2, 0}}));
  CHECK(c.dim() == 1);
  CHECK(c.generators() == vecs({{1, 0}}));

  Cone dup = Cone::from_generators(Lattice{2}, vecs({{1, 0}, {2, 0}, {3, 0}}));
  CHECK(dup.generators() == vecs({{1, 0}}));

  // interior generators drop out of the canonical description
  Cone quad = Cone::from_generators(Lattice{2}, vecs({{1, 0}, {1, 1}, {0, 1}}));
  CHECK(quad.generators() == vecs({{0, 1}, {1, 0}}));
}

TEST_CASE("cone over the square: dimensions and counts") {
  Cone c = paper_cone();
  CHECK(c.dim() == 3);
  CHECK(c.generators().size() == 4);
  CHECK(c.facet_normals().size() == 4);
  CHECK(c.span_equations().empty());
  CHECK(c.faces().size() == 10);  // 1 + 4 + 4 + 1
}

TEST_CASE("degenerate cone inputs") {
  CHECK_THROWS_AS(Cone::from_generators(Lattice{2}, vecs({{1, 0}, {-1, 0}})),
                  NotStronglyConvex);
  CHECK_THROWS_AS(Cone::from_generators(Lattice{2}, vecs({{0, 0}})), ZeroVector);
  Cone origin = Cone::from_generators(Lattice{2}, {});
  CHECK(origin.dim() == 0);
  auto fs = origin.faces();
  REQUIRE(fs.size() == 1);
  CHECK(fs[0] == origin);
}

TEST_CASE("cone size limits are enforced") {
  std::vector<IntVec> many;
  for (int i = 0; i < 13; ++i) many.push_back(vec({1, i}));
  CHECK_THROWS_AS(Cone::from_generators(Lattice{2}, many), LimitExceeded);
}

TEST_CASE("dual description soundness on sample cones") {
  std::mt19937_64 rng(404);
  check_dual_description(
      Cone::from_generators(Lattice{2}, vecs({{1, 0}, {0, 1}})), rng);
  check_dual_description(paper_cone(), rng);
  check_dual_description(
      Cone::from_generators(Lattice{3}, vecs({{1, 1, 0}})), rng);
  check_dual_description(
      Cone::from_generators(Lattice{3}, vecs({{1, 0, 0}, {1, 2, 0}})), rng);
}

TEST_CASE("faces are closed under faces and dedupe cleanly") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    Cone c = corpus::random_pointed_cone(rng);
    auto faces = c.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
      for (std::size_t j = i + 1; j < faces.size(); ++j)
        CHECK(!(faces[i] == faces[j]));
      for (const Cone& sub : faces[i].faces()) {
        CHECK(std::find(faces.begin(), faces.end(), sub) != faces.end());
        CHECK(c.has_face(sub));
      }
    }
  }
}

TEST_CASE("fan construction: completeness flags match the wall criterion") {
  Fan p1 = corpus::p1();
  CHECK(p1.is_complete());
  CHECK(!p1.is_affine());

  Fan single = corpus::cone_over_square();
  CHECK(single.is_affine());
  CHECK(!single.is_complete());
  CHECK(single.size() == 10);

  Fan a1 = corpus::affine_line();
  CHECK(!a1.is_complete());
  CHECK(a1.is_affine());

  CHECK(corpus::p2().is_complete());
  CHECK(corpus::p3().is_complete());
}

TEST_CASE("fans reject overlapping non-face intersections") {
  try {
    Fan::from_maximal_cones(Lattice{2},
                            {vecs({{1, 0}, {0, 1}}), vecs({{1, 1}, {1, 0}})});
    FAIL("expected InvalidFan");
  } catch (const InvalidFan& e) {
    CHECK(e.first_cone == 0);
    CHECK(e.second_cone == 1);
  }
}

TEST_CASE("fan construction is order independent") {
  auto c1 = vecs({{1, 0}, {0, 1}});
  auto c2 = vecs({{0, 1}, {-1, -1}});
  auto c3 = vecs({{-1, -1}, {1, 0}});
  Fan a = Fan::from_maximal_cones(Lattice{2}, {c1, c2, c3});
  Fan b = Fan::from_maximal_cones(Lattice{2}, {c3, c1, c2});
  std::reverse(c2.begin(), c2.end());
  Fan c = Fan::from_maximal_cones(Lattice{2}, {c2, c3, c1});
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("smoothness detection") {
  CHECK(corpus::p2().is_smooth());
  CHECK(corpus::p3().is_smooth());
  CHECK(corpus::hirzebruch(2).is_smooth());
  CHECK(!corpus::cone_over_square().is_smooth());
  // simplicial but singular: the quadric cone in the plane
  Fan half = Fan::from_maximal_cones(Lattice{2}, {vecs({{1, 0}, {1, 2}})});
  CHECK(!half.is_smooth());
}

TEST_CASE("split_affine on the stated examples") {
  ConeSplit ray = split_affine(Cone::from_generators(Lattice{2}, vecs({{1, 0}})));
  CHECK(ray.torus_rank == 1);
  CHECK(ray.reduced_cone.lattice().rank == 1);
  CHECK(ray.reduced_cone.generators() == vecs({{1}}));

  ConeSplit full = split_affine(paper_cone());
  CHECK(full.torus_rank == 0);
  CHECK(full.reduced_cone.dim() == 3);

  ConeSplit torus = split_affine(Cone::from_generators(Lattice{2}, {}));
  CHECK(torus.torus_rank == 2);
  CHECK(torus.reduced_cone.lattice().rank == 0);
}

TEST_CASE("split_affine invariants on random cones") {
  std::mt19937_64 rng(1213);
  for (int trial = 0; trial < 25; ++trial) {
    Cone c = corpus::random_pointed_cone(rng);
    const std::size_t n = c.lattice().rank;
    ConeSplit s = split_affine(c);
    CHECK(s.torus_rank + s.reduced_cone.lattice().rank == n);
    CHECK(s.reduced_cone.dim() == s.reduced_cone.lattice().rank);
    CHECK(oracle::unimodular(s.change_of_basis));
    // generators land in the reduced coordinates extended by zeros
    for (const IntVec& g : c.generators()) {
      IntVec image = s.change_of_basis * g;
      IntVec head(image.begin(), image.begin() + s.reduced_cone.lattice().rank);
      for (std::size_t i = s.reduced_cone.lattice().rank; i < n; ++i)
        CHECK(image[i] == 0);
      CHECK(s.reduced_cone.contains(head));
    }
  }
}

TEST_CASE("normal_lattice_vector on the stated examples") {
  Cone origin = Cone::from_generators(Lattice{2}, {});
  Cone ray = Cone::from_generators(Lattice{2}, vecs({{1, 0}}));
  CHECK(normal_lattice_vector(origin, ray) == vec({1, 0}));

  Cone tau = Cone::from_generators(Lattice{2}, vecs({{1, 0}}));
  Cone sigma = Cone::from_generators(Lattice{2}, vecs({{1, 0}, {1, 2}}));
  IntVec v = normal_lattice_vector(tau, sigma);
  CHECK(sigma.contains(v));
  // the class of v together with N_tau must span the whole of N_sigma
  std::vector<IntVec> stacked = tau.span_lattice_basis();
  stacked.push_back(v);
  CHECK(lattice_equal(stacked, sigma.span_lattice_basis(), 2));

  CHECK_THROWS_AS(normal_lattice_vector(ray, origin), NotAFacetPair);
  CHECK_THROWS_AS(normal_lattice_vector(sigma, sigma), NotAFacetPair);
}

TEST_CASE("normal_lattice_vector generates the quotient on every corpus pair") {
  for (const auto& [name, fan] : corpus::full_corpus()) {
    const std::size_t n = fan.lattice().rank;
    for (std::size_t ti = 0; ti < fan.size(); ++ti)
      for (std::size_t si : fan.star(ti)) {
        const Cone& tau = fan.cone(ti);
        const Cone& sigma = fan.cone(si);
        if (sigma.dim() != tau.dim() + 1) continue;
        IntVec v = normal_lattice_vector(tau, sigma);
        CHECK(sigma.contains(v));
        std::vector<IntVec> stacked = tau.span_lattice_basis();
        stacked.push_back(v);
        CHECK(lattice_equal(stacked, sigma.span_lattice_basis(), n));
      }
  }
}

TEST_CASE("cones_of_dim and star") {
  Fan p2 = corpus::p2();
  CHECK(p2.cones_of_dim(1).size() == 3);
  CHECK(p2.cones_of_dim(3).empty());
  std::size_t origin = p2.cones_of_dim(0).at(0);
  CHECK(p2.star(origin).size() == p2.size());
}

TEST_CASE("intersect_displaced on the stated examples") {
  Cone quad = Cone::from_generators(Lattice{2}, vecs({{1, 0}, {0, 1}}));
  auto same = intersect_displaced(quad, quad, {Rat(0), Rat(0)});
  CHECK(same.nonempty);
  CHECK(same.dim == 2);

  Cone ex = Cone::from_generators(Lattice{2}, vecs({{1, 0}}));
  Cone ey = Cone::from_generators(Lattice{2}, vecs({{0, 1}}));
  auto pt = intersect_displaced(ex, ey, {Rat(1), Rat(-1)});
  CHECK(pt.nonempty);
  CHECK(pt.dim == 0);

  auto off = intersect_displaced(ex, ex, {Rat(0), Rat(1)});
  CHECK(!off.nonempty);
}
