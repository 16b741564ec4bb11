#include "toric/chow.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

// unimodular square matrix from a short walk of elementary operations
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t step = 0; step < 3 * n + 2; ++step) {
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
        break;
    }
  }
  return m;
}

// another representative of the same quotient generator: translate by a
// lattice vector of tau while staying inside sigma
IntVec scramble_representative(const IntVec& v, const Cone& tau,
                               const Cone& sigma, std::mt19937_64& rng) {
  const auto& basis = tau.span_lattice_basis();
  if (basis.empty()) return v;
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int attempt = 0; attempt < 8; ++attempt) {
    IntVec cand = v;
    bool moved = false;
    for (const IntVec& b : basis) {
      int c = coeff(rng);
      if (c == 0) continue;
      moved = true;
      for (std::size_t i = 0; i < cand.size(); ++i) cand[i] += c * b[i];
    }
    if (moved && sigma.contains(cand)) return cand;
  }
  return v;
}

}  // namespace

ChowPresentation chow_presentation(const Fan& f, std::size_t k,
                                   const PresentationOptions& opt) {
  const std::size_t n = f.lattice().rank;
  if (k > n) throw DegreeOutOfRange("chow degree outside 0..n");

  ChowPresentation p;
  p.fan = &f;
  p.k = k;
  p.generators = f.cones_of_dim(n - k);

  std::mt19937_64 rng(opt.scramble_seed.value_or(0));
  const bool scramble = opt.scramble_seed.has_value();

  std::vector<IntVec> rows;
  if (k < n) {
    for (std::size_t ti : f.cones_of_dim(n - k - 1)) {
      const Cone& tau = f.cone(ti);
      // M(tau): saturated covectors vanishing on tau
      std::vector<IntVec> mt = kernel_basis(
          IntMatrix::from_rows(tau.generators(), n));
      if (scramble && !mt.empty()) {
        IntMatrix rot = random_unimodular(mt.size(), rng);
        IntMatrix changed = rot * IntMatrix::from_rows(mt, n);
        mt = changed.row_list();
      }

      // one normal vector per generator cone having tau as a facet
      std::vector<std::optional<IntVec>> normals(p.generators.size());
      for (std::size_t col = 0; col < p.generators.size(); ++col) {
        std::size_t si = p.generators[col];
        const auto& tr = f.cone_rays(ti);
        const auto& sr = f.cone_rays(si);
        if (!std::includes(sr.begin(), sr.end(), tr.begin(), tr.end()))
          continue;
        IntVec v = normal_lattice_vector(tau, f.cone(si));
        if (scramble) v = scramble_representative(v, tau, f.cone(si), rng);
        normals[col] = std::move(v);
      }

      for (const IntVec& m : mt) {
        IntVec row(p.generators.size(), 0);
        for (std::size_t col = 0; col < row.size(); ++col)
          if (normals[col]) row[col] = dot(m, *normals[col]);
        rows.push_back(std::move(row));
      }
    }
  }
  p.relations = IntMatrix::from_rows(rows, p.generators.size());
  return p;
}

AbelianGroup chow_group(const Fan& f, std::size_t k) {
  ChowPresentation p = chow_presentation(f, k);
  // relations span the image lattice inside Z^generators
  return cokernel(p.relations.transpose());
}

AbelianGroup hom_to_Z(const AbelianGroup& g) { return {g.free_rank, {}}; }

HomGroup hom_to_Z(const ChowPresentation& p) {
  HomGroup h;
  h.basis = kernel_basis(p.relations);
  h.group = AbelianGroup{h.basis.size(), {}};
  return h;
}

CycleClass generator_class(const ChowPresentation& p, std::size_t i) {
  if (i >= p.generators.size())
    throw std::out_of_range("generator index outside the presentation");
  CycleClass z;
  z.presentation = &p;
  z.coefficients.assign(p.generators.size(), 0);
  z.coefficients[i] = 1;
  return z;
}

}  // namespace toric
