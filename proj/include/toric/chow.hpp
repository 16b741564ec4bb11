#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/intlinalg.hpp"
#include "toric/polyhedra.hpp"

namespace toric {

/// Generators-and-relations presentation of A_k of the toric variety of a
/// fan: generators are the classes of the orbit closures V(sigma) for sigma
/// of dimension n-k, one relation row per pair (tau, m) with dim tau =
/// n-k-1 and m running over a canonical basis of M(tau) = tau-perp ∩ M.
/// The entry of a row at sigma is <m, normal_lattice_vector(tau, sigma)>
/// when tau is a facet of sigma and 0 otherwise.
struct ChowPresentation {
  const Fan* fan = nullptr;
  std::size_t k = 0;                     // Chow dimension index
  std::vector<std::size_t> generators;   // fan cone indices, dim n-k
  IntMatrix relations;                   // rows = relations, cols = generators
};

/// Deterministic by default; a scramble seed re-picks the per-pair normal
/// vector representatives and the M(tau) bases among equally valid choices
/// (the resulting groups must not change — tested, not assumed).
struct PresentationOptions {
  std::optional<std::uint64_t> scramble_seed;
};

ChowPresentation chow_presentation(const Fan& f, std::size_t k,
                                   const PresentationOptions& opt = {});

/// A_k as an abstract group: cokernel of the relation lattice inside
/// Z^generators.
AbelianGroup chow_group(const Fan& f, std::size_t k);

/// Hom(-, Z): torsion dies, the free rank survives.
AbelianGroup hom_to_Z(const AbelianGroup& g);

/// Hom(A_k, Z) computed on the presentation itself: the saturated integer
/// kernel of the relation matrix, with an explicit basis of functionals on
/// the generator classes.
struct HomGroup {
  AbelianGroup group;
  std::vector<IntVec> basis;  // weight vectors orthogonal to every relation
};

HomGroup hom_to_Z(const ChowPresentation& p);

/// Integer combination of the generator classes of a presentation.
struct CycleClass {
  const ChowPresentation* presentation = nullptr;
  IntVec coefficients;
};

/// The class of the i-th generator [V(sigma_i)].
CycleClass generator_class(const ChowPresentation& p, std::size_t i);

}  // namespace toric
