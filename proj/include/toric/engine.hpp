#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/chow.hpp"
#include "toric/intlinalg.hpp"
#include "toric/minkowski.hpp"
#include "toric/polyhedra.hpp"

namespace toric {

/// How a cohomology degree was settled.
enum class Provenance { ConeTheorem, Minkowski, Duality, Unsupported };

const char* provenance_name(Provenance p);

struct DegreeEntry {
  std::size_t k = 0;
  std::optional<AbelianGroup> group;  // absent when the degree is unsupported
  Provenance provenance = Provenance::Unsupported;
};

/// Per-degree operational Chow cohomology of a toric variety, with the
/// route that produced each answer.  Affine fans carry the torus factor
/// rank and the symbolic equivariant/K-theory answers; A^0 = Z always.
struct CohomologyReport {
  std::size_t lattice_rank = 0;
  std::vector<DegreeEntry> degrees;  // k = 0..n
  bool unsupported_regime = false;

  std::optional<std::size_t> torus_rank;       // affine route only
  std::optional<std::string> op_k0;            // "Z" on affine fans
  std::optional<std::string> equivariant;      // "Sym(X(T)) of rank n"
  std::optional<std::string> equivariant_k0;   // "R(T)"
};

/// Dispatcher: affine fans reduce through the cone splitting (A^0 = Z and
/// A^k = 0 for k >= 1), complete fans go through Minkowski-weight ranks,
/// anything else is reported honestly as unsupported beyond degree 0.
CohomologyReport cohomology(const Fan& f);

/// Hom(A_k, Z) next to the affine value of A^k_op at the same degree; the
/// two disagree in general on non-complete varieties, and the flag records
/// exactly that.
struct DualityFailureRow {
  std::size_t k = 0;
  AbelianGroup chow;        // A_k itself
  AbelianGroup hom;         // Hom(A_k, Z)
  AbelianGroup cone_value;  // A^k_op by the affine reduction
  bool disagreement = false;
};

DualityFailureRow duality_failure_demo(const Fan& f, std::size_t k);

}  // namespace toric
