#pragma once

#include <cstdint>
#include <vector>

#include "toric/chow.hpp"
#include "toric/intlinalg.hpp"
#include "toric/polyhedra.hpp"

namespace toric {

/// Integer weight on the codimension-k cones of a complete fan, balanced:
/// orthogonal to every relation row of the degree-k Chow presentation.
/// Values are indexed like cones_of_dim(n - codim) in canonical order.
struct MinkowskiWeight {
  const Fan* fan = nullptr;
  std::size_t codim = 0;
  IntVec values;
};

bool is_balanced(const MinkowskiWeight& w);

/// The codimension-0 weight that is 1 on every maximal cone (the ring unit).
MinkowskiWeight unit_weight(const Fan& f);

/// Canonical basis of the group of codimension-k Minkowski weights: the
/// saturated integer kernel of the degree-k Chow relation matrix.  Its rank
/// equals the free rank of A_k.  Throws FanNotComplete otherwise.
std::vector<MinkowskiWeight> weight_group(const Fan& f, std::size_t k);

struct PairCertificate {
  std::size_t sigma = 0;  // fan cone index, codim k
  std::size_t tau = 0;    // fan cone index, codim l
  bool nonempty = false;
  std::size_t dim = 0;
};

/// Rational displacement vector certified generic for a (k, l) cup product:
/// for every pair of cones of codimensions k and l sharing a face of
/// codimension k+l, sigma ∩ (tau + v) is empty or has dimension exactly
/// dim sigma + dim tau - n with N_sigma + N_tau of full rank.
struct DisplacementVector {
  const Fan* fan = nullptr;
  std::size_t k = 0, l = 0;
  QVec v;
  std::uint64_t seed = 0;
  std::vector<PairCertificate> certificate;
};

/// Seeded search for a certified displacement; the coordinates are
/// fractions with |numerator| <= 10^6 over the fixed prime 1000003.
/// Throws GenericityFailure with the last failing pair after max_retries.
DisplacementVector pick_generic_displacement(const Fan& f, std::size_t k,
                                             std::size_t l, std::uint64_t seed,
                                             std::size_t max_retries = 32);

/// Fan-displacement cup product: for each cone gamma of codimension k+l,
///   (c∪d)(gamma) = sum over sigma, tau containing gamma with
///   sigma ∩ (tau+v) nonempty of [N : N_sigma + N_tau] c(sigma) d(tau).
/// The result is balanced (checked) and independent of the certified v
/// (a tested property, not an assumption).
MinkowskiWeight cup_product(const MinkowskiWeight& c, const MinkowskiWeight& d,
                            const DisplacementVector& v);

/// Evaluation pairing <c, z> = sum of c(sigma) z(sigma); well defined on
/// classes because weights annihilate the relations.
Int evaluate(const MinkowskiWeight& c, const CycleClass& z);

/// Expand a balanced weight in a weight-group basis (exact, unique).
IntVec expand_in_basis(const MinkowskiWeight& w,
                       const std::vector<MinkowskiWeight>& basis);

/// Two independent routes to Hom(A_k, Z) compared: the weight-kernel route
/// and the Smith-form route on the transposed relations.  `perfect` records
/// that both have the same rank and span the same saturated lattice (the
/// elementary divisors of the change of basis are all 1).
struct DualityReport {
  std::size_t k = 0;
  std::size_t weight_rank = 0;
  std::size_t hom_rank = 0;
  AbelianGroup chow_k;          // A_k
  AbelianGroup chow_codim_k;    // A_{n-k}
  std::vector<Int> pairing_divisors;
  bool perfect = false;
};

DualityReport duality_report(const Fan& f, std::size_t k);

}  // namespace toric
