#pragma once

#include <cstddef>
#include <vector>

#include "toric/intlinalg.hpp"

namespace toric {

/// The ambient lattice N = Z^rank; the dual lattice M is implicit.
struct Lattice {
  std::size_t rank = 0;
  bool operator==(const Lattice&) const = default;
};

/// Strongly convex rational polyhedral cone, canonicalized on construction:
/// generators are the primitive extremal rays in lex order, the dual
/// description (facet normals plus span equations) is derived by exact
/// double description.  Identity is the sorted generator set.
class Cone {
 public:
  Cone() = default;  // the origin cone of the rank-0 lattice

  /// Canonical cone from any generating set.  Throws ZeroVector on a zero
  /// input vector, NotStronglyConvex when the cone contains a line, and
  /// LimitExceeded past the documented size limits (dim <= 5, <= 12
  /// generators).
  static Cone from_generators(const Lattice& lattice,
                              const std::vector<IntVec>& generators);

  const Lattice& lattice() const { return lattice_; }
  std::size_t dim() const { return dim_; }

  /// Primitive extremal rays, lex sorted.  Empty for the origin cone.
  const std::vector<IntVec>& generators() const { return generators_; }
  /// Primitive facet inequality covectors (membership on the span).
  const std::vector<IntVec>& facet_normals() const { return facet_normals_; }
  /// Canonical basis of the covectors vanishing on the cone's span.
  const std::vector<IntVec>& span_equations() const { return span_equations_; }
  /// Canonical basis of N_sigma = span(sigma) ∩ N.
  const std::vector<IntVec>& span_lattice_basis() const { return span_basis_; }
  /// Generators written in span_lattice_basis coordinates.
  const std::vector<IntVec>& generator_coords() const { return gen_coords_; }
  /// Facet normals as covectors on the span coordinates.
  const std::vector<IntVec>& facet_normals_local() const {
    return facet_normals_local_;
  }

  bool contains(const QVec& x) const;
  bool contains(const IntVec& x) const;

  /// All faces including the origin cone and the cone itself, sorted by
  /// (dim, generators).
  std::vector<Cone> faces() const;
  std::vector<Cone> facets() const;

  /// Smallest face containing a point of the cone.
  Cone face_at(const QVec& x) const;
  /// True when tau is a face of this cone.
  bool has_face(const Cone& tau) const;

  bool operator==(const Cone& o) const {
    return lattice_ == o.lattice_ && generators_ == o.generators_;
  }

 private:
  Lattice lattice_;
  std::size_t dim_ = 0;
  std::vector<IntVec> generators_;
  std::vector<IntVec> gen_coords_;
  std::vector<IntVec> span_basis_;
  std::vector<IntVec> span_equations_;
  std::vector<IntVec> facet_normals_;
  std::vector<IntVec> facet_normals_local_;
};

/// The decomposition behind X(sigma) = X(sigma_bar) x T_0: a full-dimensional
/// reduced cone in a lattice of rank dim(sigma), the rank of the torus
/// factor, and the unimodular coordinate change realizing the product.
struct ConeSplit {
  Cone reduced_cone;
  std::size_t torus_rank = 0;
  IntMatrix change_of_basis;  // maps N to the split coordinates
};

ConeSplit split_affine(const Cone& c);

/// A lattice point of sigma whose class generates N_sigma / N_tau = Z, for
/// tau a facet of sigma.  Deterministic; any generating representative is
/// equally valid downstream.
IntVec normal_lattice_vector(const Cone& tau, const Cone& sigma);

struct DisplacedIntersection {
  bool nonempty = false;
  std::size_t dim = 0;  // dimension of the affine hull when nonempty
};

/// Exact feasibility and dimension of sigma ∩ (tau + v).
DisplacedIntersection intersect_displaced(const Cone& sigma, const Cone& tau,
                                          const QVec& v);

/// Finite fan: cones closed under faces, pairwise intersecting in common
/// faces.  Rays are primitive and lex sorted; cones are stored as sorted ray
/// index sets in lex order, so equal fans compare equal structurally.
class Fan {
 public:
  Fan() = default;  // the empty fan of the rank-0 lattice

  /// Face-closes the given maximal cones and validates that every pair of
  /// input cones meets in a common face (which implies the property for the
  /// whole closure).  Throws InvalidFan with the offending input pair.
  static Fan from_maximal_cones(const Lattice& lattice,
                                const std::vector<std::vector<IntVec>>& cones);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  std::size_t size() const { return cones_.size(); }
  const Cone& cone(std::size_t i) const { return cones_[i]; }
  const std::vector<std::size_t>& cone_rays(std::size_t i) const {
    return cone_rays_[i];
  }
  const std::vector<std::size_t>& maximal_cones() const { return maximal_; }

  /// Indices of the cones of exact dimension d, in canonical order.
  std::vector<std::size_t> cones_of_dim(std::size_t d) const;
  /// Indices of the cones containing cone i.
  std::vector<std::size_t> star(std::size_t i) const;
  /// Index of an equal cone, or size() when absent.
  std::size_t index_of(const Cone& c) const;

  bool is_complete() const { return complete_; }
  bool is_affine() const { return affine_; }
  bool is_smooth() const { return smooth_; }

  bool operator==(const Fan& o) const {
    return lattice_ == o.lattice_ && rays_ == o.rays_ &&
           cone_rays_ == o.cone_rays_;
  }

 private:
  Lattice lattice_;
  std::vector<IntVec> rays_;
  std::vector<std::vector<std::size_t>> cone_rays_;
  std::vector<Cone> cones_;
  std::vector<std::size_t> maximal_;
  bool complete_ = false;
  bool affine_ = false;
  bool smooth_ = false;
};

}  // namespace toric
