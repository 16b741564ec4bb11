#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/intlinalg.hpp"

namespace toric {

/// Exact rational linear feasibility by Fourier-Motzkin elimination.
/// Deterministic, no pivoting heuristics; sized for desk-scale systems.

enum class Rel { Ge, Gt, Eq };

struct Constraint {
  QVec coeffs;  // coeffs . x  REL  rhs
  Rat rhs;
  Rel rel;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  Constraint& constraint(std::size_t i) { return constraints_[i]; }

  void add(QVec coeffs, Rat rhs, Rel rel);
  void add_ge(const IntVec& coeffs, const Rat& rhs);
  void add_eq(const IntVec& coeffs, const Rat& rhs);

 private:
  std::size_t vars_;
  std::vector<Constraint> constraints_;
};

bool feasible(const LinearSystem& s);

/// A rational point satisfying every constraint, when one exists.
std::optional<QVec> sample_point(const LinearSystem& s);

struct AffineHull {
  bool feasible = false;
  std::size_t dim = 0;               // dimension of the affine hull
  std::vector<bool> tight;           // per constraint: holds with equality on
                                     // the whole solution set
};

/// Feasibility plus the implicit-equality structure, found by re-testing
/// each inequality as a strict one.
AffineHull affine_hull(const LinearSystem& s);

}  // namespace toric
