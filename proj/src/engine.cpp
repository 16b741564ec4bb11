#include "toric/engine.hpp"

#include "toric/errors.hpp"

namespace toric {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ConeTheorem:
      return "CONE_THEOREM";
    case Provenance::Minkowski:
      return "MINKOWSKI";
    case Provenance::Duality:
      return "DUALITY";
    case Provenance::Unsupported:
      return "UNSUPPORTED";
  }
  return "UNSUPPORTED";
}

CohomologyReport cohomology(const Fan& f) {
  const std::size_t n = f.lattice().rank;
  CohomologyReport rep;
  rep.lattice_rank = n;

  if (f.is_affine()) {
    ConeSplit split = split_affine(f.cone(f.maximal_cones().front()));
    rep.torus_rank = split.torus_rank;
    rep.op_k0 = "Z";
    if (split.torus_rank == 0) {
      rep.equivariant = "Sym(X(T)) of rank " + std::to_string(n);
      rep.equivariant_k0 = "R(T)";
    }
    for (std::size_t k = 0; k <= n; ++k) {
      DegreeEntry e;
      e.k = k;
      e.group = k == 0 ? AbelianGroup{1, {}} : AbelianGroup{};
      e.provenance = Provenance::ConeTheorem;
      rep.degrees.push_back(std::move(e));
    }
    return rep;
  }

  if (f.is_complete()) {
    for (std::size_t k = 0; k <= n; ++k) {
      DegreeEntry e;
      e.k = k;
      e.group = AbelianGroup{weight_group(f, k).size(), {}};
      e.provenance = Provenance::Minkowski;
      rep.degrees.push_back(std::move(e));
    }
    return rep;
  }

  rep.unsupported_regime = true;
  for (std::size_t k = 0; k <= n; ++k) {
    DegreeEntry e;
    e.k = k;
    if (k == 0) e.group = AbelianGroup{1, {}};  // A^0 = Z for any variety
    e.provenance = Provenance::Unsupported;
    rep.degrees.push_back(std::move(e));
  }
  return rep;
}

DualityFailureRow duality_failure_demo(const Fan& f, std::size_t k) {
  if (!f.is_affine())
    throw NotAffine("the duality failure demo runs on affine fans");
  if (k > f.lattice().rank) throw DegreeOutOfRange("degree outside 0..n");

  DualityFailureRow row;
  row.k = k;
  row.chow = chow_group(f, k);
  row.hom = hom_to_Z(row.chow);
  row.cone_value = k == 0 ? AbelianGroup{1, {}} : AbelianGroup{};
  row.disagreement = !(row.hom == row.cone_value);
  return row;
}

}  // namespace toric
