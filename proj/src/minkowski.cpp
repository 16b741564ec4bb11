#include "toric/minkowski.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr long kDisplacementDenominator = 1000003;  // fixed prime
constexpr long kDisplacementNumeratorBound = 1000000;

std::vector<std::size_t> weight_support(const Fan& f, std::size_t codim) {
  return f.cones_of_dim(f.lattice().rank - codim);
}

// combined span lattice N_sigma + N_tau
std::vector<IntVec> joint_span(const Cone& sigma, const Cone& tau) {
  std::vector<IntVec> rows = sigma.span_lattice_basis();
  const auto& more = tau.span_lattice_basis();
  rows.insert(rows.end(), more.begin(), more.end());
  return rows;
}

bool spans_ambient(const std::vector<IntVec>& rows, std::size_t n) {
  if (rows.size() < n) return n == 0;
  return rank(IntMatrix::from_rows(rows, n)) == n;
}

// fan cone index -> position within cones_of_dim(dim)
std::map<std::size_t, std::size_t> index_positions(const Fan& f,
                                                   std::size_t dim) {
  std::map<std::size_t, std::size_t> pos;
  auto list = f.cones_of_dim(dim);
  for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
  return pos;
}

}  // namespace

bool is_balanced(const MinkowskiWeight& w) {
  const Fan& f = *w.fan;
  ChowPresentation p = chow_presentation(f, w.codim);
  if (w.values.size() != p.generators.size()) return false;
  for (std::size_t r = 0; r < p.relations.rows(); ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < p.relations.cols(); ++c)
      acc += p.relations(r, c) * w.values[c];
    if (acc != 0) return false;
  }
  return true;
}

MinkowskiWeight unit_weight(const Fan& f) {
  MinkowskiWeight w;
  w.fan = &f;
  w.codim = 0;
  w.values.assign(weight_support(f, 0).size(), 1);
  return w;
}

std::vector<MinkowskiWeight> weight_group(const Fan& f, std::size_t k) {
  if (!f.is_complete())
    throw FanNotComplete("Minkowski weights require a complete fan");
  if (k > f.lattice().rank) throw DegreeOutOfRange("codimension outside 0..n");
  ChowPresentation p = chow_presentation(f, k);
  std::vector<MinkowskiWeight> out;
  for (IntVec& v : kernel_basis(p.relations))
    out.push_back(MinkowskiWeight{&f, k, std::move(v)});
  return out;
}

DisplacementVector pick_generic_displacement(const Fan& f, std::size_t k,
                                             std::size_t l, std::uint64_t seed,
                                             std::size_t max_retries) {
  if (!f.is_complete())
    throw FanNotComplete("displacement vectors require a complete fan");
  const std::size_t n = f.lattice().rank;
  if (k + l > n)
    throw DegreeOutOfRange("total codimension exceeds the fan dimension");

  auto sigmas = f.cones_of_dim(n - k);
  auto taus = f.cones_of_dim(n - l);
  auto gammas = f.cones_of_dim(n - k - l);

  // pairs sharing a face of codimension k+l; only these feed the product
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  {
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (std::size_t g : gammas) {
      const auto& gr = f.cone_rays(g);
      for (std::size_t s : sigmas) {
        const auto& sr = f.cone_rays(s);
        if (!std::includes(sr.begin(), sr.end(), gr.begin(), gr.end())) continue;
        for (std::size_t t : taus) {
          const auto& tr = f.cone_rays(t);
          if (!std::includes(tr.begin(), tr.end(), gr.begin(), gr.end()))
            continue;
          if (seen.emplace(std::make_pair(s, t), true).second)
            pairs.emplace_back(s, t);
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-kDisplacementNumeratorBound,
                                          kDisplacementNumeratorBound);
  std::string last_failure;
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    QVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Rat(num(rng), kDisplacementDenominator);
      v[i].canonicalize();
    }
    DisplacementVector dv{&f, k, l, v, seed, {}};
    bool ok = true;
    for (auto [s, t] : pairs) {
      const Cone& sigma = f.cone(s);
      const Cone& tau = f.cone(t);
      DisplacedIntersection di = intersect_displaced(sigma, tau, v);
      if (di.nonempty) {
        std::size_t expected = sigma.dim() + tau.dim() - n;
        bool transverse = spans_ambient(joint_span(sigma, tau), n);
        if (di.dim != expected || !transverse) {
          std::ostringstream os;
          os << "pair (cone " << s << ", cone " << t << "): intersection dim "
             << di.dim << ", expected " << expected
             << (transverse ? "" : ", span sum rank-deficient");
          last_failure = os.str();
          ok = false;
          break;
        }
      }
      dv.certificate.push_back({s, t, di.nonempty, di.dim});
    }
    if (ok) return dv;
  }
  throw GenericityFailure("no certified displacement after " +
                          std::to_string(max_retries) +
                          " attempts; last failure: " + last_failure);
}

MinkowskiWeight cup_product(const MinkowskiWeight& c, const MinkowskiWeight& d,
                            const DisplacementVector& v) {
  const Fan& f = *c.fan;
  if (c.fan != d.fan || v.fan != c.fan)
    throw UncertifiedDisplacement("weights and displacement live on different fans");
  if (v.k != c.codim || v.l != d.codim)
    throw UncertifiedDisplacement("displacement certified for a different bidegree");
  const std::size_t n = f.lattice().rank;
  const std::size_t k = c.codim, l = d.codim;

  std::map<std::pair<std::size_t, std::size_t>, const PairCertificate*> cert;
  for (const PairCertificate& pc : v.certificate)
    cert[{pc.sigma, pc.tau}] = &pc;

  auto sigma_pos = index_positions(f, n - k);
  auto tau_pos = index_positions(f, n - l);

  auto gammas = f.cones_of_dim(n - k - l);
  MinkowskiWeight out{&f, k + l, IntVec(gammas.size(), 0)};

  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    Int acc = 0;
    for (std::size_t s : f.star(gammas[gi])) {
      if (f.cone(s).dim() != n - k) continue;
      for (std::size_t t : f.star(gammas[gi])) {
        if (f.cone(t).dim() != n - l) continue;
        auto it = cert.find({s, t});
        if (it == cert.end())
          throw UncertifiedDisplacement("pair missing from the certificate");
        if (!it->second->nonempty) continue;
        auto idx = lattice_index(joint_span(f.cone(s), f.cone(t)), n);
        if (!idx)
          throw NonTransversePair(
              "certified pair has infinite lattice index; certification bug");
        acc += *idx * c.values[sigma_pos.at(s)] * d.values[tau_pos.at(t)];
      }
    }
    out.values[gi] = acc;
  }

  if (!is_balanced(out))
    throw std::logic_error("cup product produced an unbalanced weight");
  return out;
}

Int evaluate(const MinkowskiWeight& c, const CycleClass& z) {
  if (z.presentation == nullptr || z.presentation->fan != c.fan ||
      z.presentation->k != c.codim)
    throw DegreeMismatch("weight and cycle class indices do not match");
  Int acc = 0;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    acc += c.values[i] * z.coefficients[i];
  return acc;
}

IntVec expand_in_basis(const MinkowskiWeight& w,
                       const std::vector<MinkowskiWeight>& basis) {
  std::vector<IntVec> cols;
  for (const MinkowskiWeight& b : basis) cols.push_back(b.values);
  IntMatrix m = IntMatrix::from_rows(cols, w.values.size()).transpose();
  auto sol = solve_integer(m, w.values);
  if (!sol)
    throw std::logic_error("balanced weight escaped the weight lattice");
  return *sol;
}

DualityReport duality_report(const Fan& f, std::size_t k) {
  if (!f.is_complete())
    throw FanNotComplete("the duality pairing is stated for complete fans");
  const std::size_t n = f.lattice().rank;
  if (k > n) throw DegreeOutOfRange("degree outside 0..n");

  DualityReport rep;
  rep.k = k;

  // route 1: weights as the saturated kernel of the relations
  auto weights = weight_group(f, k);
  rep.weight_rank = weights.size();

  // route 2: Smith form of the transposed relations; the rows of U beyond
  // the rank are a basis of Hom(A_k, Z) pulled back to the generators
  ChowPresentation p = chow_presentation(f, k);
  SmithDecomposition dec = snf(p.relations.transpose());
  const std::size_t g = p.generators.size();
  const std::size_t r = dec.invariant_factors.size();
  std::vector<IntVec> hom_basis;
  for (std::size_t i = r; i < g; ++i) hom_basis.push_back(dec.u.row(i));
  rep.hom_rank = hom_basis.size();

  rep.chow_k.free_rank = g - r;
  for (const Int& t : dec.invariant_factors)
    if (t > 1) rep.chow_k.torsion.push_back(t);
  rep.chow_codim_k = chow_group(f, n - k);

  std::vector<IntVec> weight_rows;
  for (const auto& w : weights) weight_rows.push_back(w.values);
  bool same_lattice = lattice_equal(weight_rows, hom_basis, g);

  // elementary divisors of the weight basis expressed in the hom basis
  if (same_lattice && !weight_rows.empty()) {
    IntMatrix hb = IntMatrix::from_rows(hom_basis, g).transpose();
    std::vector<IntVec> coords;
    for (const IntVec& w : weight_rows) {
      auto sol = solve_integer(hb, w);
      if (!sol) {
        same_lattice = false;
        break;
      }
      coords.push_back(*sol);
    }
    if (same_lattice)
      rep.pairing_divisors =
          snf(IntMatrix::from_rows(coords, rep.hom_rank)).invariant_factors;
  }

  rep.perfect = rep.weight_rank == rep.hom_rank && same_lattice;
  return rep;
}

}  // namespace toric
