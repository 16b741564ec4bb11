#include "toric/polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/ratlp.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxConeDim = 5;
constexpr std::size_t kMaxConeGenerators = 12;

Int div_ceil(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

QVec to_rational(const IntVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

// rank over Q of a list of integer row vectors
std::size_t q_rank(const std::vector<IntVec>& rows, std::size_t width) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows, width));
}

// coordinates of x with respect to a saturated lattice basis (rows);
// throws if x is outside the spanned lattice
IntVec coords_in_basis(const std::vector<IntVec>& basis, const IntVec& x,
                       std::size_t ambient) {
  IntMatrix bt = IntMatrix::from_rows(basis, ambient).transpose();
  auto sol = solve_integer(bt, x);
  if (!sol) throw std::logic_error("point outside its saturated span lattice");
  return *sol;
}

// canonical representative of w modulo the lattice spanned by the Hermite
// basis rows (pivots strictly increase, so the reduction is stable)
IntVec reduce_mod_lattice(IntVec w, const std::vector<IntVec>& hermite_rows) {
  for (const IntVec& k : hermite_rows) {
    std::size_t p = 0;
    while (p < k.size() && k[p] == 0) ++p;
    if (p == k.size()) continue;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), w[p].get_mpz_t(), k[p].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * k[j];
  }
  return w;
}

}  // namespace

Cone Cone::from_generators(const Lattice& lattice,
                           const std::vector<IntVec>& generators) {
  const std::size_t n = lattice.rank;
  Cone c;
  c.lattice_ = lattice;

  // primitivize and dedupe the input
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> input(lex_less);
  for (const IntVec& g : generators) {
    if (g.size() != n)
      throw std::invalid_argument("generator length does not match the lattice");
    if (is_zero(g)) throw ZeroVector("zero vector among cone generators");
    input.insert(primitive(g));
  }
  std::vector<IntVec> gens(input.begin(), input.end());
  if (gens.size() > kMaxConeGenerators)
    throw LimitExceeded("cone has more than 12 generators");

  c.span_basis_ = saturate(gens, n);
  const std::size_t d = c.span_basis_.size();
  c.dim_ = d;
  if (d > kMaxConeDim)
    throw LimitExceeded("cone dimension exceeds the supported limit of 5");
  c.span_equations_ = kernel_basis(IntMatrix::from_rows(c.span_basis_, n));

  if (d == 0) return c;  // the origin cone

  std::vector<IntVec> coords;
  coords.reserve(gens.size());
  for (const IntVec& g : gens) coords.push_back(coords_in_basis(c.span_basis_, g, n));

  // facet candidates: kernels of (d-1)-subsets of the generators, kept when
  // every generator lies on one side
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> local_normals(lex_less);

  auto consider = [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVec> rows;
    for (std::size_t i : subset) rows.push_back(coords[i]);
    auto ker = kernel_basis(IntMatrix::from_rows(rows, d));
    if (ker.size() != 1) return;
    IntVec u = ker[0];
    bool pos = false, neg = false;
    for (const IntVec& gc : coords) {
      int s = sgn(dot(u, gc));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return;
    if (neg) u = negated(u);
    if (pos || neg) local_normals.insert(u);
  };

  // iterate over all (d-1)-element subsets
  if (d == 1) {
    consider({});
  } else {
    // standard combination walk
    std::vector<std::size_t> comb(d - 1);
    for (std::size_t i = 0; i < d - 1; ++i) comb[i] = i;
    if (gens.size() >= d - 1) {
      for (;;) {
        consider(comb);
        std::size_t i = d - 1;
        while (i > 0) {
          --i;
          if (comb[i] != i + gens.size() - (d - 1)) break;
        }
        if (comb[i] == i + gens.size() - (d - 1)) break;
        ++comb[i];
        for (std::size_t j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
  }

  std::vector<IntVec> normals(local_normals.begin(), local_normals.end());
  if (q_rank(normals, d) != d)
    throw NotStronglyConvex("cone contains a line");

  // extremal rays: generators tight on a rank d-1 set of facets
  std::vector<std::pair<IntVec, IntVec>> extremal;  // (generator, coords)
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<IntVec> tight;
    for (const IntVec& u : normals)
      if (dot(u, coords[i]) == 0) tight.push_back(u);
    if (q_rank(tight, d) == d - 1) extremal.emplace_back(gens[i], coords[i]);
  }
  std::sort(extremal.begin(), extremal.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  for (auto& [g, gc] : extremal) {
    c.generators_.push_back(std::move(g));
    c.gen_coords_.push_back(std::move(gc));
  }

  // lift facet normals to N-coordinates; the canonical representative
  // modulo span_equations is automatically primitive
  IntMatrix b = IntMatrix::from_rows(c.span_basis_, n);
  std::vector<std::pair<IntVec, IntVec>> lifted;  // (normal, local normal)
  for (const IntVec& u : normals) {
    auto w = solve_integer(b, u);
    if (!w) throw std::logic_error("saturated basis failed to lift a covector");
    IntVec wn = reduce_mod_lattice(std::move(*w), c.span_equations_);
    IntVec local = b * wn;
    lifted.emplace_back(std::move(wn), std::move(local));
  }
  std::sort(lifted.begin(), lifted.end(),
            [](const auto& a, const auto& b2) { return lex_less(a.first, b2.first); });
  for (auto& [wn, lu] : lifted) {
    c.facet_normals_.push_back(std::move(wn));
    c.facet_normals_local_.push_back(std::move(lu));
  }
  return c;
}

bool Cone::contains(const QVec& x) const {
  for (const IntVec& e : span_equations_)
    if (dot(e, x) != 0) return false;
  for (const IntVec& u : facet_normals_)
    if (dot(u, x) < 0) return false;
  return true;
}

bool Cone::contains(const IntVec& x) const { return contains(to_rational(x)); }

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  for (const IntVec& u : facet_normals_) {
    std::vector<IntVec> gens;
    for (const IntVec& g : generators_)
      if (dot(u, g) == 0) gens.push_back(g);
    out.push_back(Cone::from_generators(lattice_, gens));
  }
  return out;
}

std::vector<Cone> Cone::faces() const {
  auto cmp = [](const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        lex_less);
  };
  std::map<std::vector<IntVec>, Cone, decltype(cmp)> seen(cmp);
  std::vector<Cone> stack{*this};
  while (!stack.empty()) {
    Cone c = std::move(stack.back());
    stack.pop_back();
    if (seen.count(c.generators_)) continue;
    for (Cone& f : c.facets()) stack.push_back(std::move(f));
    seen.emplace(c.generators_, std::move(c));
  }
  std::vector<Cone> out;
  for (auto& [key, c] : seen) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [&](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return cmp(a.generators_, b.generators_);
  });
  return out;
}

Cone Cone::face_at(const QVec& x) const {
  if (!contains(x)) throw std::invalid_argument("face_at: point outside cone");
  std::vector<const IntVec*> tight;
  for (const IntVec& u : facet_normals_)
    if (dot(u, x) == 0) tight.push_back(&u);
  std::vector<IntVec> gens;
  for (const IntVec& g : generators_) {
    bool on = true;
    for (const IntVec* u : tight)
      if (dot(*u, g) != 0) {
        on = false;
        break;
      }
    if (on) gens.push_back(g);
  }
  return Cone::from_generators(lattice_, gens);
}

bool Cone::has_face(const Cone& tau) const {
  if (!(tau.lattice_ == lattice_)) return false;
  IntVec y(lattice_.rank, 0);
  for (const IntVec& g : tau.generators_)
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += g[i];
  QVec yq = to_rational(y);
  if (!contains(yq)) return false;
  return face_at(yq) == tau;
}

ConeSplit split_affine(const Cone& c) {
  const std::size_t n = c.lattice().rank;
  const std::size_t d = c.dim();
  const std::vector<IntVec>& basis = c.span_lattice_basis();

  ConeSplit out;
  out.torus_rank = n - d;

  // U * B * V = [I_d | 0] for the saturated span basis B; the coordinate
  // change (E^T)^{-1} for E = vstack(B, trailing rows of V^{-1}) is
  // blockdiag(U^T, I) * V^T
  SmithDecomposition dec = snf(IntMatrix::from_rows(basis, n));
  for (const Int& f : dec.invariant_factors)
    if (f != 1) throw std::logic_error("span basis is not saturated");

  IntMatrix block = IntMatrix::identity(n);
  IntMatrix ut = dec.u.transpose();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) block(i, j) = ut(i, j);
  out.change_of_basis = block * dec.v.transpose();

  std::vector<IntVec> reduced_gens;
  for (const IntVec& g : c.generators()) {
    IntVec split = out.change_of_basis * g;
    for (std::size_t i = d; i < n; ++i)
      if (split[i] != 0)
        throw std::logic_error("affine split left a generator outside the span");
    split.resize(d);
    reduced_gens.push_back(std::move(split));
  }
  out.reduced_cone = Cone::from_generators(Lattice{d}, reduced_gens);
  return out;
}

IntVec normal_lattice_vector(const Cone& tau, const Cone& sigma) {
  if (tau.dim() + 1 != sigma.dim() || !sigma.has_face(tau))
    throw NotAFacetPair("arguments are not a facet pair of adjacent dimension");
  const std::size_t n = sigma.lattice().rank;
  const std::size_t d = sigma.dim();

  // tau's span lattice in sigma coordinates
  std::vector<IntVec> t_rows;
  for (const IntVec& b : tau.span_lattice_basis())
    t_rows.push_back(coords_in_basis(sigma.span_lattice_basis(), b, n));
  auto ker = kernel_basis(IntMatrix::from_rows(t_rows, d));
  if (ker.size() != 1)
    throw std::logic_error("facet pair quotient is not rank one");
  IntVec w = ker[0];

  // orient toward sigma
  for (const IntVec& gc : sigma.generator_coords()) {
    int s = sgn(dot(w, gc));
    if (s < 0) w = negated(w);
    if (s != 0) break;
  }

  // start from any lattice point pairing to 1, then walk into the cone
  // along a relative interior direction of tau
  IntVec v = gcd_combination(w);
  IntVec y0(d, 0);
  for (const IntVec& g : tau.generators()) {
    IntVec gc = coords_in_basis(sigma.span_lattice_basis(), g, n);
    for (std::size_t i = 0; i < d; ++i) y0[i] += gc[i];
  }
  Int t = 0;
  for (const IntVec& u : sigma.facet_normals_local()) {
    Int a = dot(u, v), bq = dot(u, y0);
    if (bq == 0) {
      if (a < 0)
        throw std::logic_error("facet walk blocked by an incident facet");
      continue;
    }
    Int need = div_ceil(-a, bq);
    if (need > t) t = need;
  }
  for (std::size_t i = 0; i < d; ++i) v[i] += t * y0[i];

  IntVec v_n =
      IntMatrix::from_rows(sigma.span_lattice_basis(), n).transpose() * v;
  assert(sigma.contains(v_n));
  return v_n;
}

DisplacedIntersection intersect_displaced(const Cone& sigma, const Cone& tau,
                                          const QVec& v) {
  const std::size_t n = sigma.lattice().rank;
  if (!(sigma.lattice() == tau.lattice()) || v.size() != n)
    throw std::invalid_argument("displaced intersection: lattice mismatch");
  LinearSystem sys(n);
  for (const IntVec& u : sigma.facet_normals()) sys.add_ge(u, Rat(0));
  for (const IntVec& e : sigma.span_equations()) sys.add_eq(e, Rat(0));
  for (const IntVec& u : tau.facet_normals()) sys.add_ge(u, dot(u, v));
  for (const IntVec& e : tau.span_equations()) sys.add_eq(e, dot(e, v));
  AffineHull hull = affine_hull(sys);
  return {hull.feasible, hull.dim};
}

Fan Fan::from_maximal_cones(const Lattice& lattice,
                            const std::vector<std::vector<IntVec>>& cones) {
  if (cones.empty()) throw InvalidFan("a fan needs at least one maximal cone");
  const std::size_t n = lattice.rank;

  std::vector<Cone> maxc;
  maxc.reserve(cones.size());
  for (const auto& gens : cones) maxc.push_back(Cone::from_generators(lattice, gens));

  // intersection-is-a-face for every input pair; face-closure inherits the
  // property, so checking the maximal cones suffices
  for (std::size_t i = 0; i < maxc.size(); ++i)
    for (std::size_t j = i + 1; j < maxc.size(); ++j) {
      LinearSystem sys(n);
      for (const Cone* c : {&maxc[i], &maxc[j]}) {
        for (const IntVec& u : c->facet_normals()) sys.add_ge(u, Rat(0));
        for (const IntVec& e : c->span_equations()) sys.add_eq(e, Rat(0));
      }
      AffineHull hull = affine_hull(sys);  // never empty: contains the origin
      LinearSystem relint = sys;
      for (std::size_t r = 0; r < sys.constraints().size(); ++r)
        if (!hull.tight[r]) relint.constraint(r).rel = Rel::Gt;
      auto x = sample_point(relint);
      if (!x) throw std::logic_error("relative interior sampling failed");
      Cone fi = maxc[i].face_at(*x);
      Cone fj = maxc[j].face_at(*x);
      if (!(fi == fj)) {
        std::ostringstream msg;
        msg << "maximal cones " << i << " and " << j
            << " intersect in a set that is not a common face";
        throw InvalidFan(msg.str(), i, j);
      }
    }

  auto cmp = [](const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        lex_less);
  };
  std::map<std::vector<IntVec>, Cone, decltype(cmp)> closure(cmp);
  for (const Cone& c : maxc)
    for (Cone& f : c.faces()) {
      auto key = f.generators();
      closure.emplace(std::move(key), std::move(f));
    }

  Fan fan;
  fan.lattice_ = lattice;
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> rayset(lex_less);
  for (const auto& [key, c] : closure)
    for (const IntVec& g : c.generators()) rayset.insert(g);
  fan.rays_.assign(rayset.begin(), rayset.end());

  auto ray_index = [&](const IntVec& g) {
    auto it = std::lower_bound(fan.rays_.begin(), fan.rays_.end(), g, lex_less);
    return static_cast<std::size_t>(it - fan.rays_.begin());
  };

  std::vector<std::pair<std::vector<std::size_t>, Cone>> indexed;
  for (auto& [key, c] : closure) {
    std::vector<std::size_t> rs;
    for (const IntVec& g : c.generators()) rs.push_back(ray_index(g));
    std::sort(rs.begin(), rs.end());
    indexed.emplace_back(std::move(rs), std::move(c));
  }
  std::sort(indexed.begin(), indexed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [rs, c] : indexed) {
    fan.cone_rays_.push_back(std::move(rs));
    fan.cones_.push_back(std::move(c));
  }

  // maximal = not a proper subset of another cone's ray set
  for (std::size_t i = 0; i < fan.cone_rays_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < fan.cone_rays_.size() && maximal; ++j) {
      if (i == j) continue;
      if (std::includes(fan.cone_rays_[j].begin(), fan.cone_rays_[j].end(),
                        fan.cone_rays_[i].begin(), fan.cone_rays_[i].end()) &&
          fan.cone_rays_[i].size() < fan.cone_rays_[j].size())
        maximal = false;
    }
    if (maximal) fan.maximal_.push_back(i);
  }

  fan.affine_ = fan.maximal_.size() == 1;

  // wall criterion for completeness
  fan.complete_ = true;
  for (std::size_t m : fan.maximal_)
    if (fan.cones_[m].dim() != n) fan.complete_ = false;
  if (fan.complete_ && n >= 1) {
    auto walls = fan.cones_of_dim(n - 1);
    auto tops = fan.cones_of_dim(n);
    for (std::size_t w : walls) {
      std::size_t count = 0;
      for (std::size_t tp : tops)
        if (std::includes(fan.cone_rays_[tp].begin(), fan.cone_rays_[tp].end(),
                          fan.cone_rays_[w].begin(), fan.cone_rays_[w].end()))
          ++count;
      if (count != 2) {
        fan.complete_ = false;
        break;
      }
    }
  }

  fan.smooth_ = true;
  for (const Cone& c : fan.cones_) {
    if (c.generators().size() != c.dim()) {
      fan.smooth_ = false;
      break;
    }
    if (c.dim() == 0) continue;
    auto dec = snf(IntMatrix::from_rows(c.generators(), n));
    for (const Int& f : dec.invariant_factors)
      if (f != 1) {
        fan.smooth_ = false;
        break;
      }
    if (!fan.smooth_) break;
  }
  return fan;
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].dim() == d) out.push_back(i);
  return out;
}

std::vector<std::size_t> Fan::star(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cone_rays_.size(); ++j)
    if (std::includes(cone_rays_[j].begin(), cone_rays_[j].end(),
                      cone_rays_[i].begin(), cone_rays_[i].end()))
      out.push_back(j);
  return out;
}

std::size_t Fan::index_of(const Cone& c) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i] == c) return i;
  return cones_.size();
}

}  // namespace toric
