#include "toric/ratlp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

void LinearSystem::add(QVec coeffs, Rat rhs, Rel rel) {
  if (coeffs.size() != vars_)
    throw std::invalid_argument("constraint width mismatch");
  constraints_.push_back({std::move(coeffs), std::move(rhs), rel});
}

void LinearSystem::add_ge(const IntVec& coeffs, const Rat& rhs) {
  QVec q(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) q[i] = Rat(coeffs[i]);
  add(std::move(q), rhs, Rel::Ge);
}

void LinearSystem::add_eq(const IntVec& coeffs, const Rat& rhs) {
  QVec q(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) q[i] = Rat(coeffs[i]);
  add(std::move(q), rhs, Rel::Eq);
}

namespace {

// a . x >= b (strict when `strict`), stored with the full variable width
struct Ineq {
  QVec a;
  Rat b;
  bool strict;
};

// scale so the coefficient/rhs entries are coprime integers; canonical up to
// the (fixed, positive) scale, which lets duplicates collapse
void normalize(Ineq& q) {
  Int lcm = 1;
  for (const Rat& c : q.a)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.b.get_den().get_mpz_t());
  Int g = 0;
  for (const Rat& c : q.a) {
    Int num = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Int bn = q.b.get_num() * (lcm / q.b.get_den());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), bn.get_mpz_t());
  if (g == 0) return;
  Rat scale(lcm, g);
  scale.canonicalize();
  for (Rat& c : q.a) c *= scale;
  q.b *= scale;
}

struct Key {
  std::vector<Rat> a;
  Rat b;
  bool operator<(const Key& o) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], o.a[i]);
      if (c != 0) return c < 0;
    }
    return cmp(b, o.b) < 0;
  }
};

// drop duplicates (keeping the stronger strictness) and constant rows that
// already hold; returns false on a plainly contradictory constant row
bool compact(std::vector<Ineq>& list) {
  std::map<Key, bool> seen;
  std::vector<Ineq> out;
  for (Ineq& q : list) {
    bool constant = true;
    for (const Rat& c : q.a)
      if (c != 0) {
        constant = false;
        break;
      }
    if (constant) {
      int s = sgn(q.b);
      if (s > 0 || (s == 0 && q.strict)) return false;
      continue;
    }
    normalize(q);
    Key k{q.a, q.b};
    auto it = seen.find(k);
    if (it == seen.end()) {
      seen.emplace(k, q.strict);
      out.push_back(std::move(q));
    } else if (q.strict && !it->second) {
      it->second = true;
      for (Ineq& kept : out)
        if (kept.a == k.a && kept.b == k.b) kept.strict = true;
    }
  }
  list = std::move(out);
  return true;
}

struct Substitution {
  std::size_t var;
  QVec coeffs;  // x_var = coeffs . x + offset
  Rat offset;
};

struct Elimination {
  bool feasible = false;
  std::size_t n = 0;
  std::vector<Substitution> subs;           // from the equality phase
  std::vector<std::size_t> order;           // inequality elimination order
  std::vector<std::vector<Ineq>> stages;    // system before eliminating order[i]
};

constexpr std::size_t kMaxConstraints = 200000;

Elimination eliminate(const LinearSystem& s) {
  Elimination e;
  e.n = s.vars();

  // equality phase: Gaussian substitution
  std::vector<Constraint> eqs;
  std::vector<Ineq> ineqs;
  for (const Constraint& c : s.constraints()) {
    if (c.rel == Rel::Eq)
      eqs.push_back(c);
    else
      ineqs.push_back({c.coeffs, c.rhs, c.rel == Rel::Gt});
  }

  std::vector<bool> eliminated(e.n, false);
  for (std::size_t row = 0; row < eqs.size(); ++row) {
    Constraint& eq = eqs[row];
    std::size_t p = e.n;
    for (std::size_t j = 0; j < e.n; ++j)
      if (!eliminated[j] && eq.coeffs[j] != 0) {
        p = j;
        break;
      }
    if (p == e.n) {
      if (eq.rhs != 0) return e;  // 0 = nonzero
      continue;
    }
    // x_p = (rhs - sum_{j != p} a_j x_j) / a_p
    Substitution sub;
    sub.var = p;
    sub.coeffs.assign(e.n, Rat(0));
    Rat ap = eq.coeffs[p];
    for (std::size_t j = 0; j < e.n; ++j)
      if (j != p && eq.coeffs[j] != 0) sub.coeffs[j] = -eq.coeffs[j] / ap;
    sub.offset = eq.rhs / ap;
    eliminated[p] = true;

    auto apply = [&](QVec& a, Rat& b) {
      Rat c = a[p];
      if (c == 0) return;
      a[p] = 0;
      for (std::size_t j = 0; j < e.n; ++j)
        if (sub.coeffs[j] != 0) a[j] += c * sub.coeffs[j];
      b -= c * sub.offset;
    };
    for (std::size_t r2 = row + 1; r2 < eqs.size(); ++r2)
      apply(eqs[r2].coeffs, eqs[r2].rhs);
    for (Ineq& q : ineqs) apply(q.a, q.b);
    for (Substitution& prev : e.subs) {
      Rat c = prev.coeffs[p];
      if (c == 0) continue;
      prev.coeffs[p] = 0;
      for (std::size_t j = 0; j < e.n; ++j)
        if (sub.coeffs[j] != 0) prev.coeffs[j] += c * sub.coeffs[j];
      prev.offset += c * sub.offset;
    }
    e.subs.push_back(std::move(sub));
  }

  if (!compact(ineqs)) return e;

  // Fourier-Motzkin on the remaining variables, highest index first
  for (std::size_t v = e.n; v-- > 0;) {
    if (eliminated[v]) continue;
    bool used = false;
    for (const Ineq& q : ineqs)
      if (q.a[v] != 0) {
        used = true;
        break;
      }
    e.order.push_back(v);
    e.stages.push_back(ineqs);
    if (!used) continue;

    std::vector<Ineq> lower, upper, rest;
    for (Ineq& q : ineqs) {
      int sg = sgn(q.a[v]);
      if (sg > 0)
        lower.push_back(std::move(q));  // x_v >= (b - a'.x)/a_v
      else if (sg < 0)
        upper.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    for (const Ineq& lo : lower)
      for (const Ineq& up : upper) {
        // combine lo and up to cancel x_v
        Ineq nw;
        nw.a.assign(e.n, Rat(0));
        Rat cl = lo.a[v], cu = -up.a[v];
        for (std::size_t j = 0; j < e.n; ++j)
          nw.a[j] = lo.a[j] * cu + up.a[j] * cl;
        nw.b = lo.b * cu + up.b * cl;
        nw.strict = lo.strict || up.strict;
        rest.push_back(std::move(nw));
        if (rest.size() > kMaxConstraints)
          throw std::runtime_error("feasibility system exceeded size budget");
      }
    ineqs = std::move(rest);
    if (!compact(ineqs)) return e;
  }
  e.feasible = true;
  return e;
}

}  // namespace

bool feasible(const LinearSystem& s) { return eliminate(s).feasible; }

std::optional<QVec> sample_point(const LinearSystem& s) {
  Elimination e = eliminate(s);
  if (!e.feasible) return std::nullopt;

  QVec x(e.n, Rat(0));
  // stages were recorded in elimination order; assign in reverse
  for (std::size_t si = e.order.size(); si-- > 0;) {
    std::size_t v = e.order[si];
    const std::vector<Ineq>& stage = e.stages[si];
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const Ineq& q : stage) {
      if (q.a[v] == 0) continue;
      Rat bound = q.b;
      for (std::size_t j = 0; j < e.n; ++j)
        if (j != v && q.a[j] != 0) bound -= q.a[j] * x[j];
      bound /= q.a[v];
      if (sgn(q.a[v]) > 0) {  // x_v >= bound
        if (!has_lo || bound > lo || (bound == lo && q.strict)) {
          lo = bound;
          lo_strict = q.strict;
          has_lo = true;
        }
      } else {  // x_v <= bound
        if (!has_hi || bound < hi || (bound == hi && q.strict)) {
          hi = bound;
          hi_strict = q.strict;
          has_hi = true;
        }
      }
    }
    if (has_lo && has_hi) {
      x[v] = lo == hi ? lo : (lo + hi) / 2;
    } else if (has_lo) {
      x[v] = lo_strict ? lo + 1 : lo;
    } else if (has_hi) {
      x[v] = hi_strict ? hi - 1 : hi;
    }
  }
  // replay the equality substitutions, most recent first
  for (std::size_t i = e.subs.size(); i-- > 0;) {
    const Substitution& sub = e.subs[i];
    Rat val = sub.offset;
    for (std::size_t j = 0; j < e.n; ++j)
      if (sub.coeffs[j] != 0) val += sub.coeffs[j] * x[j];
    x[sub.var] = val;
  }
  return x;
}

AffineHull affine_hull(const LinearSystem& s) {
  AffineHull h;
  if (!feasible(s)) return h;
  h.feasible = true;
  h.tight.assign(s.constraints().size(), false);

  std::vector<QVec> eq_rows;
  for (std::size_t i = 0; i < s.constraints().size(); ++i) {
    const Constraint& c = s.constraints()[i];
    if (c.rel == Rel::Eq) {
      h.tight[i] = true;
      eq_rows.push_back(c.coeffs);
      continue;
    }
    if (c.rel == Rel::Gt) continue;  // feasible strict rows are never tight
    LinearSystem probe = s;
    probe.constraint(i).rel = Rel::Gt;
    if (!feasible(probe)) {
      h.tight[i] = true;
      eq_rows.push_back(c.coeffs);
    }
  }

  // dim = vars - rank of the implied equality system
  std::size_t rank = 0;
  std::vector<QVec> rows = eq_rows;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < s.vars(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    used[piv] = true;
    ++rank;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == piv || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[piv][col];
      for (std::size_t j = col; j < s.vars(); ++j)
        rows[r][j] -= f * rows[piv][j];
    }
  }
  h.dim = s.vars() - rank;
  return h;
}

}  // namespace toric
