#include "newt/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "newt/polytope.hpp"

namespace newt {

namespace {

constexpr std::uint64_t kSat = ~0ull;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSat / b) return kSat;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r = sat_mul(r, b);
  return r;
}

// One unordered summand pair of the Newton polytope, prepared for scanning.
// Candidates are enumerated on the side with fewer lattice points.
struct PairPlan {
  std::vector<Exponent> qpoints;  // enumeration side, lex sorted
  std::vector<bool> qvertex;
  std::vector<Exponent> rpoints;  // cofactor side, lex sorted
  std::uint32_t ext_bound = 1;    // floor(deg p / min(deg left, deg right))
};

std::vector<bool> vertex_mask(const std::vector<Exponent>& pts,
                              const std::vector<Exponent>& verts) {
  std::vector<bool> mask(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i)
    mask[i] = std::binary_search(verts.begin(), verts.end(), pts[i]);
  return mask;
}

// Summand pairs are a function of the polytope alone; cache them because a
// census asks about the same support once per member.
std::shared_ptr<const std::vector<PairPlan>> plan_pairs(const LatticePolytope& c,
                                                        long long deg) {
  static std::map<std::vector<Exponent>, std::shared_ptr<const std::vector<PairPlan>>> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(c.vertices());
    if (it != memo.end()) return it->second;
  }

  auto plans = std::make_shared<std::vector<PairPlan>>();
  std::set<std::pair<std::vector<Exponent>, std::vector<Exponent>>> seen;
  for (const auto& d : enumerate_decompositions(c, true)) {
    auto key = std::minmax(d.left.vertices(), d.right.vertices());
    if (!seen.insert(key).second) continue;
    auto lp = d.left.lattice_points();
    auto rp = d.right.lattice_points();
    bool left_enum = lp.size() != rp.size()
                         ? lp.size() < rp.size()
                         : (d.left.vertices().size() != d.right.vertices().size()
                                ? d.left.vertices().size() < d.right.vertices().size()
                                : d.left.vertices() < d.right.vertices());
    PairPlan plan;
    if (left_enum) {
      plan.qpoints = std::move(lp);
      plan.qvertex = vertex_mask(plan.qpoints, d.left.vertices());
      plan.rpoints = std::move(rp);
    } else {
      plan.qpoints = std::move(rp);
      plan.qvertex = vertex_mask(plan.qpoints, d.right.vertices());
      plan.rpoints = std::move(lp);
    }
    long long mind = std::min(d.left.degree(), d.right.degree());
    plan.ext_bound = static_cast<std::uint32_t>(deg / std::max(1ll, mind));
    plans->push_back(std::move(plan));
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  auto [it, inserted] = memo.emplace(c.vertices(), std::move(plans));
  (void)inserted;
  return it->second;
}

// Number of candidate factors on the enumeration side over a field of size q:
// the lex-min vertex coefficient is pinned to 1, the other vertices are
// nonzero, interior points are free.
std::uint64_t level_count(const PairPlan& plan, std::uint64_t q) {
  std::uint64_t count = 1;
  for (std::size_t i = 1; i < plan.qpoints.size(); ++i)
    count = sat_mul(count, plan.qvertex[i] ? q - 1 : q);
  return count;
}

// Given a candidate q (lex-min coefficient 1), solve for the cofactor on
// rpoints in lex order and verify the product exactly.
std::optional<Polynomial> solve_cofactor(const Polynomial& target, const Polynomial& q,
                                         const std::vector<Exponent>& rpoints) {
  const FieldCtx& f = target.ctx();
  const Exponent& v0 = q.terms().begin()->first;
  std::map<Exponent, std::uint32_t> solved;
  for (const auto& k : rpoints) {
    std::uint32_t val = target.coeff(exp_add(v0, k));
    bool first = true;
    for (const auto& [qe, qc] : q.terms()) {
      if (first) {  // the pinned v0 term contributes the unknown itself
        first = false;
        continue;
      }
      Exponent e(k.size());
      bool ok = true;
      for (std::size_t s = 0; s < k.size(); ++s) {
        long long v = static_cast<long long>(v0[s]) + k[s] - qe[s];
        if (v < 0) {
          ok = false;
          break;
        }
        e[s] = static_cast<std::uint32_t>(v);
      }
      if (!ok) continue;
      auto it = solved.find(e);
      if (it == solved.end()) continue;
      val = f.sub(val, f.mul(qc, it->second));
    }
    if (val) solved.emplace(k, val);
  }
  Polynomial r(f, target.n());
  for (const auto& [e, c] : solved) r.add_term(e, c);
  if (poly_mul(q, r) != target) return std::nullopt;
  return r;
}

}  // namespace

ReducibilityAnswer is_absolutely_reducible(const Polynomial& p, const SearchLimits& lim) {
  if (p.is_zero()) throw std::invalid_argument("reducibility of the zero polynomial");
  const FieldCtx& f = p.ctx();

  if (p.is_monomial()) {
    const auto& [e, c] = *p.terms().begin();
    if (e.total() < 2)
      throw std::invalid_argument("monomial of degree below 2 has no meaningful answer");
    std::size_t t = 0;
    while (e[t] == 0) ++t;
    Exponent unit(p.n());
    unit[t] = 1;
    Polynomial left(f, p.n());
    left.add_term(unit, 1);
    return {true, FactorWitness{left, monomial_quotient(p, unit), 1}};
  }

  Support supp = support_of(p);
  Exponent inf = inf_point(supp);
  if (!inf.is_zero()) {
    Polynomial left(f, p.n());
    left.add_term(inf, 1);
    return {true, FactorWitness{left, monomial_quotient(p, inf), 1}};
  }

  auto c = LatticePolytope::hull(supp);
  long long deg = c.degree();
  auto plans = plan_pairs(c, deg);
  std::uint32_t max_ext = lim.max_ext ? lim.max_ext : static_cast<std::uint32_t>(deg);

  // Upfront budget: every (pair, extension level) candidate count, so a run
  // that starts always finishes. Levels whose field would be too large to
  // build make a negative answer unreliable; remember them.
  std::uint64_t q0 = f.q();
  std::uint64_t budget = 0;
  bool unreachable_level = false;
  for (const auto& plan : *plans) {
    std::uint64_t qm = 1;
    for (std::uint32_t m = 1; m <= std::min(max_ext, plan.ext_bound); ++m) {
      qm = sat_mul(qm, q0);
      if (static_cast<std::uint64_t>(f.k()) * m > 20 || qm > (1ull << 20)) {
        unreachable_level = true;
        break;
      }
      budget += level_count(plan, qm);
      if (budget > lim.cap)
        throw inconclusive_error("candidate budget " + std::to_string(budget) +
                                 " exceeds cap " + std::to_string(lim.cap));
    }
  }

  for (std::uint32_t m = 1; m <= max_ext; ++m) {
    if (static_cast<std::uint64_t>(f.k()) * m > 20) break;
    if (sat_pow(q0, m) > (1ull << 20)) break;
    const FieldCtx& ext = FieldCtx::get(f.p(), f.k() * m);
    std::uint64_t q = ext.q();
    Polynomial target = m == 1 ? p : embed_poly(p, ext);

    for (const auto& plan : *plans) {
      if (m > plan.ext_bound) continue;
      std::size_t npos = plan.qpoints.size();
      // digits[i] indexes the coefficient at qpoints[i+1]
      std::vector<std::uint32_t> digits(npos - 1, 0);
      for (std::size_t i = 0; i < digits.size(); ++i)
        if (plan.qvertex[i + 1]) digits[i] = 1;
      bool exhausted = false;
      while (!exhausted) {
        Polynomial q_cand(ext, p.n());
        q_cand.add_term(plan.qpoints[0], 1);
        for (std::size_t i = 0; i < digits.size(); ++i)
          if (digits[i]) q_cand.add_term(plan.qpoints[i + 1], digits[i]);
        if (auto r = solve_cofactor(target, q_cand, plan.rpoints))
          return {true, FactorWitness{q_cand, *r, m}};
        std::size_t i = digits.size();
        exhausted = true;
        while (i-- > 0) {
          if (digits[i] + 1 < q) {
            ++digits[i];
            exhausted = false;
            break;
          }
          digits[i] = plan.qvertex[i + 1] ? 1 : 0;
        }
      }
    }
  }

  if (unreachable_level)
    throw inconclusive_error("field extension required exceeds the representable size");
  return {false, std::nullopt};
}

std::uint64_t census_count(const Support& s, const FieldCtx& field) {
  return sat_pow(field.q() - 1, s.size() - 1);
}

// Member #idx of the census: coefficient 1 at the lex-min exponent, the rest
// the digits of idx in base q-1 (values 1..q-1), last position fastest.
Polynomial census_member(const Support& s, const FieldCtx& field, std::uint64_t idx) {
  Polynomial p(field, s.n());
  std::uint64_t base = field.q() - 1;
  std::size_t free = s.size() - 1;
  std::vector<std::uint32_t> digits(free, 1);
  for (std::size_t i = free; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(1 + idx % base);
    idx /= base;
  }
  p.add_term(s.points()[0], 1);
  for (std::size_t i = 0; i < free; ++i) p.add_term(s.points()[i + 1], digits[i]);
  return p;
}

namespace {

std::uint64_t census_size(const Support& s, const FieldCtx& field, std::uint64_t cap) {
  std::uint64_t total = census_count(s, field);
  if (total > cap)
    throw inconclusive_error("census of " + std::to_string(total) +
                             " members exceeds cap " + std::to_string(cap));
  return total;
}

}  // namespace

Census reducibility_census(const Support& s, const FieldCtx& field, const SearchLimits& lim) {
  std::uint64_t total = census_size(s, field, lim.cap);
  if (total_degree(s) < 2) return {CensusStatus::Empty, 0, total};
  if (s.size() == 1) return {CensusStatus::All, total, total};  // monomials of degree >= 2

  unsigned jobs = std::max(1u, lim.jobs);
  std::uint64_t reducible = 0;
  if (jobs == 1 || total < 2 * jobs) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (is_absolutely_reducible(census_member(s, field, i), lim).reducible) ++reducible;
  } else {
    std::vector<std::uint64_t> counts(jobs, 0);
    std::vector<std::exception_ptr> errs(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        std::uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
        try {
          for (std::uint64_t i = lo; i < hi; ++i)
            if (is_absolutely_reducible(census_member(s, field, i), lim).reducible)
              ++counts[w];
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (auto c : counts) reducible += c;
  }

  CensusStatus st = reducible == 0
                        ? CensusStatus::Empty
                        : (reducible == total ? CensusStatus::All : CensusStatus::Proper);
  return {st, reducible, total};
}

std::optional<Polynomial> first_irreducible_member(const Support& s, const FieldCtx& field,
                                                   const SearchLimits& lim) {
  std::uint64_t total = census_size(s, field, lim.cap);
  if (total_degree(s) < 2) return census_member(s, field, 0);
  if (s.size() == 1) return std::nullopt;
  for (std::uint64_t i = 0; i < total; ++i) {
    Polynomial p = census_member(s, field, i);
    if (!is_absolutely_reducible(p, lim).reducible) return p;
  }
  return std::nullopt;
}

bool ostrowski_check(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("zero factor");
  auto prod = LatticePolytope::hull(support_of(poly_mul(p, q)));
  auto sum =
      LatticePolytope::hull(minkowski_sum(support_of(p), support_of(q)));
  return prod.vertices() == sum.vertices();
}

}  // namespace newt
