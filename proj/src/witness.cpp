#include "newt/witness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace newt {

namespace {

Exponent e3(std::uint32_t x, std::uint32_t y, std::uint32_t z) { return Exponent{x, y, z}; }

std::string format_exp(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::vector<std::uint32_t> line_of(const Support& s) {
  std::vector<std::uint32_t> v;
  v.reserve(s.size());
  for (const auto& e : s.points()) v.push_back(e[0]);
  return v;
}

}  // namespace

SupportTriple witness_triple(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("support family requires d >= 2");
  std::vector<Exponent> lp;
  for (std::uint32_t x : {0u, 1u})
    for (std::uint32_t y : {0u, 1u}) lp.push_back(e3(x, y, 0));
  for (std::uint32_t y : {0u, 1u}) lp.push_back(e3(0, y, 1));
  Support left(3, lp);

  std::vector<Exponent> rp;
  for (std::uint32_t i = 0; i <= d; ++i) {
    rp.push_back(e3(i, 0, 0));
    rp.push_back(e3(i, 1, 0));
  }
  Support right(3, rp);

  auto sum = minkowski_sum(left, right);
  std::set<Exponent> pts(sum.points().begin(), sum.points().end());
  for (std::uint32_t x = 1; x <= d; ++x) {
    pts.erase(e3(x, 0, 0));
    pts.erase(e3(x, 2, 0));
  }
  pts.erase(e3(0, 1, 1));
  pts.erase(e3(d, 1, 1));
  Support product(3, std::vector<Exponent>(pts.begin(), pts.end()));
  return {left, right, product, d};
}

WitnessPair witness_pair(std::uint32_t d, const FieldCtx& base) {
  if (d < 2) throw std::invalid_argument("support family requires d >= 2");
  std::uint32_t p = base.p();
  if (d % p == 0) throw std::invalid_argument("characteristic divides d");

  for (std::uint32_t m = 1;; ++m) {
    std::uint64_t k = static_cast<std::uint64_t>(base.k()) * m;
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < k && q <= (1ull << 20); ++i) q *= p;
    if (k > 20 || q > (1ull << 20))
      throw inconclusive_error("no admissible extension within the representable field sizes");
    if ((q - 1) % d != 0) continue;

    const FieldCtx& f = FieldCtx::get(p, static_cast<std::uint32_t>(k));
    std::uint32_t zeta = f.pow(f.generator(), (q - 1) / d);
    std::set<std::uint32_t> excluded{0, f.neg(1), f.neg(f.inv(zeta))};
    std::uint32_t z = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      excluded.insert(z);
      z = f.mul(z, zeta);
    }
    std::uint32_t a = 0;
    for (std::uint32_t cand = 1; cand < q; ++cand) {
      if (!excluded.count(cand)) {
        a = cand;
        break;
      }
    }
    if (!a) continue;

    Polynomial P(f, 3);
    P.add_term(e3(0, 0, 0), 1);
    P.add_term(e3(1, 0, 0), f.neg(1));
    P.add_term(e3(0, 1, 0), a);
    P.add_term(e3(1, 1, 0), f.neg(f.mul(a, zeta)));
    P.add_term(e3(0, 0, 1), 1);
    P.add_term(e3(0, 1, 1), f.neg(1));

    Polynomial Q(f, 3);
    for (std::uint32_t i = 0; i <= d; ++i) {
      Q.add_term(e3(i, 0, 0), 1);
      Q.add_term(e3(i, 1, 0), f.pow(zeta, i));
    }

    auto t = witness_triple(d);
    if (support_of(P).points() != t.left.points() ||
        support_of(Q).points() != t.right.points() ||
        support_of(poly_mul(P, Q)).points() != t.product.points())
      throw std::logic_error("witness pair support check failed");
    return {P, Q, FieldElement(f, zeta), FieldElement(f, a)};
  }
}

std::optional<WitnessPair> find_product_pair(const SupportTriple& t, const FieldCtx& field,
                                             const SearchLimits& lim) {
  if (t.left.n() != t.right.n() || t.left.n() != t.product.n())
    throw std::invalid_argument("triple dimension mismatch");
  std::uint64_t nl = census_count(t.left, field);
  std::uint64_t nr = census_count(t.right, field);
  if (nr == 0 || nl > lim.cap / nr)
    throw inconclusive_error("pair scan of " + std::to_string(nl) + " x " +
                             std::to_string(nr) + " members exceeds cap " +
                             std::to_string(lim.cap));
  const auto& target = t.product.points();

  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, std::atomic<std::uint64_t>& bound)
      -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
    for (std::uint64_t pi = lo; pi < hi; ++pi) {
      if (pi > bound.load(std::memory_order_relaxed)) return std::nullopt;
      Polynomial pc = census_member(t.left, field, pi);
      for (std::uint64_t qi = 0; qi < nr; ++qi) {
        Polynomial qc = census_member(t.right, field, qi);
        if (support_of(poly_mul(pc, qc)).points() == target) {
          std::uint64_t cur = bound.load();
          while (pi < cur && !bound.compare_exchange_weak(cur, pi)) {
          }
          return std::make_pair(pi, qi);
        }
      }
    }
    return std::nullopt;
  };

  std::atomic<std::uint64_t> bound{~0ull};
  unsigned jobs = std::max<unsigned>(1, std::min<std::uint64_t>(lim.jobs, nl));
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  if (jobs == 1) {
    best = scan_range(0, nl, bound);
  } else {
    std::vector<std::optional<std::pair<std::uint64_t, std::uint64_t>>> hits(jobs);
    std::vector<std::exception_ptr> errs(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          hits[w] = scan_range(nl * w / jobs, nl * (w + 1) / jobs, bound);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    for (const auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (const auto& h : hits)
      if (h && (!best || *h < *best)) best = h;
  }
  if (!best) return std::nullopt;
  Polynomial pc = census_member(t.left, field, best->first);
  Polynomial qc = census_member(t.right, field, best->second);
  return WitnessPair{pc, qc, FieldElement(field, 0), FieldElement(field, 0)};
}

Support lift_triple(const SupportTriple& t) {
  std::size_t n = t.product.n();
  auto tag = [&](const Exponent& e, std::uint32_t u, std::uint32_t v) {
    Exponent x(n + 2);
    for (std::size_t s = 0; s < n; ++s) x[s] = e[s];
    x[n] = u;
    x[n + 1] = v;
    return x;
  };
  std::vector<Exponent> pts;
  for (const auto& e : t.product.points()) pts.push_back(tag(e, 0, 0));
  for (const auto& e : t.left.points()) pts.push_back(tag(e, 0, 1));
  for (const auto& e : t.right.points()) pts.push_back(tag(e, 1, 0));
  pts.push_back(tag(Exponent(n), 1, 1));
  return Support(n + 2, pts);
}

std::vector<long long> flatten_map(const std::vector<std::uint32_t>& radices,
                                   const std::vector<std::size_t>& digit_order) {
  std::size_t s = radices.size();
  if (digit_order.size() != s) throw std::invalid_argument("radix/order size mismatch");
  std::vector<bool> seen(s, false);
  for (auto i : digit_order) {
    if (i >= s || seen[i]) throw std::invalid_argument("digit order is not a permutation");
    seen[i] = true;
  }
  std::vector<long long> coeff(s, 0);
  long long mult = 1;
  for (std::size_t t = 0; t < s; ++t) {
    if (radices[t] < 2) throw std::invalid_argument("radices must be at least 2");
    coeff[digit_order[t]] = mult;
    mult *= radices[t];
  }
  return coeff;
}

namespace {

long long apply_map(const std::vector<long long>& ell, const Exponent& e) {
  long long v = 0;
  for (std::size_t s = 0; s < e.size(); ++s) v += ell[s] * e[s];
  return v;
}

Support map_line(const Support& s, const std::vector<long long>& ell, long long off) {
  std::vector<Exponent> pts;
  for (const auto& e : s.points()) {
    long long v = off + apply_map(ell, e);
    if (v < 0 || v > kMaxCoord)
      throw std::invalid_argument("transported point " + std::to_string(v) +
                                  " leaves the coordinate range");
    pts.push_back(Exponent{static_cast<std::uint32_t>(v)});
  }
  return Support(1, pts);
}

}  // namespace

SupportTriple transport_triple(const SupportTriple& t, const std::vector<long long>& ell,
                               long long off_left, long long off_right) {
  if (ell.size() != t.product.n()) throw std::invalid_argument("functional arity mismatch");
  std::map<long long, Exponent> image;
  auto sum = minkowski_sum(t.left, t.right);
  for (const auto& e : sum.points()) {
    auto [it, fresh] = image.emplace(apply_map(ell, e), e);
    if (!fresh)
      throw std::invalid_argument("functional collides on " + format_exp(it->second) +
                                  " and " + format_exp(e));
  }
  return {map_line(t.left, ell, off_left), map_line(t.right, ell, off_right),
          map_line(t.product, ell, off_left + off_right), t.d};
}

Polynomial transport_poly(const Polynomial& p, const std::vector<long long>& ell,
                          long long off) {
  if (ell.size() != p.n()) throw std::invalid_argument("functional arity mismatch");
  Polynomial out(p.ctx(), 1);
  for (const auto& [e, c] : p.terms()) {
    long long v = off + apply_map(ell, e);
    if (v < 0 || v > kMaxCoord)
      throw std::invalid_argument("transported exponent leaves the coordinate range");
    out.add_term(Exponent{static_cast<std::uint32_t>(v)}, c);
  }
  return out;
}

Support lift_to_plane(const SupportTriple& t, PlaneLift variant, std::uint32_t h) {
  if (t.product.n() != 1) throw std::invalid_argument("plane lift needs a univariate triple");
  auto l = line_of(t.left);
  auto r = line_of(t.right);
  auto prod = line_of(t.product);
  if (l.front() != 0 || r.front() != 0 || prod.front() != 0)
    throw std::invalid_argument("each support must start at 0");
  std::uint32_t gl = l.back(), gr = r.back();
  if (gl == 0 || gr == 0) throw std::invalid_argument("degenerate support");
  if (prod.back() != gl + gr)
    throw std::invalid_argument("product support must reach the sum of the maxima");

  if (variant == PlaneLift::Shifted) {
    if (h <= gl) throw std::invalid_argument("offset must exceed the left maximum");
  } else {
    if (h != gl) throw std::invalid_argument("offset must equal the left maximum");
  }

  std::set<std::uint32_t> j0;
  for (auto x : prod) j0.insert(h + x);
  std::set<std::uint32_t> lset(l.begin(), l.end());
  std::set<std::uint32_t> rshift;
  for (auto x : r) rshift.insert(h + x);

  std::set<std::uint32_t> junion = lset;
  junion.insert(rshift.begin(), rshift.end());
  if (variant != PlaneLift::Shifted) {
    std::set<std::uint32_t> hyp(prod.begin(), prod.end());
    hyp.insert(gl);
    if (hyp == junion)
      throw std::invalid_argument(
          "merged row equals the shifted product row; this lift needs them to differ");
  }

  std::set<std::uint32_t> j1;
  if (variant == PlaneLift::SymmetricDifference) {
    std::set_symmetric_difference(lset.begin(), lset.end(), rshift.begin(), rshift.end(),
                                  std::inserter(j1, j1.end()));
  } else {
    j1 = junion;
  }

  std::vector<Exponent> pts;
  for (auto x : j0) pts.push_back(Exponent{x, 0});
  for (auto x : j1) pts.push_back(Exponent{x, 1});
  pts.push_back(Exponent{0, 2});
  return Support(2, pts);
}

CharacteristicWitness build_characteristic_witness(std::vector<std::uint32_t> primes,
                                                   char tag) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (tag != 'a' && tag != 'b') throw std::invalid_argument("tag must be 'a' or 'b'");

  if (tag == 'b') {
    if (primes.empty())
      throw std::invalid_argument("the triangle witness needs at least one prime");
    std::uint64_t d = 1;
    for (auto p : primes) {
      d *= p;
      if (d > kMaxCoord) throw std::invalid_argument("product of primes too large");
    }
    std::uint32_t du = static_cast<std::uint32_t>(d);
    std::vector<Exponent> pts = {Exponent{0, 0}, Exponent{du, 0}, Exponent{0, du}};
    return {'b', primes, du, Support(2, pts)};
  }

  if (primes.empty()) {
    std::vector<Exponent> pts = {Exponent{1}, Exponent{2}};
    return {'a', primes, 1, Support(1, pts)};
  }

  std::uint64_t d = 1;
  for (auto p : primes) {
    d *= p;
    if (6 * d + 15 > kMaxCoord) throw std::invalid_argument("product of primes too large");
  }
  std::uint32_t du = static_cast<std::uint32_t>(d);
  auto t0 = witness_triple(du);
  auto ell = flatten_map({3, 2, du + 2}, {1, 2, 0});
  auto t1 = transport_triple(t0, ell, 0, 0);
  std::uint32_t h = t1.left.points().back()[0];
  Support j = lift_to_plane(t1, PlaneLift::SymmetricDifference, h);
  return {'a', primes, du, j};
}

std::vector<VerifyRow> verify_witness(const CharacteristicWitness& w,
                                      const std::vector<const FieldCtx*>& fields,
                                      const SearchLimits& lim) {
  std::vector<VerifyRow> rows;
  for (const FieldCtx* f : fields) {
    VerifyRow row;
    row.field = std::to_string(f->p()) + "^" + std::to_string(f->k());
    bool in_s = std::find(w.primes.begin(), w.primes.end(), f->p()) != w.primes.end();

    if (w.tag == 'b' || w.primes.empty()) {
      row.check = "census";
      row.expected = w.tag == 'b' ? (in_s ? "all" : "empty") : "all";
      try {
        auto c = reducibility_census(w.j, *f, lim);
        row.outcome = c.status == CensusStatus::All
                          ? "all"
                          : (c.status == CensusStatus::Empty ? "empty" : "proper");
        row.ok = row.outcome == row.expected;
      } catch (const inconclusive_error&) {
        row.outcome = "inconclusive";
        row.inconclusive = true;
      }
    } else {
      row.check = "product_pair";
      row.expected = in_s ? "absent" : "present";
      auto t0 = witness_triple(w.d);
      auto ell = flatten_map({3, 2, w.d + 2}, {1, 2, 0});
      auto t1 = transport_triple(t0, ell, 0, 0);
      try {
        if (in_s) {
          auto hit = find_product_pair(t1, *f, lim);
          row.outcome = hit ? "present" : "absent";
          row.ok = !hit.has_value();
        } else {
          auto wp = witness_pair(w.d, *f);
          auto p1 = transport_poly(wp.p, ell, 0);
          auto q1 = transport_poly(wp.q, ell, 0);
          bool good = support_of(p1).points() == t1.left.points() &&
                      support_of(q1).points() == t1.right.points() &&
                      support_of(poly_mul(p1, q1)).points() == t1.product.points();
          row.outcome = good ? "present" : "mismatch";
          row.ok = good;
        }
      } catch (const inconclusive_error&) {
        row.outcome = "inconclusive";
        row.inconclusive = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace newt
