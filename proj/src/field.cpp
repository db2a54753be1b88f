#include "newt/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace newt {
namespace {

// Dense F_p[x] helpers used only to bootstrap the tables.
using PPoly = std::vector<std::uint32_t>;  // coefficients ascending, mod p

PPoly ppoly_mul(const PPoly& a, const PPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (std::uint32_t)(((std::uint64_t)a[i] * b[j] + r[i + j]) % p);
  return r;
}

void ppoly_trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic b.
PPoly ppoly_rem(PPoly a, const PPoly& b, std::uint32_t p) {
  ppoly_trim(a);
  while (a.size() >= b.size()) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = (std::uint64_t)c * b[i] % p;
      a[shift + i] = (std::uint32_t)((a[shift + i] + p - sub) % p);
    }
    ppoly_trim(a);
  }
  return a;
}

bool ppoly_is_irreducible(const PPoly& f, std::uint32_t p) {
  // f monic, degree k >= 1. Trial division by all monic polys of degree <= k/2.
  std::size_t k = f.size() - 1;
  if (k == 1) return true;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PPoly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) { g[i] = (std::uint32_t)(c % p); c /= p; }
      g[d] = 1;
      if (ppoly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back((std::uint32_t)d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back((std::uint32_t)n);
  return f;
}

std::mutex g_registry_mutex;

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k == 0) throw std::invalid_argument("field extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw std::invalid_argument("field too large");
  }
  q_ = (std::uint32_t)q;

  // First irreducible monic modulus in index order of (c_0..c_{k-1}).
  modulus_.assign(k, 0);
  if (k > 1) {
    bool found = false;
    for (std::uint64_t code = 0; code < q && !found; ++code) {
      PPoly f(k + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) { f[i] = (std::uint32_t)(c % p); c /= p; }
      f[k] = 1;
      if (ppoly_is_irreducible(f, p)) {
        for (std::uint32_t i = 0; i < k; ++i) modulus_[i] = f[i];
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  // Bootstrap arithmetic on raw coordinate vectors.
  auto decode = [&](std::uint32_t a) {
    PPoly c(k);
    for (std::uint32_t i = 0; i < k; ++i) { c[i] = a % p; a /= p; }
    return c;
  };
  auto encode = [&](const PPoly& c) {
    std::uint32_t a = 0;
    for (std::uint32_t i = k; i-- > 0;) a = a * p + (i < c.size() ? c[i] : 0);
    return a;
  };
  PPoly mod(k + 1);
  for (std::uint32_t i = 0; i < k; ++i) mod[i] = modulus_[i];
  mod[k] = 1;
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
    PPoly r = ppoly_rem(ppoly_mul(decode(a), decode(b), p), mod, p);
    return encode(r);
  };
  auto raw_add = [&](std::uint32_t a, std::uint32_t b) {
    PPoly x = decode(a), y = decode(b);
    for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  };
  auto raw_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  // Smallest-index multiplicative generator.
  auto factors = prime_factors(q_ - 1);
  generator_ = 0;
  for (std::uint32_t a = 1; a < q_; ++a) {
    bool ok = a != 1 || q_ == 2;
    for (auto f : factors)
      if (raw_pow(a, (q_ - 1) / f) == 1) { ok = false; break; }
    if (ok) { generator_ = a; break; }
  }
  if (generator_ == 0) throw std::logic_error("no generator found");

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, generator_);
  }
  zech_.resize(q_ - 1);
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    std::uint32_t s = raw_add(1, exp_[i]);
    zech_[i] = s == 0 ? kZechZero : log_[s];
  }
}

const FieldCtx& FieldCtx::get(std::uint32_t p, std::uint32_t k) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, k))).first;
  return *it->second;
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  std::uint32_t la = log_[a], lb = log_[b];
  if (la > lb) std::swap(la, lb);
  std::uint32_t z = zech_[lb - la];
  if (z == kZechZero) return 0;
  return exp_[(la + z) % (q_ - 1)];
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (a == 0 || p_ == 2) return a;
  return exp_[(log_[a] + (q_ - 1) / 2) % (q_ - 1)];
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("field inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  return exp_[(std::uint32_t)((std::uint64_t)log_[a] * (e % (q_ - 1)) % (q_ - 1))];
}

std::uint64_t FieldCtx::order(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("multiplicative order of zero");
  std::uint64_t n = q_ - 1;
  std::uint64_t o = n / std::gcd<std::uint64_t>(n, log_[a]);
  return a == 1 ? 1 : o;
}

std::vector<std::uint32_t> FieldCtx::coords(std::uint32_t a) const {
  std::vector<std::uint32_t> c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) { c[i] = a % p_; a /= p_; }
  return c;
}

std::uint32_t FieldCtx::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() > k_) throw std::invalid_argument("coordinate vector too long");
  std::uint32_t a = 0;
  for (std::uint32_t i = k_; i-- > 0;) {
    std::uint32_t d = i < c.size() ? c[i] : 0;
    if (d >= p_) throw std::invalid_argument("coordinate out of range");
    a = a * p_ + d;
  }
  return a;
}

namespace {

// Powers of the image of the source basis generator in the target.
const std::vector<std::uint32_t>& embedding_powers(const FieldCtx& src, const FieldCtx& tgt) {
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>,
                  std::vector<std::uint32_t>>
      cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(src.p(), src.k(), tgt.k());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // Smallest-index root of the source modulus in the target.
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint32_t a = 0; a < tgt.q() && !found; ++a) {
    std::uint32_t acc = 0, ap = 1;
    for (std::uint32_t i = 0; i < src.k(); ++i) {
      acc = tgt.add(acc, tgt.mul(src.modulus()[i] % src.p(), ap));
      ap = tgt.mul(ap, a);
    }
    acc = tgt.add(acc, ap);  // monic leading term
    if (acc == 0) { root = a; found = true; }
  }
  if (!found) throw std::logic_error("source modulus has no root in target");
  std::vector<std::uint32_t> pows(src.k());
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < src.k(); ++i) { pows[i] = cur; cur = tgt.mul(cur, root); }
  return cache.emplace(key, std::move(pows)).first->second;
}

}  // namespace

std::uint32_t embed_index(const FieldCtx& src, const FieldCtx& tgt, std::uint32_t a) {
  if (&src == &tgt) return a;
  if (src.p() != tgt.p() || tgt.k() % src.k() != 0)
    throw std::invalid_argument("no canonical embedding between these fields");
  const auto& pows = embedding_powers(src, tgt);
  std::uint32_t acc = 0;
  std::uint32_t i = 0;
  while (a) {
    acc = tgt.add(acc, tgt.mul(a % src.p(), pows[i]));
    a /= src.p();
    ++i;
  }
  return acc;
}

FieldElement embed(const FieldElement& x, const FieldCtx& tgt) {
  return {tgt, embed_index(*x.ctx, tgt, x.idx)};
}

FieldElement frobenius_inverse(const FieldElement& x) {
  const FieldCtx& c = *x.ctx;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i + 1 < c.k(); ++i) e *= c.p();
  return x.pow(e);
}

std::pair<const FieldCtx*, FieldElement> primitive_root_of_unity(std::uint32_t p,
                                                                 std::uint32_t d) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (d == 0) throw std::invalid_argument("root order must be >= 1");
  if (d % p == 0) throw std::invalid_argument("no primitive d-th root when p divides d");
  std::uint32_t k = 0;
  std::uint64_t q = 1;
  do {
    ++k;
    q *= p;
    if (q > FieldCtx::kMaxFieldSize)
      throw std::domain_error("required extension exceeds the field size bound");
  } while ((q - 1) % d != 0);
  const FieldCtx& ctx = FieldCtx::get(p, k);
  FieldElement zeta{ctx, ctx.pow(ctx.generator(), (ctx.q() - 1) / d)};
  return {&ctx, zeta};
}

std::vector<Root> univariate_roots(const FieldCtx& ctx,
                                   const std::vector<std::uint32_t>& coeffs,
                                   std::uint32_t max_ext) {
  std::vector<std::uint32_t> f = coeffs;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Root> out;
  if (f.size() == 1) return out;
  for (std::uint32_t m = 1; m <= max_ext; ++m) {
    const FieldCtx& ext = FieldCtx::get(ctx.p(), ctx.k() * m);
    std::vector<std::uint32_t> fe(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fe[i] = embed_index(ctx, ext, f[i]);
    for (std::uint32_t a = 0; a < ext.q(); ++a) {
      // Skip elements of proper subextensions; those roots were already reported.
      bool in_subfield = false;
      for (std::uint32_t mp = 1; mp < m && !in_subfield; ++mp)
        if (m % mp == 0) {
          std::uint64_t sq = 1;
          for (std::uint32_t i = 0; i < ctx.k() * mp; ++i) sq *= ctx.p();
          if (ext.pow(a, sq) == a) in_subfield = true;
        }
      if (in_subfield) continue;
      std::uint32_t acc = 0;
      for (std::size_t i = fe.size(); i-- > 0;) acc = ext.add(ext.mul(acc, a), fe[i]);
      if (acc != 0) continue;
      // Multiplicity by repeated synthetic division.
      std::uint32_t mult = 0;
      std::vector<std::uint32_t> g = fe;
      bool divides = true;
      while (divides && g.size() > 1) {
        std::vector<std::uint32_t> qt(g.size() - 1);
        std::uint32_t carry = 0;
        for (std::size_t i = g.size(); i-- > 1;) {
          carry = ext.add(g[i], ext.mul(carry, a));
          qt[i - 1] = carry;
        }
        std::uint32_t rem = ext.add(g[0], ext.mul(carry, a));
        if (rem == 0) { ++mult; g = qt; } else divides = false;
      }
      out.push_back({m, FieldElement{ext, a}, mult});
    }
  }
  return out;
}

const FieldCtx& parse_field_spec(const std::string& s) {
  std::size_t caret = s.find('^');
  std::uint32_t p, k = 1;
  try {
    if (caret == std::string::npos) {
      p = (std::uint32_t)std::stoul(s);
    } else {
      p = (std::uint32_t)std::stoul(s.substr(0, caret));
      k = (std::uint32_t)std::stoul(s.substr(caret + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad field spec '" + s + "', expected p^k");
  }
  return FieldCtx::get(p, k);
}

}  // namespace newt
