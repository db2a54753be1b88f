#include "newt/io.hpp"

#include <fstream>
#include <set>

namespace newt::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw std::invalid_argument(path + ": " + msg);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

std::uint64_t uint_at(const json& j, const std::string& path, std::uint64_t lo,
                      std::uint64_t hi) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                 j.get<std::int64_t>() < 0))
    fail(path, "expected a nonnegative integer");
  auto v = j.get<std::uint64_t>();
  if (v < lo || v > hi)
    fail(path, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

void check_version(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("schema_version")) return;
  const json& v = *j.find("schema_version");
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() != 1)
    fail(path + ".schema_version", "unsupported schema version, expected 1");
}

Exponent exp_at(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n)
    fail(path, "expected an array of " + std::to_string(n) + " coordinates");
  Exponent e(n);
  for (std::size_t s = 0; s < n; ++s)
    e[s] = static_cast<std::uint32_t>(
        uint_at(j[s], path + "[" + std::to_string(s) + "]", 0, kMaxCoord));
  return e;
}

json exp_to_json(const Exponent& e) {
  json a = json::array();
  for (std::size_t s = 0; s < e.size(); ++s) a.push_back(e[s]);
  return a;
}

}  // namespace

json load_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::invalid_argument(filename + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(filename + ": " + e.what());
  }
}

Support support_from_json(const json& j, const std::string& path) {
  check_version(j, path);
  auto n = uint_at(member(j, "n", path), path + ".n", 1, kMaxVars);
  const json& pts = member(j, "points", path);
  if (!pts.is_array() || pts.empty()) fail(path + ".points", "expected a nonempty array");
  std::vector<Exponent> v;
  for (std::size_t i = 0; i < pts.size(); ++i)
    v.push_back(exp_at(pts[i], n, path + ".points[" + std::to_string(i) + "]"));
  return Support(n, v);
}

json support_to_json(const Support& s) {
  json pts = json::array();
  for (const auto& e : s.points()) pts.push_back(exp_to_json(e));
  return json{{"n", s.n()}, {"points", pts}};
}

Polynomial poly_from_json(const json& j, const std::string& path) {
  check_version(j, path);
  auto p = static_cast<std::uint32_t>(uint_at(member(j, "p", path), path + ".p", 2, 1u << 20));
  if (!is_prime(p)) fail(path + ".p", std::to_string(p) + " is not prime");
  auto k = static_cast<std::uint32_t>(uint_at(member(j, "k", path), path + ".k", 1, 20));
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > FieldCtx::kMaxFieldSize) fail(path, "field size p^k exceeds the supported range");
  }
  const FieldCtx& f = FieldCtx::get(p, k);
  auto n = uint_at(member(j, "n", path), path + ".n", 1, kMaxVars);
  const json& terms = member(j, "terms", path);
  if (!terms.is_array() || terms.empty()) fail(path + ".terms", "expected a nonempty array");

  Polynomial poly(f, n);
  std::set<Exponent> seen;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string tp = path + ".terms[" + std::to_string(i) + "]";
    Exponent e = exp_at(member(terms[i], "exp", tp), n, tp + ".exp");
    const json& cj = member(terms[i], "coeff", tp);
    if (!cj.is_array() || cj.size() != k)
      fail(tp + ".coeff", "expected " + std::to_string(k) + " power-basis coordinates");
    std::vector<std::uint32_t> coords(k);
    for (std::uint32_t s = 0; s < k; ++s)
      coords[s] = static_cast<std::uint32_t>(
          uint_at(cj[s], tp + ".coeff[" + std::to_string(s) + "]", 0, p - 1));
    std::uint32_t idx = f.from_coords(coords);
    if (idx == 0) fail(tp + ".coeff", "zero coefficient");
    if (!seen.insert(e).second) fail(tp + ".exp", "duplicate exponent");
    poly.add_term(e, idx);
  }
  return poly;
}

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exp", exp_to_json(e)}, {"coeff", p.ctx().coords(c)}});
  return json{{"p", p.ctx().p()}, {"k", p.ctx().k()}, {"n", p.n()}, {"terms", terms}};
}

json classification_to_json(const Classification& c) {
  json cert;
  switch (c.certificate.kind) {
    case Certificate::Kind::CommonVariable:
      cert = json{{"type", "common_variable"}, {"t", c.certificate.t + 1}};
      break;
    case Certificate::Kind::Segment:
      cert = json{{"type", "segment"},
                  {"i", exp_to_json(c.certificate.i)},
                  {"j", exp_to_json(c.certificate.j)},
                  {"d", c.certificate.d}};
      break;
    case Certificate::Kind::PrimePower:
      cert = json{{"type", "prime_power"}, {"primes", c.certificate.primes}};
      break;
    case Certificate::Kind::None:
      cert = json{{"type", "none"}};
      break;
  }
  const char* verdict = c.verdict == Verdict::GoodAllFields ? "good_all_fields"
                        : c.verdict == Verdict::GoodExactlyInChars ? "good_exactly_in_chars"
                                                                   : "never_good";
  json out{{"verdict", verdict}, {"certificate", cert}};
  if (c.verdict == Verdict::GoodExactlyInChars) out["primes"] = c.primes;
  return out;
}

json census_to_json(const Census& c) {
  const char* status = c.status == CensusStatus::Empty ? "empty"
                       : c.status == CensusStatus::All ? "all"
                                                       : "proper";
  return json{{"status", status}, {"reducible", c.reducible}, {"total", c.total}};
}

json factorization_to_json(const Factorization& f) {
  return json{{"left", poly_to_json(f.left)},
              {"right", poly_to_json(f.right)},
              {"extension", f.extension}};
}

json reducibility_to_json(const ReducibilityAnswer& a) {
  json out{{"reducible", a.reducible}};
  if (a.witness)
    out["witness"] = json{{"left", poly_to_json(a.witness->left)},
                          {"right", poly_to_json(a.witness->right)},
                          {"extension", a.witness->extension}};
  else
    out["witness"] = nullptr;
  return out;
}

json decomposition_to_json(const Decomposition& d) {
  json lam = json::array();
  for (const auto& [edge, r] : d.lambda)
    lam.push_back(json{
        {"edge", json::array({exp_to_json(edge.first), exp_to_json(edge.second)})},
        {"num", r.num()},
        {"den", r.den()}});
  return json{{"left", support_to_json(d.left.vertex_support())},
              {"right", support_to_json(d.right.vertex_support())},
              {"lambda", lam}};
}

CharacteristicWitness witness_from_json(const json& j, const std::string& path) {
  check_version(j, path);
  const json& cs = member(j, "case", path);
  if (!cs.is_string() || (cs.get<std::string>() != "a" && cs.get<std::string>() != "b"))
    fail(path + ".case", "expected \"a\" or \"b\"");
  const json& pj = member(j, "primes", path);
  if (!pj.is_array()) fail(path + ".primes", "expected an array");
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 0; i < pj.size(); ++i)
    primes.push_back(static_cast<std::uint32_t>(
        uint_at(pj[i], path + ".primes[" + std::to_string(i) + "]", 2, kMaxCoord)));

  CharacteristicWitness rebuilt = [&] {
    try {
      return build_characteristic_witness(primes, cs.get<std::string>()[0]);
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }();

  auto d = uint_at(member(j, "d", path), path + ".d", 1, kMaxCoord);
  Support s = support_from_json(member(j, "support", path), path + ".support");
  if (d != rebuilt.d) fail(path + ".d", "does not match the prime set");
  if (!(s == rebuilt.j))
    fail(path + ".support", "does not match a rebuild from the prime set and case");
  return rebuilt;
}

json witness_to_json(const CharacteristicWitness& w) {
  return json{{"case", std::string(1, w.tag)},
              {"primes", w.primes},
              {"d", w.d},
              {"support", support_to_json(w.j)}};
}

json verify_rows_to_json(const std::vector<VerifyRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"field", r.field},
                       {"check", r.check},
                       {"expected", r.expected},
                       {"outcome", r.outcome},
                       {"ok", r.ok},
                       {"inconclusive", r.inconclusive}});
  return out;
}

}  // namespace newt::io
