#include "newt/cli.hpp"

#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "newt/errors.hpp"
#include "newt/io.hpp"

namespace newt::cli {

namespace {

using io::json;

struct Opts {
  std::string support_file, poly_file, witness_file;
  std::string field, fields, primes, case_tag;
  std::uint32_t max_ext = 0;
  std::uint64_t cap = 100000000ull;
  unsigned jobs = 1;
  bool schema = false, verify = false, positive = false;
  std::uint64_t seed = 0;
  std::uint64_t count = 1000;
  unsigned vars = 3, max_degree = 4;
};

void emit(std::ostream& out, json j) {
  j["schema_version"] = 1;
  out << j.dump() << "\n";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

std::vector<std::uint32_t> parse_primes(const std::string& s) {
  std::vector<std::uint32_t> out;
  for (const auto& tok : split_csv(s)) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != tok.size() || v < 2 || v > kMaxCoord)
      throw std::invalid_argument("bad prime '" + tok + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::vector<const FieldCtx*> parse_fields(const std::string& s) {
  std::vector<const FieldCtx*> out;
  for (const auto& tok : split_csv(s)) out.push_back(&parse_field_spec(tok));
  if (out.empty()) throw std::invalid_argument("--fields needs at least one field spec");
  return out;
}

json schema_for(const std::string& name) {
  json support_doc{{"n", "variable count, 1..64"},
                   {"points", "nonempty array of exponent vectors, coordinates 0..2^20"},
                   {"schema_version", "optional, 1"}};
  json poly_doc{{"p", "prime characteristic"},
                {"k", "extension degree, field size p^k <= 2^20"},
                {"n", "variable count, 1..64"},
                {"terms",
                 "nonempty array of {exp: exponent vector, coeff: k power-basis "
                 "coordinates, lowest degree first}; no duplicate exponents, no zero "
                 "coefficients"},
                {"schema_version", "optional, 1"}};
  if (name == "classify")
    return json{{"subcommand", name},
                {"input", json{{"--support", support_doc}}},
                {"output",
                 json{{"verdict", "good_all_fields | good_exactly_in_chars | never_good"},
                      {"certificate",
                       "type common_variable (t, 1-based) | segment (i, j, d) | "
                       "prime_power (primes) | none"},
                      {"primes", "present iff verdict is good_exactly_in_chars"}}}};
  if (name == "factor")
    return json{{"subcommand", name},
                {"input",
                 json{{"--poly", poly_doc},
                      {"--max-ext", "root search bound; 0 uses the certificate default"}}},
                {"output",
                 json{{"left", "polynomial"},
                      {"right", "polynomial"},
                      {"extension", "extension degree the factors live in"}}}};
  if (name == "probe")
    return json{{"subcommand", name},
                {"input",
                 json{{"--support", support_doc},
                      {"--field", "field spec p^k"},
                      {"--max-ext", "per-member extension bound; 0 uses the total degree"},
                      {"--cap", "candidate budget before giving up"},
                      {"--jobs", "worker count; output independent of it"}}},
                {"output",
                 json{{"status", "empty | all | proper"},
                      {"reducible", "reducible member count"},
                      {"total", "member count up to unit scaling"}}}};
  if (name == "irreducible")
    return json{{"subcommand", name},
                {"input",
                 json{{"--poly", poly_doc},
                      {"--max-ext", "extension bound; 0 uses the total degree"},
                      {"--cap", "candidate budget before giving up"}}},
                {"output",
                 json{{"reducible", "bool"},
                      {"witness", "factor pair {left, right, extension} or null"}}}};
  if (name == "decompose")
    return json{{"subcommand", name},
                {"input",
                 json{{"--support", support_doc},
                      {"--positive", "drop decompositions with a point summand"}}},
                {"output",
                 json{{"shift", "componentwise minimum subtracted before hulling"},
                      {"count", "number of decompositions"},
                      {"decompositions",
                       "array of {left, right, lambda: [{edge: [v, w], num, den}]}"}}}};
  if (name == "witness")
    return json{{"subcommand", name},
                {"input",
                 json{{"--primes", "comma-separated primes; may be empty for case a"},
                      {"--case", "a (planar family) | b (triangle)"},
                      {"--verify", "run the per-field checks"},
                      {"--fields", "comma-separated field specs (with --verify)"},
                      {"--max-ext", "extension bound for the census checks"},
                      {"--cap", "candidate budget"},
                      {"--jobs", "worker count"}}},
                {"output",
                 json{{"case", "a | b"},
                      {"primes", "sorted prime set"},
                      {"d", "product of the primes (1 when empty)"},
                      {"support", "the witness support"},
                      {"verification", "per-field rows (with --verify)"}}}};
  if (name == "verify")
    return json{{"subcommand", name},
                {"input",
                 json{{"--witness", "witness JSON as produced by the witness subcommand"},
                      {"--fields", "comma-separated field specs"},
                      {"--max-ext", "extension bound for the census checks"},
                      {"--cap", "candidate budget"},
                      {"--jobs", "worker count"}}},
                {"output",
                 json{{"witness", "the parsed witness"},
                      {"verification",
                       "array of {field, check, expected, outcome, ok, inconclusive}"}}}};
  return json{{"subcommand", name},
              {"input",
               json{{"--seed", "required; all sampling derives from it"},
                    {"--count", "number of random pairs"},
                    {"--field", "field spec p^k"},
                    {"--vars", "variable count, 1..6"},
                    {"--max-degree", "total degree bound, 1..8"}}},
              {"output",
               json{{"count", "pairs tested"},
                    {"failures", "pairs whose product hull mismatched"},
                    {"field", "field spec"},
                    {"vars", "variable count"},
                    {"max_degree", "degree bound"},
                    {"seed", "the seed used"}}}};
}

int verdict_exit(const std::vector<VerifyRow>& rows, std::ostream& err) {
  bool failed = false, gave_up = false;
  for (const auto& r : rows) {
    if (r.inconclusive)
      gave_up = true;
    else if (!r.ok)
      failed = true;
  }
  if (failed) {
    err << "verification failed\n";
    return 1;
  }
  if (gave_up) {
    err << "verification incomplete: some checks were inconclusive\n";
    return 2;
  }
  return 0;
}

int run_classify(const Opts& o, std::ostream& out) {
  if (o.support_file.empty()) throw std::invalid_argument("classify requires --support");
  Support s = io::support_from_json(io::load_file(o.support_file));
  emit(out, io::classification_to_json(classify(s)));
  return 0;
}

int run_factor(const Opts& o, std::ostream& out) {
  if (o.poly_file.empty()) throw std::invalid_argument("factor requires --poly");
  Polynomial p = io::poly_from_json(io::load_file(o.poly_file));
  Classification c = classify(support_of(p));
  Factorization f = factor_by_certificate(p, c, o.max_ext);
  emit(out, io::factorization_to_json(f));
  return 0;
}

int run_probe(const Opts& o, std::ostream& out) {
  if (o.support_file.empty()) throw std::invalid_argument("probe requires --support");
  if (o.field.empty()) throw std::invalid_argument("probe requires --field");
  Support s = io::support_from_json(io::load_file(o.support_file));
  const FieldCtx& f = parse_field_spec(o.field);
  emit(out, io::census_to_json(reducibility_census(s, f, {o.max_ext, o.cap, o.jobs})));
  return 0;
}

int run_irreducible(const Opts& o, std::ostream& out) {
  if (o.poly_file.empty()) throw std::invalid_argument("irreducible requires --poly");
  Polynomial p = io::poly_from_json(io::load_file(o.poly_file));
  emit(out, io::reducibility_to_json(
                is_absolutely_reducible(p, {o.max_ext, o.cap, o.jobs})));
  return 0;
}

int run_decompose(const Opts& o, std::ostream& out) {
  if (o.support_file.empty()) throw std::invalid_argument("decompose requires --support");
  Support s = io::support_from_json(io::load_file(o.support_file));
  Exponent shift = inf_point(s);
  std::vector<Exponent> pts;
  for (const auto& e : s.points()) pts.push_back(exp_sub(e, shift));
  auto hull = LatticePolytope::hull(Support(s.n(), pts));
  auto decs = enumerate_decompositions(hull, o.positive);
  json arr = json::array();
  for (const auto& d : decs) arr.push_back(io::decomposition_to_json(d));
  json shift_j = json::array();
  for (std::size_t i = 0; i < shift.size(); ++i) shift_j.push_back(shift[i]);
  emit(out, json{{"shift", shift_j}, {"count", decs.size()}, {"decompositions", arr}});
  return 0;
}

int run_witness(const Opts& o, std::ostream& out, std::ostream& err) {
  if (o.case_tag != "a" && o.case_tag != "b")
    throw std::invalid_argument("witness requires --case a or --case b");
  auto w = build_characteristic_witness(parse_primes(o.primes), o.case_tag[0]);
  json j = io::witness_to_json(w);
  if (!o.verify) {
    emit(out, j);
    return 0;
  }
  auto rows = verify_witness(w, parse_fields(o.fields), {o.max_ext, o.cap, o.jobs});
  j["verification"] = io::verify_rows_to_json(rows);
  emit(out, j);
  return verdict_exit(rows, err);
}

int run_verify(const Opts& o, std::ostream& out, std::ostream& err) {
  if (o.witness_file.empty()) throw std::invalid_argument("verify requires --witness");
  auto w = io::witness_from_json(io::load_file(o.witness_file));
  auto rows = verify_witness(w, parse_fields(o.fields), {o.max_ext, o.cap, o.jobs});
  json j{{"witness", io::witness_to_json(w)},
         {"verification", io::verify_rows_to_json(rows)}};
  emit(out, j);
  return verdict_exit(rows, err);
}

int run_fuzz(const Opts& o, bool seed_given, std::ostream& out) {
  if (!seed_given) throw std::invalid_argument("ostrowski-fuzz requires --seed");
  if (o.vars < 1 || o.vars > 6) throw std::invalid_argument("--vars must be 1..6");
  if (o.max_degree < 1 || o.max_degree > 8)
    throw std::invalid_argument("--max-degree must be 1..8");
  const FieldCtx& f = parse_field_spec(o.field.empty() ? "5" : o.field);

  std::mt19937_64 rng(o.seed);
  auto rand_poly = [&] {
    for (;;) {
      Polynomial p(f, o.vars);
      std::uint64_t nterms = 1 + rng() % 6;
      for (std::uint64_t t = 0; t < nterms; ++t) {
        Exponent e(o.vars);
        for (;;) {
          std::uint64_t sum = 0;
          for (unsigned s = 0; s < o.vars; ++s) {
            e[s] = static_cast<std::uint32_t>(rng() % (o.max_degree + 1));
            sum += e[s];
          }
          if (sum <= o.max_degree) break;
        }
        p.add_term(e, static_cast<std::uint32_t>(rng() % f.q()));
      }
      if (!p.is_zero()) return p;
    }
  };

  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    Polynomial a = rand_poly();
    Polynomial b = rand_poly();
    if (!ostrowski_check(a, b)) ++failures;
  }
  emit(out, json{{"count", o.count},
                 {"failures", failures},
                 {"field", std::to_string(f.p()) + "^" + std::to_string(f.k())},
                 {"vars", o.vars},
                 {"max_degree", o.max_degree},
                 {"seed", o.seed}});
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Support-set reducibility toolkit", "newt"};
  app.require_subcommand(1);
  Opts o;

  auto* classify_cmd = app.add_subcommand(
      "classify", "Decide whether every polynomial with the given support factors");
  classify_cmd->add_option("--support", o.support_file, "support JSON file");

  auto* factor_cmd =
      app.add_subcommand("factor", "Factor a polynomial via its support certificate");
  factor_cmd->add_option("--poly", o.poly_file, "polynomial JSON file");
  factor_cmd->add_option("--max-ext", o.max_ext, "root search extension bound");

  auto* probe_cmd = app.add_subcommand(
      "probe", "Census of reducibility over all members with the given support");
  probe_cmd->add_option("--support", o.support_file, "support JSON file");
  probe_cmd->add_option("--field", o.field, "field spec p^k");
  probe_cmd->add_option("--max-ext", o.max_ext, "extension bound, 0 = total degree");
  probe_cmd->add_option("--cap", o.cap, "candidate budget");
  probe_cmd->add_option("--jobs", o.jobs, "worker count");

  auto* irr_cmd =
      app.add_subcommand("irreducible", "Decide absolute reducibility of one polynomial");
  irr_cmd->add_option("--poly", o.poly_file, "polynomial JSON file");
  irr_cmd->add_option("--max-ext", o.max_ext, "extension bound, 0 = total degree");
  irr_cmd->add_option("--cap", o.cap, "candidate budget");

  auto* dec_cmd = app.add_subcommand(
      "decompose", "Enumerate integral Minkowski decompositions of the hull");
  dec_cmd->add_option("--support", o.support_file, "support JSON file");
  dec_cmd->add_flag("--positive", o.positive, "drop point summands");

  auto* wit_cmd =
      app.add_subcommand("witness", "Build a characteristic-dependent witness support");
  wit_cmd->add_option("--primes", o.primes, "comma-separated primes");
  wit_cmd->add_option("--case", o.case_tag, "a (planar family) or b (triangle)");
  wit_cmd->add_flag("--verify", o.verify, "run per-field checks");
  wit_cmd->add_option("--fields", o.fields, "comma-separated field specs");
  wit_cmd->add_option("--max-ext", o.max_ext, "extension bound");
  wit_cmd->add_option("--cap", o.cap, "candidate budget");
  wit_cmd->add_option("--jobs", o.jobs, "worker count");

  auto* ver_cmd = app.add_subcommand("verify", "Check a stored witness against fields");
  ver_cmd->add_option("--witness", o.witness_file, "witness JSON file");
  ver_cmd->add_option("--fields", o.fields, "comma-separated field specs");
  ver_cmd->add_option("--max-ext", o.max_ext, "extension bound");
  ver_cmd->add_option("--cap", o.cap, "candidate budget");
  ver_cmd->add_option("--jobs", o.jobs, "worker count");

  auto* fuzz_cmd = app.add_subcommand(
      "ostrowski-fuzz", "Random product-hull law checks on seeded polynomial pairs");
  auto* seed_opt = fuzz_cmd->add_option("--seed", o.seed, "RNG seed (required)");
  fuzz_cmd->add_option("--count", o.count, "number of pairs");
  fuzz_cmd->add_option("--field", o.field, "field spec p^k, default 5");
  fuzz_cmd->add_option("--vars", o.vars, "variable count");
  fuzz_cmd->add_option("--max-degree", o.max_degree, "total degree bound");

  for (auto* sub : {classify_cmd, factor_cmd, probe_cmd, irr_cmd, dec_cmd, wit_cmd,
                    ver_cmd, fuzz_cmd})
    sub->add_flag("--schema", o.schema, "print the input/output schema and exit");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (o.schema) {
      emit(out, schema_for(name));
      return 0;
    }
    if (name == "classify") return run_classify(o, out);
    if (name == "factor") return run_factor(o, out);
    if (name == "probe") return run_probe(o, out);
    if (name == "irreducible") return run_irreducible(o, out);
    if (name == "decompose") return run_decompose(o, out);
    if (name == "witness") return run_witness(o, out, err);
    if (name == "verify") return run_verify(o, out, err);
    return run_fuzz(o, seed_opt->count() > 0, out);
  } catch (const inconclusive_error& e) {
    err << "inconclusive: " << e.what() << "\n";
    emit(out, json{{"status", "inconclusive"}});
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace newt::cli
