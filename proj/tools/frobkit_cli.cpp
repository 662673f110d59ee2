#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "frobkit/canonical.hpp"
#include "frobkit/charpoly.hpp"
#include "frobkit/error.hpp"
#include "frobkit/geometry.hpp"
#include "frobkit/io.hpp"
#include "frobkit/rank_one.hpp"
#include "frobkit/verify.hpp"

using namespace frobkit;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// "p", "p^k" or a prime power q.
FieldSpec parse_field_spec(const std::string& s) {
  try {
    const auto caret = s.find('^');
    if (caret == std::string::npos) {
      const Field f = Field::finite_order(std::stoull(s));
      return {f.characteristic(), f.degree()};
    }
    const FieldSpec spec{std::stoull(s.substr(0, caret)), static_cast<unsigned>(std::stoul(s.substr(caret + 1)))};
    (void)Field::finite(spec.p, spec.k);
    return spec;
  } catch (const Error& e) {
    raise(ErrorCode::ConfigError, "bad --field '" + s + "': " + e.what());
  } catch (const std::exception&) {
    raise(ErrorCode::ConfigError, "bad --field '" + s + "'");
  }
}

json with_schema(json j) {
  json out{{"schema", kSchema}};
  out.update(j);
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_charpoly(const std::string& path, bool as_json) {
  const Mat a = parse_matrix(read_file(path));
  if (!a.is_square()) raise(ErrorCode::NotSquare, "charpoly needs a square matrix");
  const Poly hess = charpoly(a), berk = charpoly_berkowitz(a);
  const bool agree = hess == berk;
  if (as_json) {
    print_json(with_schema({{"field", field_to_json(a.field())},
                            {"charpoly", poly_to_json(hess)},
                            {"hessenberg", poly_to_json(hess)},
                            {"berkowitz", poly_to_json(berk)},
                            {"agree", agree}}));
  } else {
    std::cout << hess.to_string() << "\n";
    if (!agree) std::cout << "berkowitz disagrees: " << berk.to_string() << "\n";
  }
  if (!agree) {
    std::cerr << "AlgorithmDisagreement: hessenberg " << hess.to_string() << " vs berkowitz " << berk.to_string()
              << "\n";
    return kExitFail;
  }
  return kExitPass;
}

int cmd_rcf(const std::string& path, bool elementary) {
  const Mat a = parse_matrix(read_file(path));
  if (!a.is_square()) raise(ErrorCode::NotSquare, "rcf needs a square matrix");
  if (elementary) {
    const auto ed = elementary_divisor_form(a);
    if (!(ed.transform * a * inverse(ed.transform) == ed.form()))
      raise(ErrorCode::AlgorithmDisagreement, "elementary divisor transform failed self-check");
    print_json(with_schema(elementary_to_json(ed)));
  } else {
    const auto fr = frobenius_form(a);
    if (!(fr.transform * a * inverse(fr.transform) == fr.form()))
      raise(ErrorCode::AlgorithmDisagreement, "Frobenius transform failed self-check");
    print_json(with_schema(frobenius_to_json(fr)));
  }
  return kExitPass;
}

int cmd_classify(const std::string& path) {
  const Triple t = parse_triple(read_file(path));
  const std::size_t n = t.dim();
  const auto ms = moments(t, n);
  const auto ra = in_RA(t);
  if (ra.witness && ms.m[*ra.witness].is_zero())
    raise(ErrorCode::AlgorithmDisagreement, "R_A witness has a zero moment");
  const auto qa = in_QA(t);
  if (qa.member && !(commutator(t.A, *qa.witness) == outer(t.v, t.phi)))
    raise(ErrorCode::AlgorithmDisagreement, "Q_A witness failed self-check");
  const auto la = linalg_equivalence_report(t);

  json moments_json = json::array();
  for (const auto& m : ms.m) moments_json.push_back(m.to_string());
  json lambdas = json::array();
  for (const auto& l : la.lambdas_tested) lambdas.push_back(l.to_string());
  print_json(with_schema(
      {{"triple", triple_to_json(t)},
       {"in_RA", {{"member", ra.member}, {"witness", ra.witness ? json(*ra.witness) : json(nullptr)}}},
       {"in_QA", {{"member", qa.member}, {"witness", qa.witness ? matrix_to_json(*qa.witness) : json(nullptr)}}},
       {"moments", moments_json},
       {"delta", poly_to_json(delta(t))},
       {"linalg_report",
        {{"moments_vanish", la.cond1},
         {"fixed_for_all_lambda", la.cond2},
         {"fixed_for_some_nonzero_lambda", la.cond3},
         {"lambdas_tested", lambdas},
         {"consistent", la.consistent()}}}}));
  return la.consistent() ? kExitPass : kExitFail;
}

int cmd_verify(const VerifyConfig& config, bool as_json) {
  const Report r = run_verify(config);
  if (as_json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.pass() ? kExitPass : kExitFail;
}

int cmd_orbit_stats(const std::string& poly_text, const std::string& field, std::optional<std::size_t> n,
                    std::uint64_t bound, bool as_json) {
  Poly g = [&] {
    if (poly_text.find('|') != std::string::npos) return parse_poly(poly_text);
    if (field.empty()) raise(ErrorCode::ConfigError, "bare coefficients need --field");
    const auto spec = parse_field_spec(field);
    return parse_poly(Field::finite(spec.p, spec.k).tag() + " | " + poly_text);
  }();
  if (n && static_cast<int>(*n) != g.degree())
    raise(ErrorCode::ConfigError, "--n does not match the degree of the polynomial");
  const auto stats = orbit_stats(g, bound);
  if (as_json) {
    json rows = json::array();
    for (const auto& row : stats.classes) {
      json factors = json::array();
      for (const auto& p : row.invariant_factors) factors.push_back(poly_to_json(p));
      rows.push_back({{"invariant_factors", factors},
                      {"representative", matrix_to_json(row.representative)},
                      {"centralizer_dim", row.centralizer_dim},
                      {"orbit_dim", row.orbit_dim},
                      {"class_size", row.class_size ? json(row.class_size->get_str()) : json(nullptr)},
                      {"size_method", row.size_method}});
    }
    print_json(with_schema({{"charpoly", poly_to_json(stats.charpoly)},
                            {"n", stats.n},
                            {"classes", rows},
                            {"fiber_size", stats.fiber_size ? json(stats.fiber_size->get_str()) : json(nullptr)},
                            {"exact", stats.exact}}));
  } else {
    std::cout << "charpoly " << stats.charpoly.to_string() << " over " << stats.charpoly.field().tag() << "\n";
    mpz_class total = 0;
    for (const auto& row : stats.classes) {
      std::string factors;
      for (const auto& p : row.invariant_factors) factors += (factors.empty() ? "" : ", ") + p.to_string();
      std::cout << "[" << factors << "] centralizer_dim=" << row.centralizer_dim << " orbit_dim=" << row.orbit_dim
                << " size=" << (row.class_size ? row.class_size->get_str() : "?") << "\n";
      if (row.class_size) total += *row.class_size;
    }
    if (stats.exact)
      std::cout << "total " << total.get_str() << "\n";
    else
      std::cout << "TooLargeForExactCount: raise --exhaustive-bound for class sizes\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linear algebra and rank-one update checks over finite fields and Q"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string path;

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial of a matrix file");
  charpoly_cmd->add_option("file", path, "matrix file")->required();
  charpoly_cmd->add_flag("--json", as_json, "JSON output");

  bool elementary = false;
  auto* rcf_cmd = app.add_subcommand("rcf", "rational canonical form as JSON");
  rcf_cmd->add_option("file", path, "matrix file")->required();
  rcf_cmd->add_flag("--elementary", elementary, "elementary divisor blocks (odd finite fields)");
  rcf_cmd->add_flag("--json", as_json, "accepted for symmetry; output is always JSON");

  auto* classify_cmd = app.add_subcommand("classify-triple", "moment, commutator and perturbation data of a triple");
  classify_cmd->add_option("file", path, "triple file")->required();
  classify_cmd->add_flag("--json", as_json, "accepted for symmetry; output is always JSON");

  VerifyConfig config;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> fields, suites;
  auto* verify_cmd = app.add_subcommand("verify", "run the seeded property suites");
  verify_cmd->add_option("--seed", seed, "root seed (default: $FROBKIT_SEED, then built-in)");
  verify_cmd->add_option("--field", fields, "field p or p^k for the random corpora (repeatable)");
  verify_cmd->add_option("--n-max", config.n_max, "largest dimension in the random corpora");
  verify_cmd->add_option("--trials", config.trials, "trials per (field, n) cell");
  verify_cmd->add_option("--exhaustive-bound", config.exhaustive_bound, "largest exhaustive enumeration");
  verify_cmd->add_option("--suite", suites, "suite to run (repeatable; default all)");
  verify_cmd->add_flag("--mutate-ck-update", config.mutate_ck_update, "corrupt the rank-one update formula");
  verify_cmd->add_flag("--timing", config.timing, "report wall time per suite");
  verify_cmd->add_option("--threads", config.threads, "worker threads (0: hardware)");
  verify_cmd->add_flag("--json", as_json, "JSON report");

  std::string poly_text, field;
  std::optional<std::size_t> n;
  std::uint64_t bound = 6561;
  auto* orbit_cmd = app.add_subcommand("orbit-stats", "similarity classes with a given characteristic polynomial");
  orbit_cmd->add_option("poly", poly_text, "\"Fq p=3 k=1 | 0,0,1\" or bare coefficients low to high")->required();
  orbit_cmd->add_option("--field", field, "field p or p^k for bare coefficients");
  orbit_cmd->add_option("--n", n, "dimension (must equal the degree)");
  orbit_cmd->add_option("--exhaustive-bound", bound, "largest enumeration used for class sizes");
  orbit_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*charpoly_cmd) return cmd_charpoly(path, as_json);
    if (*rcf_cmd) return cmd_rcf(path, elementary);
    if (*classify_cmd) return cmd_classify(path);
    if (*orbit_cmd) return cmd_orbit_stats(poly_text, field, n, bound, as_json);
    if (*verify_cmd) {
      if (seed) {
        config.seed = *seed;
      } else if (const char* env = std::getenv("FROBKIT_SEED")) {
        try {
          config.seed = std::stoull(env);
        } catch (const std::exception&) {
          raise(ErrorCode::ConfigError, std::string("FROBKIT_SEED is not an integer: ") + env);
        }
      }
      for (const auto& f : fields) config.fields.push_back(parse_field_spec(f));
      for (const auto& s : suites) {
        const auto suite = suite_from_name(s);
        if (!suite) raise(ErrorCode::ConfigError, "unknown suite '" + s + "'");
        config.suites.push_back(*suite);
      }
      return cmd_verify(config, as_json);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::AlgorithmDisagreement ? kExitFail : kExitUsage;
  }
  return kExitUsage;
}
