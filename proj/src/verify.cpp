#include "frobkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "frobkit/canonical.hpp"
#include "frobkit/charpoly.hpp"
#include "frobkit/enumerate.hpp"
#include "frobkit/error.hpp"
#include "frobkit/geometry.hpp"
#include "frobkit/io.hpp"
#include "frobkit/rank_one.hpp"
#include "frobkit/sample.hpp"

namespace frobkit {

namespace {

using nlohmann::json;

// Per-cell accumulator; merged in cell order.
struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> counts;
  std::optional<Counterexample> first;

  void count(const std::string& key, std::uint64_t by = 1) { counts[key] += by; }
  // Records a failure; the counterexample is only built for the first one.
  template <class Make>
  void fail(Make&& make) {
    ++failures;
    if (!first) first = make();
  }
};

struct Cell {
  std::string label;
  std::function<void(Tally&)> body;
};

unsigned thread_count(const VerifyConfig& c) {
  if (c.threads) return c.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

void run_cell(const Cell& cell, Tally& t) {
  try {
    cell.body(t);
  } catch (const std::exception& e) {
    t.fail([&] {
      return Counterexample{"no exception", json{{"cell", cell.label}}, json(std::string(e.what())), json(nullptr)};
    });
  }
}

SuiteResult run_cells(Suite s, const std::vector<Cell>& cells, const VerifyConfig& config) {
  std::vector<Tally> tallies(cells.size());
  const unsigned workers = std::min<std::size_t>(thread_count(config), std::max<std::size_t>(cells.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(cells[i], tallies[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) run_cell(cells[i], tallies[i]);
      });
    for (auto& th : pool) th.join();
  }
  SuiteResult r;
  r.suite = s;
  for (auto& t : tallies) {
    r.instances += t.instances;
    r.failures += t.failures;
    for (const auto& [k, v] : t.counts) r.tallies[k] += v;
    if (!r.counterexample && t.first) r.counterexample = std::move(t.first);
  }
  r.pass = r.failures == 0;
  return r;
}

struct Corpus {
  std::vector<Field> fields;
  std::size_t n_min, n_max;
  std::uint64_t trials;
};

Corpus corpus(const VerifyConfig& c, std::vector<std::uint64_t> default_q, std::size_t n_max, std::uint64_t trials) {
  Corpus out{{}, 1, c.n_max.value_or(n_max), c.trials.value_or(trials)};
  if (c.fields.empty()) {
    for (auto q : default_q) out.fields.push_back(Field::finite_order(q));
  } else {
    for (const auto& fs : c.fields) out.fields.push_back(Field::finite(fs.p, fs.k));
  }
  return out;
}

std::string cell_label(Field f, std::size_t n) { return "q=" + std::to_string(f.order()) + " n=" + std::to_string(n); }

Rng cell_rng(const VerifyConfig& c, const std::string& stream, const std::string& label) {
  return Rng(c.seed).split(stream).split(label);
}

json elems_json(const std::vector<Elem>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.to_string());
  return a;
}

// The update formula with the alternating sign dropped.
std::vector<Elem> ck_update_mutant(const std::vector<Elem>& c, const MomentSequence& m, const Elem& lambda) {
  std::vector<Elem> out = c;
  for (std::size_t k = 1; k < c.size(); ++k) {
    Elem s = lambda.field().zero();
    for (std::size_t j = 0; j < k; ++j) s += c[k - 1 - j] * m.m[j];
    out[k] += lambda * s;
  }
  return out;
}

// Draws shared by the rank-one and Cayley-Hamilton suites.
struct CkDraw {
  Triple t;
  Elem lambda;
};
CkDraw ck_draw(Rng& rng, Field f, std::size_t n) {
  Triple t = sample::triple(rng, f, n);
  Elem lambda = rng.element(f);
  return {std::move(t), std::move(lambda)};
}

Corpus ck_corpus(const VerifyConfig& c) { return corpus(c, {3, 5, 9, 25}, 8, 1000); }

// ---------------------------------------------------------------------------

SuiteResult suite_ck_update(const VerifyConfig& config) {
  const Corpus cp = ck_corpus(config);
  std::vector<Cell> cells;
  for (Field f : cp.fields)
    for (std::size_t n = cp.n_min; n <= cp.n_max; ++n) {
      const std::string label = cell_label(f, n);
      cells.push_back({label, [=, &config](Tally& t) {
                         Rng rng = cell_rng(config, "ck-update", label);
                         for (std::uint64_t i = 0; i < cp.trials; ++i) {
                           auto [tr, lambda] = ck_draw(rng, f, n);
                           ++t.instances;
                           const auto c = principal_minor_sums(tr.A);
                           const auto m = moments(tr, n);
                           const auto updated =
                               config.mutate_ck_update ? ck_update_mutant(c, m, lambda) : ck_update(c, m, lambda);
                           const Poly lhs = charpoly_from_minor_sums(updated, f);
                           const Mat perturbed = tr.A + lambda * outer(tr.v, tr.phi);
                           const Poly hess = charpoly(perturbed), berk = charpoly_berkowitz(perturbed);
                           if (!(hess == berk)) t.count("charpoly-disagreements");
                           if (lhs == hess && lhs == berk) continue;
                           t.fail([&] {
                             return Counterexample{
                                 "charpoly from updated minor sums == charpoly(A + lambda v phi)",
                                 {{"triple", triple_to_json(tr)},
                                  {"lambda", lambda.to_string()},
                                  {"minor_sums", elems_json(c)},
                                  {"moments", elems_json(m.m)}},
                                 poly_to_json(lhs),
                                 {{"hessenberg", poly_to_json(hess)}, {"berkowitz", poly_to_json(berk)}}};
                           });
                         }
                       }});
    }
  return run_cells(Suite::CkUpdate, cells, config);
}

// Corpus shared by the LinAlg and Q_A suites: every triple of size 2 over
// F_3, then seeded random cells mixing uniform and moment-free triples.
template <class Check>
std::vector<Cell> triple_corpus_cells(const VerifyConfig& config, Check check) {
  std::vector<Cell> cells;
  const Field f3 = Field::prime(3);
  if (bounded_power(3, 8, config.exhaustive_bound)) {
    for (std::uint64_t block = 0; block < 9; ++block)
      cells.push_back({"exhaustive " + std::to_string(block), [=](Tally& t) {
                         for (std::uint64_t ai = block * 9; ai < block * 9 + 9; ++ai) {
                           const Mat a = matrix_from_index(f3, 2, 2, ai);
                           const Mat ad = commutator_operator(a);
                           for (std::uint64_t vi = 0; vi < 9; ++vi)
                             for (std::uint64_t pi = 0; pi < 9; ++pi) {
                               t.count("exhaustive");
                               check(Triple(a, matrix_from_index(f3, 2, 1, vi), matrix_from_index(f3, 1, 2, pi)),
                                     ad, t);
                             }
                         }
                       }});
  } else {
    cells.push_back({"exhaustive", [](Tally& t) { t.count("exhaustive-skipped"); }});
  }
  const Corpus cp = corpus(config, {3, 5, 9}, 5, 2000);
  for (Field f : cp.fields) {
    if (f.characteristic() == 2) continue;
    for (std::size_t n = cp.n_min; n <= cp.n_max; ++n) {
      const std::string label = cell_label(f, n);
      cells.push_back({label, [=, &config](Tally& t) {
                         Rng rng = cell_rng(config, "triple-corpus", label);
                         for (std::uint64_t i = 0; i < cp.trials; ++i) {
                           const Triple tr = (i % 2) ? sample::moment_free(rng, f, n) : sample::triple(rng, f, n);
                           t.count("random");
                           check(tr, commutator_operator(tr.A), t);
                         }
                       }});
    }
  }
  return cells;
}

SuiteResult suite_linalg(const VerifyConfig& config) {
  auto cells = triple_corpus_cells(config, [](const Triple& tr, const Mat&, Tally& t) {
    ++t.instances;
    const auto r = linalg_equivalence_report(tr);
    if (r.cond1) t.count("moments-vanish");
    if (r.consistent()) return;
    t.fail([&] {
      return Counterexample{"moments vanish <=> charpoly fixed for all lambda <=> for some lambda != 0",
                            {{"triple", triple_to_json(tr)}, {"lambdas", elems_json(r.lambdas_tested)}},
                            {{"moments_vanish", r.cond1}},
                            {{"fixed_for_all", r.cond2}, {"fixed_for_some_nonzero", r.cond3}}};
    });
  });
  return run_cells(Suite::LinAlg, cells, config);
}

SuiteResult suite_qa_in_ra(const VerifyConfig& config) {
  auto cells = triple_corpus_cells(config, [](const Triple& tr, const Mat& ad, Tally& t) {
    ++t.instances;
    const auto qa = in_QA(tr, ad);
    const auto ra = in_RA(tr);
    if (in_RA(tr, 2 * tr.dim() + 1).member != ra.member) {
      t.fail([&] {
        return Counterexample{"n moments decide R_A membership",
                              {{"triple", triple_to_json(tr)}},
                              {{"n_moments", ra.member}},
                              {{"2n+1_moments", !ra.member}}};
      });
    }
    if (ra.member) t.count("ra-members");
    if (!qa.member) {
      if (ra.member) t.count("ra-not-qa");
      return;
    }
    t.count("qa-members");
    const Mat lhs = commutator(tr.A, *qa.witness), rhs = outer(tr.v, tr.phi);
    if (lhs == rhs && ra.member) return;
    t.fail([&] {
      return Counterexample{"[A, B] = v (x) phi implies phi A^j v = 0 for all j",
                            {{"triple", triple_to_json(tr)}, {"B", matrix_to_json(*qa.witness)}},
                            {{"commutator", matrix_to_json(lhs)}, {"in_RA", ra.member}},
                            {{"v_outer_phi", matrix_to_json(rhs)}}};
    });
  });

  // Direct sums of small blocks, structured so that spectra often overlap.
  for (std::uint64_t q : {3, 5}) {
    const Field f = Field::prime(q);
    for (std::size_t n1 = 1; n1 <= 2; ++n1)
      for (std::size_t n2 = 1; n2 <= 2; ++n2) {
        const std::string label = "direct-sum " + cell_label(f, n1) + "+" + std::to_string(n2);
        cells.push_back({label, [=, &config](Tally& t) {
                           Rng rng = cell_rng(config, "direct-sum", label);
                           for (int k = 0; k < 4; ++k) {
                             const Mat a1 = sample::structured(rng, f, n1);
                             // Equal blocks share their whole spectrum.
                             const Mat b2 = (k % 2 && n1 == n2) ? a1 : sample::structured(rng, f, n2);
                             const auto r = qa_directsum_check(a1, b2, 300, rng, config.exhaustive_bound);
                             ++t.instances;
                             t.count("direct-sum-pairs", r.pairs);
                             t.count("direct-sum-shared-spectrum-gaps", r.converse_shared_spectrum_gaps);
                             if (r.holds) continue;
                             t.fail([&] {
                               return Counterexample{
                                   "Q_{A1+A2} inside Q_{A1} x Q_{A2}; converse for coprime spectra or zero cross terms",
                                   {{"A1", matrix_to_json(a1)},
                                    {"A2", matrix_to_json(b2)},
                                    {"triple", r.counterexample ? triple_to_json(*r.counterexample) : json(nullptr)}},
                                   {{"forward_violations", r.forward_violations}},
                                   {{"converse_violations", r.converse_violations}}};
                             });
                           }
                         }});
      }
  }
  return run_cells(Suite::QaInRa, cells, config);
}

SuiteResult suite_filtration(const VerifyConfig& config) {
  struct Case {
    std::uint64_t p;
    std::vector<std::int64_t> f;
    unsigned s;
  };
  const std::vector<Case> cases{{3, {0, 1}, 1}, {3, {0, 1}, 2},    {3, {1, 1}, 2},
                                {3, {1, 0, 1}, 1}, {3, {1, 0, 1}, 2}, {5, {0, 1}, 2}};
  std::vector<Cell> cells;
  for (const auto& c : cases) {
    const Poly f = Poly::from_ints(Field::prime(c.p), c.f);
    const std::string label = "q=" + std::to_string(c.p) + " (" + f.to_string() + ")^" + std::to_string(c.s);
    cells.push_back({label, [=, &config](Tally& t) {
                       const Filtration fl = filtration(f, c.s);
                       const auto dual = check_dual_filtration(fl);
                       ++t.instances;
                       if (!dual.ok())
                         t.fail([&] {
                           return Counterexample{"dual filtration equals the annihilator chain",
                                                 {{"f", poly_to_json(f)}, {"s", c.s}},
                                                 {{"dims", dual.dims_ok}, {"nested", dual.nested}},
                                                 {{"row_space", dual.row_space_ok},
                                                  {"transpose_map", dual.transpose_map_ok}}};
                         });
                       RaStructureReport r;
                       try {
                         r = ra_structure_check(f, c.s, config.exhaustive_bound);
                       } catch (const Error& e) {
                         if (e.code() != ErrorCode::TooLargeForExhaustive) throw;
                         t.count("skipped");
                         return;
                       }
                       ++t.instances;
                       t.count("pairs", r.pairs);
                       t.count("ra-members", r.ra_members);
                       if (r.holds) return;
                       t.fail([&] {
                         json pair = nullptr;
                         if (r.counterexample)
                           pair = {{"v", matrix_to_json(r.counterexample->first)},
                                   {"phi", matrix_to_json(r.counterexample->second)}};
                         return Counterexample{"R_A == union of U_i + U*_{s-i}",
                                               {{"f", poly_to_json(f)}, {"s", c.s}, {"A", matrix_to_json(fl.A)},
                                                {"pair", pair}},
                                               {{"ra_members", r.ra_members}},
                                               {{"per_stratum", r.per_stratum}}};
                       });
                     }});
  }
  return run_cells(Suite::Filtration, cells, config);
}

SuiteResult suite_canonical(const VerifyConfig& config) {
  const Corpus cp = corpus(config, {3, 5, 9}, 6, 1000);
  std::vector<Cell> cells;
  for (Field f : cp.fields)
    for (std::size_t n = cp.n_min; n <= cp.n_max; ++n) {
      const std::string label = cell_label(f, n);
      cells.push_back({label, [=, &config](Tally& t) {
                         Rng rng = cell_rng(config, "canonical-form", label);
                         for (std::uint64_t i = 0; i < cp.trials; ++i) {
                           const Mat a = (i % 2) ? sample::structured(rng, f, n) : sample::matrix(rng, f, n, n);
                           ++t.instances;
                           auto fail = [&](const std::string& what, json lhs, json rhs) {
                             t.fail([&] {
                               return Counterexample{what, {{"A", matrix_to_json(a)}}, std::move(lhs), std::move(rhs)};
                             });
                           };
                           const FrobeniusForm fr = frobenius_form(a);
                           const auto& fs = fr.invariant_factors;
                           if (fs.size() > 1) t.count("non-cyclic");
                           const Mat conj = fr.transform * a * inverse(fr.transform);
                           if (!(conj == fr.form()))
                             fail("g A g^{-1} == Frobenius form", matrix_to_json(conj), matrix_to_json(fr.form()));
                           Poly product = Poly::constant(f.one());
                           bool chain = true;
                           for (std::size_t k = 0; k < fs.size(); ++k) {
                             product *= fs[k];
                             if (!fs[k].is_monic() || fs[k].degree() < 1) chain = false;
                             if (k + 1 < fs.size() && !(fs[k + 1] % fs[k]).is_zero()) chain = false;
                           }
                           if (!chain) {
                             json list = json::array();
                             for (const auto& p : fs) list.push_back(poly_to_json(p));
                             fail("invariant factors form a divisibility chain", list, nullptr);
                           }
                           const Poly cp_a = charpoly(a);
                           if (!(product == cp_a))
                             fail("product of invariant factors == charpoly", poly_to_json(product), poly_to_json(cp_a));
                           const Poly mp = minimal_polynomial(a);
                           if (!fs.empty() && !(fs.back() == mp))
                             fail("last invariant factor == minimal polynomial", poly_to_json(fs.back()),
                                  poly_to_json(mp));
                           const Mat g = transpose_conjugator(a);
                           const Mat back = g * a.transpose() * inverse(g);
                           if (!(back == a)) fail("g A^t g^{-1} == A", matrix_to_json(back), matrix_to_json(a));
                           if (f.characteristic() != 2) {
                             const ElementaryDivisorForm ed = elementary_divisor_form(a);
                             const Mat ec = ed.transform * a * inverse(ed.transform);
                             Poly eprod = Poly::constant(f.one());
                             for (const auto& b : ed.blocks) eprod *= b.power();
                             if (!(ec == ed.form()))
                               fail("g A g^{-1} == elementary divisor form", matrix_to_json(ec),
                                    matrix_to_json(ed.form()));
                             if (!(eprod == cp_a))
                               fail("product of elementary divisors == charpoly", poly_to_json(eprod),
                                    poly_to_json(cp_a));
                           }
                         }
                       }});
    }
  return run_cells(Suite::CanonicalForm, cells, config);
}

void cayley_hamilton_check(const Mat& a, Tally& t, bool compare_algorithms) {
  ++t.instances;
  const auto chain = faddeev_chain(a);
  const Poly p = charpoly(a);
  const Mat at_a = poly_at_matrix(p, a);
  const bool agree = !compare_algorithms || p == charpoly_berkowitz(a);
  if (chain.back().is_zero() && at_a.is_zero() && agree) return;
  t.fail([&] {
    return Counterexample{"C_{n+1} == 0 and P_A(A) == 0",
                          {{"A", matrix_to_json(a)}, {"charpoly", poly_to_json(p)}},
                          {{"C_last", matrix_to_json(chain.back())}, {"P_A(A)", matrix_to_json(at_a)}},
                          {{"berkowitz", poly_to_json(charpoly_berkowitz(a))}}};
  });
}

SuiteResult suite_cayley_hamilton(const VerifyConfig& config) {
  const Corpus cp = ck_corpus(config);
  std::vector<Cell> cells;
  for (Field f : cp.fields)
    for (std::size_t n = cp.n_min; n <= cp.n_max; ++n) {
      const std::string label = cell_label(f, n);
      cells.push_back({label, [=, &config](Tally& t) {
                         Rng rng = cell_rng(config, "ck-update", label);
                         for (std::uint64_t i = 0; i < cp.trials; ++i) cayley_hamilton_check(ck_draw(rng, f, n).t.A, t, false);
                       }});
    }
  const std::uint64_t rational = 200;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::string label = "Q n=" + std::to_string(n);
    cells.push_back({label, [=, &config](Tally& t) {
                       Rng rng = cell_rng(config, "cayley-hamilton", label);
                       const Field q = Field::rationals();
                       for (std::uint64_t i = n - 1; i < rational; i += 6) {
                         t.count("rational");
                         cayley_hamilton_check(sample::matrix(rng, q, n, n), t, true);
                       }
                     }});
  }
  return run_cells(Suite::CayleyHamilton, cells, config);
}

SuiteResult suite_orbit_census(const VerifyConfig& config) {
  std::vector<Cell> cells;
  cells.push_back({"q=3 n=2", [&config](Tally& t) {
                     if (!bounded_power(3, 4, config.exhaustive_bound)) {
                       t.count("skipped");
                       return;
                     }
                     const Field f = Field::prime(3);
                     const std::uint64_t total = 81;
                     std::vector<Mat> all, gl, gl_inv;
                     for (std::uint64_t i = 0; i < total; ++i) {
                       all.push_back(matrix_from_index(f, 2, 2, i));
                       if (is_invertible(all.back())) {
                         gl.push_back(all.back());
                         gl_inv.push_back(inverse(all.back()));
                       }
                     }
                     const auto gl_order = general_linear_order(3, 2);
                     if (mpz_class(gl.size()) != gl_order)
                       t.fail([&] {
                         return Counterexample{"|GL_2(F_3)| by enumeration", json(nullptr),
                                               json(gl.size()), json(gl_order.get_str())};
                       });
                     std::vector<int> class_of(total, -1);
                     std::vector<std::vector<std::uint64_t>> classes;
                     for (std::uint64_t i = 0; i < total; ++i) {
                       ++t.instances;
                       const Mat& a = all[i];
                       std::set<std::uint64_t> orbit;
                       std::uint64_t stabilizer = 0;
                       for (std::size_t k = 0; k < gl.size(); ++k) {
                         const Mat c = gl[k] * a * gl_inv[k];
                         orbit.insert(matrix_index(c));
                         if (c == a) ++stabilizer;
                       }
                       std::uint64_t commuting = 0;
                       for (const auto& b : all)
                         if (a * b == b * a) ++commuting;
                       const std::size_t cdim = centralizer_dimension(a);
                       const std::size_t cdim_formula = centralizer_dimension_from_invariants(smith_invariant_factors(a));
                       const bool ok = mpz_class(orbit.size() * stabilizer) == gl_order && cdim == cdim_formula &&
                                       commuting == *bounded_power(3, cdim, ~std::uint64_t{0});
                       if (!ok)
                         t.fail([&] {
                           return Counterexample{
                               "|class| |stabilizer| == |GL|, dim ker ad_A == sum min(d_i, d_j) == log_q |C(A)|",
                               {{"A", matrix_to_json(a)}},
                               {{"class_size", orbit.size()}, {"stabilizer", stabilizer}, {"ad_kernel_dim", cdim},
                                {"commuting", commuting}},
                               {{"gl_order", gl_order.get_str()}, {"sum_min_degrees", cdim_formula}}};
                         });
                       if (class_of[i] >= 0) continue;
                       const int id = static_cast<int>(classes.size());
                       classes.emplace_back(orbit.begin(), orbit.end());
                       for (auto j : orbit) {
                         if (class_of[j] >= 0)
                           t.fail([&] {
                             return Counterexample{"classes partition gl_2(F_3)", {{"A", matrix_to_json(a)}},
                                                   json(j), json(class_of[j])};
                           });
                         class_of[j] = id;
                       }
                     }
                     t.count("classes", classes.size());
                     // Compare with the class table computed from invariant factors.
                     std::map<std::uint64_t, std::vector<std::uint64_t>> sizes_by_charpoly;
                     std::map<std::uint64_t, Poly> charpolys;
                     for (const auto& cl : classes) {
                       const Poly p = charpoly(all[cl.front()]);
                       std::uint64_t key = 0;
                       for (std::size_t k = p.coeffs().size(); k-- > 0;) key = key * 3 + p.coeffs()[k].index();
                       sizes_by_charpoly[key].push_back(cl.size());
                       charpolys.emplace(key, p);
                     }
                     for (auto& [key, sizes] : sizes_by_charpoly) {
                       const auto stats = orbit_stats(charpolys.at(key), config.exhaustive_bound);
                       std::vector<std::uint64_t> table;
                       for (const auto& row : stats.classes)
                         if (row.class_size) table.push_back(row.class_size->get_ui());
                       std::sort(sizes.begin(), sizes.end());
                       std::sort(table.begin(), table.end());
                       if (table != sizes)
                         t.fail([&] {
                           return Counterexample{"orbit_stats class sizes == brute-force class sizes",
                                                 {{"charpoly", poly_to_json(charpolys.at(key))}}, json(table),
                                                 json(sizes)};
                         });
                     }
                   }});
  return run_cells(Suite::OrbitCensus, cells, config);
}

RationalFunction coprime_rational(Rng& rng, const Poly& charpoly_a) {
  const Field f = charpoly_a.field();
  auto draw = [&](bool allow_nonmonic) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Poly p = sample::monic(rng, f, rng.below(4));
      if (allow_nonmonic) p *= rng.nonzero(f);
      if (gcd(p, charpoly_a).is_one()) return p;
    }
    return Poly::constant(rng.nonzero(f));
  };
  Poly num = draw(true);
  Poly den = draw(false);
  return RationalFunction(std::move(num), std::move(den));
}

SuiteResult suite_equivariance(const VerifyConfig& config) {
  const Corpus cp = corpus(config, {3, 5, 9, 25}, 5, 50);
  std::vector<Cell> cells;
  for (Field f : cp.fields)
    for (std::size_t n = cp.n_min; n <= cp.n_max; ++n) {
      const std::string label = cell_label(f, n);
      cells.push_back({label, [=, &config](Tally& t) {
                         Rng rng = cell_rng(config, "equivariance", label);
                         auto element = [&] {
                           return GroupElem(sample::invertible(rng, f, n), rng.below(2) ? -1 : 1);
                         };
                         auto group_json = [](const GroupElem& e) {
                           return json{{"g", matrix_to_json(e.g)}, {"sign", e.sign}};
                         };
                         for (std::uint64_t i = 0; i < cp.trials; ++i) {
                           const Triple tr = (i % 2) ? sample::moment_free(rng, f, n) : sample::triple(rng, f, n);
                           const GroupElem e = element();
                           const Elem lambda = rng.element(f);

                           ++t.instances;
                           t.count("nu");
                           const Triple l1 = act(e, nu_lambda(tr, lambda)), r1 = nu_lambda(act(e, tr), lambda);
                           if (!(l1 == r1))
                             t.fail([&] {
                               return Counterexample{"act(e, nu_lambda(t)) == nu_lambda(act(e, t))",
                                                     {{"triple", triple_to_json(tr)},
                                                      {"element", group_json(e)},
                                                      {"lambda", lambda.to_string()}},
                                                     triple_to_json(l1), triple_to_json(r1)};
                             });

                           ++t.instances;
                           t.count("rho");
                           const RationalFunction rf = coprime_rational(rng, charpoly(tr.A));
                           const Triple l2 = act(e, rho_f(tr, rf)), r2 = rho_f(act(e, tr), rf);
                           if (!(l2 == r2))
                             t.fail([&] {
                               return Counterexample{"act(e, rho_f(t)) == rho_f(act(e, t))",
                                                     {{"triple", triple_to_json(tr)},
                                                      {"element", group_json(e)},
                                                      {"numerator", poly_to_json(rf.numerator())},
                                                      {"denominator", poly_to_json(rf.denominator())}},
                                                     triple_to_json(l2), triple_to_json(r2)};
                             });

                           const GroupElem e2 = element();
                           const Triple l3 = act(e * e2, tr), r3 = act(e, act(e2, tr));
                           t.count("composition");
                           if (!(l3 == r3))
                             t.fail([&] {
                               return Counterexample{"act(e1 e2, t) == act(e1, act(e2, t))",
                                                     {{"triple", triple_to_json(tr)},
                                                      {"e1", group_json(e)},
                                                      {"e2", group_json(e2)}},
                                                     triple_to_json(l3), triple_to_json(r3)};
                             });
                         }
                       }});
    }
  return run_cells(Suite::Equivariance, cells, config);
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::CkUpdate: return "ck-update";
    case Suite::LinAlg: return "linalg-equivalence";
    case Suite::QaInRa: return "qa-in-ra";
    case Suite::Filtration: return "filtration";
    case Suite::CanonicalForm: return "canonical-form";
    case Suite::CayleyHamilton: return "cayley-hamilton";
    case Suite::OrbitCensus: return "orbit-census";
    case Suite::Equivariance: return "equivariance";
  }
  return "unknown";
}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (Suite s : kAllSuites)
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

void VerifyConfig::validate() const {
  for (const auto& f : fields) {
    try {
      (void)Field::finite(f.p, f.k);
    } catch (const Error& e) {
      raise(ErrorCode::ConfigError, std::string("bad field: ") + e.what());
    }
  }
  if (n_max && *n_max == 0) raise(ErrorCode::ConfigError, "n_max must be at least 1");
  if (n_max && *n_max > 16) raise(ErrorCode::ConfigError, "n_max above 16 is not supported");
  std::set<Suite> seen;
  for (Suite s : suites)
    if (!seen.insert(s).second) raise(ErrorCode::ConfigError, "suite '" + suite_name(s) + "' selected twice");
}

SuiteResult run_suite(Suite s, const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  switch (s) {
    case Suite::CkUpdate: r = suite_ck_update(config); break;
    case Suite::LinAlg: r = suite_linalg(config); break;
    case Suite::QaInRa: r = suite_qa_in_ra(config); break;
    case Suite::Filtration: r = suite_filtration(config); break;
    case Suite::CanonicalForm: r = suite_canonical(config); break;
    case Suite::CayleyHamilton: r = suite_cayley_hamilton(config); break;
    case Suite::OrbitCensus: r = suite_orbit_census(config); break;
    case Suite::Equivariance: r = suite_equivariance(config); break;
  }
  if (config.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_verify(const VerifyConfig& config) {
  config.validate();
  Report report;
  report.seed = config.seed;
  std::vector<Suite> order;
  for (Suite s : kAllSuites)
    if (config.suites.empty() || std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end())
      order.push_back(s);
  for (Suite s : order) report.suites.push_back(run_suite(s, config));
  return report;
}

bool Report::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.pass; });
}

nlohmann::json Report::to_json() const {
  json list = json::array();
  for (const auto& r : suites) {
    json s{{"name", suite_name(r.suite)},
           {"pass", r.pass},
           {"instances", r.instances},
           {"failures", r.failures},
           {"tallies", r.tallies}};
    if (r.counterexample)
      s["counterexample"] = {{"identity", r.counterexample->identity},
                             {"instance", r.counterexample->instance},
                             {"lhs", r.counterexample->lhs},
                             {"rhs", r.counterexample->rhs}};
    if (r.seconds) s["seconds"] = *r.seconds;
    list.push_back(std::move(s));
  }
  return {{"schema", kSchema}, {"seed", seed}, {"pass", pass()}, {"suites", std::move(list)}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "seed " << seed << "\n";
  for (const auto& r : suites) {
    os << (r.pass ? "PASS " : "FAIL ") << suite_name(r.suite) << " instances=" << r.instances
       << " failures=" << r.failures;
    for (const auto& [k, v] : r.tallies) os << " " << k << "=" << v;
    if (r.seconds) {
      os.setf(std::ios::fixed);
      os.precision(2);
      os << " seconds=" << *r.seconds;
    }
    os << "\n";
    if (r.counterexample) {
      os << "  identity: " << r.counterexample->identity << "\n";
      os << "  instance: " << r.counterexample->instance.dump() << "\n";
      os << "  lhs: " << r.counterexample->lhs.dump() << "\n";
      os << "  rhs: " << r.counterexample->rhs.dump() << "\n";
    }
  }
  os << (pass() ? "PASS" : "FAIL") << " overall\n";
  return os.str();
}

}  // namespace frobkit
