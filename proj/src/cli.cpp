#include "glcode/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "glcode/bruhat.hpp"
#include "glcode/code.hpp"
#include "glcode/formulas.hpp"
#include "glcode/gf.hpp"
#include "glcode/matrix.hpp"
#include "glcode/sections.hpp"

namespace glcode::cli {

namespace {

using boost::multiprecision::pow;

FieldPtr make_field(const RunConfig& cfg) { return field_new(cfg.q, cfg.modulus); }

/// Accumulates PASS/FAIL/INFO/SKIP lines for `verify`.
class Report {
public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& what, const std::string& detail = {}) {
    out_ << (ok ? "PASS  " : "FAIL  ") << what;
    if (!detail.empty()) out_ << "  [" << detail << ']';
    out_ << '\n';
    if (!ok) ++failures_;
  }
  void info(const std::string& what) { out_ << "INFO  " << what << '\n'; }
  void skip(const std::string& what) { out_ << "SKIP  " << what << '\n'; }

  /// Runs fn; a std::logic_error or library Error other than Infeasible
  /// is recorded as a failure of `what`.
  template <class Fn>
  void guarded(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const Infeasible&) {
      throw;
    } catch (const std::exception& e) {
      check(false, what, e.what());
    }
  }

  int failures() const { return failures_; }

private:
  std::ostream& out_;
  int failures_ = 0;
};

void verify_field(Report& report, const Field& f) {
  const std::uint32_t q = f.q();
  bool ok = true;
  auto check_triple = [&](Code a, Code b, Code c) {
    ok = ok && f.add_raw(a, b) == f.add_raw(b, a) && f.mul_raw(a, b) == f.mul_raw(b, a) &&
         f.add_raw(f.add_raw(a, b), c) == f.add_raw(a, f.add_raw(b, c)) &&
         f.mul_raw(f.mul_raw(a, b), c) == f.mul_raw(a, f.mul_raw(b, c)) &&
         f.mul_raw(a, f.add_raw(b, c)) == f.add_raw(f.mul_raw(a, b), f.mul_raw(a, c));
  };
  std::string scope;
  if (q <= 16) {
    for (Code a = 0; a < q; ++a)
      for (Code b = 0; b < q; ++b)
        for (Code c = 0; c < q; ++c) check_triple(a, b, c);
    scope = "exhaustive";
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 20000; ++i)
      check_triple(static_cast<Code>(pick(rng)), static_cast<Code>(pick(rng)),
                   static_cast<Code>(pick(rng)));
    scope = "20000 random triples";
  }
  for (Code a = 0; a < q; ++a) {
    ok = ok && f.add_raw(a, 0) == a && f.mul_raw(a, 1) == a && f.add_raw(a, f.neg_raw(a)) == 0;
    if (a != 0)
      ok = ok && f.mul_raw(a, f.inv_raw(a)) == 1 && f.pow({a, f.id()}, q - 1).code == 1;
  }
  report.check(ok, "field axioms, inverses and a^(q-1) = 1 in F_" + std::to_string(q), scope);
}

int verify_impl(const RunConfig& cfg, VerifyLevel level, std::ostream& out) {
  const FieldPtr field = make_field(cfg);
  const std::size_t n = cfg.n;
  const std::uint32_t q = field->q();
  const auto nn = static_cast<std::int64_t>(n);
  const bool full = level == VerifyLevel::Full;
  Report report(out);
  out << "verify n=" << n << " q=" << q << " level=" << (full ? "full" : "fast") << '\n';

  // Feasibility gates come first so an infeasible request does no work.
  const std::uint64_t budget = resolve_column_budget(cfg.column_budget);
  if (gl_order(nn, q) > budget)
    throw Infeasible("|GL_" + std::to_string(n) + "(F_" + std::to_string(q) +
                     ")| = " + to_string(gl_order(nn, q)) + " exceeds the column budget " +
                     std::to_string(budget));

  verify_field(report, *field);

  report.guarded("gl_order product and factored forms", [&] {
    bool ok = true;
    for (std::int64_t k = 2; k <= nn; ++k) ok = ok && gl_order_recurrence_check(k, q);
    report.check(ok, "gl_order recurrence for k = 2.." + std::to_string(n));
  });

  const CodeParams params = code_params(nn, q);
  const EvaluationCode code = build_code(n, field, budget);
  report.check(QInt(code.length()) == params.length, "|GL_n| enumeration equals gl_order",
               std::to_string(code.length()));
  report.check(code.genmat_rank() == n * n, "generator matrix has rank n^2");

  const ExtremalK ek = extremal_k(nn, q);
  report.check(ek.k_max == 2 && ek.k_min == 1, "f_2 is the largest and f_1 the smallest f_k");

  report.guarded("partial trace counts", [&] {
    bool ok = true;
    for (std::size_t k = 1; k <= n; ++k)
      ok = ok && partial_trace_count(k, code.points(), cfg.workers) == stanley_f(k, nn, q);
    report.check(ok, "brute-force partial trace counts equal stanley_f for k = 1.." +
                         std::to_string(n));
  });

  const QInt d_hyper = min_distance(code, DistanceMethod::Hyperplane, cfg.workers);
  report.check(d_hyper == params.min_distance, "minimum distance: hyperplane = formula",
               to_string(d_hyper));

  const QInt sd = singleton_defect(params), gd = griesmer_defect(params);
  report.check(sd >= 0 && gd >= 0, "Singleton and Griesmer defects nonnegative",
               to_string(sd) + ", " + to_string(gd));
  if (n == 2) {
    const QInt Q = q;
    report.check(sd == pow(Q, 3) - pow(Q, 2) - 3 && gd == Q - 1,
                 "n = 2 defects are q^3 - q^2 - 3 and q - 1");
    report.check(gl2_params(q) == code_params(2, q), "n = 2 polynomial parameters equal the general formula");
  }

  {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      std::vector<Felt> m1, m2, sum;
      for (std::size_t k = 0; k < n * n; ++k) {
        m1.push_back(field->element(pick(rng)));
        m2.push_back(field->element(pick(rng)));
        sum.push_back(field->add(m1.back(), m2.back()));
      }
      const Codeword c1 = encode(code, m1), c2 = encode(code, m2), cs = encode(code, sum);
      for (std::size_t t = 0; t < code.length(); ++t)
        ok = ok && cs.symbols[t] == field->add(c1.symbols[t], c2.symbols[t]);
    }
    report.check(ok, "encode is linear (200 random message pairs)");
  }

  if (full) {
    const WeightDistribution wd = weight_distribution(code, cfg.workers);
    report.check(wd.total == matrix_count(n, q) && wd.counts.at(0) == 1,
                 "weight distribution totals q^(n^2) with one zero word");
    report.check(QInt(wd.min_nonzero_weight()) == params.min_distance,
                 "minimum distance: exhaustive = formula",
                 std::to_string(wd.min_nonzero_weight()));

    const QInt duality_work = QInt(matrix_count(n, q)) * code.length();
    if (duality_work <= 500'000'000) {
      bool ok = true;
      const std::uint64_t total = matrix_count(n, q);
      for (std::uint64_t idx = 1; idx < total && ok; ++idx) {
        const Mat b = Mat::from_index(n, field, MatIndex{idx});
        std::vector<Felt> msg;
        for (Code c : b.entries()) msg.push_back({c, field->id()});
        const std::size_t w = encode(code, msg).weight;
        ok = QInt(w) == QInt(code.length()) -
                            section_count(Hyperplane(b, field->zero()), code.points());
      }
      report.check(ok, "weight(m) = |GL| - |section(m, 0)| for every nonzero message");
    } else {
      report.skip("weight/section duality (message space too large)");
    }
  }

  if (section_oracle_feasible(n, q)) {
    report.guarded("section survey", [&] {
      const LevelSweep sweep = full ? LevelSweep::Full : LevelSweep::ZeroOne;
      bool ok = true, sums = true, c_dependent = false;
      std::size_t pairs = 0;
      const QInt order = gl_order(nn, q);
      std::map<std::uint64_t, QInt> per_normal;
      for (const SectionObservation& obs :
           survey_sections(n, field, LevelSweep::Full, cfg.workers)) {
        const QInt expected = expected_section_count(obs.rank, obs.level == 0, n, q);
        ok = ok && QInt(obs.count) == expected;
        c_dependent = c_dependent ||
                      (obs.level != 0 &&
                       QInt(obs.count) != stanley_f(static_cast<std::int64_t>(obs.rank), nn, q));
        per_normal[obs.normal.value] += obs.count;
        ++pairs;
      }
      for (const auto& [b, total] : per_normal) sums = sums && total == order;
      report.check(ok,
                   "every (B, 0) section count is f_rank(B) and every (B, c != 0) count "
                   "is (|GL| - f_rank(B)) / (q - 1)",
                   std::to_string(pairs) + " pairs");
      report.check(sums, "section counts over all c sum to |GL| for every B");
      if (c_dependent)
        report.info("section counts at c != 0 differ from f_rank(B); only c = 0 gives f_rank(B)");
      const ExtremalSections es =
          extremal_sections(n, field, SectionMode::Oracle, sweep, cfg.workers);
      report.check(es.argmax_r == 2 && es.argmin_r == 1,
                   "exhaustive extremal sections at ranks 2 (max) and 1 (min)",
                   to_string(es.max_count) + " / " + to_string(es.min_count));
    });
  } else {
    report.skip("exhaustive (B, c) section survey (n = 2, q <= 3 or n = 3, q = 2 only)");
  }

  if (cell_oracle_feasible(n, q)) {
    report.guarded("Bruhat census", [&] {
      const CellCensus census = cell_census(n, field);
      bool sizes_ok = true;
      for (const auto& [w, size] : census.sizes) sizes_ok = sizes_ok && QInt(size) == cell_count(w, q);
      report.check(sizes_ok && QInt(census.total) == gl_order(nn, q),
                   "L P_w U round trip on all of GL; cell sizes match cell_count and sum to |GL|");
      const H0Spectrum spectrum = h0_cell_spectrum(n, field);
      bool cells_ok = true;
      std::size_t expected = 0;
      for (const Perm& w : all_perms(n))
        if (w(1) != 1) ++expected;
      for (const Perm& w : spectrum.cells) cells_ok = cells_ok && w(1) != 1;
      report.check(cells_ok && spectrum.cells.size() == expected &&
                       spectrum.total == stanley_f(1, nn, q),
                   "cells inside {a_11 = 0} are exactly those with w(1) != 1",
                   to_string(spectrum.total));
    });
  } else {
    report.skip("Bruhat cell census (n <= 3, q <= 3 only)");
  }

  {
    const ReportMode mode = cell_oracle_feasible(n, q) ? ReportMode::Oracle : ReportMode::Formula;
    const BigCellReport bc = big_cell_report(n, field, mode);
    report.info("big-cell complement " + to_string(bc.complement_count) +
                " vs minimum hyperplane section " + to_string(bc.min_section_count) +
                (bc.equal ? " (equal)" : " (not equal)") +
                (mode == ReportMode::Oracle ? " [oracle]" : " [formula]"));
  }

  if (n == 2 && q == 2 && field->m() == 1) {
    const auto matchings = column_matchings(all_codewords(code), published_gl2_f2_codewords());
    report.check(!matchings.empty(), "codeword set matches the published [6,4,2]_2 list",
                 std::to_string(matchings.size()) + " column matchings");
    bool even = true;
    for (const auto& word : all_codewords(code)) {
      std::size_t w = 0;
      for (Code c : word) w += c;
      even = even && w % 2 == 0;
    }
    report.check(even, "every codeword has even weight (orthogonal to all-ones)");
  }

  out << (report.failures() == 0 ? "OK" : "FAILED") << " (" << report.failures()
      << " failing checks)\n";
  return report.failures() == 0 ? kOk : kCheckFailed;
}

std::vector<unsigned> parse_uint_list(const std::string& text) {
  std::vector<unsigned> coeffs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      coeffs.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw ParseError("bad integer in list '" + tok + "'");
    }
  }
  return coeffs;
}

template <class Fn>
int guarded_command(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

std::uint64_t resolve_column_budget(std::uint64_t explicit_budget) {
  if (explicit_budget != 0) return explicit_budget;
  if (const char* env = std::getenv("GLCODE_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("GLCODE_BUDGET must be a positive integer");
  }
  return kDefaultColumnBudget;
}

int cmd_params(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded_command(err, [&] {
    make_field(cfg);  // rejects q that is not a prime power
    const CodeParams p = code_params(static_cast<std::int64_t>(cfg.n), cfg.q);
    switch (cfg.format) {
      case OutputFormat::Json:
        out << params_json(p) << '\n';
        break;
      case OutputFormat::Csv:
        out << "n,q,length,dimension,min_distance,singleton_defect,griesmer_defect\n"
            << p.n << ',' << p.q << ',' << to_string(p.length) << ',' << p.dimension << ','
            << to_string(p.min_distance) << ',' << to_string(singleton_defect(p)) << ','
            << to_string(griesmer_defect(p)) << '\n';
        break;
      case OutputFormat::Text:
        out << '[' << to_string(p.length) << ',' << p.dimension << ','
            << to_string(p.min_distance) << "]_" << p.q << '\n';
        break;
    }
    return kOk;
  });
}

int cmd_verify(const RunConfig& cfg, VerifyLevel level, std::ostream& out,
               std::ostream& err) {
  return guarded_command(err, [&] {
    if (cfg.n < 2) throw OutOfRange("verify needs n >= 2");
    return verify_impl(cfg, level, out);
  });
}

int cmd_table(std::size_t n_max, const std::vector<std::uint32_t>& qs, std::ostream& out,
              std::ostream& err) {
  return guarded_command(err, [&] {
    if (qs.empty()) throw ParseError("empty q list");
    if (n_max < 2) throw OutOfRange("--n-max must be at least 2");
    for (std::uint32_t q : qs)
      if (!prime_power(q)) throw NotAPrimePower("q = " + std::to_string(q));
    out << "n,q,length,dimension,min_distance,singleton_defect,griesmer_defect\n";
    for (std::size_t n = 2; n <= n_max; ++n)
      for (std::uint32_t q : qs) {
        const CodeParams p = code_params(static_cast<std::int64_t>(n), q);
        out << n << ',' << q << ',' << to_string(p.length) << ',' << p.dimension << ','
            << to_string(p.min_distance) << ',' << to_string(singleton_defect(p)) << ','
            << to_string(griesmer_defect(p)) << '\n';
      }
    return kOk;
  });
}

int cmd_gen_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded_command(err, [&] {
    const EvaluationCode code =
        build_code(cfg.n, make_field(cfg), resolve_column_budget(cfg.column_budget));
    out << format_genmat(code);
    return kOk;
  });
}

int cmd_weights(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded_command(err, [&] {
    const EvaluationCode code =
        build_code(cfg.n, make_field(cfg), resolve_column_budget(cfg.column_budget));
    out << format_weights_csv(weight_distribution(code, cfg.workers));
    return kOk;
  });
}

int cmd_sections(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded_command(err, [&] {
    if (cfg.n < 1) throw OutOfRange("n must be positive");
    const FieldPtr field = make_field(cfg);
    const auto nn = static_cast<std::int64_t>(cfg.n);
    if (gl_order(nn, field->q()) > resolve_column_budget(cfg.column_budget))
      throw Infeasible("GL_n enumeration exceeds the column budget");
    const PointSet gl = enumerate_gl(cfg.n, field);
    out << "k,f_k_formula,f_k_bruteforce,match\n";
    for (std::size_t k = 1; k <= cfg.n; ++k) {
      const QInt formula = stanley_f(static_cast<std::int64_t>(k), nn, field->q());
      const QInt brute = partial_trace_count(k, gl, cfg.workers);
      out << k << ',' << to_string(formula) << ',' << to_string(brute) << ','
          << (formula == brute ? "true" : "false") << '\n';
    }
    return kOk;
  });
}

int cmd_bruhat(const RunConfig& cfg, const std::string& matrix_text, std::ostream& out,
               std::ostream& err) {
  return guarded_command(err, [&] {
    const FieldPtr field = make_field(cfg);
    const Mat a = parse_matrix(matrix_text, field);
    const BruhatFactorization f = bruhat_decompose(a);
    nlohmann::ordered_json j;
    j["w"] = f.w.one_line();
    j["L"] = format_matrix(f.lower);
    j["U"] = format_matrix(f.upper);
    out << j.dump() << '\n';
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation codes on GL_n(F_q): parameters, sections, Bruhat cells"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string poly, format = "json", out_path, level = "fast", matrix_text, q_list;
  std::size_t n_max = 2;

  auto add_common = [&](CLI::App* sub, bool with_n) {
    if (with_n) sub->add_option("--n", cfg.n, "matrix dimension")->required();
    sub->add_option("--q", cfg.q, "field order (prime power)")->required();
    sub->add_option("--poly", poly, "modulus coefficients, low degree first, e.g. 1,1,1");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.column_budget, "column budget (overrides GLCODE_BUDGET)");
    sub->add_option("--out", out_path, "write output to PATH instead of stdout");
  };

  auto* params = app.add_subcommand("params", "closed-form code parameters as JSON");
  add_common(params, true);
  params->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* verify = app.add_subcommand("verify", "run the oracle cross-checks");
  add_common(verify, true);
  verify->add_option("--level", level, "fast | full")->check(CLI::IsMember({"fast", "full"}));

  auto* table = app.add_subcommand("table", "parameter and defect table (CSV)");
  table->add_option("--n-max", n_max, "largest n")->required();
  table->add_option("--q", q_list, "comma-separated field orders")->required();
  table->add_option("--out", out_path, "write output to PATH instead of stdout");

  auto* gen = app.add_subcommand("gen-matrix", "generator matrix (text)");
  add_common(gen, true);
  auto* weights = app.add_subcommand("weights", "weight distribution (CSV)");
  add_common(weights, true);
  auto* sections = app.add_subcommand("sections", "partial-trace section counts (CSV)");
  add_common(sections, true);
  auto* bruhat = app.add_subcommand("bruhat", "LPU factorization of a matrix (JSON)");
  add_common(bruhat, false);
  bruhat->add_option("--matrix", matrix_text, "rows separated by ';', entries by ','")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << '\n';
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (!poly.empty()) cfg.modulus = parse_uint_list(poly);
    cfg.format = format == "csv" ? OutputFormat::Csv
                 : format == "text" ? OutputFormat::Text
                                    : OutputFormat::Json;
    cfg.subcommand = app.get_subcommands().front()->get_name();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (*params) return cmd_params(cfg, *sink, err);
  if (*verify)
    return cmd_verify(cfg, level == "full" ? VerifyLevel::Full : VerifyLevel::Fast, *sink, err);
  if (*table) {
    std::vector<std::uint32_t> qs;
    try {
      for (unsigned v : parse_uint_list(q_list)) qs.push_back(v);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    return cmd_table(n_max, qs, *sink, err);
  }
  if (*gen) return cmd_gen_matrix(cfg, *sink, err);
  if (*weights) return cmd_weights(cfg, *sink, err);
  if (*sections) return cmd_sections(cfg, *sink, err);
  if (*bruhat) return cmd_bruhat(cfg, matrix_text, *sink, err);
  return kUsage;
}

}  // namespace glcode::cli
