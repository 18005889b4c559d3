// Acceptance criteria AC1..AC10. One line per criterion; exit status is 0
// when every criterion passes except those in kKnownFailures, which must
// still fail (a surprise pass is reported as an error too).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "glcode/bruhat.hpp"
#include "glcode/code.hpp"
#include "glcode/formulas.hpp"
#include "glcode/gf.hpp"
#include "glcode/matrix.hpp"
#include "glcode/sections.hpp"

using namespace glcode;

namespace {

const std::set<std::string> kKnownFailures = {"AC4"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[" << what << "] ";
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_s;
  std::function<void(Outcome&)> body;
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
  return s;
}

std::string nq(std::size_t n, std::uint32_t q) {
  return "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

bool linear_on_random_pairs(const EvaluationCode& code, std::mt19937_64& rng, int trials) {
  const Field& f = code.field();
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  const auto message = [&] {
    std::vector<Felt> m;
    for (std::size_t k = 0; k < code.rows(); ++k) m.push_back(f.element(d(rng)));
    return m;
  };
  for (int t = 0; t < trials; ++t) {
    const auto m1 = message(), m2 = message();
    const Felt a = f.element(d(rng));
    std::vector<Felt> mix;
    for (std::size_t k = 0; k < m1.size(); ++k) mix.push_back(f.add(f.mul(a, m1[k]), m2[k]));
    const Codeword c1 = encode(code, m1), c2 = encode(code, m2), cm = encode(code, mix);
    for (std::size_t i = 0; i < code.length(); ++i)
      if (cm.symbols[i] != f.add(f.mul(a, c1.symbols[i]), c2.symbols[i])) return false;
  }
  return true;
}

void ac1(Outcome& o) {
  const EvaluationCode code = build_code(2, field_new(2));
  const auto ours = all_codewords(code);
  const auto published = published_gl2_f2_codewords();
  const auto matchings = column_matchings(ours, published);
  o.expect(!matchings.empty(), "no column permutation maps the codewords onto the list");
  const CodeParams& p = code.params();
  o.expect(p.length == 6 && p.dimension == 4 && p.min_distance == 2, "parameters");
  const auto wd = weight_distribution(code);
  o.expect(wd.counts == std::map<std::size_t, std::uint64_t>{{0, 1}, {2, 6}, {4, 9}},
           "weight distribution");
  o.detail << "[6,4,2]_2, weights {0:1, 2:6, 4:9}, " << matchings.size()
           << " column permutations match the published set";
}

void ac2(Outcome& o) {
  const std::vector<std::tuple<std::size_t, std::uint32_t, int>> cases = {
      {2, 2, 2}, {2, 3, 30}, {2, 4, 132}, {2, 5, 380}, {3, 2, 80}};
  std::vector<std::string> seen;
  for (auto [n, q, expected] : cases) {
    const EvaluationCode code = build_code(n, field_new(q));
    const QInt ex = min_distance(code, DistanceMethod::Exhaustive, 4);
    const QInt hy = min_distance(code, DistanceMethod::Hyperplane, 4);
    const QInt fo = min_distance(code, DistanceMethod::Formula);
    o.expect(ex == hy && hy == fo && fo == expected, "d" + nq(n, q));
    seen.push_back(nq(n, q) + " d=" + to_string(ex));
  }
  o.detail << join(seen);
}

void ac3(Outcome& o) {
  std::size_t checked = 0;
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    const PointSet gl = enumerate_gl(n, field_new(q));
    for (std::size_t k = 1; k <= n; ++k, ++checked)
      o.expect(partial_trace_count(k, gl, 4) == stanley_f(static_cast<std::int64_t>(k), n, q),
               "f_" + std::to_string(k) + nq(n, q));
  }
  o.detail << checked << " (k, n, q) triples";
}

void ac4(Outcome& o) {
  std::uint64_t zero_pairs = 0, zero_bad = 0, nonzero_pairs = 0, nonzero_off = 0,
                nonzero_bad = 0;
  std::string example;
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    const FieldPtr f = field_new(q);
    for (const SectionObservation& s : survey_sections(n, f, LevelSweep::Full, 4)) {
      const QInt fr = stanley_f(static_cast<std::int64_t>(s.rank), n, q);
      if (s.level == 0) {
        ++zero_pairs;
        if (QInt(s.count) != fr) ++zero_bad;
        continue;
      }
      ++nonzero_pairs;
      if (QInt(s.count) != expected_section_count(s.rank, false, n, q)) ++nonzero_bad;
      if (QInt(s.count) != fr) {
        ++nonzero_off;
        if (example.empty())
          example = nq(n, q) + " B=" + format_matrix(Mat::from_index(n, f, s.normal)) +
                    " c=" + std::to_string(s.level) + ": " + std::to_string(s.count) +
                    " vs f_" + std::to_string(s.rank) + "=" + to_string(fr);
      }
    }
  }
  o.expect(zero_bad == 0, "c = 0 count differs from f_rank");
  o.expect(nonzero_off == 0, "count depends on c");
  o.detail << "c = 0: " << zero_pairs - zero_bad << "/" << zero_pairs << " pairs equal f_rank(B); "
           << "c != 0: " << nonzero_off << "/" << nonzero_pairs << " pairs differ from f_rank(B), "
           << nonzero_pairs - nonzero_bad << "/" << nonzero_pairs
           << " equal (|GL| - f_rank(B))/(q-1); e.g. " << example;
}

void ac5(Outcome& o) {
  std::vector<std::string> seen;
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 2u}}) {
    const EvaluationCode code = build_code(n, field_new(q));
    o.expect(code.genmat_rank() == n * n, "rank" + nq(n, q));
    seen.push_back(nq(n, q) + " rank " + std::to_string(code.genmat_rank()));
  }
  o.detail << join(seen);
}

void ac6(Outcome& o) {
  std::vector<std::string> seen;
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    const FieldPtr f = field_new(q);
    std::map<Perm, std::uint64_t> sizes;
    std::uint64_t total = 0;
    const PointSet gl = enumerate_gl(n, f);
    for (const Mat& a : gl.mats()) {
      const BruhatFactorization fac = bruhat_decompose(a);
      if (fac.lower * fac.w.matrix(f) * fac.upper != a) o.expect(false, "round trip" + nq(n, q));
      ++sizes[fac.w];
      ++total;
    }
    o.expect(sizes.size() == all_perms(n).size(), "every cell nonempty" + nq(n, q));
    for (const auto& [w, c] : sizes) o.expect(QInt(c) == cell_count(w, q), "cell " + w.str());
    o.expect(QInt(total) == gl_order(n, q), "sum" + nq(n, q));
    seen.push_back(nq(n, q) + " " + std::to_string(total));
  }
  o.detail << "points decomposed: " << join(seen);
}

void ac7(Outcome& o) {
  std::vector<std::string> seen;
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    const H0Spectrum s = h0_cell_spectrum(n, field_new(q));
    std::vector<Perm> expected;
    for (const Perm& w : all_perms(n))
      if (w(1) != 1) expected.push_back(w);
    o.expect(s.cells == expected, "cells" + nq(n, q));
    o.expect(s.total == stanley_f(1, n, q), "total" + nq(n, q));
    seen.push_back(nq(n, q) + " " + std::to_string(s.cells.size()) + " cells, " +
                   to_string(s.total));
  }
  o.detail << join(seen);
}

void ac8(Outcome& o) {
  std::vector<std::string> seen;
  const auto report = [&](std::size_t n, std::uint32_t q, ReportMode mode, bool want_equal) {
    const BigCellReport r = big_cell_report(n, field_new(q), mode);
    o.expect(r.equal == want_equal, "equal" + nq(n, q));
    seen.push_back(nq(n, q) + " " + to_string(r.complement_count) + " vs " +
                   to_string(r.min_section_count) + (r.equal ? " equal" : " NOT equal"));
    return r;
  };
  report(2, 2, ReportMode::Oracle, true);
  report(2, 3, ReportMode::Oracle, true);
  report(2, 4, ReportMode::Formula, true);
  const BigCellReport r32 = report(3, 2, ReportMode::Oracle, false);
  const BigCellReport f32 = big_cell_report(3, field_new(2), ReportMode::Formula);
  o.expect(r32.complement_count == 104 && r32.min_section_count == 72, "(3,2) pair");
  o.expect(f32.complement_count == r32.complement_count &&
               f32.min_section_count == r32.min_section_count,
           "(3,2) oracle and formula agree");
  o.detail << join(seen);
}

void ac9(Outcome& o) {
  std::vector<std::string> seen;
  for (std::uint64_t q = 2; q <= 7; ++q) {
    const CodeParams p = code_params(2, q);
    const QInt Q = q;
    o.expect(singleton_defect(p) == Q * Q * Q - Q * Q - 3, "singleton q=" + std::to_string(q));
    o.expect(griesmer_defect(p) == Q - 1, "griesmer q=" + std::to_string(q));
    seen.push_back(to_string(singleton_defect(p)) + "/" + to_string(griesmer_defect(p)));
  }
  o.detail << "q=2..7 defects " << join(seen);
}

void ac10(Outcome& o) {
  std::size_t fields = 0;
  for (std::uint32_t q = 2; q <= 16; ++q) {
    if (!prime_power(q)) continue;
    const FieldPtr f = field_new(q);
    bool ok = true;
    for (Felt a : f->elements()) {
      ok = ok && f->add(a, f->zero()) == a && f->mul(a, f->one()) == a &&
           f->add(a, f->neg(a)) == f->zero();
      if (a.code != 0) ok = ok && f->mul(a, f->inv(a)) == f->one();
      for (Felt b : f->elements()) {
        ok = ok && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
        for (Felt c : f->elements()) {
          ok = ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c)) &&
               f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)) &&
               f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
        }
      }
    }
    o.expect(ok, "axioms F_" + std::to_string(q));
    ++fields;
  }

  std::mt19937_64 rng(2024);
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 2u}}) {
    const EvaluationCode code = build_code(n, field_new(q));
    o.expect(linear_on_random_pairs(code, rng, 200), "linearity" + nq(n, q));
  }

  std::uint64_t dual = 0;
  for (auto [n, q] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    const FieldPtr f = field_new(q);
    const EvaluationCode code = build_code(n, f);
    for (const Mat& b : enumerate_all(n, f)) {
      if (b.is_zero()) continue;
      std::vector<Felt> msg;
      for (Code c : b.entries()) msg.push_back(f->element(c));
      const QInt w = encode(code, msg).weight;
      o.expect(w == QInt(code.length()) - section_count(Hyperplane(b, f->zero()), code.points()),
               "duality" + nq(n, q));
      ++dual;
    }
  }
  o.detail << fields << " fields exhaustive, 5 x 200 linearity trials, " << dual
           << " duality messages";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "GL_2(F_2) code reproduces the published [6,4,2]_2 example", 1, ac1},
      {"AC2", "minimum distance: exhaustive = hyperplane = formula", 60, ac2},
      {"AC3", "partial trace counts equal the closed form", 30, ac3},
      {"AC4", "every (B != 0, c) section count equals f_rank(B)", 60, ac4},
      {"AC5", "generator matrix has rank n^2", 60, ac5},
      {"AC6", "LPU round trip, cell partition and cell sizes", 60, ac6},
      {"AC7", "cells inside {a_11 = 0} are {w : w(1) != 1} and sum to f_1", 60, ac7},
      {"AC8", "big-cell complement vs minimum section", 10, ac8},
      {"AC9", "n = 2 Singleton and Griesmer defects", 1, ac9},
      {"AC10", "field axioms, encode linearity, weight/section duality", 30, ac10},
  };

  int unexpected = 0, passed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < c.limit_s, "time limit " + std::to_string(c.limit_s) + " s");

    const bool known = kKnownFailures.contains(c.id);
    if (o.pass) ++passed;
    if (o.pass == known) ++unexpected;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  (" << timing
              << ")  " << o.detail.str();
    if (known) std::cout << (o.pass ? "  [expected failure did not occur]" : "  [known failure]");
    std::cout << '\n';
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass";
  for (const std::string& id : kKnownFailures) std::cout << "; known failure: " << id;
  std::cout << '\n';
  return unexpected == 0 ? 0 : 1;
}
