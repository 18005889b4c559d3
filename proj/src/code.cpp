#include "glcode/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "glcode/parallel.hpp"
#include "glcode/sections.hpp"

namespace glcode {

EvaluationCode::EvaluationCode(PointSet points, std::vector<Code> genmat,
                               std::size_t genmat_rank)
    : points_(std::move(points)), genmat_(std::move(genmat)), rank_(genmat_rank),
      params_(code_params(static_cast<std::int64_t>(points_.n()), points_.field().q())) {
  if (genmat_.size() != rows() * length())
    throw DimensionMismatch("generator matrix size");
}

EvaluationCode build_code(std::size_t n, const FieldPtr& field, std::uint64_t max_columns) {
  if (n < 2) throw OutOfRange("evaluation code needs n >= 2, got " + std::to_string(n));
  const QInt expected = gl_order(static_cast<std::int64_t>(n), field->q());
  if (expected > max_columns)
    throw Infeasible("code length " + to_string(expected) + " exceeds the column budget " +
                     std::to_string(max_columns));

  PointSet points = enumerate_gl(n, field);
  if (QInt(points.size()) != expected)
    throw std::logic_error("enumerate_gl size differs from gl_order");

  const std::size_t rows = n * n;
  const std::size_t len = points.size();
  std::vector<Code> genmat(rows * len);
  for (std::size_t t = 0; t < len; ++t) {
    const auto e = points.entries(t);
    for (std::size_t k = 0; k < rows; ++k) genmat[k * len + t] = e[k];
  }
  const std::size_t r = rank_of(genmat, rows, len, *field);
  if (r != rows)
    throw std::logic_error("generator matrix rank " + std::to_string(r) + " != n^2");
  return EvaluationCode(std::move(points), std::move(genmat), r);
}

Mat message_matrix(const EvaluationCode& code, std::span<const Felt> message) {
  if (message.size() != code.rows())
    throw DimensionMismatch("message length " + std::to_string(message.size()) +
                            ", expected " + std::to_string(code.rows()));
  std::vector<Code> entries;
  entries.reserve(message.size());
  for (Felt m : message) {
    code.field().check(m);
    entries.push_back(m.code);
  }
  return Mat(code.n(), code.field_ptr(), std::move(entries));
}

Codeword encode(const EvaluationCode& code, std::span<const Felt> message) {
  const Mat b = message_matrix(code, message);
  const Field& f = code.field();
  Codeword out;
  out.symbols.reserve(code.length());
  for (std::size_t t = 0; t < code.length(); ++t) {
    const Code s = trace_form_raw(code.points().entries(t), b.entries(), f);
    out.symbols.push_back({s, f.id()});
    if (s != 0) ++out.weight;
  }
  return out;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
  for (const auto& [w, c] : counts)
    if (w != 0 && c != 0) return w;
  throw std::logic_error("weight distribution has no nonzero codeword");
}

WeightDistribution weight_distribution(const EvaluationCode& code, unsigned workers,
                                       std::uint64_t max_work) {
  const Field& f = code.field();
  const std::uint64_t q = f.q();
  const std::size_t k_rows = code.rows();
  const std::size_t len = code.length();

  // Projective classes with leading coefficient at position p: q^(K-1-p).
  std::vector<std::uint64_t> block(k_rows);
  std::uint64_t classes = 0;
  for (std::size_t p = 0; p < k_rows; ++p) {
    std::uint64_t b = 1;
    for (std::size_t i = p + 1; i < k_rows; ++i) {
      if (b > UINT64_MAX / q) throw Infeasible("message space too large");
      b *= q;
    }
    block[p] = b;
    classes += b;
  }
  if (len != 0 && classes > max_work / len)
    throw Infeasible("weight enumeration needs " + std::to_string(classes) + " x " +
                     std::to_string(len) + " symbol evaluations");

  using Hist = std::vector<std::uint64_t>;
  Hist hist = parallel_reduce(
      static_cast<std::size_t>(classes), workers, Hist(len + 1, 0),
      [&](std::size_t begin, std::size_t end) {
        Hist local(len + 1, 0);
        std::vector<Code> msg(k_rows), acc(len);
        for (std::size_t g = begin; g < end; ++g) {
          std::uint64_t rest = g;
          std::size_t lead = 0;
          while (rest >= block[lead]) rest -= block[lead++];
          std::fill(msg.begin(), msg.end(), 0);
          msg[lead] = 1;
          for (std::size_t i = k_rows; i-- > lead + 1;) {
            msg[i] = static_cast<Code>(rest % q);
            rest /= q;
          }
          std::fill(acc.begin(), acc.end(), 0);
          for (std::size_t k = lead; k < k_rows; ++k) {
            if (msg[k] == 0) continue;
            const auto row = code.genmat_row(k);
            for (std::size_t t = 0; t < len; ++t)
              acc[t] = f.add_raw(acc[t], f.mul_raw(msg[k], row[t]));
          }
          const auto w = static_cast<std::size_t>(
              std::count_if(acc.begin(), acc.end(), [](Code c) { return c != 0; }));
          ++local[w];
        }
        return local;
      },
      [](Hist a, const Hist& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
      });

  WeightDistribution wd;
  wd.counts[0] = 1;
  for (std::size_t w = 0; w <= len; ++w)
    if (hist[w] != 0) wd.counts[w] += hist[w] * (q - 1);
  wd.total = 0;
  for (const auto& [w, c] : wd.counts) wd.total += c;
  return wd;
}

QInt min_distance(const EvaluationCode& code, DistanceMethod method, unsigned workers) {
  switch (method) {
    case DistanceMethod::Exhaustive:
      return weight_distribution(code, workers).min_nonzero_weight();
    case DistanceMethod::Hyperplane: {
      QInt best = 0;
      for (std::size_t r = 1; r <= code.n(); ++r) {
        const Hyperplane h = canonical_hyperplane({r, code.field().zero()}, code.n(),
                                                  code.field_ptr());
        best = std::max(best, section_count(h, code.points(), workers));
      }
      return QInt(code.length()) - best;
    }
    case DistanceMethod::Formula:
      return code.params().min_distance;
  }
  throw std::logic_error("unknown distance method");
}

std::vector<std::vector<Code>> all_codewords(const EvaluationCode& code) {
  const Field& f = code.field();
  const std::uint64_t total = matrix_count(code.n(), f.q());
  if (total > (1u << 20)) throw Infeasible("too many codewords to list");
  std::vector<std::vector<Code>> out;
  out.reserve(total);
  std::vector<Code> msg(code.rows(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t k = code.rows(); k-- > 0;) {
      msg[k] = static_cast<Code>(rest % f.q());
      rest /= f.q();
    }
    std::vector<Code> word(code.length());
    for (std::size_t t = 0; t < code.length(); ++t)
      word[t] = trace_form_raw(code.points().entries(t), msg, f);
    out.push_back(std::move(word));
  }
  return out;
}

std::vector<std::vector<Code>> published_gl2_f2_codewords() {
  return {
      {1, 1, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 1, 0},
      {0, 0, 0, 1, 0, 1}, {0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 1, 1}, {1, 0, 0, 1, 1, 1},
      {1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {1, 1, 1, 0, 0, 1},
      {1, 1, 0, 1, 1, 0}, {1, 0, 1, 1, 0, 1}, {0, 1, 1, 1, 1, 0}, {0, 0, 0, 0, 0, 0},
  };
}

std::vector<std::vector<std::size_t>> column_matchings(
    const std::vector<std::vector<Code>>& ours,
    const std::vector<std::vector<Code>>& target) {
  std::vector<std::vector<std::size_t>> out;
  if (ours.empty() || target.empty()) return out;
  const std::size_t len = ours.front().size();
  if (len > 8) throw Infeasible("column matching is brute force; length <= 8");
  const std::set<std::vector<Code>> goal(target.begin(), target.end());
  const std::set<std::vector<Code>> mine(ours.begin(), ours.end());
  if (goal.size() != mine.size()) return out;

  std::vector<std::size_t> pi(len);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (const auto& word : mine) {
      std::vector<Code> moved(len);
      for (std::size_t t = 0; t < len; ++t) moved[t] = word[pi[t]];
      if (!goal.contains(moved)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::string format_genmat(const EvaluationCode& code) {
  std::ostringstream out;
  for (std::size_t k = 0; k < code.rows(); ++k) {
    const auto row = code.genmat_row(k);
    for (std::size_t t = 0; t < row.size(); ++t) out << (t ? " " : "") << row[t];
    out << '\n';
  }
  return out.str();
}

std::string format_weights_csv(const WeightDistribution& wd) {
  std::ostringstream out;
  out << "weight,count\n";
  for (const auto& [w, c] : wd.counts) out << w << ',' << c << '\n';
  return out.str();
}

std::string params_json(const CodeParams& p) {
  std::ostringstream out;
  out << "{\"n\":" << p.n << ",\"q\":" << p.q << ",\"length\":" << to_string(p.length)
      << ",\"dimension\":" << p.dimension
      << ",\"min_distance\":" << to_string(p.min_distance)
      << ",\"singleton_defect\":" << to_string(singleton_defect(p))
      << ",\"griesmer_defect\":" << to_string(griesmer_defect(p)) << '}';
  return out.str();
}

}  // namespace glcode
