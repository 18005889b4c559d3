#include "glcode/sections.hpp"

#include <algorithm>
#include <stdexcept>

#include "glcode/parallel.hpp"

namespace glcode {

namespace {

std::uint64_t count_points(const PointSet& gl, unsigned workers,
                           auto&& predicate) {
  return parallel_reduce(
      gl.size(), workers, std::uint64_t{0},
      [&](std::size_t begin, std::size_t end) {
        std::uint64_t c = 0;
        for (std::size_t t = begin; t < end; ++t)
          if (predicate(gl.entries(t))) ++c;
        return c;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

}  // namespace

Hyperplane::Hyperplane(Mat normal, Felt level)
    : normal_(std::move(normal)), level_(level) {
  normal_.field().check(level_);
  if (normal_.is_zero()) throw ZeroNormal("hyperplane normal B must be nonzero");
}

QInt section_count(const Hyperplane& h, const PointSet& gl, unsigned workers) {
  if (gl.field().id() != h.field_ptr()->id())
    throw MixedFields("point set and hyperplane over different fields");
  if (gl.n() != h.n()) throw DimensionMismatch("point set and hyperplane sizes");
  return count_points(gl, workers, [&](std::span<const Code> a) { return h.contains(a); });
}

QInt section_count(const Hyperplane& h, unsigned workers) {
  return section_count(h, enumerate_gl(h.n(), h.field_ptr()), workers);
}

CanonicalSection canonicalize(const Hyperplane& h) {
  const RankNormalForm nf = rank_normal_form(h.normal());
  return {nf.rank, h.level()};
}

Hyperplane canonical_hyperplane(const CanonicalSection& s, std::size_t n,
                                const FieldPtr& field) {
  if (s.rank < 1 || s.rank > n) throw OutOfRange("rank must lie in [1, n]");
  return Hyperplane(Mat::idempotent(n, s.rank, field), s.level);
}

QInt partial_trace_count(std::size_t k, const PointSet& gl, unsigned workers) {
  const std::size_t n = gl.n();
  if (k < 1 || k > n)
    throw OutOfRange("partial trace needs 1 <= k <= n, got k = " + std::to_string(k));
  const Field& f = gl.field();
  return count_points(gl, workers, [&](std::span<const Code> a) {
    Code s = 0;
    for (std::size_t i = 0; i < k; ++i) s = f.add_raw(s, a[i * n + i]);
    return s == 0;
  });
}

QInt partial_trace_count(std::size_t k, std::size_t n, const FieldPtr& field,
                         unsigned workers) {
  if (k < 1 || k > n)
    throw OutOfRange("partial trace needs 1 <= k <= n, got k = " + std::to_string(k));
  return partial_trace_count(k, enumerate_gl(n, field), workers);
}

QInt expected_section_count(std::size_t rank, bool level_is_zero, std::size_t n,
                            std::uint64_t q) {
  const auto nn = static_cast<std::int64_t>(n);
  const QInt f = stanley_f(static_cast<std::int64_t>(rank), nn, q);
  if (level_is_zero) return f;
  const QInt rest = gl_order(nn, q) - f;
  if (rest % (q - 1) != 0) throw std::logic_error("nonzero levels do not split evenly");
  return rest / (q - 1);
}

bool section_oracle_feasible(std::size_t n, std::uint32_t q) {
  return (n == 2 && q <= 3) || (n == 3 && q == 2);
}

std::vector<SectionObservation> survey_sections(std::size_t n,
                                                const FieldPtr& field,
                                                LevelSweep sweep,
                                                unsigned workers) {
  const Field& f = *field;
  if (!section_oracle_feasible(n, f.q()))
    throw Infeasible("exhaustive section survey supports n = 2 with q <= 3 "
                     "and n = 3 with q = 2");
  const PointSet gl = enumerate_gl(n, field);
  const std::uint64_t normals = matrix_count(n, f.q());
  const std::uint32_t levels = sweep == LevelSweep::Full ? f.q() : std::min(f.q(), 2u);

  using Batch = std::vector<SectionObservation>;
  return parallel_reduce(
      static_cast<std::size_t>(normals - 1), workers, Batch{},
      [&](std::size_t begin, std::size_t end) {
        Batch out;
        std::vector<std::uint64_t> histogram(f.q());
        for (std::size_t i = begin; i < end; ++i) {
          const Mat b = Mat::from_index(n, field, MatIndex{i + 1});
          const std::size_t r = rank(b);
          std::fill(histogram.begin(), histogram.end(), 0);
          for (std::size_t t = 0; t < gl.size(); ++t)
            ++histogram[trace_form_raw(gl.entries(t), b.entries(), f)];
          for (std::uint32_t c = 0; c < levels; ++c)
            out.push_back({b.index(), static_cast<Code>(c), r, histogram[c]});
        }
        return out;
      },
      [](Batch acc, Batch part) {
        acc.insert(acc.end(), part.begin(), part.end());
        return acc;
      });
}

ExtremalSections extremal_sections(std::size_t n, const FieldPtr& field,
                                   SectionMode mode, LevelSweep sweep,
                                   unsigned workers) {
  const std::uint64_t q = field->q();
  const auto nn = static_cast<std::int64_t>(n);
  const ExtremalK ek = extremal_k(nn, q);

  ExtremalSections formula;
  formula.max_count = ek.values[ek.k_max - 1];
  formula.min_count = ek.values[ek.k_min - 1];
  formula.argmax_r = ek.k_max;
  formula.argmin_r = ek.k_min;
  formula.observed = ek.values;
  std::sort(formula.observed.begin(), formula.observed.end());
  formula.observed.erase(std::unique(formula.observed.begin(), formula.observed.end()),
                         formula.observed.end());
  if (mode == SectionMode::Formula) return formula;

  ExtremalSections oracle;
  bool first = true;
  for (const SectionObservation& obs : survey_sections(n, field, sweep, workers)) {
    const QInt count = obs.count;
    if (obs.level != 0) {
      if (count != expected_section_count(obs.rank, false, n, q))
        throw std::logic_error("section count " + to_string(count) + " at a nonzero level");
      continue;
    }
    if (std::find(ek.values.begin(), ek.values.end(), count) == ek.values.end())
      throw std::logic_error("section count " + to_string(count) +
                             " is not one of f_1..f_n");
    const int r = static_cast<int>(obs.rank);
    if (first || count > oracle.max_count ||
        (count == oracle.max_count && r < oracle.argmax_r)) {
      oracle.max_count = count;
      oracle.argmax_r = r;
    }
    if (first || count < oracle.min_count ||
        (count == oracle.min_count && r < oracle.argmin_r)) {
      oracle.min_count = count;
      oracle.argmin_r = r;
    }
    first = false;
    if (std::find(oracle.observed.begin(), oracle.observed.end(), count) ==
        oracle.observed.end())
      oracle.observed.push_back(count);
  }
  std::sort(oracle.observed.begin(), oracle.observed.end());
  if (oracle.max_count != formula.max_count || oracle.min_count != formula.min_count ||
      oracle.argmax_r != formula.argmax_r || oracle.argmin_r != formula.argmin_r)
    throw std::logic_error("exhaustive section extrema disagree with the formulas");
  return oracle;
}

}  // namespace glcode
