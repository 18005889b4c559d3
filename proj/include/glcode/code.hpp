#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "glcode/formulas.hpp"
#include "glcode/matrix.hpp"

namespace glcode {

/// Builds larger than this many columns are refused unless overridden.
inline constexpr std::uint64_t kDefaultColumnBudget = 10'000'000;
/// Default cap on (message classes) x (length) for weight enumeration.
inline constexpr std::uint64_t kDefaultWeightWork = 5'000'000'000ULL;

/// The linear code obtained by evaluating every linear form on M_n(F_q) at
/// the points of GL_n(F_q), taken in MatIndex order.
///
/// Row k of the generator matrix evaluates the coordinate functional a_ij
/// (k = i*n + j), so column t is the row-major flattening of point t.
class EvaluationCode {
public:
  EvaluationCode(PointSet points, std::vector<Code> genmat, std::size_t genmat_rank);

  std::size_t n() const { return points_.n(); }
  const FieldPtr& field_ptr() const { return points_.field_ptr(); }
  const Field& field() const { return points_.field(); }
  std::size_t length() const { return points_.size(); }
  /// Number of generator rows, n^2.
  std::size_t rows() const { return n() * n(); }
  std::size_t genmat_rank() const { return rank_; }

  const PointSet& points() const { return points_; }
  std::span<const Code> genmat_row(std::size_t k) const {
    return {genmat_.data() + k * length(), length()};
  }
  Code genmat_at(std::size_t k, std::size_t t) const { return genmat_[k * length() + t]; }

  /// Closed-form parameters.
  const CodeParams& params() const { return params_; }

private:
  PointSet points_;
  std::vector<Code> genmat_;
  std::size_t rank_;
  CodeParams params_;
};

/// Enumerates GL_n(F_q) and assembles the generator matrix; asserts that it
/// has full rank n^2. Throws OutOfRange for n < 2, Infeasible when the
/// length would exceed max_columns.
EvaluationCode build_code(std::size_t n, const FieldPtr& field,
                          std::uint64_t max_columns = kDefaultColumnBudget);

struct Codeword {
  std::vector<Felt> symbols;
  std::size_t weight = 0;
};

/// Reshapes a length-n^2 message row-major into the matrix B.
Mat message_matrix(const EvaluationCode& code, std::span<const Felt> message);

/// Symbol t is tr(point_t B^T) with B the reshaped message.
Codeword encode(const EvaluationCode& code, std::span<const Felt> message);

/// Hamming-weight histogram over all q^(n^2) messages.
struct WeightDistribution {
  std::map<std::size_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::size_t min_nonzero_weight() const;
};

/// Exact weight distribution. Walks one message per projective class
/// (leading nonzero coefficient 1) and scales by q - 1. The result does not
/// depend on the worker count.
WeightDistribution weight_distribution(const EvaluationCode& code,
                                       unsigned workers = 1,
                                       std::uint64_t max_work = kDefaultWeightWork);

enum class DistanceMethod { Exhaustive, Hyperplane, Formula };

/// Exhaustive: smallest nonzero weight. Hyperplane: length minus the
/// largest section {tr(A e_r) = 0}, r = 1..n, counted over the code's points.
/// Formula: code_params.
QInt min_distance(const EvaluationCode& code, DistanceMethod method,
                  unsigned workers = 1);

/// Every codeword, messages in base-q order (first coordinate most
/// significant). Throws Infeasible above 2^20 codewords.
std::vector<std::vector<Code>> all_codewords(const EvaluationCode& code);

/// The sixteen codewords of the [6,4,2]_2 code over GL_2(F_2) as listed in
/// the literature, in a column order of their own.
std::vector<std::vector<Code>> published_gl2_f2_codewords();

/// Every column permutation pi (new column t = old column pi[t]) mapping the
/// codeword set `ours` onto `target` as sets. Brute force; length <= 8.
std::vector<std::vector<std::size_t>> column_matchings(
    const std::vector<std::vector<Code>>& ours,
    const std::vector<std::vector<Code>>& target);

/// Generator matrix text: one row per line, symbols separated by spaces.
std::string format_genmat(const EvaluationCode& code);
/// "weight,count" CSV with a header row.
std::string format_weights_csv(const WeightDistribution& wd);
/// {"n","q","length","dimension","min_distance","singleton_defect",
/// "griesmer_defect"} with plain decimal integers.
std::string params_json(const CodeParams& p);

}  // namespace glcode
