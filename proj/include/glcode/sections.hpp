#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "glcode/formulas.hpp"
#include "glcode/matrix.hpp"

namespace glcode {

/// The affine hyperplane {A in M_n : tr(A B^T) = c} with B != 0.
class Hyperplane {
public:
  /// Throws ZeroNormal if normal is zero, MixedFields on a foreign level.
  Hyperplane(Mat normal, Felt level);

  const Mat& normal() const { return normal_; }
  Felt level() const { return level_; }
  std::size_t n() const { return normal_.n(); }
  const FieldPtr& field_ptr() const { return normal_.field_ptr(); }

  bool contains(std::span<const Code> point) const {
    return trace_form_raw(point, normal_.entries(), normal_.field()) == level_.code;
  }

private:
  Mat normal_;
  Felt level_;
};

/// Rank-r partial-trace representative of a hyperplane section.
struct CanonicalSection {
  std::size_t rank;
  Felt level;
};

/// |H cap GL_n(F_q)| by full enumeration of GL_n.
QInt section_count(const Hyperplane& h, unsigned workers = 1);
/// Same, over a precomputed GL_n point list.
QInt section_count(const Hyperplane& h, const PointSet& gl, unsigned workers = 1);

/// Reduces H to (rank(B), c). The section size depends only on the rank
/// and on whether c is zero: it equals the count for {tr(A e_r) = c}.
CanonicalSection canonicalize(const Hyperplane& h);
/// The hyperplane {tr(A e_r) = c}.
Hyperplane canonical_hyperplane(const CanonicalSection& s, std::size_t n,
                                const FieldPtr& field);

/// Closed form for |{tr(A e_r) = c} cap GL_n|: f_r(n) when c = 0, and
/// (|GL_n| - f_r(n)) / (q - 1) for each of the q - 1 nonzero levels.
QInt expected_section_count(std::size_t rank, bool level_is_zero, std::size_t n,
                            std::uint64_t q);

/// Brute-force count of A in GL_n with a_11 + ... + a_kk = 0, 1 <= k <= n.
QInt partial_trace_count(std::size_t k, std::size_t n, const FieldPtr& field,
                         unsigned workers = 1);
QInt partial_trace_count(std::size_t k, const PointSet& gl, unsigned workers = 1);

/// Which levels c the exhaustive survey visits for each normal B.
enum class LevelSweep {
  ZeroOne,  // c in {0, 1}; scaling B permutes the nonzero levels
  Full,     // every c in F_q
};

struct SectionObservation {
  MatIndex normal;
  Code level;
  std::size_t rank;
  std::uint64_t count;
};

/// True when the exhaustive (B, c) survey is within the supported limits:
/// n = 2 with q <= 3, or n = 3 with q = 2.
bool section_oracle_feasible(std::size_t n, std::uint32_t q);

/// Every nonzero B (in MatIndex order) paired with the swept levels, with
/// its exact section count. Throws Infeasible outside the oracle limits.
std::vector<SectionObservation> survey_sections(std::size_t n,
                                                const FieldPtr& field,
                                                LevelSweep sweep,
                                                unsigned workers = 1);

enum class SectionMode { Formula, Oracle };

struct ExtremalSections {
  QInt max_count;
  QInt min_count;
  int argmax_r = 0;
  int argmin_r = 0;
  /// Distinct c = 0 counts seen by the oracle, ascending (formula mode:
  /// f_1..f_n deduplicated).
  std::vector<QInt> observed;
};

/// Largest and smallest sections {tr(A B^T) = 0} of GL_n(F_q), the ones
/// that determine codeword weights. Oracle mode surveys every (B, c): each
/// c = 0 count must be one of f_1..f_n, each c != 0 count must match
/// expected_section_count, and the c = 0 extrema must agree with the
/// formula mode; std::logic_error otherwise.
ExtremalSections extremal_sections(std::size_t n, const FieldPtr& field,
                                   SectionMode mode,
                                   LevelSweep sweep = LevelSweep::ZeroOne,
                                   unsigned workers = 1);

}  // namespace glcode
