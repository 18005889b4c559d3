#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glcode/formulas.hpp"
#include "glcode/matrix.hpp"

namespace glcode {

/// Permutation of {1..n} in one-line notation w(1) .. w(n).
class Perm {
public:
  /// Throws OutOfRange unless one_line is a bijection of {1..n}.
  explicit Perm(std::vector<int> one_line);

  static Perm identity(std::size_t n);
  /// The order-reversing permutation (n, n-1, .., 1).
  static Perm longest(std::size_t n);
  /// Simple transposition s_i swapping i and i+1, 1 <= i < n.
  static Perm simple(std::size_t i, std::size_t n);

  std::size_t size() const { return w_.size(); }
  /// w(i) for 1-based i.
  int operator()(std::size_t i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  /// Inversion count.
  std::size_t length() const;
  bool is_identity() const;
  Perm inverse() const;
  /// Permutation matrix with (P_w)_{w(j), j} = 1.
  Mat matrix(const FieldPtr& field) const;
  /// "(2,1,3)".
  std::string str() const;

  /// (v * w)(i) = v(w(i)).
  friend Perm operator*(const Perm& v, const Perm& w);
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> w_;
};

inline std::size_t perm_length(const Perm& w) { return w.length(); }
inline Perm longest_element(std::size_t n) { return Perm::longest(n); }

/// All permutations of {1..n} in lexicographic order.
std::vector<Perm> all_perms(std::size_t n);

/// Bruhat order by the tableau criterion: v <= w iff for every prefix length
/// i the sorted values of v(1..i) are entrywise <= those of w(1..i).
bool bruhat_leq(const Perm& v, const Perm& w);

/// A = L * P_w * U with L lower and U upper triangular, both invertible.
struct BruhatFactorization {
  Mat lower;
  Perm w;
  Mat upper;
};

/// The permutation of the double coset B^- w B containing A, read off the
/// northwest rank matrix: rank(A[1..i, 1..j]) = #{l <= j : w(l) <= i}.
/// Throws Singular.
Perm bruhat_perm_from_ranks(const Mat& a);

/// LPU factorization. The permutation is taken from the rank matrix; the
/// elimination that builds L and U must land on the same permutation and
/// the product is re-checked before returning. Throws Singular.
BruhatFactorization bruhat_decompose(const Mat& a);

/// |B^- P_w B| = (q-1)^n q^(2 C(n,2) - l(w)).
QInt cell_count(const Perm& w, std::uint64_t q);

/// A in B^- B. Computed both as "w = id" and as "every leading principal
/// minor is nonzero"; throws std::logic_error if they disagree.
bool big_cell_membership(const Mat& a);
bool leading_minors_nonzero(const Mat& a);

/// Exhaustive-bucketing limit shared by the cell census and its clients.
bool cell_oracle_feasible(std::size_t n, std::uint32_t q);

/// Result of bucketing all of GL_n(F_q) by Bruhat cell.
struct CellCensus {
  std::map<Perm, std::uint64_t> sizes;
  /// True iff every member of the cell has a_11 = 0.
  std::map<Perm, bool> inside_h0;
  std::uint64_t total = 0;
};

/// Decomposes every invertible matrix (n <= 3, q <= 3; Infeasible otherwise).
CellCensus cell_census(std::size_t n, const FieldPtr& field);

struct H0Spectrum {
  /// Cells contained in {a_11 = 0}, ascending.
  std::vector<Perm> cells;
  std::vector<std::uint64_t> sizes;
  QInt total;
};

/// Cells B^- P_w B lying entirely inside {a_11 = 0}, found by bucketing.
H0Spectrum h0_cell_spectrum(std::size_t n, const FieldPtr& field);

enum class ReportMode { Formula, Oracle };

/// Compares |GL_n \ B^- B| with the smallest hyperplane section f_1(n).
/// Measures only; equal may be false.
struct BigCellReport {
  QInt complement_count;
  QInt min_section_count;
  bool equal = false;
};

/// Formula mode: gl_order - (q-1)^n q^(n(n-1)) against stanley_f(1).
/// Oracle mode (n <= 3, q <= 3): leading-minor count of the complement
/// against the brute-force a_11 = 0 count.
BigCellReport big_cell_report(std::size_t n, const FieldPtr& field,
                              ReportMode mode);

}  // namespace glcode
