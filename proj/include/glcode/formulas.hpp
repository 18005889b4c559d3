#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glcode/error.hpp"

namespace glcode {

/// Exact nonnegative integer used for every counting formula.
using QInt = boost::multiprecision::cpp_int;

/// [r]_q = 1 + q + ... + q^(r-1), with [0]_q = 1.
QInt q_int(std::int64_t r, std::uint64_t q);
/// [r]_q! = [r]_q [r-1]_q ... [1]_q.
QInt q_factorial(std::int64_t r, std::uint64_t q);

/// |GL_n(F_q)| as the product prod_{i<n} (q^n - q^i).
QInt gl_order_product(std::int64_t n, std::uint64_t q);
/// |GL_n(F_q)| = q^C(n,2) (q-1)^n [n]_q!. Also evaluates the product form
/// and throws std::logic_error if the two disagree.
QInt gl_order(std::int64_t n, std::uint64_t q);
/// gl_order(n) == q^(n-1) (q^n - 1) gl_order(n-1). Requires n >= 2.
bool gl_order_recurrence_check(std::int64_t n, std::uint64_t q);

/// Number of A in GL_n(F_q) with a_11 + ... + a_kk = 0 (Stanley's closed
/// form). Requires 0 <= k <= n.
QInt stanley_f(std::int64_t k, std::int64_t n, std::uint64_t q);

struct ExtremalK {
  int k_max;
  int k_min;
  /// f_1 .. f_n.
  std::vector<QInt> values;
};

/// Arg-max and arg-min of f_k over k in [1, n]; ties go to the smaller k.
ExtremalK extremal_k(std::int64_t n, std::uint64_t q);

/// [length, dimension, min_distance]_q of the GL_n(F_q) evaluation code.
struct CodeParams {
  QInt length;
  unsigned dimension = 0;
  QInt min_distance;
  std::uint64_t q = 0;
  unsigned n = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Closed-form parameters for n >= 2. Cross-checks the minimum distance
/// against length - f_2(n).
CodeParams code_params(std::int64_t n, std::uint64_t q);
/// The n = 2 specialisation (q^4-q^3-q^2+q, 4, q^4-2q^3+q).
CodeParams gl2_params(std::uint64_t q);

/// (length - dimension + 1) - min_distance.
QInt singleton_defect(const CodeParams& p);
/// length - sum_{i=0}^{k-1} ceil(d / q^i).
QInt griesmer_defect(const CodeParams& p);

/// Decimal rendering, never scientific.
std::string to_string(const QInt& v);

}  // namespace glcode
