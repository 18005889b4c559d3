#pragma once

// Test-only oracles. Each one reaches its answer by a route that does not
// share code with the library path it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "glcode/bruhat.hpp"
#include "glcode/gf.hpp"
#include "glcode/matrix.hpp"

namespace oracle {

using glcode::Code;

/// Product of two encodings in F_p[x]/(modulus) by schoolbook
/// multiplication and long division, digit by digit.
inline Code poly_mul(Code a, Code b, std::uint32_t p, const std::vector<unsigned>& modulus) {
  const std::size_t m = modulus.size() - 1;
  std::vector<long> x(m), y(m), prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    const long c = prod[d];
    if (c == 0) continue;
    // modulus is monic: x^m = -(lower terms)
    for (std::size_t i = 0; i <= m; ++i)
      prod[d - m + i] = ((prod[d - m + i] - c * static_cast<long>(modulus[i])) % static_cast<long>(p) + p) % p;
  }
  std::uint32_t out = 0;
  for (std::size_t i = m; i-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[i]);
  return static_cast<Code>(out);
}

/// Leibniz expansion det(A) = sum_sigma sgn(sigma) prod_i A_{i, sigma(i)}.
inline Code leibniz_det(const glcode::Mat& a) {
  const glcode::Field& f = a.field();
  const std::size_t n = a.n();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Code total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    Code term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul_raw(term, a.code(i, sigma[i]));
    total = inversions % 2 ? f.sub_raw(total, term) : f.add_raw(total, term);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

/// Number of invertible n x n matrices by Leibniz determinants.
inline std::uint64_t count_invertible(std::size_t n, const glcode::FieldPtr& field) {
  std::uint64_t count = 0;
  for (const glcode::Mat& a : glcode::enumerate_all(n, field))
    if (leibniz_det(a) != 0) ++count;
  return count;
}

/// Invertible lower (upper) triangular matrices, by direct enumeration of
/// the free entries.
inline std::vector<glcode::Mat> triangular_group(std::size_t n, const glcode::FieldPtr& field,
                                                 bool lower) {
  std::vector<glcode::Mat> out;
  for (const glcode::Mat& a : glcode::enumerate_all(n, field)) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (a.code(i, i) == 0) ok = false;
      for (std::size_t j = 0; j < n && ok; ++j)
        if ((lower && j > i) || (!lower && j < i))
          if (a.code(i, j) != 0) ok = false;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

/// The double cosets B^- P_w B as explicit sets of matrix indices, built by
/// multiplying out every (L, P_w, U).
inline std::map<glcode::Perm, std::set<std::uint64_t>> cells_by_products(
    std::size_t n, const glcode::FieldPtr& field) {
  const auto lowers = triangular_group(n, field, true);
  const auto uppers = triangular_group(n, field, false);
  std::map<glcode::Perm, std::set<std::uint64_t>> cells;
  for (const glcode::Perm& w : glcode::all_perms(n)) {
    const glcode::Mat p = w.matrix(field);
    auto& cell = cells[w];
    for (const auto& l : lowers) {
      const glcode::Mat lp = l * p;
      for (const auto& u : uppers) cell.insert((lp * u).index().value);
    }
  }
  return cells;
}

}  // namespace oracle
