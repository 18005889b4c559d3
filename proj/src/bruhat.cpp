#include "glcode/bruhat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "glcode/sections.hpp"

namespace glcode {

namespace {

using boost::multiprecision::pow;

std::size_t leading_rank(const Mat& a, std::size_t rows, std::size_t cols) {
  std::vector<Code> sub;
  sub.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) sub.push_back(a.code(i, j));
  return rank_of(std::move(sub), rows, cols, a.field());
}

void require_invertible(const Mat& a) {
  if (det(a).code == 0) throw Singular("matrix is not invertible");
}

bool is_lower(const Mat& m) {
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = i + 1; j < m.n(); ++j)
      if (m.code(i, j) != 0) return false;
  return true;
}

bool is_upper(const Mat& m) { return is_lower(transpose(m)); }

}  // namespace

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || static_cast<std::size_t>(v) > w_.size() || seen[v])
      throw OutOfRange("not a permutation of 1..n");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::longest(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
  return Perm(std::move(w));
}

Perm Perm::simple(std::size_t i, std::size_t n) {
  if (i < 1 || i >= n) throw OutOfRange("simple transposition index");
  std::vector<int> w = identity(n).w_;
  std::swap(w[i - 1], w[i]);
  return Perm(std::move(w));
}

std::size_t Perm::length() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[w_[i] - 1] = static_cast<int>(i + 1);
  return Perm(std::move(inv));
}

Mat Perm::matrix(const FieldPtr& field) const {
  Mat p(w_.size(), field);
  for (std::size_t j = 0; j < w_.size(); ++j) p.set_code(w_[j] - 1, j, 1);
  return p;
}

std::string Perm::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w_.size(); ++i) out << (i ? "," : "") << w_[i];
  out << ')';
  return out.str();
}

Perm operator*(const Perm& v, const Perm& w) {
  if (v.size() != w.size()) throw DimensionMismatch("permutation sizes differ");
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = v.w_[w.w_[i] - 1];
  return Perm(std::move(out));
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool bruhat_leq(const Perm& v, const Perm& w) {
  if (v.size() != w.size()) throw DimensionMismatch("permutation sizes differ");
  for (std::size_t i = 1; i <= v.size(); ++i) {
    std::vector<int> a(v.one_line().begin(), v.one_line().begin() + i);
    std::vector<int> b(w.one_line().begin(), w.one_line().begin() + i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < i; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

Perm bruhat_perm_from_ranks(const Mat& a) {
  require_invertible(a);
  const std::size_t n = a.n();
  std::vector<std::vector<std::size_t>> r(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) r[i][j] = leading_rank(a, i, j);

  std::vector<int> w(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto delta = static_cast<long>(r[i][j]) - static_cast<long>(r[i - 1][j]) -
                         static_cast<long>(r[i][j - 1]) + static_cast<long>(r[i - 1][j - 1]);
      if (delta == 1) {
        if (w[j - 1] != 0) throw std::logic_error("rank matrix: two entries in a column");
        w[j - 1] = static_cast<int>(i);
      } else if (delta != 0) {
        throw std::logic_error("rank matrix: entry outside {0, 1}");
      }
    }
  return Perm(std::move(w));
}

BruhatFactorization bruhat_decompose(const Mat& a) {
  const Perm w = bruhat_perm_from_ranks(a);
  const Field& f = a.field();
  const std::size_t n = a.n();

  // Reduce to a monomial matrix: work = row_ops * A * col_ops with row_ops
  // unit lower and col_ops unit upper triangular.
  Mat work = a;
  Mat row_ops = Mat::identity(n, a.field_ptr());
  Mat col_ops = Mat::identity(n, a.field_ptr());
  std::vector<int> pivot_w(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (j < n && work.code(i, j) == 0) ++j;
    if (j == n) throw std::logic_error("bruhat_decompose: zero row");
    pivot_w[j] = static_cast<int>(i + 1);
    const Code p_inv = f.inv_raw(work.code(i, j));
    for (std::size_t k = i + 1; k < n; ++k) {
      const Code factor = f.mul_raw(work.code(k, j), p_inv);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work.set_code(k, c, f.sub_raw(work.code(k, c), f.mul_raw(factor, work.code(i, c))));
        row_ops.set_code(k, c,
                         f.sub_raw(row_ops.code(k, c), f.mul_raw(factor, row_ops.code(i, c))));
      }
    }
    for (std::size_t l = j + 1; l < n; ++l) {
      const Code factor = f.mul_raw(work.code(i, l), p_inv);
      if (factor == 0) continue;
      for (std::size_t r = 0; r < n; ++r) {
        work.set_code(r, l, f.sub_raw(work.code(r, l), f.mul_raw(factor, work.code(r, j))));
        col_ops.set_code(r, l,
                         f.sub_raw(col_ops.code(r, l), f.mul_raw(factor, col_ops.code(r, j))));
      }
    }
  }
  if (Perm(pivot_w) != w)
    throw std::logic_error("bruhat_decompose: pivots disagree with the rank matrix");

  // work = P_w * diag(d) with d_j = work(w(j), j).
  Mat diag(n, a.field_ptr());
  for (std::size_t j = 0; j < n; ++j) diag.set_code(j, j, work.code(w(j + 1) - 1, j));

  BruhatFactorization out{inverse(row_ops), w, diag * inverse(col_ops)};
  if (out.lower * w.matrix(a.field_ptr()) * out.upper != a || !is_lower(out.lower) ||
      !is_upper(out.upper))
    throw std::logic_error("bruhat_decompose: L P_w U != A");
  return out;
}

QInt cell_count(const Perm& w, std::uint64_t q) {
  if (q < 2) throw OutOfRange("q must be at least 2");
  const std::size_t n = w.size();
  const std::size_t c2 = n * (n - 1) / 2;
  return pow(QInt(q - 1), static_cast<unsigned>(n)) *
         pow(QInt(q), static_cast<unsigned>(2 * c2 - w.length()));
}

bool leading_minors_nonzero(const Mat& a) {
  for (std::size_t k = 1; k <= a.n(); ++k)
    if (leading_rank(a, k, k) != k) return false;
  return true;
}

bool big_cell_membership(const Mat& a) {
  const bool by_perm = bruhat_decompose(a).w.is_identity();
  if (by_perm != leading_minors_nonzero(a))
    throw std::logic_error("big cell: permutation and leading minors disagree");
  return by_perm;
}

bool cell_oracle_feasible(std::size_t n, std::uint32_t q) { return n <= 3 && q <= 3; }

CellCensus cell_census(std::size_t n, const FieldPtr& field) {
  if (!cell_oracle_feasible(n, field->q()))
    throw Infeasible("cell census supports n <= 3 and q <= 3");
  CellCensus census;
  for (const Perm& w : all_perms(n)) {
    census.sizes[w] = 0;
    census.inside_h0[w] = true;
  }
  const PointSet gl = enumerate_gl(n, field);
  for (std::size_t t = 0; t < gl.size(); ++t) {
    const Mat a = gl[t];
    const Perm w = bruhat_decompose(a).w;
    ++census.sizes[w];
    if (a.code(0, 0) != 0) census.inside_h0[w] = false;
    ++census.total;
  }
  return census;
}

H0Spectrum h0_cell_spectrum(std::size_t n, const FieldPtr& field) {
  const CellCensus census = cell_census(n, field);
  H0Spectrum out;
  for (const auto& [w, inside] : census.inside_h0) {
    const std::uint64_t size = census.sizes.at(w);
    if (!inside || size == 0) continue;
    out.cells.push_back(w);
    out.sizes.push_back(size);
    out.total += size;
  }
  return out;
}

BigCellReport big_cell_report(std::size_t n, const FieldPtr& field, ReportMode mode) {
  const std::uint64_t q = field->q();
  const auto nn = static_cast<std::int64_t>(n);
  BigCellReport report;
  if (mode == ReportMode::Formula) {
    report.complement_count =
        gl_order(nn, q) - pow(QInt(q - 1), static_cast<unsigned>(n)) *
                              pow(QInt(q), static_cast<unsigned>(n * (n - 1)));
    report.min_section_count = stanley_f(1, nn, q);
  } else {
    if (!cell_oracle_feasible(n, field->q()))
      throw Infeasible("oracle big-cell report supports n <= 3 and q <= 3");
    const PointSet gl = enumerate_gl(n, field);
    std::uint64_t outside = 0;
    for (std::size_t t = 0; t < gl.size(); ++t)
      if (!leading_minors_nonzero(gl[t])) ++outside;
    report.complement_count = outside;
    report.min_section_count = partial_trace_count(1, gl);
  }
  report.equal = report.complement_count == report.min_section_count;
  return report;
}

}  // namespace glcode
