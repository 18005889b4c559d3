#include "glcode/matrix.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace glcode {

namespace {

// Determinant of a row-major n x n matrix, by elimination with a pivot
// search down each column.
Code det_raw(std::vector<Code> a, std::size_t n, const Field& f) {
  Code result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[pivot * n + j], a[col * n + j]);
      result = f.neg_raw(result);
    }
    const Code p = a[col * n + col];
    result = f.mul_raw(result, p);
    const Code p_inv = f.inv_raw(p);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Code x = a[i * n + col];
      if (x == 0) continue;
      const Code factor = f.mul_raw(x, p_inv);
      for (std::size_t j = col; j < n; ++j)
        a[i * n + j] = f.sub_raw(a[i * n + j], f.mul_raw(factor, a[col * n + j]));
    }
  }
  return result;
}

void swap_rows(Mat& m, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < m.n(); ++j) {
    const Code t = m.code(r1, j);
    m.set_code(r1, j, m.code(r2, j));
    m.set_code(r2, j, t);
  }
}

void swap_cols(Mat& m, std::size_t c1, std::size_t c2) {
  for (std::size_t i = 0; i < m.n(); ++i) {
    const Code t = m.code(i, c1);
    m.set_code(i, c1, m.code(i, c2));
    m.set_code(i, c2, t);
  }
}

void scale_row(Mat& m, std::size_t r, Code s) {
  const Field& f = m.field();
  for (std::size_t j = 0; j < m.n(); ++j)
    m.set_code(r, j, f.mul_raw(s, m.code(r, j)));
}

// row[dst] -= s * row[src]
void sub_row(Mat& m, std::size_t dst, std::size_t src, Code s) {
  const Field& f = m.field();
  for (std::size_t j = 0; j < m.n(); ++j)
    m.set_code(dst, j, f.sub_raw(m.code(dst, j), f.mul_raw(s, m.code(src, j))));
}

// col[dst] -= s * col[src]
void sub_col(Mat& m, std::size_t dst, std::size_t src, Code s) {
  const Field& f = m.field();
  for (std::size_t i = 0; i < m.n(); ++i)
    m.set_code(i, dst, f.sub_raw(m.code(i, dst), f.mul_raw(s, m.code(i, src))));
}

}  // namespace

Mat::Mat(std::size_t n, FieldPtr field)
    : n_(n), field_(std::move(field)), a_(n * n, 0) {
  if (n_ == 0) throw DimensionMismatch("matrix dimension must be positive");
}

Mat::Mat(std::size_t n, FieldPtr field, std::vector<Code> entries)
    : n_(n), field_(std::move(field)), a_(std::move(entries)) {
  if (n_ == 0) throw DimensionMismatch("matrix dimension must be positive");
  if (a_.size() != n_ * n_)
    throw DimensionMismatch("expected " + std::to_string(n_ * n_) +
                            " entries, got " + std::to_string(a_.size()));
  for (Code c : a_)
    if (c >= field_->q())
      throw OutOfRange("entry " + std::to_string(c) + " not below q = " +
                       std::to_string(field_->q()));
}

Mat Mat::identity(std::size_t n, FieldPtr field) {
  return idempotent(n, n, std::move(field));
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j, FieldPtr field) {
  Mat m(n, std::move(field));
  m.set_code(i, j, 1);
  return m;
}

Mat Mat::idempotent(std::size_t n, std::size_t r, FieldPtr field) {
  Mat m(n, std::move(field));
  for (std::size_t i = 0; i < r && i < n; ++i) m.set_code(i, i, 1);
  return m;
}

Mat Mat::from_index(std::size_t n, FieldPtr field, MatIndex index) {
  Mat m(n, std::move(field));
  const std::uint64_t q = m.field().q();
  std::uint64_t rest = index.value;
  for (std::size_t k = n * n; k-- > 0;) {
    m.a_[k] = static_cast<Code>(rest % q);
    rest /= q;
  }
  if (rest != 0) throw OutOfRange("matrix index beyond q^(n^2)");
  return m;
}

void Mat::set(std::size_t i, std::size_t j, Felt v) {
  field_->check(v);
  a_[i * n_ + j] = v.code;
}

MatIndex Mat::index() const {
  std::uint64_t v = 0;
  for (Code c : a_) v = v * field_->q() + c;
  return {v};
}

bool Mat::is_zero() const {
  for (Code c : a_)
    if (c != 0) return false;
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.n_ == b.n_ && a.field_->id() == b.field_->id() && a.a_ == b.a_;
}

void check_compatible(const Mat& a, const Mat& b) {
  if (a.field().id() != b.field().id())
    throw MixedFields("matrices over different fields");
  if (a.n() != b.n())
    throw DimensionMismatch(std::to_string(a.n()) + "x" + std::to_string(a.n()) +
                            " vs " + std::to_string(b.n()) + "x" +
                            std::to_string(b.n()));
}

Mat operator*(const Mat& a, const Mat& b) {
  check_compatible(a, b);
  const Field& f = a.field();
  const std::size_t n = a.n();
  Mat c(n, a.field_ptr());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Code s = 0;
      for (std::size_t k = 0; k < n; ++k)
        s = f.add_raw(s, f.mul_raw(a.code(i, k), b.code(k, j)));
      c.set_code(i, j, s);
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  check_compatible(a, b);
  const Field& f = a.field();
  Mat c(a.n(), a.field_ptr());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      c.set_code(i, j, f.add_raw(a.code(i, j), b.code(i, j)));
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.n(), a.field_ptr());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) t.set_code(j, i, a.code(i, j));
  return t;
}

Mat scale(const Mat& a, Felt s) {
  a.field().check(s);
  Mat out(a.n(), a.field_ptr());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      out.set_code(i, j, a.field().mul_raw(s.code, a.code(i, j)));
  return out;
}

Felt det(const Mat& a) {
  const auto e = a.entries();
  return {det_raw({e.begin(), e.end()}, a.n(), a.field()), a.field().id()};
}

std::size_t rank_of(std::vector<Code> data, std::size_t rows, std::size_t cols,
                    const Field& f) {
  if (data.size() != rows * cols) throw DimensionMismatch("rank_of: bad size");
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && data[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(data[pivot * cols + j], data[r * cols + j]);
    const Code p_inv = f.inv_raw(data[r * cols + col]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Code x = data[i * cols + col];
      if (x == 0) continue;
      const Code factor = f.mul_raw(x, p_inv);
      for (std::size_t j = col; j < cols; ++j)
        data[i * cols + j] =
            f.sub_raw(data[i * cols + j], f.mul_raw(factor, data[r * cols + j]));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Mat& a) {
  const auto e = a.entries();
  return rank_of({e.begin(), e.end()}, a.n(), a.n(), a.field());
}

Mat inverse(const Mat& a) {
  const Field& f = a.field();
  const std::size_t n = a.n();
  Mat work = a;
  Mat inv = Mat::identity(n, a.field_ptr());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.code(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Singular("matrix is not invertible");
    swap_rows(work, pivot, col);
    swap_rows(inv, pivot, col);
    const Code p_inv = f.inv_raw(work.code(col, col));
    scale_row(work, col, p_inv);
    scale_row(inv, col, p_inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work.code(i, col) == 0) continue;
      const Code factor = work.code(i, col);
      sub_row(work, i, col, factor);
      sub_row(inv, i, col, factor);
    }
  }
  return inv;
}

Felt trace(const Mat& a) {
  Code s = 0;
  for (std::size_t i = 0; i < a.n(); ++i) s = a.field().add_raw(s, a.code(i, i));
  return {s, a.field().id()};
}

Code trace_form_raw(std::span<const Code> a, std::span<const Code> b,
                    const Field& f) {
  Code s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s = f.add_raw(s, f.mul_raw(a[k], b[k]));
  return s;
}

Felt trace_form(const Mat& a, const Mat& b) {
  check_compatible(a, b);
  return {trace_form_raw(a.entries(), b.entries(), a.field()), a.field().id()};
}

RankNormalForm rank_normal_form(const Mat& b) {
  const Field& f = b.field();
  const std::size_t n = b.n();
  Mat x = transpose(b);
  Mat d = Mat::identity(n, b.field_ptr());
  Mat e_inv = Mat::identity(n, b.field_ptr());

  std::size_t r = 0;
  while (r < n) {
    std::size_t pi = n, pj = n;
    for (std::size_t j = r; j < n && pi == n; ++j)
      for (std::size_t i = r; i < n; ++i)
        if (x.code(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;
    swap_rows(x, pi, r);
    swap_rows(d, pi, r);
    swap_cols(x, pj, r);
    swap_cols(e_inv, pj, r);
    const Code p_inv = f.inv_raw(x.code(r, r));
    scale_row(x, r, p_inv);
    scale_row(d, r, p_inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || x.code(i, r) == 0) continue;
      const Code factor = x.code(i, r);
      sub_row(x, i, r, factor);
      sub_row(d, i, r, factor);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == r || x.code(r, j) == 0) continue;
      const Code factor = x.code(r, j);
      sub_col(x, j, r, factor);
      sub_col(e_inv, j, r, factor);
    }
    ++r;
  }

  RankNormalForm out{d, inverse(e_inv), r};
  if (out.d * transpose(b) * e_inv != Mat::idempotent(n, r, b.field_ptr()))
    throw std::logic_error("rank_normal_form: D B^T E^-1 != e_r");
  return out;
}

std::uint64_t matrix_count(std::size_t n, std::uint32_t q) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (count > UINT64_MAX / q)
      throw Infeasible("q^(n^2) does not fit in 64 bits");
    count *= q;
  }
  return count;
}

void PointSet::push_back(std::span<const Code> entries, MatIndex index) {
  if (entries.size() != n_ * n_) throw DimensionMismatch("PointSet::push_back");
  flat_.insert(flat_.end(), entries.begin(), entries.end());
  index_.push_back(index);
}

Mat PointSet::operator[](std::size_t t) const {
  const auto e = entries(t);
  return Mat(n_, field_, {e.begin(), e.end()});
}

PointSet enumerate_gl(std::size_t n, const FieldPtr& field) {
  const std::uint64_t count = matrix_count(n, field->q());
  const Field& f = *field;
  PointSet out(n, field);
  std::vector<Code> digits(n * n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (det_raw(digits, n, f) != 0) out.push_back(digits, MatIndex{idx});
    // Odometer increment, last entry least significant.
    for (std::size_t k = n * n; k-- > 0;) {
      if (++digits[k] < f.q()) break;
      digits[k] = 0;
    }
  }
  return out;
}

Mat parse_matrix(std::string_view text, const FieldPtr& field) {
  std::vector<std::vector<Code>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::string_view row = text.substr(start, end - start);
    std::vector<Code> values;
    std::size_t s = 0;
    while (s <= row.size()) {
      const std::size_t e = std::min(row.find(',', s), row.size());
      std::string_view tok = row.substr(s, e - s);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad matrix entry '" + std::string(tok) + "'");
      if (v >= field->q())
        throw ParseError("entry " + std::to_string(v) + " not below q = " +
                         std::to_string(field->q()));
      values.push_back(static_cast<Code>(v));
      s = e + 1;
    }
    rows.push_back(std::move(values));
    start = end + 1;
  }
  const std::size_t n = rows.size();
  std::vector<Code> flat;
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("matrix must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Mat(n, field, std::move(flat));
}

std::string format_matrix(const Mat& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (j) out << ',';
      out << a.code(i, j);
    }
  }
  return out.str();
}

}  // namespace glcode
