#pragma once

#include <compare>
#include <ranges>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glcode/gf.hpp"

namespace glcode {

/// Position of a matrix in the canonical order on M_n(F_q).
///
/// The row-major entry list, read as a base-q numeral with the (0,0) entry
/// most significant, gives the value. Integer order is therefore the
/// lexicographic order of row-major entry lists.
struct MatIndex {
  std::uint64_t value = 0;

  friend auto operator<=>(MatIndex, MatIndex) = default;
};

/// Dense n x n matrix over a finite field.
class Mat {
public:
  /// Zero matrix.
  Mat(std::size_t n, FieldPtr field);
  /// Row-major encodings; throws DimensionMismatch or OutOfRange.
  Mat(std::size_t n, FieldPtr field, std::vector<Code> entries);

  static Mat identity(std::size_t n, FieldPtr field);
  /// Matrix unit E_ij (0-based).
  static Mat unit(std::size_t n, std::size_t i, std::size_t j, FieldPtr field);
  /// The rank-r idempotent diag(1,..,1,0,..,0).
  static Mat idempotent(std::size_t n, std::size_t r, FieldPtr field);
  static Mat from_index(std::size_t n, FieldPtr field, MatIndex index);

  std::size_t n() const { return n_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  Felt at(std::size_t i, std::size_t j) const {
    return {a_[i * n_ + j], field_->id()};
  }
  Code code(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Felt v);
  void set_code(std::size_t i, std::size_t j, Code v) { a_[i * n_ + j] = v; }

  std::span<const Code> entries() const { return a_; }
  MatIndex index() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b);

private:
  std::size_t n_;
  FieldPtr field_;
  std::vector<Code> a_;
};

/// Throws DimensionMismatch / MixedFields unless a and b are compatible.
void check_compatible(const Mat& a, const Mat& b);

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
/// Multiplies every entry by s.
Mat scale(const Mat& a, Felt s);

Felt det(const Mat& a);
std::size_t rank(const Mat& a);
/// Throws Singular.
Mat inverse(const Mat& a);
Felt trace(const Mat& a);

/// tr(A B^T) = sum_ij A_ij B_ij.
Felt trace_form(const Mat& a, const Mat& b);
Code trace_form_raw(std::span<const Code> a, std::span<const Code> b,
                    const Field& field);

/// Rank of a rows x cols row-major matrix of encodings.
std::size_t rank_of(std::vector<Code> data, std::size_t rows, std::size_t cols,
                    const Field& field);

/// Invertible D, E with D * B^T * E^{-1} = e_r, r = rank(B).
struct RankNormalForm {
  Mat d;
  Mat e;
  std::size_t rank;
};

/// Gauss-Jordan on B^T with the row operations accumulated into D and the
/// column operations into E^{-1}. The identity is re-checked by
/// multiplication before returning.
RankNormalForm rank_normal_form(const Mat& b);

/// q^(n*n); throws Infeasible if it does not fit in 64 bits.
std::uint64_t matrix_count(std::size_t n, std::uint32_t q);

/// All q^(n^2) matrices in MatIndex order.
inline auto enumerate_all(std::size_t n, const FieldPtr& field) {
  const std::uint64_t count = matrix_count(n, field->q());
  return std::views::iota(std::uint64_t{0}, count) |
         std::views::transform([n, field](std::uint64_t i) {
           return Mat::from_index(n, field, MatIndex{i});
         });
}

/// Flat storage for an ordered list of n x n matrices over one field.
class PointSet {
public:
  PointSet(std::size_t n, FieldPtr field) : n_(n), field_(std::move(field)) {}

  void push_back(std::span<const Code> entries, MatIndex index);

  std::size_t size() const { return index_.size(); }
  std::size_t n() const { return n_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  std::span<const Code> entries(std::size_t t) const {
    return {flat_.data() + t * n_ * n_, n_ * n_};
  }
  MatIndex index(std::size_t t) const { return index_[t]; }
  Mat operator[](std::size_t t) const;

  auto mats() const& {
    return std::views::iota(std::size_t{0}, size()) |
           std::views::transform([this](std::size_t t) { return (*this)[t]; });
  }
  void mats() const&& = delete;

private:
  std::size_t n_;
  FieldPtr field_;
  std::vector<Code> flat_;
  std::vector<MatIndex> index_;
};

/// The invertible matrices of M_n(F_q), in MatIndex order.
PointSet enumerate_gl(std::size_t n, const FieldPtr& field);

/// Matrix text format: rows separated by ';', entries by ','.
Mat parse_matrix(std::string_view text, const FieldPtr& field);
std::string format_matrix(const Mat& a);

}  // namespace glcode
