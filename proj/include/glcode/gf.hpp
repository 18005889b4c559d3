#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

#include "glcode/error.hpp"

namespace glcode {

/// Integer encoding of a field element: the coset representative
/// sum d_i x^i (0 <= d_i < p) is stored as sum d_i p^i.
using Code = std::uint16_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 65536;

/// Field element tagged with the id of the field it belongs to.
struct Felt {
  Code code = 0;
  std::uint32_t field_id = 0;

  friend bool operator==(Felt, Felt) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^m, realised as F_p[x] / (modulus).
///
/// Immutable after construction. For q <= 256 the full addition,
/// multiplication and inversion tables are built eagerly; larger fields
/// fall back to digit-wise polynomial arithmetic.
class Field {
  struct Token {};

public:
  Field(Token, std::uint32_t p, unsigned m, std::vector<unsigned> modulus);

  /// Builds F_q. Throws NotAPrimePower or ReduciblePolynomial.
  static FieldPtr create(std::uint32_t q,
                         std::optional<std::vector<unsigned>> modulus = {});

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t id() const { return id_; }
  /// Monic modulus, low degree first (length m + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool has_tables() const { return !mul_.empty(); }

  Felt zero() const { return {0, id_}; }
  Felt one() const { return {1, id_}; }
  /// Element with the given encoding; throws OutOfRange if code >= q.
  Felt element(std::uint32_t code) const;

  /// All q elements in increasing encoding order.
  auto elements() const {
    return std::views::iota(std::uint32_t{0}, q_) |
           std::views::transform([id = id_](std::uint32_t c) {
             return Felt{static_cast<Code>(c), id};
           });
  }

  Felt add(Felt a, Felt b) const;
  Felt sub(Felt a, Felt b) const;
  Felt mul(Felt a, Felt b) const;
  Felt neg(Felt a) const;
  /// Throws DivisionByZero for a = 0.
  Felt inv(Felt a) const;
  Felt pow(Felt a, std::uint64_t e) const;

  // Unchecked arithmetic on raw encodings, used by the enumeration kernels.
  Code add_raw(Code a, Code b) const {
    if (!add_.empty()) return add_[index(a, b)];
    return add_slow(a, b);
  }
  Code mul_raw(Code a, Code b) const {
    if (!mul_.empty()) return mul_[index(a, b)];
    return mul_slow(a, b);
  }
  Code neg_raw(Code a) const {
    if (!neg_.empty()) return neg_[a];
    return neg_slow(a);
  }
  Code sub_raw(Code a, Code b) const { return add_raw(a, neg_raw(b)); }
  /// Precondition a != 0.
  Code inv_raw(Code a) const {
    if (!inv_.empty()) return inv_[a];
    return inv_slow(a);
  }

  /// Base-p digits of an encoding, low degree first, length m.
  std::vector<unsigned> digits(Code c) const;
  /// Inverse of digits(); throws OutOfRange on a bad digit list.
  Code encode(const std::vector<unsigned>& digits) const;

  /// Serialised form {"p":..,"m":..,"modulus":[..]}.
  std::string to_json() const;

  /// Throws MixedFields unless a belongs to this field.
  void check(Felt a) const;

private:
  std::size_t index(Code a, Code b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }
  Code add_slow(Code a, Code b) const;
  Code mul_slow(Code a, Code b) const;
  Code neg_slow(Code a) const;
  Code inv_slow(Code a) const;
  void build_tables();

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::uint32_t id_;
  std::vector<unsigned> modulus_;
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<Code> inv_;
};

/// Convenience wrapper for Field::create.
FieldPtr field_new(std::uint32_t q,
                   std::optional<std::vector<unsigned>> modulus = {});

/// Factorises q as p^m; returns nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

/// Built-in default modulus for F_q (Conway polynomial where tabulated,
/// otherwise the first monic irreducible in encoding order).
std::vector<unsigned> default_modulus(std::uint32_t p, unsigned m);

/// True iff the monic polynomial (low degree first) is irreducible over F_p.
bool is_irreducible(const std::vector<unsigned>& poly, std::uint32_t p);

}  // namespace glcode
