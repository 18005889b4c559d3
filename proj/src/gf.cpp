#include "glcode/gf.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

namespace glcode {

namespace {

std::atomic<std::uint32_t> next_field_id{1};

using Poly = std::vector<unsigned>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo b over F_p; b must be nonzero after trimming.
Poly poly_rem(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<unsigned>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Conway polynomials, low degree first.
const std::map<std::uint32_t, Poly>& conway_table() {
  static const std::map<std::uint32_t, Poly> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {9, {2, 2, 1}},
      {27, {1, 2, 0, 1}},
      {81, {2, 0, 0, 2, 1}},
      {25, {2, 4, 1}},
      {125, {3, 3, 0, 1}},
      {49, {3, 6, 1}},
      {121, {2, 7, 1}},
  };
  return table;
}

}  // namespace

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

bool is_irreducible(const std::vector<unsigned>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1 .. m/2.
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = lower;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> default_modulus(std::uint32_t p, unsigned m) {
  if (m == 1) return {0, 1};
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  const auto& table = conway_table();
  if (auto it = table.find(static_cast<std::uint32_t>(q)); it != table.end())
    return it->second;
  // First monic irreducible of degree m in encoding order of the lower
  // coefficients.
  for (std::uint64_t lower = 0; lower < q; ++lower) {
    Poly g(m + 1, 0);
    g[m] = 1;
    std::uint64_t rest = lower;
    for (unsigned i = 0; i < m; ++i) {
      g[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    if (g[0] != 0 && is_irreducible(g, p)) return g;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Field(Token, std::uint32_t p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(1), id_(next_field_id.fetch_add(1)),
      modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  if (q_ <= 256) build_tables();
}

FieldPtr Field::create(std::uint32_t q,
                       std::optional<std::vector<unsigned>> modulus) {
  if (q < 2) throw NotAPrimePower("q = " + std::to_string(q) + " is below 2");
  if (q > kMaxFieldOrder)
    throw OutOfRange("q = " + std::to_string(q) + " exceeds the supported " +
                     std::to_string(kMaxFieldOrder));
  const auto pm = prime_power(q);
  if (!pm) throw NotAPrimePower("q = " + std::to_string(q));
  const auto [p, m] = *pm;

  std::vector<unsigned> poly;
  if (modulus) {
    poly = *modulus;
    if (poly.size() != m + 1 || poly.back() != 1)
      throw ReduciblePolynomial("modulus must be monic of degree " +
                                std::to_string(m));
    for (unsigned c : poly)
      if (c >= p)
        throw ReduciblePolynomial("coefficient " + std::to_string(c) +
                                  " is not reduced mod " + std::to_string(p));
    if (!is_irreducible(poly, p))
      throw ReduciblePolynomial("modulus is reducible over F_" +
                                std::to_string(p));
  } else {
    poly = default_modulus(p, m);
  }
  return std::make_shared<const Field>(Token{}, p, m, std::move(poly));
}

FieldPtr field_new(std::uint32_t q,
                   std::optional<std::vector<unsigned>> modulus) {
  return Field::create(q, std::move(modulus));
}

void Field::build_tables() {
  const std::size_t size = static_cast<std::size_t>(q_) * q_;
  std::vector<Code> add(size), mul(size), neg(q_), inv(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg[a] = neg_slow(static_cast<Code>(a));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add[index(a, b)] = add_slow(static_cast<Code>(a), static_cast<Code>(b));
      mul[index(a, b)] = mul_slow(static_cast<Code>(a), static_cast<Code>(b));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul[index(a, b)] == 1) {
        inv[a] = static_cast<Code>(b);
        break;
      }
  add_ = std::move(add);
  mul_ = std::move(mul);
  neg_ = std::move(neg);
  inv_ = std::move(inv);
}

std::vector<unsigned> Field::digits(Code c) const {
  std::vector<unsigned> d(m_);
  std::uint32_t rest = c;
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = rest % p_;
    rest /= p_;
  }
  return d;
}

Code Field::encode(const std::vector<unsigned>& digits) const {
  if (digits.size() > m_) throw OutOfRange("too many digits");
  std::uint32_t c = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw OutOfRange("digit out of range");
    c = c * p_ + digits[i];
  }
  return static_cast<Code>(c);
}

Code Field::add_slow(Code a, Code b) const {
  if (m_ == 1) return static_cast<Code>((std::uint32_t{a} + b) % p_);
  std::uint32_t out = 0, scale = 1, x = a, y = b;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Code>(out);
}

Code Field::neg_slow(Code a) const {
  if (m_ == 1) return static_cast<Code>((p_ - a % p_) % p_);
  std::uint32_t out = 0, scale = 1, x = a;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return static_cast<Code>(out);
}

Code Field::mul_slow(Code a, Code b) const {
  if (m_ == 1)
    return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
  const auto x = digits(a);
  const auto y = digits(b);
  Poly prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = static_cast<unsigned>(
          (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return encode(r);
}

Code Field::inv_slow(Code a) const {
  if (m_ == 1) return static_cast<Code>(mod_inverse(a, p_));
  // a^(q-2) by square and multiply.
  Code result = 1, base = a;
  std::uint32_t e = q_ - 2;
  while (e > 0) {
    if (e & 1u) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

void Field::check(Felt a) const {
  if (a.field_id != id_)
    throw MixedFields("element of field #" + std::to_string(a.field_id) +
                      " used with field #" + std::to_string(id_));
}

Felt Field::element(std::uint32_t code) const {
  if (code >= q_)
    throw OutOfRange("encoding " + std::to_string(code) + " not below q = " +
                     std::to_string(q_));
  return {static_cast<Code>(code), id_};
}

Felt Field::add(Felt a, Felt b) const {
  check(a);
  check(b);
  return {add_raw(a.code, b.code), id_};
}

Felt Field::sub(Felt a, Felt b) const {
  check(a);
  check(b);
  return {sub_raw(a.code, b.code), id_};
}

Felt Field::mul(Felt a, Felt b) const {
  check(a);
  check(b);
  return {mul_raw(a.code, b.code), id_};
}

Felt Field::neg(Felt a) const {
  check(a);
  return {neg_raw(a.code), id_};
}

Felt Field::inv(Felt a) const {
  check(a);
  if (a.code == 0) throw DivisionByZero("inverse of 0");
  return {inv_raw(a.code), id_};
}

Felt Field::pow(Felt a, std::uint64_t e) const {
  check(a);
  Code result = 1, base = a.code;
  while (e > 0) {
    if (e & 1u) result = mul_raw(result, base);
    base = mul_raw(base, base);
    e >>= 1;
  }
  return {result, id_};
}

std::string Field::to_json() const {
  std::ostringstream out;
  out << "{\"p\":" << p_ << ",\"m\":" << m_ << ",\"modulus\":[";
  for (std::size_t i = 0; i < modulus_.size(); ++i)
    out << (i ? "," : "") << modulus_[i];
  out << "]}";
  return out.str();
}

}  // namespace glcode
