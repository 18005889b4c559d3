#include <doctest.h>

#include <set>

#include "glcode/gf.hpp"
#include "oracles.hpp"

using namespace glcode;

namespace {

const std::vector<std::uint32_t> kSmallOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

Felt el(const FieldPtr& f, std::uint32_t c) { return f->element(c); }

}  // namespace

TEST_CASE("field_new builds prime fields and rejects non prime powers") {
  const FieldPtr f2 = field_new(2);
  CHECK(f2->p() == 2);
  CHECK(f2->m() == 1);
  std::vector<Code> codes;
  for (Felt e : f2->elements()) codes.push_back(e.code);
  CHECK(codes == std::vector<Code>{0, 1});

  CHECK_THROWS_AS(field_new(6), NotAPrimePower);
  CHECK_THROWS_AS(field_new(12), NotAPrimePower);
  CHECK_THROWS_AS(field_new(1), NotAPrimePower);
  CHECK_THROWS_AS(field_new(0), NotAPrimePower);
}

TEST_CASE("F4 with x^2 + x + 1") {
  const FieldPtr f4 = field_new(4, std::vector<unsigned>{1, 1, 1});
  CHECK(f4->p() == 2);
  CHECK(f4->m() == 2);
  // x * (x + 1) = x^2 + x = 1
  CHECK(f4->mul(el(f4, 2), el(f4, 3)) == f4->one());
  // x * x = x + 1
  CHECK(f4->mul(el(f4, 2), el(f4, 2)) == el(f4, 3));
  std::vector<Code> codes;
  for (Felt e : f4->elements()) codes.push_back(e.code);
  CHECK(codes == std::vector<Code>{0, 1, 2, 3});
}

TEST_CASE("supplied moduli are validated") {
  // x^2 + 1 = (x + 1)^2 over F_2
  CHECK_THROWS_AS(field_new(4, std::vector<unsigned>{1, 0, 1}), ReduciblePolynomial);
  // not monic
  CHECK_THROWS_AS(field_new(9, std::vector<unsigned>{1, 0, 2}), ReduciblePolynomial);
  // wrong degree
  CHECK_THROWS_AS(field_new(8, std::vector<unsigned>{1, 1, 1}), ReduciblePolynomial);
  // coefficient not reduced mod p
  CHECK_THROWS_AS(field_new(9, std::vector<unsigned>{4, 0, 1}), ReduciblePolynomial);
  // x^2 + 1 is irreducible over F_3
  CHECK_NOTHROW(field_new(9, std::vector<unsigned>{1, 0, 1}));
}

TEST_CASE("small-field arithmetic examples") {
  const FieldPtr f2 = field_new(2);
  CHECK(f2->add(f2->one(), f2->one()) == f2->zero());
  const FieldPtr f3 = field_new(3);
  CHECK(f3->inv(el(f3, 2)) == el(f3, 2));
  CHECK(f3->neg(el(f3, 1)) == el(f3, 2));
  CHECK(f3->sub(el(f3, 0), el(f3, 1)) == el(f3, 2));
}

TEST_CASE("error paths") {
  const FieldPtr f5 = field_new(5);
  CHECK_THROWS_AS(f5->inv(f5->zero()), DivisionByZero);
  CHECK_THROWS_AS(f5->element(5), OutOfRange);

  const FieldPtr a = field_new(2), b = field_new(2);
  CHECK_THROWS_AS(a->add(a->one(), b->one()), MixedFields);
  CHECK_THROWS_AS(a->mul(b->one(), a->one()), MixedFields);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (std::uint32_t q : kSmallOrders) {
    CAPTURE(q);
    const FieldPtr f = field_new(q);
    bool ok = true;
    for (Felt a : f->elements())
      for (Felt b : f->elements()) {
        ok = ok && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
        for (Felt c : f->elements()) {
          ok = ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
          ok = ok && f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
          ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
        }
      }
    CHECK(ok);
    for (Felt a : f->elements()) {
      CHECK(f->add(a, f->zero()) == a);
      CHECK(f->mul(a, f->one()) == a);
      CHECK(f->add(a, f->neg(a)) == f->zero());
      if (a.code != 0) {
        CHECK(f->mul(a, f->inv(a)) == f->one());
        CHECK(f->pow(a, q - 1) == f->one());
      }
    }
  }
}

TEST_CASE("multiplication agrees with schoolbook polynomial reduction") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 125u, 128u,
                          243u, 256u}) {
    CAPTURE(q);
    const FieldPtr f = field_new(q);
    CHECK(f->has_tables());
    bool ok = true;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        ok = ok && f->mul_raw(a, b) == oracle::poly_mul(a, b, f->p(), f->modulus());
    CHECK(ok);
  }
}

TEST_CASE("fields above the table limit use polynomial arithmetic") {
  for (std::uint32_t q : {343u, 625u, 1024u, 65521u}) {
    CAPTURE(q);
    const FieldPtr f = field_new(q);
    CHECK_FALSE(f->has_tables());
    for (std::uint32_t a = 1; a < q; a += q / 97 + 1) {
      const Felt x = el(f, a);
      CHECK(f->mul(x, f->inv(x)) == f->one());
      for (std::uint32_t b = 0; b < q; b += q / 31 + 1)
        if (f->m() > 1) CHECK(f->mul_raw(a, b) == oracle::poly_mul(a, b, f->p(), f->modulus()));
    }
  }
}

TEST_CASE("built-in moduli are irreducible and primitive") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 125u, 128u}) {
    CAPTURE(q);
    const FieldPtr f = field_new(q);
    CHECK(is_irreducible(f->modulus(), f->p()));
    // x has encoding p; its multiplicative order must be q - 1.
    const Felt x = el(f, f->p());
    std::uint32_t order = 1;
    Felt power = x;
    while (power != f->one()) {
      power = f->mul(power, x);
      ++order;
    }
    CHECK(order == q - 1);
  }
}

TEST_CASE("encoding round trip and serialisation") {
  const FieldPtr f = field_new(27);
  for (Felt a : f->elements()) CHECK(f->encode(f->digits(a.code)) == a.code);
  CHECK(f->digits(5) == std::vector<unsigned>{2, 1, 0});
  CHECK(f->to_json() == R"({"p":3,"m":3,"modulus":[1,2,0,1]})");
  CHECK(field_new(7)->to_json() == R"({"p":7,"m":1,"modulus":[0,1]})");
}

TEST_CASE("prime_power factorisation") {
  CHECK(prime_power(8) == std::make_pair(2u, 3u));
  CHECK(prime_power(49) == std::make_pair(7u, 2u));
  CHECK(prime_power(13) == std::make_pair(13u, 1u));
  CHECK_FALSE(prime_power(100).has_value());
  CHECK_FALSE(prime_power(1).has_value());
}
