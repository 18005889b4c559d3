#include "glcode/formulas.hpp"

#include <stdexcept>

namespace glcode {

namespace {

using boost::multiprecision::pow;

void require_q(std::uint64_t q) {
  if (q < 2) throw OutOfRange("q must be at least 2, got " + std::to_string(q));
}

QInt power(std::uint64_t base, std::uint64_t e) {
  return pow(QInt(base), static_cast<unsigned>(e));
}

std::uint64_t choose2(std::int64_t n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n * (n - 1) / 2);
}

}  // namespace

QInt q_int(std::int64_t r, std::uint64_t q) {
  if (r < 0) throw NegativeArgument("[r]_q needs r >= 0, got " + std::to_string(r));
  require_q(q);
  if (r == 0) return 1;
  return (power(q, r) - 1) / (q - 1);
}

QInt q_factorial(std::int64_t r, std::uint64_t q) {
  if (r < 0) throw NegativeArgument("[r]_q! needs r >= 0, got " + std::to_string(r));
  QInt out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out *= q_int(i, q);
  return out;
}

QInt gl_order_product(std::int64_t n, std::uint64_t q) {
  if (n < 0) throw NegativeArgument("n must be >= 0");
  require_q(q);
  QInt out = 1;
  const QInt qn = power(q, n);
  for (std::int64_t i = 0; i < n; ++i) out *= qn - power(q, i);
  return out;
}

QInt gl_order(std::int64_t n, std::uint64_t q) {
  if (n < 0) throw NegativeArgument("n must be >= 0");
  require_q(q);
  const QInt factored = power(q, choose2(n)) * power(q - 1, n) * q_factorial(n, q);
  if (factored != gl_order_product(n, q))
    throw std::logic_error("gl_order: product and factored forms disagree");
  return factored;
}

bool gl_order_recurrence_check(std::int64_t n, std::uint64_t q) {
  if (n < 2) throw OutOfRange("recurrence needs n >= 2");
  return gl_order(n, q) == power(q, n - 1) * (power(q, n) - 1) * gl_order(n - 1, q);
}

QInt stanley_f(std::int64_t k, std::int64_t n, std::uint64_t q) {
  if (n < 0 || k < 0 || k > n)
    throw OutOfRange("stanley_f needs 0 <= k <= n, got k = " + std::to_string(k) +
                     ", n = " + std::to_string(n));
  require_q(q);
  const auto exponent = static_cast<std::uint64_t>(k * (2 * n - k - 1) / 2);
  QInt correction = QInt(q - 1) * power(q, exponent) * gl_order(n - k, q);
  QInt numerator = gl_order(n, q);
  if (k % 2 == 0)
    numerator += correction;
  else
    numerator -= correction;
  if (numerator % q != 0)
    throw std::logic_error("stanley_f: numerator not divisible by q");
  return numerator / q;
}

ExtremalK extremal_k(std::int64_t n, std::uint64_t q) {
  if (n < 2) throw OutOfRange("extremal_k needs n >= 2");
  ExtremalK out{1, 1, {}};
  for (std::int64_t k = 1; k <= n; ++k) out.values.push_back(stanley_f(k, n, q));
  for (std::size_t i = 1; i < out.values.size(); ++i) {
    if (out.values[i] > out.values[out.k_max - 1]) out.k_max = static_cast<int>(i + 1);
    if (out.values[i] < out.values[out.k_min - 1]) out.k_min = static_cast<int>(i + 1);
  }
  return out;
}

CodeParams code_params(std::int64_t n, std::uint64_t q) {
  if (n < 2) throw OutOfRange("code parameters need n >= 2, got " + std::to_string(n));
  require_q(q);
  CodeParams p;
  p.n = static_cast<unsigned>(n);
  p.q = q;
  p.length = power(q, choose2(n)) * power(q - 1, n) * q_factorial(n, q);
  p.dimension = static_cast<unsigned>(n * n);
  p.min_distance = power(q, choose2(n) - 1) * power(q - 1, n - 1) *
                   (power(q - 1, 2) * q_factorial(n, q) - q_factorial(n - 2, q));
  if (p.min_distance != p.length - stanley_f(2, n, q))
    throw std::logic_error("code_params: d != length - f_2(n)");
  return p;
}

CodeParams gl2_params(std::uint64_t q) {
  require_q(q);
  const QInt Q = q;
  CodeParams p;
  p.n = 2;
  p.q = q;
  p.length = pow(Q, 4) - pow(Q, 3) - pow(Q, 2) + Q;
  p.dimension = 4;
  p.min_distance = pow(Q, 4) - 2 * pow(Q, 3) + Q;
  return p;
}

QInt singleton_defect(const CodeParams& p) {
  return (p.length - p.dimension + 1) - p.min_distance;
}

QInt griesmer_defect(const CodeParams& p) {
  QInt sum = 0;
  QInt qi = 1;
  for (unsigned i = 0; i < p.dimension; ++i) {
    sum += (p.min_distance + qi - 1) / qi;
    qi *= p.q;
  }
  return p.length - sum;
}

std::string to_string(const QInt& v) { return v.str(); }

}  // namespace glcode
