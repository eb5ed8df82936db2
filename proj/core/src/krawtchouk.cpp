#include "ppower/krawtchouk.hpp"

#include "ppower/power.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ppower {

Int kraw(unsigned n, unsigned q, unsigned t, unsigned s) {
  if (q < 2) throw InvalidInput("kraw: alphabet q must be >= 2");
  if (t > n || s > n) throw InvalidInput("kraw: need 0 <= t, s <= n");
  Int total = 0;
  for (unsigned j = 0; j <= t; ++j) {
    Int term = binomial(s, j) * binomial(n - s, static_cast<std::int64_t>(t) - j);
    if (term == 0) continue;
    term *= int_pow(q - 1, t - j);
    if (j % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

KrawtchoukTable KrawtchoukTable::build(unsigned q, unsigned n) {
  KrawtchoukTable table;
  table.q = q;
  table.n = n;
  table.values.assign(n + 1, std::vector<Int>(n + 1));
  for (unsigned t = 0; t <= n; ++t) {
    for (unsigned s = 0; s <= n; ++s) table.values[t][s] = kraw(n, q, t, s);
  }
  return table;
}

Rat xi3_exact(unsigned k, unsigned s) {
  // (2/3) 3^{k/2} cos(pi k / 2 - 2 pi s / 3) by cases of k mod 4 and s mod 3
  unsigned km = k % 4, sm = s % 3;
  if (k % 2 == 0) {
    Int half_power = int_pow(3, k / 2);
    int sign = (km == 0) ? 1 : -1;
    if (sm == 0) return Rat(2 * sign * half_power) / 3;
    return Rat(-sign * half_power) / 3;
  }
  if (sm == 0) return 0;
  Int power = int_pow(3, (k + 1) / 2);  // 3^{(k+1)/2} / 3 = 3^{(k-1)/2}
  int sign = (km == 1) ? 1 : -1;
  if (sm == 1) return Rat(sign * power) / 3;
  return Rat(-sign * power) / 3;
}

Rat xi2_exact(unsigned k, unsigned s) {
  // (1/2) (1 + (-1))^{k-s} (1 - (-1))^s = 0 unless s = k, where it is 2^{k-1}
  if (s != k) return 0;
  if (k == 0) return Rat(1) / 2;
  return Rat(int_pow(2, k - 1));
}

namespace {

// integer-exponent power with the 0^0 = 1 convention std::pow lacks for complex
std::complex<double> cpow_uint(std::complex<double> base, unsigned exp) {
  std::complex<double> result = 1.0;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace

double xi_general(unsigned k, unsigned q, unsigned p, unsigned s) {
  std::complex<double> total = 0.0;
  for (unsigned t = 1; t < p; ++t) {
    double angle = 2.0 * std::numbers::pi * t / p;
    std::complex<double> z = std::polar(1.0, angle);
    total += cpow_uint(1.0 + (q - 1.0) * z, k - s) * cpow_uint(1.0 - z, s);
  }
  total /= static_cast<double>(p);
  double magnitude = std::max(1.0, std::abs(total));
  if (std::abs(total.imag()) > 1e-9 * magnitude) {
    throw std::logic_error("xi evaluation kept a nonvanishing imaginary part");
  }
  return total.real();
}

CharacterSumValue sum_divisible(unsigned k, unsigned q, unsigned p, unsigned s) {
  if (p < 2 || q < 2) throw InvalidInput("sum_divisible: need p >= 2 and q >= 2");
  if (s > k) throw InvalidInput("sum_divisible: need 0 <= s <= k");
  CharacterSumValue value;
  value.k = k;
  value.q = q;
  value.p = p;
  value.s = s;
  Int total = 0;
  for (unsigned t = 0; t <= k; ++t) {
    Int v = kraw(k, q, t, s);
    total += v;
    if (t % p == 0) value.divisible_sum += v;
  }
  value.nondivisible_sum = total - value.divisible_sum;

  if (p == q && (p == 2 || p == 3)) {
    value.xi_is_exact = true;
    value.xi_exact = (p == 2) ? xi2_exact(k, s) : xi3_exact(k, s);
    value.xi = static_cast<double>(value.xi_exact);
    Rat closed = value.xi_exact;
    if (s == 0) closed += Rat(int_pow(q, k)) / p;
    value.closed_form = static_cast<double>(closed);
    if (closed != Rat(value.divisible_sum)) {
      throw std::logic_error("exact character-sum closed form disagrees with direct sum");
    }
  } else {
    value.xi = xi_general(k, q, p, s);
    double leading = (s == 0) ? std::pow(static_cast<double>(q), static_cast<double>(k)) / p : 0.0;
    value.closed_form = leading + value.xi;
    double direct = static_cast<double>(value.divisible_sum);
    double scale = std::max(1.0, std::abs(direct));
    if (std::abs(direct - value.closed_form) > 1e-6 * scale) {
      throw std::logic_error("character-sum closed form disagrees with direct sum");
    }
  }
  return value;
}

}  // namespace ppower
