#pragma once

#include "ppower/rational.hpp"

#include <vector>

namespace ppower {

/// Exact value of the Krawtchouk polynomial
///   K_t^{n;q}(s) = sum_j C(s,j) C(n-s,t-j) (-1)^j (q-1)^{t-j}.
/// Requires 0 <= t <= n, 0 <= s <= n, q >= 2.
Int kraw(unsigned n, unsigned q, unsigned t, unsigned s);

/// Table of all K_t^{n;q}(s) for 0 <= t,s <= n.
struct KrawtchoukTable {
  unsigned q = 2;
  unsigned n = 0;
  std::vector<std::vector<Int>> values;  // values[t][s]

  static KrawtchoukTable build(unsigned q, unsigned n);
  const Int& at(unsigned t, unsigned s) const { return values[t][s]; }
};

/// Residue-class aggregate of Krawtchouk values at a point:
///   divisible_sum    = sum over t = 0..k with t % p == 0 of K_t^{k;q}(s)
///   nondivisible_sum = the complementary sum,
/// both by exact direct summation, together with the oscillating term xi of
/// the closed form
///   divisible_sum = [s == 0] * q^k / p + xi_s,
///   xi_s = (1/p) sum_{t=1}^{p-1} (1 + (q-1) z^t)^{k-s} (1 - z^t)^s,
/// z = exp(2 pi i / p).  xi is exact rational when p == q in {2, 3}, and a
/// complex-double evaluation otherwise (imaginary residue checked < 1e-9 of
/// magnitude and discarded).
struct CharacterSumValue {
  unsigned k = 0, q = 2, p = 2, s = 0;
  Int divisible_sum = 0;
  Int nondivisible_sum = 0;
  bool xi_is_exact = false;
  Rat xi_exact = 0;
  double xi = 0.0;
  /// Closed-form value of divisible_sum as a double (exact Rat when
  /// xi_is_exact); the constructor verifies |direct - closed| within 1e-6
  /// relative (exactly, when an exact path exists).
  double closed_form = 0.0;
};

CharacterSumValue sum_divisible(unsigned k, unsigned q, unsigned p, unsigned s);

/// Exact oscillating term for p = q = 3:
///   xi_s = (2/3) 3^{k/2} cos(pi k / 2 - 2 pi s / 3),
/// evaluated through its exact case table over k mod 4 and s mod 3.
Rat xi3_exact(unsigned k, unsigned s);

/// Exact oscillating term for p = q = 2: 0 for s < k and 2^{k-1} at s = k
/// (with the k = 0 edge value 1/2).
Rat xi2_exact(unsigned k, unsigned s);

/// Complex-double evaluation of xi for arbitrary p, q; returns the real part
/// after checking the imaginary residue.
double xi_general(unsigned k, unsigned q, unsigned p, unsigned s);

}  // namespace ppower
