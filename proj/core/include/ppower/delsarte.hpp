#pragma once

#include "ppower/code.hpp"
#include "ppower/rational.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppower {

/// B_d = (#ordered pairs at Hamming distance d) / |C| for d = 0..k.
struct DistanceDistribution {
  unsigned k = 0;
  std::vector<Rat> b;  // size k+1, B_0 = 1, sum = |C|
};

DistanceDistribution distance_distribution(const Code& code);

/// The values sum_i B_i K_t^{k;q}(i) for t = 0..k; every entry is
/// nonnegative for a genuine code.
std::vector<Rat> check_delsarte_inequalities(const Code& code);

/// MacWilliams transform B'_t = (1/|C|) sum_i K_t^{k;q}(i) B_i, t = 0..k.
std::vector<Rat> macwilliams(const DistanceDistribution& dist, unsigned q,
                             const Rat& code_size);

/// Dual certificate in the Krawtchouk basis: P(x) = sum_t alpha_t K_t(x).
/// Valid when alpha_0 > 0, alpha_t >= 0 for t >= 1, and P(d) <= 0 for every
/// allowed distance d; then any code with distances inside `allowed`
/// satisfies |C| <= P(0) / alpha_0.
struct CertificatePolynomial {
  std::vector<Rat> alpha;       // alpha_0 .. alpha_k
  std::set<unsigned> allowed;   // distances d >= 1 the code may use
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(x) at an integer point, exactly.
Rat eval_certificate(const CertificatePolynomial& cert, unsigned q, unsigned x);

/// Validates the certificate (positivity of coefficients and nonpositivity on
/// the allowed set -- only there, per the dual feasibility requirement) and
/// returns P(0)/alpha_0.  Throws CertificateError naming the failed condition.
Rat certificate_bound(const CertificatePolynomial& cert, unsigned q, unsigned k);

/// Built-in ternary certificates for distance-divisible-by-3 codes.
/// builtin_P: k = 0 mod 4, alpha_0 = (2/3) 3^{k/2}, unit weight on t not
/// divisible by 3.  builtin_Q: k = 2 mod 4, alpha_0 = (2/3) 3^{k/2} + 1, unit
/// weight on positive t divisible by 3 (constant term folded into alpha_0).
CertificatePolynomial builtin_P(unsigned k);
CertificatePolynomial builtin_Q(unsigned k);

/// Optimum of   max 1 + sum_{i in allowed} B_i
///              s.t. B_i >= 0 and sum_i B_i K_t(i) >= -K_t(0) for all t,
/// i.e. the largest size a distance distribution supported on `allowed` can
/// certify; solved by the exact rational simplex.
Rat lp_bound(unsigned q, unsigned k, const std::set<unsigned>& allowed);

/// JSON round-trip: {"alpha": ["num/den", ...], "allowed": [d, ...]}.
std::string certificate_to_json(const CertificatePolynomial& cert);
CertificatePolynomial certificate_from_json(const std::string& text);

}  // namespace ppower
