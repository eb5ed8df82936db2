#include "ppower/delsarte.hpp"

#include "ppower/krawtchouk.hpp"
#include "ppower/power.hpp"
#include "ppower/simplex.hpp"

#include <nlohmann/json.hpp>

namespace ppower {

DistanceDistribution distance_distribution(const Code& code) {
  code.validate();
  if (code.words.empty()) throw InvalidInput("distance distribution of an empty code");
  DistanceDistribution dist;
  dist.k = code.k;
  std::vector<Int> counts(code.k + 1, 0);
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    counts[0] += 1;  // ordered pair (w, w)
    for (std::size_t j = i + 1; j < code.words.size(); ++j) {
      counts[hamming_distance(code.words[i], code.words[j])] += 2;
    }
  }
  Int size(static_cast<std::uint64_t>(code.words.size()));
  dist.b.resize(code.k + 1);
  for (unsigned d = 0; d <= code.k; ++d) dist.b[d] = Rat(counts[d]) / size;
  return dist;
}

std::vector<Rat> check_delsarte_inequalities(const Code& code) {
  DistanceDistribution dist = distance_distribution(code);
  std::vector<Rat> values(code.k + 1);
  for (unsigned t = 0; t <= code.k; ++t) {
    Rat total = 0;
    for (unsigned i = 0; i <= code.k; ++i) {
      if (dist.b[i] != 0) total += dist.b[i] * Rat(kraw(code.k, code.q, t, i));
    }
    values[t] = total;
  }
  return values;
}

std::vector<Rat> macwilliams(const DistanceDistribution& dist, unsigned q,
                             const Rat& code_size) {
  if (code_size <= 0) throw InvalidInput("macwilliams: code size must be positive");
  std::vector<Rat> out(dist.k + 1);
  for (unsigned t = 0; t <= dist.k; ++t) {
    Rat total = 0;
    for (unsigned i = 0; i <= dist.k; ++i) {
      if (dist.b[i] != 0) total += Rat(kraw(dist.k, q, t, i)) * dist.b[i];
    }
    out[t] = total / code_size;
  }
  return out;
}

Rat eval_certificate(const CertificatePolynomial& cert, unsigned q, unsigned x) {
  unsigned k = static_cast<unsigned>(cert.alpha.size()) - 1;
  Rat total = 0;
  for (unsigned t = 0; t <= k; ++t) {
    if (cert.alpha[t] != 0) total += cert.alpha[t] * Rat(kraw(k, q, t, x));
  }
  return total;
}

Rat certificate_bound(const CertificatePolynomial& cert, unsigned q, unsigned k) {
  if (cert.alpha.size() != k + 1) {
    throw CertificateError("certificate has " + std::to_string(cert.alpha.size()) +
                           " coefficients, expected k+1 = " + std::to_string(k + 1));
  }
  if (cert.alpha[0] <= 0) throw CertificateError("alpha_0 must be positive");
  for (unsigned t = 1; t <= k; ++t) {
    if (cert.alpha[t] < 0) {
      throw CertificateError("alpha_" + std::to_string(t) + " is negative");
    }
  }
  for (unsigned d : cert.allowed) {
    if (d < 1 || d > k) {
      throw CertificateError("allowed distance " + std::to_string(d) + " outside [1,k]");
    }
    Rat value = eval_certificate(cert, q, d);
    if (value > 0) {
      throw CertificateError("P(" + std::to_string(d) + ") = " + rat_to_string(value) +
                             " is positive on an allowed distance");
    }
  }
  return eval_certificate(cert, q, 0) / cert.alpha[0];
}

namespace {

std::set<unsigned> multiples_up_to(unsigned p, unsigned k) {
  std::set<unsigned> out;
  for (unsigned d = p; d <= k; d += p) out.insert(d);
  return out;
}

}  // namespace

CertificatePolynomial builtin_P(unsigned k) {
  if (k % 4 != 0 || k == 0) {
    throw InvalidInput("builtin_P requires k = 0 (mod 4), k > 0");
  }
  CertificatePolynomial cert;
  cert.alpha.assign(k + 1, Rat(0));
  cert.alpha[0] = Rat(2 * int_pow(3, k / 2)) / 3;
  for (unsigned t = 1; t <= k; ++t) {
    if (t % 3 != 0) cert.alpha[t] = 1;
  }
  cert.allowed = multiples_up_to(3, k);
  return cert;
}

CertificatePolynomial builtin_Q(unsigned k) {
  if (k % 4 != 2) throw InvalidInput("builtin_Q requires k = 2 (mod 4)");
  CertificatePolynomial cert;
  cert.alpha.assign(k + 1, Rat(0));
  cert.alpha[0] = Rat(2 * int_pow(3, k / 2)) / 3 + 1;
  for (unsigned t = 3; t <= k; t += 3) cert.alpha[t] = 1;
  cert.allowed = multiples_up_to(3, k);
  return cert;
}

Rat lp_bound(unsigned q, unsigned k, const std::set<unsigned>& allowed) {
  for (unsigned d : allowed) {
    if (d < 1 || d > k) throw InvalidInput("allowed distance outside [1,k]");
  }
  std::vector<unsigned> vars(allowed.begin(), allowed.end());
  const std::size_t n = vars.size();
  if (n == 0) return 1;

  // Variables B_d for d in allowed.  B_0 = 1 is folded into the right side:
  //   sum_d B_d K_t(d) >= -K_t(0)   becomes   sum_d (-K_t(d)) B_d <= K_t(0).
  std::vector<std::vector<Rat>> a(k + 1, std::vector<Rat>(n));
  std::vector<Rat> b(k + 1);
  for (unsigned t = 0; t <= k; ++t) {
    for (std::size_t j = 0; j < n; ++j) a[t][j] = Rat(-kraw(k, q, t, vars[j]));
    b[t] = Rat(kraw(k, q, t, 0));  // = C(k,t)(q-1)^t >= 0
  }
  std::vector<Rat> c(n, Rat(1));
  LpSolution solution = simplex_maximize(a, b, c);
  return solution.value + 1;
}

std::string certificate_to_json(const CertificatePolynomial& cert) {
  nlohmann::json j;
  j["alpha"] = nlohmann::json::array();
  for (const Rat& r : cert.alpha) j["alpha"].push_back(rat_to_string(r));
  j["allowed"] = cert.allowed;
  return j.dump(2);
}

CertificatePolynomial certificate_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CertificatePolynomial cert;
  if (!j.contains("alpha") || !j["alpha"].is_array()) {
    throw CertificateError("certificate JSON needs an \"alpha\" array");
  }
  for (const auto& entry : j["alpha"]) {
    cert.alpha.push_back(rat_from_string(entry.get<std::string>()));
  }
  if (cert.alpha.empty()) throw CertificateError("certificate has no coefficients");
  if (j.contains("allowed")) {
    for (const auto& entry : j["allowed"]) cert.allowed.insert(entry.get<unsigned>());
  }
  return cert;
}

}  // namespace ppower
