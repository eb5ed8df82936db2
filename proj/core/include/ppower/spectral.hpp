#pragma once

#include "ppower/graph.hpp"
#include "ppower/rational.hpp"

#include <string>
#include <vector>

namespace ppower {

/// Spectrum of a regular base graph, eigenvalues sorted descending so that
/// eigenvalues[0] = d.  lambda = max{lambda_2, |lambda_n|}.
struct BaseSpectralData {
  unsigned n = 1;
  unsigned d = 0;
  std::vector<double> eigenvalues;
  double lambda = 0.0;
};

/// Dense symmetric eigendecomposition of a regular graph; validated against
/// the trace identities (sum = 0, sum of squares = n*d) at 1e-10 relative.
/// Throws InvalidInput for non-regular graphs.
BaseSpectralData base_spectral_data(const Graph& g);

struct SpectrumEntry {
  bool exact = false;
  Int exact_value = 0;  // meaningful when exact
  double value = 0.0;
  Int multiplicity = 0;
};

/// Eigenvalue multiset of a modular power, sorted by descending eigenvalue.
struct PowerSpectrum {
  bool exact = false;
  Int n_vertices = 0;
  std::vector<SpectrumEntry> entries;

  const SpectrumEntry& mu1() const { return entries.front(); }
  const SpectrumEntry& mu_min() const { return entries.back(); }
};

/// Largest eigenvalue (= vertex degree) of the modular power of an (n, d)
/// regular graph, exactly:
///   n^k - sum over j = 0 (mod p), j <= k of C(k,j) (n-d)^{k-j} d^j.
Int mu1_exact(unsigned n, unsigned d, unsigned k, unsigned p);

/// Power spectrum through the rank-one-plus-adjacency tensor decomposition:
/// one eigenvalue per choice of s > 0 positions carrying non-principal base
/// eigenvalues, with eigenvalue
///   -(1/p) sum_{t=1}^{p-1} (n + (w^t - 1) d)^{k-s} (w^t - 1)^s  *  prod(lambda_i)
/// (w = primitive p-th root of unity), aggregated multiplicities, complex
/// residues checked below 1e-9 of magnitude, equal values collapsed at
/// absolute tolerance 1e-8 * n^k.
PowerSpectrum power_spectrum(const BaseSpectralData& base, unsigned k, unsigned p);

/// Exact integer spectrum for complete bases: the weight-s eigenvalue is
/// sum over t not divisible by p of K_t^{k;n}(s), multiplicity C(k,s)(n-1)^s.
PowerSpectrum kn_power_spectrum_exact(unsigned n, unsigned k, unsigned p);

struct HoffmanBound {
  bool exact = false;
  Rat exact_value = 0;  // meaningful when exact
  double value = 0.0;
  Int floored = 0;
};

/// Ratio bound -N mu_min / (mu_1 - mu_min); requires mu_1 > 0 > mu_min.
/// Exact when the spectrum is exact.  The float path snaps values within
/// 1e-9 of an integer before flooring so float noise cannot shift the floor.
HoffmanBound hoffman_bound(const PowerSpectrum& spectrum);

/// Upper bound on the growth rate of independent sets of modular powers of an
/// (n, d) regular graph with second eigenvalue bound lambda:
///   rho1 = sqrt(n^2 - 2 (1 - cos(2 pi / p)) d (n - d)),
///   rho2 = lambda * sqrt(2 - 2 cos((2 pi / p) floor(p / 2))),
/// reported bound = max(rho1, rho2).  For p in {2, 3, 4} the cosines are
/// rational and the squared values are exact.
struct XalBoundReport {
  unsigned n = 0, d = 0, p = 2;
  double lambda = 0.0;
  double rho1 = 0.0, rho2 = 0.0, bound = 0.0;
  bool exact = false;
  Rat rho1_sq = 0, rho2_sq = 0, bound_sq = 0;  // meaningful when exact
};

XalBoundReport xal_upper_bound(unsigned n, unsigned d, const Rat& lambda, unsigned p);
XalBoundReport xal_upper_bound(unsigned n, unsigned d, double lambda, unsigned p);

/// JSON list of {"value": string (exact rational or decimal),
/// "multiplicity": string (decimal integer)}.
std::string spectrum_to_json(const PowerSpectrum& spectrum);

}  // namespace ppower
