#include "ppower/spectral.hpp"

#include "ppower/krawtchouk.hpp"
#include "ppower/power.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ppower {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::complex<double> cpow_uint(std::complex<double> base, unsigned e) {
  std::complex<double> acc(1.0, 0.0);
  for (unsigned i = 0; i < e; ++i) acc *= base;
  return acc;
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

std::string double_to_string(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Eigenvalues of a symmetric matrix, ascending.  Eigen's QL loop deflates a
// subdiagonal entry only when it is small relative to its diagonal
// neighbours; matrices with many near-zero diagonal entries after
// tridiagonalization (large graph powers with few distinct eigenvalues) can
// exhaust its fixed iteration budget.  When that happens, rerun the implicit
// Wilkinson-shift QL on the Householder tridiagonalization with an absolute
// deflation floor scaled to the matrix norm.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& a) {
  const long n = a.rows();
  if (n == 0) return {};
  if (n == 1) return {a(0, 0)};

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(a, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success)
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};

  Eigen::Tridiagonalization<Eigen::MatrixXd> tri(a);
  std::vector<double> d(n), e(n, 0.0);
  for (long i = 0; i < n; ++i) d[i] = tri.diagonal()(i);
  for (long i = 0; i + 1 < n; ++i) e[i] = tri.subDiagonal()(i);

  double anorm = 0.0;
  for (long i = 0; i < n; ++i)
    anorm = std::max(anorm, std::abs(d[i]) + std::abs(e[i]) +
                                (i ? std::abs(e[i - 1]) : 0.0));
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor_tol = eps * anorm;

  for (long l = 0; l < n; ++l) {
    int iter = 0;
    long m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor_tol) break;
      }
      if (m != l) {
        if (++iter > 200)
          throw std::logic_error("symmetric_eigenvalues: QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        long i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

BaseSpectralData base_spectral_data(const Graph& g) {
  auto reg = g.regularity();
  if (!reg) throw InvalidInput("base_spectral_data: graph is not regular");
  const unsigned n = g.vertex_count();
  const unsigned d = *reg;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) a(u, v) = a(v, u) = 1.0;

  BaseSpectralData out;
  out.n = n;
  out.d = d;
  out.eigenvalues = symmetric_eigenvalues(a);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<double>());

  double trace = 0.0, trace_sq = 0.0;
  for (double ev : out.eigenvalues) {
    trace += ev;
    trace_sq += ev * ev;
  }
  const double scale = std::max(1.0, static_cast<double>(n) * d);
  if (std::abs(trace) > 1e-10 * scale ||
      std::abs(trace_sq - static_cast<double>(n) * d) > 1e-10 * scale)
    throw std::logic_error("base_spectral_data: trace identities violated");
  if (std::abs(out.eigenvalues.front() - d) > 1e-8 * std::max(1.0, static_cast<double>(d)))
    throw std::logic_error("base_spectral_data: top eigenvalue does not match degree");

  if (n >= 2)
    out.lambda = std::max(out.eigenvalues[1], std::abs(out.eigenvalues.back()));
  return out;
}

Int mu1_exact(unsigned n, unsigned d, unsigned k, unsigned p) {
  if (n == 0 || k == 0 || p < 2 || d >= n)
    throw InvalidInput("mu1_exact: need n >= 1, k >= 1, p >= 2, d < n");
  Int sum = 0;
  for (unsigned j = 0; j <= k; j += p)
    sum += binomial(k, j) * int_pow(Int(n - d), k - j) * int_pow(Int(d), j);
  return int_pow(Int(n), k) - sum;
}

namespace {

/// Distinct non-principal base eigenvalue classes (value, multiplicity).
std::vector<std::pair<double, Int>> group_base_eigenvalues(const BaseSpectralData& base) {
  std::vector<std::pair<double, Int>> classes;
  const double tol = 1e-8 * std::max(1.0, static_cast<double>(base.n));
  for (unsigned i = 1; i < base.n; ++i) {
    double ev = base.eigenvalues[i];
    if (!classes.empty() && std::abs(ev - classes.back().first) <= tol)
      classes.back().second += 1;
    else
      classes.emplace_back(ev, 1);
  }
  return classes;
}

/// Number of ways to place a multiset of base eigenvalue classes (counts[j]
/// copies of class j, total s) into s of the k coordinates:
/// C(k, s) * s! / prod(counts!) * prod(mult_j ^ counts_j).
Int placement_count(unsigned k, unsigned s, const std::vector<unsigned>& counts,
                    const std::vector<std::pair<double, Int>>& classes) {
  Int ways = binomial(k, s);
  Int multinomial = 1;
  unsigned placed = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    for (unsigned c = 0; c < counts[j]; ++c) {
      ++placed;
      multinomial *= placed;
      multinomial /= (c + 1);
    }
  }
  // multinomial now holds s! / prod(counts!) via incremental binomials.
  ways *= multinomial;
  for (std::size_t j = 0; j < counts.size(); ++j)
    ways *= int_pow(classes[j].second, counts[j]);
  return ways;
}

void collapse_and_sort(PowerSpectrum& spectrum, double tol) {
  std::sort(spectrum.entries.begin(), spectrum.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  std::vector<SpectrumEntry> merged;
  for (const auto& e : spectrum.entries) {
    if (!merged.empty() && std::abs(e.value - merged.back().value) <= tol)
      merged.back().multiplicity += e.multiplicity;
    else
      merged.push_back(e);
  }
  spectrum.entries = std::move(merged);
}

}  // namespace

PowerSpectrum power_spectrum(const BaseSpectralData& base, unsigned k, unsigned p) {
  if (k == 0 || p < 2) throw InvalidInput("power_spectrum: need k >= 1, p >= 2");
  const unsigned n = base.n;
  const unsigned d = base.d;
  if (base.eigenvalues.size() != n)
    throw InvalidInput("power_spectrum: inconsistent base data");

  PowerSpectrum out;
  out.exact = false;
  out.n_vertices = int_pow(Int(n), k);

  // Principal eigenvalue from the exact counting formula, reported as float
  // alongside the approximate entries.
  SpectrumEntry principal;
  principal.value = mu1_exact(n, d, k, p).convert_to<double>();
  principal.multiplicity = 1;
  out.entries.push_back(principal);

  auto classes = group_base_eigenvalues(base);

  // factor(s) = -(1/p) sum_{t=1}^{p-1} (n + (w^t-1) d)^{k-s} (w^t-1)^s.
  std::vector<double> factor(k + 1, 0.0);
  for (unsigned s = 1; s <= k; ++s) {
    std::complex<double> total(0.0, 0.0);
    for (unsigned t = 1; t < p; ++t) {
      const double angle = 2.0 * kPi * t / p;
      const std::complex<double> wt(std::cos(angle), std::sin(angle));
      const std::complex<double> shift = wt - 1.0;
      total += cpow_uint(std::complex<double>(n, 0.0) + shift * static_cast<double>(d), k - s) *
               cpow_uint(shift, s);
    }
    if (std::abs(total.imag()) > 1e-9 * std::max(1.0, std::abs(total.real())))
      throw std::logic_error("power_spectrum: non-real eigenvalue residue");
    factor[s] = -total.real() / p;
  }

  // Enumerate multisets of size s over the eigenvalue classes.
  std::vector<unsigned> counts(classes.size(), 0);
  for (unsigned s = 1; s <= k; ++s) {
    if (classes.empty()) break;
    std::function<void(std::size_t, unsigned, double)> rec =
        [&](std::size_t j, unsigned remaining, double product) {
          if (j + 1 == classes.size()) {
            counts[j] = remaining;
            double full = product;
            for (unsigned c = 0; c < remaining; ++c) full *= classes[j].first;
            SpectrumEntry e;
            e.value = factor[s] * full;
            e.multiplicity = placement_count(k, s, counts, classes);
            out.entries.push_back(e);
            counts[j] = 0;
            return;
          }
          double running = product;
          for (unsigned c = 0; c <= remaining; ++c) {
            counts[j] = c;
            rec(j + 1, remaining - c, running);
            running *= classes[j].first;
          }
          counts[j] = 0;
        };
    rec(0, s, 1.0);
  }

  collapse_and_sort(out, 1e-8 * out.n_vertices.convert_to<double>());

  Int total_mult = 0;
  for (const auto& e : out.entries) total_mult += e.multiplicity;
  if (total_mult != out.n_vertices)
    throw std::logic_error("power_spectrum: multiplicities do not sum to vertex count");
  return out;
}

PowerSpectrum kn_power_spectrum_exact(unsigned n, unsigned k, unsigned p) {
  if (n < 2 || k == 0 || p < 2)
    throw InvalidInput("kn_power_spectrum_exact: need n >= 2, k >= 1, p >= 2");
  std::map<Int, Int, std::greater<Int>> grouped;
  for (unsigned s = 0; s <= k; ++s) {
    Int value = 0;
    for (unsigned t = 0; t <= k; ++t)
      if (t % p != 0) value += kraw(k, n, t, s);
    grouped[value] += binomial(k, s) * int_pow(Int(n - 1), s);
  }
  PowerSpectrum out;
  out.exact = true;
  out.n_vertices = int_pow(Int(n), k);
  for (const auto& [value, mult] : grouped) {
    SpectrumEntry e;
    e.exact = true;
    e.exact_value = value;
    e.value = value.convert_to<double>();
    e.multiplicity = mult;
    out.entries.push_back(e);
  }
  Int total_mult = 0;
  for (const auto& e : out.entries) total_mult += e.multiplicity;
  if (total_mult != out.n_vertices)
    throw std::logic_error("kn_power_spectrum_exact: multiplicities do not sum to vertex count");
  return out;
}

HoffmanBound hoffman_bound(const PowerSpectrum& spectrum) {
  if (spectrum.entries.size() < 2)
    throw InvalidInput("hoffman_bound: spectrum has a single eigenvalue");
  const SpectrumEntry& top = spectrum.mu1();
  const SpectrumEntry& bottom = spectrum.mu_min();

  HoffmanBound out;
  if (spectrum.exact) {
    if (!(top.exact_value > 0 && bottom.exact_value < 0))
      throw InvalidInput("hoffman_bound: requires mu_1 > 0 > mu_min");
    out.exact = true;
    out.exact_value =
        Rat(-spectrum.n_vertices * bottom.exact_value) / Rat(top.exact_value - bottom.exact_value);
    out.value = rat_to_double(out.exact_value);
    out.floored = floor_rat(out.exact_value);
  } else {
    if (!(top.value > 0.0 && bottom.value < 0.0))
      throw InvalidInput("hoffman_bound: requires mu_1 > 0 > mu_min");
    const double nn = spectrum.n_vertices.convert_to<double>();
    out.value = -nn * bottom.value / (top.value - bottom.value);
    const double rounded = std::round(out.value);
    // Float noise within 1e-9 of an integer must not shift the floor.
    if (std::abs(out.value - rounded) <= 1e-9)
      out.floored = Int(static_cast<long long>(rounded));
    else
      out.floored = Int(static_cast<long long>(std::floor(out.value)));
  }
  return out;
}

namespace {

XalBoundReport xal_core(unsigned n, unsigned d, double lambda, const Rat* lambda_exact,
                        unsigned p) {
  if (n == 0 || d == 0 || d >= n || p < 2)
    throw InvalidInput("xal_upper_bound: need 1 <= d < n and p >= 2");
  if (lambda < 0.0) throw InvalidInput("xal_upper_bound: lambda must be nonnegative");

  XalBoundReport out;
  out.n = n;
  out.d = d;
  out.p = p;
  out.lambda = lambda;

  // c1 = 2 (1 - cos(2 pi / p)), c2 = 2 - 2 cos((2 pi / p) floor(p / 2)).
  const double c1 = 2.0 * (1.0 - std::cos(2.0 * kPi / p));
  const double c2 = 2.0 - 2.0 * std::cos(2.0 * kPi * (p / 2) / p);
  const double rho1_sq =
      static_cast<double>(n) * n - c1 * static_cast<double>(d) * (n - d);
  const double rho2_sq = lambda * lambda * c2;
  out.rho1 = std::sqrt(std::max(0.0, rho1_sq));
  out.rho2 = std::sqrt(std::max(0.0, rho2_sq));
  out.bound = std::max(out.rho1, out.rho2);

  // cos(2 pi / p) is rational for p in {2, 3, 4}; squared values are exact
  // there when lambda is exact.
  if (lambda_exact && (p == 2 || p == 3 || p == 4)) {
    Rat c1_exact = p == 2 ? Rat(4) : (p == 3 ? Rat(3) : Rat(2));
    Rat c2_exact = p == 3 ? Rat(3) : Rat(4);
    out.exact = true;
    out.rho1_sq = Rat(Int(n) * Int(n)) - c1_exact * Int(d) * Int(n - d);
    if (out.rho1_sq < 0) out.rho1_sq = 0;
    out.rho2_sq = (*lambda_exact) * (*lambda_exact) * c2_exact;
    out.bound_sq = std::max(out.rho1_sq, out.rho2_sq);
  }
  return out;
}

}  // namespace

XalBoundReport xal_upper_bound(unsigned n, unsigned d, const Rat& lambda, unsigned p) {
  return xal_core(n, d, rat_to_double(lambda), &lambda, p);
}

XalBoundReport xal_upper_bound(unsigned n, unsigned d, double lambda, unsigned p) {
  return xal_core(n, d, lambda, nullptr, p);
}

std::string spectrum_to_json(const PowerSpectrum& spectrum) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : spectrum.entries) {
    nlohmann::json item;
    item["value"] = e.exact ? e.exact_value.str() : double_to_string(e.value);
    item["multiplicity"] = e.multiplicity.str();
    arr.push_back(item);
  }
  nlohmann::json root;
  root["exact"] = spectrum.exact;
  root["vertices"] = spectrum.n_vertices.str();
  root["spectrum"] = arr;
  return root.dump(2);
}

}  // namespace ppower
