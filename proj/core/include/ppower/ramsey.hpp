#pragma once

#include "ppower/graph.hpp"
#include "ppower/power.hpp"
#include "ppower/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppower {

/// Raised when a computation declines to proceed rather than producing an
/// unsound result (e.g. an exact vector representation that would require
/// non-rational coordinates).
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One vector per vertex with g(u).g(v) = 0 for edges and 1 otherwise
/// (including u = v).  modulus = 0 means exact integer vectors; otherwise
/// all dot products are taken mod the (prime) modulus.
struct VectorRepresentation {
  unsigned modulus = 0;
  std::size_t dim = 0;
  std::vector<std::vector<Int>> vectors;
};

/// Builds the representation over Z_p (p prime) from the lower-triangular
/// recurrence, then appends a private all-ones block per vertex to normalize
/// self dot products to 1.  Always succeeds.
VectorRepresentation build_representation(const Graph& g, unsigned p);

/// Exact integer path: succeeds only when the recurrence rows are already
/// unit-norm (e.g. complete graphs); otherwise normalization would need
/// non-real coordinates and a RefusalError is thrown.  Use gram_from_power
/// for exact rank arguments instead.
VectorRepresentation build_representation_exact(const Graph& g);

/// z = sum of all representation vectors (reduced mod p when modular).
std::vector<Int> representation_vector_sum(const VectorRepresentation& rep);

/// Rows = concatenated vectors g(u_1) | ... | g(u_k), one per tuple.
std::vector<std::vector<Int>> stacked_tuple_vectors(const VectorRepresentation& rep,
                                                    const std::vector<VertexTuple>& tuples);

/// Gram matrix of the concatenated tuple vectors; entry(x, y) =
/// k - adjacent_coordinate_count(x, y), reduced mod `modulus` when nonzero.
struct GramMatrix {
  unsigned modulus = 0;  // 0 = exact
  unsigned k = 0;
  unsigned p = 2;
  std::vector<std::vector<Int>> entries;
};

GramMatrix gram_from_power(const Graph& g, unsigned k, unsigned p,
                           const std::vector<VertexTuple>& tuples, unsigned modulus);

/// Entrywise polynomials used in the rank arguments:
///  - clique filter (over Z_p, degree p-1): product of (j - x) over residues
///    j != k mod p; kills every off-diagonal clique Gram entry and keeps the
///    diagonal nonzero.
///  - independence filter (over the rationals, degree floor(k/p)): product of
///    (k - t*p - x) for t = 1..floor(k/p); kills the off-diagonal entries of
///    sets independent in both the modular power and the complement's strong
///    power.
enum class EntrywiseFilter { clique, independence };

struct EntrywisePolynomial {
  EntrywiseFilter which = EntrywiseFilter::clique;
  unsigned k = 1;
  unsigned p = 2;
  unsigned degree() const { return which == EntrywiseFilter::clique ? p - 1 : k / p; }
};

Int clique_filter_eval(const Int& x, unsigned k, unsigned p);        // mod p, in [0, p)
Int independence_filter_eval(const Int& x, unsigned k, unsigned p);  // exact

struct RankCertificate {
  unsigned rank_before = 0;
  unsigned rank_after = 0;
  bool full_rank = false;
};

/// Applies the polynomial entrywise and ranks before/after (mod p for the
/// clique filter, exactly for the independence filter).  Throws InvalidInput
/// when the Gram field does not match the polynomial's.
RankCertificate rank_certificate(const GramMatrix& gram, const EntrywisePolynomial& poly);

/// Size bounds for cliques / qualified independent sets of modular powers.
/// Rank-based bounds require prime p; the entropy-form bounds do not.
struct AsymptoticBound {
  unsigned n = 2, k = 1, p = 2;
  bool regular = false;
  double entropy_exponent = 0.0;  // H(1/p)
  double entropy_bound = 0.0;     // 2^H(1/p) * (n-1)^(1/p)
  Int dimension_count = 0;        // sum_{r <= floor(k/p)} C(k,r) (n-1)^r
  bool rank_bounds_valid = false;
  std::optional<Int> rank_omega_bound;          // C(kn + p - 1, p - 1)
  std::optional<Int> rank_alpha_bound;          // C(kn + floor(k/p), floor(k/p))
  std::optional<Int> rank_omega_bound_regular;  // C(k(n-1) + p, p - 1)
  std::optional<Int> rank_alpha_bound_regular;  // C(k(n-1) + floor(k/p) + 1, floor(k/p))
};

double binary_entropy(double x);

AsymptoticBound bounds(unsigned n, unsigned k, unsigned p, bool regular);

std::string bound_report_json(const AsymptoticBound& b);

/// True iff the tuples are pairwise non-adjacent in the modular power AND
/// every distinct pair shares a coordinate adjacent in g (equivalently, the
/// set is also independent in the strong power of the complement).
bool independent_in_both(const Graph& g, unsigned k, unsigned p,
                         const std::vector<VertexTuple>& tuples);

/// Induced subgraph of the modular power on all concatenations of k/ell
/// blocks drawn from the seed set.  Seed tuples have length ell and every
/// distinct pair must share a g-adjacent coordinate (for ell = 1 that makes
/// the seed a clique of g).  Every independent set of the output is
/// independent in both senses, so the reported alpha bound applies.
struct RamseySubgraph {
  Graph graph{1};
  std::vector<VertexTuple> tuples;
  AsymptoticBound report;
};

RamseySubgraph ramsey_subgraph(const Graph& g, unsigned k, unsigned p,
                               const std::vector<VertexTuple>& seed, unsigned ell);

/// Set-intersection Ramsey graph: vertices are the (p^2 - 1)-subsets of a
/// p^3 element ground set, adjacent iff the intersection size is = -1 mod p.
/// Requires prime p and C(p^3, p^2 - 1) within the materialization cap.
Graph fw_variant_graph(unsigned p);

/// For base size n = p, scans k = 1..k_max and returns the k minimizing
/// (max of the two rank bounds)^(1/k), compared exactly via cross powers.
struct ScanResult {
  unsigned best_k = 1;
  Int best_value = 0;
  std::vector<Int> values;  // values[i] belongs to k = i + 1
};

ScanResult optimal_k_scan(unsigned p, unsigned k_max);

}  // namespace ppower
