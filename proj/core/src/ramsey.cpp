#include "ppower/ramsey.hpp"

#include "ppower/constructions.hpp"
#include "ppower/linalg.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace ppower {

namespace {

Int mod_reduce(const Int& v, unsigned p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r;
}

/// Lower-triangular recurrence: row u is chosen so that its dot with every
/// earlier row i equals 0 on edges and 1 on non-edges, using unit diagonal
/// (division-free).
std::vector<std::vector<Int>> representation_core(const Graph& g) {
  const unsigned n = g.vertex_count();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned i = 0; i < u; ++i) {
      Int dot = 0;
      for (unsigned j = 0; j < i; ++j) dot += m[u][j] * m[i][j];
      m[u][i] = (g.adjacent(u, i) ? Int(0) : Int(1)) - dot;
    }
    m[u][u] = 1;
  }
  return m;
}

}  // namespace

VectorRepresentation build_representation(const Graph& g, unsigned p) {
  if (!is_prime(p)) throw InvalidInput("build_representation: modulus must be prime");
  const unsigned n = g.vertex_count();
  auto m = representation_core(g);

  std::vector<unsigned> deficit(n);
  std::size_t extra = 0;
  for (unsigned u = 0; u < n; ++u) {
    Int self = 0;
    for (unsigned j = 0; j <= u; ++j) self += m[u][j] * m[u][j];
    deficit[u] = mod_reduce(Int(1) - self, p).convert_to<unsigned>();
    extra += deficit[u];
  }

  VectorRepresentation rep;
  rep.modulus = p;
  rep.dim = n + extra;
  rep.vectors.assign(n, std::vector<Int>(rep.dim, 0));
  std::size_t offset = n;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned j = 0; j < n; ++j) rep.vectors[u][j] = mod_reduce(m[u][j], p);
    // Private normalization block: adds deficit[u] to the self product and
    // nothing to any cross product.
    for (unsigned b = 0; b < deficit[u]; ++b) rep.vectors[u][offset + b] = 1;
    offset += deficit[u];
  }
  return rep;
}

VectorRepresentation build_representation_exact(const Graph& g) {
  const unsigned n = g.vertex_count();
  auto m = representation_core(g);
  for (unsigned u = 0; u < n; ++u) {
    Int self = 0;
    for (unsigned j = 0; j <= u; ++j) self += m[u][j] * m[u][j];
    if (self != 1)
      throw RefusalError(
          "build_representation_exact: normalization would need non-real "
          "coordinates; use gram_from_power for exact rank arguments");
  }
  VectorRepresentation rep;
  rep.modulus = 0;
  rep.dim = n;
  rep.vectors = std::move(m);
  return rep;
}

std::vector<Int> representation_vector_sum(const VectorRepresentation& rep) {
  std::vector<Int> z(rep.dim, 0);
  for (const auto& v : rep.vectors)
    for (std::size_t j = 0; j < rep.dim; ++j) z[j] += v[j];
  if (rep.modulus != 0)
    for (auto& x : z) x = mod_reduce(x, rep.modulus);
  return z;
}

std::vector<std::vector<Int>> stacked_tuple_vectors(const VectorRepresentation& rep,
                                                    const std::vector<VertexTuple>& tuples) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(tuples.size());
  const unsigned n = static_cast<unsigned>(rep.vectors.size());
  for (const auto& tuple : tuples) {
    std::vector<Int> row;
    row.reserve(tuple.size() * rep.dim);
    for (unsigned coord : tuple) {
      if (coord >= n) throw InvalidInput("stacked_tuple_vectors: vertex out of range");
      row.insert(row.end(), rep.vectors[coord].begin(), rep.vectors[coord].end());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

GramMatrix gram_from_power(const Graph& g, unsigned k, unsigned p,
                           const std::vector<VertexTuple>& tuples, unsigned modulus) {
  if (k == 0 || p < 2) throw InvalidInput("gram_from_power: need k >= 1 and p >= 2");
  GramMatrix gram;
  gram.modulus = modulus;
  gram.k = k;
  gram.p = p;
  const std::size_t m = tuples.size();
  gram.entries.assign(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Int entry = Int(k) - adjacent_coordinate_count(g, tuples[i], tuples[j]);
      if (modulus != 0) entry = mod_reduce(entry, modulus);
      gram.entries[i][j] = entry;
      gram.entries[j][i] = entry;
    }
  }
  return gram;
}

Int clique_filter_eval(const Int& x, unsigned k, unsigned p) {
  if (!is_prime(p)) throw InvalidInput("clique_filter_eval: modulus must be prime");
  const Int xr = mod_reduce(x, p);
  const unsigned r = static_cast<unsigned>(k % p);
  Int acc = 1;
  for (unsigned j = 0; j < p; ++j) {
    if (j == r) continue;
    acc = mod_reduce(acc * (Int(j) - xr), p);
  }
  return acc;
}

Int independence_filter_eval(const Int& x, unsigned k, unsigned p) {
  if (p < 2) throw InvalidInput("independence_filter_eval: need p >= 2");
  Int acc = 1;
  for (unsigned t = 1; t <= k / p; ++t) acc *= Int(k) - Int(t) * p - x;
  return acc;
}

RankCertificate rank_certificate(const GramMatrix& gram, const EntrywisePolynomial& poly) {
  const std::size_t m = gram.entries.size();
  RankCertificate cert;
  if (poly.which == EntrywiseFilter::clique) {
    if (gram.modulus == 0 || gram.modulus != poly.p)
      throw InvalidInput("rank_certificate: clique filter needs a mod-p Gram with matching p");
    cert.rank_before = m == 0 ? 0 : rank_mod_p(gram.entries, gram.modulus);
    std::vector<std::vector<Int>> transformed(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        transformed[i][j] = clique_filter_eval(gram.entries[i][j], poly.k, poly.p);
    cert.rank_after = m == 0 ? 0 : rank_mod_p(std::move(transformed), gram.modulus);
  } else {
    if (gram.modulus != 0)
      throw InvalidInput("rank_certificate: independence filter needs an exact Gram");
    cert.rank_before = m == 0 ? 0 : rank_exact(gram.entries);
    std::vector<std::vector<Int>> transformed(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        transformed[i][j] = independence_filter_eval(gram.entries[i][j], poly.k, poly.p);
    cert.rank_after = m == 0 ? 0 : rank_exact(std::move(transformed));
  }
  cert.full_rank = cert.rank_after == m;
  return cert;
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) throw InvalidInput("binary_entropy: need 0 < x < 1");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

AsymptoticBound bounds(unsigned n, unsigned k, unsigned p, bool regular) {
  if (n < 2 || k == 0 || p < 2) throw InvalidInput("bounds: need n >= 2, k >= 1, p >= 2");
  AsymptoticBound b;
  b.n = n;
  b.k = k;
  b.p = p;
  b.regular = regular;
  b.entropy_exponent = binary_entropy(1.0 / p);
  b.entropy_bound =
      std::exp2(b.entropy_exponent) * std::pow(static_cast<double>(n - 1), 1.0 / p);
  const unsigned cap = k / p;
  b.dimension_count = 0;
  for (unsigned r = 0; r <= cap; ++r)
    b.dimension_count += binomial(k, r) * int_pow(Int(n - 1), r);

  b.rank_bounds_valid = is_prime(p);
  if (b.rank_bounds_valid) {
    const std::uint64_t kn = static_cast<std::uint64_t>(k) * n;
    b.rank_omega_bound = binomial(kn + p - 1, p - 1);
    b.rank_alpha_bound = binomial(kn + cap, cap);
    if (regular) {
      const std::uint64_t km = static_cast<std::uint64_t>(k) * (n - 1);
      b.rank_omega_bound_regular = binomial(km + p, p - 1);
      b.rank_alpha_bound_regular = binomial(km + cap + 1, cap);
    }
  }
  return b;
}

std::string bound_report_json(const AsymptoticBound& b) {
  nlohmann::json j;
  j["n"] = b.n;
  j["k"] = b.k;
  j["p"] = b.p;
  j["regular"] = b.regular;
  j["entropy_exponent"] = b.entropy_exponent;
  j["entropy_bound"] = b.entropy_bound;
  j["dimension_count"] = b.dimension_count.str();
  j["rank_bounds_valid"] = b.rank_bounds_valid;
  auto put = [&j](const char* key, const std::optional<Int>& v) {
    if (v)
      j[key] = v->str();
    else
      j[key] = nullptr;
  };
  put("rank_omega_bound", b.rank_omega_bound);
  put("rank_alpha_bound", b.rank_alpha_bound);
  put("rank_omega_bound_regular", b.rank_omega_bound_regular);
  put("rank_alpha_bound_regular", b.rank_alpha_bound_regular);
  return j.dump(2);
}

bool independent_in_both(const Graph& g, unsigned k, unsigned p,
                         const std::vector<VertexTuple>& tuples) {
  if (k == 0 || p < 2) throw InvalidInput("independent_in_both: need k >= 1 and p >= 2");
  std::vector<VertexTuple> set = tuples;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Int count = adjacent_coordinate_count(g, set[i], set[j]);
      if (count == 0 || count % p != 0) return false;
    }
  }
  return true;
}

RamseySubgraph ramsey_subgraph(const Graph& g, unsigned k, unsigned p,
                               const std::vector<VertexTuple>& seed, unsigned ell) {
  if (k == 0 || p < 2 || ell == 0) throw InvalidInput("ramsey_subgraph: need k, ell >= 1, p >= 2");
  if (k % ell != 0) throw InvalidInput("ramsey_subgraph: block length must divide k");
  if (seed.empty()) throw InvalidInput("ramsey_subgraph: empty seed");
  const unsigned n = g.vertex_count();
  for (const auto& t : seed) {
    if (t.size() != ell) throw InvalidInput("ramsey_subgraph: seed tuples must have length ell");
    for (unsigned v : t)
      if (v >= n) throw InvalidInput("ramsey_subgraph: seed vertex out of range");
  }
  std::set<VertexTuple> distinct(seed.begin(), seed.end());
  if (distinct.size() != seed.size()) throw InvalidInput("ramsey_subgraph: duplicate seed tuples");
  // Each distinct pair must share a g-adjacent coordinate (for ell = 1 this
  // says the seed is a clique of g); that is what forces every independent
  // set of the output to be independent in the complement's strong power too.
  for (std::size_t i = 0; i < seed.size(); ++i) {
    for (std::size_t j = i + 1; j < seed.size(); ++j) {
      bool shares = false;
      for (unsigned c = 0; c < ell && !shares; ++c)
        shares = g.adjacent(seed[i][c], seed[j][c]);
      if (!shares)
        throw InvalidInput("ramsey_subgraph: seed pair shares no adjacent coordinate");
    }
  }

  const unsigned blocks = k / ell;
  Int count = int_pow(Int(seed.size()), blocks);
  if (count > Int(materialization_cap()))
    throw SizeError("ramsey_subgraph: output exceeds the materialization cap (" +
                    count.str() + " tuples); raise PPOWER_MAX_VERTICES to override");
  const std::uint64_t total = count.convert_to<std::uint64_t>();

  RamseySubgraph out;
  out.tuples.reserve(total);
  std::vector<std::size_t> odo(blocks, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    VertexTuple tuple;
    tuple.reserve(k);
    for (unsigned b = 0; b < blocks; ++b)
      tuple.insert(tuple.end(), seed[odo[b]].begin(), seed[odo[b]].end());
    out.tuples.push_back(std::move(tuple));
    for (unsigned b = blocks; b-- > 0;) {
      if (++odo[b] < seed.size()) break;
      odo[b] = 0;
    }
  }

  Graph h(static_cast<unsigned>(total));
  for (unsigned i = 0; i < total; ++i)
    for (unsigned j = i + 1; j < total; ++j)
      if (adjacent_coordinate_count(g, out.tuples[i], out.tuples[j]) % p != 0) h.add_edge(i, j);
  out.graph = std::move(h);
  out.report = bounds(n, k, p, g.regularity().has_value());
  return out;
}

Graph fw_variant_graph(unsigned p) {
  if (!is_prime(p)) throw InvalidInput("fw_variant_graph: p must be prime");
  const unsigned ground = p * p * p;
  const unsigned subset = p * p - 1;
  const Int count = binomial(ground, subset);
  if (count > Int(materialization_cap()))
    throw SizeError("fw_variant_graph: " + count.str() +
                    " subsets exceed the materialization cap; raise PPOWER_MAX_VERTICES "
                    "to override");
  const std::uint64_t total = count.convert_to<std::uint64_t>();

  // Enumerate subsets in lexicographic index order as bitmasks; the cap keeps
  // the ground set well under 64 elements in practice.
  if (ground > 64)
    throw SizeError("fw_variant_graph: ground set exceeds 64 elements");
  std::vector<std::uint64_t> masks;
  masks.reserve(total);
  std::vector<unsigned> idx(subset);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    std::uint64_t mask = 0;
    for (unsigned e : idx) mask |= std::uint64_t(1) << e;
    masks.push_back(mask);
    int pos = static_cast<int>(subset) - 1;
    while (pos >= 0 && idx[pos] == ground - subset + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned t = pos + 1; t < subset; ++t) idx[t] = idx[t - 1] + 1;
  }
  if (masks.size() != total) throw std::logic_error("fw_variant_graph: enumeration mismatch");

  Graph g(static_cast<unsigned>(total));
  for (unsigned i = 0; i < total; ++i)
    for (unsigned j = i + 1; j < total; ++j)
      if (static_cast<unsigned>(__builtin_popcountll(masks[i] & masks[j])) % p == p - 1)
        g.add_edge(i, j);
  return g;
}

ScanResult optimal_k_scan(unsigned p, unsigned k_max) {
  if (!is_prime(p)) throw InvalidInput("optimal_k_scan: p must be prime");
  if (k_max == 0) throw InvalidInput("optimal_k_scan: need k_max >= 1");
  ScanResult out;
  out.values.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    const std::uint64_t kn = static_cast<std::uint64_t>(k) * p;
    const unsigned cap = k / p;
    Int omega = binomial(kn + p - 1, p - 1);
    Int alpha = binomial(kn + cap, cap);
    out.values.push_back(std::max(omega, alpha));
  }
  out.best_k = 1;
  for (unsigned k = 2; k <= k_max; ++k) {
    // Compare values[k-1]^(1/k) < values[best-1]^(1/best) by cross-powering.
    const Int lhs = int_pow(out.values[k - 1], out.best_k);
    const Int rhs = int_pow(out.values[out.best_k - 1], k);
    if (lhs < rhs) out.best_k = k;
  }
  out.best_value = out.values[out.best_k - 1];
  return out;
}

}  // namespace ppower
