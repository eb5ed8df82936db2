#pragma once

#include "ppower/graph.hpp"

#include <cstdint>
#include <vector>

namespace ppower {

/// Outcome of an exact search.  When proven_optimal is false the search ran
/// out of budget and `optimum` is only the best value found (a valid witness
/// is still attached).
struct SearchResult {
  std::uint64_t optimum = 0;
  std::vector<std::uint64_t> witness;
  std::uint64_t node_count = 0;
  bool proven_optimal = false;
};

/// Default node budget: 10^8 search-tree nodes, overridable via the
/// PPOWER_SEARCH_BUDGET environment variable.
std::uint64_t default_search_budget();

struct SearchOptions {
  /// 0 means "use default_search_budget()".
  std::uint64_t node_budget = 0;
  /// Worker threads fanning out root branches; the optimum value is identical
  /// for any thread count, node_count may differ.
  unsigned threads = 1;
};

/// Exact maximum clique via branch-and-bound with a greedy-coloring bound.
/// Vertex order: descending degree, index tiebreak.
SearchResult max_clique(const Graph& g, const SearchOptions& options = {});

/// Exact maximum independent set (clique search on the complement).
SearchResult max_independent_set(const Graph& g, const SearchOptions& options = {});

bool verify_clique(const Graph& g, const std::vector<std::uint64_t>& s);
bool verify_independent(const Graph& g, const std::vector<std::uint64_t>& s);

/// Largest code in [0,q)^k whose pairwise Hamming distances are all divisible
/// by p; equals the maximum independent set of the p-power of K_q but runs on
/// an implicit oracle: translation symmetry fixes the all-zero word, and only
/// words of weight divisible by p remain candidates.  Witness entries are
/// word indices under the mixed-radix bijection of TupleCodec(q, k).
SearchResult divisible_code_search(unsigned q, unsigned k, unsigned p,
                                   const SearchOptions& options = {});

/// Largest code in [0,q)^k with no pairwise Hamming distance divisible by p;
/// equals the maximum clique of the p-power of K_q.  Branches over orbit
/// representatives of the candidate words under the symmetry subgroup that
/// permutes coordinates with identical value histories and relabels symbols
/// unseen in a coordinate, which collapses the early search levels far below
/// what a vertex-by-vertex branch-and-bound reaches; once the orbits stop
/// compressing the remaining candidates, the search switches to the
/// bit-parallel clique solver on the explicit compatibility graph.  Witness
/// entries are word indices under TupleCodec(q, k).
SearchResult nondivisible_code_search(unsigned q, unsigned k, unsigned p,
                                      const SearchOptions& options = {});

}  // namespace ppower
