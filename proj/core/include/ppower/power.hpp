#pragma once

#include "ppower/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ppower {

/// Raised when a requested materialization exceeds the vertex cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on mathematically invalid operation inputs (length mismatches,
/// out-of-range coordinates, bad parameters).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of the modular power: exponent k >= 1 and modulus p >= 2.
struct PowerParams {
  unsigned k;
  unsigned p;
};

/// A vertex of a power graph: k coordinates, each a base-graph vertex.
using VertexTuple = std::vector<unsigned>;

/// Largest vertex count a graph may be materialized with.
/// Default 2^20, overridable via the PPOWER_MAX_VERTICES environment variable.
std::uint64_t materialization_cap();

/// Bijection between coordinate tuples and dense indices [0, n^k).
/// Mixed radix with coordinate 1 most significant, so index order equals
/// lexicographic tuple order and serialized witnesses are stable.
class TupleCodec {
 public:
  TupleCodec(std::size_t n, unsigned k);

  std::uint64_t size() const { return size_; }
  std::size_t base() const { return n_; }
  unsigned length() const { return k_; }

  std::uint64_t encode(const VertexTuple& t) const;
  VertexTuple decode(std::uint64_t index) const;

 private:
  std::size_t n_;
  unsigned k_;
  std::uint64_t size_;
};

/// |{i : u_i v_i in E(G)}| for same-length tuples with coordinates in V(G).
unsigned adjacent_coordinate_count(const Graph& g, const VertexTuple& u,
                                   const VertexTuple& v);

/// True iff the adjacent-coordinate count is nonzero modulo p.  Identical
/// tuples give count 0 and are therefore never adjacent.
bool p_power_adjacent(const Graph& g, PowerParams params, const VertexTuple& u,
                      const VertexTuple& v);

/// Explicit modular power on n^k vertices under the TupleCodec bijection.
/// Throws SizeError when n^k exceeds materialization_cap(); callers beyond the
/// cap should use p_power_adjacent / divisible_code_search instead.
Graph p_power(const Graph& g, PowerParams params);

/// Strong (AND) power: distinct tuples adjacent iff every coordinate pair is
/// equal or adjacent in g.
Graph strong_power(const Graph& g, unsigned k);

}  // namespace ppower
