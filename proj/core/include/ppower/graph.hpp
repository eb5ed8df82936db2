#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppower {

/// Raised for malformed graphs or graph-file input (self-loops, bad vertices, ...).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite simple graph on dense vertices [0, n) with bitset adjacency rows.
/// Immutable by convention once populated; all query methods are const and
/// safe to call concurrently.
class Graph {
 public:
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t words_per_row() const { return wpr_; }

  /// Adds the undirected edge {u, v}. Duplicate and reversed additions are
  /// harmless; u == v throws GraphError (no self-loops).
  void add_edge(std::size_t u, std::size_t v);

  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  /// Common degree when the graph is regular, std::nullopt otherwise.
  std::optional<std::size_t> regularity() const;

  /// True iff every pair of distinct vertices is adjacent.
  bool is_complete() const;

  /// True iff the graph has at least one edge.
  bool has_edge() const { return edge_count() > 0; }

  Graph complement() const;

  /// Induced subgraph on `verts` (kept in the given order, relabeled 0..m-1).
  Graph induced(const std::vector<std::size_t>& verts) const;

  /// Relabeled copy: vertex u of this graph becomes perm[u].
  Graph permuted(const std::vector<std::size_t>& perm) const;

  std::vector<std::size_t> degree_sequence_sorted() const;

  /// Word w of the adjacency row of u (bits 64w .. 64w+63).
  std::uint64_t row_word(std::size_t u, std::size_t w) const {
    return bits_[u * wpr_ + w];
  }

  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph petersen();

  /// Text format: comments start with '#'; the first non-comment token line is
  /// the vertex count; every following line is an edge "u v" (0-indexed).
  /// Duplicate and reversed edges are tolerated; self-loops are rejected.
  static Graph read_text(std::istream& in);
  static Graph read_text_file(const std::string& path);
  void write_text(std::ostream& out) const;
  void write_text_file(const std::string& path) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::size_t n_;
  std::size_t wpr_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ppower
