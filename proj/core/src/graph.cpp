#include "ppower/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <algorithm>

namespace ppower {

namespace {

void check_vertex(std::size_t v, std::size_t n) {
  if (v >= n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), wpr_((n + 63) / 64), bits_(n * wpr_, 0) {
  if (n == 0) throw GraphError("graph needs at least one vertex");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  bits_[u * wpr_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * wpr_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u, n_);
  check_vertex(v, n_);
  return (bits_[u * wpr_ + v / 64] >> (v % 64)) & 1;
}

std::size_t Graph::degree(std::size_t u) const {
  check_vertex(u, n_);
  std::size_t d = 0;
  for (std::size_t w = 0; w < wpr_; ++w) d += std::popcount(bits_[u * wpr_ + w]);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::optional<std::size_t> Graph::regularity() const {
  std::size_t d = degree(0);
  for (std::size_t u = 1; u < n_; ++u) {
    if (degree(u) != d) return std::nullopt;
  }
  return d;
}

bool Graph::is_complete() const {
  auto reg = regularity();
  return reg.has_value() && *reg == n_ - 1;
}

Graph Graph::complement() const {
  Graph result(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t w = 0; w < wpr_; ++w) {
      result.bits_[u * wpr_ + w] = ~bits_[u * wpr_ + w];
    }
    // clear the diagonal bit and the tail beyond n_
    result.bits_[u * wpr_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    std::size_t tail = n_ % 64;
    if (tail != 0) {
      result.bits_[u * wpr_ + wpr_ - 1] &= (std::uint64_t{1} << tail) - 1;
    }
  }
  return result;
}

Graph Graph::induced(const std::vector<std::size_t>& verts) const {
  if (verts.empty()) throw GraphError("induced subgraph needs at least one vertex");
  Graph result(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    check_vertex(verts[i], n_);
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (verts[i] == verts[j]) throw GraphError("duplicate vertex in induced set");
      if (adjacent(verts[i], verts[j])) result.add_edge(i, j);
    }
  }
  return result;
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw GraphError("permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (std::size_t v : perm) {
    check_vertex(v, n_);
    if (seen[v]) throw GraphError("not a permutation");
    seen[v] = true;
  }
  Graph result(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) result.add_edge(perm[u], perm[v]);
    }
  }
  return result;
}

std::vector<std::size_t> Graph::degree_sequence_sorted() const {
  std::vector<std::size_t> seq(n_);
  for (std::size_t u = 0; u < n_; ++u) seq[u] = degree(u);
  std::sort(seq.begin(), seq.end());
  return seq;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::edgeless(std::size_t n) { return Graph(n); }

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph Graph::read_text(std::istream& in) {
  std::string line;
  std::optional<Graph> g;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!g) {
      long long n;
      if (ls >> n) {
        if (n < 1) throw GraphError("vertex count must be >= 1");
        std::string extra;
        if (ls >> extra) throw GraphError("unexpected token after vertex count");
        g.emplace(static_cast<std::size_t>(n));
      }
      continue;
    }
    long long u, v;
    if (ls >> u) {
      if (!(ls >> v)) throw GraphError("line " + std::to_string(lineno) + ": expected 'u v'");
      std::string extra;
      if (ls >> extra) throw GraphError("line " + std::to_string(lineno) + ": trailing tokens");
      if (u < 0 || v < 0) throw GraphError("line " + std::to_string(lineno) + ": negative vertex");
      g->add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
  }
  if (!g) throw GraphError("graph file contained no vertex count");
  return *g;
}

Graph Graph::read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file: " + path);
  return read_text(in);
}

void Graph::write_text(std::ostream& out) const {
  out << n_ << "\n";
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out << u << " " << v << "\n";
    }
  }
}

void Graph::write_text_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot open file for writing: " + path);
  write_text(out);
}

}  // namespace ppower
