#include "ppower/power.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace ppower {

namespace {

constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

void check_params(PowerParams params) {
  if (params.k < 1) throw InvalidInput("power exponent k must be >= 1");
  if (params.p < 2) throw InvalidInput("modulus p must be >= 2");
}

// n^k, or nullopt on overflow past 2^63.
std::uint64_t checked_pow(std::size_t n, unsigned k) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n != 0 && result > (std::numeric_limits<std::uint64_t>::max() / 2) / n) {
      throw SizeError("n^k overflows the index range");
    }
    result *= n;
  }
  return result;
}

void check_cap(std::uint64_t vertices, const char* what) {
  std::uint64_t cap = materialization_cap();
  if (vertices > cap) {
    throw SizeError(std::string(what) + " would have " + std::to_string(vertices) +
                    " vertices, beyond the materialization cap " + std::to_string(cap) +
                    "; use the implicit adjacency oracle (p_power_adjacent or "
                    "divisible_code_search) instead");
  }
}

// All tuples in index order, flattened (row i = tuple of index i).
std::vector<unsigned> all_tuples_flat(const TupleCodec& codec) {
  std::uint64_t count = codec.size();
  unsigned k = codec.length();
  std::size_t n = codec.base();
  std::vector<unsigned> flat(count * k, 0);
  // odometer increment from one row to the next
  for (std::uint64_t i = 1; i < count; ++i) {
    const unsigned* prev = &flat[(i - 1) * k];
    unsigned* cur = &flat[i * k];
    for (unsigned j = 0; j < k; ++j) cur[j] = prev[j];
    for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
      if (cur[j] + 1 < n) {
        ++cur[j];
        break;
      }
      cur[j] = 0;
    }
  }
  return flat;
}

}  // namespace

std::uint64_t materialization_cap() {
  if (const char* env = std::getenv("PPOWER_MAX_VERTICES")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) return parsed;
  }
  return kDefaultCap;
}

TupleCodec::TupleCodec(std::size_t n, unsigned k) : n_(n), k_(k) {
  if (n < 1) throw InvalidInput("tuple codec needs base >= 1");
  if (k < 1) throw InvalidInput("tuple codec needs length >= 1");
  size_ = checked_pow(n, k);
}

std::uint64_t TupleCodec::encode(const VertexTuple& t) const {
  if (t.size() != k_) throw InvalidInput("tuple length mismatch");
  std::uint64_t index = 0;
  for (unsigned c : t) {
    if (c >= n_) throw InvalidInput("tuple coordinate out of range");
    index = index * n_ + c;
  }
  return index;
}

VertexTuple TupleCodec::decode(std::uint64_t index) const {
  if (index >= size_) throw InvalidInput("tuple index out of range");
  VertexTuple t(k_);
  for (int j = static_cast<int>(k_) - 1; j >= 0; --j) {
    t[j] = static_cast<unsigned>(index % n_);
    index /= n_;
  }
  return t;
}

unsigned adjacent_coordinate_count(const Graph& g, const VertexTuple& u,
                                   const VertexTuple& v) {
  if (u.size() != v.size()) throw InvalidInput("tuple length mismatch");
  unsigned count = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= g.vertex_count() || v[i] >= g.vertex_count()) {
      throw InvalidInput("tuple coordinate out of range");
    }
    if (u[i] != v[i] && g.adjacent(u[i], v[i])) ++count;
  }
  return count;
}

bool p_power_adjacent(const Graph& g, PowerParams params, const VertexTuple& u,
                      const VertexTuple& v) {
  check_params(params);
  if (u.size() != params.k || v.size() != params.k) {
    throw InvalidInput("tuple length does not match k");
  }
  return adjacent_coordinate_count(g, u, v) % params.p != 0;
}

Graph p_power(const Graph& g, PowerParams params) {
  check_params(params);
  TupleCodec codec(g.vertex_count(), params.k);
  check_cap(codec.size(), "p-power");
  std::uint64_t count = codec.size();
  unsigned k = params.k;
  std::vector<unsigned> flat = all_tuples_flat(codec);
  Graph result(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const unsigned* ti = &flat[i * k];
    for (std::uint64_t j = i + 1; j < count; ++j) {
      const unsigned* tj = &flat[j * k];
      unsigned c = 0;
      for (unsigned x = 0; x < k; ++x) {
        if (ti[x] != tj[x] && g.adjacent(ti[x], tj[x])) ++c;
      }
      if (c % params.p != 0) result.add_edge(i, j);
    }
  }
  return result;
}

Graph strong_power(const Graph& g, unsigned k) {
  if (k < 1) throw InvalidInput("power exponent k must be >= 1");
  TupleCodec codec(g.vertex_count(), k);
  check_cap(codec.size(), "strong power");
  std::uint64_t count = codec.size();
  std::vector<unsigned> flat = all_tuples_flat(codec);
  Graph result(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const unsigned* ti = &flat[i * k];
    for (std::uint64_t j = i + 1; j < count; ++j) {
      const unsigned* tj = &flat[j * k];
      bool all = true;
      for (unsigned x = 0; x < k; ++x) {
        if (ti[x] != tj[x] && !g.adjacent(ti[x], tj[x])) {
          all = false;
          break;
        }
      }
      if (all) result.add_edge(i, j);
    }
  }
  return result;
}

}  // namespace ppower
