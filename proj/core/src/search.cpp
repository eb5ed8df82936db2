#include "ppower/search.hpp"

#include "ppower/power.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace ppower {

namespace {

using Bitset = std::vector<std::uint64_t>;

struct CliqueContext {
  std::size_t n = 0;
  std::size_t wpr = 0;
  std::vector<std::uint64_t> adj;        // reordered adjacency, row-major
  std::vector<std::size_t> order;        // position -> original vertex
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stopped{false};
  std::atomic<std::uint64_t> best_size{0};
  std::vector<std::size_t> best_clique;  // positions, guarded by mutex
  std::mutex best_mutex;

  const std::uint64_t* row(std::size_t v) const { return &adj[v * wpr]; }

  void offer(const std::vector<std::size_t>& clique) {
    std::uint64_t size = clique.size();
    if (size <= best_size.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(best_mutex);
    if (size > best_size.load(std::memory_order_relaxed)) {
      best_clique = clique;
      best_size.store(size, std::memory_order_relaxed);
    }
  }
};

inline bool bit_test(const std::uint64_t* bits, std::size_t i) {
  return (bits[i / 64] >> (i % 64)) & 1;
}

inline void bit_clear(std::uint64_t* bits, std::size_t i) {
  bits[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

inline void bit_set(std::uint64_t* bits, std::size_t i) {
  bits[i / 64] |= std::uint64_t{1} << (i % 64);
}

// True iff every vertex of P is adjacent to all other vertices of P.
bool is_clique_set(const CliqueContext& ctx, const Bitset& p, std::size_t p_size) {
  for (std::size_t w = 0; w < ctx.wpr; ++w) {
    std::uint64_t bits = p[w];
    while (bits) {
      std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::uint64_t* rv = ctx.row(v);
      std::size_t have = 0;
      for (std::size_t x = 0; x < ctx.wpr; ++x) have += std::popcount(rv[x] & p[x]);
      if (have != p_size - 1) return false;
    }
  }
  return true;
}

void collect_set(const Bitset& p, std::vector<std::size_t>& out) {
  for (std::size_t w = 0; w < p.size(); ++w) {
    std::uint64_t bits = p[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

// Greedy sequential coloring of P in ascending vertex order; fills `verts`
// sorted by ascending color and parallel `colors` (1-based upper bounds).
void color_sort(const CliqueContext& ctx, const Bitset& p, std::size_t p_size,
                std::vector<std::size_t>& verts, std::vector<std::uint32_t>& colors) {
  verts.clear();
  colors.clear();
  static thread_local std::vector<Bitset> classes;
  std::size_t used = 0;
  std::vector<std::size_t> members;
  members.reserve(p_size);
  collect_set(p, members);
  static thread_local std::vector<std::vector<std::size_t>> class_members;
  for (std::size_t v : members) {
    const std::uint64_t* rv = ctx.row(v);
    std::size_t c = 0;
    for (; c < used; ++c) {
      bool conflict = false;
      for (std::size_t w = 0; w < ctx.wpr; ++w) {
        if (classes[c][w] & rv[w]) {
          conflict = true;
          break;
        }
      }
      if (!conflict) break;
    }
    if (c == used) {
      if (classes.size() <= used) {
        classes.emplace_back();
        class_members.emplace_back();
      }
      classes[used].assign(ctx.wpr, 0);  // sized per search; threads may reuse
      class_members[used].clear();
      ++used;
    }
    bit_set(classes[c].data(), v);
    class_members[c].push_back(v);
  }
  for (std::size_t c = 0; c < used; ++c) {
    for (std::size_t v : class_members[c]) {
      verts.push_back(v);
      colors.push_back(static_cast<std::uint32_t>(c + 1));
    }
    class_members[c].clear();
  }
}

void expand(CliqueContext& ctx, std::vector<std::size_t>& r, Bitset& p,
            std::size_t p_size) {
  if (ctx.stopped.load(std::memory_order_relaxed)) return;
  if (ctx.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > ctx.budget) {
    ctx.stopped.store(true, std::memory_order_relaxed);
    return;
  }
  if (p_size == 0) {
    ctx.offer(r);
    return;
  }
  if (r.size() + p_size <= ctx.best_size.load(std::memory_order_relaxed)) return;
  // If the candidate set is itself a clique there is nothing left to branch on.
  if (is_clique_set(ctx, p, p_size)) {
    std::vector<std::size_t> full = r;
    collect_set(p, full);
    ctx.offer(full);
    return;
  }
  std::vector<std::size_t> verts;
  std::vector<std::uint32_t> colors;
  color_sort(ctx, p, p_size, verts, colors);
  Bitset child(ctx.wpr);
  for (std::size_t i = verts.size(); i-- > 0;) {
    if (ctx.stopped.load(std::memory_order_relaxed)) return;
    if (r.size() + colors[i] <= ctx.best_size.load(std::memory_order_relaxed)) return;
    std::size_t v = verts[i];
    const std::uint64_t* rv = ctx.row(v);
    std::size_t child_size = 0;
    for (std::size_t w = 0; w < ctx.wpr; ++w) {
      child[w] = p[w] & rv[w];
      child_size += std::popcount(child[w]);
    }
    r.push_back(v);
    if (child_size == 0) {
      ctx.offer(r);
    } else {
      // child is recomputed from scratch each iteration, so the callee may
      // clobber it freely
      expand(ctx, r, child, child_size);
    }
    r.pop_back();
    bit_clear(p.data(), v);
    --p_size;
  }
}

SearchResult run_clique_search(const Graph& g, const SearchOptions& options) {
  std::size_t n = g.vertex_count();
  CliqueContext ctx;
  ctx.n = n;
  ctx.wpr = (n + 63) / 64;
  ctx.budget = options.node_budget ? options.node_budget : default_search_budget();

  // descending degree, index tiebreak
  ctx.order.resize(n);
  std::iota(ctx.order.begin(), ctx.order.end(), std::size_t{0});
  std::vector<std::size_t> degs(n);
  for (std::size_t v = 0; v < n; ++v) degs[v] = g.degree(v);
  std::stable_sort(ctx.order.begin(), ctx.order.end(),
                   [&](std::size_t a, std::size_t b) { return degs[a] > degs[b]; });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ctx.order[i]] = i;

  ctx.adj.assign(n * ctx.wpr, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) {
        bit_set(&ctx.adj[pos[u] * ctx.wpr], pos[v]);
        bit_set(&ctx.adj[pos[v] * ctx.wpr], pos[u]);
      }
    }
  }

  Bitset root(ctx.wpr, 0);
  for (std::size_t i = 0; i < n; ++i) bit_set(root.data(), i);

  // Any single vertex is a clique; seeding the incumbent guarantees a usable
  // lower bound even when the node budget drains immediately.
  {
    std::vector<std::size_t> seed{0};
    ctx.offer(seed);
  }

  unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || n < 64) {
    std::vector<std::size_t> r;
    expand(ctx, r, root, n);
  } else {
    // Parallel fan-out of the root branches.  Branch i works on the same
    // candidate set it would see in the serial order, so the searched space
    // is a timing-independent partition and the optimum is deterministic.
    std::vector<std::size_t> verts;
    std::vector<std::uint32_t> colors;
    if (is_clique_set(ctx, root, n)) {
      std::vector<std::size_t> full;
      collect_set(root, full);
      ctx.offer(full);
    } else {
      ctx.nodes.fetch_add(1, std::memory_order_relaxed);
      color_sort(ctx, root, n, verts, colors);
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        Bitset child(ctx.wpr);
        std::vector<std::size_t> r;
        while (true) {
          std::size_t slot = next.fetch_add(1);
          if (slot >= verts.size()) return;
          std::size_t i = verts.size() - 1 - slot;  // serial order: last first
          if (ctx.stopped.load(std::memory_order_relaxed)) return;
          std::size_t v = verts[i];
          if (1 + colors[i] <= ctx.best_size.load(std::memory_order_relaxed)) continue;
          const std::uint64_t* rv = ctx.row(v);
          std::size_t child_size = 0;
          for (std::size_t w = 0; w < ctx.wpr; ++w) {
            child[w] = root[w] & rv[w];
            child_size += std::popcount(child[w]);
          }
          // serial processing removes the branches handled before this one
          for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (bit_test(child.data(), verts[j])) {
              bit_clear(child.data(), verts[j]);
              --child_size;
            }
          }
          r.assign(1, v);
          Bitset mine = child;
          expand(ctx, r, mine, child_size);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  SearchResult result;
  result.optimum = ctx.best_size.load();
  result.node_count = ctx.nodes.load();
  result.proven_optimal = !ctx.stopped.load();
  result.witness.reserve(ctx.best_clique.size());
  for (std::size_t posv : ctx.best_clique) {
    result.witness.push_back(static_cast<std::uint64_t>(ctx.order[posv]));
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

}  // namespace

std::uint64_t default_search_budget() {
  if (const char* env = std::getenv("PPOWER_SEARCH_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) return parsed;
  }
  return 100000000ull;  // 10^8 nodes
}

SearchResult max_clique(const Graph& g, const SearchOptions& options) {
  return run_clique_search(g, options);
}

SearchResult max_independent_set(const Graph& g, const SearchOptions& options) {
  return run_clique_search(g.complement(), options);
}

bool verify_clique(const Graph& g, const std::vector<std::uint64_t>& s) {
  std::vector<std::uint64_t> verts(s);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (std::uint64_t v : verts) {
    if (v >= g.vertex_count()) throw InvalidInput("witness vertex out of range");
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

bool verify_independent(const Graph& g, const std::vector<std::uint64_t>& s) {
  std::vector<std::uint64_t> verts(s);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (std::uint64_t v : verts) {
    if (v >= g.vertex_count()) throw InvalidInput("witness vertex out of range");
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

SearchResult divisible_code_search(unsigned q, unsigned k, unsigned p,
                                   const SearchOptions& options) {
  if (q < 2) throw InvalidInput("alphabet size q must be >= 2");
  if (k < 1) throw InvalidInput("word length k must be >= 1");
  if (p < 2) throw InvalidInput("modulus p must be >= 2");
  TupleCodec codec(q, k);

  // Candidates: nonzero words whose weight (distance to the all-zero word,
  // fixed by translation symmetry) is divisible by p.
  std::vector<std::vector<unsigned>> words;
  std::vector<std::uint64_t> indices;
  std::vector<unsigned> current(k, 0);
  for (std::uint64_t idx = 0; idx < codec.size(); ++idx) {
    unsigned weight = 0;
    for (unsigned c : current) weight += (c != 0);
    if (weight != 0 && weight % p == 0) {
      words.push_back(current);
      indices.push_back(idx);
    }
    for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
      if (current[j] + 1 < q) {
        ++current[j];
        break;
      }
      current[j] = 0;
    }
    constexpr std::size_t kCandidateLimit = 200000;
    if (words.size() > kCandidateLimit) {
      throw SizeError("divisible_code_search candidate set exceeds " +
                      std::to_string(kCandidateLimit) + " words");
    }
  }

  SearchResult result;
  if (words.empty()) {
    // No nonzero weight in [1,k] is divisible by p: singletons are optimal.
    result.optimum = 1;
    result.witness = {0};
    result.proven_optimal = true;
    return result;
  }

  Graph compat(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      unsigned dist = 0;
      for (unsigned x = 0; x < k; ++x) dist += (words[i][x] != words[j][x]);
      if (dist % p == 0) compat.add_edge(i, j);
    }
  }

  SearchResult inner = max_clique(compat, options);
  result.optimum = inner.optimum + 1;
  result.node_count = inner.node_count;
  result.proven_optimal = inner.proven_optimal;
  result.witness.push_back(0);
  for (std::uint64_t v : inner.witness) result.witness.push_back(indices[v]);
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

namespace {

// Shared state for the orbit-representative search over codes whose pairwise
// distances all avoid residue zero.
struct OrbitSearchState {
  unsigned q = 0;
  unsigned k = 0;
  unsigned p = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;
  unsigned finish_threads = 1;
  std::vector<std::vector<unsigned>> chosen;  // partial code on the DFS path
  std::vector<std::vector<unsigned>> best;    // largest code found so far
};

unsigned word_distance(const std::vector<unsigned>& a,
                       const std::vector<unsigned>& b) {
  unsigned d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

// Finishes a subproblem exactly with the colored branch-and-bound solver on
// the explicit compatibility graph of the remaining candidates.
void orbit_finish(OrbitSearchState& st,
                  const std::vector<std::vector<unsigned>>& cands) {
  Graph compat(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (word_distance(cands[i], cands[j]) % st.p != 0) compat.add_edge(i, j);
    }
  }
  SearchOptions opts;
  opts.threads = st.finish_threads;
  opts.node_budget = st.nodes < st.budget ? st.budget - st.nodes : 1;
  SearchResult inner = max_clique(compat, opts);
  st.nodes += inner.node_count;
  if (!inner.proven_optimal) st.stopped = true;
  if (st.chosen.size() + inner.optimum > st.best.size()) {
    st.best = st.chosen;
    for (std::uint64_t v : inner.witness) {
      st.best.push_back(cands[static_cast<std::size_t>(v)]);
    }
  }
}

void orbit_expand(OrbitSearchState& st,
                  const std::vector<std::vector<unsigned>>& cands) {
  if (st.stopped) return;
  if (++st.nodes > st.budget) {
    st.stopped = true;
    return;
  }
  if (st.chosen.size() > st.best.size()) st.best = st.chosen;
  if (cands.empty() || st.chosen.size() + cands.size() <= st.best.size()) return;

  // Candidates are interchangeable when some symmetry fixes every chosen word
  // pointwise: coordinates with identical value histories may be permuted,
  // and symbols a coordinate has never used may be relabeled within it.  Both
  // moves preserve all pairwise distances, so two candidates lie in the same
  // orbit exactly when, history class by history class, their multisets of
  // (seen value | fresh marker) entries agree, and one representative per key
  // covers every extension up to symmetry.
  const unsigned k = st.k;
  std::vector<std::vector<unsigned>> history(k);
  for (unsigned i = 0; i < k; ++i) {
    history[i].reserve(st.chosen.size());
    for (const auto& w : st.chosen) history[i].push_back(w[i]);
  }
  std::map<std::vector<unsigned>, unsigned> class_ids;
  std::vector<unsigned> cls(k);
  for (unsigned i = 0; i < k; ++i) {
    cls[i] = class_ids.emplace(history[i], static_cast<unsigned>(class_ids.size()))
                 .first->second;
  }
  std::vector<std::vector<unsigned>> class_coords(class_ids.size());
  for (unsigned i = 0; i < k; ++i) class_coords[cls[i]].push_back(i);

  std::map<std::vector<unsigned>, unsigned> key_ids;
  std::vector<unsigned> orbit_of(cands.size());
  std::vector<std::size_t> rep_of;  // orbit id -> index of its first candidate
  std::vector<unsigned> key;
  key.reserve(k);
  for (std::size_t ci = 0; ci < cands.size(); ++ci) {
    const auto& w = cands[ci];
    key.clear();
    for (const auto& coords : class_coords) {
      std::size_t start = key.size();
      for (unsigned i : coords) {
        unsigned v = w[i];
        bool seen =
            std::find(history[i].begin(), history[i].end(), v) != history[i].end();
        key.push_back(seen ? v : st.q);  // q stands in for "fresh symbol"
      }
      std::sort(key.begin() + start, key.end());
    }
    auto [it, inserted] = key_ids.emplace(key, static_cast<unsigned>(key_ids.size()));
    orbit_of[ci] = it->second;
    if (inserted) rep_of.push_back(ci);
  }

  // Orbit branching pays for itself only while it compresses the candidate
  // set; once compression fades (or the set is small), the colored
  // branch-and-bound is the stronger endgame.
  const std::size_t orbit_count = rep_of.size();
  constexpr std::size_t kFinishLimit = 20000;  // explicit-graph size cap
  constexpr std::size_t kSmallFinish = 48;
  if (cands.size() <= kFinishLimit &&
      (cands.size() <= kSmallFinish || 2 * orbit_count > cands.size())) {
    orbit_finish(st, cands);
    return;
  }

  // Once an orbit has been branched on, the whole orbit may be dropped from
  // later branches: any code meeting a dropped orbit has a symmetric image,
  // fixing the chosen words, that meets the dropped orbit's representative.
  std::vector<std::size_t> suffix(orbit_count + 1, 0);
  {
    std::vector<std::size_t> orbit_size(orbit_count, 0);
    for (unsigned id : orbit_of) ++orbit_size[id];
    for (std::size_t i = orbit_count; i-- > 0;) {
      suffix[i] = suffix[i + 1] + orbit_size[i];
    }
  }

  std::vector<std::vector<unsigned>> child;
  for (std::size_t i = 0; i < orbit_count; ++i) {
    if (st.stopped) return;
    if (st.chosen.size() + suffix[i] <= st.best.size()) return;
    const auto& rep = cands[rep_of[i]];
    child.clear();
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      if (orbit_of[ci] < i) continue;
      unsigned d = word_distance(cands[ci], rep);
      if (d != 0 && d % st.p != 0) child.push_back(cands[ci]);
    }
    st.chosen.push_back(rep);
    orbit_expand(st, child);
    st.chosen.pop_back();
  }
}

}  // namespace

SearchResult nondivisible_code_search(unsigned q, unsigned k, unsigned p,
                                      const SearchOptions& options) {
  if (q < 2) throw InvalidInput("alphabet size q must be >= 2");
  if (k < 1) throw InvalidInput("word length k must be >= 1");
  if (p < 2) throw InvalidInput("modulus p must be >= 2");
  TupleCodec codec(q, k);
  constexpr std::uint64_t kWordLimit = 200000;
  if (codec.size() > kWordLimit) {
    throw SizeError("nondivisible_code_search word space exceeds " +
                    std::to_string(kWordLimit) + " words");
  }

  SearchResult result;
  if (p > k) {
    // Distinct words differ in 1..k coordinates and no such count is a
    // multiple of p, so the whole space is one valid code.
    result.optimum = codec.size();
    result.witness.resize(codec.size());
    std::iota(result.witness.begin(), result.witness.end(), std::uint64_t{0});
    result.node_count = 1;
    result.proven_optimal = true;
    return result;
  }

  std::vector<std::vector<unsigned>> words;
  words.reserve(codec.size());
  std::vector<unsigned> current(k, 0);
  for (std::uint64_t idx = 0; idx < codec.size(); ++idx) {
    words.push_back(current);
    for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
      if (current[j] + 1 < q) {
        ++current[j];
        break;
      }
      current[j] = 0;
    }
  }

  OrbitSearchState st;
  st.q = q;
  st.k = k;
  st.p = p;
  st.budget = options.node_budget ? options.node_budget : default_search_budget();
  st.finish_threads = std::max(1u, options.threads);
  st.best = {words[0]};  // singleton incumbent, usable even if the budget drains
  orbit_expand(st, words);

  result.optimum = st.best.size();
  result.node_count = st.nodes;
  result.proven_optimal = !st.stopped;
  result.witness.reserve(st.best.size());
  for (const auto& w : st.best) result.witness.push_back(codec.encode(w));
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

}  // namespace ppower
