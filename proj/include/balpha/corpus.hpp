#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "balpha/graph.hpp"

namespace balpha {

// Deterministic random source: the raw mt19937_64 stream is fully specified,
// and the derived draws below avoid library-defined distributions so corpora
// are reproducible across standard libraries.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

// Edge bit order for the mask representation: pair (i, j), i < j, sits at bit
// j*(j-1)/2 + i. Seven vertices need 21 bits.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

inline const std::vector<std::vector<int>>& permutations_of(int n) {
  static std::vector<std::vector<std::vector<int>>> cache(8);
  auto& perms = cache[n];
  if (perms.empty()) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return perms;
}

inline const std::vector<std::pair<int, int>>& pairs_of(int n) {
  static std::vector<std::vector<std::pair<int, int>>> cache(8);
  auto& t = cache[n];
  if (t.empty()) {
    t.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) t[pair_bit(i, j)] = {i, j};
  }
  return t;
}

// Smallest mask over all vertex relabelings; compared bitwise from the top so
// most permutations abort after a few bits.
inline std::uint32_t canonical_mask(int n, std::uint32_t mask) {
  const auto& pairs = pairs_of(n);
  const int bits = static_cast<int>(pairs.size());
  std::uint32_t best = 0xffffffffu;
  for (const auto& p : permutations_of(n)) {
    std::uint32_t relabeled = 0;
    // -1: strictly below best so far, 0: equal prefix, 1: above (abandon).
    int cmp = (best == 0xffffffffu) ? -1 : 0;
    for (int b = bits - 1; b >= 0; --b) {
      auto [i, j] = pairs[b];
      int pi = p[i];
      int pj = p[j];
      if (pi > pj) std::swap(pi, pj);
      const std::uint32_t bit = (mask >> pair_bit(pi, pj)) & 1u;
      relabeled |= bit << b;
      if (cmp == 0) {
        const std::uint32_t best_bit = (best >> b) & 1u;
        if (bit < best_bit)
          cmp = -1;
        else if (bit > best_bit) {
          cmp = 1;
          break;
        }
      }
    }
    if (cmp < 0) best = relabeled;
  }
  return best;
}

inline Graph mask_to_graph(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> pair_bit(i, j)) & 1u) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, std::move(edges));
}

}  // namespace detail

// Every graph on exactly n vertices, one representative per isomorphism
// class, grown by attaching a new vertex with each possible neighborhood to
// every (n-1)-vertex representative. Deterministic order.
inline const std::vector<std::uint32_t>& graph_masks_of_order(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= 7");
  static std::vector<std::vector<std::uint32_t>> cache(8);
  if (cache[1].empty()) cache[1] = {0u};
  for (int k = 2; k <= n; ++k) {
    if (!cache[k].empty()) continue;
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t base : cache[k - 1]) {
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        std::uint32_t mask = base;
        for (int i = 0; i < k - 1; ++i)
          if ((nb >> i) & 1u) mask |= 1u << detail::pair_bit(i, k - 1);
        seen.insert(detail::canonical_mask(k, mask));
      }
    }
    cache[k].assign(seen.begin(), seen.end());
    std::sort(cache[k].begin(), cache[k].end());
  }
  return cache[n];
}

inline std::vector<Graph> all_graphs_of_order(int n) {
  std::vector<Graph> out;
  for (std::uint32_t mask : graph_masks_of_order(n))
    out.push_back(detail::mask_to_graph(n, mask));
  return out;
}

// All connected graphs with 1 <= n <= max_order, one per isomorphism class.
inline std::vector<Graph> connected_graphs_up_to(int max_order) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_order; ++n)
    for (std::uint32_t mask : graph_masks_of_order(n)) {
      Graph g = detail::mask_to_graph(n, mask);
      if (is_connected(g)) out.push_back(std::move(g));
    }
  return out;
}

// Random spanning tree plus independent extra edges at a per-graph density.
inline Graph random_connected_graph(int n, CorpusRng& rng) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.below(v)), v);
  const double density = 0.15 + 0.5 * rng.unit();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < density) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, std::move(edges));
}

}  // namespace balpha
