#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "balpha/balpha.hpp"
#include "balpha/graph.hpp"

namespace balpha {

// lambda_1(B_alpha) >= alpha * min_degree for connected graphs.
inline double lower_lambda1_alpha_delta(const Graph& g, AlphaValue alpha) {
  if (!is_connected(g)) throw std::invalid_argument("bound needs a connected graph");
  return alpha.get() * degree_profile(g).min_degree;
}

// Edge classification around a maximum-degree vertex.
struct NeighborhoodSplit {
  int center = -1;
  long long inside = 0;    // both endpoints in N(center)
  long long outside = 0;   // both endpoints outside the closed neighborhood
  long long crossing = 0;  // one endpoint in N(center), the other outside
};

inline NeighborhoodSplit neighborhood_split(const Graph& g, int center) {
  const auto profile = degree_profile(g);
  if (center < 0 || center >= g.vertex_count())
    throw std::invalid_argument("center out of range");
  if (g.degree(center) != profile.max_degree)
    throw std::invalid_argument("center must have maximum degree");
  NeighborhoodSplit s;
  s.center = center;
  for (auto [i, j] : g.edges()) {
    if (i == center || j == center) continue;
    const bool i_in = g.adjacent(center, i);
    const bool j_in = g.adjacent(center, j);
    if (i_in && j_in)
      ++s.inside;
    else if (!i_in && !j_in)
      ++s.outside;
    else
      ++s.crossing;
  }
  return s;
}

// Rayleigh-quotient lower bound on lambda_1(B_alpha) built from a three-level
// test vector around a maximum-degree vertex. Undefined at alpha = 1/2.
struct YzParts {
  int center = -1;
  double p = 0;
  double q = 0;
  double y = 0;
  double z = 0;
  double value = 0;
  bool limit_form = false;  // p vanished; value is the limiting ratio
};

// Limiting ratio of y/z as p -> 0: (2*alpha*m1 + (1-alpha)*(max_degree+m3)) / max_degree.
inline double yz_limit_ratio(const NeighborhoodSplit& s, int max_degree, double alpha) {
  return (2.0 * alpha * static_cast<double>(s.inside) +
          (1.0 - alpha) * (max_degree + static_cast<double>(s.crossing))) /
         max_degree;
}

inline YzParts yz_parts_at(const Graph& g, AlphaValue alpha, int center) {
  const double a = alpha.get();
  if (a == 0.5) throw std::domain_error("bound undefined at alpha = 1/2");
  const int n = g.vertex_count();
  const NeighborhoodSplit s = neighborhood_split(g, center);
  const double dd = g.degree(center);
  const double m1 = static_cast<double>(s.inside);
  const double m2 = static_cast<double>(s.outside);
  const double m3 = static_cast<double>(s.crossing);

  YzParts parts;
  parts.center = center;
  const double span = 2.0 * dd + 5.0 * a - 3.0 * a * a;
  const double split = (a - 1.0) * (3.0 * a - 2.0) * dd + 2.0;
  parts.p = (2.0 * a - 1.0) * split;
  parts.q = 16.0 * a * a - 6.0 * a * a * a - 10.0 * a + 2.0;

  if (split == 0.0) {
    parts.limit_form = true;
    parts.value = yz_limit_ratio(s, static_cast<int>(dd), a);
    return parts;
  }

  const double p = parts.p;
  const double q = parts.q;
  const double c2 = 2.0 * a - 1.0;
  const double c3 = a * (3.0 * a - 1.0);
  parts.y = (c3 * c3 * (dd + 1.0) * (dd + 1.0) * (2.0 * a * m2 + (1.0 - a) * m3) +
             (1.0 - a) * c2 * c2 * span * span * dd) *
                p * p +
            4.0 * c2 * c2 * (dd + 1.0) *
                (c2 * dd * span + c3 * (dd + 1.0) * m3) * p * q +
            4.0 * c2 * c2 * (dd + 1.0) * (dd + 1.0) *
                (2.0 * a * m1 + (1.0 - a) * (dd + m3)) * q * q;
  parts.z = (c2 * c2 * span * span + c3 * c3 * (dd + 1.0) * (dd + 1.0) * (n - dd - 1.0)) *
                p * p +
            4.0 * dd * (dd + 1.0) * (dd + 1.0) * c2 * c2 * q * q;
  parts.value = parts.y / parts.z;
  return parts;
}

// Best value over all maximum-degree centers.
inline double lower_lambda1_yz(const Graph& g, AlphaValue alpha) {
  if (!is_connected(g)) throw std::invalid_argument("bound needs a connected graph");
  if (g.edge_count() < 1) throw std::invalid_argument("bound needs at least one edge");
  const int max_degree = degree_profile(g).max_degree;
  double best = 0;
  bool first = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != max_degree) continue;
    const double value = yz_parts_at(g, alpha, v).value;
    if (first || value > best) best = value;
    first = false;
  }
  return best;
}

// Classical specializations of the same Rayleigh bound: the adjacency bound
// 2m/n (alpha=1), the strengthened Laplacian bound max_degree + 1 +
// m3/(max_degree*(max_degree+1)) (alpha=0), and the signless-Laplacian bound
// 4m/n (alpha=2/3, after scaling by 3).
struct SpecializedLowerBounds {
  double adjacency = 0;
  double laplacian = 0;
  double signless_laplacian = 0;
};

inline SpecializedLowerBounds specialized_lower_bounds(const Graph& g) {
  if (g.edge_count() < 1) throw std::invalid_argument("bounds need at least one edge");
  const auto profile = degree_profile(g);
  const double n = g.vertex_count();
  const double m = static_cast<double>(g.edge_count());
  const double dd = profile.max_degree;
  long long best_crossing = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != profile.max_degree) continue;
    best_crossing = std::max(best_crossing, neighborhood_split(g, v).crossing);
  }
  SpecializedLowerBounds out;
  out.adjacency = 2.0 * m / n;
  out.laplacian = dd + 1.0 + static_cast<double>(best_crossing) / (dd * (dd + 1.0));
  out.signless_laplacian = 4.0 * m / n;
  return out;
}

// lambda_1(B_alpha) <= (2-3*alpha)*max_degree on [0,1/2], alpha*max_degree on
// (1/2,1], for connected graphs.
inline double upper_lambda1_piecewise(const Graph& g, AlphaValue alpha) {
  if (!is_connected(g)) throw std::invalid_argument("bound needs a connected graph");
  const double a = alpha.get();
  const double dd = degree_profile(g).max_degree;
  return a <= 0.5 ? (2.0 - 3.0 * a) * dd : a * dd;
}

// Upper bound for connected bipartite graphs with parts of sizes a and b;
// equality exactly for K_{a,b}.
inline double f_alpha(int a, int b, AlphaValue alpha) {
  if (a < 1 || b < 1) throw std::invalid_argument("part sizes must be >= 1");
  const double t = alpha.get();
  const double diff = (1.0 - t) * (a - b);
  const double cross = 2.0 * t - 1.0;
  const double disc = std::sqrt(diff * diff + 4.0 * cross * cross * a * b);
  return ((1.0 - t) * (a + b) + disc) / 2.0;
}

// --- exact chromatic number ---------------------------------------------------

struct ColoringCertificate {
  int chi = 0;
  std::vector<std::vector<int>> classes;
};

struct IndependenceCertificate {
  int size = 0;
  std::vector<int> witness;
};

namespace detail {

// Branch and bound over bitmasks: include/exclude a maximum-degree pivot.
inline void independence_search(const std::vector<std::uint32_t>& adj,
                                std::uint32_t candidates, int current,
                                std::uint32_t current_set, int& best,
                                std::uint32_t& best_set) {
  if (candidates == 0) {
    if (current > best) {
      best = current;
      best_set = current_set;
    }
    return;
  }
  if (current + __builtin_popcount(candidates) <= best) return;
  int pivot = -1;
  int pivot_deg = -1;
  for (std::uint32_t rest = candidates; rest;) {
    const int v = __builtin_ctz(rest);
    rest &= rest - 1;
    const int d = __builtin_popcount(adj[v] & candidates);
    if (d > pivot_deg) {
      pivot_deg = d;
      pivot = v;
    }
  }
  const std::uint32_t bit = 1u << pivot;
  independence_search(adj, candidates & ~(adj[pivot] | bit), current + 1,
                      current_set | bit, best, best_set);
  independence_search(adj, candidates & ~bit, current, current_set, best, best_set);
}

inline bool color_search(const Graph& g, const std::vector<int>& order,
                         std::size_t pos, int color_budget, int used,
                         std::vector<int>& color) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  const int tryable = std::min(used + 1, color_budget);
  for (int c = 0; c < tryable; ++c) {
    bool legal = true;
    for (std::size_t t = 0; t < pos && legal; ++t)
      if (color[order[t]] == c && g.adjacent(v, order[t])) legal = false;
    if (!legal) continue;
    color[v] = c;
    if (color_search(g, order, pos + 1, color_budget, std::max(used, c + 1), color))
      return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace detail

inline IndependenceCertificate independence_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20)
    throw BudgetError(BudgetError::Kind::independence,
                      "exact independence number supports n <= 20");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [i, j] : g.edges()) {
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
  }
  int best = 0;
  std::uint32_t best_set = 0;
  detail::independence_search(adj, n == 32 ? ~0u : ((1u << n) - 1u), 0, 0, best, best_set);
  IndependenceCertificate out;
  out.size = best;
  for (int v = 0; v < n; ++v)
    if ((best_set >> v) & 1u) out.witness.push_back(v);
  return out;
}

// Exact: iterates the color budget upward from the exact clique number
// (computed as the independence number of the complement), so the first
// budget admitting a proper coloring is the chromatic number.
inline ColoringCertificate chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw BudgetError(BudgetError::Kind::coloring,
                      "exact chromatic number supports n <= 16");
  std::vector<std::pair<int, int>> co_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) co_edges.emplace_back(i, j);
  const int clique = independence_number(Graph::from_edge_list(n, std::move(co_edges))).size;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y;
  });

  for (int budget = clique; budget <= n; ++budget) {
    std::vector<int> color(n, -1);
    if (detail::color_search(g, order, 0, budget, 0, color)) {
      ColoringCertificate out;
      out.chi = budget;
      out.classes.assign(budget, {});
      for (int v = 0; v < n; ++v) out.classes[color[v]].push_back(v);
      return out;
    }
  }
  throw std::logic_error("coloring search cannot fail at budget n");
}

// lambda_n(B_alpha) <= (2m/n) * (chi*(1-alpha) - alpha) / (chi - 1).
inline double upper_lambda_n_chromatic(const Graph& g, AlphaValue alpha, int chi) {
  if (chi < 2) throw std::invalid_argument("bound needs chromatic number >= 2");
  if (g.edge_count() < 1) throw std::invalid_argument("bound needs at least one edge");
  const double a = alpha.get();
  const double avg = 2.0 * static_cast<double>(g.edge_count()) / g.vertex_count();
  return avg * (chi * (1.0 - a) - a) / (chi - 1.0);
}

// Equality analysis for the bipartite bound lambda_n(B_alpha) <= (2m/n)(2-3*alpha):
// attained exactly at alpha = 2/3, or for regular bipartite graphs with
// alpha >= 1/2.
enum class BipartiteTightness {
  strict,
  equal_alpha_two_thirds,
  equal_regular_bipartite,
};

inline double upper_lambda_n_bipartite(const Graph& g, AlphaValue alpha) {
  if (!is_bipartite(g)) throw std::invalid_argument("bound needs a bipartite graph");
  if (g.edge_count() < 1) throw std::invalid_argument("bound needs at least one edge");
  const double avg = 2.0 * static_cast<double>(g.edge_count()) / g.vertex_count();
  return avg * (2.0 - 3.0 * alpha.get());
}

inline BipartiteTightness bipartite_lambda_n_equality_case(
    const Graph& g, AlphaValue alpha, const Tolerances& tol = default_tolerances()) {
  const double bound = upper_lambda_n_bipartite(g, alpha);
  const double lambda_n = spectrum(g, alpha, tol).lambda_min();
  if (std::abs(lambda_n - bound) > tol.bound_slack) return BipartiteTightness::strict;
  if (std::abs(alpha.get() - 2.0 / 3.0) <= tol.bound_slack)
    return BipartiteTightness::equal_alpha_two_thirds;
  if (is_regular(g) && alpha.get() >= 0.5 - tol.bound_slack)
    return BipartiteTightness::equal_regular_bipartite;
  throw std::logic_error("bipartite bound attained outside both equality branches");
}

// Regular chi-partite graphs whose color classes are balanced and joined
// equitably: regular, chi >= 3, chi divides n, some optimal coloring has all
// classes of size n/chi with every vertex seeing degree/(chi-1) neighbors in
// each other class. Such spectra contain (2m/n)(chi(1-alpha)-alpha)/(chi-1)
// with multiplicity >= chi-1.
namespace detail {

inline bool balanced_equitable_search(const Graph& g, int chi, int class_size,
                                      int cross, std::vector<int>& color,
                                      std::vector<int>& class_count, int v, int used) {
  const int n = g.vertex_count();
  if (v == n) {
    for (int u = 0; u < n; ++u) {
      std::vector<int> seen(chi, 0);
      for (int w = 0; w < n; ++w)
        if (g.adjacent(u, w)) ++seen[color[w]];
      for (int c = 0; c < chi; ++c) {
        if (c == color[u]) continue;
        if (seen[c] != cross) return false;
      }
    }
    return true;
  }
  const int tryable = std::min(used + 1, chi);
  for (int c = 0; c < tryable; ++c) {
    if (class_count[c] == class_size) continue;
    bool legal = true;
    for (int w = 0; w < v && legal; ++w)
      if (color[w] == c && g.adjacent(v, w)) legal = false;
    if (!legal) continue;
    color[v] = c;
    ++class_count[c];
    if (balanced_equitable_search(g, chi, class_size, cross, color, class_count,
                                  v + 1, std::max(used, c + 1)))
      return true;
    --class_count[c];
    color[v] = -1;
  }
  return false;
}

}  // namespace detail

inline bool is_in_lambda_class(const Graph& g) {
  const int n = g.vertex_count();
  if (!is_regular(g)) return false;
  const int chi = chromatic_number(g).chi;
  if (chi < 3) return false;
  if (n % chi != 0) return false;
  const int d = g.degree(0);
  if (d % (chi - 1) != 0) return false;
  std::vector<int> color(n, -1);
  std::vector<int> class_count(chi, 0);
  return detail::balanced_equitable_search(g, chi, n / chi, d / (chi - 1), color,
                                           class_count, 0, 0);
}

// Bounds inherited from the positive-semidefiniteness window: chi >=
// beta0/(1-beta0) for every graph, and (for regular graphs) independence
// number <= n(1-beta0)/beta0.
struct BetaDerivedBounds {
  double chromatic_lower = 0;
  double independence_upper = 0;
  bool independence_applies = false;  // proven for regular graphs only
};

inline BetaDerivedBounds beta_derived_bounds(const Graph& g,
                                             const Tolerances& tol = default_tolerances()) {
  const double beta = beta_o(g, tol).value;
  BetaDerivedBounds out;
  out.chromatic_lower = beta / (1.0 - beta);
  out.independence_upper = g.vertex_count() * (1.0 - beta) / beta;
  out.independence_applies = is_regular(g);
  return out;
}

}  // namespace balpha
