#pragma once

#include <cstdint>
#include <vector>

#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"

namespace balpha {

// A modified elementary subgraph: every component is a single vertex, a
// single edge, or a cycle. Its weight in the determinant and coefficient
// expansions depends only on this signature.
struct MesSignature {
  int vertex_count = 0;                    // vertices spanned by the subgraph
  int component_count = 0;                 // components of any kind
  int cycle_count = 0;                     // cycle components
  int edge_component_count = 0;            // single-edge components
  int isolated_count = 0;                  // single-vertex components
  long long isolated_degree_product = 1;   // product of full-graph degrees over those vertices
};

namespace detail {

// Exact integer polynomial in alpha, ascending powers. 128-bit coefficients
// leave ample headroom for every n <= 12 expansion.
struct AlphaPoly {
  std::vector<__int128> c;

  static AlphaPoly constant(__int128 v) { return AlphaPoly{{v}}; }

  // Multiply by (c0 + c1*alpha).
  void mul_affine(long long c0, long long c1) {
    std::vector<__int128> out(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      out[k] += c[k] * c0;
      out[k + 1] += c[k] * c1;
    }
    c = std::move(out);
  }

  void add(const AlphaPoly& other) {
    if (other.c.size() > c.size()) c.resize(other.c.size(), 0);
    for (std::size_t k = 0; k < other.c.size(); ++k) c[k] += other.c[k];
  }

  double evaluate(double alpha) const {
    long double acc = 0.0L;
    for (std::size_t k = c.size(); k-- > 0;)
      acc = acc * alpha + static_cast<long double>(c[k]);
    return static_cast<double>(acc);
  }

  // Exact sum of coefficients (the value at alpha = 1).
  __int128 value_at_one() const {
    __int128 s = 0;
    for (__int128 v : c) s += v;
    return s;
  }

  __int128 value_at_zero() const { return c.empty() ? 0 : c[0]; }
};

// Weight of one signature as an exact polynomial:
//   (-1)^(k-p) * 2^c * degree_product * (1-alpha)^c2 * (2*alpha-1)^(k-c2).
inline AlphaPoly signature_weight(const MesSignature& s) {
  __int128 lead = s.isolated_degree_product;
  for (int t = 0; t < s.cycle_count; ++t) lead *= 2;
  if ((s.vertex_count - s.component_count) % 2 != 0) lead = -lead;
  AlphaPoly poly = AlphaPoly::constant(lead);
  for (int t = 0; t < s.isolated_count; ++t) poly.mul_affine(1, -1);
  for (int t = 0; t < s.vertex_count - s.isolated_count; ++t) poly.mul_affine(-1, 2);
  return poly;
}

// Recursive enumeration, duplicate-free by construction: the lowest-index
// undecided vertex is skipped, isolated, matched to a higher neighbor, or made
// the minimum of a new cycle; cycles close with second vertex < last vertex so
// each orientation is produced once.
template <typename Visitor>
class MesEnumerator {
 public:
  MesEnumerator(const Graph& g, int want_k, Visitor& visit)
      : g_(g), n_(g.vertex_count()), want_k_(want_k), visit_(visit), used_(n_, 0) {}

  void run() { descend(0); }

 private:
  void descend(int v) {
    while (v < n_ && used_[v]) ++v;
    if (v == n_) {
      if (want_k_ < 0 || sig_.vertex_count == want_k_) visit_(sig_);
      return;
    }
    // Undecided vertices can no longer reach the requested size.
    if (want_k_ >= 0 && sig_.vertex_count + (n_ - v) < want_k_) return;

    // Not selected.
    if (want_k_ < 0 || sig_.vertex_count + (n_ - v - 1) >= want_k_) {
      used_[v] = 1;
      descend(v + 1);
      used_[v] = 0;
    }

    if (want_k_ >= 0 && sig_.vertex_count >= want_k_) return;

    // Isolated vertex component.
    used_[v] = 1;
    sig_.vertex_count += 1;
    sig_.component_count += 1;
    sig_.isolated_count += 1;
    const long long saved_product = sig_.isolated_degree_product;
    sig_.isolated_degree_product *= g_.degree(v);
    descend(v + 1);
    sig_.isolated_degree_product = saved_product;
    sig_.isolated_count -= 1;
    sig_.component_count -= 1;
    sig_.vertex_count -= 1;
    used_[v] = 0;

    // Single-edge component to a higher unused neighbor.
    if (want_k_ < 0 || sig_.vertex_count + 2 <= want_k_) {
      for (int w = v + 1; w < n_; ++w) {
        if (used_[w] || !g_.adjacent(v, w)) continue;
        used_[v] = 1;
        used_[w] = 1;
        sig_.vertex_count += 2;
        sig_.component_count += 1;
        sig_.edge_component_count += 1;
        descend(v + 1);
        sig_.edge_component_count -= 1;
        sig_.component_count -= 1;
        sig_.vertex_count -= 2;
        used_[v] = 0;
        used_[w] = 0;
      }
    }

    // Cycle component with v as its minimum vertex.
    if (want_k_ < 0 || sig_.vertex_count + 3 <= want_k_) {
      used_[v] = 1;
      std::vector<int> saved_path = std::move(path_);
      path_.clear();
      path_.push_back(v);
      extend_cycle(v);
      path_ = std::move(saved_path);
      used_[v] = 0;
    }
  }

  void extend_cycle(int v) {
    const int cur = path_.back();
    for (int w = v + 1; w < n_; ++w) {
      if (used_[w] || !g_.adjacent(cur, w)) continue;
      path_.push_back(w);
      used_[w] = 1;
      if (path_.size() >= 3 && g_.adjacent(w, v) && path_[1] < w) {
        const int len = static_cast<int>(path_.size());
        sig_.vertex_count += len;
        sig_.component_count += 1;
        sig_.cycle_count += 1;
        std::vector<int> saved_path = path_;
        descend(v + 1);
        path_ = std::move(saved_path);
        sig_.cycle_count -= 1;
        sig_.component_count -= 1;
        sig_.vertex_count -= len;
      }
      // Grow the open path only while the closed cycle could still fit.
      if (want_k_ < 0 ||
          sig_.vertex_count + static_cast<int>(path_.size()) + 1 <= want_k_)
        extend_cycle(v);
      used_[w] = 0;
      path_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  int want_k_;
  Visitor& visit_;
  std::vector<char> used_;
  std::vector<int> path_;
  MesSignature sig_;
};

inline void require_expansion_budget(const Graph& g) {
  if (g.vertex_count() > 12)
    throw BudgetError(BudgetError::Kind::subgraph_expansion,
                      "subgraph expansion supports n <= 12");
}

}  // namespace detail

// All modified elementary subgraphs spanning exactly k vertices; the visitor
// receives each signature once. k = -1 visits every size.
template <typename Visitor>
void enumerate_modified_elementary(const Graph& g, int k, Visitor&& visit) {
  detail::require_expansion_budget(g);
  if (k < -1 || k > g.vertex_count())
    throw std::invalid_argument("subgraph size out of range");
  detail::MesEnumerator<Visitor> e(g, k, visit);
  e.run();
}

inline std::vector<MesSignature> modified_elementary_subgraphs(const Graph& g, int k) {
  std::vector<MesSignature> out;
  enumerate_modified_elementary(g, k, [&](const MesSignature& s) { out.push_back(s); });
  return out;
}

// det B_alpha = sum over spanning modified elementary subgraphs of
// (-1)^(n-p) 2^c (1-alpha)^c2 (2*alpha-1)^(n-c2) * prod of isolated-vertex
// degrees. Defined for alpha in (0, 1]; at alpha = 0 the determinant is the
// Laplacian's, which vanishes identically.
inline double det_b_alpha_sachs(const Graph& g, double alpha) {
  detail::require_expansion_budget(g);
  if (alpha == 0.0)
    throw std::domain_error(
        "expansion needs alpha > 0: B_0 is the Laplacian and det = 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in (0, 1]");
  detail::AlphaPoly total = detail::AlphaPoly::constant(0);
  enumerate_modified_elementary(g, g.vertex_count(), [&](const MesSignature& s) {
    total.add(detail::signature_weight(s));
  });
  if (alpha == 1.0) return static_cast<double>(total.value_at_one());
  return total.evaluate(alpha);
}

// Characteristic coefficients via the same expansion: a_k = (-1)^k * sum of
// weights over k-vertex subgraphs (exponent k - c2 on the cross term).
inline CharPoly char_poly_sachs(const Graph& g, double alpha) {
  detail::require_expansion_budget(g);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
  const int n = g.vertex_count();
  std::vector<detail::AlphaPoly> by_size(static_cast<std::size_t>(n) + 1,
                                         detail::AlphaPoly::constant(0));
  enumerate_modified_elementary(g, -1, [&](const MesSignature& s) {
    by_size[s.vertex_count].add(detail::signature_weight(s));
  });
  CharPoly out;
  out.coefficients.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    double v;
    if (alpha == 1.0)
      v = static_cast<double>(by_size[k].value_at_one());
    else if (alpha == 0.0)
      v = static_cast<double>(by_size[k].value_at_zero());
    else
      v = by_size[k].evaluate(alpha);
    out.coefficients[k] = (k % 2 == 0) ? v : -v;
  }
  return out;
}

// Adjacency determinant in exact integer arithmetic: spanning subgraphs whose
// components are edges and cycles only, det A = sum (-1)^(n-p) 2^c.
inline long long det_adjacency_harary(const Graph& g) {
  detail::require_expansion_budget(g);
  long long total = 0;
  enumerate_modified_elementary(g, g.vertex_count(), [&](const MesSignature& s) {
    if (s.isolated_count != 0) return;
    long long term = 1;
    for (int t = 0; t < s.cycle_count; ++t) term *= 2;
    if ((g.vertex_count() - s.component_count) % 2 != 0) term = -term;
    total += term;
  });
  return total;
}

}  // namespace balpha
