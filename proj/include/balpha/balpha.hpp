#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"

namespace balpha {

// Interpolation parameter for B_alpha = alpha*A + (1-alpha)*L.
// Implicitly constructible from double; validates 0 <= alpha <= 1.
class AlphaValue {
 public:
  AlphaValue(double v) : v_(v) {  // NOLINT: implicit by design
    if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
  }
  double get() const { return v_; }

 private:
  double v_;
};

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.vertex_count());
  for (auto [i, j] : g.edges()) m.set(i, j, 1.0);
  return m;
}

inline SymMatrix degree_matrix(const Graph& g) {
  SymMatrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.set(v, v, g.degree(v));
  return m;
}

inline SymMatrix laplacian_matrix(const Graph& g) {
  SymMatrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.set(v, v, g.degree(v));
  for (auto [i, j] : g.edges()) m.set(i, j, -1.0);
  return m;
}

inline SymMatrix signless_laplacian_matrix(const Graph& g) {
  SymMatrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.set(v, v, g.degree(v));
  for (auto [i, j] : g.edges()) m.set(i, j, 1.0);
  return m;
}

// The three algebraic forms of the same matrix:
//   alpha*A + (1-alpha)*L  ==  (2*alpha-1)*A + (1-alpha)*D  ==  (1-2*alpha)*L + alpha*D.
enum class BAlphaForm { adjacency_laplacian, adjacency_degree, laplacian_degree };

namespace detail {

// c0 + c1*alpha with integer coefficients: the scalar weights alpha, 1-alpha,
// 2*alpha-1, 1-2*alpha are all of this shape, so every B_alpha entry is
// assembled exactly in integer arithmetic and evaluated once. All three forms
// reduce to identical (c0, c1) pairs entrywise, hence to identical doubles.
struct AffineInt {
  long long c0 = 0;
  long long c1 = 0;
};

inline double eval_affine(AffineInt t, double alpha) {
  return static_cast<double>(t.c0) + static_cast<double>(t.c1) * alpha;
}

}  // namespace detail

inline SymMatrix b_alpha_in_form(const Graph& g, AlphaValue alpha, BAlphaForm form) {
  using detail::AffineInt;
  const int n = g.vertex_count();
  const double a = alpha.get();

  auto entry = [&](int i, int j) -> AffineInt {
    const long long adj = g.adjacent(i, j) ? 1 : 0;
    const long long deg = g.degree(i);
    const long long lap = (i == j) ? deg : -adj;
    const long long dia = (i == j) ? deg : 0;
    AffineInt t;
    switch (form) {
      case BAlphaForm::adjacency_laplacian:  // alpha*A + (1-alpha)*L
        t.c0 = lap;
        t.c1 = adj - lap;
        break;
      case BAlphaForm::adjacency_degree:  // (2*alpha-1)*A + (1-alpha)*D
        t.c0 = -adj + dia;
        t.c1 = 2 * adj - dia;
        break;
      case BAlphaForm::laplacian_degree:  // (1-2*alpha)*L + alpha*D
        t.c0 = lap;
        t.c1 = -2 * lap + dia;
        break;
    }
    return t;
  };

  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, detail::eval_affine(entry(i, i), a));
    for (int j = i + 1; j < n; ++j) {
      double v = detail::eval_affine(entry(i, j), a);
      if (v != 0.0) m.set(i, j, v);
    }
  }
  return m;
}

inline SymMatrix b_alpha(const Graph& g, AlphaValue alpha) {
  return b_alpha_in_form(g, alpha, BAlphaForm::adjacency_laplacian);
}

inline Spectrum spectrum(const Graph& g, AlphaValue alpha,
                         const Tolerances& tol = default_tolerances()) {
  return sym_eigenvalues(b_alpha(g, alpha), tol);
}

// K_n: eigenvalue (1-alpha)*n - alpha with multiplicity n-1, plus (n-1)*alpha.
inline Spectrum spectrum_complete(int n, AlphaValue alpha) {
  if (n < 2) throw std::invalid_argument("closed form needs n >= 2");
  const double a = alpha.get();
  Spectrum s;
  s.values.assign(static_cast<std::size_t>(n), (1.0 - a) * n - a);
  s.values.back() = (n - 1) * a;
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

// K_{a,b}: (1-alpha)*a with multiplicity b-1, (1-alpha)*b with multiplicity
// a-1, and the two roots ((1-alpha)(a+b) +- sqrt((1-alpha)^2(a-b)^2 +
// 4(2*alpha-1)^2 ab))/2. The same expressions extend continuously to alpha=1,
// where they reduce to the adjacency spectrum {+-sqrt(ab), 0, ..., 0}.
inline Spectrum spectrum_complete_bipartite(int a, int b, AlphaValue alpha) {
  if (a < 1 || b < 1) throw std::invalid_argument("closed form needs a, b >= 1");
  const double t = alpha.get();
  Spectrum s;
  for (int k = 0; k < b - 1; ++k) s.values.push_back((1.0 - t) * a);
  for (int k = 0; k < a - 1; ++k) s.values.push_back((1.0 - t) * b);
  const double diff = (1.0 - t) * (a - b);
  const double cross = 2.0 * t - 1.0;
  const double disc = std::sqrt(diff * diff + 4.0 * cross * cross * a * b);
  s.values.push_back(((1.0 - t) * (a + b) + disc) / 2.0);
  s.values.push_back(((1.0 - t) * (a + b) - disc) / 2.0);
  std::sort(s.values.begin(), s.values.end(), std::greater<double>());
  return s;
}

// Largest alpha in [2/3, 1) below which B_alpha stays positive semidefinite.
struct BetaO {
  double value = 0;
  double bracket_width = 0;
};

namespace detail {

inline void require_no_isolated_vertex(const Graph& g, const char* what) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw IsolatedVertexError(std::string(what) + " requires minimum degree >= 1");
}

}  // namespace detail

// Bisection on [2/3, 1]: the lower end is always positive semidefinite, the
// upper end never is (for m >= 1), and a single sign change lies between.
inline BetaO beta_o(const Graph& g, const Tolerances& tol = default_tolerances()) {
  detail::require_no_isolated_vertex(g, "beta_o");
  const int n = g.vertex_count();
  const int max_deg = degree_profile(g).max_degree;
  const double slack = tol.beta_sign_rel * n * max_deg;

  auto nonnegative = [&](double a) {
    return spectrum(g, a, tol).lambda_min() >= -slack;
  };

  double lo = 2.0 / 3.0;
  double hi = 1.0;
  while (hi - lo >= tol.beta_bracket) {
    const double mid = (lo + hi) / 2.0;
    if (nonnegative(mid))
      lo = mid;
    else
      hi = mid;
  }
  return BetaO{(lo + hi) / 2.0, hi - lo};
}

// Closed form for r-regular graphs: (r - rho_n) / (r - 2*rho_n) where rho_n is
// the smallest adjacency eigenvalue.
inline double beta_o_regular(const Graph& g,
                             const Tolerances& tol = default_tolerances()) {
  if (!is_regular(g)) throw std::invalid_argument("closed form needs a regular graph");
  detail::require_no_isolated_vertex(g, "beta_o_regular");
  const double r = g.degree(0);
  const double rho_n = sym_eigenvalues(adjacency_matrix(g), tol).lambda_min();
  return (r - rho_n) / (r - 2.0 * rho_n);
}

enum class DefinitenessClass {
  positive_definite,
  positive_semidefinite_singular,
  indefinite,
};

inline DefinitenessClass classify_definiteness(const Graph& g, AlphaValue alpha,
                                               const Tolerances& tol = default_tolerances()) {
  const Spectrum s = spectrum(g, alpha, tol);
  if (s.lambda_min() > tol.psd_abs) return DefinitenessClass::positive_definite;
  if (s.lambda_min() >= -tol.psd_abs)
    return DefinitenessClass::positive_semidefinite_singular;
  if (!(s.lambda_max() > 0))
    throw std::logic_error("indefinite B_alpha must have a positive eigenvalue");
  return DefinitenessClass::indefinite;
}

// One-parameter eigenvalue perturbation constant: |lambda_k(B_a) -
// lambda_k(B_b)| <= |a - b| * (2*mu_1 + max_degree), mu_1 the largest
// Laplacian eigenvalue.
inline double lipschitz_constant(const Graph& g,
                                 const Tolerances& tol = default_tolerances()) {
  const double mu1 = sym_eigenvalues(laplacian_matrix(g), tol).lambda_max();
  return 2.0 * mu1 + degree_profile(g).max_degree;
}

}  // namespace balpha
