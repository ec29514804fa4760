#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "balpha/balpha.hpp"
#include "balpha/bounds.hpp"
#include "balpha/corpus.hpp"
#include "balpha/errors.hpp"
#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"
#include "balpha/sachs.hpp"

namespace balpha {

struct CheckResult {
  std::string suite;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  int exhaustive_max_n = 7;
  int random_graphs = 200;
  int random_max_n = 12;
  std::uint64_t seed = 42;
  int grid_denominator = 20;
  bool inject_fault = false;
  Tolerances tol = default_tolerances();
};

namespace detail {

inline void record_failure(CheckResult& r, const Graph& g, double alpha,
                           const std::string& what) {
  r.failures += 1;
  if (r.notes.size() >= 5) return;
  std::ostringstream os;
  os << "g6=" << encode_graph6(g) << " alpha=" << alpha << " " << what;
  r.notes.push_back(os.str());
}

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool same_entries(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order()) return false;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline std::vector<Graph> verification_corpus(const VerifyOptions& opts) {
  std::vector<Graph> corpus;
  if (opts.exhaustive_max_n >= 1)
    corpus = connected_graphs_up_to(std::min(opts.exhaustive_max_n, 7));
  CorpusRng rng(opts.seed);
  for (int i = 0; i < opts.random_graphs; ++i) {
    const int span = std::max(1, opts.random_max_n - 2);
    const int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    corpus.push_back(random_connected_graph(n, rng));
  }
  return corpus;
}

inline std::vector<double> alpha_grid(int denominator) {
  std::vector<double> grid;
  for (int k = 0; k <= denominator; ++k)
    grid.push_back(static_cast<double>(k) / static_cast<double>(denominator));
  return grid;
}

inline CheckResult check_graph_core(const std::vector<Graph>& corpus) {
  CheckResult r{"graph-core", 0, 0, {}};
  for (const Graph& g : corpus) {
    r.checks += 1;
    const Graph back = parse_graph6(encode_graph6(g));
    if (back.vertex_count() != g.vertex_count() || back.edges() != g.edges()) {
      record_failure(r, g, 0.0, "graph6 round-trip changed the graph");
      continue;
    }

    r.checks += 1;
    const Graph back2 = parse_edge_list_text(encode_edge_list_text(g));
    if (back2.vertex_count() != g.vertex_count() || back2.edges() != g.edges()) {
      record_failure(r, g, 0.0, "edge-list round-trip changed the graph");
      continue;
    }

    r.checks += 1;
    long long degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    if (degree_sum != 2LL * g.edge_count()) {
      record_failure(r, g, 0.0, "degree sum is not twice the edge count");
      continue;
    }

    if (g.edge_count() >= 1) {
      r.checks += 1;
      const IntMatrix m = incidence_matrix(g);
      const IntMatrix gram = multiply(transpose(m), m);
      const Graph lg = line_graph(g);
      const IntMatrix expect =
          add(adjacency_int(lg), scale(IntMatrix::identity(g.edge_count()), 2));
      if (!(gram == expect))
        record_failure(r, g, 0.0, "incidence gram != line-graph adjacency + 2I");
    }
  }
  return r;
}

inline CheckResult check_linear_algebra(const std::vector<Graph>& corpus,
                                        const Tolerances& tol) {
  CheckResult r{"linear-algebra", 0, 0, {}};
  const double samples[] = {0.3, 0.7};
  for (const Graph& g : corpus) {
    for (double a : samples) {
      const SymMatrix m = b_alpha(g, a);
      const Spectrum s = sym_eigenvalues(m, tol);

      r.checks += 1;
      double eig_sum = 0.0;
      for (double v : s.values) eig_sum += v;
      if (!close(eig_sum, m.trace(), 1e-9 * std::max(1.0, m.frobenius())))
        record_failure(r, g, a, "eigenvalue sum drifted from the trace");

      r.checks += 1;
      double eig_product = 1.0;
      for (double v : s.values) eig_product *= v;
      const double det = determinant(m, tol);
      if (!close(eig_product, det, 1e-8 * std::max(1.0, std::fabs(det))))
        record_failure(r, g, a, "eigenvalue product drifted from the determinant");

      r.checks += 1;
      bool ordered = true;
      for (std::size_t i = 1; i < s.values.size(); ++i)
        if (s.values[i - 1] < s.values[i]) ordered = false;
      if (!ordered) record_failure(r, g, a, "spectrum is not sorted descending");
    }
  }
  return r;
}

inline CheckResult check_family(const std::vector<Graph>& corpus,
                                const std::vector<double>& grid,
                                const VerifyOptions& opts) {
  CheckResult r{"matrix-family", 0, 0, {}};
  const Tolerances& tol = opts.tol;
  for (const Graph& g : corpus) {
    const int n = g.vertex_count();

    for (double a : grid) {
      r.checks += 1;
      const SymMatrix al = b_alpha_in_form(g, a, BAlphaForm::adjacency_laplacian);
      const SymMatrix ad = b_alpha_in_form(g, a, BAlphaForm::adjacency_degree);
      const SymMatrix ld = b_alpha_in_form(g, a, BAlphaForm::laplacian_degree);
      if (!same_entries(al, ad) || !same_entries(al, ld)) {
        record_failure(r, g, a, "the three assembly forms disagree entrywise");
        continue;
      }
    }

    r.checks += 1;
    if (!same_entries(b_alpha(g, 0.0), laplacian_matrix(g)) ||
        !same_entries(b_alpha(g, 1.0), adjacency_matrix(g))) {
      record_failure(r, g, 0.0, "endpoint specialization broke");
    } else {
      const SymMatrix half = b_alpha(g, 0.5);
      const SymMatrix deg = degree_matrix(g);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (2.0 * half(i, j) != deg(i, j)) ok = false;
      const SymMatrix two_thirds = b_alpha(g, 2.0 / 3.0);
      const SymMatrix q = signless_laplacian_matrix(g);
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (!close(3.0 * two_thirds(i, j), q(i, j), 1e-9)) ok = false;
      if (!ok) record_failure(r, g, 0.5, "midpoint or two-thirds specialization broke");
    }

    const bool complete = n >= 2 && g.edge_count() == 1LL * n * (n - 1) / 2;
    const auto sides = bipartition(g);
    int pa = 0, pb = 0;
    if (sides)
      for (int side : *sides) (side == 0 ? pa : pb) += 1;
    for (double a : grid) {
      std::optional<std::vector<double>> closed;
      if (complete) {
        closed = spectrum_complete(n, a).values;
      } else if (sides && pa >= 1 && pb >= 1 && g.edge_count() == 1LL * pa * pb) {
        closed = spectrum_complete_bipartite(pa, pb, a).values;
      }
      if (!closed) continue;
      r.checks += 1;
      const Spectrum s = spectrum(g, a, tol);
      bool ok = closed->size() == s.values.size();
      for (std::size_t i = 0; ok && i < s.values.size(); ++i)
        if (!close(s.values[i], (*closed)[i], 1e-9 * std::max(1, n))) ok = false;
      if (!ok) record_failure(r, g, a, "closed-form spectrum mismatch");
    }

    if (g.edge_count() >= 1 && degree_profile(g).min_degree >= 1) {
      r.checks += 1;
      const BetaO beta = beta_o(g, tol);
      if (beta.value < 2.0 / 3.0 - tol.beta_bracket) {
        record_failure(r, g, beta.value, "psd threshold fell below two thirds");
      } else {
        bool ok = true;
        const double inside = std::max(0.0, beta.value - 0.01);
        if (spectrum(g, inside, tol).lambda_min() < -tol.psd_abs) ok = false;
        const double outside = beta.value + 0.02;
        if (outside <= 1.0 && spectrum(g, outside, tol).lambda_min() >= -1e-9)
          ok = false;
        if (classify_definiteness(g, beta.value / 2.0, tol) ==
            DefinitenessClass::indefinite)
          ok = false;
        if (is_regular(g)) {
          const double closed_beta = beta_o_regular(g, tol);
          if (!close(beta.value, closed_beta, 1e-8)) ok = false;
        }
        if (!ok) record_failure(r, g, beta.value, "psd threshold inconsistency");
      }
    }

    if (g.edge_count() >= 1) {
      CorpusRng pair_rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
      const double lip = lipschitz_constant(g, tol);
      for (int t = 0; t < 3; ++t) {
        const double a = pair_rng.unit();
        const double b = pair_rng.unit();
        r.checks += 1;
        const Spectrum sa = spectrum(g, a, tol);
        const Spectrum sb = spectrum(g, b, tol);
        bool ok = true;
        for (int k = 0; k < n; ++k)
          if (std::fabs(sa.values[k] - sb.values[k]) >
              std::fabs(a - b) * lip + 2e-10)
            ok = false;
        if (!ok) record_failure(r, g, a, "eigenvalue moved faster than the bound");
      }
    }
  }
  return r;
}

inline CheckResult check_bounds(const std::vector<Graph>& corpus,
                                const std::vector<double>& grid,
                                const VerifyOptions& opts) {
  CheckResult r{"bounds", 0, 0, {}};
  const Tolerances& tol = opts.tol;
  const double slack = tol.bound_slack;
  const double fault = opts.inject_fault ? 1e9 : 0.0;

  for (const Graph& g : corpus) {
    if (g.edge_count() < 1) continue;
    const long long m = g.edge_count();
    const auto sides = bipartition(g);
    int pa = 0, pb = 0;
    if (sides)
      for (int side : *sides) (side == 0 ? pa : pb) += 1;
    const int chi = chromatic_number(g).chi;
    const int independence = independence_number(g).size;
    const bool lambda_class = is_in_lambda_class(g);
    const BetaO beta = beta_o(g, tol);

    for (double a : grid) {
      const Spectrum s = spectrum(g, a, tol);
      const double l1 = s.lambda_max();
      const double ln = s.lambda_min();

      r.checks += 1;
      if (lower_lambda1_alpha_delta(g, a) > l1 + slack)
        record_failure(r, g, a, "min-degree lower bound exceeded lambda_1");

      if (a != 0.5) {
        r.checks += 1;
        const double yz = lower_lambda1_yz(g, a);
        if (yz + fault > l1 + slack)
          record_failure(r, g, a, "neighborhood lower bound exceeded lambda_1");
      }

      r.checks += 1;
      if (l1 > upper_lambda1_piecewise(g, a) + slack)
        record_failure(r, g, a, "piecewise degree upper bound violated");

      if (sides) {
        r.checks += 1;
        const double f = f_alpha(pa, pb, a);
        if (l1 > f + slack) {
          record_failure(r, g, a, "bipartite upper bound violated");
        } else if (a != 0.5 && close(l1, f, slack) && m != 1LL * pa * pb) {
          record_failure(r, g, a, "bipartite bound tight on a non-complete graph");
        }
      }

      r.checks += 1;
      if (ln > upper_lambda_n_chromatic(g, a, chi) + slack)
        record_failure(r, g, a, "chromatic lambda_n upper bound violated");

      if (sides) {
        r.checks += 1;
        const double ub = upper_lambda_n_bipartite(g, a);
        if (ln > ub + slack) {
          record_failure(r, g, a, "bipartite lambda_n upper bound violated");
        } else {
          try {
            bipartite_lambda_n_equality_case(g, a, tol);
          } catch (const std::logic_error&) {
            record_failure(r, g, a, "bipartite tightness case analysis failed");
          }
        }
      }

      if (lambda_class) {
        r.checks += 1;
        const double value = upper_lambda_n_chromatic(g, a, chi);
        int multiplicity = 0;
        for (double v : s.values)
          if (close(v, value, 1e-8 * std::max(1.0, std::fabs(value)))) ++multiplicity;
        if (multiplicity < chi - 1)
          record_failure(r, g, a, "structured-class eigenvalue multiplicity too low");
      }
    }

    r.checks += 1;
    const BetaDerivedBounds derived = beta_derived_bounds(g, tol);
    if (static_cast<double>(chi) < derived.chromatic_lower - 1e-7)
      record_failure(r, g, beta.value, "chromatic number fell below psd-derived bound");
    if (derived.independence_applies &&
        static_cast<double>(independence) > derived.independence_upper + 1e-7)
      record_failure(r, g, beta.value, "independence number exceeded psd-derived bound");
  }
  return r;
}

inline CheckResult check_sachs(const std::vector<Graph>& corpus,
                               const Tolerances& tol) {
  CheckResult r{"subgraph-expansion", 0, 0, {}};
  const double samples[] = {0.3, 2.0 / 3.0, 0.9};
  for (const Graph& g : corpus) {
    if (g.vertex_count() > 10) continue;

    for (double a : samples) {
      r.checks += 1;
      const double direct = determinant(b_alpha(g, a), tol);
      const double expanded = det_b_alpha_sachs(g, a);
      if (!close(expanded, direct, 1e-8 * std::max(1.0, std::fabs(direct))))
        record_failure(r, g, a, "expansion determinant disagreed with elimination");
    }

    r.checks += 1;
    const CharPoly direct_poly = char_poly(b_alpha(g, 0.3), tol);
    const CharPoly expanded_poly = char_poly_sachs(g, 0.3);
    bool ok = direct_poly.coefficients.size() == expanded_poly.coefficients.size();
    for (std::size_t i = 0; ok && i < direct_poly.coefficients.size(); ++i)
      if (!close(direct_poly.coefficients[i], expanded_poly.coefficients[i],
                 1e-7 * std::max(1.0, std::fabs(direct_poly.coefficients[i]))))
        ok = false;
    if (!ok) record_failure(r, g, 0.3, "expansion char poly disagreed");

    r.checks += 1;
    if (degree_profile(g).min_degree >= 1) {
      const long long harary = det_adjacency_harary(g);
      if (det_b_alpha_sachs(g, 1.0) != static_cast<double>(harary))
        record_failure(r, g, 1.0, "adjacency specialization is not exact");
    } else {
      if (det_b_alpha_sachs(g, 1.0) != 0.0)
        record_failure(r, g, 1.0, "isolated vertex should zero the determinant");
    }

    r.checks += 1;
    const CharPoly at_zero = char_poly_sachs(g, 0.0);
    if (at_zero.coefficients.back() != 0.0)
      record_failure(r, g, 0.0, "laplacian endpoint determinant is not exactly zero");
  }
  return r;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const std::vector<Graph> corpus = detail::verification_corpus(opts);
  const std::vector<double> grid = detail::alpha_grid(opts.grid_denominator);

  std::vector<CheckResult> results;
  results.push_back(detail::check_graph_core(corpus));
  results.push_back(detail::check_linear_algebra(corpus, opts.tol));
  results.push_back(detail::check_family(corpus, grid, opts));
  results.push_back(detail::check_bounds(corpus, grid, opts));
  results.push_back(detail::check_sachs(corpus, opts.tol));
  return results;
}

}  // namespace balpha
