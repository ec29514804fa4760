// Acceptance gate: runs every advertised guarantee at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if anything fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "balpha/balpha.hpp"
#include "balpha/bounds.hpp"
#include "balpha/corpus.hpp"
#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"
#include "balpha/sachs.hpp"
#include "balpha/verify.hpp"

using namespace balpha;

namespace {

const Tolerances tol = default_tolerances();

struct Outcome {
  bool ok = true;
  double worst = 0.0;
  std::string note;

  void observe(double deviation) { worst = std::max(worst, deviation); }
  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

std::vector<double> grid21() {
  std::vector<double> g;
  for (int k = 0; k <= 20; ++k) g.push_back(k / 20.0);
  return g;
}

// 1. The reference sweep: lambda_1 and its neighborhood lower bound for the
// star with 24 leaves, checked against the published three-decimal values.
Outcome criterion_reference_table() {
  Outcome out;
  const Graph g = Graph::star(24);
  const struct {
    double alpha, lambda1, bound;
  } rows[] = {
      {0.0, 25.0, 25.0},     {0.1, 22.317, 22.317}, {0.2, 19.658, 19.654},
      {0.3, 17.035, 16.997}, {0.4, 14.469, 13.675}, {0.6, 9.703, 1.978},
      {0.7, 7.718, 0.936},   {0.8, 6.232, 0.250},   {0.9, 5.334, 0.361},
      {1.0, 4.899, 1.92},
  };
  for (const auto& row : rows) {
    const double l1 = spectrum(g, row.alpha, tol).lambda_max();
    const double yz = lower_lambda1_yz(g, row.alpha);
    out.observe(std::fabs(l1 - row.lambda1));
    out.observe(std::fabs(yz - row.bound));
  }
  out.require(out.worst <= 5e-3, "a reference row drifted past 5e-3");
  return out;
}

// 2. Closed-form spectra for complete and complete bipartite graphs.
Outcome criterion_closed_forms() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    for (double a : grid21()) {
      const Spectrum direct = spectrum(Graph::complete(n), a, tol);
      const Spectrum closed = spectrum_complete(n, a);
      for (std::size_t i = 0; i < direct.values.size(); ++i)
        out.observe(std::fabs(direct.values[i] - closed.values[i]));
    }
  }
  for (int a_size = 1; a_size <= 5; ++a_size) {
    for (int b_size = a_size; a_size + b_size <= 10; ++b_size) {
      const Graph g = Graph::complete_bipartite(a_size, b_size);
      for (double a : grid21()) {
        const Spectrum direct = spectrum(g, a, tol);
        const Spectrum closed = spectrum_complete_bipartite(a_size, b_size, a);
        for (std::size_t i = 0; i < direct.values.size(); ++i)
          out.observe(std::fabs(direct.values[i] - closed.values[i]));
      }
    }
  }
  out.require(out.worst <= 1e-9, "a closed-form eigenvalue drifted past 1e-9");
  return out;
}

// 3. The psd threshold: bisection agrees with the regular closed form and
// equals 2/3 on complete bipartite graphs.
Outcome criterion_threshold_consistency() {
  Outcome out;
  std::vector<Graph> regular = {Graph::petersen(),
                                Graph::complete_multipartite({2, 2, 2}),
                                Graph::complete_multipartite({3, 3, 3})};
  for (int n = 3; n <= 8; ++n) regular.push_back(Graph::complete(n));
  for (int n = 4; n <= 10; ++n) regular.push_back(Graph::cycle(n));
  for (const Graph& g : regular)
    out.observe(std::fabs(beta_o(g, tol).value - beta_o_regular(g, tol)));

  for (auto [a, b] : {std::pair{1, 1}, {1, 24}, {2, 3}, {3, 3}, {4, 5}})
    out.observe(
        std::fabs(beta_o(Graph::complete_bipartite(a, b), tol).value - 2.0 / 3.0));

  out.require(out.worst <= 1e-8, "a threshold disagreement exceeded 1e-8");
  return out;
}

// 4. Definiteness transitions on a 0.01 grid: positive semidefinite up to the
// threshold, strictly indefinite past it, and strictly definite inside the
// open window (0.01, 0.66).
Outcome criterion_psd_transition() {
  Outcome out;
  long long graphs = 0;
  for (const Graph& g : connected_graphs_up_to(6)) {
    if (g.edge_count() < 1) continue;
    ++graphs;
    const double beta = beta_o(g, tol).value;
    for (int k = 0; k <= 100; ++k) {
      const double a = k / 100.0;
      const double lambda_n = spectrum(g, a, tol).lambda_min();
      if (a <= beta - 1e-8)
        out.require(lambda_n >= -1e-9, "lost semidefiniteness below the threshold");
      else if (a >= beta + 0.01)
        out.require(lambda_n < -1e-9, "stayed semidefinite past the threshold");
      if (k >= 2 && k <= 65)
        out.require(lambda_n > 1e-9, "lost strict definiteness inside the window");
    }
  }
  std::ostringstream note;
  note << graphs << " graphs, 101-point grid";
  if (out.ok) out.note = note.str();
  return out;
}

// 5. The subgraph expansion: determinant and characteristic polynomial agree
// with dense elimination, and the adjacency endpoint is exact in integers.
Outcome criterion_expansion() {
  Outcome out;
  std::vector<Graph> corpus = connected_graphs_up_to(7);
  CorpusRng rng(42);
  for (int i = 0; i < 100; ++i) corpus.push_back(random_connected_graph(8 + i % 3, rng));

  const double alphas[] = {0.1, 0.3, 2.0 / 3.0, 0.9, 1.0};
  for (const Graph& g : corpus) {
    for (double a : alphas) {
      const double direct = determinant(b_alpha(g, a), tol);
      const double expanded = det_b_alpha_sachs(g, a);
      out.require(std::fabs(expanded - direct) <=
                      1e-8 * std::max(1.0, std::fabs(direct)),
                  "expansion determinant drifted at " + encode_graph6(g));
    }
    const CharPoly direct_poly = char_poly(b_alpha(g, 0.3), tol);
    const CharPoly expanded_poly = char_poly_sachs(g, 0.3);
    for (std::size_t i = 0; i < direct_poly.coefficients.size(); ++i)
      out.require(std::fabs(direct_poly.coefficients[i] - expanded_poly.coefficients[i]) <=
                      1e-7 * std::max(1.0, std::fabs(direct_poly.coefficients[i])),
                  "expansion char poly drifted at " + encode_graph6(g));

    out.require(det_b_alpha_sachs(g, 1.0) ==
                    static_cast<double>(det_adjacency_harary(g)),
                "adjacency endpoint is not exact at " + encode_graph6(g));
    out.require(char_poly_sachs(g, 0.0).coefficients.back() == 0.0,
                "laplacian endpoint determinant is not exactly zero");
  }
  if (out.ok) {
    std::ostringstream note;
    note << corpus.size() << " graphs, 5 alphas";
    out.note = note.str();
  }
  return out;
}

// 6. The full property suites (round-trips, numerics, family laws, every
// bound, the expansion) report zero violations over the default corpus.
Outcome criterion_property_suites() {
  Outcome out;
  const std::vector<CheckResult> results = run_verification(VerifyOptions{});
  long long checks = 0;
  for (const CheckResult& r : results) {
    checks += r.checks;
    std::string first = r.notes.empty() ? std::string() : (": " + r.notes.front());
    out.require(r.failures == 0, r.suite + " reported failures" + first);
  }
  if (out.ok) {
    std::ostringstream note;
    note << checks << " checks across " << results.size() << " suites";
    out.note = note.str();
  }
  return out;
}

// 7. Eigenvalue paths move no faster than the perturbation constant.
Outcome criterion_lipschitz() {
  Outcome out;
  CorpusRng rng(1234);
  std::vector<Graph> graphs = {Graph::petersen(), Graph::star(24), Graph::cycle(9),
                               Graph::complete(7), Graph::path(10)};
  graphs.push_back(random_connected_graph(12, rng));
  graphs.push_back(random_connected_graph(12, rng));
  for (const Graph& g : graphs) {
    const double lip = lipschitz_constant(g, tol);
    for (int t = 0; t < 50; ++t) {
      const double a = rng.unit();
      const double b = rng.unit();
      const Spectrum sa = spectrum(g, a, tol);
      const Spectrum sb = spectrum(g, b, tol);
      for (int k = 0; k < g.vertex_count(); ++k) {
        const double excess =
            std::fabs(sa.values[k] - sb.values[k]) - std::fabs(a - b) * lip;
        out.observe(excess);
      }
    }
  }
  out.require(out.worst <= 2e-10, "an eigenvalue moved faster than the constant");
  return out;
}

// 8. Bounds inherited from the psd threshold, tight on complete graphs and on
// the Petersen graph.
Outcome criterion_threshold_bounds() {
  Outcome out;
  std::vector<Graph> corpus = connected_graphs_up_to(7);
  corpus.push_back(Graph::petersen());
  for (const Graph& g : corpus) {
    if (g.edge_count() < 1) continue;
    const BetaDerivedBounds derived = beta_derived_bounds(g, tol);
    const int chi = chromatic_number(g).chi;
    out.require(chi >= derived.chromatic_lower - 1e-7,
                "coloring bound failed at " + encode_graph6(g));
    if (derived.independence_applies)
      out.require(independence_number(g).size <= derived.independence_upper + 1e-7,
                  "independence bound failed at " + encode_graph6(g));
  }
  for (int n = 3; n <= 7; ++n)
    out.observe(std::fabs(beta_derived_bounds(Graph::complete(n), tol).chromatic_lower -
                          static_cast<double>(n)));
  out.observe(std::fabs(beta_derived_bounds(Graph::petersen(), tol).independence_upper -
                        4.0));
  out.require(out.worst <= 1e-6, "a tight case drifted past 1e-6");
  return out;
}

// 9. Balanced equitable multipartite graphs carry the chromatic bound value
// as an eigenvalue with multiplicity at least chi - 1.
Outcome criterion_structured_multiplicity() {
  Outcome out;
  const struct {
    Graph g;
    int chi;
    double c0, c1;
  } rows[] = {
      {Graph::complete_multipartite({3, 3, 3}), 3, 9.0, -12.0},
      {Graph::complete_multipartite({2, 2, 2, 2}), 4, 8.0, -10.0},
  };
  for (const auto& row : rows) {
    out.require(is_in_lambda_class(row.g),
                "class membership failed at " + encode_graph6(row.g));
    for (double a : grid21()) {
      const double value = upper_lambda_n_chromatic(row.g, a, row.chi);
      out.observe(std::fabs(value - (row.c0 + row.c1 * a)));
      int multiplicity = 0;
      for (double v : spectrum(row.g, a, tol).values)
        if (std::fabs(v - value) <= 1e-8 * std::max(1.0, std::fabs(value)))
          ++multiplicity;
      out.require(multiplicity >= row.chi - 1, "multiplicity fell short");
    }
  }
  out.require(out.worst <= 1e-8, "the bound value drifted past 1e-8");
  return out;
}

// 10. Incidence gram identities hold in exact integer arithmetic.
Outcome criterion_incidence() {
  Outcome out;
  long long graphs = 0;
  for (const Graph& g : connected_graphs_up_to(7)) {
    if (g.edge_count() < 1) continue;
    ++graphs;
    const IntMatrix m = incidence_matrix(g);

    const IntMatrix edge_gram = multiply(transpose(m), m);
    const IntMatrix expect_edges =
        add(adjacency_int(line_graph(g)), scale(IntMatrix::identity(g.edge_count()), 2));
    out.require(edge_gram == expect_edges,
                "edge gram identity failed at " + encode_graph6(g));

    IntMatrix degrees(g.vertex_count(), g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degrees.at(v, v) = g.degree(v);
    const IntMatrix vertex_gram = multiply(m, transpose(m));
    out.require(vertex_gram == add(adjacency_int(g), degrees),
                "vertex gram identity failed at " + encode_graph6(g));
  }
  std::ostringstream note;
  note << graphs << " graphs, exact integer comparison";
  if (out.ok) out.note = note.str();
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"reference sweep of lambda_1 and its lower bound (tol 5e-3)",
       criterion_reference_table},
      {"closed-form spectra of complete and complete bipartite graphs (tol 1e-9)",
       criterion_closed_forms},
      {"psd threshold agrees with the regular closed form (tol 1e-8)",
       criterion_threshold_consistency},
      {"definiteness transitions on a 0.01 grid", criterion_psd_transition},
      {"subgraph expansion matches elimination (det 1e-8, coefficients 1e-7)",
       criterion_expansion},
      {"property suites over the default corpus report zero violations",
       criterion_property_suites},
      {"eigenvalue paths respect the perturbation constant (slack 2e-10)",
       criterion_lipschitz},
      {"threshold-derived coloring and independence bounds (tight cases 1e-6)",
       criterion_threshold_bounds},
      {"structured multipartite spectra carry the bound value (tol 1e-8)",
       criterion_structured_multiplicity},
      {"incidence gram identities in exact integers", criterion_incidence},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const Outcome out = c.run();
    if (out.ok) {
      std::printf("PASS criterion %2d: %s", index, c.name);
      if (!out.note.empty())
        std::printf(" [%s]", out.note.c_str());
      else if (out.worst > 0.0)
        std::printf(" [worst deviation %.2e]", out.worst);
      std::printf("\n");
    } else {
      ++failures;
      std::printf("FAIL criterion %2d: %s -- %s\n", index, c.name, out.note.c_str());
    }
  }
  if (failures) {
    std::printf("%d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
