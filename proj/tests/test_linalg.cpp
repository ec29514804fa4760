#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "balpha/balpha.hpp"
#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"

using namespace balpha;

namespace {
const Tolerances tol = default_tolerances();
}

TEST_CASE("symmetric constructor rejects asymmetric buffers", "[linalg]") {
  CHECK_THROWS_AS(SymMatrix(2, {0.0, 1.0, 2.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix(2, {0.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix(0), std::invalid_argument);
  CHECK_NOTHROW(SymMatrix(2, {0.0, 1.0, 1.0, 0.0}));
}

TEST_CASE("path laplacian has the frozen spectrum", "[linalg]") {
  const Spectrum s = sym_eigenvalues(laplacian_matrix(Graph::path(3)), tol);
  REQUIRE(s.values.size() == 3);
  CHECK_THAT(s.values[0], Catch::Matchers::WithinAbs(3.0, 1e-10));
  CHECK_THAT(s.values[1], Catch::Matchers::WithinAbs(1.0, 1e-10));
  CHECK_THAT(s.values[2], Catch::Matchers::WithinAbs(0.0, 1e-10));
}

TEST_CASE("eigenvalues of a diagonal matrix come back sorted", "[linalg]") {
  SymMatrix m(4);
  m.set(0, 0, -1.0);
  m.set(1, 1, 7.0);
  m.set(2, 2, 3.0);
  m.set(3, 3, 3.0);
  const Spectrum s = sym_eigenvalues(m, tol);
  CHECK(s.values == std::vector<double>{7.0, 3.0, 3.0, -1.0});
  CHECK(s.lambda_max() == 7.0);
  CHECK(s.lambda_min() == -1.0);
}

TEST_CASE("cycle adjacency eigenvalues match the cosine closed form", "[linalg]") {
  const int n = 7;
  const Spectrum s = sym_eigenvalues(adjacency_matrix(Graph::cycle(n)), tol);
  std::vector<double> expect;
  for (int k = 0; k < n; ++k)
    expect.push_back(2.0 * std::cos(2.0 * M_PI * k / n));
  std::sort(expect.rbegin(), expect.rend());
  for (int k = 0; k < n; ++k)
    CHECK_THAT(s.values[k], Catch::Matchers::WithinAbs(expect[k], 1e-10));
}

TEST_CASE("determinants of frozen matrices", "[linalg]") {
  CHECK_THAT(determinant(adjacency_matrix(Graph::complete(3)), tol),
             Catch::Matchers::WithinAbs(2.0, 1e-12));
  CHECK_THAT(determinant(adjacency_matrix(Graph::complete(4)), tol),
             Catch::Matchers::WithinAbs(-3.0, 1e-12));
  CHECK(determinant(laplacian_matrix(Graph::petersen()), tol) == 0.0);
  CHECK(determinant(SymMatrix(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}), tol) == 1.0);
}

TEST_CASE("characteristic polynomial of the triangle", "[linalg]") {
  const CharPoly p = char_poly(adjacency_matrix(Graph::complete(3)), tol);
  REQUIRE(p.coefficients.size() == 4);
  CHECK_THAT(p.coefficients[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_THAT(p.coefficients[1], Catch::Matchers::WithinAbs(0.0, 1e-9));
  CHECK_THAT(p.coefficients[2], Catch::Matchers::WithinAbs(-3.0, 1e-9));
  CHECK_THAT(p.coefficients[3], Catch::Matchers::WithinAbs(-2.0, 1e-9));
}

TEST_CASE("characteristic polynomial vanishes on the spectrum", "[linalg]") {
  const SymMatrix m = b_alpha(Graph::petersen(), 0.4);
  const CharPoly p = char_poly(m, tol);
  const Spectrum s = sym_eigenvalues(m, tol);
  for (double lambda : s.values)
    CHECK_THAT(evaluate(p, lambda), Catch::Matchers::WithinAbs(0.0, 1e-6));
}

TEST_CASE("characteristic polynomial enforces its size budget", "[linalg]") {
  try {
    char_poly(SymMatrix(65), tol);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(e.kind == BudgetError::Kind::char_poly);
  }
}

TEST_CASE("irreducibility follows the support graph", "[linalg]") {
  CHECK(is_irreducible(adjacency_matrix(Graph::complete(3))));
  CHECK(is_irreducible(SymMatrix(1)));
  CHECK_FALSE(is_irreducible(b_alpha(Graph::complete(2), 0.5)));
  CHECK_FALSE(is_irreducible(adjacency_matrix(Graph::from_edge_list(4, {{0, 1}, {2, 3}}))));
}
