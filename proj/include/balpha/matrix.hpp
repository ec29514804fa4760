#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "balpha/errors.hpp"

namespace balpha {

// Central numeric tolerances. *_rel values are scaled by a matrix norm at the
// point of use; *_abs values apply directly.
struct Tolerances {
  double eig_rel = 1e-10;         // eigenvalue accuracy target vs max(1, inf-norm)
  double jacobi_off_rel = 1e-13;  // sweep convergence: off-diagonal vs full Frobenius norm
  int jacobi_max_sweeps = 100;
  double det_pivot_rel = 1e-12;  // pivot below this (vs inf-norm) marks the matrix singular
  double det_zero_rel = 1e-9;    // |det| below this (vs max(1, inf-norm)) counts as zero
  double poly_rel = 1e-7;        // characteristic-coefficient comparison scale
  double psd_abs = 1e-9;         // definiteness cut on the smallest eigenvalue
  double beta_bracket = 1e-10;   // bisection stops below this bracket width
  double beta_sign_rel = 1e-11;  // lambda_min >= -beta_sign_rel*n*max_degree counts as >= 0
  double bound_slack = 1e-7;     // inequality checks allow this much numeric slack
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

// Dense symmetric matrix; symmetry is exact by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(checked_size(n), 0.0) {}

  SymMatrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != checked_size(n)) throw std::invalid_argument("entry buffer size mismatch");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i))
          throw std::invalid_argument("matrix is not symmetric");
  }

  int order() const { return n_; }

  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  // Writes both mirror entries.
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }

  double trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double norm_inf() const {
    double best = 0;
    for (int i = 0; i < n_; ++i) {
      double row = 0;
      for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
      best = std::max(best, row);
    }
    return best;
  }

  double frobenius() const {
    double s = 0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

 private:
  static std::size_t checked_size(int n) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
    return static_cast<std::size_t>(n) * n;
  }

  int n_;
  std::vector<double> a_;
};

// Eigenvalues in nonincreasing order.
struct Spectrum {
  std::vector<double> values;
  double lambda_max() const { return values.front(); }
  double lambda_min() const { return values.back(); }
};

// Cyclic Jacobi rotations on a dense copy. Sweeps until the off-diagonal
// Frobenius norm drops below jacobi_off_rel times the full Frobenius norm;
// throws if the sweep cap is reached first.
inline Spectrum sym_eigenvalues(const SymMatrix& m,
                                const Tolerances& tol = default_tolerances()) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  const double threshold = tol.jacobi_off_rel * m.frobenius();
  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
    if (off_norm() <= threshold) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = arp - s * (arq + tau * arp);
          at(p, r) = at(r, p);
          at(r, q) = arq + s * (arp - tau * arq);
          at(q, r) = at(r, q);
        }
      }
  }
  if (!converged && off_norm() > threshold)
    throw std::runtime_error("eigenvalue iteration did not converge");

  Spectrum out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = at(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<double>());
  return out;
}

// Gaussian elimination with partial pivoting. A pivot column whose largest
// candidate falls below det_pivot_rel * inf-norm makes the result exactly 0,
// so structurally singular inputs (e.g. any Laplacian) return 0.0.
inline double determinant(const SymMatrix& m,
                          const Tolerances& tol = default_tolerances()) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  const double floor = tol.det_pivot_rel * std::max(1.0, m.norm_inf());
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int r = k + 1; r < n; ++r)
      if (std::abs(at(r, k)) > std::abs(at(pivot, k))) pivot = r;
    if (std::abs(at(pivot, k)) <= floor) return 0.0;
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
      det = -det;
    }
    det *= at(k, k);
    for (int r = k + 1; r < n; ++r) {
      const double f = at(r, k) / at(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) at(r, j) -= f * at(k, j);
    }
  }
  return det;
}

// Coefficients of det(lambda*I - M): coefficients[k] multiplies lambda^(n-k),
// coefficients[0] == 1.
struct CharPoly {
  std::vector<double> coefficients;
};

// Power-sum (trace of M^k) recurrence through Newton's identities, accumulated
// in extended precision.
inline CharPoly char_poly(const SymMatrix& m,
                          const Tolerances& tol = default_tolerances()) {
  (void)tol;
  const int n = m.order();
  if (n > 64)
    throw BudgetError(BudgetError::Kind::char_poly,
                      "characteristic polynomial supports n <= 64");

  std::vector<long double> power(static_cast<std::size_t>(n) + 1, 0.0L);
  std::vector<long double> cur(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cur[static_cast<std::size_t>(i) * n + j] = m(i, j);
  for (int k = 1; k <= n; ++k) {
    long double tr = 0.0L;
    for (int i = 0; i < n; ++i) tr += cur[static_cast<std::size_t>(i) * n + i];
    power[k] = tr;
    if (k == n) break;
    std::vector<long double> next(static_cast<std::size_t>(n) * n, 0.0L);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) {
        const long double v = cur[static_cast<std::size_t>(i) * n + t];
        if (v == 0.0L) continue;
        for (int j = 0; j < n; ++j)
          next[static_cast<std::size_t>(i) * n + j] += v * m(t, j);
      }
    cur = std::move(next);
  }

  std::vector<long double> elem(static_cast<std::size_t>(n) + 1, 0.0L);
  elem[0] = 1.0L;
  for (int k = 1; k <= n; ++k) {
    long double acc = 0.0L;
    for (int i = 1; i <= k; ++i) {
      const long double term = elem[k - i] * power[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    elem[k] = acc / k;
  }

  CharPoly out;
  out.coefficients.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    out.coefficients[k] = static_cast<double>((k % 2 == 0) ? elem[k] : -elem[k]);
  return out;
}

inline double evaluate(const CharPoly& p, double lambda) {
  long double acc = 0.0L;
  for (double c : p.coefficients) acc = acc * lambda + c;
  return static_cast<double>(acc);
}

// A symmetric matrix is irreducible exactly when the support graph
// (i ~ j for i != j with M(i,j) != 0) is connected; a 1x1 matrix always is.
inline bool is_irreducible(const SymMatrix& m) {
  const int n = m.order();
  if (n == 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (u != v && m(v, u) != 0.0 && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

}  // namespace balpha
