#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "gmt/numeric.hpp"

namespace gmt::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

/// minimize c^T x subject to A x = b, x >= 0 (dense, row-major A).
template <class Scalar>
struct Problem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> a;  // rows x cols
  std::vector<Scalar> b;
  std::vector<Scalar> c;

  Scalar& at(std::size_t r, std::size_t j) { return a[r * cols + j]; }
  const Scalar& at(std::size_t r, std::size_t j) const { return a[r * cols + j]; }
};

template <class Scalar>
struct Solution {
  Status status = Status::Infeasible;
  std::vector<Scalar> x;
  Scalar objective{};
  std::vector<std::size_t> basis;  // basic column of each row
  std::size_t iterations = 0;
};

namespace detail {

template <class Scalar>
struct Tolerance {
  static bool positive(const Scalar& v) { return v > 0; }
  static bool negative(const Scalar& v) { return v < 0; }
  static bool zero(const Scalar& v) { return v == 0; }
};

template <>
struct Tolerance<double> {
  static constexpr double eps = 1e-11;
  static bool positive(double v) { return v > eps; }
  static bool negative(double v) { return v < -eps; }
  static bool zero(double v) { return std::abs(v) <= eps; }
};

// Dense tableau with the objective row last. Bland's rule on entering and
// leaving choices guarantees termination.
template <class Scalar>
class Tableau {
 public:
  using Tol = Tolerance<Scalar>;

  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_((rows + 1) * (cols + 1)), basis_(rows) {}

  Scalar& at(std::size_t r, std::size_t j) { return t_[r * (n_ + 1) + j]; }
  Scalar& rhs(std::size_t r) { return at(r, n_); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t j) {
    const Scalar p = at(r, j);
    for (std::size_t k = 0; k <= n_; ++k) at(r, k) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const Scalar f = at(i, j);
      if (Tol::zero(f)) {
        at(i, j) = Scalar(0);
        continue;
      }
      for (std::size_t k = 0; k <= n_; ++k) at(i, k) -= f * at(r, k);
      at(i, j) = Scalar(0);
    }
    basis_[r] = j;
  }

  // Prices out the objective row for the current basis.
  void price(const std::vector<Scalar>& cost) {
    for (std::size_t k = 0; k <= n_; ++k) at(m_, k) = k < n_ ? cost[k] : Scalar(0);
    for (std::size_t r = 0; r < m_; ++r) {
      const Scalar f = at(m_, basis_[r]);
      if (Tol::zero(f)) continue;
      for (std::size_t k = 0; k <= n_; ++k) at(m_, k) -= f * at(r, k);
    }
  }

  // Minimizes the priced objective over columns allowed[j].
  Status run(const std::vector<bool>& allowed, std::size_t& iterations, std::size_t cap) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < n_; ++j)
        if (allowed[j] && Tol::negative(at(m_, j))) {
          enter = j;
          break;
        }
      if (!enter) return Status::Optimal;
      if (iterations >= cap) return Status::IterationLimit;
      std::optional<std::size_t> leave;
      Scalar best{};
      for (std::size_t r = 0; r < m_; ++r) {
        const Scalar& e = at(r, *enter);
        if (!Tol::positive(e)) continue;
        const Scalar ratio = rhs(r) / e;
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return Status::Unbounded;
      pivot(*leave, *enter);
      ++iterations;
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<Scalar> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Two-phase simplex with Bland's rule. When `start` names a feasible basis
/// (one column per row forming a basis with B^-1 b >= 0) phase one is skipped.
template <class Scalar>
Solution<Scalar> solve(const Problem<Scalar>& p, std::size_t iteration_cap = 200000,
                       const std::vector<std::size_t>* start = nullptr) {
  using Tol = detail::Tolerance<Scalar>;
  const std::size_t m = p.rows, n = p.cols;
  Solution<Scalar> sol;

  if (start) {
    detail::Tableau<Scalar> tab(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = p.at(r, j);
      tab.rhs(r) = p.b[r];
    }
    for (std::size_t r = 0; r < m; ++r) tab.pivot(r, (*start)[r]);
    tab.price(p.c);
    std::vector<bool> allowed(n, true);
    sol.status = tab.run(allowed, sol.iterations, iteration_cap);
    sol.basis = tab.basis();
    sol.x.assign(n, Scalar(0));
    for (std::size_t r = 0; r < m; ++r) sol.x[sol.basis[r]] = tab.rhs(r);
  } else {
    // Columns n .. n+m-1 are artificials; rows are sign-normalized to b >= 0.
    detail::Tableau<Scalar> tab(m, n + m);
    for (std::size_t r = 0; r < m; ++r) {
      const bool flip = p.b[r] < 0;
      for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = flip ? Scalar(-p.at(r, j)) : p.at(r, j);
      tab.at(r, n + r) = Scalar(1);
      tab.rhs(r) = flip ? Scalar(-p.b[r]) : p.b[r];
      tab.basis()[r] = n + r;
    }
    std::vector<Scalar> phase1(n + m, Scalar(0));
    for (std::size_t r = 0; r < m; ++r) phase1[n + r] = Scalar(1);
    tab.price(phase1);
    std::vector<bool> allowed(n + m, true);
    sol.status = tab.run(allowed, sol.iterations, iteration_cap);
    if (sol.status == Status::IterationLimit) return sol;
    // the objective cell holds minus the phase-one value
    if (!detail::Tolerance<Scalar>::zero(tab.at(m, n + m) / Scalar(100)) && tab.at(m, n + m) < 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    // Drive remaining artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (tab.basis()[r] < n) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!Tol::zero(tab.at(r, j))) {
          tab.pivot(r, j);
          break;
        }
    }
    std::vector<Scalar> cost(n + m, Scalar(0));
    for (std::size_t j = 0; j < n; ++j) cost[j] = p.c[j];
    tab.price(cost);
    for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;
    sol.status = tab.run(allowed, sol.iterations, iteration_cap);
    sol.basis = tab.basis();
    sol.x.assign(n, Scalar(0));
    for (std::size_t r = 0; r < m; ++r)
      if (sol.basis[r] < n) sol.x[sol.basis[r]] = tab.rhs(r);
  }
  sol.objective = Scalar(0);
  for (std::size_t j = 0; j < n; ++j) sol.objective += p.c[j] * sol.x[j];
  return sol;
}

}  // namespace gmt::lp
