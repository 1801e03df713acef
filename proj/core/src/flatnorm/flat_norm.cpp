#include "gmt/flatnorm/flat_norm.hpp"

#include <cmath>
#include <functional>

#include "gmt/error.hpp"
#include "gmt/lp/simplex.hpp"

namespace gmt {

double cell_weight(const SimplicialComplex& k, const Cell& c, const std::map<Cell, double>& overrides) {
  if (auto it = overrides.find(c); it != overrides.end()) {
    if (!(it->second > 0)) fail(ErrorCode::InvalidArgument, "cell weights must be positive");
    return it->second;
  }
  return cell_volume(k, c).mid();
}

namespace {

GChain as_rational(const GChain& s) {
  if (s.group().kind() == GroupKind::Rationals) return s;
  if (s.group().kind() == GroupKind::Integers) return to_rational(s);
  fail(ErrorCode::GroupMismatch, "flat norm needs rational or integral coefficients");
}

// Solves a x = b by partial pivoting; a is n x n row-major.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) return {};
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
    x[i] = s / a[i * n + i];
  }
  return x;
}

struct Layout {
  std::vector<Cell> faces;   // m-cells, one row each
  std::vector<Cell> bodies;  // (m+1)-cells
  std::vector<double> face_w, body_w;
  // incidence[t] = (row, sign) pairs of the boundary of body t
  std::vector<std::vector<std::pair<std::size_t, int>>> incidence;
};

Layout layout_of(const GChain& s, const std::map<Cell, double>& overrides) {
  const auto& k = s.complex();
  Layout l;
  l.faces = k.cells(s.dimension());
  l.bodies = k.cells(s.dimension() + 1);
  for (const auto& c : l.faces) l.face_w.push_back(cell_weight(k, c, overrides));
  for (const auto& c : l.bodies) {
    l.body_w.push_back(cell_weight(k, c, overrides));
    std::vector<std::pair<std::size_t, int>> inc;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Cell f = c;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      inc.emplace_back(*k.index_of(f), i % 2 ? -1 : 1);
    }
    l.incidence.push_back(std::move(inc));
  }
  return l;
}

template <class Scalar>
lp::Problem<Scalar> build_problem(const Layout& l, const std::vector<Rational>& rhs,
                                  const std::function<Scalar(double)>& weight,
                                  const std::function<Scalar(const Rational&)>& value) {
  const std::size_t mrows = l.faces.size(), p = l.bodies.size();
  lp::Problem<Scalar> prob;
  prob.rows = mrows;
  prob.cols = 2 * mrows + 2 * p;
  prob.a.assign(prob.rows * prob.cols, Scalar(0));
  prob.c.assign(prob.cols, Scalar(0));
  for (std::size_t i = 0; i < mrows; ++i) {
    prob.at(i, i) = Scalar(1);
    prob.at(i, mrows + i) = Scalar(-1);
    prob.c[i] = prob.c[mrows + i] = weight(l.face_w[i]);
    prob.b.push_back(value(rhs[i]));
  }
  for (std::size_t t = 0; t < p; ++t) {
    for (const auto& [row, sg] : l.incidence[t]) {
      prob.at(row, 2 * mrows + t) = Scalar(sg);
      prob.at(row, 2 * mrows + p + t) = Scalar(-sg);
    }
    prob.c[2 * mrows + t] = prob.c[2 * mrows + p + t] = weight(l.body_w[t]);
  }
  return prob;
}

GChain zero_like(const GChain& s, std::size_t dim) { return GChain(s.complex(), dim, s.group()); }

}  // namespace

FlatDecomposition flat_norm(const FlatNormProblem& problem) {
  const GChain s = as_rational(problem.chain);
  const auto& k = s.complex();
  const std::size_t m = s.dimension();
  FlatDecomposition out{s, zero_like(s, m + 1), 0.0, 0, true, {}};
  if (s.is_zero()) return out;

  const Layout l = layout_of(s, problem.weights);
  const std::size_t rows = l.faces.size(), p = l.bodies.size(), cols = 2 * rows + 2 * p;
  std::vector<Rational> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) rhs[i] = s.coefficient(l.faces[i]).slots()[0];

  // q+ (or q- where S is negative) is a feasible starting basis.
  std::vector<std::size_t> start(rows);
  for (std::size_t i = 0; i < rows; ++i) start[i] = rhs[i] < 0 ? rows + i : i;

  const auto fp = build_problem<double>(
      l, rhs, [](double w) { return w; }, [](const Rational& q) { return to_double(q); });
  auto sol = lp::solve(fp, problem.iteration_cap, &start);
  if (sol.status == lp::Status::IterationLimit) fail(ErrorCode::SolverStall, "flat norm simplex hit its iteration cap");
  if (sol.status != lp::Status::Optimal) fail(ErrorCode::Infeasible, "flat norm program reported no optimum");
  out.iterations = sol.iterations;
  std::vector<std::size_t> basis = sol.basis;

  // Exact re-solve of the optimal basis.
  const auto qp = build_problem<Rational>(
      l, rhs, [](double w) { return from_double(w); }, [](const Rational& q) { return q; });
  std::vector<Rational> x(cols, Rational(0));
  {
    RationalMatrix b(rows, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < rows; ++j) b(r, j) = qp.at(r, basis[j]);
    auto xb = solve(b, rhs);
    bool ok = xb.has_value();
    if (ok)
      for (const auto& v : *xb) ok = ok && v >= 0;
    if (ok) {
      for (std::size_t j = 0; j < rows; ++j) x[basis[j]] = (*xb)[j];
    } else {
      out.basis_exact = false;
      auto exact = lp::solve(qp, problem.iteration_cap, &start);
      if (exact.status != lp::Status::Optimal) fail(ErrorCode::SolverStall, "exact flat norm fallback failed");
      x = exact.x;
      basis = exact.basis;
      out.iterations += exact.iterations;
    }
  }

  GChain r(k, m + 1, s.group());
  for (std::size_t t = 0; t < p; ++t) {
    const Rational v = x[2 * rows + t] - x[2 * rows + p + t];
    if (v != 0) r.add_term(l.bodies[t], v);
  }
  GChain q = s;
  if (!r.is_zero()) q -= boundary(r);
  double value = 0.0;
  for (std::size_t i = 0; i < rows; ++i) value += l.face_w[i] * std::abs(to_double(q.coefficient(l.faces[i]).slots()[0]));
  for (std::size_t t = 0; t < p; ++t) value += l.body_w[t] * std::abs(to_double(r.coefficient(l.bodies[t]).slots()[0]));
  out.q = std::move(q);
  out.r = std::move(r);
  out.value = value;

  // Dual certificate from B^T y = c_B.
  std::vector<double> bt(rows * rows), cb(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    cb[j] = fp.c[basis[j]];
    for (std::size_t r2 = 0; r2 < rows; ++r2) bt[j * rows + r2] = fp.at(r2, basis[j]);
  }
  auto y = solve_dense(bt, cb);
  if (!y.empty()) {
    FlatCertificate cert;
    cert.y = y;
    for (std::size_t i = 0; i < rows; ++i) {
      cert.dual_objective += y[i] * to_double(rhs[i]);
      cert.max_violation = std::max(cert.max_violation, std::abs(y[i]) - l.face_w[i]);
    }
    for (std::size_t t = 0; t < p; ++t) {
      double dy = 0.0;
      for (const auto& [row, sg] : l.incidence[t]) dy += sg * y[row];
      cert.max_violation = std::max(cert.max_violation, std::abs(dy) - l.body_w[t]);
    }
    out.certificate = std::move(cert);
  } else {
    out.certificate.max_violation = INFINITY;
  }
  return out;
}

FlatDecomposition flat_norm(const GChain& s) { return flat_norm(FlatNormProblem{s, {}}); }

double flat_distance(const GChain& s, const GChain& t) { return flat_norm(as_rational(s) - as_rational(t)).value; }

FlatDecomposition integral_flat_norm(const GChain& s, const std::map<Cell, double>& weights, std::size_t node_cap) {
  if (s.group().kind() != GroupKind::Integers) fail(ErrorCode::GroupMismatch, "integral flat norm needs an integral chain");
  const auto& k = s.complex();
  const std::size_t m = s.dimension();
  const Layout l = layout_of(s, weights);
  const std::size_t rows = l.faces.size(), p = l.bodies.size();
  if (p > 12) fail(ErrorCode::TooLarge, "integral flat norm is limited to 12 cells of the next dimension");

  std::vector<Integer> target(rows);
  for (std::size_t i = 0; i < rows; ++i) target[i] = boost::multiprecision::numerator(s.coefficient(l.faces[i]).slots()[0]);
  double total = 0.0;
  for (std::size_t i = 0; i < rows; ++i) total += l.face_w[i] * std::abs(target[i].convert_to<double>());

  // A fill with |R_t| w_t > mass(S) loses to R = 0.
  std::vector<long> bound(p);
  for (std::size_t t = 0; t < p; ++t) bound[t] = static_cast<long>(std::floor(total / l.body_w[t] + 1e-9));
  // last body touching each face: the face residual is final after it
  std::vector<std::vector<std::size_t>> closes(p);
  for (std::size_t i = 0; i < rows; ++i) {
    std::optional<std::size_t> last;
    for (std::size_t t = 0; t < p; ++t)
      for (const auto& [row, sg] : l.incidence[t])
        if (row == i) last = t;
    if (last) closes[*last].push_back(i);
  }
  double fixed = 0.0;  // faces no body touches
  for (std::size_t i = 0; i < rows; ++i) {
    bool touched = false;
    for (std::size_t t = 0; t < p && !touched; ++t)
      for (const auto& [row, sg] : l.incidence[t]) touched = touched || row == i;
    if (!touched) fixed += l.face_w[i] * std::abs(target[i].convert_to<double>());
  }

  std::vector<long> fill(p, 0), best_fill(p, 0);
  std::vector<long> residual(rows);
  for (std::size_t i = 0; i < rows; ++i) residual[i] = target[i].convert_to<long>();
  double best = total;
  std::size_t nodes = 0;
  std::function<void(std::size_t, double)> dfs = [&](std::size_t t, double cost) {
    if (++nodes > node_cap) fail(ErrorCode::SolverStall, "integral flat norm exceeded its node budget");
    if (cost + fixed >= best - 1e-12) return;
    if (t == p) {
      best = cost + fixed;
      best_fill = fill;
      return;
    }
    for (long v = -bound[t]; v <= bound[t]; ++v) {
      const double body = l.body_w[t] * std::abs(static_cast<double>(v));
      for (const auto& [row, sg] : l.incidence[t]) residual[row] -= sg * v;
      double closed = 0.0;
      for (std::size_t i : closes[t]) closed += l.face_w[i] * std::abs(static_cast<double>(residual[i]));
      fill[t] = v;
      dfs(t + 1, cost + body + closed);
      for (const auto& [row, sg] : l.incidence[t]) residual[row] += sg * v;
    }
    fill[t] = 0;
  };
  dfs(0, 0.0);

  GChain r(k, m + 1, s.group());
  for (std::size_t t = 0; t < p; ++t)
    if (best_fill[t] != 0) r.add_term(l.bodies[t], Rational(best_fill[t]));
  GChain q = s;
  if (!r.is_zero()) q -= boundary(r);
  FlatDecomposition out{std::move(q), std::move(r), best, nodes, true, {}};
  return out;
}

}  // namespace gmt
