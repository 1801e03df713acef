#include "gmt/group/smith.hpp"

#include <algorithm>
#include <utility>

namespace gmt {

using boost::multiprecision::abs;

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal()) r += (d != 0);
  return r;
}

namespace {

struct SmithState {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) { d.swap_rows(a, b); u.swap_rows(a, b); }
  void swap_cols(std::size_t a, std::size_t b) { d.swap_cols(a, b); v.swap_cols(a, b); }
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
  }
  void negate_row(std::size_t r) { d.negate_row(r); u.negate_row(r); }

  // Moves the entry of least nonzero magnitude in the trailing block to (t,t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
          best = {i, j};
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  // Clears row t and column t beyond the pivot; returns false when a
  // remainder survived and the pivot must be replaced.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) == 0) continue;
      Integer q = d(i, t) / d(t, t);
      add_row(i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) == 0) continue;
      Integer q = d(t, j) / d(t, t);
      add_col(j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    return clean;
  }

  void shrink_pivot(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) { bi = i; bj = t; }
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) { bi = t; bj = j; }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    if (!s.place_pivot(t)) break;
    for (;;) {
      if (!s.clear_cross(t)) {
        s.shrink_pivot(t);
        continue;
      }
      // Divisibility: fold any offending row into row t and start over.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < s.d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < s.d.cols(); ++j)
          if (s.d(i, j) % s.d(t, t) != 0) { offender = i; break; }
      if (!offender) break;
      s.add_row(t, *offender, Integer(1));
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }
  return {std::move(s.u), std::move(s.d), std::move(s.v)};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclid on column `col` among rows >= row.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < h.rows(); ++i)
        if (h(i, col) != 0 && (!best || abs(h(i, col)) < abs(h(*best, col)))) best = i;
      if (!best) break;
      h.swap_rows(row, *best);
      bool done = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(row, col);
        h.add_row_multiple(i, row, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) h.negate_row(row);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, col), h(row, col));
      if (q != 0) h.add_row_multiple(i, row, -q);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  IntMatrix out(row, h.cols());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) out(r, c) = h(r, c);
  return out;
}

Integer integer_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("integer_determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  std::vector<std::vector<Integer>> basis;
  for (std::size_t c = r; c < m.cols(); ++c) basis.push_back(snf.V.column(c));
  return basis;
}

bool in_row_lattice(const IntMatrix& rows, std::span<const Integer> x,
                    std::vector<Integer>* coefficients) {
  const std::size_t width = x.size();
  if (rows.rows() == 0) {
    bool zero = std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
    if (zero && coefficients) coefficients->clear();
    return zero;
  }
  if (rows.cols() != width) throw std::invalid_argument("in_row_lattice: width mismatch");
  // rows^T y = x  <=>  D z = U x with z = V^{-1} y.
  auto snf = smith_normal_form(rows.transpose());
  auto ux = snf.U.apply(x);
  const auto diag = snf.diagonal();
  std::vector<Integer> z(rows.rows());
  for (std::size_t i = 0; i < ux.size(); ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0) {
      if (ux[i] != 0) return false;
    } else {
      if (ux[i] % d != 0) return false;
      z[i] = ux[i] / d;
    }
  }
  if (coefficients) *coefficients = snf.V.apply(z);
  return true;
}

}  // namespace gmt
