#include "gmt/exterior/multivector.hpp"

namespace gmt {

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Blade rest = b; rest; rest &= rest - 1) {
    const Blade low = rest & (~rest + 1);
    // elements of a above this element of b
    inversions += std::popcount(a & ~((low << 1) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; b; ++i, b >>= 1)
    if (b & 1) out.push_back(i + 1);
  return out;
}

Blade blade_from_indices(const std::vector<int>& one_based) {
  Blade b = 0;
  for (int i : one_based) {
    if (i < 1 || i > static_cast<int>(kMaxAmbient)) fail(ErrorCode::DegreeError, "blade index out of range");
    b |= Blade(1) << (i - 1);
  }
  return b;
}

std::vector<Blade> blades_of_degree(std::size_t n, std::size_t m) {
  std::vector<Blade> out;
  if (m > n) return out;
  // Increasing index tuples in lexicographic order.
  std::vector<int> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
  while (true) {
    Blade b = 0;
    for (int i : idx) b |= Blade(1) << i;
    out.push_back(b);
    int k = static_cast<int>(m) - 1;
    while (k >= 0 && idx[k] == static_cast<int>(n - m) + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (std::size_t j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

LinearMap LinearMap::after(const LinearMap& inner) const {
  if (source_dim() != inner.target_dim()) fail(ErrorCode::DimensionMismatch, "map composition shape mismatch");
  return {matrix * inner.matrix};
}

std::vector<Rational> LinearMap::apply(const std::vector<Rational>& x) const {
  if (x.size() != source_dim()) fail(ErrorCode::DimensionMismatch, "map applied to a vector of the wrong size");
  return matrix.apply(x);
}

MultiVector push(const LinearMap& l, const MultiVector& a) {
  if (a.ambient() != l.source_dim()) fail(ErrorCode::DimensionMismatch, "push: map source does not match");
  const std::size_t nu = l.target_dim();
  std::vector<MultiVector> images;
  for (std::size_t j = 0; j < l.source_dim(); ++j) images.push_back(MultiVector::vector(l.matrix.column(j)));
  MultiVector out(nu, a.degree());
  for (const auto& [b, c] : a.terms()) {
    MultiVector term = MultiVector::scalar(nu, c);
    for (int i : blade_indices(b)) {
      term = wedge(term, images[i - 1]);
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) out += term;
  }
  return out;
}

CoVector covector_of_rows(const RationalMatrix& rows) {
  CoVector out = CoVector::scalar(rows.cols(), 1);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto row = rows.row(r);
    out = wedge(out, CoVector::vector(std::vector<Rational>(row.begin(), row.end())));
  }
  return out;
}

MultiVector interior(const MultiVector& a, const CoVector& w) {
  if (a.ambient() != w.ambient()) fail(ErrorCode::DimensionMismatch, "interior: ambient dimensions differ");
  if (w.degree() > a.degree()) fail(ErrorCode::DegreeError, "interior: covector degree exceeds vector degree");
  MultiVector out(a.ambient(), a.degree() - w.degree());
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : w.terms()) {
      if ((i & j) != j) continue;
      const Blade rest = i & ~j;
      const int s = wedge_sign(j, rest);
      out.accumulate(rest, s > 0 ? ci * cj : -(ci * cj));
    }
  return out;
}

Rational dot(const MultiVector& a, const MultiVector& b) {
  if (a.ambient() != b.ambient() || a.degree() != b.degree())
    fail(ErrorCode::DegreeError, "dot: operands differ in degree or dimension");
  Rational s = 0;
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (const auto& [blade, c] : small.terms()) {
    auto it = large.terms().find(blade);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

MultiVector span_vector(const std::vector<Point>& vertices) {
  if (vertices.empty()) fail(ErrorCode::InvalidArgument, "span_vector needs at least one vertex");
  const std::size_t n = vertices[0].size();
  MultiVector out = MultiVector::scalar(n, 1);
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (vertices[k].size() != n) fail(ErrorCode::DimensionMismatch, "span_vector: mixed dimensions");
    std::vector<Rational> edge(n);
    for (std::size_t i = 0; i < n; ++i) edge[i] = vertices[k][i] - vertices[0][i];
    out = wedge(out, MultiVector::vector(edge));
    if (out.is_zero()) return MultiVector(n, vertices.size() - 1);
  }
  return out;
}

namespace {

// Matrix of v -> v ^ a in the lexicographic bases.
RationalMatrix left_wedge_matrix(const MultiVector& a) {
  const std::size_t n = a.ambient();
  const auto rows = blades_of_degree(n, a.degree() + 1);
  std::map<Blade, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  RationalMatrix m(rows.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const Blade e = Blade(1) << j;
    for (const auto& [b, c] : a.terms()) {
      const int s = wedge_sign(e, b);
      if (s) m(row_of[e | b], j) += s > 0 ? c : Rational(-c);
    }
  }
  return m;
}

}  // namespace

bool is_simple(const MultiVector& a) {
  if (a.is_zero()) return false;
  const std::size_t m = a.degree();
  const std::size_t n = a.ambient();
  // degrees 0, 1, n-1 and n are always decomposable
  if (m <= 1 || m + 1 >= n) return true;
  return n - rank(left_wedge_matrix(a)) == m;
}

std::vector<std::vector<Rational>> plane_basis(const MultiVector& a) {
  if (a.degree() == a.ambient()) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < a.ambient(); ++i) {
      std::vector<Rational> e(a.ambient());
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  return null_space(left_wedge_matrix(a));
}

}  // namespace gmt
