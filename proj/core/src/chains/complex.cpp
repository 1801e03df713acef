#include "gmt/chains/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gmt/lp/simplex.hpp"

namespace gmt {

int sort_with_parity(Cell& v) {
  int parity = 1;
  // insertion sort counts transpositions
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      parity = -parity;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return 0;
  return parity;
}

struct SimplicialComplex::Data {
  std::size_t ambient = 0;
  std::vector<Point> vertices;
  std::vector<std::vector<Cell>> cells;  // by dimension, sorted
  std::vector<Cell> maximal;
  std::map<Point, VertexId> lookup;
};

namespace {

const std::vector<Cell> kNoCells;

struct Box {
  Point lo, hi;
};

Box box_of(const std::vector<Point>& pts) {
  Box b{pts[0], pts[0]};
  for (const auto& p : pts)
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < b.lo[i]) b.lo[i] = p[i];
      if (p[i] > b.hi[i]) b.hi[i] = p[i];
    }
  return b;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.lo.size(); ++i)
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  return true;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<const Data>()) {}

SimplicialComplex SimplicialComplex::build(std::size_t ambient, std::vector<Point> vertices, std::vector<Cell> input,
                                           Validation validation) {
  auto d = std::make_shared<Data>();
  d->ambient = ambient;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() != ambient)
      fail(ErrorCode::InvalidComplex, "vertex " + std::to_string(i) + " has the wrong dimension");
    auto [it, fresh] = d->lookup.emplace(vertices[i], static_cast<VertexId>(i));
    if (!fresh && validation == Validation::Full)
      fail(ErrorCode::InvalidComplex, "vertices " + std::to_string(it->second) + " and " + std::to_string(i) +
                                          " coincide");
  }
  d->vertices = std::move(vertices);

  std::vector<std::set<Cell>> closure;
  for (auto& c : input) {
    if (c.empty()) fail(ErrorCode::InvalidComplex, "empty cell");
    if (c.size() > 16) fail(ErrorCode::InvalidComplex, "cell dimension above 15");
    if (sort_with_parity(c) == 0) fail(ErrorCode::InvalidComplex, "cell repeats a vertex");
    if (c.back() >= d->vertices.size()) fail(ErrorCode::InvalidComplex, "cell refers to a missing vertex");
    if (closure.size() < c.size()) closure.resize(c.size());
    if (closure[c.size() - 1].count(c)) continue;
    const std::uint32_t subsets = 1u << c.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Cell face;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (mask & (1u << i)) face.push_back(c[i]);
      closure[face.size() - 1].insert(std::move(face));
    }
  }
  for (auto& s : closure) d->cells.emplace_back(s.begin(), s.end());

  // A cell is maximal when it is no facet of a cell one dimension up.
  for (std::size_t m = 0; m < d->cells.size(); ++m) {
    std::set<Cell> covered;
    if (m + 1 < d->cells.size())
      for (const auto& c : d->cells[m + 1])
        for (std::size_t i = 0; i < c.size(); ++i) {
          Cell f = c;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          covered.insert(std::move(f));
        }
    for (const auto& c : d->cells[m])
      if (!covered.count(c)) d->maximal.push_back(c);
  }

  SimplicialComplex k(std::shared_ptr<const Data>(std::move(d)));
  if (validation == Validation::Full) {
    const auto& maxes = k.maximal_cells();
    std::vector<std::vector<Point>> pts;
    std::vector<Box> boxes;
    for (const auto& c : maxes) {
      pts.push_back(k.points(c));
      if (c.size() > ambient + 1 || (c.size() > 1 && span_vector(pts.back()).is_zero()))
        fail(ErrorCode::InvalidComplex, "cell is affinely dependent");
      boxes.push_back(box_of(pts.back()));
    }
    for (std::size_t i = 0; i < maxes.size(); ++i)
      for (std::size_t j = i + 1; j < maxes.size(); ++j) {
        if (!boxes_meet(boxes[i], boxes[j])) continue;
        std::vector<bool> shared(maxes[i].size());
        for (std::size_t a = 0; a < maxes[i].size(); ++a)
          shared[a] = std::binary_search(maxes[j].begin(), maxes[j].end(), maxes[i][a]);
        if (!proper_intersection(pts[i], pts[j], shared))
          fail(ErrorCode::InvalidComplex, "maximal cells " + std::to_string(i) + " and " + std::to_string(j) +
                                              " overlap outside a common face");
      }
  }
  return k;
}

bool proper_intersection(const std::vector<Point>& a, const std::vector<Point>& b, const std::vector<bool>& a_shared) {
  const std::size_t n = a[0].size();
  lp::Problem<Rational> p;
  p.rows = n + 2;
  p.cols = a.size() + b.size();
  p.a.assign(p.rows * p.cols, Rational(0));
  p.b.assign(p.rows, Rational(0));
  p.c.assign(p.cols, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) p.at(k, i) = a[i][k];
    p.at(n, i) = 1;
    if (!a_shared[i]) p.c[i] = -1;
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t k = 0; k < n; ++k) p.at(k, a.size() + j) = -b[j][k];
    p.at(n + 1, a.size() + j) = 1;
  }
  p.b[n] = 1;
  p.b[n + 1] = 1;
  auto sol = lp::solve(p);
  if (sol.status == lp::Status::Infeasible) return true;
  return sol.status == lp::Status::Optimal && sol.objective == 0;
}

std::size_t SimplicialComplex::ambient() const { return data_->ambient; }
const std::vector<Point>& SimplicialComplex::vertices() const { return data_->vertices; }
int SimplicialComplex::dimension() const { return static_cast<int>(data_->cells.size()) - 1; }

const std::vector<Cell>& SimplicialComplex::cells(std::size_t m) const {
  return m < data_->cells.size() ? data_->cells[m] : kNoCells;
}

const std::vector<Cell>& SimplicialComplex::maximal_cells() const { return data_->maximal; }

std::optional<std::size_t> SimplicialComplex::index_of(const Cell& c) const {
  if (c.empty()) return std::nullopt;
  const auto& list = cells(c.size() - 1);
  auto it = std::lower_bound(list.begin(), list.end(), c);
  if (it == list.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

bool SimplicialComplex::contains(const Cell& c) const { return index_of(c).has_value(); }

std::optional<VertexId> SimplicialComplex::find_vertex(const Point& p) const {
  auto it = data_->lookup.find(p);
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

std::vector<Point> SimplicialComplex::points(const Cell& c) const {
  std::vector<Point> out;
  out.reserve(c.size());
  for (VertexId v : c) out.push_back(data_->vertices[v]);
  return out;
}

MultiVector SimplicialComplex::span(const Cell& c) const { return span_vector(points(c)); }

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->ambient == b.data_->ambient && a.data_->vertices == b.data_->vertices &&
         a.data_->cells == b.data_->cells;
}

AffineMap AffineMap::identity(std::size_t n) { return {RationalMatrix::identity(n), std::vector<Rational>(n)}; }

AffineMap AffineMap::functional(std::vector<Rational> coeffs, const Rational& c) {
  RationalMatrix row(0, coeffs.size());
  row.append_row(coeffs);
  return {row, {c}};
}

AffineMap AffineMap::translation_by(const std::vector<Rational>& t) {
  return {RationalMatrix::identity(t.size()), t};
}

Point AffineMap::apply(const Point& x) const {
  if (x.size() != source_dim()) fail(ErrorCode::DimensionMismatch, "affine map applied to a point of the wrong size");
  Point y = linear.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  if (source_dim() != inner.target_dim()) fail(ErrorCode::DimensionMismatch, "affine composition shape mismatch");
  return {linear * inner.linear, apply(inner.translation)};
}

}  // namespace gmt
