#include "gmt/chains/product.hpp"

#include "gmt/bundle/bundle.hpp"
#include "gmt/chains/push_forward.hpp"
#include "gmt/error.hpp"

namespace gmt {

std::vector<Cell> staircase(const Cell& a, const Cell& b, std::size_t second_vertex_count) {
  const std::size_t k = a.size() - 1, l = b.size() - 1;
  std::vector<Cell> out;
  // Each path is a choice of which of the k + l steps advance in a.
  const std::size_t steps = k + l;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << steps); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::size_t i = 0, j = 0;
    Cell c{static_cast<VertexId>(a[0] * second_vertex_count + b[0])};
    for (std::size_t s = 0; s < steps; ++s) {
      if (mask & (std::uint64_t(1) << s)) ++i;
      else ++j;
      c.push_back(static_cast<VertexId>(a[i] * second_vertex_count + b[j]));
    }
    out.push_back(std::move(c));
  }
  return out;
}

SimplicialComplex product_complex(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const std::size_t n = k1.ambient(), nu = k2.ambient();
  const std::size_t v2 = k2.vertices().size();
  std::vector<Point> pts;
  for (const auto& p : k1.vertices())
    for (const auto& q : k2.vertices()) {
      Point x = p;
      x.insert(x.end(), q.begin(), q.end());
      pts.push_back(std::move(x));
    }
  std::vector<Cell> cells;
  for (const auto& a : k1.maximal_cells())
    for (const auto& b : k2.maximal_cells()) {
      auto st = staircase(a, b, v2);
      cells.insert(cells.end(), st.begin(), st.end());
    }
  return SimplicialComplex::build(n + nu, std::move(pts), std::move(cells), SimplicialComplex::Validation::Structural);
}

GChain product(const GChain& s, const GChain& t) {
  if (s.group().kind() != GroupKind::Integers) fail(ErrorCode::GroupMismatch, "left factor of a product must be integral");
  const SimplicialComplex k = product_complex(s.complex(), t.complex());
  const std::size_t v2 = t.complex().vertices().size();
  GChain out(k, s.dimension() + t.dimension(), t.group());
  for (const auto& [a, d] : s.terms()) {
    const BundleElement delta = BundleElement::make_trusted(s.complex().span(a), d);
    for (const auto& [b, g] : t.terms()) {
      const BundleElement gamma = BundleElement::make_trusted(t.complex().span(b), g);
      const BundleElement both = product(delta, gamma);
      for (const auto& c : staircase(a, b, v2)) out.add_term(c, both.coefficient_along(k.span(c)));
    }
  }
  return out;
}

GChain homotopy_fill(const AffineMap& f, const AffineMap& g, const GChain& s, const Rational& t) {
  if (f.source_dim() != s.complex().ambient() || g.source_dim() != s.complex().ambient() ||
      f.target_dim() != g.target_dim())
    fail(ErrorCode::DimensionMismatch, "homotopy ends do not fit the chain");
  if (t == 0) return GChain(SimplicialComplex::build(f.target_dim(), {}, {}), s.dimension() + 1, s.group());
  const SimplicialComplex interval = SimplicialComplex::build(1, {{Rational(0)}, {t}}, {{0, 1}});
  GChain unit(interval, 1, NormedGroup::integers());
  unit.add_term({0, 1}, 1);
  const GChain prism = product(unit, s);
  // h(0, x) = f(x) and h(t, x) = g(x); the staircase cells interpolate.
  std::vector<Point> images;
  for (int end = 0; end < 2; ++end)
    for (const auto& x : s.complex().vertices()) images.push_back(end == 0 ? f.apply(x) : g.apply(x));
  return push_forward(prism, images);
}

}  // namespace gmt
