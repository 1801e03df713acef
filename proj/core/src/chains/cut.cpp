#include "gmt/chains/cut.hpp"

#include <set>
#include <tuple>

#include "gmt/bundle/bundle.hpp"
#include "gmt/error.hpp"

namespace gmt {

namespace {

Rational value_of(const AffineMap& f, const Point& p) { return f.apply(p)[0]; }

void require_functional(const AffineMap& f) {
  if (f.target_dim() != 1) fail(ErrorCode::DimensionMismatch, "level function must be real valued");
}

// Faces of the two-sided split of a simplex F:
//   side != 0: the part of F on that side of the level,
//   side == 0: the level face F cap {f = y}.
class Puller {
 public:
  Puller(const std::vector<int>& side, const std::map<std::pair<VertexId, VertexId>, VertexId>& crossing)
      : side_(side), crossing_(crossing) {}

  std::vector<Cell> triangulate(const Cell& f, int s) {
    auto key = std::make_tuple(f, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Cell> out = compute(f, s);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  VertexId cross(VertexId a, VertexId b) const {
    return crossing_.at(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }

  std::vector<VertexId> vertices_of(const Cell& f, int s) const {
    std::vector<VertexId> out;
    for (VertexId p : f)
      if (s != 0 && side_[p] == s) out.push_back(p);
    for (VertexId p : f)
      for (VertexId q : f)
        if (side_[p] < 0 && side_[q] > 0) out.push_back(cross(p, q));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<Cell, int>> facets(const Cell& f, int s) const {
    std::size_t lower = 0, upper = 0;
    for (VertexId p : f) (side_[p] < 0 ? lower : upper)++;
    std::vector<std::pair<Cell, int>> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Cell g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      const int w = side_[f[i]];
      if (s != 0) {
        const std::size_t same = s > 0 ? upper : lower;
        if (w == s && same == 1) continue;  // nothing of G on this side
        out.emplace_back(std::move(g), s);
      } else {
        if ((w < 0 && lower < 2) || (w > 0 && upper < 2)) continue;
        out.emplace_back(std::move(g), 0);
      }
    }
    if (s != 0) out.emplace_back(f, 0);
    return out;
  }

  std::vector<Cell> compute(const Cell& f, int s) {
    bool one_sided = true;
    for (VertexId p : f) one_sided = one_sided && (side_[p] == s);
    if (s != 0 && one_sided) return {f};
    const auto verts = vertices_of(f, s);
    if (verts.size() == 1) return {Cell{verts[0]}};
    const VertexId apex = verts.front();
    std::vector<Cell> out;
    for (const auto& [g, t] : facets(f, s)) {
      const auto gv = vertices_of(g, t);
      if (std::binary_search(gv.begin(), gv.end(), apex)) continue;
      for (const auto& tau : triangulate(g, t)) {
        Cell c{apex};
        c.insert(c.end(), tau.begin(), tau.end());
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  const std::vector<int>& side_;
  const std::map<std::pair<VertexId, VertexId>, VertexId>& crossing_;
  std::map<std::tuple<Cell, int>, std::vector<Cell>> memo_;
};

}  // namespace

LevelCut make_level_cut(const SimplicialComplex& k, const AffineMap& f, const Rational& y) {
  require_functional(f);
  if (f.source_dim() != k.ambient()) fail(ErrorCode::DimensionMismatch, "level function on the wrong space");
  LevelCut cut{k, SimplicialComplex(), f, y, {}, {}, {}};

  std::vector<Point> vertices = k.vertices();
  std::vector<Rational> values;
  for (const auto& p : vertices) {
    values.push_back(value_of(f, p));
    const int c = values.back() < y ? -1 : (values.back() > y ? 1 : 0);
    cut.side.push_back(c);
  }

  // Crossed edges of cells off the level, in edge order.
  std::vector<const Cell*> off_level;
  std::set<std::pair<VertexId, VertexId>> crossed;
  for (int m = 0; m <= k.dimension(); ++m)
    for (const auto& c : k.cells(static_cast<std::size_t>(m))) {
      bool off = true;
      for (VertexId v : c) off = off && cut.side[v] != 0;
      if (!off) continue;
      off_level.push_back(&c);
      if (c.size() == 2 && cut.side[c[0]] != cut.side[c[1]]) crossed.emplace(c[0], c[1]);
    }
  for (const auto& [p, q] : crossed) {
    const Rational t = (y - values[p]) / (values[q] - values[p]);
    Point x(k.ambient());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = vertices[p][i] + t * (vertices[q][i] - vertices[p][i]);
    cut.crossing.emplace(std::make_pair(p, q), static_cast<VertexId>(vertices.size()));
    vertices.push_back(std::move(x));
    cut.side.push_back(0);
  }

  Puller puller(cut.side, cut.crossing);
  std::vector<Cell> cells;
  for (const Cell* c : off_level) {
    bool lower = false, upper = false;
    for (VertexId v : *c) (cut.side[v] < 0 ? lower : upper) = true;
    std::vector<Cell> parts;
    if (!(lower && upper)) {
      parts.push_back(*c);
    } else {
      parts = puller.triangulate(*c, +1);
      auto below = puller.triangulate(*c, -1);
      parts.insert(parts.end(), below.begin(), below.end());
    }
    cells.insert(cells.end(), parts.begin(), parts.end());
    cut.pieces.emplace(*c, std::move(parts));
  }
  cut.refined = SimplicialComplex::build(k.ambient(), std::move(vertices), std::move(cells),
                                         SimplicialComplex::Validation::Structural);
  return cut;
}

void require_regular_value(const GChain& s, const AffineMap& f, const Rational& y) {
  require_functional(f);
  for (VertexId v : s.support_vertices())
    if (value_of(f, s.complex().vertex(v)) == y)
      fail(ErrorCode::NonRegularValue, "level " + to_string(y) + " passes through support vertex " + std::to_string(v));
}

GChain refine(const GChain& s, const LevelCut& cut) {
  if (!(s.complex() == cut.source)) fail(ErrorCode::CarrierMismatch, "chain is not on the cut complex");
  require_regular_value(s, cut.f, cut.y);
  GChain out(cut.refined, s.dimension(), s.group());
  for (const auto& [c, g] : s.terms()) {
    const auto& parts = cut.pieces.at(c);
    if (parts.size() == 1 && parts[0] == c) {
      out.add_term(c, g);
      continue;
    }
    const BundleElement element = BundleElement::make_trusted(s.complex().span(c), g);
    for (const auto& piece : parts) out.add_term(piece, element.coefficient_along(cut.refined.span(piece)));
  }
  return out;
}

GChain upper_part(const GChain& refined, const LevelCut& cut) {
  if (!(refined.complex() == cut.refined)) fail(ErrorCode::CarrierMismatch, "chain is not on the refined complex");
  return restrict(refined, [&](const Cell& c) {
    for (VertexId v : c)
      if (cut.side[v] > 0) return true;
    return false;
  });
}

GChain slice(const GChain& s, const LevelCut& cut) {
  if (s.dimension() == 0) fail(ErrorCode::DimensionZero, "slice of a 0-chain");
  const GChain up = upper_part(refine(s, cut), cut);
  const LinearMap df{cut.f.linear};
  GChain out(cut.refined, s.dimension() - 1, s.group());
  for (const auto& [c, g] : up.terms()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (cut.side[c[i]] == 0) continue;
      Cell facet = c;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
      bool on_level = true;
      for (VertexId v : facet) on_level = on_level && cut.side[v] == 0;
      if (!on_level) continue;
      const BundleElement sliced = gmt::slice(BundleElement::make_trusted(cut.refined.span(c), g), df);
      out.add_term(facet, sliced.coefficient_along(cut.refined.span(facet)));
    }
  }
  return out;
}

CutResult cut(const GChain& s, const AffineMap& f, const Rational& y) {
  require_regular_value(s, f, y);
  LevelCut lc = make_level_cut(s.complex(), f, y);
  GChain refined = refine(s, lc);
  GChain up = upper_part(refined, lc);
  return {std::move(lc), std::move(refined), std::move(up)};
}

GChain slice(const GChain& s, const AffineMap& f, const Rational& y) {
  require_regular_value(s, f, y);
  return slice(s, make_level_cut(s.complex(), f, y));
}

}  // namespace gmt
