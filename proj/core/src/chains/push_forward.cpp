#include "gmt/chains/push_forward.hpp"

#include <map>

#include "gmt/bundle/bundle.hpp"
#include "gmt/error.hpp"

namespace gmt {

LinearMap simplex_linear_map(const std::vector<Point>& source, const std::vector<Point>& image) {
  const std::size_t m = source.size() - 1;
  const std::size_t n = source[0].size();
  const std::size_t nu = image[0].size();
  RationalMatrix e(n, m), w(nu, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) e(i, j) = source[j + 1][i] - source[0][i];
    for (std::size_t i = 0; i < nu; ++i) w(i, j) = image[j + 1][i] - image[0][i];
  }
  if (m == 0) return {RationalMatrix(nu, n)};
  auto gram_inv = inverse(e.transpose() * e);
  if (!gram_inv) fail(ErrorCode::InvalidComplex, "degenerate source simplex");
  return {w * (*gram_inv) * e.transpose()};
}

namespace {

// nu is passed separately so that an empty source still knows its target space.
GChain push_points(const GChain& s, const std::vector<Point>& images, std::size_t nu,
                   const std::optional<SimplicialComplex>& target, PushReport* report) {
  const auto& k = s.complex();
  if (images.size() != k.vertices().size())
    fail(ErrorCode::DimensionMismatch, "one image point per source vertex is required");
  for (const auto& p : images)
    if (p.size() != nu) fail(ErrorCode::DimensionMismatch, "image points of mixed dimension");

  struct Image {
    std::vector<Point> points;  // in source vertex order
    BundleElement element;
  };
  std::vector<Image> live;
  std::size_t dropped = 0;
  for (const auto& [c, g] : s.terms()) {
    std::vector<Point> src = k.points(c), dst;
    for (VertexId v : c) dst.push_back(images[v]);
    // an m-simplex in fewer than m dimensions is flat
    if (s.dimension() > nu || span_vector(dst).is_zero()) {
      ++dropped;
      continue;
    }
    const BundleElement element = BundleElement::make_trusted(k.span(c), g);
    BundleElement pushed = push(element, simplex_linear_map(src, dst));
    live.push_back({std::move(dst), std::move(pushed)});
  }
  if (report) report->dropped = dropped;

  SimplicialComplex carrier;
  if (target) {
    carrier = *target;
    if (carrier.ambient() != nu) fail(ErrorCode::CarrierMismatch, "target complex lives in another space");
  } else {
    std::map<Point, VertexId> ids;
    for (const auto& im : live)
      for (const auto& p : im.points) ids.emplace(p, 0);
    std::vector<Point> pts;
    for (auto& [p, id] : ids) {
      id = static_cast<VertexId>(pts.size());
      pts.push_back(p);
    }
    std::vector<Cell> cells;
    for (const auto& im : live) {
      Cell c;
      for (const auto& p : im.points) c.push_back(ids.at(p));
      cells.push_back(std::move(c));
    }
    try {
      carrier = SimplicialComplex::build(nu, std::move(pts), std::move(cells));
    } catch (const Error& e) {
      fail(ErrorCode::OverlayUnsupported, std::string("image is not a complex: ") + e.what());
    }
  }

  GChain out(carrier, s.dimension(), s.group());
  for (const auto& im : live) {
    Cell c;
    for (const auto& p : im.points) {
      auto v = carrier.find_vertex(p);
      if (!v) fail(ErrorCode::CarrierMismatch, "image point is not a vertex of the target");
      c.push_back(*v);
    }
    sort_with_parity(c);
    if (!carrier.contains(c)) fail(ErrorCode::CarrierMismatch, "image simplex is not a cell of the target");
    out.add_term(c, im.element.coefficient_along(carrier.span(c)));
  }
  return out;
}

}  // namespace

GChain push_forward(const GChain& s, const std::vector<Point>& images, const std::optional<SimplicialComplex>& target,
                    PushReport* report) {
  const std::size_t nu = !images.empty() ? images[0].size() : target ? target->ambient() : 0;
  return push_points(s, images, nu, target, report);
}

GChain push_forward(const GChain& s, const AffineMap& f, const std::optional<SimplicialComplex>& target,
                    PushReport* report) {
  if (f.source_dim() != s.complex().ambient()) fail(ErrorCode::DimensionMismatch, "map source does not match");
  std::vector<Point> images;
  for (const auto& p : s.complex().vertices()) images.push_back(f.apply(p));
  return push_points(s, images, f.target_dim(), target, report);
}

}  // namespace gmt
