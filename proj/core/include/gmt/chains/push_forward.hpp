#pragma once

#include <optional>

#include "gmt/chains/chain.hpp"

namespace gmt {

struct PushReport {
  /// Support cells whose image is degenerate (zero m-volume) and was dropped.
  std::size_t dropped = 0;
};

/// Push-forward along the piecewise-affine map sending vertex v of the
/// source complex to images[v]. Each support simplex carries its
/// coefficient through the bundle push by the linear map taking its edges
/// to the image edges.
///
/// With no target the image complex is assembled from the image simplices
/// (points deduplicated and numbered in lexicographic order) and must be a
/// complex: OverlayUnsupported otherwise. With a target, every image simplex
/// must be one of its cells: CarrierMismatch otherwise.
GChain push_forward(const GChain& s, const std::vector<Point>& images,
                    const std::optional<SimplicialComplex>& target = std::nullopt, PushReport* report = nullptr);
GChain push_forward(const GChain& s, const AffineMap& f,
                    const std::optional<SimplicialComplex>& target = std::nullopt, PushReport* report = nullptr);

/// The linear map h = W (E^T E)^-1 E^T sending the edge vectors E of a
/// nondegenerate simplex to W.
LinearMap simplex_linear_map(const std::vector<Point>& source, const std::vector<Point>& image);

}  // namespace gmt
