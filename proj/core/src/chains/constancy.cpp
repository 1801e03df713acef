#include "gmt/chains/constancy.hpp"

#include <deque>
#include <map>
#include <set>

#include "gmt/error.hpp"

namespace gmt {

namespace {

struct Incidence {
  std::size_t cell;
  int sign;  // (-1)^i for the face dropping vertex i
};

std::map<Cell, std::vector<Incidence>> face_incidences(const std::vector<Cell>& cells) {
  std::map<Cell, std::vector<Incidence>> faces;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    for (std::size_t i = 0; i < c.size(); ++i) {
      Cell f = c;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      faces[f].push_back({k, i % 2 ? -1 : 1});
    }
  }
  for (const auto& [f, inc] : faces)
    if (inc.size() > 2) fail(ErrorCode::NotManifold, "a face lies in more than two cells");
  return faces;
}

std::vector<Cell> sorted_cells(const std::vector<Cell>& cells) {
  std::vector<Cell> out = cells;
  std::set<Cell> seen;
  for (auto& c : out) {
    if (sort_with_parity(c) == 0) fail(ErrorCode::NotManifold, "degenerate cell");
    if (!seen.insert(c).second) fail(ErrorCode::NotManifold, "cell listed twice");
  }
  return out;
}

}  // namespace

OrientedManifold orient_manifold(const std::vector<Cell>& input) {
  OrientedManifold m{sorted_cells(input), {}};
  if (m.cells.empty()) fail(ErrorCode::NotConnected, "empty manifold");
  const auto faces = face_incidences(m.cells);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(m.cells.size());
  for (const auto& [f, inc] : faces)
    if (inc.size() == 2) {
      // coherent: o_a s_a + o_b s_b = 0
      const int rel = -inc[0].sign * inc[1].sign;
      adj[inc[0].cell].emplace_back(inc[1].cell, rel);
      adj[inc[1].cell].emplace_back(inc[0].cell, rel);
    }
  m.orientation.assign(m.cells.size(), 0);
  m.orientation[0] = 1;
  std::deque<std::size_t> queue{0};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (const auto& [b, rel] : adj[a]) {
      const int want = m.orientation[a] * rel;
      if (m.orientation[b] == 0) {
        m.orientation[b] = want;
        ++reached;
        queue.push_back(b);
      } else if (m.orientation[b] != want) {
        fail(ErrorCode::NotManifold, "cells admit no coherent orientation");
      }
    }
  }
  if (reached != m.cells.size()) fail(ErrorCode::NotConnected, "manifold is not connected through its faces");
  return m;
}

GChain fundamental_chain(const SimplicialComplex& k, const OrientedManifold& m, const GroupElement& g) {
  if (m.cells.empty()) fail(ErrorCode::NotConnected, "empty manifold");
  GChain out(k, m.cells[0].size() - 1, g.group());
  for (std::size_t i = 0; i < m.cells.size(); ++i) out.add_term(m.cells[i], m.orientation[i] > 0 ? g : -g);
  return out;
}

ConstancyResult constancy_solve(const GChain& t, const OrientedManifold& input) {
  if (input.cells.size() != input.orientation.size())
    fail(ErrorCode::InvalidArgument, "one orientation sign per manifold cell is required");
  if (input.cells.empty()) fail(ErrorCode::NotConnected, "empty manifold");
  std::vector<Cell> cells = input.cells;
  std::vector<int> orientation = input.orientation;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (orientation[i] != 1 && orientation[i] != -1) fail(ErrorCode::InvalidArgument, "orientation signs must be +-1");
    orientation[i] *= sort_with_parity(cells[i]);
    if (orientation[i] == 0) fail(ErrorCode::NotManifold, "degenerate cell");
  }
  if (cells[0].size() != t.dimension() + 1) fail(ErrorCode::DimensionMismatch, "manifold and chain dimensions differ");
  sorted_cells(cells);
  const auto faces = face_incidences(cells);

  std::map<Cell, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);
  for (const auto& [c, g] : t.terms())
    if (!index.count(c)) fail(ErrorCode::CarrierMismatch, "chain has support outside the manifold");

  // Coherence of the supplied orientation and connectivity.
  std::vector<std::vector<std::size_t>> adj(cells.size());
  for (const auto& [f, inc] : faces) {
    if (inc.size() != 2) continue;
    const std::size_t a = inc[0].cell, b = inc[1].cell;
    if (orientation[a] * inc[0].sign + orientation[b] * inc[1].sign != 0)
      fail(ErrorCode::NotManifold, "orientation is not coherent across a shared face");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(cells.size());
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::vector<std::size_t> order;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    order.push_back(a);
    for (std::size_t b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
  }
  if (order.size() != cells.size()) fail(ErrorCode::NotConnected, "manifold is not connected through its faces");

  // Coefficient of each cell along its manifold orientation.
  auto oriented = [&](std::size_t i) {
    GroupElement g = t.coefficient(cells[i]);
    return orientation[i] > 0 ? g : -g;
  };
  ConstancyResult r;
  // dT vanishes at an interior face exactly when the oriented coefficients of
  // its two cells agree; a spanning traversal then pins one value.
  for (const auto& [f, inc] : faces) {
    if (inc.size() != 2) continue;
    if (!(oriented(inc[0].cell) == oriented(inc[1].cell))) {
      r.witness = f;
      return r;
    }
  }
  r.consistent = true;
  r.value = oriented(order.front());
  return r;
}

}  // namespace gmt
