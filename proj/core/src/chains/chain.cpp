#include "gmt/chains/chain.hpp"

#include <set>

#include "gmt/error.hpp"

namespace gmt {

GChain::GChain(SimplicialComplex complex, std::size_t dimension, NormedGroup group)
    : complex_(std::move(complex)), m_(dimension), group_(std::move(group)) {}

GroupElement GChain::coefficient(const Cell& sorted) const {
  auto it = terms_.find(sorted);
  return it == terms_.end() ? GroupElement(group_) : it->second;
}

GChain& GChain::add_term(Cell vertices, const GroupElement& g) {
  if (!(g.group() == group_)) fail(ErrorCode::GroupMismatch, "coefficient from " + g.group().describe() +
                                                                 " in a chain over " + group_.describe());
  if (vertices.size() != m_ + 1) fail(ErrorCode::DimensionMismatch, "cell of the wrong dimension");
  const int parity = sort_with_parity(vertices);
  if (parity == 0) fail(ErrorCode::InvalidArgument, "degenerate cell with a repeated vertex");
  if (!complex_.contains(vertices)) fail(ErrorCode::CarrierMismatch, "cell is not in the complex");
  if (g.is_zero()) return *this;
  auto it = terms_.find(vertices);
  if (it == terms_.end()) {
    terms_.emplace(std::move(vertices), parity > 0 ? g : -g);
  } else {
    if (parity > 0) it->second += g;
    else it->second -= g;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GChain& GChain::add_term(Cell vertices, const Rational& value) {
  return add_term(std::move(vertices), GroupElement::scalar(group_, value));
}

void GChain::require_compatible(const GChain& o, const char* op) const {
  if (o.m_ != m_) fail(ErrorCode::DimensionMismatch, std::string(op) + ": chain dimensions differ");
  if (!(o.group_ == group_)) fail(ErrorCode::GroupMismatch, std::string(op) + ": coefficient groups differ");
  if (!(o.complex_ == complex_)) fail(ErrorCode::CarrierMismatch, std::string(op) + ": chains live on different complexes");
}

GChain& GChain::operator+=(const GChain& o) {
  require_compatible(o, "add");
  for (const auto& [c, g] : o.terms_) {
    auto it = terms_.find(c);
    if (it == terms_.end()) {
      terms_.emplace(c, g);
    } else {
      it->second += g;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

GChain& GChain::operator-=(const GChain& o) { return *this += -o; }

GChain GChain::operator-() const {
  GChain out = *this;
  for (auto& [c, g] : out.terms_) g = -g;
  return out;
}

bool operator==(const GChain& a, const GChain& b) {
  return a.m_ == b.m_ && a.group_ == b.group_ && a.terms_ == b.terms_ && a.complex_ == b.complex_;
}

std::vector<VertexId> GChain::support_vertices() const {
  std::set<VertexId> v;
  for (const auto& [c, g] : terms_) v.insert(c.begin(), c.end());
  return {v.begin(), v.end()};
}

std::string GChain::describe() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, g] : terms_) {
    if (!out.empty()) out += " + ";
    out += g.describe() + "*[";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    out += "]";
  }
  return out;
}

GChain add(const GChain& s, const GChain& t) { return s + t; }

GChain boundary(const GChain& s) {
  if (s.dimension() == 0) fail(ErrorCode::DimensionZero, "boundary of a 0-chain");
  GChain out(s.complex(), s.dimension() - 1, s.group());
  for (const auto& [c, g] : s.terms()) {
    const GroupElement neg = -g;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Cell face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out.add_term(std::move(face), i % 2 ? neg : g);
    }
  }
  return out;
}

}  // namespace gmt
