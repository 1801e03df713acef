#include <algorithm>
#include <numeric>

#include "gmt/chains/chain.hpp"
#include "gmt/error.hpp"

namespace gmt {

namespace {

Rational factorial(std::size_t m) {
  Integer f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return Rational(f);
}

}  // namespace

Interval cell_volume(const SimplicialComplex& k, const Cell& c) {
  const MultiVector s = k.span(c);
  return Interval::sqrt_of(dot(s, s)) / Interval::enclose(factorial(c.size() - 1));
}

MassReport mass(const GChain& s) {
  MassReport r;
  r.total = Interval(0.0);
  const Interval fact = Interval::enclose(factorial(s.dimension()));
  for (const auto& [c, g] : s.terms()) {
    const MultiVector span = s.complex().span(c);
    Rational gram = dot(span, span);
    r.total += Interval::enclose(g.norm()) * Interval::sqrt_of(gram) / fact;
    r.gram.emplace_back(c, std::move(gram));
  }
  r.value = std::clamp(r.total.mid(), r.total.lo(), r.total.hi());
  return r;
}

GeometricChain::GeometricChain(std::size_t ambient, std::size_t dimension, NormedGroup group)
    : n_(ambient), m_(dimension), group_(std::move(group)) {}

GeometricChain::GeometricChain(const GChain& s)
    : n_(s.complex().ambient()), m_(s.dimension()), group_(s.group()) {
  for (const auto& [c, g] : s.terms()) add_term(s.complex().points(c), g);
}

void GeometricChain::add_term(std::vector<Point> points, const GroupElement& g) {
  if (points.size() != m_ + 1) fail(ErrorCode::DimensionMismatch, "simplex of the wrong dimension");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  int parity = 1;
  std::vector<bool> seen(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  Key key;
  for (std::size_t i : order) key.push_back(std::move(points[i]));
  for (std::size_t i = 1; i < key.size(); ++i)
    if (key[i] == key[i - 1]) fail(ErrorCode::InvalidArgument, "simplex repeats a point");
  if (g.is_zero()) return;
  const GroupElement signed_g = parity > 0 ? g : -g;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), signed_g);
  } else {
    it->second += signed_g;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GeometricChain& GeometricChain::operator+=(const GeometricChain& o) {
  if (o.m_ != m_ || o.n_ != n_) fail(ErrorCode::DimensionMismatch, "geometric chains differ in dimension");
  if (!(o.group_ == group_)) fail(ErrorCode::GroupMismatch, "geometric chains differ in group");
  for (const auto& [k, g] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, g);
    } else {
      it->second += g;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

GeometricChain& GeometricChain::operator-=(const GeometricChain& o) { return *this += -o; }

GeometricChain GeometricChain::operator-() const {
  GeometricChain out = *this;
  for (auto& [k, g] : out.terms_) g = -g;
  return out;
}

bool operator==(const GeometricChain& a, const GeometricChain& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.group_ == b.group_ && a.terms_ == b.terms_;
}

std::string GeometricChain::describe() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, g] : terms_) {
    if (!out.empty()) out += " + ";
    out += g.describe() + "*[";
    for (std::size_t i = 0; i < k.size(); ++i) {
      out += i ? ";" : "";
      for (std::size_t j = 0; j < k[i].size(); ++j) out += (j ? "," : "") + to_string(k[i][j]);
    }
    out += "]";
  }
  return out;
}

}  // namespace gmt
