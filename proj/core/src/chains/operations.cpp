#include "gmt/chains/chain.hpp"
#include "gmt/error.hpp"
#include "gmt/group/presentation.hpp"

namespace gmt {

namespace {

void require_integral(const GChain& s, const char* op) {
  if (s.group().kind() != GroupKind::Integers)
    fail(ErrorCode::GroupMismatch, std::string(op) + " needs an integral chain, got " + s.group().describe());
}

Integer integral_value(const GroupElement& g) { return boost::multiprecision::numerator(g.slots()[0]); }

}  // namespace

GChain rho_scale(const GChain& s, const GroupElement& g) {
  require_integral(s, "rho_scale");
  GChain out(s.complex(), s.dimension(), g.group());
  // p(z, d) . g = p(z, d g) along the same orientation z.
  for (const auto& [c, d] : s.terms()) out.add_term(c, g.times(integral_value(d)));
  return out;
}

GChain restrict(const GChain& s, const std::function<bool(const Cell&)>& keep) {
  GChain out(s.complex(), s.dimension(), s.group());
  for (const auto& [c, g] : s.terms())
    if (keep(c)) out.add_term(c, g);
  return out;
}

GChain restrict(const GChain& s, const SimplicialComplex& sub) {
  const auto& k = s.complex();
  return restrict(s, [&](const Cell& c) {
    Cell image;
    for (VertexId v : c) {
      auto w = sub.find_vertex(k.vertex(v));
      if (!w) return false;
      image.push_back(*w);
    }
    if (sort_with_parity(image) == 0) return false;
    return sub.contains(image);
  });
}

GChain mod_d_reduce(const GChain& s, const Integer& d) {
  require_integral(s, "mod_d_reduce");
  const auto target = NormedGroup::cyclic(d);
  GChain out(s.complex(), s.dimension(), target);
  for (const auto& [c, g] : s.terms()) out.add_term(c, GroupElement::scalar(target, g.slots()[0]));
  return out;
}

GChain to_rational(const GChain& s) {
  if (s.group().kind() != GroupKind::Integers && s.group().kind() != GroupKind::Rationals)
    fail(ErrorCode::GroupMismatch, "only integral or rational chains have rational images");
  const auto q = NormedGroup::rationals();
  GChain out(s.complex(), s.dimension(), q);
  for (const auto& [c, g] : s.terms()) out.add_term(c, GroupElement::scalar(q, g.slots()[0]));
  return out;
}

RhoMonoVerdict rho_mono_check(const std::vector<std::pair<GChain, GroupElement>>& terms, const NormedGroup& group) {
  RhoMonoVerdict v{true, true};
  if (terms.empty()) return v;
  const Presentation pres = group.presentation();
  const std::size_t w = group.width();

  // Route one: chain arithmetic in G.
  GChain sum(terms[0].first.complex(), terms[0].first.dimension(), group);
  for (const auto& [s, h] : terms) {
    if (!(h.group() == group)) fail(ErrorCode::GroupMismatch, "rho_mono_check: coefficient outside the group");
    sum += rho_scale(s, h);
  }
  v.chain_zero = sum.is_zero();

  // Route two: C_m (x) G is a sum of copies of G, one per cell; the cell
  // component sum_t S_t(cell) lift(h_t) in Z^w vanishes iff it lies in the
  // relation lattice.
  std::map<Cell, std::vector<Integer>> lifted;
  for (const auto& [s, h] : terms)
    for (const auto& [c, d] : s.terms()) {
      auto& x = lifted.try_emplace(c, std::vector<Integer>(w)).first->second;
      const Integer k = integral_value(d);
      for (std::size_t i = 0; i < w; ++i) x[i] += k * boost::multiprecision::numerator(h.slots()[i]);
    }
  for (const auto& [c, x] : lifted) {
    bool zero = true;
    for (const auto& e : x) zero = zero && e == 0;
    if (zero) continue;
    if (!in_row_lattice(pres.relations, x)) {
      v.tensor_zero = false;
      break;
    }
  }
  return v;
}

}  // namespace gmt
