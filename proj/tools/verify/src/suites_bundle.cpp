#include "gmt/verify/random.hpp"
#include "gmt/verify/suite.hpp"

namespace gmt::verify {
namespace {

MultiVector random_plane(Rng& rng, std::size_t n, std::size_t m) {
  for (;;) {
    std::vector<Point> pts(m + 1, Point(n));
    for (auto& p : pts)
      for (auto& c : p) c = rng.rational(3, 2);
    auto z = span_vector(pts);
    if (!z.is_zero()) return z;
  }
}

LinearMap random_linear(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-3, 3), rng.uniform(1, 2));
  return {m};
}

NormedGroup random_bundle_group(Rng& rng) {
  const auto groups = chain_test_groups();
  if (rng.coin(0.8)) return rng.pick(groups);
  return NormedGroup::quotient_lattice(2, IntMatrix{{Integer(3), Integer(1)}});
}

json plane_inputs(const MultiVector& z, const GroupElement& g) {
  return {{"plane", z.describe()}, {"group", io::group_json(g.group())}, {"coefficient", io::element_json(g)}};
}

CaseOutcome norms_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
  const auto group = random_bundle_group(rng);
  const auto z = random_plane(rng, n, m);
  const auto g = random_element(rng, group);
  const auto gamma = BundleElement::make(z, g);
  const auto twin = BundleElement::make(-z, -g);
  const auto inputs = plane_inputs(z, g);
  if (!(gamma == twin)) return CaseOutcome::failure("(z, g) and (-z, -g) differ", inputs);
  if (gamma.norm() != g.norm()) return CaseOutcome::failure("|(z, g)| != |g|", inputs);

  // push forward by a map that keeps the plane
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::size_t nu = static_cast<std::size_t>(rng.uniform(static_cast<long>(m), 5));
    const auto h = random_linear(rng, nu, n);
    if (push(h, z).is_zero()) continue;
    const auto pushed = push(gamma, h);
    if (pushed.norm() != gamma.norm()) return CaseOutcome::failure("|h# gamma| != |gamma|", inputs);
    if (!(push(twin, h) == pushed)) return CaseOutcome::failure("push depends on the representative", inputs);
    break;
  }
  // slice by a map of full rank on the plane
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::size_t kappa = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(m)));
    const auto h = random_linear(rng, kappa, n);
    try {
      const auto cut = slice(gamma, h);
      if (cut.norm() != gamma.norm()) return CaseOutcome::failure("|gamma | h| != |gamma|", inputs);
      if (!(slice(twin, h) == cut)) return CaseOutcome::failure("slice depends on the representative", inputs);
      if (cut.degree() != m - kappa) return CaseOutcome::failure("slice has the wrong degree", inputs);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CorankCollapse) throw;
    }
  }
  // scaling by integral elements
  const long d = rng.uniform(-4, 4);
  const auto delta = BundleElement::make(z, GroupElement::scalar(NormedGroup::integers(), d));
  const auto scaled = scale(delta, g);
  const Rational bound = delta.norm() * g.norm();
  if (scaled.norm() > bound) return CaseOutcome::failure("|delta g| > |delta||g|", inputs);
  if (std::abs(d) <= 1 && scaled.norm() != bound)
    return CaseOutcome::failure("|delta g| != |delta||g| with |delta| <= 1", inputs);
  const auto delta_twin = BundleElement::make(-z, GroupElement::scalar(NormedGroup::integers(), -d));
  if (!(scale(delta_twin, g) == scaled)) return CaseOutcome::failure("scale depends on the representative", inputs);

  // products
  const std::size_t n2 = static_cast<std::size_t>(rng.uniform(1, 3));
  const std::size_t m2 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n2)));
  const auto w = m2 == 0 ? MultiVector::scalar(n2, 1) : random_plane(rng, n2, m2);
  const auto gamma2 = BundleElement::make(w, g);
  const auto prod = product(delta, gamma2);
  const Rational pb = delta.norm() * gamma2.norm();
  if (prod.norm() > pb) return CaseOutcome::failure("|delta x gamma| > |delta||gamma|", inputs);
  const bool exact = group.kind() == GroupKind::Integers || group.kind() == GroupKind::Rationals;
  if (exact && prod.norm() != pb) return CaseOutcome::failure("|delta x gamma| != |delta||gamma|", inputs);
  if (!(product(delta_twin, BundleElement::make(-w, -g)) == prod))
    return CaseOutcome::failure("product depends on the representatives", inputs);

  // fiber addition through the other representative
  const auto g2 = random_element(rng, group);
  if (!(fiber_add(gamma, BundleElement::make(-z, -g2)) == BundleElement::make(z, g + g2)))
    return CaseOutcome::failure("fiber addition depends on the representative", inputs);
  return CaseOutcome::pass();
}

CaseOutcome metric_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n - 1)));
  const auto group = rng.coin() ? NormedGroup::integers() : NormedGroup::rationals();
  std::vector<BundleElement> e;
  for (int i = 0; i < 3; ++i) {
    // planes and coefficients repeat now and then so that zero distances occur
    const auto z = i > 0 && rng.coin(0.2) ? e.back().plane().representative() : random_plane(rng, n, m);
    e.push_back(BundleElement::make(z, random_element(rng, group)));
  }
  const auto& [a, b, c] = std::tie(e[0], e[1], e[2]);
  json inputs = {{"a", a.describe()}, {"b", b.describe()}, {"c", c.describe()}};
  const auto dab = distance(a, b), dba = distance(b, a), dbc = distance(b, c), dac = distance(a, c);
  if (!distance(a, a).contains(0.0)) return CaseOutcome::failure("d(a, a) excludes 0", inputs);
  if (dab.lo() < 0 && !dab.contains(0.0)) return CaseOutcome::failure("negative distance", inputs);
  if (dab.hi() < dba.lo() || dba.hi() < dab.lo()) return CaseOutcome::failure("distance is not symmetric", inputs);
  if (dac.lo() > dab.hi() + dbc.hi()) return CaseOutcome::failure("triangle inequality fails", inputs);
  if (!(a == b) && dab.hi() <= 0) return CaseOutcome::failure("distinct elements at distance 0", inputs);
  return CaseOutcome::pass();
}

CaseOutcome alpha_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n - 1)));
  const auto z = random_plane(rng, n, m);
  const auto w = random_plane(rng, n, m);
  const Rational lhs = alpha_distance_squared(z, w);
  const Interval rhs = alpha_identity_rhs(z, w);
  json inputs = {{"z", z.describe()}, {"w", w.describe()}, {"lhs", to_string(lhs)},
                 {"rhs", {io::format_double(rhs.lo()), io::format_double(rhs.hi())}}};
  if (!rhs.contains(lhs)) return CaseOutcome::failure("alpha identity: enclosure misses the exact value", inputs);
  if (!(rhs.width() < 1e-10)) return CaseOutcome::failure("alpha identity: enclosure wider than 1e-10", inputs);
  return CaseOutcome::pass();
}

}  // namespace

void register_bundle_suites(std::vector<Suite>& out) {
  out.push_back({"bundle-norms", "push, slice, scale and product norm laws and representative independence", 2000,
                 norms_case, std::nullopt});
  out.push_back({"bundle-metric", "metric axioms of the bundle distance on random triples", 2000, metric_case,
                 std::nullopt});
  out.push_back({"alpha-identity", "projective distance identity certified by intervals", 2000, alpha_case,
                 std::nullopt});
}

}  // namespace gmt::verify
