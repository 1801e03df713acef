#include <algorithm>
#include <cmath>
#include <set>

#include "gmt/verify/oracles.hpp"
#include "gmt/verify/random.hpp"
#include "gmt/verify/suite.hpp"

namespace gmt::verify {
namespace {

Rational eval(const AffineMap& f, const Point& p) { return f.apply(p)[0]; }

/// A level of f strictly between the extreme support values that avoids
/// every support vertex value; nullopt when the support is empty or flat.
std::optional<Rational> regular_level(Rng& rng, const GChain& s, const AffineMap& f) {
  std::set<Rational> values;
  for (VertexId v : s.support_vertices()) values.insert(eval(f, s.complex().vertex(v)));
  if (values.size() < 2) return std::nullopt;
  const auto lo = *values.begin(), hi = *values.rbegin();
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Rational y = lo + (hi - lo) * Rational(rng.uniform(1, 63), 64);
    if (!values.count(y)) return y;
  }
  return std::nullopt;
}

CaseOutcome slice_identity_case(std::uint64_t seed, std::size_t index) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed, index, attempt);
    const std::size_t m = 1 + index % 3;
    const std::size_t n = m + static_cast<std::size_t>(rng.uniform(0, 1));
    const auto group = rng.pick(chain_test_groups());
    const auto complex = random_grid_complex(rng, m, n, m == 3 ? 1 : 2);
    const auto s = random_chain(rng, complex, m, group, 0.7);
    std::vector<Rational> coeffs(n);
    for (auto& c : coeffs) c = rng.rational(3, 3);
    const auto f = AffineMap::functional(coeffs, rng.rational(2, 3));
    const auto y = regular_level(rng, s, f);
    if (!y) {
      if (attempt < 16) continue;
      return CaseOutcome::failure("no regular level found");
    }
    const auto c = cut(s, f, *y);
    const auto lhs = boundary(c.upper);
    const auto rhs = slice(s, c.cut) + upper_part(refine(boundary(s), c.cut), c.cut);
    if (lhs != rhs)
      return CaseOutcome::failure("d(S|{f>y}) != <S,f,y> + (dS)|{f>y}",
                                  {{"chain", io::chain_json(s)}, {"f", io::affine_json(f)}, {"y", to_string(*y)}});
    return CaseOutcome::pass();
  }
}

// S over Z (dimension m) on K1 and T over G (dimension mu) on K2; a
// 0-chain lives on the vertices of a 1-dimensional grid.
CaseOutcome leibniz_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  std::size_t m = 0, mu = 0;
  switch (index % 3) {
    case 0: m = static_cast<std::size_t>(rng.uniform(1, 2)); mu = static_cast<std::size_t>(rng.uniform(1, 3 - static_cast<long>(m))); break;
    case 1: m = 0; mu = static_cast<std::size_t>(rng.uniform(1, 3)); break;
    default: m = static_cast<std::size_t>(rng.uniform(1, 3)); mu = 0; break;
  }
  const auto k1 = random_grid_complex(rng, std::max<std::size_t>(m, 1), std::max<std::size_t>(m, 1) + static_cast<std::size_t>(rng.uniform(0, 1)), m >= 2 ? 1 : 2);
  const auto k2 = random_grid_complex(rng, std::max<std::size_t>(mu, 1), std::max<std::size_t>(mu, 1), mu >= 2 ? 1 : 2);
  const auto group = rng.pick(chain_test_groups());
  const auto s = random_chain(rng, k1, m, NormedGroup::integers());
  const auto t = random_chain(rng, k2, mu, group);

  const auto lhs = boundary(product(s, t));
  GChain rhs(lhs.complex(), m + mu - 1, group);
  if (m > 0) rhs += product(boundary(s), t);
  if (mu > 0) rhs += m % 2 ? -product(s, boundary(t)) : product(s, boundary(t));
  if (lhs != rhs)
    return CaseOutcome::failure("d(S x T) != dS x T + (-1)^m S x dT",
                                {{"s", io::chain_json(s)}, {"t", io::chain_json(t)}});
  return CaseOutcome::pass();
}

RationalMatrix invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(rng.uniform(-3, 3), rng.uniform(1, 2));
    if (rank(a) == n) return a;
  }
}

// f = F(x) + a and g = f + v with v off the image hyperplane, so the
// straight homotopy embeds the prism; half of the cases also bend the
// linear part of g slightly and keep it when the overlay check passes.
CaseOutcome homotopy_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t m = index % 3;
  const std::size_t k = std::max<std::size_t>(m, 1);
  const std::size_t n = k + 1;
  const auto complex = random_grid_complex(rng, k, n, 2);
  const auto group = rng.pick(chain_test_groups());
  const auto s = random_chain(rng, complex, m, group, 0.7);
  const auto lin = invertible(rng, n);
  std::vector<Rational> shift(n);
  for (auto& x : shift) x = rng.rational(3, 2);
  const AffineMap f{lin, shift};

  // v must leave the image plane of a top cell
  const auto top = complex.cells(k).front();
  std::vector<Rational> v(n);
  for (;;) {
    for (auto& x : v) x = rng.rational(3, 2);
    RationalMatrix e(n, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
      const auto a = f.apply(complex.vertex(top[j + 1])), b = f.apply(complex.vertex(top[0]));
      for (std::size_t i = 0; i < n; ++i) e(i, j) = a[i] - b[i];
    }
    for (std::size_t i = 0; i < n; ++i) e(i, k) = v[i];
    if (rank(e) == k + 1) break;
  }
  const Rational t(rng.uniform(1, 6), rng.uniform(1, 3));

  auto check = [&](const AffineMap& g) -> std::optional<CaseOutcome> {
    GChain h(SimplicialComplex(), m + 1, group), hd(SimplicialComplex(), m, group);
    try {
      h = homotopy_fill(f, g, s, t);
      if (m > 0) hd = homotopy_fill(f, g, boundary(s), t);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::OverlayUnsupported) return std::nullopt;
      throw;
    }
    GeometricChain lhs = GeometricChain(push_forward(s, g)) - GeometricChain(push_forward(s, f));
    GeometricChain rhs = GeometricChain(boundary(h));
    if (m > 0) rhs += GeometricChain(hd);
    if (lhs == rhs) return CaseOutcome::pass();
    return CaseOutcome::failure("g#S - f#S != dH + H(dS)", {{"chain", io::chain_json(s)},
                                                           {"f", io::affine_json(f)},
                                                           {"g", io::affine_json(g)},
                                                           {"t", to_string(t)}});
  };

  if (index % 2) {
    for (int attempt = 0; attempt < 3; ++attempt) {
      RationalMatrix bent = lin;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) bent(i, j) += Rational(rng.uniform(-1, 1), 20);
      std::vector<Rational> moved(n);
      for (std::size_t i = 0; i < n; ++i) moved[i] = shift[i] + v[i];
      if (auto r = check(AffineMap{bent, moved})) return *r;
    }
  }
  std::vector<Rational> moved(n);
  for (std::size_t i = 0; i < n; ++i) moved[i] = shift[i] + v[i];
  if (auto r = check(AffineMap{lin, moved})) return *r;
  return CaseOutcome::failure("translation homotopy rejected by the overlay check",
                              {{"chain", io::chain_json(s)}, {"f", io::affine_json(f)}});
}

CaseOutcome push_case(std::uint64_t seed, std::size_t index) {
  for (std::uint64_t attempt = 0; attempt < 12; ++attempt) {
    Rng rng(seed, index, attempt);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 2));
    const std::size_t n = k + static_cast<std::size_t>(rng.uniform(0, 1));
    const auto complex = random_grid_complex(rng, k, n, 2);
    const std::size_t m = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k)));
    const auto s = random_chain(rng, complex, m, rng.pick(chain_test_groups()));
    const bool injective = attempt >= 8;
    const std::size_t p = injective ? n + 1 : static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t q = injective ? p : static_cast<std::size_t>(rng.uniform(1, 3));
    const auto f = injective ? random_injective_affine(rng, n, p) : random_affine(rng, n, p);
    const auto g = injective ? random_injective_affine(rng, p, q) : random_affine(rng, p, q);
    try {
      const auto lhs = GeometricChain(push_forward(s, g.after(f)));
      const auto rhs = GeometricChain(push_forward(push_forward(s, f), g));
      if (lhs != rhs)
        return CaseOutcome::failure("(G F)# S != G# F# S",
                                    {{"chain", io::chain_json(s)}, {"f", io::affine_json(f)}, {"g", io::affine_json(g)}});
      return CaseOutcome::pass();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OverlayUnsupported) throw;
    }
  }
  return CaseOutcome::failure("every attempt hit the overlay precondition");
}

// Rational unit vectors from Pythagorean triples and quadruples.
std::vector<Rational> unit_direction(Rng& rng, std::size_t n) {
  static const std::vector<std::vector<long>> planar = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {1, 0, 1}};
  static const std::vector<std::vector<long>> spatial = {{1, 2, 2, 3}, {2, 3, 6, 7}, {1, 4, 8, 9}, {1, 0, 0, 1}};
  const auto& t = n == 2 ? rng.pick(planar) : rng.pick(spatial);
  std::vector<Rational> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = Rational(t[i] * (rng.coin() ? 1 : -1), t[n]);
  std::shuffle(a.begin(), a.end(), rng.engine());
  return a;
}

CaseOutcome coarea_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 1));
  const auto complex = random_grid_complex(rng, 2, n, 2);
  const auto group = rng.pick(chain_test_groups());
  GChain s(complex, 2, group);
  for (const auto& c : complex.cells(2))
    if (rng.coin(0.7)) s.add_term(c, random_nonzero_element(rng, group));
  if (s.is_zero()) s.add_term(complex.cells(2).front(), random_nonzero_element(rng, group));
  const auto a = unit_direction(rng, n);
  const auto f = AffineMap::functional(a, rng.rational(2, 3));

  // sum |g| vol(cell) |P_cell grad f|
  double want = 0;
  for (const auto& [c, g] : s.terms()) {
    const auto pts = complex.points(c);
    RationalMatrix e(n, 2);
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i = 0; i < n; ++i) e(i, j) = pts[j + 1][i] - pts[0][i];
    const double vol = std::sqrt(to_double(leibniz_determinant(e.transpose() * e))) / 2;
    want += to_double(g.norm()) * vol * std::sqrt(to_double(projected_norm_squared(e, a)));
  }

  // slice mass is affine between consecutive vertex values: composite
  // midpoint rule on every such interval, at least 512 levels in total
  std::set<Rational> breaks;
  for (VertexId v : s.support_vertices()) breaks.insert(eval(f, complex.vertex(v)));
  const std::vector<Rational> b(breaks.begin(), breaks.end());
  const std::size_t per = (512 + b.size() - 2) / std::max<std::size_t>(b.size() - 1, 1);
  double got = 0;
  std::size_t levels = 0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const Rational h = (b[i + 1] - b[i]) / static_cast<long>(per);
    for (std::size_t j = 0; j < per; ++j) {
      const Rational y = b[i] + h * Rational(static_cast<long>(2 * j + 1), 2);
      got += mass(slice(s, f, y)).value * to_double(h);
      ++levels;
    }
  }
  json inputs = {{"chain", io::chain_json(s)}, {"f", io::affine_json(f)},
                 {"quadrature", io::format_double(got)}, {"weighted_mass", io::format_double(want)}};
  if (levels < 512) return CaseOutcome::failure("fewer than 512 levels", inputs);
  if (std::abs(got - want) > 1e-6 * std::max(std::abs(want), 1e-300))
    return CaseOutcome::failure("coarea quadrature differs from the weighted mass", inputs);
  return CaseOutcome::pass();
}

}  // namespace

void register_calculus_suites(std::vector<Suite>& out) {
  out.push_back({"slice-identity", "d(S|{f>y}) = <S,f,y> + (dS)|{f>y} for m in {1, 2, 3}", 300,
                 slice_identity_case, std::nullopt});
  out.push_back({"leibniz", "product rule in the three dimension splits", 150, leibniz_case, std::nullopt});
  out.push_back({"homotopy", "homotopy formula for straight homotopies", 150, homotopy_case, std::nullopt});
  out.push_back({"push-functoriality", "(G F)# = G# F# where the overlay precondition holds", 300, push_case,
                 std::nullopt});
  out.push_back({"coarea", "integrated slice mass against the Jacobian-weighted mass", 24, coarea_case,
                 std::nullopt});
}

}  // namespace gmt::verify
