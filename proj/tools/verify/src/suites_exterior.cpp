#include "gmt/verify/oracles.hpp"
#include "gmt/verify/random.hpp"
#include "gmt/verify/suite.hpp"

namespace gmt::verify {
namespace {

MultiVector random_multivector(Rng& rng, std::size_t n, std::size_t m) {
  MultiVector a(n, m);
  for (Blade b : blades_of_degree(n, m))
    if (rng.coin(0.7)) a.set(b, rng.rational(4, 3));
  return a;
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(3, 3);
  return m;
}

CaseOutcome exterior_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));

  const auto v = random_multivector(rng, n, 1);
  if (n >= 2 && !wedge(v, v).is_zero()) return CaseOutcome::failure("a ^ a != 0", {{"a", v.describe()}});

  const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
  const std::size_t l = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n - k)));
  const auto x = random_multivector(rng, n, k);
  const auto y = random_multivector(rng, n, l);
  const Rational s = (k * l) % 2 ? -1 : 1;
  if (wedge(x, y) != s * wedge(y, x))
    return CaseOutcome::failure("graded commutativity fails", {{"x", x.describe()}, {"y", y.describe()}});

  const std::size_t p = static_cast<std::size_t>(rng.uniform(1, 5));
  const std::size_t q = static_cast<std::size_t>(rng.uniform(1, 5));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min({n, p, q}))));
  const LinearMap kmap{random_matrix(rng, p, n)};
  const LinearMap lmap{random_matrix(rng, q, p)};
  const auto a = random_multivector(rng, n, m);
  if (push(lmap.after(kmap), a) != push(lmap, push(kmap, a)))
    return CaseOutcome::failure("push is not functorial", {{"a", a.describe()}});

  // |span|^2 against the Gram determinant by permutation expansion
  const std::size_t dim = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
  std::vector<Point> pts(dim + 1, Point(n));
  for (auto& pt : pts)
    for (auto& c : pt) c = rng.rational(4, 3);
  RationalMatrix e(n, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < n; ++i) e(i, j) = pts[j + 1][i] - pts[0][i];
  const auto z = span_vector(pts);
  if (norm_squared(z) != leibniz_determinant(e.transpose() * e))
    return CaseOutcome::failure("|span|^2 differs from the Gram determinant", {{"span", z.describe()}});
  if (!z.is_zero() && !is_simple(z)) return CaseOutcome::failure("span vector reported not simple", {{"span", z.describe()}});
  return CaseOutcome::pass();
}

// (e_I | e^J) . e_K = e_I . (e_J ^ e_K) for every blade triple of n-space.
CaseOutcome adjunction_case(std::uint64_t, std::size_t index) {
  const std::size_t n = index + 1;
  for (std::size_t a = 0; a <= n; ++a)
    for (Blade bi : blades_of_degree(n, a))
      for (std::size_t kappa = 0; kappa <= a; ++kappa)
        for (Blade bj : blades_of_degree(n, kappa))
          for (Blade bk : blades_of_degree(n, a - kappa)) {
            MultiVector ei(n, a), ej(n, kappa), ek(n, a - kappa);
            CoVector wj(n, kappa);
            ei.set(bi, 1);
            ej.set(bj, 1);
            wj.set(bj, 1);
            ek.set(bk, 1);
            if (dot(interior(ei, wj), ek) != dot(ei, wedge(ej, ek)))
              return CaseOutcome::failure("adjunction fails for e" + std::to_string(bi) + ", e^" +
                                              std::to_string(bj) + ", e" + std::to_string(bk),
                                          {{"n", n}});
          }
  return CaseOutcome::pass();
}

}  // namespace

void register_exterior_suites(std::vector<Suite>& out) {
  out.push_back({"exterior-laws", "alternation, graded commutativity, functoriality, Gram determinants", 5000,
                 exterior_case, std::nullopt});
  out.push_back({"interior-adjunction", "contraction against wedge on all basis triples, n <= 5", 0,
                 adjunction_case, 5});
}

}  // namespace gmt::verify
