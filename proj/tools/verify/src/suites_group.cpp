#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gmt/verify/oracles.hpp"
#include "gmt/verify/random.hpp"
#include "gmt/verify/suite.hpp"

namespace gmt::verify {
namespace {

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

NormedGroup norm_axiom_group(Rng& rng, std::size_t kind) {
  switch (kind) {
    case 0: return NormedGroup::integers();
    case 1: return NormedGroup::cyclic(rng.uniform(1, 30));
    case 2: return NormedGroup::rationals();
    case 3: return NormedGroup::direct_sum({NormedGroup::integers(), NormedGroup::cyclic(rng.uniform(2, 9))});
    default: {
      const std::size_t rank = static_cast<std::size_t>(rng.uniform(1, 3));
      IntMatrix gens(0, rank);
      const long rows = rng.uniform(0, static_cast<long>(rank));
      for (long r = 0; r < rows; ++r) {
        std::vector<Integer> row(rank);
        for (auto& x : row) x = rng.uniform(-4, 4);
        gens.append_row(row);
      }
      return NormedGroup::quotient_lattice(rank, gens);
    }
  }
}

CaseOutcome norm_axioms_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const auto g = norm_axiom_group(rng, index % 5);
  const auto a = random_element(rng, g);
  const auto b = random_element(rng, g);
  auto inputs = [&] {
    return json{{"group", io::group_json(g)}, {"a", io::element_json(a)}, {"b", io::element_json(b)}};
  };
  if ((a + b).norm() > a.norm() + b.norm()) return CaseOutcome::failure("subadditivity fails", inputs());
  if ((-a).norm() != a.norm()) return CaseOutcome::failure("norm(-a) != norm(a)", inputs());
  if ((a.norm() == 0) != a.is_zero()) return CaseOutcome::failure("definiteness fails", inputs());
  if (a.norm() < 0) return CaseOutcome::failure("negative norm", inputs());
  return CaseOutcome::pass();
}

CaseOutcome quotient_norm_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  if (index % 2 == 0) {
    const long d = 1 + static_cast<long>((index / 2) % 12);
    const long k = rng.uniform(-3 * d, 3 * d);
    const auto lattice = NormedGroup::quotient_lattice(1, IntMatrix{{Integer(d)}});
    const auto cyc = NormedGroup::cyclic(d);
    const GroupElement x(lattice, {Rational(k)});
    const GroupElement y(cyc, {Rational(k)});
    if (x.norm() != y.norm())
      return CaseOutcome::failure("Z/<d> and Z/d disagree", {{"d", d}, {"k", k}});
    return CaseOutcome::pass();
  }
  const std::size_t r = static_cast<std::size_t>(rng.uniform(2, 3));
  IntMatrix basis(r, r);
  do {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) basis(i, j) = rng.uniform(-4, 4);
  } while (integer_determinant(basis) == 0);
  std::vector<Integer> v(r);
  for (auto& x : v) x = rng.uniform(-3, 3);
  const auto g = NormedGroup::quotient_lattice(r, basis);
  std::vector<Rational> slots(v.begin(), v.end());
  const Rational got = GroupElement(g, slots).norm();
  const Integer want = brute_quotient_norm(basis, v);
  if (got != Rational(want))
    return CaseOutcome::failure("quotient norm " + to_string(got) + " but brute force gives " + to_string(want),
                                {{"basis", matrix_json(basis)}, {"v", vector_json(v)}});
  return CaseOutcome::pass();
}

CaseOutcome smith_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
  const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
  IntMatrix m(rows, cols);
  const bool sparse = rng.coin(0.3);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = sparse && rng.coin(0.6) ? 0 : rng.uniform(-20, 20);
  const auto s = smith_normal_form(m);
  auto bad = [&](const std::string& why) { return CaseOutcome::failure(why, {{"matrix", matrix_json(m)}}); };
  if (s.U * m * s.V != s.D) return bad("U M V != D");
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && s.D(i, j) != 0) return bad("D is not diagonal");
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return bad("negative invariant factor");
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 && diag[i + 1] != 0) return bad("zero factor before a nonzero one");
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return bad("divisibility chain broken");
    }
  }
  if (abs(leibniz_determinant(to_rational(s.U))) != 1 || abs(leibniz_determinant(to_rational(s.V))) != 1)
    return bad("U or V is not unimodular");
  return CaseOutcome::pass();
}

// Invariant-factor chains e_1 | e_2 | ... (all >= 2) covering every group of
// order <= 200 plus every chain of length <= 3 with factors <= 12.
const std::vector<std::vector<long>>& finite_groups() {
  static const std::vector<std::vector<long>> all = [] {
    std::set<std::vector<long>> out{{1}};
    std::vector<long> chain;
    std::function<void(long, long)> grow = [&](long last, long order) {
      if (!chain.empty()) out.insert(chain);
      for (long next = last; order * next <= 200; next += last) {
        chain.push_back(next);
        grow(next, order * next);
        chain.pop_back();
      }
    };
    for (long e = 2; e <= 200; ++e) {
      chain = {e};
      grow(e, e);
    }
    std::function<void(std::size_t)> small = [&](std::size_t depth) {
      if (!chain.empty()) out.insert(chain);
      if (depth == 3) return;
      const long last = chain.empty() ? 2 : chain.back();
      for (long next = last; next <= 12; next += last) {
        if (!chain.empty() && next % chain.back() != 0) continue;
        chain.push_back(next);
        small(depth + 1);
        chain.pop_back();
      }
    };
    chain.clear();
    small(0);
    return std::vector<std::vector<long>>(out.begin(), out.end());
  }();
  return all;
}

constexpr long kMaxD = 12;

// Presentation of Z/e_1 + ... with the basis scrambled by a random
// unimodular change, so the reduction has work to do.
Presentation scrambled(Rng& rng, const std::vector<long>& factors) {
  const std::size_t k = factors.size();
  IntMatrix rel(k, k);
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = factors[i];
  for (int step = 0; step < 4; ++step) {
    const std::size_t a = rng.index(k), b = rng.index(k);
    if (a == b) continue;
    rel.add_col_multiple(a, b, Integer(rng.uniform(-2, 2)));
    rel.add_row_multiple(b, a, Integer(rng.uniform(-1, 1)));
  }
  return {k, rel};
}

CaseOutcome tensor_case(std::uint64_t seed, std::size_t index) {
  const auto& groups = finite_groups();
  const auto& factors = groups[index / (kMaxD + 1)];
  const long d = static_cast<long>(index % (kMaxD + 1));
  Rng rng(seed, index);
  const auto p = scrambled(rng, factors);
  const auto q = tensor_mod_d(p, Integer(d));
  const auto inv = invariants(q);
  const long limit = *std::max_element(factors.begin(), factors.end());
  std::vector<Integer> all = inv.torsion;
  for (std::size_t i = 0; i < inv.free_rank; ++i) all.emplace_back(0);
  const auto want = quotient_torsion_counts(factors, d, limit);
  const auto got = torsion_counts_of(all, limit);
  if (inv.free_rank != 0 || want != got) {
    json f = json::array();
    for (long e : factors) f.push_back(e);
    return CaseOutcome::failure("A/dA is " + inv.describe() + " but enumeration disagrees",
                                {{"factors", f}, {"d", d}, {"relations", matrix_json(p.relations)}});
  }
  return CaseOutcome::pass();
}

struct RandomHom {
  GroupHom f;
  std::optional<long> source_order;
  std::optional<long> target_order;
};

RandomHom random_hom(Rng& rng) {
  RandomHom out;
  const std::size_t a = static_cast<std::size_t>(rng.uniform(1, 2));
  const std::size_t b = static_cast<std::size_t>(rng.uniform(1, 2));
  std::vector<Integer> fa(a);
  long order = 1;
  bool finite = true;
  for (auto& x : fa) {
    const long e = rng.coin(0.2) ? 0 : rng.uniform(1, 12);
    x = e;
    if (e == 0) finite = false;
    order *= std::max(e, 1L);
  }
  out.f.target = Presentation::diagonal(fa);
  if (finite) out.target_order = order;
  out.f.matrix = IntMatrix(a, b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) out.f.matrix(i, j) = rng.uniform(-4, 4);
  // Source relations must land in the target relations: multiples of the
  // target exponent when it is finite, otherwise kernel vectors of F.
  IntMatrix rel(0, b);
  if (finite && rng.coin(0.7)) {
    long exponent = 1;
    for (const auto& x : fa) exponent = std::lcm(exponent, x.convert_to<long>());
    long src = 1;
    for (std::size_t j = 0; j < b; ++j) {
      std::vector<Integer> row(b, 0);
      const long c = exponent * rng.uniform(1, 2);
      row[j] = c;
      src *= c;
      rel.append_row(row);
    }
    out.source_order = src;
  } else {
    for (const auto& v : integer_kernel(out.f.matrix)) {
      std::vector<Integer> row(v.begin(), v.end());
      const long c = rng.uniform(0, 3);
      for (auto& x : row) x *= c;
      rel.append_row(row);
    }
  }
  out.f.source = {b, rel};
  return out;
}

CaseOutcome mono_case(std::uint64_t seed, std::size_t index) {
  Rng rng(seed, index);
  RandomHom h;
  if (index == 0) {
    // A = Z, B = 2Z as the subgroup generated by 2.
    h.f = {Presentation::free(1), Presentation::free(1), IntMatrix{{Integer(2)}}};
  } else {
    h = random_hom(rng);
  }
  const auto& f = h.f;
  auto inputs = [&](long d) {
    return json{{"source", matrix_json(f.source.relations)},
                {"source_generators", f.source.generators},
                {"target", matrix_json(f.target.relations)},
                {"target_generators", f.target.generators},
                {"matrix", matrix_json(f.matrix)},
                {"d", d}};
  };
  if (!f.well_defined()) return CaseOutcome::failure("generated homomorphism is not well defined", inputs(0));
  const auto verdicts = check_mono_condition(f, static_cast<unsigned>(kMaxD));
  for (const auto& v : verdicts) {
    const long d = v.d.convert_to<long>();
    long ns = d, nt = d;
    if (d == 0) {
      if (!h.source_order || !h.target_order) continue;
      ns = *h.source_order;
      nt = *h.target_order;
    }
    if (ns > 200 || nt > 200) continue;
    const auto brute = brute_mono(f, d, ns, nt);
    if (brute.univalent != v.univalent)
      return CaseOutcome::failure("univalence verdict disagrees with enumeration at d = " + std::to_string(d),
                                  inputs(d));
    if (!v.univalent) {
      // the reported witness must lie in the kernel and outside dB
      IntMatrix lb = f.source.relations, la = f.target.relations;
      if (lb.cols() != f.source.generators) lb = IntMatrix(0, f.source.generators);
      if (la.cols() != f.target.generators) la = IntMatrix(0, f.target.generators);
      for (std::size_t i = 0; d > 0 && i < f.source.generators; ++i) {
        std::vector<Integer> row(f.source.generators, 0);
        row[i] = d;
        lb.append_row(row);
      }
      for (std::size_t i = 0; d > 0 && i < f.target.generators; ++i) {
        std::vector<Integer> row(f.target.generators, 0);
        row[i] = d;
        la.append_row(row);
      }
      const ResidueLattice in_b(lb, f.source.generators, ns);
      const ResidueLattice in_a(la, f.target.generators, nt);
      std::vector<Integer> image(f.target.generators, 0);
      for (std::size_t r = 0; r < f.target.generators; ++r)
        for (std::size_t c = 0; c < f.source.generators; ++c) image[r] += f.matrix(r, c) * v.witness.at(c);
      if (!in_a.contains(image) || in_b.contains(v.witness))
        return CaseOutcome::failure("kernel witness is wrong at d = " + std::to_string(d), inputs(d));
    }
  }
  if (index == 0 && verdicts[2].univalent)
    return CaseOutcome::failure("A = Z, B = 2Z, d = 2 must not be univalent", inputs(2));
  return CaseOutcome::pass();
}

}  // namespace

void register_group_suites(std::vector<Suite>& out) {
  out.push_back({"group-norm-axioms", "subadditivity, symmetry and definiteness of every group norm", 20000,
                 norm_axioms_case, std::nullopt});
  out.push_back({"quotient-norm", "Z/<d> against Z/d, and lattice quotient norms against residue scans", 2000,
                 quotient_norm_case, std::nullopt});
  out.push_back({"smith", "U M V = D, divisibility and unimodularity on random matrices up to 6x6", 10000,
                 smith_case, std::nullopt});
  out.push_back({"tensor-mod-d", "A/dA against enumeration for every listed finite group and d <= 12", 0,
                 tensor_case, finite_groups().size() * (kMaxD + 1)});
  out.push_back({"mono-condition", "univalence of f_d against kernel enumeration", 2000, mono_case, std::nullopt});
}

}  // namespace gmt::verify
