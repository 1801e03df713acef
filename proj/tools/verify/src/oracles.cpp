#include "gmt/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gmt::verify {

Rational leibniz_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

// Mixed-radix enumeration of Z/a_1 + ... + Z/a_k.
struct Enumerator {
  std::vector<long> radix;
  std::size_t size() const {
    std::size_t n = 1;
    for (long r : radix) n *= static_cast<std::size_t>(r);
    return n;
  }
  std::size_t encode(const std::vector<long>& x) const {
    std::size_t code = 0;
    for (std::size_t i = radix.size(); i-- > 0;) code = code * static_cast<std::size_t>(radix[i]) + static_cast<std::size_t>(x[i]);
    return code;
  }
  std::vector<long> decode(std::size_t code) const {
    std::vector<long> x(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      x[i] = static_cast<long>(code % static_cast<std::size_t>(radix[i]));
      code /= static_cast<std::size_t>(radix[i]);
    }
    return x;
  }
  std::vector<long> times(const std::vector<long>& x, long k) const {
    std::vector<long> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = ((x[i] * (k % radix[i])) % radix[i] + radix[i]) % radix[i];
    return y;
  }
};

}  // namespace

std::vector<std::uint64_t> quotient_torsion_counts(const std::vector<long>& factors, long d, long limit) {
  Enumerator e{factors};
  const std::size_t n = e.size();
  std::vector<char> in_dA(n, 0);
  std::size_t dA_size = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t img = e.encode(e.times(e.decode(c), d));
    if (!in_dA[img]) {
      in_dA[img] = 1;
      ++dA_size;
    }
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(limit) + 1, 0);
  for (long k = 1; k <= limit; ++k) {
    std::size_t hits = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (in_dA[e.encode(e.times(e.decode(c), k))]) ++hits;
    // every coset of dA contributes |dA| elements
    counts[static_cast<std::size_t>(k)] = hits / dA_size;
  }
  return counts;
}

std::vector<std::uint64_t> torsion_counts_of(const std::vector<Integer>& invariants, long limit) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(limit) + 1, 0);
  for (long k = 1; k <= limit; ++k) {
    std::uint64_t c = 1;
    for (const auto& e : invariants) {
      const long ev = e.convert_to<long>();
      c *= static_cast<std::uint64_t>(ev == 0 ? k : std::gcd(k, ev));
    }
    counts[static_cast<std::size_t>(k)] = c;
  }
  return counts;
}

ResidueLattice::ResidueLattice(const IntMatrix& gens, std::size_t width, long modulus)
    : width_(width), n_(modulus) {
  std::vector<std::vector<long>> g;
  for (std::size_t r = 0; r < gens.rows(); ++r) {
    std::vector<Integer> row(gens.row(r).begin(), gens.row(r).end());
    g.push_back(reduce(row));
  }
  std::vector<std::vector<long>> frontier{std::vector<long>(width_, 0)};
  members_.insert(frontier.front());
  while (!frontier.empty()) {
    auto x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& gen : g) {
      std::vector<long> y(width_);
      for (std::size_t i = 0; i < width_; ++i) y[i] = (x[i] + gen[i]) % n_;
      if (members_.insert(y).second) frontier.push_back(std::move(y));
    }
  }
}

std::vector<long> ResidueLattice::reduce(const std::vector<Integer>& x) const {
  std::vector<long> out(width_);
  for (std::size_t i = 0; i < width_; ++i) {
    Integer r = x[i] % n_;
    if (r < 0) r += n_;
    out[i] = r.convert_to<long>();
  }
  return out;
}

bool ResidueLattice::contains(const std::vector<Integer>& x) const { return members_.count(reduce(x)) > 0; }

BruteMono brute_mono(const GroupHom& f, long d, long n_source, long n_target) {
  const std::size_t b = f.source.generators;
  const std::size_t a = f.target.generators;
  IntMatrix lb = f.source.relations;
  IntMatrix la = f.target.relations;
  if (d > 0) {
    for (std::size_t i = 0; i < b; ++i) {
      std::vector<Integer> row(b, 0);
      row[i] = d;
      lb.append_row(row);
    }
    for (std::size_t i = 0; i < a; ++i) {
      std::vector<Integer> row(a, 0);
      row[i] = d;
      la.append_row(row);
    }
  }
  if (lb.cols() != b) lb = IntMatrix(0, b);
  if (la.cols() != a) la = IntMatrix(0, a);
  const ResidueLattice in_b(lb, b, n_source);
  const ResidueLattice in_a(la, a, n_target);

  BruteMono out;
  std::vector<long> x(b, 0);
  for (;;) {
    std::vector<Integer> xi(x.begin(), x.end());
    std::vector<Integer> image(a, 0);
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < b; ++c) image[r] += f.matrix(r, c) * xi[c];
    if (in_a.contains(image) && !in_b.contains(xi)) {
      out.univalent = false;
      out.witness = xi;
      return out;
    }
    std::size_t i = 0;
    while (i < b && ++x[i] == n_source) x[i++] = 0;
    if (i == b) break;
  }
  return out;
}

Integer brute_quotient_norm(const IntMatrix& basis, const std::vector<Integer>& v) {
  const std::size_t r = v.size();
  RationalMatrix bt = to_rational(basis).transpose();
  auto inv = inverse(bt);
  if (!inv) fail(ErrorCode::InvalidArgument, "brute_quotient_norm: basis must be square and nonsingular");
  Integer radius = 0;
  for (const auto& x : v) radius += abs(x);
  const long rad = radius.convert_to<long>();
  Integer best = radius;
  std::vector<long> z(r, -rad);
  for (;;) {
    Integer l1 = 0;
    for (long c : z) l1 += std::abs(c);
    if (l1 < best) {
      std::vector<Rational> diff(r);
      for (std::size_t i = 0; i < r; ++i) diff[i] = Rational(v[i] - z[i]);
      bool integral = true;
      for (const auto& c : inv->apply(diff)) integral = integral && is_integral(c);
      if (integral) best = l1;
    }
    std::size_t i = 0;
    while (i < r && ++z[i] > rad) z[i++] = -rad;
    if (i == r) break;
  }
  return best;
}

double flat_norm_by_vertices(const std::vector<Rational>& s, const std::vector<double>& w,
                             const std::vector<std::vector<int>>& incidence, const std::vector<double>& u) {
  const std::size_t k = u.size();
  auto objective = [&](const std::vector<Rational>& r) {
    double total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Rational q = s[i];
      for (std::size_t t = 0; t < k; ++t) q -= incidence[i][t] * r[t];
      total += w[i] * std::abs(to_double(q));
    }
    for (std::size_t t = 0; t < k; ++t) total += u[t] * std::abs(to_double(r[t]));
    return total;
  };
  if (k == 0) return objective({});

  // Hyperplanes a . R = b where the objective has a kink.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Rational> row(k);
    bool nonzero = false;
    for (std::size_t t = 0; t < k; ++t) {
      row[t] = incidence[i][t];
      nonzero = nonzero || incidence[i][t] != 0;
    }
    if (nonzero) {
      a.push_back(row);
      b.push_back(s[i]);
    }
  }
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rational> row(k, 0);
    row[t] = 1;
    a.push_back(row);
    b.push_back(0);
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      RationalMatrix m(k, k);
      std::vector<Rational> rhs(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a[pick[i]][j];
        rhs[i] = b[pick[i]];
      }
      if (auto r = solve(m, rhs)) best = std::min(best, objective(*r));
      return;
    }
    for (std::size_t h = from; h < a.size(); ++h) {
      pick[pos] = h;
      choose(pos + 1, h + 1);
    }
  };
  choose(0, 0);
  return best;
}

Rational projected_norm_squared(const RationalMatrix& edges, const std::vector<Rational>& a) {
  // |P a|^2 = (E^T a)^T (E^T E)^-1 (E^T a)
  const RationalMatrix et = edges.transpose();
  auto ginv = inverse(et * edges);
  if (!ginv) fail(ErrorCode::InvalidArgument, "projected_norm_squared: degenerate edges");
  const auto eta = et.apply(a);
  const auto y = ginv->apply(eta);
  Rational out = 0;
  for (std::size_t i = 0; i < y.size(); ++i) out += y[i] * eta[i];
  return out;
}

double flat_norm_oracle(const GChain& s) {
  const auto& k = s.complex();
  const std::size_t m = s.dimension();
  const auto& faces = k.cells(m);
  static const std::vector<Cell> none;
  const auto& tops = k.dimension() > static_cast<int>(m) ? k.cells(m + 1) : none;
  std::vector<Rational> coeff;
  std::vector<double> w, u;
  std::vector<std::vector<int>> inc(faces.size(), std::vector<int>(tops.size(), 0));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    coeff.push_back(s.coefficient(faces[i]).slots()[0]);
    w.push_back(cell_weight(k, faces[i], {}));
  }
  for (std::size_t t = 0; t < tops.size(); ++t) {
    u.push_back(cell_weight(k, tops[t], {}));
    for (std::size_t j = 0; j < tops[t].size(); ++j) {
      Cell face = tops[t];
      face.erase(face.begin() + static_cast<long>(j));
      const auto at = std::lower_bound(faces.begin(), faces.end(), face);
      inc[static_cast<std::size_t>(at - faces.begin())][t] = j % 2 ? -1 : 1;
    }
  }
  return flat_norm_by_vertices(coeff, w, inc, u);
}

}  // namespace gmt::verify
