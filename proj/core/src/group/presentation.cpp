#include "gmt/group/presentation.hpp"

#include <sstream>

#include "gmt/error.hpp"

namespace gmt {

Presentation Presentation::free(std::size_t rank) { return {rank, IntMatrix(0, rank)}; }

Presentation Presentation::diagonal(const std::vector<Integer>& factors) {
  Presentation p{factors.size(), IntMatrix(0, factors.size())};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 0) continue;
    std::vector<Integer> row(factors.size());
    row[i] = factors[i];
    p.relations.append_row(row);
  }
  return p;
}

std::string Presentation::describe() const { return invariants(*this).describe(); }

std::string AbelianInvariants::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianInvariants invariants(const Presentation& p) {
  AbelianInvariants inv;
  if (p.relations.rows() == 0) {
    inv.free_rank = p.generators;
    return inv;
  }
  auto snf = smith_normal_form(p.relations);
  const auto diag = snf.diagonal();
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = p.generators - nonzero;
  return inv;
}

Presentation tensor_mod_d(const Presentation& a, const Integer& d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "tensor_mod_d: d must be nonnegative");
  IntMatrix rel = a.relations.rows() ? a.relations : IntMatrix(0, a.generators);
  if (d > 0) {
    for (std::size_t i = 0; i < a.generators; ++i) {
      std::vector<Integer> row(a.generators);
      row[i] = d;
      rel.append_row(row);
    }
  }
  auto inv = invariants({a.generators, rel});
  std::vector<Integer> factors = inv.torsion;
  factors.insert(factors.end(), inv.free_rank, Integer(0));
  return Presentation::diagonal(factors);
}

namespace {

IntMatrix with_multiples(const Presentation& p, const Integer& d) {
  IntMatrix rel = p.relations.rows() ? p.relations : IntMatrix(0, p.generators);
  if (d != 0) {
    for (std::size_t i = 0; i < p.generators; ++i) {
      std::vector<Integer> row(p.generators);
      row[i] = d;
      rel.append_row(row);
    }
  }
  return rel;
}

}  // namespace

bool GroupHom::well_defined() const {
  if (matrix.rows() != target.generators || matrix.cols() != source.generators) return false;
  for (std::size_t r = 0; r < source.relations.rows(); ++r) {
    auto image = matrix.apply(source.relations.row(r));
    if (!in_row_lattice(target.relations, image)) return false;
  }
  return true;
}

MonoVerdict check_mono_at(const GroupHom& f, const Integer& d) {
  if (f.matrix.rows() != f.target.generators || f.matrix.cols() != f.source.generators)
    fail(ErrorCode::DimensionMismatch, "check_mono_condition: map shape does not match presentations");
  const std::size_t b = f.source.generators;
  const std::size_t a = f.target.generators;
  const IntMatrix target_lattice = with_multiples(f.target, d);
  const IntMatrix source_lattice = with_multiples(f.source, d);

  // K = {x : F x in L_A} is the projection of ker [F | -L_A^T].
  IntMatrix joint(a, b + target_lattice.rows());
  for (std::size_t r = 0; r < a; ++r) {
    for (std::size_t c = 0; c < b; ++c) joint(r, c) = f.matrix(r, c);
    for (std::size_t k = 0; k < target_lattice.rows(); ++k) joint(r, b + k) = -target_lattice(k, r);
  }
  MonoVerdict verdict{d, true, {}};
  for (const auto& z : integer_kernel(joint)) {
    std::vector<Integer> x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(b));
    if (!in_row_lattice(source_lattice, x)) {
      verdict.univalent = false;
      verdict.witness = std::move(x);
      break;
    }
  }
  return verdict;
}

std::vector<MonoVerdict> check_mono_condition(const GroupHom& f, unsigned d_max) {
  std::vector<MonoVerdict> out;
  for (unsigned d = 0; d <= d_max; ++d) out.push_back(check_mono_at(f, Integer(d)));
  return out;
}

}  // namespace gmt
