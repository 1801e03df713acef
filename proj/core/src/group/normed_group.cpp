#include "gmt/group/normed_group.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gmt/error.hpp"
#include "gmt/group/presentation.hpp"
#include "gmt/group/smith.hpp"

namespace gmt {

using boost::multiprecision::abs;

struct NormedGroup::Rep {
  GroupKind kind = GroupKind::Integers;
  Integer modulus = 0;
  std::vector<NormedGroup> parts;
  std::vector<std::size_t> offsets;  // slot offset of each part
  std::size_t width = 1;
  std::size_t rank = 0;
  IntMatrix generators;
  IntMatrix basis;                 // Hermite form of the generators
  std::vector<std::size_t> pivots;  // pivot column of each basis row
};

namespace {

Integer as_integer(const Rational& q, const char* what) {
  if (!is_integral(q)) fail(ErrorCode::GroupMismatch, std::string(what) + ": non-integral value " + to_string(q));
  return boost::multiprecision::numerator(q);
}

}  // namespace

NormedGroup NormedGroup::integers() {
  static const auto rep = std::make_shared<const Rep>(Rep{});
  return NormedGroup(rep);
}

NormedGroup NormedGroup::cyclic(const Integer& d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "cyclic group needs modulus >= 1");
  Rep r;
  r.kind = GroupKind::Cyclic;
  r.modulus = d;
  return NormedGroup(std::make_shared<const Rep>(std::move(r)));
}

NormedGroup NormedGroup::rationals() {
  Rep r;
  r.kind = GroupKind::Rationals;
  static const auto rep = std::make_shared<const Rep>(r);
  return NormedGroup(rep);
}

NormedGroup NormedGroup::direct_sum(std::vector<NormedGroup> parts) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "direct sum needs at least one summand");
  Rep r;
  r.kind = GroupKind::DirectSum;
  r.width = 0;
  for (const auto& p : parts) {
    r.offsets.push_back(r.width);
    r.width += p.width();
  }
  r.parts = std::move(parts);
  return NormedGroup(std::make_shared<const Rep>(std::move(r)));
}

NormedGroup NormedGroup::quotient_lattice(std::size_t rank, const IntMatrix& generators) {
  if (rank == 0) fail(ErrorCode::InvalidArgument, "quotient lattice needs ambient rank >= 1");
  if (generators.rows() > 0 && generators.cols() != rank)
    fail(ErrorCode::DimensionMismatch, "quotient lattice generators must have `rank` columns");
  Rep r;
  r.kind = GroupKind::QuotientLattice;
  r.width = rank;
  r.rank = rank;
  r.generators = generators.rows() ? generators : IntMatrix(0, rank);
  r.basis = generators.rows() ? hermite_normal_form(generators) : IntMatrix(0, rank);
  for (std::size_t i = 0; i < r.basis.rows(); ++i) {
    std::size_t c = 0;
    while (r.basis(i, c) == 0) ++c;
    r.pivots.push_back(c);
  }
  return NormedGroup(std::make_shared<const Rep>(std::move(r)));
}

GroupKind NormedGroup::kind() const { return rep_->kind; }
const Integer& NormedGroup::modulus() const { return rep_->modulus; }
std::span<const NormedGroup> NormedGroup::parts() const { return rep_->parts; }
std::size_t NormedGroup::lattice_rank() const { return rep_->rank; }
const IntMatrix& NormedGroup::lattice_basis() const { return rep_->basis; }
const IntMatrix& NormedGroup::lattice_generators() const { return rep_->generators; }
std::size_t NormedGroup::width() const { return rep_->width; }

bool NormedGroup::finitely_generated() const {
  switch (rep_->kind) {
    case GroupKind::Rationals: return false;
    case GroupKind::DirectSum:
      for (const auto& p : rep_->parts)
        if (!p.finitely_generated()) return false;
      return true;
    default: return true;
  }
}

std::optional<Integer> NormedGroup::order() const {
  switch (rep_->kind) {
    case GroupKind::Cyclic: return rep_->modulus;
    case GroupKind::DirectSum: {
      Integer n = 1;
      for (const auto& p : rep_->parts) {
        auto o = p.order();
        if (!o) return std::nullopt;
        n *= *o;
      }
      return n;
    }
    case GroupKind::QuotientLattice: {
      if (rep_->basis.rows() != rep_->rank) return std::nullopt;
      Integer n = 1;
      for (std::size_t i = 0; i < rep_->basis.rows(); ++i) n *= rep_->basis(i, rep_->pivots[i]);
      return n;
    }
    default: return std::nullopt;
  }
}

Presentation NormedGroup::presentation() const {
  const auto& r = *rep_;
  switch (r.kind) {
    case GroupKind::Integers: return Presentation::free(1);
    case GroupKind::Cyclic: return Presentation::diagonal({r.modulus});
    case GroupKind::Rationals:
      fail(ErrorCode::NotFinitelyGenerated, "Q is not finitely generated");
    case GroupKind::QuotientLattice: return {r.rank, r.basis};
    case GroupKind::DirectSum: {
      Presentation out{r.width, IntMatrix(0, r.width)};
      for (std::size_t k = 0; k < r.parts.size(); ++k) {
        auto p = r.parts[k].presentation();
        for (std::size_t i = 0; i < p.relations.rows(); ++i) {
          std::vector<Integer> row(r.width);
          for (std::size_t j = 0; j < p.generators; ++j) row[r.offsets[k] + j] = p.relations(i, j);
          out.relations.append_row(row);
        }
      }
      return out;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown group kind");
}

std::string NormedGroup::describe() const {
  const auto& r = *rep_;
  std::ostringstream os;
  switch (r.kind) {
    case GroupKind::Integers: return "Z";
    case GroupKind::Rationals: return "Q";
    case GroupKind::Cyclic: os << "Z/" << r.modulus; break;
    case GroupKind::DirectSum:
      for (std::size_t k = 0; k < r.parts.size(); ++k) os << (k ? " + " : "") << r.parts[k].describe();
      break;
    case GroupKind::QuotientLattice:
      os << "Z^" << r.rank << "/<";
      for (std::size_t i = 0; i < r.basis.rows(); ++i) {
        os << (i ? "," : "") << "(";
        for (std::size_t j = 0; j < r.rank; ++j) os << (j ? "," : "") << r.basis(i, j);
        os << ")";
      }
      os << ">";
      break;
  }
  return os.str();
}

bool operator==(const NormedGroup& a, const NormedGroup& b) {
  if (a.rep_ == b.rep_) return true;
  const auto& x = *a.rep_;
  const auto& y = *b.rep_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case GroupKind::Integers:
    case GroupKind::Rationals: return true;
    case GroupKind::Cyclic: return x.modulus == y.modulus;
    case GroupKind::DirectSum: return x.parts == y.parts;
    case GroupKind::QuotientLattice: return x.rank == y.rank && x.basis == y.basis;
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

void canonicalize_slots(const NormedGroup& g, std::span<Rational> s) {
  switch (g.kind()) {
    case GroupKind::Integers: as_integer(s[0], "Z"); break;
    case GroupKind::Rationals: break;
    case GroupKind::Cyclic: {
      Integer k = as_integer(s[0], "Z/d");
      k -= floor_div(k, g.modulus()) * g.modulus();
      s[0] = Rational(k);
      break;
    }
    case GroupKind::DirectSum: {
      std::size_t off = 0;
      for (const auto& p : g.parts()) {
        canonicalize_slots(p, s.subspan(off, p.width()));
        off += p.width();
      }
      break;
    }
    case GroupKind::QuotientLattice: {
      std::vector<Integer> v(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) v[i] = as_integer(s[i], "lattice quotient");
      const auto& b = g.lattice_basis();
      for (std::size_t i = 0; i < b.rows(); ++i) {
        std::size_t p = 0;
        while (b(i, p) == 0) ++p;
        Integer q = floor_div(v[p], b(i, p));
        if (q == 0) continue;
        for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * b(i, j);
      }
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = Rational(v[i]);
      break;
    }
  }
}

Rational slot_norm(const NormedGroup& g, std::span<const Rational> s) {
  switch (g.kind()) {
    case GroupKind::Integers:
    case GroupKind::Rationals: return abs(s[0]);
    case GroupKind::Cyclic: {
      Rational k = s[0];
      Rational other = Rational(g.modulus()) - k;
      return k < other ? k : other;
    }
    case GroupKind::DirectSum: {
      Rational total = 0;
      std::size_t off = 0;
      for (const auto& p : g.parts()) {
        total += slot_norm(p, s.subspan(off, p.width()));
        off += p.width();
      }
      return total;
    }
    case GroupKind::QuotientLattice: {
      GroupElement e(g, std::vector<Rational>(s.begin(), s.end()));
      return quotient_norm(g, e);
    }
  }
  return 0;
}

}  // namespace

GroupElement::GroupElement(NormedGroup group)
    : group_(std::move(group)), slots_(group_.width()) {}

GroupElement::GroupElement(NormedGroup group, std::vector<Rational> slots)
    : group_(std::move(group)), slots_(std::move(slots)) {
  if (slots_.size() != group_.width())
    fail(ErrorCode::GroupMismatch, "element width " + std::to_string(slots_.size()) + " does not fit " +
                                       group_.describe());
  canonicalize();
}

GroupElement GroupElement::scalar(NormedGroup group, const Rational& value) {
  if (group.width() != 1) fail(ErrorCode::GroupMismatch, "scalar element of a multi-slot group");
  return GroupElement(std::move(group), {value});
}

void GroupElement::canonicalize() { canonicalize_slots(group_, slots_); }

bool GroupElement::is_zero() const {
  for (const auto& s : slots_)
    if (s != 0) return false;
  return true;
}

GroupElement GroupElement::operator-() const {
  std::vector<Rational> s(slots_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = -slots_[i];
  return GroupElement(group_, std::move(s));
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  if (!(group_ == other.group_))
    fail(ErrorCode::GroupMismatch, "cannot add elements of " + group_.describe() + " and " + other.group_.describe());
  for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i] += other.slots_[i];
  canonicalize();
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) { return *this += -other; }

GroupElement GroupElement::times(const Integer& k) const {
  std::vector<Rational> s(slots_.size());
  const Rational kq(k);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = kq * slots_[i];
  return GroupElement(group_, std::move(s));
}

Rational GroupElement::norm() const { return slot_norm(group_, slots_); }

std::string GroupElement::describe() const {
  if (slots_.size() == 1) return to_string(slots_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < slots_.size(); ++i) out += (i ? "," : "") + to_string(slots_[i]);
  return out + ")";
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.slots_ == b.slots_ && a.group_ == b.group_;
}

GroupElement add(const GroupElement& a, const GroupElement& b) { return a + b; }
Rational norm(const GroupElement& a) { return a.norm(); }

Rational quotient_norm(const NormedGroup& group, const GroupElement& g) {
  if (group.kind() != GroupKind::QuotientLattice)
    fail(ErrorCode::InvalidArgument, "quotient_norm needs a quotient lattice group");
  if (!(g.group() == group)) fail(ErrorCode::GroupMismatch, "element is not in " + group.describe());
  const std::size_t r = group.lattice_rank();
  const IntMatrix& b = group.lattice_basis();
  const std::size_t k = b.rows();
  if (r > 4 || k > 4) fail(ErrorCode::RankTooLarge, "quotient norm is limited to rank 4");

  std::vector<Integer> v(r);
  Integer l1 = 0;
  for (std::size_t i = 0; i < r; ++i) {
    v[i] = boost::multiprecision::numerator(g.slots()[i]);
    l1 += abs(v[i]);
  }
  if (k == 0 || l1 == 0) return Rational(l1);

  // Any improving lattice vector w has |w|_2 <= |w|_1 <= 2|v|_1, and each
  // coordinate c_i of w in the basis obeys |c_i| <= |w|_2 sqrt((Gram^-1)_ii).
  RationalMatrix gram = to_rational(b * b.transpose());
  const auto ginv = inverse(gram);
  if (!ginv) fail(ErrorCode::InvalidArgument, "lattice basis is not independent");
  std::vector<Integer> bound(k);
  const Rational four_l1_sq = Rational(4 * l1 * l1);
  for (std::size_t i = 0; i < k; ++i) bound[i] = isqrt(floor(four_l1_sq * (*ginv)(i, i)));

  // The basis is in echelon form, so columns left of the next pivot are final
  // once c_0..c_i are chosen; their partial distance prunes the search.
  std::vector<std::size_t> settled(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t next = r;
    if (i + 1 < k) {
      next = 0;
      while (b(i + 1, next) == 0) ++next;
    }
    settled[i] = next;
  }
  Integer best = l1;
  std::vector<Integer> w(r);
  std::function<void(std::size_t, std::size_t, const Integer&)> walk = [&](std::size_t i, std::size_t done,
                                                                           const Integer& partial) {
    if (i == k) {
      if (partial < best) best = partial;
      return;
    }
    // |v_p - w_p - c b_ip| < best - partial at the pivot p narrows c_i.
    std::size_t p = 0;
    while (b(i, p) == 0) ++p;
    const Integer piv = b(i, p), t = v[p] - w[p], slack = best - partial - 1;
    if (slack < 0) return;
    Integer lo = -bound[i], hi = bound[i];
    Integer a = t - slack, z = t + slack;
    if (piv < 0) {
      std::swap(a, z);
      a = -a;
      z = -z;
    }
    const Integer m = abs(piv);
    lo = std::max(lo, a >= 0 ? Integer((a + m - 1) / m) : Integer(-((-a) / m)));
    hi = std::min(hi, z >= 0 ? Integer(z / m) : Integer(-((-z + m - 1) / m)));
    for (Integer ci = lo; ci <= hi; ++ci) {
      for (std::size_t j = 0; j < r; ++j) w[j] += ci * b(i, j);
      Integer d = partial;
      for (std::size_t j = done; j < settled[i]; ++j) d += abs(v[j] - w[j]);
      if (d < best) walk(i + 1, settled[i], d);
      for (std::size_t j = 0; j < r; ++j) w[j] -= ci * b(i, j);
    }
  };
  walk(0, 0, Integer(0));
  return Rational(best);
}

}  // namespace gmt
