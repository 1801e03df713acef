#include "gmt/io/documents.hpp"

#include <cstdio>

#include "gmt/error.hpp"

namespace gmt::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_from(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  bad("expected an integer");
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("rationals are written as \"p/q\" strings");
}

json group_json(const NormedGroup& g) {
  switch (g.kind()) {
    case GroupKind::Integers: return {{"kind", "integers"}};
    case GroupKind::Rationals: return {{"kind", "rationals"}};
    case GroupKind::Cyclic: return {{"kind", "cyclic"}, {"d", g.modulus().convert_to<long long>()}};
    case GroupKind::DirectSum: {
      json parts = json::array();
      for (const auto& p : g.parts()) parts.push_back(group_json(p));
      return {{"kind", "direct_sum"}, {"components", parts}};
    }
    case GroupKind::QuotientLattice: {
      json gens = json::array();
      const auto& m = g.lattice_generators();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).convert_to<long long>());
        gens.push_back(row);
      }
      return {{"kind", "quotient_lattice"}, {"rank", g.lattice_rank()}, {"generators", gens}};
    }
  }
  bad("unknown group kind");
}

NormedGroup group_from(const json& j) {
  const auto& kind_j = field(j, "kind");
  if (!kind_j.is_string()) bad("group kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "integers") return NormedGroup::integers();
  if (kind == "rationals") return NormedGroup::rationals();
  if (kind == "cyclic") {
    const Integer d = integer_from(field(j, "d"));
    if (d < 1) bad("cyclic modulus must be positive");
    return NormedGroup::cyclic(d);
  }
  if (kind == "direct_sum") {
    const auto& comps = field(j, "components");
    if (!comps.is_array() || comps.empty()) bad("direct_sum needs a nonempty components array");
    std::vector<NormedGroup> parts;
    for (const auto& c : comps) parts.push_back(group_from(c));
    return NormedGroup::direct_sum(std::move(parts));
  }
  if (kind == "quotient_lattice") {
    const std::size_t rank = count_from(field(j, "rank"), "rank");
    if (rank == 0) bad("quotient lattice rank must be positive");
    const auto& gens = field(j, "generators");
    if (!gens.is_array()) bad("generators must be an array of rows");
    IntMatrix m(0, rank);
    for (const auto& row : gens) {
      if (!row.is_array() || row.size() != rank) bad("generator rows must have `rank` entries");
      std::vector<Integer> r;
      for (const auto& e : row) r.push_back(integer_from(e));
      m.append_row(r);
    }
    return NormedGroup::quotient_lattice(rank, m);
  }
  bad("unknown group kind \"" + kind + "\"");
}

json element_json(const GroupElement& g) {
  if (g.slots().size() == 1) return rational_json(g.slots()[0]);
  json a = json::array();
  for (const auto& s : g.slots()) a.push_back(rational_json(s));
  return a;
}

GroupElement element_from(const json& j, const NormedGroup& group) {
  std::vector<Rational> slots;
  if (j.is_array()) {
    for (const auto& e : j) slots.push_back(rational_from(e));
  } else {
    slots.push_back(rational_from(j));
  }
  if (slots.size() != group.width()) bad("coefficient has " + std::to_string(slots.size()) + " slots, group " +
                                         group.describe() + " needs " + std::to_string(group.width()));
  try {
    return GroupElement(group, std::move(slots));
  } catch (const Error& e) {
    bad(std::string("coefficient outside the group: ") + e.what());
  }
}

json complex_json(const SimplicialComplex& k) {
  json verts = json::array();
  for (const auto& p : k.vertices()) {
    json row = json::array();
    for (const auto& x : p) row.push_back(rational_json(x));
    verts.push_back(row);
  }
  json cells = json::array();
  for (const auto& c : k.maximal_cells()) cells.push_back(c);
  return {{"ambient_dimension", k.ambient()}, {"vertices", verts}, {"cells", cells}};
}

SimplicialComplex complex_from(const json& j, SimplicialComplex::Validation v) {
  const std::size_t n = count_from(field(j, "ambient_dimension"), "ambient_dimension");
  const auto& verts = field(j, "vertices");
  const auto& cells = field(j, "cells");
  if (!verts.is_array() || !cells.is_array()) bad("vertices and cells must be arrays");
  std::vector<Point> pts;
  for (const auto& row : verts) {
    if (!row.is_array() || row.size() != n) bad("every vertex needs ambient_dimension coordinates");
    Point p;
    for (const auto& x : row) p.push_back(rational_from(x));
    pts.push_back(std::move(p));
  }
  std::vector<Cell> cs;
  for (const auto& c : cells) {
    if (!c.is_array() || c.empty()) bad("cells are nonempty arrays of vertex indices");
    Cell cell;
    for (const auto& id : c) cell.push_back(static_cast<VertexId>(count_from(id, "vertex index")));
    cs.push_back(std::move(cell));
  }
  return SimplicialComplex::build(n, std::move(pts), std::move(cs), v);
}

json chain_json(const GChain& s) {
  json cells = json::array();
  for (const auto& [c, g] : s.terms()) cells.push_back({{"cell", c}, {"coefficient", element_json(g)}});
  return {{"schema", kChainSchema},
          {"version", kSchemaVersion},
          {"group", group_json(s.group())},
          {"complex", complex_json(s.complex())},
          {"chain", {{"dimension", s.dimension()}, {"cells", cells}}}};
}

GChain chain_from(const json& j, SimplicialComplex::Validation v) {
  if (j.contains("schema") && j.at("schema") != kChainSchema) bad("not a chain document");
  if (j.contains("version") && j.at("version") != kSchemaVersion) bad("unsupported chain document version");
  const NormedGroup group = group_from(field(j, "group"));
  const SimplicialComplex k = complex_from(field(j, "complex"), v);
  const auto& chain = field(j, "chain");
  const std::size_t m = count_from(field(chain, "dimension"), "dimension");
  GChain s(k, m, group);
  const auto& cells = field(chain, "cells");
  if (!cells.is_array()) bad("chain cells must be an array");
  for (const auto& term : cells) {
    const auto& c = field(term, "cell");
    if (!c.is_array()) bad("cell must be an array of vertex indices");
    Cell cell;
    for (const auto& id : c) cell.push_back(static_cast<VertexId>(count_from(id, "vertex index")));
    s.add_term(std::move(cell), element_from(field(term, "coefficient"), group));
  }
  return s;
}

json affine_json(const AffineMap& f) {
  json lin = json::array();
  for (std::size_t r = 0; r < f.linear.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.linear.cols(); ++c) row.push_back(rational_json(f.linear(r, c)));
    lin.push_back(row);
  }
  json t = json::array();
  for (const auto& x : f.translation) t.push_back(rational_json(x));
  return {{"linear", lin}, {"translation", t}};
}

AffineMap affine_from(const json& j) {
  const auto& lin = field(j, "linear");
  if (!lin.is_array() || lin.empty()) bad("linear must be a nonempty array of rows");
  RationalMatrix m;
  for (const auto& row : lin) {
    if (!row.is_array()) bad("linear rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from(x));
    if (m.rows() > 0 && r.size() != m.cols()) bad("linear rows differ in length");
    m.append_row(r);
  }
  std::vector<Rational> t(m.rows());
  if (j.contains("translation")) {
    const auto& tj = j.at("translation");
    if (!tj.is_array() || tj.size() != m.rows()) bad("translation needs one entry per row");
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rational_from(tj[i]);
  }
  return {std::move(m), std::move(t)};
}

json interval_json(const Interval& i) { return json::array({format_double(i.lo()), format_double(i.hi())}); }

json mass_json(const MassReport& r) {
  json cells = json::array();
  for (const auto& [c, g] : r.gram) cells.push_back({{"cell", c}, {"gram", rational_json(g)}});
  return {{"value", std::stod(format_double(r.value))}, {"interval", interval_json(r.total)}, {"cells", cells}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace gmt::io
