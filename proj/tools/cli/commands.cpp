#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gmt/gmt.hpp"
#include "gmt/verify/suite.hpp"

namespace gmt::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) { return io::parse(read_file(path)); }

GChain load_chain(const std::string& path) { return io::chain_from(load_json(path)); }

const std::string& only_input(const Options& o, std::size_t index = 0) {
  if (o.inputs.size() <= index) fail(ErrorCode::ParseError, "missing input file");
  return o.inputs[index];
}

// A complex from either a complex document or a chain document.
SimplicialComplex load_complex(const std::string& path) {
  const json j = load_json(path);
  return io::complex_from(j.contains("complex") ? j.at("complex") : j);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\n") - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> v;
  for (const auto& item : split(text, ',')) v.push_back(parse_rational(item));
  if (v.empty()) fail(ErrorCode::ParseError, "empty vector \"" + text + "\"");
  return v;
}

// "a,b;c,d" -> rows
RationalMatrix parse_rows(const std::string& text) {
  RationalMatrix m;
  for (const auto& row : split(text, ';')) {
    const auto r = parse_vector(row);
    if (m.rows() > 0 && r.size() != m.cols()) fail(ErrorCode::ParseError, "matrix rows differ in length");
    m.append_row(r);
  }
  if (m.rows() == 0) fail(ErrorCode::ParseError, "empty matrix");
  return m;
}

IntMatrix parse_int_rows(const std::string& text) {
  const auto q = parse_rows(text);
  IntMatrix m(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (!is_integral(q(i, j))) fail(ErrorCode::ParseError, "integer matrix expected");
      m(i, j) = numerator(q(i, j));
    }
  return m;
}

AffineMap affine_of(const std::string& map, const std::string& shift, const std::string& file, const char* what) {
  if (!file.empty()) return io::affine_from(load_json(file));
  if (map.empty()) fail(ErrorCode::ParseError, std::string("missing ") + what + " map");
  AffineMap f{parse_rows(map), {}};
  f.translation = shift.empty() ? std::vector<Rational>(f.linear.rows()) : parse_vector(shift);
  if (f.translation.size() != f.linear.rows()) fail(ErrorCode::ParseError, "shift length differs from map rows");
  return f;
}

AffineMap functional_of(const Options& o) {
  if (o.f_coeffs.empty()) fail(ErrorCode::ParseError, "missing --f");
  return AffineMap::functional(parse_vector(o.f_coeffs), parse_rational(o.f_const));
}

Rational level_of(const Options& o) {
  if (o.level.empty()) fail(ErrorCode::ParseError, "missing --y");
  return parse_rational(o.level);
}

std::map<Cell, double> load_weights(const std::string& path) {
  std::map<Cell, double> w;
  if (path.empty()) return w;
  const json j = load_json(path);
  if (!j.contains("weights") || !j.at("weights").is_array()) fail(ErrorCode::ParseError, "weights file needs a weights array");
  for (const auto& e : j.at("weights")) {
    if (!e.contains("cell") || !e.contains("weight") || !e.at("weight").is_number())
      fail(ErrorCode::ParseError, "weight entries are {cell, weight}");
    Cell c = e.at("cell").get<Cell>();
    if (sort_with_parity(c) == 0) fail(ErrorCode::ParseError, "weight cell repeats a vertex");
    const double x = e.at("weight").get<double>();
    if (!(x > 0)) fail(ErrorCode::InvalidArgument, "weights must be positive");
    w[c] = x;
  }
  return w;
}

json number(double x) { return std::stod(io::format_double(x)); }

json decomposition_json(const FlatDecomposition& d) {
  json y = json::array();
  for (double v : d.certificate.y) y.push_back(number(v));
  return {{"schema", "gmt-chains/decomposition"},
          {"version", io::kSchemaVersion},
          {"value", number(d.value)},
          {"iterations", d.iterations},
          {"basis_exact", d.basis_exact},
          {"Q", io::chain_json(d.q)},
          {"R", io::chain_json(d.r)},
          {"certificate",
           {{"dual", y}, {"dual_objective", number(d.certificate.dual_objective)},
            {"max_violation", number(d.certificate.max_violation)}}}};
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return rows;
}

Presentation presentation_from(const json& j) {
  if (!j.contains("generators")) fail(ErrorCode::ParseError, "presentation needs generators");
  Presentation p;
  p.generators = j.at("generators").get<std::size_t>();
  p.relations = IntMatrix(0, p.generators);
  if (j.contains("relations"))
    for (const auto& row : j.at("relations")) {
      std::vector<Integer> r;
      for (const auto& x : row) r.push_back(x.is_string() ? parse_integer(x.get<std::string>()) : Integer(x.get<long long>()));
      if (r.size() != p.generators) fail(ErrorCode::ParseError, "relation rows need one entry per generator");
      p.relations.append_row(r);
    }
  return p;
}

json invariants_json(const AbelianInvariants& inv) {
  json t = json::array();
  for (const auto& x : inv.torsion) t.push_back(to_string(x));
  return {{"torsion", t}, {"free_rank", inv.free_rank}, {"describe", inv.describe()}};
}

}  // namespace

Outcome cmd_boundary(const Options& o) { return {io::chain_json(boundary(load_chain(only_input(o))))}; }

Outcome cmd_push(const Options& o) {
  const auto s = load_chain(only_input(o));
  const auto f = affine_of(o.map, o.shift, o.map_file, "push");
  std::optional<SimplicialComplex> target;
  if (!o.target.empty()) target = load_complex(o.target);
  PushReport report;
  const auto image = push_forward(s, f, target, &report);
  if (report.dropped) std::cerr << "dropped " << report.dropped << " degenerate image simplices\n";
  return {io::chain_json(image)};
}

Outcome cmd_slice(const Options& o) {
  return {io::chain_json(slice(load_chain(only_input(o)), functional_of(o), level_of(o)))};
}

Outcome cmd_cut(const Options& o) {
  const auto s = load_chain(only_input(o));
  const auto c = cut(s, functional_of(o), level_of(o));
  return {{{"upper", io::chain_json(c.upper)}, {"slice", io::chain_json(slice(s, c.cut))}}};
}

Outcome cmd_product(const Options& o) {
  return {io::chain_json(product(load_chain(only_input(o, 0)), load_chain(only_input(o, 1))))};
}

Outcome cmd_restrict(const Options& o) {
  if (o.subcomplex.empty()) fail(ErrorCode::ParseError, "missing --subcomplex");
  return {io::chain_json(restrict(load_chain(only_input(o)), load_complex(o.subcomplex)))};
}

Outcome cmd_mass(const Options& o) { return {io::mass_json(mass(load_chain(only_input(o))))}; }

Outcome cmd_flatnorm(const Options& o) {
  const auto s = load_chain(only_input(o));
  const auto weights = load_weights(o.weights);
  if (o.integral) return {decomposition_json(integral_flat_norm(s, weights))};
  FlatNormProblem p{s.group().kind() == GroupKind::Integers ? to_rational(s) : s, weights};
  return {decomposition_json(flat_norm(p))};
}

Outcome cmd_reduce_mod(const Options& o) {
  return {io::chain_json(mod_d_reduce(load_chain(only_input(o)), parse_integer(o.d)))};
}

Outcome cmd_constancy(const Options& o) {
  const auto t = load_chain(only_input(o));
  const auto manifold = orient_manifold(t.complex().cells(t.dimension()));
  const auto r = constancy_solve(t, manifold);
  json out = {{"consistent", r.consistent}};
  out["value"] = r.value ? io::element_json(*r.value) : json(nullptr);
  out["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  out["manifold_cells"] = manifold.cells.size();
  return {out};
}

Outcome cmd_homotopy(const Options& o) {
  const auto s = load_chain(only_input(o));
  const auto f = affine_of(o.map, o.shift, o.map_file, "--f");
  const auto g = affine_of(o.g_map, o.g_shift, o.g_map_file, "--g");
  const Rational t = parse_rational(o.t);
  const auto h = homotopy_fill(f, g, s, t);
  GeometricChain lhs = GeometricChain(push_forward(s, g)) - GeometricChain(push_forward(s, f));
  GeometricChain rhs = GeometricChain(boundary(h));
  json out = {{"fill", io::chain_json(h)}};
  if (s.dimension() > 0) {
    const auto hd = homotopy_fill(f, g, boundary(s), t);
    rhs += GeometricChain(hd);
    out["boundary_fill"] = io::chain_json(hd);
  } else {
    out["boundary_fill"] = nullptr;
  }
  out["identity_holds"] = lhs == rhs;
  return {out};
}

Outcome cmd_verify(const Options& o) {
  if (o.list) {
    json list = json::array();
    for (const auto& s : verify::suites()) {
      json entry = {{"name", s.name}, {"description", s.description}};
      entry["cases"] = s.exhaustive ? *s.exhaustive : s.default_cases;
      list.push_back(entry);
    }
    return {{{"suites", list}}};
  }
  const auto* suite = verify::find_suite(o.suite);
  if (!suite) fail(ErrorCode::InvalidArgument, "unknown suite \"" + o.suite + "\"");
  const auto report = verify::run_suite(*suite, o.seed, o.cases, o.only_case);
  return {report.to_json(), report.ok() ? kOk : kVerifyFailed};
}

Outcome cmd_snf(const Options& o) {
  IntMatrix m;
  if (!o.matrix.empty()) {
    m = parse_int_rows(o.matrix);
  } else {
    const json j = load_json(only_input(o));
    if (!j.contains("matrix") || !j.at("matrix").is_array() || j.at("matrix").empty())
      fail(ErrorCode::ParseError, "expected {\"matrix\": [[...]]}");
    m = presentation_from({{"generators", j.at("matrix").at(0).size()}, {"relations", j.at("matrix")}}).relations;
  }
  const auto s = smith_normal_form(m);
  json diag = json::array();
  for (const auto& x : s.diagonal()) diag.push_back(to_string(x));
  return {{{"U", int_matrix_json(s.U)}, {"D", int_matrix_json(s.D)}, {"V", int_matrix_json(s.V)},
           {"diagonal", diag}, {"rank", s.rank()}}};
}

Outcome cmd_tensor_check(const Options& o) {
  if (!o.hom.empty()) {
    const json j = load_json(o.hom);
    GroupHom f;
    f.source = presentation_from(j.at("source"));
    f.target = presentation_from(j.at("target"));
    f.matrix = IntMatrix(f.target.generators, f.source.generators);
    const auto& rows = j.at("matrix");
    if (rows.size() != f.target.generators) fail(ErrorCode::ParseError, "matrix needs one row per target generator");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != f.source.generators) fail(ErrorCode::ParseError, "matrix rows need one entry per source generator");
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        f.matrix(r, c) = rows[r][c].is_string() ? parse_integer(rows[r][c].get<std::string>())
                                                : Integer(rows[r][c].get<long long>());
    }
    if (!f.well_defined()) fail(ErrorCode::InvalidArgument, "the matrix does not send source relations into target relations");
    json verdicts = json::array();
    for (const auto& v : check_mono_condition(f, o.d_max)) {
      json w = json::array();
      for (const auto& x : v.witness) w.push_back(to_string(x));
      verdicts.push_back({{"d", to_string(v.d)}, {"univalent", v.univalent}, {"witness", w}});
    }
    return {{{"verdicts", verdicts}}};
  }
  Presentation p;
  if (!o.matrix.empty()) {
    p.relations = parse_int_rows(o.matrix);
    p.generators = p.relations.cols();
  } else {
    p = presentation_from(load_json(only_input(o)));
  }
  const Integer d = parse_integer(o.d);
  const auto q = tensor_mod_d(p, d);
  return {{{"group", invariants_json(invariants(p))},
           {"d", to_string(d)},
           {"tensor", invariants_json(invariants(q))},
           {"presentation", {{"generators", q.generators}, {"relations", int_matrix_json(q.relations)}}}}};
}

}  // namespace gmt::cli
