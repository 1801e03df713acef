// gmt-chains: chain calculus from the command line.
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gmt/error.hpp"

namespace {

using namespace gmt::cli;

int emit(const json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) return 1;
  f << text;
  return f ? 0 : 1;
}

int emit_error(gmt::ErrorCode code, const std::string& message) {
  json doc = {{"error", {{"code", std::string(gmt::to_string(code))}, {"message", message}}}};
  std::cout << doc.dump(2) << "\n";
  return code == gmt::ErrorCode::ParseError ? kParseFailed : kPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gmt-chains: simplicial chains with coefficients in normed groups"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<Outcome(const Options&)>> run;

  auto add = [&](const char* name, const char* help, std::function<Outcome(const Options&)> fn, std::size_t inputs) {
    auto* sub = app.add_subcommand(name, help);
    if (inputs) sub->add_option("input", o.inputs, "chain document(s)")->expected(static_cast<int>(inputs));
    sub->add_option("-o,--out", o.out, "write the result here instead of stdout");
    run[sub] = std::move(fn);
    return sub;
  };
  auto add_map = [&](CLI::App* sub, const char* prefix_help) {
    sub->add_option("--map", o.map, std::string(prefix_help) + " linear part, rows \"a,b;c,d\"");
    sub->add_option("--shift", o.shift, "translation \"x,y\"");
    sub->add_option("--map-file", o.map_file, "affine map document {linear, translation}");
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--f", o.f_coeffs, "coefficients of the affine function, \"a,b,...\"")->required();
    sub->add_option("--c", o.f_const, "constant term of the affine function");
    sub->add_option("--y", o.level, "level, a rational \"p/q\"")->required();
  };

  add("boundary", "boundary of a chain", cmd_boundary, 1);
  auto* push = add("push", "push-forward along an affine map", cmd_push, 1);
  add_map(push, "map");
  push->add_option("--target", o.target, "complex (or chain) document the image must lie on");
  add_level(add("slice", "slice <S, f, y>", cmd_slice, 1));
  add_level(add("cut", "restriction to {f > y} with the slice", cmd_cut, 1));
  add("product", "cartesian product S x T (S integral)", cmd_product, 2);
  add("restrict", "restriction to a subcomplex", cmd_restrict, 1)
      ->add_option("--subcomplex", o.subcomplex, "complex (or chain) document")
      ->required();
  add("mass", "mass with exact Gram determinants", cmd_mass, 1);
  auto* flat = add("flatnorm", "flat norm and Q + dR decomposition", cmd_flatnorm, 1);
  flat->add_flag("--integral", o.integral, "integer fills by branch and bound (small complexes)");
  flat->add_option("--weights", o.weights, "cell weight overrides {weights: [{cell, weight}]}");
  add("reduce-mod", "reduction of an integral chain modulo d", cmd_reduce_mod, 1)->add_option("--d", o.d, "modulus");
  add("constancy", "constancy test on the manifold of all top cells", cmd_constancy, 1);
  auto* homotopy = add("homotopy", "straight-line homotopy fill between two affine maps", cmd_homotopy, 1);
  add_map(homotopy, "f");
  homotopy->add_option("--g-map", o.g_map, "g linear part");
  homotopy->add_option("--g-shift", o.g_shift, "g translation");
  homotopy->add_option("--g-map-file", o.g_map_file, "g as an affine map document");
  homotopy->add_option("--t", o.t, "homotopy time t >= 0");
  auto* verify = add("verify", "seeded property suites", cmd_verify, 0);
  verify->add_option("suite", o.suite, "suite name");
  verify->add_option("--seed", o.seed, "seed");
  verify->add_option("--cases", o.cases, "number of cases");
  verify->add_option("--case", o.only_case, "re-run a single case index");
  verify->add_flag("--list", o.list, "list the suites");
  auto* snf = add("snf", "Smith normal form of an integer matrix", cmd_snf, 0);
  snf->add_option("input", o.inputs, "document {matrix}");
  snf->add_option("--matrix", o.matrix, "rows \"a,b;c,d\"");
  auto* tensor = add("tensor-check", "A/dA of a presented group, or the univalence of f_d", cmd_tensor_check, 0);
  tensor->add_option("input", o.inputs, "presentation document {generators, relations}");
  tensor->add_option("--matrix", o.matrix, "relation rows \"a,b;c,d\"");
  tensor->add_option("--d", o.d, "d");
  tensor->add_option("--hom", o.hom, "homomorphism document {source, target, matrix}");
  tensor->add_option("--d-max", o.d_max, "largest d for --hom");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseFailed;
  }

  for (auto& [sub, fn] : run) {
    if (!sub->parsed()) continue;
    try {
      const Outcome r = fn(o);
      if (emit(r.document, o.out) != 0) return emit_error(gmt::ErrorCode::InvalidArgument, "cannot write " + o.out);
      return r.status;
    } catch (const gmt::Error& e) {
      return emit_error(e.code(), e.what());
    } catch (const std::exception& e) {
      return emit_error(gmt::ErrorCode::ParseError, e.what());
    }
  }
  return kParseFailed;
}
