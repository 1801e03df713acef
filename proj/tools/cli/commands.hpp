#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmt/io/documents.hpp"

namespace gmt::cli {

using io::json;

/// Exit statuses of the tool.
enum Exit : int { kOk = 0, kVerifyFailed = 1, kParseFailed = 2, kPrecondition = 3 };

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  // affine maps: "a,b;c,d" rows, or sidecar JSON files
  std::string map, shift, map_file;
  std::string g_map, g_shift, g_map_file;
  std::string f_coeffs, f_const = "0", level;
  std::string t = "1";
  std::string target, subcomplex, weights;
  std::string matrix, hom;
  std::string d = "2";
  unsigned d_max = 12;
  bool integral = false;
  // verify
  std::string suite;
  std::uint64_t seed = 7;
  std::optional<std::size_t> cases, only_case;
  bool list = false;
};

/// Each command returns its result document and exit status.
struct Outcome {
  json document;
  int status = kOk;
};

Outcome cmd_boundary(const Options& o);
Outcome cmd_push(const Options& o);
Outcome cmd_slice(const Options& o);
Outcome cmd_cut(const Options& o);
Outcome cmd_product(const Options& o);
Outcome cmd_restrict(const Options& o);
Outcome cmd_mass(const Options& o);
Outcome cmd_flatnorm(const Options& o);
Outcome cmd_reduce_mod(const Options& o);
Outcome cmd_constancy(const Options& o);
Outcome cmd_homotopy(const Options& o);
Outcome cmd_verify(const Options& o);
Outcome cmd_snf(const Options& o);
Outcome cmd_tensor_check(const Options& o);

}  // namespace gmt::cli
