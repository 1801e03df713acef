// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Seed 7 throughout; GMT_CHAINS_THREADS caps workers.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmt/gmt.hpp"
#include "gmt/io/documents.hpp"
#include "gmt/verify/oracles.hpp"
#include "gmt/verify/suite.hpp"

namespace {

using namespace gmt;
using verify::Report;

constexpr std::uint64_t kSeed = 7;

struct Criterion {
  int id = 0;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& note) {
    if (!cond) ok = false;
    notes.push_back((cond ? "" : "FAILED ") + note);
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Runs a registered suite and records "name passed/run in ms".
Report run(Criterion& c, const std::string& name, std::optional<std::size_t> cases = std::nullopt) {
  const auto* suite = verify::find_suite(name);
  if (!suite) {
    c.require(false, "suite " + name + " is not registered");
    return {};
  }
  Report r = verify::run_suite(*suite, kSeed, cases, std::nullopt, verify::worker_count());
  std::string note = name + " " + std::to_string(r.cases_passed) + "/" + std::to_string(r.cases_run) + " in " +
                     fmt("%.0f", r.elapsed_ms) + " ms";
  if (!r.ok()) note += " (first failure: case " + std::to_string(*r.failing_case) + ", " + r.failure_detail + ")";
  c.require(r.ok(), note);
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Criterion chain_complex_law() {
  Criterion c{1, "boundary of boundary vanishes, m in {2,3} x {Z, Z/2, Z/6, Q, Z+Z/2}"};
  // case i uses m = 2 + i % 2 and group (i / 2) % 5: 500 per pair
  const auto r = run(c, "boundary-squared", 5000);
  c.require(r.elapsed_ms < 30000.0, "runtime " + fmt("%.1f", r.elapsed_ms / 1000.0) + " s < 30 s");
  return c;
}

Criterion boundary_slice() {
  Criterion c{2, "boundary-slice identity, m in {1,2,3}"};
  run(c, "slice-identity", 300);
  return c;
}

Criterion leibniz() {
  Criterion c{3, "product rule in all three dimension splits"};
  // split = i % 3: 100 pairs per split
  run(c, "leibniz", 300);
  return c;
}

Criterion homotopy() {
  Criterion c{4, "homotopy formula for straight homotopies"};
  run(c, "homotopy", 150);
  return c;
}

Criterion rho() {
  Criterion c{5, "d(S.g) = (dS).g and univalence of rho"};
  // every eighth case uses Z + Z/6; the other 10500 use finite groups of order <= 200
  run(c, "rho-mono", 12000);
  return c;
}

Criterion bundle() {
  Criterion c{6, "bundle norm laws and the projective distance identity"};
  run(c, "bundle-norms", 2000);
  run(c, "bundle-metric", 1000);
  // each case also requires the interval enclosure to be narrower than 1e-10
  run(c, "alpha-identity", 1000);
  return c;
}

Criterion constancy() {
  Criterion c{7, "constancy solver recovers g and locates perturbations"};
  run(c, "constancy", 100);
  return c;
}

Criterion mod_d() {
  Criterion c{8, "reduction mod d commutes with the boundary; Mobius band mod 2"};
  // d = 2 + i % 7: 200 chains per d
  run(c, "mod-d", 1400);
  run(c, "mobius");
  return c;
}

Criterion flat() {
  Criterion c{9, "flat norm: unit square, enumeration agreement, exact decomposition"};
  namespace fs = std::filesystem;
  const fs::path dir(GMT_FIXTURE_DIR);
  {
    const auto s = io::chain_from(io::parse(slurp(dir / "unit_square_loop.json")));
    const auto d = flat_norm(s);
    c.require(std::abs(d.value - 1.0) <= 1e-9, "unit square loop: " + fmt("%.12f", d.value));
    c.require(d.q + boundary(d.r) == s, "unit square loop: Q + dR = S");
  }
  std::size_t checked = 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const auto s = io::chain_from(io::parse(slurp(f)));
    const auto kind = s.group().kind();
    if (kind != GroupKind::Integers && kind != GroupKind::Rationals) continue;
    const auto& k = s.complex();
    const std::size_t tops = k.dimension() > static_cast<int>(s.dimension()) ? k.cells(s.dimension() + 1).size() : 0;
    if (tops > 3) continue;
    const auto d = flat_norm(s);
    const double want = verify::flat_norm_oracle(s);
    const bool exact = d.q + boundary(d.r) == to_rational(s);
    c.require(std::abs(d.value - want) <= 1e-9 && exact,
              f.filename().string() + ": LP " + fmt("%.12g", d.value) + " vs enumeration " + fmt("%.12g", want));
    ++checked;
  }
  c.require(checked >= 3, std::to_string(checked) + " fixtures checked");
  run(c, "flat-norm", 600);
  return c;
}

Criterion smith_tensor() {
  Criterion c{10, "Smith form, tensor with Z/d against enumeration, A = Z, B = 2Z"};
  run(c, "smith", 10000);
  run(c, "tensor-mod-d");
  run(c, "mono-condition", 2000);
  const GroupHom inclusion{Presentation::free(1), Presentation::free(1), IntMatrix{{Integer(2)}}};
  const auto v = check_mono_at(inclusion, 2);
  c.require(!v.univalent, std::string("2Z -> Z at d = 2 reported ") + (v.univalent ? "univalent" : "not univalent"));
  return c;
}

Criterion coarea() {
  Criterion c{11, "integrated slice masses against the weighted mass"};
  const auto r = run(c, "coarea", 24);
  c.require(r.elapsed_ms < 60000.0, "runtime " + fmt("%.1f", r.elapsed_ms / 1000.0) + " s < 60 s");
  return c;
}

}  // namespace

int main() {
  const std::vector<Criterion (*)()> all{chain_complex_law, boundary_slice, leibniz, homotopy, rho,       bundle,
                                         constancy,         mod_d,          flat,    smith_tensor, coarea};
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Criterion c;
    try {
      c = all[i]();
    } catch (const std::exception& e) {
      c.id = static_cast<int>(i + 1);
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %2d  %s\n", c.ok ? "PASS" : "FAIL", c.id, c.title.c_str());
    for (const auto& n : c.notes) std::printf("          %s\n", n.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
