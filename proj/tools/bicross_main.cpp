// Command-line front end: generate layouts, count crossings, evaluate the
// closed forms, solve the inner-radius threshold, run sweeps, render SVG.
//
// Exit codes: 0 ok, 1 counting methods disagree, 2 usage error,
// 3 degenerate configuration, 4 numeric failure.

#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bicross/arrangements.hpp"
#include "bicross/bounds.hpp"
#include "bicross/dc_partition.hpp"
#include "bicross/formulas.hpp"
#include "bicross/geometry.hpp"
#include "bicross/layout_io.hpp"
#include "bicross/svg.hpp"
#include "bicross/threshold.hpp"
#include "bicross/version.hpp"

namespace {

using namespace bicross;

struct ExitWith {
  int code;
  std::string message;
};

void emit_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_text_file(path, content);
  }
}

DCParams params_from_meta(const LayoutDocument& doc) {
  if (doc.arrangement != "dc")
    throw std::invalid_argument(
        "partition counting needs a concentric-circles layout (meta.arrangement == \"dc\")");
  const auto& p = doc.params;
  for (const char* key : {"m", "n", "r", "R", "phi_in", "phi_out"}) {
    if (!p.contains(key) || !p[key].is_number())
      throw std::invalid_argument(std::string("layout meta missing numeric param '") + key +
                                  "'");
  }
  return DCParams{p["m"].get<i64>(),      p["n"].get<i64>(),      p["r"].get<double>(),
                  p["R"].get<double>(),   p["phi_in"].get<double>(),
                  p["phi_out"].get<double>()};
}

struct GenFlags {
  std::string arrangement;
  i64 m = 0;
  i64 n = 0;
  double r = 0.0;
  double R = 1.0;
  double phi_in = 0.0;
  double phi_out = std::numeric_limits<double>::quiet_NaN();
  double spacing = 1.0;
  double line_gap = 1.0;
  i64 top = -1;
  i64 bottom = -1;
  i64 left = -1;
  i64 k = -1;
  std::uint64_t seed = 0;
  std::string out;
};

void run_gen(const GenFlags& f) {
  Layout layout;
  MetaParams meta;
  if (f.arrangement == "dpl") {
    layout = gen_dpl(f.m, f.n, f.spacing);
    meta = {{"m", f.m}, {"n", f.n}, {"spacing", f.spacing}};
  } else if (f.arrangement == "tpl") {
    i64 t = f.top;
    i64 b = f.bottom;
    if (t < 0 && b < 0) {
      if (f.n < 1) throw std::invalid_argument("gen tpl: pass --n or both --t and --b");
      t = f.n / 2;
      b = f.n - t;
    } else if (t < 0) {
      t = f.n - b;
    } else if (b < 0) {
      b = f.n - t;
    }
    if (f.n > 0 && t + b != f.n)
      throw std::invalid_argument("gen tpl: --t + --b must equal --n");
    layout = gen_tpl(t, f.m, b, f.spacing, f.line_gap);
    meta = {{"t", t}, {"c", f.m}, {"b", b}, {"spacing", f.spacing}, {"line_gap", f.line_gap}};
  } else if (f.arrangement == "dol") {
    const i64 left = f.left >= 0 ? f.left : f.m / 2;
    const i64 right = f.m - left;
    const i64 top = f.top >= 0 ? f.top : f.n / 2;
    const i64 bottom = f.n - top;
    layout = gen_dol(left, right, top, bottom, f.spacing);
    meta = {{"l", left}, {"r_count", right}, {"t", top}, {"b", bottom}, {"spacing", f.spacing}};
  } else if (f.arrangement == "lic") {
    const i64 k = f.k >= 0 ? f.k : f.n / 2;
    const i64 l = f.n - k;
    if (l < 0) throw std::invalid_argument("gen lic: --k exceeds --n");
    layout = gen_lic(f.m, k, l, f.R);
    meta = {{"m", f.m}, {"k", k}, {"l", l}, {"R_circle", f.R}};
  } else if (f.arrangement == "dc") {
    DCParams params{f.m, f.n, f.r, f.R, f.phi_in,
                    std::isnan(f.phi_out) ? DCParams::default_phi_out(f.m, f.n) : f.phi_out};
    auto [built, effective] = gen_dc_jittered(params);
    layout = std::move(built);
    meta = {{"m", effective.m},       {"n", effective.n},       {"r", effective.r},
            {"R", effective.R},       {"phi_in", effective.phi_in},
            {"phi_out", effective.phi_out}};
  } else if (f.arrangement == "fic") {
    layout = gen_fic(f.m, f.n, f.R, f.seed);
    meta = {{"m", f.m},
            {"n", f.n},
            {"R_circle", f.R},
            {"seed", f.seed},
            {"rng", std::string("mt19937_64-53bit")}};
  } else {
    throw std::invalid_argument("gen: unknown arrangement '" + f.arrangement + "'");
  }
  emit_output(write_layout_json(layout, f.arrangement, meta), f.out);
}

void run_count(const std::string& file, const std::string& method) {
  const LayoutDocument doc = load_layout_file(file);
  if (method == "brute") {
    validate_layout(doc.layout);
    std::cout << count_crossings_brute(doc.layout).count << "\n";
  } else if (method == "partition") {
    std::cout << count_crossings_partition(params_from_meta(doc)).count << "\n";
  } else if (method == "both") {
    validate_layout(doc.layout);
    const i64 brute = count_crossings_brute(doc.layout).count;
    const i64 partition = count_crossings_partition(params_from_meta(doc)).count;
    std::cout << "brute " << brute << "\n" << "partition " << partition << "\n";
    if (brute != partition)
      throw ExitWith{1, "count: methods disagree (brute " + std::to_string(brute) +
                            ", partition " + std::to_string(partition) + ")"};
  } else {
    throw std::invalid_argument("count: --method must be brute, partition, or both");
  }
}

struct FormulaFlags {
  std::string which;
  i64 m = 0;
  i64 n = 0;
  i64 c = 0;
  i64 t = 0;
  i64 b = 0;
  i64 l = 0;
  i64 r_count = 0;
  i64 j = -1;
  double r = 0.0;
  double R = 1.0;
};

void run_formula(const FormulaFlags& f) {
  if (f.which == "dpl") {
    std::cout << cr_dpl(f.m, f.n) << "\n";
  } else if (f.which == "tpl") {
    std::cout << cr_tpl(f.c, f.t, f.b) << "\n";
  } else if (f.which == "tplmin") {
    std::cout << cr_tpl_min(f.m, f.n) << "\n";
  } else if (f.which == "dol") {
    std::cout << cr_dol(f.l, f.r_count, f.t, f.b) << "\n";
  } else if (f.which == "dolmin") {
    std::cout << cr_dol_min(f.m, f.n) << "\n";
  } else if (f.which == "dolmax") {
    std::cout << cr_dol_max(f.m, f.n) << "\n";
  } else if (f.which == "licmin") {
    std::cout << cr_lic_min(f.m, f.n) << "\n";
  } else if (f.which == "dc") {
    std::cout << cr_dc(f.m, f.n) << "\n";
  } else if (f.which == "zarankiewicz") {
    std::cout << zarankiewicz(f.m, f.n) << "\n";
  } else if (f.which == "cyl") {
    std::cout << cyl_crossing(f.m, f.n) << "\n";
  } else if (f.which == "beta") {
    if (f.j >= 1) {
      std::cout << beta_step(f.j, f.m, f.n, f.r, f.R) << "\n";
    } else {
      const BetaProfile profile = beta_profile(f.m, f.n, f.r, f.R);
      for (std::size_t i = 0; i < profile.betas.size(); ++i) {
        if (i) std::cout << " ";
        std::cout << profile.betas[i];
      }
      std::cout << "\n";
    }
  } else if (f.which == "lemma1") {
    const ExcessBounds bounds = excess_bounds(f.m, f.n, f.r, f.R);
    std::cout << bounds.lower << " " << bounds.upper << "\n";
  } else {
    throw std::invalid_argument("formula: unknown --which '" + f.which + "'");
  }
}

void run_threshold(i64 m, i64 n, double R, double phi_in, double phi_out, double tol) {
  ThresholdConfig cfg;
  cfg.tol_bisect = tol;
  const double rot = std::isnan(phi_out) ? DCParams::default_phi_out(m, n) : phi_out;
  const ThresholdResult res = crossing_threshold(m, n, R, phi_in, rot, cfg);
  std::cout << format_double(res.t_cr) << "\n";
  std::cout << "{\"t_cr\":" << format_double(res.t_cr)
            << ",\"bracket_lo\":" << format_double(res.bracket_lo)
            << ",\"bracket_hi\":" << format_double(res.bracket_hi)
            << ",\"iterations\":" << res.iterations
            << ",\"phi_in\":" << format_double(res.phi_in)
            << ",\"phi_out\":" << format_double(res.phi_out)
            << ",\"witness_a\":" << res.witness.first
            << ",\"witness_b\":" << res.witness.second << ",\"hit_upper_limit\":"
            << (res.hit_upper_limit ? "true" : "false") << "}\n";
}

struct SweepFlags {
  i64 m = 0;
  i64 n = 0;
  double R = 1.0;
  double r_from = 0.0;
  double r_to = 0.0;
  i64 steps = 10;
  double phi_in = 0.0;
  double phi_out = std::numeric_limits<double>::quiet_NaN();
  std::string out;
};

void run_sweep(const SweepFlags& f) {
  const double rot = std::isnan(f.phi_out) ? DCParams::default_phi_out(f.m, f.n) : f.phi_out;
  const i64 formula_cr = cr_dc(f.m, f.n);
  std::vector<double> radii;
  if (f.r_from == f.r_to || f.steps <= 0) {
    radii.push_back(f.r_from);
  } else {
    for (i64 i = 0; i <= f.steps; ++i) {
      radii.push_back(f.r_from + (f.r_to - f.r_from) * static_cast<double>(i) /
                                     static_cast<double>(f.steps));
    }
  }
  std::ostringstream csv;
  csv << "r,ratio_rR,measured,formula_cr,lemma_lower,lemma_upper,within_lower,within_upper\n";
  i64 lower_violations = 0;
  i64 upper_violations = 0;
  i64 degenerate_rows = 0;
  for (double r : radii) {
    const DCParams params{f.m, f.n, r, f.R, f.phi_in, rot};
    const BoundsReport report = check_excess_bounds(params);
    i64 measured = -1;
    int within_lower = 0;
    int within_upper = 0;
    if (report.degenerate) {
      ++degenerate_rows;
    } else {
      measured = report.measured + formula_cr;
      within_lower = report.within_lower ? 1 : 0;
      within_upper = report.within_upper ? 1 : 0;
      if (!report.within_lower) ++lower_violations;
      if (!report.within_upper) ++upper_violations;
    }
    csv << format_double(r) << "," << format_double(r / f.R) << "," << measured << ","
        << formula_cr << "," << report.lower << "," << report.upper << "," << within_lower
        << "," << within_upper << "\n";
  }
  emit_output(csv.str(), f.out);
  std::cerr << "sweep: rows=" << radii.size() << " lower_violations=" << lower_violations
            << " upper_violations=" << upper_violations << " degenerate=" << degenerate_rows
            << "\n";
}

void run_render(const std::string& file, const std::string& out, int width) {
  const LayoutDocument doc = load_layout_file(file);
  emit_output(render_svg(doc, width), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossing counts for straight-line drawings of complete bipartite graphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GenFlags gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate a layout file");
  cmd_gen->add_option("--arr", gen.arrangement, "arrangement: dpl|tpl|dol|lic|dc|fic")
      ->required();
  cmd_gen->add_option("--m", gen.m, "size of part A (center/line/inner part)");
  cmd_gen->add_option("--n", gen.n, "size of part B");
  cmd_gen->add_option("--r", gen.r, "inner radius (dc)");
  cmd_gen->add_option("--R", gen.R, "outer / circle radius");
  cmd_gen->add_option("--phi-in", gen.phi_in, "inner rotation (radians)");
  cmd_gen->add_option("--phi-out", gen.phi_out, "outer rotation (radians)");
  cmd_gen->add_option("--spacing", gen.spacing, "point spacing on lines");
  cmd_gen->add_option("--line-gap", gen.line_gap, "distance between parallel lines (tpl)");
  cmd_gen->add_option("--t", gen.top, "top count (tpl/dol)");
  cmd_gen->add_option("--b", gen.bottom, "bottom count (tpl)");
  cmd_gen->add_option("--l", gen.left, "left count (dol)");
  cmd_gen->add_option("--k", gen.k, "vertices on the chord's far side (lic)");
  cmd_gen->add_option("--seed", gen.seed, "random seed (fic)");
  cmd_gen->add_option("-o,--out", gen.out, "output file (default stdout)");

  std::string count_file;
  std::string count_method = "brute";
  auto* cmd_count = app.add_subcommand("count", "count crossings of a layout file");
  cmd_count->add_option("file", count_file, "layout JSON file")->required();
  cmd_count->add_option("--method", count_method, "brute|partition|both");

  FormulaFlags formula;
  auto* cmd_formula = app.add_subcommand("formula", "evaluate a closed-form count");
  cmd_formula
      ->add_option("--which", formula.which,
                   "dpl|tpl|tplmin|dol|dolmin|dolmax|licmin|dc|zarankiewicz|cyl|beta|lemma1")
      ->required();
  cmd_formula->add_option("--m", formula.m, "m");
  cmd_formula->add_option("--n", formula.n, "n");
  cmd_formula->add_option("--c", formula.c, "center-line count (tpl)");
  cmd_formula->add_option("--t", formula.t, "top count");
  cmd_formula->add_option("--b", formula.b, "bottom count");
  cmd_formula->add_option("--l", formula.l, "left count (dol)");
  cmd_formula->add_option("--r-count", formula.r_count, "right count (dol)");
  cmd_formula->add_option("--j", formula.j, "chord class index (beta)");
  cmd_formula->add_option("--r", formula.r, "inner radius (beta/lemma1)");
  cmd_formula->add_option("--R", formula.R, "outer radius (beta/lemma1)");

  i64 th_m = 0, th_n = 0;
  double th_R = 1.0, th_phi_in = 0.0;
  double th_phi_out = std::numeric_limits<double>::quiet_NaN();
  double th_tol = 1e-10;
  auto* cmd_threshold =
      app.add_subcommand("threshold", "maximum inner radius keeping the count minimal");
  cmd_threshold->add_option("--m", th_m, "inner part size")->required();
  cmd_threshold->add_option("--n", th_n, "outer part size")->required();
  cmd_threshold->add_option("--R", th_R, "outer radius");
  cmd_threshold->add_option("--phi-in", th_phi_in, "inner rotation (radians)");
  cmd_threshold->add_option("--phi-out", th_phi_out, "outer rotation (radians)");
  cmd_threshold->add_option("--tol", th_tol, "relative bracket tolerance");

  SweepFlags sweep;
  auto* cmd_sweep = app.add_subcommand("sweep", "measure counts across inner radii (CSV)");
  cmd_sweep->add_option("--m", sweep.m, "inner part size")->required();
  cmd_sweep->add_option("--n", sweep.n, "outer part size")->required();
  cmd_sweep->add_option("--R", sweep.R, "outer radius");
  cmd_sweep->add_option("--r-from", sweep.r_from, "first inner radius")->required();
  cmd_sweep->add_option("--r-to", sweep.r_to, "last inner radius")->required();
  cmd_sweep->add_option("--steps", sweep.steps, "number of steps (rows = steps + 1)");
  cmd_sweep->add_option("--phi-in", sweep.phi_in, "inner rotation (radians)");
  cmd_sweep->add_option("--phi-out", sweep.phi_out, "outer rotation (radians)");
  cmd_sweep->add_option("-o,--out", sweep.out, "output CSV file (default stdout)");

  std::string render_file;
  std::string render_out;
  int render_width = 800;
  auto* cmd_render = app.add_subcommand("render", "render a layout file as SVG");
  cmd_render->add_option("file", render_file, "layout JSON file")->required();
  cmd_render->add_option("-o,--out", render_out, "output SVG file (default stdout)");
  cmd_render->add_option("--width", render_width, "image width in pixels");

  try {
    app.parse(argc, argv);
    if (cmd_gen->parsed()) run_gen(gen);
    if (cmd_count->parsed()) run_count(count_file, count_method);
    if (cmd_formula->parsed()) run_formula(formula);
    if (cmd_threshold->parsed()) run_threshold(th_m, th_n, th_R, th_phi_in, th_phi_out, th_tol);
    if (cmd_sweep->parsed()) run_sweep(sweep);
    if (cmd_render->parsed()) run_render(render_file, render_out, render_width);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const DegenerateLayout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotMonotone& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const BadLayoutFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
