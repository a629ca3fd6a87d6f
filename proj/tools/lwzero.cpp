// lwzero: compute, approximate, and render zero sets of Littlewood
// polynomials. Subcommands: roots, dragon, partition, approx, render,
// verify, evaluate.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "littlewood/core.hpp"
#include "littlewood/eval.hpp"
#include "littlewood/ifs.hpp"
#include "littlewood/io.hpp"
#include "littlewood/raster.hpp"
#include "littlewood/roots.hpp"

namespace lw = littlewood;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lw::Cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw UsageError("expected complex value as RE,IM: " + text);
  double re = 0.0, im = 0.0;
  const char* b1 = text.data();
  const char* e1 = text.data() + comma;
  const char* b2 = text.data() + comma + 1;
  const char* e2 = text.data() + text.size();
  if (std::from_chars(b1, e1, re).ptr != e1 ||
      std::from_chars(b2, e2, im).ptr != e2)
    throw UsageError("could not parse complex value: " + text);
  return lw::Cplx{re, im};
}

int degree_cap() {
  if (const char* env = std::getenv("LW_MAX_DEGREE")) {
    const int v = std::atoi(env);
    if (v >= 1 && v <= lw::kMaxDegree) return v;
  }
  return 30;
}

void check_cap(int degree, bool force) {
  if (degree > lw::kMaxDegree)
    throw UsageError("degree exceeds hard cap of 62");
  if (!force && degree > degree_cap())
    throw UsageError("degree " + std::to_string(degree) +
                     " exceeds the safety cap (" +
                     std::to_string(degree_cap()) +
                     "); pass --force to override");
}

std::ofstream open_out(const std::string& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw IoError("cannot open output file: " + path);
  return out;
}

void emit_points(const std::vector<lw::Cplx>& points, const std::string& out,
                 const std::string& format) {
  if (out.empty()) return;
  std::ofstream sink = open_out(out, format == "bin");
  if (format == "bin")
    lw::io::write_points_bin(points, sink);
  else
    lw::io::write_points_csv(points, sink);
  if (!sink.flush()) throw IoError("write failure: " + out);
}

int default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// ---- roots ---------------------------------------------------------------

struct RootsArgs {
  int degree_max = 10;
  double tol = 1e-12;
  int max_iter = 120;
  bool no_fallback = false;
  int workers = default_workers();
  std::string out, format = "csv";
  bool force = false, quiet = false;
};

int cmd_roots(const RootsArgs& a) {
  check_cap(a.degree_max, a.force);
  lw::SolverConfig cfg{a.tol, a.max_iter, !a.no_fallback};

  std::optional<std::ofstream> sink;
  if (!a.out.empty()) {
    sink = open_out(a.out, a.format == "bin");
    if (a.format == "bin") {
      std::uint64_t count = 0;
      for (int d = 1; d <= a.degree_max; ++d)
        count += static_cast<std::uint64_t>(d) << d;
      lw::io::write_root_bin_header(count, *sink);
    } else {
      lw::io::write_roots_csv_header(*sink);
    }
  }

  std::uint64_t polynomials = 0, roots = 0, converged = 0;
  double max_residual = 0.0;
  std::uint64_t last_mask = ~std::uint64_t{0};
  int last_degree = -1;
  lw::zero_set(
      a.degree_max, cfg,
      [&](const lw::RootRecord& rec) {
        if (rec.degree != last_degree || rec.mask != last_mask) {
          ++polynomials;
          last_degree = rec.degree;
          last_mask = rec.mask;
        }
        ++roots;
        if (rec.converged) ++converged;
        max_residual = std::max(max_residual, rec.residual);
        if (sink) {
          if (a.format == "bin")
            lw::io::write_root_bin_point(rec, *sink);
          else
            lw::io::write_root_csv(rec, *sink);
        }
      },
      a.workers);
  if (sink && !sink->flush()) throw IoError("write failure: " + a.out);

  std::cout << json{{"polynomials", polynomials},
                    {"roots", roots},
                    {"converged", converged},
                    {"max_residual", max_residual}}
                   .dump()
            << "\n";
  return 0;
}

// ---- dragon --------------------------------------------------------------

struct DragonArgs {
  int degree = 13;
  std::string z = "0.48,0.45";
  std::string out, format = "csv";
  bool force = false, quiet = false;
};

int cmd_dragon(const DragonArgs& a) {
  if (a.degree < 0) throw UsageError("--degree must be >= 0");
  if (a.degree >= 1) check_cap(a.degree, a.force);
  const lw::Cplx z = parse_complex(a.z);
  const lw::OrbitSet orbit = lw::dragon_set_dedup(z, a.degree + 1);
  emit_points(orbit.points, a.out, a.format);
  if (!a.quiet)
    std::cout << json{{"degree", a.degree},
                      {"iterations", orbit.depth},
                      {"points", orbit.points.size()}}
                     .dump()
              << "\n";
  return 0;
}

// ---- partition -----------------------------------------------------------

struct PartitionArgs {
  int degree = 14;
  std::string z = "0.48,0.45";
  int nu = 7;
  std::string out, format = "csv";
  bool with_generators = false;
  bool force = false, quiet = false;
};

int cmd_partition(const PartitionArgs& a) {
  check_cap(a.degree, a.force);
  const lw::Cplx z = parse_complex(a.z);
  const lw::EvalSet cls = lw::eval_all(a.degree, z, lw::Subset::nu_class, a.nu);

  if (!a.out.empty()) {
    if (a.with_generators && a.format == "csv") {
      std::ofstream sink = open_out(a.out, false);
      sink << "re,im,tag\n";
      for (lw::Cplx p : cls.points)
        sink << lw::io::format_complex(p) << ",class\n";
      for (lw::Cplx p : lw::eval_generators(a.degree, z).points)
        sink << lw::io::format_complex(p) << ",generator\n";
      sink << lw::io::format_complex(
                  lw::horner_eval(lw::identity(a.degree), z))
           << ",identity\n";
      if (!sink.flush()) throw IoError("write failure: " + a.out);
    } else {
      emit_points(cls.points, a.out, a.format);
    }
  }

  if (!a.quiet)
    std::cout << json{{"degree", a.degree},
                      {"nu", a.nu},
                      {"count", cls.points.size()},
                      // The reflected class: arithmetic gives d+1-k; the
                      // d-k variant is reported alongside for comparison.
                      {"reflection_class", a.degree + 1 - a.nu},
                      {"reflection_class_alt", a.degree - a.nu}}
                     .dump()
              << "\n";
  return 0;
}

// ---- approx --------------------------------------------------------------

struct ApproxArgs {
  int degree = 14;
  std::string z = "0,0";
  double epsilon = 1e-6;
  std::string mode = "exact";
  int nu = -1;
  bool force = false;
};

int cmd_approx(const ApproxArgs& a) {
  check_cap(a.degree, a.force);
  if (a.epsilon <= 0) throw UsageError("--epsilon must be positive");
  const lw::Cplx z = parse_complex(a.z);
  const bool exact = a.mode == "exact";
  if (!exact && a.mode != "nu-class")
    throw UsageError("--mode must be exact or nu-class");
  int nu = a.nu;
  if (!exact && nu < 0) nu = (a.degree + 2) / 2;  // the cheapest good class

  const lw::MembershipReport rep = lw::epsilon_membership(
      z, a.degree, a.epsilon,
      exact ? lw::MembershipMode::exact : lw::MembershipMode::nu_class, nu);
  const lw::ApproxCostReport cost = lw::approx_cost_report(a.degree);

  json membership{{"query", lw::io::format_complex(rep.query)},
                  {"degree", rep.degree},
                  {"epsilon", rep.epsilon},
                  {"member", rep.member},
                  {"min_modulus", rep.min_modulus},
                  {"evaluations_used", rep.evaluations_used},
                  {"mode", exact ? "exact" : "nu-class"}};
  if (!exact) membership["nu"] = rep.nu_value;
  std::cout << json{{"membership", membership},
                    {"cost",
                     {{"full", cost.full},
                      {"paper_formula", cost.paper_formula},
                      {"corrected", cost.corrected}}}}
                   .dump()
            << "\n";
  return 0;
}

// ---- render --------------------------------------------------------------

struct RenderArgs {
  int degree_max = 12;
  int width = 800, height = 600;
  std::string viewport = "-2,2,-1.5,1.5";
  std::string colormap = "log";
  int workers = default_workers();
  std::string out = "render.pgm";
  double tol = 1e-12;
  int max_iter = 120;
  bool force = false, quiet = false;
};

lw::Viewport parse_viewport(const std::string& text) {
  lw::Viewport vp;
  double* fields[4] = {&vp.xmin, &vp.xmax, &vp.ymin, &vp.ymax};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t next = i == 3 ? text.size() : text.find(',', pos);
    if (next == std::string::npos)
      throw UsageError("viewport must be xmin,xmax,ymin,ymax");
    const char* b = text.data() + pos;
    const char* e = text.data() + next;
    if (std::from_chars(b, e, *fields[i]).ptr != e)
      throw UsageError("bad viewport component: " + text);
    pos = next + 1;
  }
  return vp;
}

int cmd_render(const RenderArgs& a) {
  check_cap(a.degree_max, a.force);
  if (a.width < 1 || a.height < 1) throw UsageError("bad image geometry");
  const lw::Viewport vp = parse_viewport(a.viewport);
  if (a.colormap != "log" && a.colormap != "linear")
    throw UsageError("--colormap must be log or linear");

  lw::DensityGrid grid(a.width, a.height, vp);
  lw::SolverConfig cfg{a.tol, a.max_iter, true};
  std::uint64_t records = 0;
  lw::zero_set(
      a.degree_max, cfg,
      [&](const lw::RootRecord& rec) {
        ++records;
        grid.add(rec.root);
      },
      a.workers);

  const lw::ImageBuffer img = lw::to_image(
      grid, a.colormap == "log" ? lw::ColorMap::log : lw::ColorMap::linear);
  std::ofstream sink = open_out(a.out, true);
  const std::size_t bytes = lw::write_pgm(img, sink);
  if (!sink.flush()) throw IoError("write failure: " + a.out);

  if (!a.quiet)
    std::cout << json{{"records", records},
                      {"binned", grid.total()},
                      {"dropped", grid.dropped()},
                      {"bytes", bytes}}
                     .dump()
              << "\n";
  return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  int degree = 3;
  std::string z = "0.5,0.5";
};

int cmd_verify(const VerifyArgs& a) {
  if (a.degree < 2) throw UsageError("verify needs --degree >= 2");
  if (a.degree > 16)
    throw UsageError("verify enumerates exhaustively; --degree capped at 16");
  const lw::Cplx z = parse_complex(a.z);

  const lw::Cplx ez = lw::horner_eval(lw::identity(a.degree), z);
  const double lemma1_dev =
      std::abs(lw::eval_identity_via_generators(a.degree, z) - ez);
  double theorem2_dev = 0.0;
  lw::enumerate(a.degree, 0, lw::coefficient_mask(a.degree) + 1,
                [&](const lw::SignVector& p) {
                  theorem2_dev = std::max(
                      theorem2_dev, std::abs(lw::eval_via_factorization(p, z) -
                                             lw::horner_eval(p, z)));
                });
  const double tolerance = 1e-10 * (1.0 + std::abs(ez));
  const bool pass = lemma1_dev <= tolerance && theorem2_dev <= tolerance;
  std::cout << json{{"degree", a.degree},
                    {"e_z", lw::io::format_complex(ez)},
                    {"lemma1_deviation", lemma1_dev},
                    {"theorem2_max_deviation", theorem2_dev},
                    {"tolerance", tolerance},
                    {"pass", pass}}
                   .dump()
            << "\n";
  return pass ? 0 : 1;
}

// ---- evaluate ------------------------------------------------------------

struct EvaluateArgs {
  int degree = 13;
  std::string z = "0.48,0.45";
  std::string subset = "full";
  int nu = -1;
  int workers = default_workers();
  std::string out, format = "csv";
  bool force = false, quiet = false;
};

int cmd_evaluate(const EvaluateArgs& a) {
  check_cap(a.degree, a.force);
  const lw::Cplx z = parse_complex(a.z);
  lw::Subset subset;
  if (a.subset == "full")
    subset = lw::Subset::full;
  else if (a.subset == "half")
    subset = lw::Subset::half_constant_positive;
  else if (a.subset == "nu-class")
    subset = lw::Subset::nu_class;
  else if (a.subset == "generators")
    subset = lw::Subset::generators;
  else
    throw UsageError("--subset must be full, half, nu-class, or generators");
  if (subset == lw::Subset::nu_class && a.nu < 0)
    throw UsageError("nu-class subset needs --nu");

  const lw::EvalSet set =
      lw::eval_all(a.degree, z, subset, a.nu, std::nullopt, a.workers);
  emit_points(set.points, a.out, a.format);
  if (!a.quiet)
    std::cout << json{{"degree", a.degree},
                      {"subset", a.subset},
                      {"count", set.points.size()}}
                     .dump()
              << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood polynomial zero sets: exact sweeps, dragon-set "
               "iteration, nu-class approximation, density rendering"};
  app.require_subcommand(1);

  RootsArgs roots;
  auto* c_roots = app.add_subcommand("roots", "Root sweep over degrees 1..N");
  c_roots->add_option("--degree-max", roots.degree_max)->required(false);
  c_roots->add_option("--tol", roots.tol);
  c_roots->add_option("--max-iter", roots.max_iter);
  c_roots->add_flag("--no-fallback", roots.no_fallback);
  c_roots->add_option("--workers", roots.workers);
  c_roots->add_option("--out", roots.out);
  c_roots->add_option("--format", roots.format)
      ->check(CLI::IsMember({"csv", "bin"}));
  c_roots->add_flag("--force", roots.force);
  c_roots->add_flag("--quiet", roots.quiet);

  DragonArgs dragon;
  auto* c_dragon =
      app.add_subcommand("dragon", "Generalized dragon set point cloud");
  c_dragon->add_option("--degree", dragon.degree);
  c_dragon->add_option("--z", dragon.z);
  c_dragon->add_option("--out", dragon.out);
  c_dragon->add_option("--format", dragon.format)
      ->check(CLI::IsMember({"csv", "bin"}));
  c_dragon->add_flag("--force", dragon.force);
  c_dragon->add_flag("--quiet", dragon.quiet);

  PartitionArgs partition;
  auto* c_partition =
      app.add_subcommand("partition", "Evaluate one nu-equivalence class");
  c_partition->add_option("--degree", partition.degree);
  c_partition->add_option("--z", partition.z);
  c_partition->add_option("--nu", partition.nu);
  c_partition->add_option("--out", partition.out);
  c_partition->add_option("--format", partition.format)
      ->check(CLI::IsMember({"csv", "bin"}));
  c_partition->add_flag("--with-generators", partition.with_generators);
  c_partition->add_flag("--force", partition.force);
  c_partition->add_flag("--quiet", partition.quiet);

  ApproxArgs approx;
  auto* c_approx =
      app.add_subcommand("approx", "Epsilon-ball root membership test");
  c_approx->add_option("--degree", approx.degree);
  c_approx->add_option("--z", approx.z);
  c_approx->add_option("--epsilon", approx.epsilon);
  c_approx->add_option("--mode", approx.mode)
      ->check(CLI::IsMember({"exact", "nu-class"}));
  c_approx->add_option("--nu", approx.nu);
  c_approx->add_flag("--force", approx.force);

  RenderArgs render;
  auto* c_render =
      app.add_subcommand("render", "Density image of the zero set");
  c_render->add_option("--degree-max", render.degree_max);
  c_render->add_option("--width", render.width);
  c_render->add_option("--height", render.height);
  c_render->add_option("--viewport", render.viewport);
  c_render->add_option("--colormap", render.colormap)
      ->check(CLI::IsMember({"log", "linear"}));
  c_render->add_option("--workers", render.workers);
  c_render->add_option("--out", render.out);
  c_render->add_option("--tol", render.tol);
  c_render->add_option("--max-iter", render.max_iter);
  c_render->add_flag("--force", render.force);
  c_render->add_flag("--quiet", render.quiet);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand(
      "verify", "Check the generator-sum and factorization identities");
  c_verify->add_option("--degree", verify.degree);
  c_verify->add_option("--z", verify.z);

  EvaluateArgs evaluate;
  auto* c_evaluate =
      app.add_subcommand("evaluate", "Bulk evaluation of a polynomial family");
  c_evaluate->add_option("--degree", evaluate.degree);
  c_evaluate->add_option("--z", evaluate.z);
  c_evaluate->add_option("--subset", evaluate.subset)
      ->check(CLI::IsMember({"full", "half", "nu-class", "generators"}));
  c_evaluate->add_option("--nu", evaluate.nu);
  c_evaluate->add_option("--workers", evaluate.workers);
  c_evaluate->add_option("--out", evaluate.out);
  c_evaluate->add_option("--format", evaluate.format)
      ->check(CLI::IsMember({"csv", "bin"}));
  c_evaluate->add_flag("--force", evaluate.force);
  c_evaluate->add_flag("--quiet", evaluate.quiet);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_roots->parsed()) return cmd_roots(roots);
    if (c_dragon->parsed()) return cmd_dragon(dragon);
    if (c_partition->parsed()) return cmd_partition(partition);
    if (c_approx->parsed()) return cmd_approx(approx);
    if (c_render->parsed()) return cmd_render(render);
    if (c_verify->parsed()) return cmd_verify(verify);
    if (c_evaluate->parsed()) return cmd_evaluate(evaluate);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
