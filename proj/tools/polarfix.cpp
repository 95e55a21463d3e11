// polarfix: solve / verify / iterate / gallery / conjugate front end.
// Exit codes: 0 pass, 1 verification fail, 2 no constructive solver,
// 3 representation or input error, 4 unknown entry or family.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarfix/conjugate.hpp"
#include "polarfix/errors.hpp"
#include "polarfix/gallery.hpp"
#include "polarfix/json_io.hpp"
#include "polarfix/polarity.hpp"
#include "polarfix/sets.hpp"
#include "polarfix/solver.hpp"
#include "polarfix/svg.hpp"
#include "polarfix/verify.hpp"

namespace {

using nlohmann::json;
using namespace polarfix;

struct RunConfig {
  double tol = 1e-8;
  int dirs = 512;
  int seed = 0;
  int grid_nodes = 257;
  int max_steps = 50;
  std::string out;
  std::string svg;
};

VerifyConfig verify_config(const RunConfig& rc) {
  VerifyConfig vc;
  vc.tolerance = rc.tol;
  vc.dirs = rc.dirs;
  vc.seed = rc.seed;
  return vc;
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_doc(const std::string& path) {
  if (path.empty()) return parse_json(slurp(std::cin));
  std::ifstream f(path);
  if (!f) throw BadParams("cannot open " + path);
  return parse_json(slurp(f));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw BadParams("cannot open " + path + " for writing");
  f << content;
}

// --out writes the document to a file; otherwise it goes to stdout.
void emit(const RunConfig& rc, const json& doc) {
  const std::string text = canonical_dump(doc);
  if (rc.out.empty())
    std::cout << text;
  else
    write_file(rc.out, text);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Inputs for the two-document commands: --set/--op paths, or a combined
// {"set":..., "operator":...} document on stdin when both are omitted.
void read_pair(const std::string& set_path, const std::string& op_path, ConvexSet& c,
               Operator& g) {
  if (set_path.empty() != op_path.empty())
    throw BadParams("provide both --set and --op, or neither (combined stdin)");
  if (set_path.empty()) {
    const json doc = read_doc("");
    if (!doc.is_object() || !doc.contains("set") || !doc.contains("operator"))
      throw BadParams("combined document needs \"set\" and \"operator\"");
    c = set_from_json(doc.at("set"));
    g = operator_from_json(doc.at("operator"));
  } else {
    c = set_from_json(read_doc(set_path));
    g = operator_from_json(read_doc(op_path));
  }
  const int dc = dim(c);  // 0 for balls, which fit any dimension
  if (dc != 0 && dc != g.dim())
    throw DimensionMismatch("set and operator dimensions differ");
}

json semi_skew_to_json(const SemiSkewForm& f) {
  json ss;
  ss["u"] = f.u;
  ss["u_perp"] = f.u_perp;
  ss["alpha1"] = f.alpha1;
  ss["alpha2"] = f.alpha2;
  return ss;
}

int cmd_solve(const RunConfig& rc, const std::string& op_path, const std::string& mode) {
  const Operator g = operator_from_json(read_doc(op_path));
  json out;
  out["operator"] = operator_to_json(g);
  std::vector<ConvexSet> sets;

  // auto prefers the unique positive definite answer, then the complete 1D
  // classification (which subsumes the symmetric route in dimension one),
  // then the spectral construction.
  if (mode == "pd" || (mode == "auto" && g.positive_definite())) {
    const ConvexSet c = solve_positive_definite(g);
    out["mode"] = "pd";
    out["solution"] = set_to_json(c);
    sets.push_back(c);
  } else if (mode == "1d" || (mode == "auto" && g.dim() == 1)) {
    if (g.dim() != 1) throw BadParams("1d mode needs a one dimensional operator");
    const double gamma = g.matrix()(0, 0);
    const OneDimSolutionFamily fam = classify_1d(gamma);
    json sol;
    sol["type"] = "one_d_family";
    sol["gamma"] = gamma;
    if (fam.unique) {
      sol["unique"] = set_to_json(*fam.unique);
      sets.push_back(*fam.unique);
    }
    if (fam.has_family) {
      json members = json::array();
      for (double b : {0.5, 1.0, 2.0}) {
        const Interval iv = fam.family_member(b);
        json m;
        m["b"] = b;
        m["set"] = set_to_json(iv);
        members.push_back(m);
        sets.push_back(iv);
      }
      sol["members"] = members;
      json rays = json::array();
      for (const Interval& r : fam.rays()) {
        rays.push_back(set_to_json(r));
        sets.push_back(r);
      }
      sol["rays"] = rays;
    }
    out["mode"] = "1d";
    out["solution"] = sol;
  } else if (mode == "symmetric" || (mode == "auto" && g.symmetric())) {
    const auto [a, c] = solve_symmetric(g);
    out["mode"] = "symmetric";
    out["solution"] = set_to_json(c);
    out["operator_equation_residual"] = operator_equation_residual(a, g);
    sets.push_back(c);
  } else {
    json err;
    err["error"] = "no constructive solver for this operator";
    if (g.dim() == 2) {
      try {
        err["semi_skew"] = semi_skew_to_json(semi_skew_decompose(g.matrix()));
        err["error"] = "semi-skew operator: no bounded solution with zero interior";
      } catch (const NotSemiSkew&) {
      }
    }
    emit(rc, err);
    return 2;
  }

  json reports = json::array();
  bool all_pass = true;
  for (const ConvexSet& c : sets) {
    const ResidualReport rep = verify_fixed_point(g, c, verify_config(rc));
    all_pass = all_pass && rep.pass;
    reports.push_back(report_to_json(rep));
  }
  out["reports"] = reports;
  emit(rc, out);
  return all_pass ? 0 : 1;
}

int cmd_verify(const RunConfig& rc, const std::string& set_path,
               const std::string& op_path) {
  ConvexSet c = Ball{};
  Operator g = Operator::scalar(1.0, 1);
  read_pair(set_path, op_path, c, g);
  const ResidualReport rep = verify_fixed_point(g, c, verify_config(rc));
  emit(rc, report_to_json(rep));
  return rep.pass ? 0 : 1;
}

const char* verdict_name(IterationTrace::Verdict v) {
  switch (v) {
    case IterationTrace::Verdict::converged: return "converged";
    case IterationTrace::Verdict::cycled: return "cycled";
    default: return "no_fixed_point_within_budget";
  }
}

int cmd_iterate(const RunConfig& rc, const std::string& set_path,
                const std::string& op_path) {
  ConvexSet c0 = Ball{};
  Operator g = Operator::scalar(1.0, 1);
  read_pair(set_path, op_path, c0, g);
  const IterationTrace tr = iterate_polarity(g, c0, rc.max_steps, rc.tol, verify_config(rc));

  std::ostringstream csv;
  csv << "step,self_residual,consecutive_residual\n";
  for (size_t k = 0; k < tr.self_residuals.size(); ++k) {
    csv << k << ',' << fmt_double(tr.self_residuals[k]) << ',';
    if (k > 0) csv << fmt_double(tr.consecutive_residuals[k - 1]);
    csv << '\n';
  }

  if (!rc.svg.empty()) {
    // overlay the first iterates only; later ones retrace the same cycle
    std::vector<ConvexSet> shown(tr.iterates.begin(),
                                 tr.iterates.begin() +
                                     std::min<size_t>(tr.iterates.size(), 8));
    write_file(rc.svg, render_svg(shown));
  }

  if (rc.out.empty()) {
    std::cout << csv.str();
  } else {
    write_file(rc.out, csv.str());
    json summary;
    summary["verdict"] = verdict_name(tr.verdict);
    summary["steps"] = static_cast<int>(tr.self_residuals.size());
    summary["min_self_residual"] = tr.min_self_residual;
    if (tr.converged_step >= 0) summary["converged_step"] = tr.converged_step;
    if (tr.cycle_period > 0) summary["cycle_period"] = tr.cycle_period;
    std::cout << canonical_dump(summary);
  }
  return 0;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw BadParams("expected --param key=value, got " + kv);
    try {
      out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw BadParams("parameter value is not a number in " + kv);
    }
  }
  return out;
}

int cmd_gallery(const RunConfig& rc, const std::string& name,
                const std::vector<std::string>& kvs) {
  const GalleryEntry e = gallery(name, parse_params(kvs));
  json out;
  out["name"] = e.name;
  out["citation"] = e.citation;
  out["params"] = e.params;
  out["operator"] = operator_to_json(e.g);

  json sets = json::array();
  json reports = json::array();
  bool as_expected = true;
  for (size_t i = 0; i < e.sets.size(); ++i) {
    const ResidualReport rep = verify_fixed_point(e.g, e.sets[i], verify_config(rc));
    as_expected = as_expected && (rep.pass == e.expected_pass[i]);
    sets.push_back(set_to_json(e.sets[i]));
    json r = report_to_json(rep);
    r["expected_pass"] = static_cast<bool>(e.expected_pass[i]);
    reports.push_back(r);
  }
  out["sets"] = sets;
  out["reports"] = reports;
  out["all_as_expected"] = as_expected;

  if (e.name == "unbounded_ellipsoid_demo") {
    const UnboundedEllipsoidReport w = unbounded_ellipsoid_demo(
        static_cast<int>(e.params.at("n")));
    json wit;
    wit["witness_norms"] = w.witness_norms;
    wit["max_norm"] = w.max_norm;
    out["witness"] = wit;
  }
  if (e.name == "semi_skew_nonexistence")
    out["semi_skew"] = semi_skew_to_json(semi_skew_decompose(e.g.matrix()));

  if (!rc.svg.empty()) {
    // boundary of each set next to its image under the polarity map; the two
    // coincide exactly when the verdict is pass
    std::vector<ConvexSet> shown = e.sets;
    for (const ConvexSet& c : e.sets) shown.push_back(polarity_map(e.g, c));
    write_file(rc.svg, render_svg(shown));
  }

  emit(rc, out);
  return as_expected ? 0 : 1;
}

void write_conjugate_csv(const RunConfig& rc, const GridFunction& f,
                         const GridFunction& fstar) {
  if (rc.out.empty()) return;
  std::ostringstream csv;
  csv << "# f\n";
  write_grid_csv(f, csv);
  csv << "# fstar\n";
  write_grid_csv(fstar, csv);
  write_file(rc.out, csv.str());
}

int conjugate_fb(const RunConfig& rc, double b) {
  if (!(b > 0.0)) throw BadParams("fb needs b > 0");
  const ConvexSet cb = Interval{-1.0 / b, b};
  const GridSpec grid = GridSpec::centered(4.0, rc.grid_nodes, 1);
  const GridFunction f = sample_grid(grid, [&](const Vector& x) {
    const double t = gauge(cb, x);
    return 0.5 * t * t;
  });
  const GridFunction fstar = legendre_grid(f);

  // the interval solves the gamma = -1 equation, so f(x) = f*(-x)
  double res = 0.0;
  int used = 0;
  for (int i = 0; i < grid.resolution[0]; ++i) {
    const Vector x{grid.coord(0, i)};
    const auto v = fstar.interpolate_reliable(Vector{-x[0]});
    if (!v) continue;
    res = std::max(res, std::abs(f.values[i] - *v));
    ++used;
  }
  if (used == 0) throw BadParams("no reliable dual nodes; widen the grid");

  const double tol = 5.0 * grid.spacing();
  json rep;
  rep["family"] = "fb";
  rep["b"] = b;
  rep["identity"] = "f(x) = fstar(-x)";
  rep["residual"] = res;
  rep["nodes_used"] = used;
  rep["tolerance"] = tol;
  rep["pass"] = res <= tol;
  write_conjugate_csv(rc, f, fstar);
  std::cout << canonical_dump(rep);
  return res <= tol ? 0 : 1;
}

int conjugate_quadratic(const RunConfig& rc, const std::string& op_path) {
  const Operator g = operator_from_json(read_doc(op_path));
  if (!g.positive_definite())
    throw NotPositiveDefinite("quadratic family needs a positive definite form");
  const Matrix a = g.matrix();
  const GridSpec grid = GridSpec::centered(4.0, rc.grid_nodes, a.dim());
  const GridFunction f = sample_grid(grid, [&](const Vector& x) {
    return 0.5 * dot(a * x, x);
  });
  const GridFunction fstar = legendre_grid(f);

  // grid conjugate against the closed form (1/2)<A^{-1} y, y>
  double res = 0.0;
  long used = 0;
  const GridSpec& dual = fstar.grid;
  if (dual.dim() == 1) {
    for (int i = 0; i < dual.resolution[0]; ++i) {
      if (!fstar.node_reliable(i)) continue;
      const Vector y{dual.coord(0, i)};
      res = std::max(res, std::abs(fstar.values[i] - quadratic_conjugate(a, y)));
      ++used;
    }
  } else {
    for (int i = 0; i < dual.resolution[0]; ++i)
      for (int j = 0; j < dual.resolution[1]; ++j) {
        const long flat = static_cast<long>(i) * dual.resolution[1] + j;
        if (!fstar.node_reliable(flat)) continue;
        const Vector y{dual.coord(0, i), dual.coord(1, j)};
        res = std::max(res, std::abs(fstar.values[flat] - quadratic_conjugate(a, y)));
        ++used;
      }
  }
  if (used == 0) throw BadParams("no reliable dual nodes; widen the grid");

  const double tol = 5.0 * grid.spacing();
  json rep;
  rep["family"] = "quadratic";
  rep["identity"] = "fstar(y) = (1/2)<A^-1 y, y>";
  rep["residual"] = res;
  rep["nodes_used"] = used;
  rep["tolerance"] = tol;
  rep["pass"] = res <= tol;
  write_conjugate_csv(rc, f, fstar);
  std::cout << canonical_dump(rep);
  return res <= tol ? 0 : 1;
}

int conjugate_gauge(const RunConfig& rc, const std::string& set_path,
                    const std::string& op_path) {
  ConvexSet c = Ball{};
  Operator g = Operator::scalar(1.0, 1);
  read_pair(set_path, op_path, c, g);
  const GridSpec grid = GridSpec::centered(4.0, rc.grid_nodes, g.dim());
  const double res = fixedpoint_function_residual(c, g, grid);

  if (!rc.out.empty()) {
    const GridFunction f = sample_grid(grid, [&](const Vector& x) {
      const double t = gauge(c, x);
      return 0.5 * t * t;
    });
    write_conjugate_csv(rc, f, legendre_grid(f));
  }

  const double tol = 5.0 * grid.spacing();
  json rep;
  rep["family"] = "gauge";
  rep["identity"] = "f(x) = fstar(G^T x) for f = (1/2) gauge^2";
  rep["residual"] = res;
  rep["tolerance"] = tol;
  rep["pass"] = res <= tol;
  std::cout << canonical_dump(rep);
  return res <= tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polarity fixed point toolkit"};
  app.require_subcommand(1);
  RunConfig rc;

  std::string mode = "auto";
  std::string set_path, op_path, family, gallery_name, fn_b = "2";
  std::vector<std::string> params;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", rc.tol, "verification tolerance");
    cmd->add_option("--dirs", rc.dirs, "sampled directions");
    cmd->add_option("--seed", rc.seed, "direction seed");
    cmd->add_option("--out", rc.out, "output path (stdout when omitted)");
  };

  CLI::App* solve = app.add_subcommand("solve", "construct a fixed point for an operator");
  solve->add_option("--op", op_path, "operator JSON (stdin when omitted)");
  solve->add_option("--mode", mode, "auto|pd|symmetric|1d")
      ->check(CLI::IsMember({"auto", "pd", "symmetric", "1d"}));
  add_common(solve);

  CLI::App* verify = app.add_subcommand("verify", "check a candidate set against an operator");
  verify->add_option("--set", set_path, "set JSON");
  verify->add_option("--op", op_path, "operator JSON");
  add_common(verify);

  CLI::App* iterate = app.add_subcommand("iterate", "run the polarity map iteration");
  iterate->add_option("--set", set_path, "starting set JSON");
  iterate->add_option("--op", op_path, "operator JSON");
  iterate->add_option("--steps", rc.max_steps, "step budget");
  iterate->add_option("--svg", rc.svg, "overlay figure path");
  add_common(iterate);

  CLI::App* gal = app.add_subcommand("gallery", "reproduce a named configuration");
  gal->add_option("name", gallery_name, "entry name")->required();
  gal->add_option("--param", params, "entry parameter key=value");
  gal->add_option("--svg", rc.svg, "figure path");
  add_common(gal);

  CLI::App* conj = app.add_subcommand("conjugate", "grid Legendre transform checks");
  conj->add_option("family", family, "fb|quadratic|gauge")->required();
  conj->add_option("--b", fn_b, "fb parameter");
  conj->add_option("--set", set_path, "set JSON (gauge family)");
  conj->add_option("--op", op_path, "operator JSON (quadratic and gauge families)");
  conj->add_option("--grid", rc.grid_nodes, "nodes per axis");
  add_common(conj);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(rc, op_path, mode);
    if (verify->parsed()) return cmd_verify(rc, set_path, op_path);
    if (iterate->parsed()) return cmd_iterate(rc, set_path, op_path);
    if (gal->parsed()) return cmd_gallery(rc, gallery_name, params);
    if (conj->parsed()) {
      if (family == "fb") return conjugate_fb(rc, std::stod(fn_b));
      if (family == "quadratic") return conjugate_quadratic(rc, op_path);
      if (family == "gauge") return conjugate_gauge(rc, set_path, op_path);
      throw UnknownEntry("unknown conjugate family: " + family);
    }
  } catch (const UnknownEntry& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
