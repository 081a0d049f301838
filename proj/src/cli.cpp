#include "nanotube/cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Core>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nanotube/graph_oracle.hpp"
#include "nanotube/hill.hpp"
#include "nanotube/json_io.hpp"
#include "nanotube/ranges.hpp"
#include "nanotube/spectra.hpp"

namespace nanotube {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::pair<int, int> parse_pair(const std::string& text, const char* flag) {
  int a, b;
  char rest;
  if (std::sscanf(text.c_str(), "%d,%d%c", &a, &b, &rest) != 2)
    throw UsageError(std::string(flag) + ": malformed pair '" + text + "'");
  return {a, b};
}

bool json_output(const RunConfig& c, bool default_json) {
  if (c.format == "json") return true;
  if (c.format == "csv") return false;
  return default_json;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + c.out_path);
  f << text;
}

}  // namespace

PotentialSpec make_potential(const std::string& text) {
  try {
    if (text == "zero") return PotentialSpec::zero();
    if (text.rfind("cosine:", 0) == 0)
      return PotentialSpec::cosine(std::stod(text.substr(7)));
    if (text.rfind("well:", 0) == 0) {
      auto rest = text.substr(5);
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw UsageError("well needs DEPTH:WIDTH");
      return PotentialSpec::square_well(std::stod(rest.substr(0, colon)),
                                        std::stod(rest.substr(colon + 1)));
    }
    if (text.rfind("file:", 0) == 0) return PotentialSpec::from_csv(text.substr(5));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("--potential '" + text + "': " + e.what());
  }
  throw UsageError("--potential: unknown form '" + text +
                   "' (want zero | cosine:A | well:DEPTH:WIDTH | file:PATH)");
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"spectra of Schrodinger operators on graphyne nanotubes"};
  app.require_subcommand(1);

  std::string p_text, q_text, out_text;
  bool have_lambda_min = false;

  auto add_common = [&](CLI::App* sub, bool wants_p, bool wants_q = false) {
    sub->add_option("--potential", c.potential,
                    "zero | cosine:A | well:DEPTH:WIDTH | file:PATH");
    if (wants_p) sub->add_option("--p", p_text, "tube vector p1,p2");
    if (wants_q) sub->add_option("--q", q_text, "reduced vector q1,q2 (q1,q2 >= 0)");
    sub->add_option("--lambda-min", c.lambda_min, "spectral window floor")
        ->each([&](const std::string&) { have_lambda_min = true; });
    sub->add_option("--lambda-max", c.lambda_max, "spectral window ceiling");
    sub->add_option("--grid", c.grid, "output grid points per unit");
    sub->add_option("--samples", c.samples, "quasimomentum samples for validation");
    sub->add_option("--points", c.points, "finite-difference points per edge");
    sub->add_option("--rings", c.rings, "support rings for eigenfunction search");
    sub->add_option("--tol", c.tol, "validation tolerance (0 = per-potential default)");
    sub->add_option("--eta", c.eta_target, "eta target: -1/3, 0 or 1/3");
    sub->add_option("--lambda", c.lambda, "explicit eigenvalue for eigenfunction")
        ->each([&](const std::string&) { c.lambda_given = true; });
    sub->add_flag("--oracle", c.oracle, "use the independent oracle path");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_text, "output file path, or json|csv");
  };

  add_common(app.add_subcommand("discriminant", "tabulate D(lambda) and eta(lambda)"),
             false);
  add_common(app.add_subcommand("dirichlet", "Dirichlet eigenvalues on [0,1]"), false);
  add_common(app.add_subcommand("dispersion-surface", "F1,F2,F3 on a theta grid"),
             false);
  add_common(app.add_subcommand("segments", "quasimomentum segments for a tube"), true,
             true);
  add_common(app.add_subcommand("range", "range of F1,F2,F3 on the segments"), false,
             true);
  add_common(app.add_subcommand("bands", "absolutely continuous bands"), true);
  add_common(app.add_subcommand("gaps", "gaps inside each Hill band"), true);
  add_common(app.add_subcommand("pure-point", "pure point spectrum"), true);
  add_common(app.add_subcommand("report", "full spectral report"), true);
  add_common(app.add_subcommand("validate", "cross-check against discrete oracles"),
             true);
  add_common(app.add_subcommand("eigenfunction", "compactly supported eigenfunctions"),
             true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  if (!out_text.empty()) {
    // `--out json|csv` selects the format; anything else is a file path
    if (out_text == "json" || out_text == "csv") {
      if (!c.format.empty() && c.format != out_text)
        throw UsageError("conflicting format flags");
      c.format = out_text;
    } else {
      c.out_path = out_text;
    }
  }

  if (!p_text.empty()) {
    auto [a, b] = parse_pair(p_text, "--p");
    if (a == 0 && b == 0) throw UsageError("--p: p must be nonzero");
    c.p = {a, b};
    c.has_p = true;
  }
  if (!q_text.empty()) {
    auto [a, b] = parse_pair(q_text, "--q");
    if (a < 0 || b < 0 || (a == 0 && b == 0))
      throw UsageError("--q: q must be nonzero with non-negative entries");
    c.q = {a, b};
    c.has_q = true;
  }

  bool tube_specific = c.subcommand == "bands" || c.subcommand == "gaps" ||
                       c.subcommand == "pure-point" || c.subcommand == "report" ||
                       c.subcommand == "validate" || c.subcommand == "eigenfunction";
  if (tube_specific && !c.has_p) throw UsageError(c.subcommand + " requires --p");
  if (c.subcommand == "segments" && !c.has_p && !c.has_q)
    throw UsageError("segments requires --p or --q");
  if (c.subcommand == "range" && !c.has_q) throw UsageError("range requires --q");

  if (!have_lambda_min) c.lambda_min = default_lambda_floor(make_potential(c.potential));

  if (const char* env = std::getenv("NANOTUBE_SPECTRA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
      throw UsageError("NANOTUBE_SPECTRA_THREADS must be a non-negative integer");
    c.threads = (int)v;
  }
  return c;
}

namespace {

int run_impl(const RunConfig& c, std::ostream& out) {
  PotentialSpec spec = make_potential(c.potential);
  std::ostringstream s;

  if (c.subcommand == "discriminant") {
    if (json_output(c, false)) {
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < c.grid; ++i) {
        double l = c.lambda_min + (c.lambda_max - c.lambda_min) * i / (c.grid - 1);
        Monodromy m = monodromy(spec, l);
        rows.push_back({{"lambda", l}, {"D", m.c1 + m.s1p}, {"eta", m.s1p}});
      }
      s << rows.dump(2) << "\n";
    } else {
      s << "lambda,D,eta\n";
      for (int i = 0; i < c.grid; ++i) {
        double l = c.lambda_min + (c.lambda_max - c.lambda_min) * i / (c.grid - 1);
        Monodromy m = monodromy(spec, l);
        s << num(l) << "," << num(m.c1 + m.s1p) << "," << num(m.s1p) << "\n";
      }
    }
  } else if (c.subcommand == "dirichlet") {
    auto ds = dirichlet_spectrum(spec, c.lambda_max);
    if (json_output(c, false)) {
      s << nlohmann::json(ds.eigenvalues).dump(2) << "\n";
    } else {
      s << "lambda\n";
      for (double l : ds.eigenvalues) s << num(l) << "\n";
    }
  } else if (c.subcommand == "dispersion-surface") {
    s << "theta1,theta2,F1,F2,F3\n";
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < c.grid; ++i)
      for (int j = 0; j < c.grid; ++j) {
        double t1 = -pi + 2.0 * pi * i / (c.grid - 1);
        double t2 = -pi + 2.0 * pi * j / (c.grid - 1);
        auto r = solve_F(Theta(t1, t2));
        s << num(t1) << "," << num(t2) << "," << num(r.f1) << "," << num(r.f2) << ","
          << num(r.f3) << "\n";
      }
  } else if (c.subcommand == "segments") {
    auto q = c.has_q ? c.q : reduce(c.p);
    s << to_json(segments(q)).dump(2) << "\n";
  } else if (c.subcommand == "range") {
    auto rep = range_union(c.q);
    nlohmann::json j = to_json(rep);
    if (c.oracle) {
      nlohmann::json cmp;
      const IntervalSet* lemma[3] = {&rep.r1, &rep.r2, &rep.r3};
      for (int jj = 1; jj <= 3; ++jj) {
        auto brute = brute_force_range(c.q, jj, 4000);
        cmp["r" + std::to_string(jj)] = to_json(brute);
        cmp["hausdorff_r" + std::to_string(jj)] = lemma[jj - 1]->hausdorff(brute);
      }
      j["oracle"] = cmp;
    }
    s << j.dump(2) << "\n";
  } else if (c.subcommand == "bands") {
    auto ac = ac_spectrum(c.p, spec, c.lambda_max).intersect(c.lambda_min, c.lambda_max);
    auto hill = hill_bands(spec, c.lambda_max);
    std::string label = tube_case_label(c.p);
    if (json_output(c, false)) {
      s << to_json(ac).dump(2) << "\n";
    } else {
      s << "band_lo,band_hi,hill_band_index,case\n";
      for (const auto& band : ac.pieces()) {
        int idx = 0;
        double mid = 0.5 * (band.lo + band.hi);
        for (std::size_t i = 0; i < hill.pieces().size(); ++i)
          if (hill.pieces()[i].lo <= mid && mid <= hill.pieces()[i].hi) idx = (int)i;
        s << num(band.lo) << "," << num(band.hi) << "," << idx << "," << label << "\n";
      }
    }
  } else if (c.subcommand == "gaps") {
    auto records = gap_report(c.p, spec, c.lambda_max);
    if (json_output(c, false)) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : records)
        arr.push_back({{"hill_band_index", r.hill_band_index},
                       {"gaps", to_json(r.gaps)},
                       {"case", r.case_label}});
      s << arr.dump(2) << "\n";
    } else {
      s << "gap_lo,gap_hi,hill_band_index,case\n";
      for (const auto& r : records)
        for (const auto& g : r.gaps.pieces())
          s << num(g.lo) << "," << num(g.hi) << "," << r.hill_band_index << ","
            << r.case_label << "\n";
    }
  } else if (c.subcommand == "pure-point") {
    auto pp = pure_point(c.p, spec, c.lambda_max);
    nlohmann::json sigma0 = nlohmann::json::array();
    for (const auto& e : pp.sigma_0)
      sigma0.push_back(
          {{"lambda", e.lambda}, {"eta_value", e.eta_value}, {"family", e.family}});
    s << nlohmann::json{{"sigma_D", pp.sigma_D}, {"sigma_0", sigma0}}.dump(2) << "\n";
  } else if (c.subcommand == "report") {
    s << to_json(full_report(c.p, spec, c.lambda_min, c.lambda_max)).dump(2) << "\n";
  } else if (c.subcommand == "validate") {
    double tol = c.tol > 0.0 ? c.tol
                             : (spec.kind() == PotentialSpec::Kind::Zero ? 2e-2 : 5e-2);
    auto check =
        dispersion_check(graphyne_config(), c.p, spec, c.samples, c.points, tol);
    nlohmann::json j = to_json(check);

    // compactly supported eigenfunctions: existence must match the eta-target
    // table used by pure_point
    auto pp = pure_point(c.p, spec, 40.0);
    bool table_ok = true;
    nlohmann::json table = nlohmann::json::array();
    for (double target : {-1.0 / 3.0, 0.0, 1.0 / 3.0}) {
      bool predicted = false;
      for (const auto& e : pp.sigma_0)
        if (std::abs(e.eta_value - target) < 1e-12) predicted = true;
      auto roots = solve_D_equals(spec, 2.0 * target, 40.0);
      if (roots.empty()) continue;
      auto res = build_compact_eigenfunction(c.p, target, roots.front(), c.rings, spec);
      bool ok = (res.dimension >= 1) == predicted;
      table_ok = table_ok && ok;
      table.push_back({{"eta_target", target},
                       {"predicted", predicted},
                       {"dimension", res.dimension},
                       {"ok", ok}});
    }
    j["eigenfunction_table"] = table;
    j["eigenfunction_table_ok"] = table_ok;
    s << j.dump(2) << "\n";
    emit(c, s.str(), out);
    return (check.pass && table_ok) ? 0 : 1;
  } else if (c.subcommand == "eigenfunction") {
    double lambda = c.lambda;
    if (!c.lambda_given) {
      auto roots = solve_D_equals(spec, 2.0 * c.eta_target, c.lambda_max);
      if (roots.empty())
        throw UsageError("no lambda with D(lambda) = 2*eta in the window");
      lambda = roots.front();
    }
    auto res = build_compact_eigenfunction(c.p, c.eta_target, lambda, c.rings, spec);
    nlohmann::json j = to_json(res);
    j["lambda"] = lambda;
    s << j.dump(2) << "\n";
  } else {
    throw UsageError("unknown subcommand " + c.subcommand);
  }

  emit(c, s.str(), out);
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.threads > 0) Eigen::setNbThreads(config.threads);
  try {
    return run_impl(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& e) {
    std::cout << e.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace nanotube
