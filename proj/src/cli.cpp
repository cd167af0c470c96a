#include "fuscat/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "fuscat/branching.hpp"
#include "fuscat/duality.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/io.hpp"
#include "fuscat/modular.hpp"
#include "fuscat/suite.hpp"

namespace fuscat {
namespace {

struct Options {
  std::string family = "sp-even";
  int n = -1;
  int k = -1;
  int ell = -1;
  int a = 1;
  int exponent_case = 0;  // 0 = run both cases
  double tol = 0.0;
  bool tol_set = false;
  double env_tol = -1.0;  // -1 = unset
  std::string format = "json";
  std::string sector;
  std::string out_path;
  int max_sum = 8;

  // explicit --tol beats FUSCAT_TOL beats the per-verb default
  double resolve_tol(double verb_default) const {
    if (tol_set) return tol;
    if (env_tol > 0.0) return env_tol;
    return verb_default;
  }
};

CategorySpec spec_from(const Options& o) {
  const Family fam = family_from_name(o.family);
  switch (fam) {
    case Family::SpEven:
      if (o.n < 0) throw std::invalid_argument("sp-even needs --n");
      if (o.ell >= 0) return CategorySpec::sp_even_ell(o.n, o.ell, o.a);
      if (o.k < 0) throw std::invalid_argument("sp-even needs --k or --ell");
      return CategorySpec::sp_even(o.n, o.k, o.a);
    case Family::SpOdd:
      if (o.n < 0 || o.ell < 0) throw std::invalid_argument("sp-odd needs --n and --ell");
      return CategorySpec::sp_odd(o.n, o.ell, o.a);
    case Family::SoOdd:
      if (o.k < 0 || o.ell < 0) throw std::invalid_argument("so-odd needs --k and --ell");
      return CategorySpec::so_odd(o.k, o.ell, o.a);
    case Family::SoLevel1:
      if (o.n < 0 || o.k < 0) throw std::invalid_argument("so-level1 needs --n and --k");
      return CategorySpec::so_level1(o.n, o.k);
  }
  throw std::invalid_argument("unknown family: " + o.family);
}

void need_rectangle(const Options& o, const std::string& verb) {
  if (o.n < 0 || o.k < 0) throw std::invalid_argument(verb + " needs --n and --k");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int emit(const Options& o, const std::string& payload, std::ostream& out,
         std::ostream& err, int code = 0) {
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "cannot open --out file: " << o.out_path << "\n";
      return 2;
    }
    f << payload;
    return code;
  }
  out << payload;
  return code;
}

int run_labels(const Options& o, std::ostream& out, std::ostream& err) {
  const CategorySpec spec = spec_from(o);
  const std::string payload =
      o.format == "csv" ? labels_csv(spec) : dump(labels_json(spec));
  return emit(o, payload, out, err);
}

int run_modular(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format == "csv") {
    err << "modular-data has no csv form; use json\n";
    return 2;
  }
  const CategorySpec spec = spec_from(o);
  const ModularData md = spec.family == Family::SoLevel1
                             ? so_level1_data(o.n, o.k)
                             : make_modular_data(spec, o.resolve_tol(1e-9));
  return emit(o, dump(modular_json(md)), out, err);
}

int run_fusion(const Options& o, std::ostream& out, std::ostream& err) {
  const CategorySpec spec = spec_from(o);
  const FusionTable f = fusion_table(spec, o.resolve_tol(1e-6));
  const std::string payload = o.format == "csv" ? fusion_csv(f) : dump(fusion_json(f));
  return emit(o, payload, out, err);
}

int run_branch(const Options& o, std::ostream& out, std::ostream& err) {
  need_rectangle(o, "branch");
  const BranchingTable bt = branching_table(o.n, o.k);
  if (o.format == "csv") return emit(o, branching_csv(bt, o.sector), out, err);
  json j = branching_json(bt);
  if (!o.sector.empty()) {
    json one;
    one[o.sector] = j["sectors"][o.sector];
    j["sectors"] = one;
  }
  return emit(o, dump(j), out, err);
}

int run_verify(const Options& o, const std::string& target, std::ostream& out,
               std::ostream& err) {
  if (target == "duality") {
    need_rectangle(o, "verify duality");
    const DualityReport rep = verify_sp_sp(o.n, o.k, o.resolve_tol(1e-9));
    return emit(o, dump(report_json(rep, target)), out, err, rep.pass() ? 0 : 1);
  }

  if (target == "duality-odd") {
    need_rectangle(o, "verify duality-odd");
    json j;
    j["target"] = target;
    j["n"] = o.n;
    j["k"] = o.k;
    json reports = json::array();
    bool all = true;
    std::vector<int> cases =
        o.exponent_case == 0 ? std::vector<int>{1, 2} : std::vector<int>{o.exponent_case};
    for (int caseno : cases) {
      const DualityReport rep = verify_sp_so_odd(o.n, o.k, caseno, o.resolve_tol(1e-9));
      all = all && rep.pass();
      json r = report_json(rep, target);
      r["case"] = caseno;
      reports.push_back(r);
    }
    j["reports"] = reports;
    j["pass"] = all;
    return emit(o, dump(j), out, err, all ? 0 : 1);
  }

  if (target == "branching") {
    need_rectangle(o, "verify branching");
    const BranchingReport rep = verify_branching(o.n, o.k);  // exact, no tolerance
    return emit(o, dump(report_json(rep, target)), out, err, rep.pass() ? 0 : 1);
  }

  if (target == "etale") {
    need_rectangle(o, "verify etale");
    const double rel = o.resolve_tol(1e-6);
    const BranchingReport rep = verify_etale_dims(o.n, o.k, rel, std::min(rel, 1e-9));
    return emit(o, dump(report_json(rep, target)), out, err, rep.pass() ? 0 : 1);
  }

  if (target == "modularity") {
    const CategorySpec spec = spec_from(o);
    if (spec.family == Family::SoLevel1) {
      err << "verify modularity needs a family with an s-matrix block\n";
      return 2;
    }
    const double tol = o.resolve_tol(1e-9);
    std::vector<Check> checks;
    try {
      const ModularData md = make_modular_data(spec, tol);
      const Eigen::MatrixXcd& S = md.smatrix;
      const int B = static_cast<int>(S.rows());
      const double gu =
          (S * S.adjoint() - Eigen::MatrixXcd::Identity(B, B)).cwiseAbs().maxCoeff();
      const double gs = (S - S.transpose()).cwiseAbs().maxCoeff();
      checks.push_back({"s-matrix is unitary", gu <= tol, gu, ""});
      checks.push_back({"s-matrix is symmetric", gs <= tol, gs, ""});
      try {
        const auto verlinde = verlinde_block(md, 1e-6);
        checks.push_back({"fusion coefficients are nonnegative integers", true, 0.0, ""});
        if (spec.family == Family::SpEven) {
          const auto integer_route = kac_walton_table(spec, md.labels);
          bool same = verlinde.size() == integer_route.size();
          for (size_t i = 0; same && i < verlinde.size(); ++i)
            same = verlinde[i].rows() == integer_route[i].rows() &&
                   verlinde[i].cols() == integer_route[i].cols() &&
                   (verlinde[i].array() == integer_route[i].array()).all();
          checks.push_back({"integer fusion route matches the s-matrix route", same,
                            same ? 0.0 : 1.0, ""});
        }
      } catch (const std::exception& e) {
        checks.push_back({"fusion coefficients are nonnegative integers", false, 1.0,
                          e.what()});
      }
    } catch (const std::exception& e) {
      checks.push_back({"modular data construction", false, 1.0, e.what()});
    }
    json j;
    j["target"] = target;
    j["spec"] = spec_json(spec);
    j["checks"] = checks_json(checks);
    const bool pass = all_pass(checks);
    j["pass"] = pass;
    return emit(o, dump(j), out, err, pass ? 0 : 1);
  }

  if (target == "all") {
    const auto results = run_acceptance(o.max_sum);
    json arr = json::array();
    bool all = true;
    for (const CriterionResult& r : results) {
      json c;
      c["id"] = r.id;
      c["name"] = r.name;
      c["pass"] = r.pass;
      c["summary"] = r.summary;
      c["failures"] = r.failures;
      arr.push_back(c);
      all = all && r.pass;
    }
    json j;
    j["target"] = target;
    j["max_sum"] = o.max_sum;
    j["criteria"] = arr;
    j["pass"] = all;
    return emit(o, dump(j), out, err, all ? 0 : 1);
  }

  err << "unknown verify target: " << target << "\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string target;

  CLI::App app{"modular data, fusion rules and level-rank checks for symplectic and"
               " orthogonal categories at roots of unity"};
  app.require_subcommand(1);

  app.add_option("--family", o.family,
                 "sp-even | sp-odd | so-odd | so-level1 (default sp-even)")
      ->check(CLI::IsMember({"sp-even", "sp-odd", "so-odd", "so-level1"}));
  app.add_option("--n", o.n, "rank (rows of the rectangle)");
  app.add_option("--k", o.k, "level or alcove width (columns of the rectangle)");
  app.add_option("--ell", o.ell, "root-of-unity order, overrides --k for sp-even");
  app.add_option("--a", o.a, "exponent in q = exp(i pi a / ell), default 1");
  app.add_option("--case", o.exponent_case,
                 "odd-duality exponent case 1 or 2, default both")
      ->check(CLI::Range(1, 2));
  CLI::Option* tol_opt =
      app.add_option("--tol", o.tol,
                     "numeric tolerance; FUSCAT_TOL overrides the per-verb default")
          ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--sector", o.sector, "restrict branch output to one sector")
      ->check(CLI::IsMember({"L0", "L1", "L+", "L-"}));
  app.add_option("--out", o.out_path, "write the payload to a file instead of stdout");
  app.add_option("--max-sum", o.max_sum, "bound on n + k for verify all, default 8")
      ->check(CLI::Range(2, 10));

  CLI::App* sub_labels = app.add_subcommand("labels", "list the simple-object labels");
  CLI::App* sub_modular =
      app.add_subcommand("modular-data", "labels, dims, twists, weights and the s-matrix");
  CLI::App* sub_fusion = app.add_subcommand("fusion", "nonzero fusion coefficients");
  CLI::App* sub_branch =
      app.add_subcommand("branch", "the four branching sectors of an n x k rectangle");
  CLI::App* sub_verify = app.add_subcommand("verify", "run a verification and report");
  sub_verify
      ->add_option("target", target,
                   "duality | duality-odd | branching | etale | modularity | all")
      ->required()
      ->check(CLI::IsMember(
          {"duality", "duality-odd", "branching", "etale", "modularity", "all"}));
  for (CLI::App* sub : {sub_labels, sub_modular, sub_fusion, sub_branch, sub_verify})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  o.tol_set = tol_opt->count() > 0;

  if (const char* env = std::getenv("FUSCAT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      err << "FUSCAT_TOL must be a positive number\n";
      return 2;
    }
    o.env_tol = v;
  }

  try {
    if (app.got_subcommand(sub_labels)) return run_labels(o, out, err);
    if (app.got_subcommand(sub_modular)) return run_modular(o, out, err);
    if (app.got_subcommand(sub_fusion)) return run_fusion(o, out, err);
    if (app.got_subcommand(sub_branch)) return run_branch(o, out, err);
    if (app.got_subcommand(sub_verify)) return run_verify(o, target, out, err);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no verb given\n";
  return 2;
}

}  // namespace fuscat
