#include "qcs/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcs/errors.hpp"
#include "qcs/figures.hpp"
#include "qcs/moments.hpp"
#include "qcs/observables.hpp"
#include "qcs/qcore.hpp"
#include "qcs/sampler.hpp"
#include "qcs/states.hpp"
#include "qcs/verify.hpp"

namespace qcs::cli {

namespace {

struct EvalPoint {
  double x;
  std::complex<double> z;
  int n;
};

using Evaluator = std::function<double(const EvalPoint&, const Deformation&, const SeriesControl&)>;

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> table = {
      {"norm", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return normalization(p.x, d, c);
       }},
      {"wtilde", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return weight_tilde(p.x, d, c);
       }},
      {"w", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return weight(p.x, d, c);
       }},
      {"metric", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return metric_factor(p.x, d, c);
       }},
      {"mandel", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return mandel_q(p.x, d, c);
       }},
      {"varx", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return quadrature_variances(StateLabel(p.z), d, c).var_x;
       }},
      {"varp", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return quadrature_variances(StateLabel(p.z), d, c).var_p;
       }},
      {"rq", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return squeezing_ratio(p.x, d, c);
       }},
      {"snr", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return snr(p.x, d, c).sigma;
       }},
      {"rho", [](const EvalPoint& p, const Deformation& d, const SeriesControl&) {
         return rho_characteristic(p.n, d).value;
       }},
      {"varxb", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return deformed_variance(p.x, d, c);
       }},
      {"rbq", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return deformed_squeezing_ratio(p.x, d, c);
       }},
      {"snrb", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return deformed_snr(p.x, d, c);
       }},
      {"meann", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return mean_photon_number(p.x, d, c);
       }},
      {"pn", [](const EvalPoint& p, const Deformation& d, const SeriesControl& c) {
         return photon_probability(p.n, p.x, d, c);
       }},
  };
  return table;
}

std::string sci(double v, int digits = 16) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

struct Options {
  std::vector<double> q_list;
  double tol = 1e-14;
  bool tol_given = false;
  std::string out_path;
  std::uint64_t seed = 42;
  int points = 0;
  double x_max = std::numeric_limits<double>::quiet_NaN();

  // eval
  std::string quantity;
  double x = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> z;
  int n = 1;
  // figure
  int figure_id = 0;
  // verify
  std::string suite = "all";
  std::string format = "text";
  // sample
  long long draws = 1000000;
};

double single_q(const Options& o) {
  if (o.q_list.size() != 1) throw DomainError("exactly one --q value is required");
  return o.q_list.front();
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto& table = evaluators();
  const auto it = table.find(o.quantity);
  if (it == table.end()) throw DomainError("unknown quantity '" + o.quantity + "'");
  const Deformation d(single_q(o));
  EvalPoint p{0.0, 0.0, o.n};
  if (!o.z.empty()) {
    if (o.z.size() != 2) throw DomainError("--z takes re,im");
    p.z = {o.z[0], o.z[1]};
    p.x = std::norm(p.z);
  } else if (!std::isnan(o.x)) {
    if (!(o.x >= 0.0)) throw DomainError("--x must be >= 0");
    p.x = o.x;
    p.z = std::sqrt(o.x);
  } else if (o.quantity != "rho") {
    throw DomainError("eval needs --x or --z");
  }
  const SeriesControl ctrl(o.tol, SeriesControl{}.max_terms);
  const SeriesControl tighter(std::max(o.tol * 1e-2, 1e-17), SeriesControl{}.max_terms);
  const double value = it->second(p, d, ctrl);
  const double reference = it->second(p, d, tighter);
  const double scale = std::max(std::abs(reference), std::numeric_limits<double>::min());
  const double achieved =
      std::max(std::abs(value - reference) / scale, std::numeric_limits<double>::epsilon());
  out << o.quantity << " = " << sci(value) << "  (achieved rel tol " << sci(achieved, 1) << ")\n";
  return kSuccess;
}

int cmd_figure(const Options& o, std::ostream& out, std::ostream& err) {
  FigureSpec spec = FigureSpec::defaults(o.figure_id);
  if (!o.q_list.empty()) spec.q_list = o.q_list;
  if (o.points > 0) spec.x_range.points = o.points;
  if (!std::isnan(o.x_max)) spec.x_range.hi = o.x_max;
  const SeriesControl ctrl(o.tol, SeriesControl{}.max_terms);
  const FigureTable table = build_figure(spec, ctrl);
  if (o.out_path.empty()) {
    write_csv(out, table);
    return kSuccess;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << o.out_path << "' for writing\n";
    return kIoError;
  }
  write_csv(file, table);
  file.flush();
  if (!file) {
    err << "error: write to '" << o.out_path << "' failed\n";
    return kIoError;
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const double tol = o.tol_given ? o.tol : 1e-6;
  const VerifyReport report = run_suite(o.suite, o.q_list, tol);
  if (o.format == "json") {
    write_json(out, report);
  } else {
    write_text(out, report);
  }
  return report.all_pass() ? kSuccess : kVerificationFailed;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const Deformation d(single_q(o));
  if (std::isnan(o.x)) throw DomainError("sample needs --x");
  const SampleReport r = sample_photon_numbers(d, o.x, o.draws, o.seed);
  const bool ok = r.consistent();
  if (o.format == "json") {
    nlohmann::json j = {{"q", r.q},
                        {"x", r.x},
                        {"draws", r.draws},
                        {"seed", r.seed},
                        {"rng", r.rng},
                        {"empirical_mean", r.empirical_mean},
                        {"mean_std_error", r.mean_std_error},
                        {"empirical_Q", r.empirical_Q},
                        {"analytic_Q", r.analytic_Q},
                        {"std_error", r.std_error},
                        {"pass", ok}};
    out << j.dump(2) << '\n';
  } else {
    out << "q=" << format_q(r.q) << "\n"
        << "x=" << sci(r.x) << "\n"
        << "draws=" << r.draws << "\n"
        << "seed=" << r.seed << "\n"
        << "rng=" << r.rng << "\n"
        << "empirical_mean=" << sci(r.empirical_mean) << "\n"
        << "mean_std_error=" << sci(r.mean_std_error) << "\n"
        << "empirical_Q=" << sci(r.empirical_Q) << "\n"
        << "analytic_Q=" << sci(r.analytic_Q) << "\n"
        << "std_error=" << sci(r.std_error) << "\n"
        << "three_sigma=" << sci(3.0 * r.std_error) << "\n"
        << "verdict=" << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

const std::vector<std::string>& eval_quantities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : evaluators()) v.push_back(name);
    return v;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"q-deformed coherent states: evaluation, figure data, verification, sampling",
               "qcs"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--q", o.q_list, "deformation parameter(s), comma separated")->delimiter(',');
  auto* tol = app.add_option("--tol", o.tol, "series tolerance (verify: moment threshold)");
  app.add_option("--out", o.out_path, "output file");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--points", o.points, "grid points")->check(CLI::PositiveNumber);
  app.add_option("--x-max", o.x_max, "upper end of the abscissa range");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate one quantity at a point");
  eval->add_option("quantity", o.quantity, "quantity name")->required();
  eval->add_option("--x", o.x, "intensity |z|^2");
  eval->add_option("--z", o.z, "complex label re,im")->delimiter(',')->expected(2);
  eval->add_option("--n", o.n, "photon number (pn, rho)");

  auto* figure = app.add_subcommand("figure", "write figure data as CSV");
  figure->add_option("id", o.figure_id, "figure number 1..9")->required()->check(CLI::Range(1, 9));

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", o.suite, "moments|limits|observables|fock|carleman|all");

  auto* sample = app.add_subcommand("sample", "Monte Carlo photon-number sampling");
  sample->add_option("--x", o.x, "intensity |z|^2")->required();
  sample->add_option("--draws", o.draws, "number of draws")->check(CLI::Range(1000LL, 1LL << 40));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  o.tol_given = tol->count() > 0;

  try {
    if (!(o.tol > 0.0)) throw DomainError("--tol must be positive");
    if (eval->parsed()) return cmd_eval(o, out);
    if (figure->parsed()) return cmd_figure(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
  } catch (const InvalidDeformation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNonConvergence;
  }
  return kUsage;
}

}  // namespace qcs::cli
