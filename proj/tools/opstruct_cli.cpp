#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opstruct/emit.hpp"
#include "opstruct/instance_io.hpp"
#include "opstruct/pipeline.hpp"

namespace {

using namespace opstruct;

struct RunOptions {
  std::string input;
  std::optional<int> n_max;
  std::optional<int> horizon;
  std::string report;
  std::string format = "json";
  std::vector<std::string> checks;
  bool timing = false;
};

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int run_checks(const RunOptions& opt, const std::vector<std::string>& scope) {
  try {
    const InstanceSpec spec = load_instance(opt.input);
    PipelineConfig cfg = spec.config;
    if (opt.n_max) cfg.n_max = *opt.n_max;
    if (opt.horizon) cfg.horizon = *opt.horizon;
    if (!opt.checks.empty()) {
      const auto& known = all_checks();
      for (const auto& c : opt.checks) {
        if (std::find(known.begin(), known.end(), c) == known.end()) {
          throw Error(ErrorKind::schema_error, "unknown check \"" + c + "\"");
        }
      }
      cfg.checks = opt.checks;
    }
    // Restrict to the subcommand's half of the pipeline.
    std::vector<std::string> kept;
    for (const auto& c : cfg.checks) {
      if (std::find(scope.begin(), scope.end(), c) != scope.end()) kept.push_back(c);
    }
    cfg.checks = kept;
    cfg.timing = opt.timing;

    const RelationInstance inst = build_instance(spec, cfg);
    const PipelineReport report = run_pipeline(inst, cfg);
    const std::string doc = opt.format == "text" ? emit_text(report) : emit_json(report);
    if (const int rc = write_output(doc, opt.report); rc != 0) return rc;
    if (!opt.report.empty() && opt.format == "json") std::cout << emit_text(report);
    return report.exit_code();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (!opt.report.empty() && opt.format == "json") write_output(emit_error_json(e), opt.report);
    return 2;
  }
}

int run_family(const std::string& name, int K, const std::string& alpha, const std::string& beta,
               const std::string& format) {
  try {
    FamilySpec fam;
    fam.kind = parse_family_kind(name);
    fam.alpha = parse_rational(alpha);
    fam.beta = parse_rational(beta);
    const FamilyData data = classical_family(fam, K);
    const auto& rc = data.recurrence;
    const std::vector<Poly> polys = generate(rc, rc.size());
    if (format == "text") {
      std::cout << fam.name() << ", moments through x^" << K << "\n";
      for (int k = 0; k <= K; ++k) std::cout << "  mu_" << k << " = " << to_string(data.functional.moment(k)) << "\n";
      for (int n = 0; n < rc.size(); ++n) std::cout << "  beta_" << n << " = " << to_string(rc.beta(n)) << "\n";
      for (int n = 1; n < rc.size(); ++n) std::cout << "  gamma_" << n << " = " << to_string(rc.gamma(n)) << "\n";
      for (std::size_t n = 0; n < polys.size(); ++n) std::cout << "  P_" << n << " = " << polys[n].to_string() << "\n";
      return 0;
    }
    nlohmann::json j;
    j["family"] = fam.name();
    j["K"] = K;
    auto strs = [](const std::vector<Rational>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& x : v) a.push_back(to_string(x));
      return a;
    };
    j["moments"] = strs(data.functional.moments());
    j["beta"] = strs(rc.betas());
    j["gamma"] = strs(rc.gammas());
    j["polys"] = nlohmann::json::array();
    for (const auto& p : polys) j["polys"].push_back(strs(p.coeffs()));
    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

void add_run_options(CLI::App* cmd, RunOptions& opt) {
  cmd->add_option("--input", opt.input, "instance JSON file")->required();
  cmd->add_option("--nmax", opt.n_max, "highest degree examined (default from the instance, else 12)");
  cmd->add_option("--horizon", opt.horizon, "moment horizon K (default 2 n_max + N + M + 2)");
  cmd->add_option("--report", opt.report, "write the report here instead of stdout");
  cmd->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--checks", opt.checks, "comma-separated subset of checks")->delimiter(',');
  cmd->add_flag("--timing", opt.timing, "include per-check wall time (not deterministic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for linearly related orthogonal polynomial sequences"};
  app.require_subcommand(1);

  std::string family_name;
  int family_k = 24;
  std::string family_alpha = "0";
  std::string family_beta = "0";
  std::string family_format = "json";
  auto* family = app.add_subcommand("family", "dump exact moments and recurrence of a classical family");
  family->add_option("name", family_name, "legendre, chebyshev_T, chebyshev_U, jacobi, laguerre, hermite")->required();
  family->add_option("--k", family_k, "moment depth")->check(CLI::Range(0, 400));
  family->add_option("--alpha", family_alpha, "jacobi / laguerre parameter");
  family->add_option("--beta", family_beta, "jacobi parameter");
  family->add_option("--format", family_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  RunOptions check_opt, inverse_opt, ortho_opt;
  auto* check = app.add_subcommand("check", "run the full pipeline");
  add_run_options(check, check_opt);
  auto* inverse = app.add_subcommand("inverse", "functional relation checks only");
  add_run_options(inverse, inverse_opt);
  auto* ortho = app.add_subcommand("ortho", "orthogonality characterization only");
  add_run_options(ortho, ortho_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (family->parsed()) return run_family(family_name, family_k, family_alpha, family_beta, family_format);
  if (check->parsed()) return run_checks(check_opt, all_checks());
  if (inverse->parsed()) {
    return run_checks(inverse_opt, {"regularity", "initial", "lemma_dets", "inverse", "constancy", "nonvanishing",
                                    "uniqueness"});
  }
  return run_checks(ortho_opt, {"prop31", "prop32", "thm33"});
}
