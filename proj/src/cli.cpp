#include "tessarine/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "tessarine/error.hpp"
#include "tessarine/io.hpp"

namespace tess::cli {

namespace {

using io::json;

struct Common {
  std::string input;
  double tol = 1e-9;
  double recon_tol = 1e-7;
  std::optional<std::uint64_t> seed;
  int max_retries = 16;
};

void add_common(CLI::App* cmd, Common& c, bool input) {
  if (input) cmd->add_option("input", c.input, "matrix pair JSON file")->required();
  cmd->add_option("--tol", c.tol, "equality and rank tolerance")->capture_default_str();
  cmd->add_option("--recon-tol", c.recon_tol, "reconstruction acceptance")->capture_default_str();
  cmd->add_option("--seed", c.seed, "rng seed (default: $TESSARINE_SEED, else 0)");
  cmd->add_option("--max-retries", c.max_retries, "orthonormal extension retry bound")
      ->capture_default_str();
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  const char* env = std::getenv("TESSARINE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorKind::ParseError, "TESSARINE_SEED is not an integer");
  return v;
}

DecompositionOptions options_for(const Common& c) {
  DecompositionOptions o;
  o.rank_tol = c.tol;
  o.recon_tol = c.recon_tol;
  o.extension.max_retries = c.max_retries;
  return o;
}

json header(std::string_view command, const Common& c, std::uint64_t seed) {
  return {{"command", command},
          {"tolerances", {{"tol", c.tol}, {"recon_tol", c.recon_tol}}},
          {"seed", seed}};
}

json jsvd_json(const JordanSVD& s) {
  return {{"U", io::to_json(s.u)},
          {"S", io::to_json(s.s)},
          {"V", io::to_json(s.v)},
          {"j_blocks", io::to_json(s.blocks)},
          {"route", to_string(s.route)},
          {"residual", s.residual}};
}

// Status for decompositions that exist exactly when a Jordan SVD does.
std::optional<std::string> necessary_failure(const DCMatrix& m, const DecompositionOptions& o) {
  const auto nec = jsvd_necessary(m, o);
  for (int k = 0; k < 3; ++k) {
    if (!nec[k]) return "necessary condition " + std::to_string(k + 1) + " fails";
  }
  return std::nullopt;
}

int emit(std::ostream& out, const json& doc, int code) {
  out << doc.dump(2) << '\n';
  return code;
}

int failure(std::ostream& out, json doc, const Error& e) {
  doc["status"] = "Unknown";
  doc["error"] = to_string(e.kind());
  doc["reason"] = e.what();
  return emit(out, doc, kFailure);
}

int not_exists(std::ostream& out, json doc, const std::string& reason) {
  doc["status"] = "NotExists";
  doc["reason"] = reason;
  return emit(out, doc, kNotExists);
}

int cmd_check(const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c);
  const DCMatrix m = io::read_pair(c.input);
  Rng rng(seed);
  json doc = header("check", c, seed);
  doc["n"] = m.size();
  doc.update(io::to_json(existence_report(m, rng, options_for(c))));
  return emit(out, doc, kOk);
}

int cmd_pinv(const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c);
  const DCMatrix m = io::read_pair(c.input);
  const auto o = options_for(c);
  json doc = header("pinv", c, seed);
  const auto ranks = rank_profile(m, o.rank_tol);
  if (!ranks.pinv_exists()) {
    return not_exists(out, doc, "rank(AB) = rank(A) = rank(B) = rank(BA) fails");
  }
  try {
    Rng rng(seed);
    const DCMatrix k = pinv(m, rng, o);
    const auto check = penrose_check(m, k, o.penrose_tol);
    doc["status"] = "Exists";
    doc["pinv"] = io::to_json(k);
    doc["penrose"] = io::to_json(check);
    doc["residual"] = check.worst();
    return emit(out, doc, kOk);
  } catch (const Error& e) {
    return failure(out, doc, e);
  }
}

int cmd_jsvd(const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c);
  const DCMatrix m = io::read_pair(c.input);
  const auto o = options_for(c);
  json doc = header("jsvd", c, seed);
  try {
    if (auto why = necessary_failure(m, o)) return not_exists(out, doc, *why);
    Rng rng(seed);
    const auto s = jordan_svd(m, rng, o);
    doc["status"] = "Exists";
    doc.update(jsvd_json(s));
    return emit(out, doc, kOk);
  } catch (const Error& e) {
    return failure(out, doc, e);
  }
}

int cmd_svd(const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c);
  const DCMatrix m = io::read_pair(c.input);
  json doc = header("svd", c, seed);
  try {
    const auto s = naive_dc_svd(m, options_for(c));
    doc["status"] = "Exists";
    doc["U"] = io::to_json(s.u);
    doc["S"] = io::to_json(s.s);
    doc["V"] = io::to_json(s.v);
    doc["residual"] = s.residual;
    return emit(out, doc, kOk);
  } catch (const Error& e) {
    return failure(out, doc, e);
  }
}

int cmd_polar(const Common& c, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c);
  const DCMatrix m = io::read_pair(c.input);
  const auto o = options_for(c);
  json doc = header("polar", c, seed);
  try {
    if (auto why = necessary_failure(m, o)) return not_exists(out, doc, *why);
    Rng rng(seed);
    const auto pd = polar(m, rng, o);
    doc["status"] = "Exists";
    doc["unitary_factor"] = io::to_json(pd.unitary_factor);
    doc["hermitian_factor"] = io::to_json(pd.hermitian_factor);
    doc["residual"] = pd.residual;
    return emit(out, doc, kOk);
  } catch (const Error& e) {
    return failure(out, doc, e);
  }
}

struct ExploreArgs {
  std::size_t trials = 100;
  std::vector<std::string> profiles{"dense", "ranks"};
  long n = 0;
  long max_n = 5;
  std::string out_path;
  std::string summary_path;
  unsigned threads = 1;
};

int cmd_explore(const Common& c, const ExploreArgs& a, std::ostream& out) {
  explore::ScanConfig config;
  config.trials = a.trials;
  config.profiles.clear();
  for (const auto& name : a.profiles) {
    if (name == "all") {
      config.profiles = explore::all_profiles();
      break;
    }
    config.profiles.push_back(explore::parse_profile(name));
  }
  if (a.n < 0 || a.n > 6 || a.max_n < 1 || a.max_n > 6) {
    throw Error(ErrorKind::BadProfile, "dimensions must lie in [1, 6]");
  }
  config.n = a.n;
  config.max_n = a.max_n;
  config.seed = resolve_seed(c);
  config.threads = a.threads;
  config.options = options_for(c);

  const auto result = explore::conjecture_scan(config);

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + a.out_path);
  }
  std::ostream& records = a.out_path.empty() ? out : file;
  for (const auto& rec : result.records) records << io::to_json(rec).dump() << '\n';

  json summary = header("explore", c, config.seed);
  summary["profiles"] = a.profiles;
  summary.update(io::to_json(result.summary, result.records));
  if (!a.summary_path.empty()) {
    std::ofstream s(a.summary_path);
    if (!s) throw Error(ErrorKind::ParseError, "cannot write " + a.summary_path);
    s << summary.dump(2) << '\n';
  } else if (!a.out_path.empty()) {
    out << summary.dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double-complex matrix decompositions", "tessarine"};
  app.require_subcommand(1);

  Common common;
  ExploreArgs explore_args;
  auto* check = app.add_subcommand("check", "ranks, necessary conditions, existence");
  auto* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose pseudoinverse");
  auto* jsvd = app.add_subcommand("jsvd", "Jordan SVD M = U [J, J] V*");
  auto* svd = app.add_subcommand("svd", "naive double-complex SVD");
  auto* polar_cmd = app.add_subcommand("polar", "polar decomposition M = U P");
  auto* explore_cmd = app.add_subcommand("explore", "randomized conjecture scan");
  for (auto* cmd : {check, pinv_cmd, jsvd, svd, polar_cmd}) add_common(cmd, common, true);
  add_common(explore_cmd, common, false);
  explore_cmd->add_option("--trials", explore_args.trials)->capture_default_str();
  explore_cmd->add_option("--profile", explore_args.profiles,
                          "dense, invertible, ranks, rank-condition, jordan, counterexample, "
                          "nilpotent, or all")
      ->delimiter(',')
      ->capture_default_str();
  explore_cmd->add_option("--n", explore_args.n, "fixed dimension (0: uniform in [1, max-n])");
  explore_cmd->add_option("--max-n", explore_args.max_n)->capture_default_str();
  explore_cmd->add_option("--out", explore_args.out_path, "NDJSON records (default: stdout)");
  explore_cmd->add_option("--summary", explore_args.summary_path, "summary JSON path");
  explore_cmd->add_option("--threads", explore_args.threads)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*check) return cmd_check(common, out);
    if (*pinv_cmd) return cmd_pinv(common, out);
    if (*jsvd) return cmd_jsvd(common, out);
    if (*svd) return cmd_svd(common, out);
    if (*polar_cmd) return cmd_polar(common, out);
    return cmd_explore(common, explore_args, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::BadProfile ||
            e.kind() == ErrorKind::DimensionMismatch)
               ? kInputError
               : kFailure;
  }
}

}  // namespace tess::cli
