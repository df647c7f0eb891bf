// Copyright 2026 The pkr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pkr/certify.hpp"
#include "pkr/error.hpp"
#include "pkr/io.hpp"
#include "pkr/lipschitz.hpp"
#include "pkr/oracle.hpp"
#include "pkr/pknorm.hpp"
#include "pkr/transport.hpp"

namespace pkr::cli {

namespace {

using io::Json;

enum class LogLevel { kQuiet, kInfo, kDebug };

LogLevel log_level() {
  const char* env = std::getenv("PKR_LOG");
  if (env == nullptr) return LogLevel::kQuiet;
  const std::string v(env);
  if (v == "debug") return LogLevel::kDebug;
  if (v == "info") return LogLevel::kInfo;
  return LogLevel::kQuiet;
}

struct RunConfig {
  std::string command;
  std::string exponent = "1";
  double tol = kDefaultTol;
  std::string space_path;
  std::string measure_path;
  std::string mu_path;
  std::string nu_path;
  std::string pairs_path;
  std::string solution_path;
  std::string output_path;
  std::size_t max_points = 64;
  unsigned jobs = 1;
  bool allow_repair = false;
  bool oracle = false;
  std::uint64_t seed = 1;
};

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err), level_(log_level()) {}

  void log(LogLevel level, const std::string& msg) const {
    if (level_ >= level) err_ << "[pkr] " << msg << '\n';
  }

  void emit(const Json& doc) const {
    const std::string text = io::dump(doc) + "\n";
    if (cfg_.output_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.output_path);
    if (!file) {
      throw Error(ErrorKind::kIoError,
                  "cannot write '" + cfg_.output_path + "'");
    }
    file << text;
  }

  SpacePtr space() const {
    ValidationOptions opts;
    opts.allow_repair = cfg_.allow_repair;
    SpacePtr s = io::parse_space(io::load_json(require(cfg_.space_path, "--space")),
                                 opts);
    log(LogLevel::kDebug, "space with " + std::to_string(s->size()) + " points");
    return s;
  }

  SignedMeasure measure(const SpacePtr& space, const std::string& path,
                        const char* flag) const {
    return io::parse_measure(io::load_json(require(path, flag)), space);
  }

  static const std::string& require(const std::string& value, const char* flag) {
    if (value.empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(flag) + " is required for this command");
    }
    return value;
  }

  int validate() const {
    const SpacePtr s = space();
    emit({{"valid", true},
          {"points", s->size()},
          {"diameter", s->diameter()}});
    return kOk;
  }

  int kr() const {
    const SpacePtr s = space();
    const FlowResult r = kr_norm(measure(s, cfg_.measure_path, "--measure"));
    emit(io::flow_to_json(r));
    return kOk;
  }

  int tv() const {
    const Json doc = io::load_json(require(cfg_.measure_path, "--measure"));
    double value = 0.0;
    if (!cfg_.space_path.empty()) {
      value = tv_norm(io::parse_measure(doc, space()));
    } else {
      for (double w : io::parse_weight_array(doc)) value += std::abs(w);
    }
    emit({{"value", value}});
    return kOk;
  }

  int pk() const {
    const double p = io::parse_exponent(cfg_.exponent, ErrorKind::kInvalidP);
    const SpacePtr s = space();
    const SignedMeasure mu = measure(s, cfg_.measure_path, "--measure");
    return report_pk(mu, p, [&](Json& doc) {
      if (!cfg_.oracle) return;
      const HolderPair hp = HolderPair::from_p(p);
      Json extra;
      if (s->size() <= 3) extra["pk"] = oracle::oracle_pk(mu, p, 200);
      extra["dual"] = oracle::oracle_dual(mu, hp.q, 100000, cfg_.seed);
      doc["oracle"] = std::move(extra);
    });
  }

  template <typename Extra>
  int report_pk(const SignedMeasure& mu, double p, Extra&& extra) const {
    try {
      const PkSolution sol = pk_norm(mu, p, cfg_.tol);
      log(LogLevel::kInfo, "value " + std::to_string(sol.value) + ", gap " +
                               std::to_string(sol.gap) + ", " +
                               std::to_string(sol.frontier.size()) +
                               " frontier points");
      Json doc = io::pk_to_json(sol);
      extra(doc);
      emit(doc);
      return kOk;
    } catch (const ToleranceNotMet& e) {
      emit(io::pk_to_json(e.best()));
      throw;
    }
  }

  int dist() const {
    const double p = io::parse_exponent(cfg_.exponent, ErrorKind::kInvalidP);
    const SpacePtr s = space();
    if (cfg_.pairs_path.empty()) {
      const SignedMeasure mu = measure(s, cfg_.mu_path, "--mu");
      const SignedMeasure nu = measure(s, cfg_.nu_path, "--nu");
      require_same_space(mu.space(), nu.space());
      return report_pk(mu - nu, p, [](Json&) {});
    }
    return batch(s, p);
  }

  // Manifest: {"pairs": [{"mu": <measure or path>, "nu": <measure or path>}]}
  // with paths relative to the manifest.
  int batch(const SpacePtr& s, double p) const {
    const Json manifest = io::load_json(cfg_.pairs_path);
    if (!manifest.is_object() || !manifest.contains("pairs") ||
        !manifest["pairs"].is_array()) {
      throw Error(ErrorKind::kSchemaError, "manifest needs a 'pairs' array");
    }
    const std::filesystem::path base =
        std::filesystem::path(cfg_.pairs_path).parent_path();
    auto load = [&](const Json& entry, const char* key) {
      if (!entry.is_object() || !entry.contains(key)) {
        throw Error(ErrorKind::kSchemaError,
                    std::string("manifest entry is missing '") + key + "'");
      }
      const Json& v = entry[key];
      if (v.is_string()) {
        return io::parse_measure(io::load_json((base / v.get<std::string>()).string()), s);
      }
      return io::parse_measure(v, s);
    };
    std::vector<SignedMeasure> diffs;
    for (const auto& entry : manifest["pairs"]) {
      diffs.push_back(load(entry, "mu") - load(entry, "nu"));
    }

    // Workers take indices in stride; results are placed by index.
    std::vector<std::optional<PkSolution>> results(diffs.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg_.jobs, diffs.size()));
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < diffs.size(); k += jobs) {
          results[k] = pk_norm(diffs[k], p, cfg_.tol);
        }
      }));
    }
    for (auto& w : workers) w.get();

    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(io::pk_to_json(*r));
    emit({{"p", io::exponent_to_json(p)}, {"results", std::move(arr)}});
    return kOk;
  }

  int dual() const {
    const double q = io::parse_exponent(cfg_.exponent, ErrorKind::kInvalidQ);
    const SpacePtr s = space();
    const DualSolution sol =
        dual_solve(measure(s, cfg_.measure_path, "--measure"), q, cfg_.tol);
    emit(io::dual_to_json(sol));
    return kOk;
  }

  int certify(bool p_given) const {
    const SpacePtr s = space();
    const SignedMeasure mu = measure(s, cfg_.measure_path, "--measure");
    const Json sol = io::load_json(require(cfg_.solution_path, "--solution"));
    const double p =
        p_given ? io::parse_exponent(cfg_.exponent, ErrorKind::kConjugacyError)
                : io::exponent_from_json(sol.value("p", Json("1")),
                                         ErrorKind::kConjugacyError);
    if (!sol.contains("xi") || !sol.contains("plan") || !sol.contains("dual_f")) {
      throw Error(ErrorKind::kSchemaError,
                  "solution needs 'xi', 'plan' and 'dual_f'");
    }
    const SignedMeasure xi = io::parse_measure(Json{{"weights", sol["xi"]}}, s);
    const TransportPlan plan = io::parse_plan(sol["plan"], s);
    const LipschitzFunction f =
        io::parse_function(Json{{"values", sol["dual_f"]}}, s);
    const Certificate cert = check_optimality(mu, xi, plan, f, p, cfg_.tol);
    emit(io::certificate_to_json(cert));
    return cert.passed() ? kOk : kRejected;
  }

  int frontier() const {
    const SpacePtr s = space();
    const auto pts =
        pareto_frontier(measure(s, cfg_.measure_path, "--measure"), cfg_.max_points);
    emit({{"frontier", io::frontier_to_json(pts)}});
    return kOk;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  LogLevel level_;
};

void report_error(std::ostream& err, std::string_view kind,
                  const std::string& detail) {
  err << io::dump({{"error", {{"kind", kind}, {"detail", detail}}}}) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"p-Kantorovich norms, q-Lipschitz duals and optimality certificates",
               "pkr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", cfg.output_path, "Write the result here")
      ->capture_default_str();

  auto add_space = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--space", cfg.space_path, "Space file (JSON)");
    if (required) opt->required();
    sub->add_flag("--allow-repair", cfg.allow_repair,
                  "Symmetrize small asymmetries in the distance matrix");
  };
  auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--measure", cfg.measure_path, "Measure file (JSON)")
        ->required();
  };
  auto* validate = app.add_subcommand("validate", "Check a space file");
  add_space(validate, true);

  auto* kr = app.add_subcommand("kr", "Kantorovich-Rubinstein norm and plan");
  add_space(kr, true);
  add_measure(kr);

  auto* tv = app.add_subcommand("tv", "Total variation norm");
  add_space(tv, false);
  add_measure(tv);

  auto* pk = app.add_subcommand("pk", "p-Kantorovich norm");
  pk->add_option("--p", cfg.exponent, "Exponent: number >= 1 or inf")->required();
  add_space(pk, true);
  add_measure(pk);
  pk->add_option("--tol", cfg.tol, "Relative duality-gap tolerance")
      ->check(CLI::PositiveNumber);
  pk->add_flag("--oracle", cfg.oracle)->group("");
  pk->add_option("--seed", cfg.seed)->group("");

  auto* dist = app.add_subcommand("dist", "p-Kantorovich distance ||mu - nu||");
  dist->add_option("--p", cfg.exponent, "Exponent: number >= 1 or inf")->required();
  add_space(dist, true);
  dist->add_option("--mu", cfg.mu_path, "First measure file");
  dist->add_option("--nu", cfg.nu_path, "Second measure file");
  dist->add_option("--pairs", cfg.pairs_path, "Batch manifest (JSON)");
  dist->add_option("--jobs", cfg.jobs, "Worker threads for --pairs")
      ->check(CLI::PositiveNumber);
  dist->add_option("--tol", cfg.tol, "Relative duality-gap tolerance")
      ->check(CLI::PositiveNumber);

  auto* dual = app.add_subcommand("dual", "q-Lipschitz dual witness");
  dual->add_option("--q", cfg.exponent, "Exponent: number >= 1 or inf")->required();
  add_space(dual, true);
  add_measure(dual);
  dual->add_option("--tol", cfg.tol, "Relative tolerance")
      ->check(CLI::PositiveNumber);

  auto* certify = app.add_subcommand("certify", "Check optimality conditions");
  add_space(certify, true);
  add_measure(certify);
  certify->add_option("--solution", cfg.solution_path, "Output of 'pkr pk'")
      ->required();
  auto* certify_p = certify->add_option("--p", cfg.exponent,
                                        "Override the exponent in the solution");
  double certify_tol = kDefaultCertifyTol;
  certify->add_option("--tol", certify_tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber);

  auto* frontier = app.add_subcommand("frontier", "KR/TV trade-off curve");
  add_space(frontier, true);
  add_measure(frontier);
  frontier->add_option("--max-points", cfg.max_points, "Vertex cap (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "InvalidArgument", e.what());
    return kInvalidInput;
  }

  try {
    Session session(cfg, out, err);
    if (*validate) return session.validate();
    if (*kr) return session.kr();
    if (*tv) return session.tv();
    if (*pk) return session.pk();
    if (*dist) return session.dist();
    if (*dual) return session.dual();
    if (*certify) {
      cfg.tol = certify_tol;
      return session.certify(certify_p->count() > 0);
    }
    if (*frontier) return session.frontier();
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.detail());
    switch (e.kind()) {
      case ErrorKind::kToleranceNotMet: return kToleranceNotMet;
      case ErrorKind::kNumericalFailure: return kInternalError;
      default: return kInvalidInput;
    }
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kInternalError;
  }
  return kInvalidInput;
}

}  // namespace pkr::cli
