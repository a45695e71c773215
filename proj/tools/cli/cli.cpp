#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "cccmap/ccc_mse_map.hpp"
#include "cccmap/errors.hpp"
#include "cccmap/even_p.hpp"
#include "cccmap/loss.hpp"
#include "cccmap/lp_bounds.hpp"
#include "cccmap/oracles.hpp"
#include "cccmap/permutation.hpp"
#include "cccmap/stats.hpp"
#include "input.hpp"
#include "report.hpp"

namespace cccmap::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string format = "csv";
  bool header = false;
  std::string gold_col = "0";
  std::string pred_col = "1";
  std::string error_col = "1";
  bool json = false;
  std::string out_path;
  std::uint64_t seed = 0;

  double mse = 0.0;
  double k = 2.0;
  double lk = 1.0;
  int theta_steps = 4;
  std::string objective = "max";
  int restarts = 16;
  int max_iters = 20000;
  bool audit = false;

  std::string variant = "ratio";
  double gamma = 1.0;
  double alpha = 1.0;
  int beta = 0;
  std::string eps_col, alpha_col, beta_col;
  double step = 0.01;
  int iters = 0;

  std::string kind = "mse";
  double x_max = 4.0;
  int steps = 81;
  std::size_t n = 64;

  std::string oracle = "all";
  std::uint64_t trials = 10000;
};

class Context {
 public:
  Context(const Options& o, const std::vector<std::string>& args, std::istream& in)
      : opt_(o), in_(in) {
    report_["tool"] = "cccmap";
    report_["version"] = kToolVersion;
    report_["command"] = args;
  }

  const Table& table() {
    if (!table_) {
      InputSpec spec;
      spec.path = opt_.input;
      spec.format = parse_format(opt_.format);
      spec.header = opt_.header;
      table_ = Table::load(spec, in_);
    }
    return *table_;
  }

  Sequence column(const std::string& spec, const char* role) {
    Sequence v = table().column(ColumnRef{spec});
    Json d;
    d["column"] = spec;
    d["n"] = v.size();
    d["mean"] = mean(v);
    d["stddev"] = population_stddev(v);
    report_["inputs"][role] = d;
    return v;
  }

  void set_seed(std::uint64_t seed) { report_["seed"] = seed; }
  Json& results() { return report_["results"]; }
  const Json& report() const { return report_; }

 private:
  const Options& opt_;
  std::istream& in_;
  std::optional<Table> table_;
  Json report_;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write output file '" + path + "'");
  return f;
}

Objective parse_objective(const std::string& s) {
  if (s == "max") return Objective::Max;
  if (s == "min") return Objective::Min;
  throw InvalidInput("objective must be 'max' or 'min'");
}

Json null_or(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

void cmd_analyze(const Options& o, Context& ctx) {
  const Sequence gold = ctx.column(o.gold_col, "gold");
  const Sequence pred = ctx.column(o.pred_col, "prediction");
  require_same_length(gold, pred);
  Json& r = ctx.results();
  const double vg = population_variance(gold);
  const double vp = population_variance(pred);
  r["mean_gold"] = mean(gold);
  r["mean_prediction"] = mean(pred);
  r["var_gold"] = vg;
  r["var_prediction"] = vp;
  r["cov"] = covariance(gold, pred);
  if (vg > 0.0 && vp > 0.0) {
    const PairStats s = pair_stats(pred, gold);
    r["pearson"] = s.pearson;
    r["c_b"] = s.c_b;
    r["shift_penalty"] = s.shift_penalty;
    r["scale_penalty"] = s.scale_penalty;
  } else {
    r["pearson"] = nullptr;
    r["c_b"] = nullptr;
    r["shift_penalty"] = nullptr;
    r["scale_penalty"] = nullptr;
  }
  const double m = mse(gold, pred);
  r["ccc"] = ccc(gold, pred);
  r["ccc_via_mse_cov"] = ccc_from_mse_cov(m, covariance(gold, pred));
  r["variance_identity_residual"] = variance_identity_residual(gold, pred);
  r["mse"] = m;
  r["mae"] = mae(gold, pred);
  const Sequence e = difference(pred, gold);
  r["l1"] = lp_norm(e, 1.0);
  r["l2"] = lp_norm(e, 2.0);
}

void cmd_bounds_mse(const Options& o, Context& ctx) {
  const Sequence gold = ctx.column(o.gold_col, "gold");
  const CenteredGold g(gold);
  const BoundsResult b = bounds_given_mse(g, o.mse);
  Json& r = ctx.results();
  r["mse"] = o.mse;
  r["sigma_gold"] = g.stddev();
  r["x"] = b.x_param;
  r["ccc_max"] = b.ccc_max;
  r["ccc_min"] = b.ccc_min;
  const auto shifted = [&](const Sequence& e) {
    Sequence p(gold);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += e[i];
    return p;
  };
  r["ccc_max_attained"] = ccc(gold, shifted(b.err_max));
  r["ccc_min_attained"] = ccc(gold, shifted(b.err_min));
  if (!o.out_path.empty()) {
    auto f = open_output(o.out_path);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < gold.size(); ++i) rows.push_back({gold[i], b.err_max[i], b.err_min[i]});
    write_csv(f, {"gold", "err_max", "err_min"}, rows);
    r["errors_csv"] = o.out_path;
  }
}

void cmd_bounds_lk(const Options& o, Context& ctx) {
  const Sequence gold = ctx.column(o.gold_col, "gold");
  const CenteredGold g(gold);
  const ThetaRange tr = theta_range(o.k, gold.size(), o.lk);
  const LkEnvelope env = envelope_given_lk(o.k, gold.size(), o.lk, g.stddev(), 1.0);
  Json& r = ctx.results();
  r["k"] = o.k;
  r["lk"] = o.lk;
  r["theta_min"] = tr.theta_min;
  r["theta_max"] = tr.theta_max;
  r["sqrt_mse_min"] = tr.mse_min_sqrt;
  r["sqrt_mse_max"] = tr.mse_max_sqrt;
  r["x"] = env.x;
  r["ccc_max_prime"] = env.ccc_max_prime;
  r["ccc_min_prime"] = env.ccc_min_prime;
  r["theta_0"] = null_or(env.theta_0);
  Json grid = Json::array();
  const auto table = region_data_lk(o.k, gold.size(), env.x, 2, o.theta_steps);
  for (std::size_t j = 0; j < table.thetas.size(); ++j) {
    grid.push_back({{"theta", table.thetas[j]}, {"ccc_min_at_theta", table.rows.back().at_theta[j]}});
  }
  r["theta_grid"] = grid;
}

void cmd_permute(const Options& o, Context& ctx) {
  const Sequence gold = ctx.column(o.gold_col, "gold");
  const Sequence errs = ctx.column(o.error_col, "errors");
  require_same_length(gold, errs);
  const ErrorSet es(errs);
  const OptimalPermutations best = optimal_permutations(gold, es);
  Json& r = ctx.results();
  const auto put = [&](const char* name, const PermutationResult& p) {
    r[name] = {{"convention", to_string(p.convention)},
               {"ccc", p.ccc_value},
               {"closed_form", p.formula_value}};
  };
  put("max1", best.max1);
  put("max2", best.max2);
  put("min1", best.min1);
  put("min2", best.min2);
  r["better_max"] = to_string(compare_max12(gold, es));
  if (o.audit) {
    if (gold.size() > 8) throw InvalidInput("--audit enumerates all orderings and needs N <= 8");
    const OracleReport plus = permutation_oracle(gold, es, Convention::PredictionMinusGold);
    const OracleReport minus = permutation_oracle(gold, es, Convention::GoldMinusPrediction);
    const auto agree = [](double a, double b) { return std::abs(a - b) <= 1e-10; };
    r["audit"] = {{"orderings", plus.trials},
                  {"best_p_plus", plus.best_value},
                  {"worst_p_plus", plus.worst_value},
                  {"best_p_minus", minus.best_value},
                  {"worst_p_minus", minus.worst_value},
                  {"agrees", agree(plus.best_value, best.max1.ccc_value) &&
                                 agree(plus.worst_value, best.min1.ccc_value) &&
                                 agree(minus.best_value, best.max2.ccc_value) &&
                                 agree(minus.worst_value, best.min2.ccc_value)}};
  }
  if (!o.out_path.empty()) {
    auto f = open_output(o.out_path);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      rows.push_back({gold[i], best.max1.prediction[i], best.max2.prediction[i], best.min1.prediction[i],
                      best.min2.prediction[i], best.max1.prediction[i] - best.max2.prediction[i]});
    }
    write_csv(f, {"gold", "pred_max1", "pred_max2", "pred_min1", "pred_min2", "max1_minus_max2"}, rows);
    r["predictions_csv"] = o.out_path;
  }
}

void cmd_solve_even_p(const Options& o, Context& ctx) {
  const Sequence gold = ctx.column(o.gold_col, "gold");
  ctx.set_seed(o.seed);
  if (o.k != std::floor(o.k)) throw InvalidInput("--k must be an even integer");
  const int k = static_cast<int>(o.k);
  const StationarityProblem prob{CenteredGold(gold), k, o.lk, parse_objective(o.objective)};
  const SolverState s = solve(prob, o.seed, SolverOptions{o.restarts, o.max_iters});
  Json& r = ctx.results();
  r["k"] = k;
  r["lk"] = o.lk;
  r["objective"] = o.objective;
  r["ccc"] = s.ccc;
  r["sigma_xy_over_mse"] = s.objective_value;
  r["sigma_gd"] = s.sigma_gd;
  r["lambda"] = s.lambda;
  r["stationarity_residual"] = s.residual_norm;
  r["lk_achieved"] = lp_norm(s.d, k);
  r["restart"] = s.restart;
  r["iterations"] = s.iterations;
  const double x = o.lk / (std::sqrt(static_cast<double>(gold.size())) * prob.gold.stddev());
  r["envelope_upper"] = psi_upper(x);
  if (k == 2) {
    const double closed = prob.objective == Objective::Max ? psi_upper(x) : psi_lower(x);
    r["closed_form_ccc"] = closed;
    r["agrees_with_closed_form"] = std::abs(closed - s.ccc) <= 1e-6;
  }
  r["errors"] = s.d;
  if (!o.out_path.empty()) {
    auto f = open_output(o.out_path);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < gold.size(); ++i) rows.push_back({gold[i], s.d[i], gold[i] + s.d[i]});
    write_csv(f, {"gold", "error", "prediction"}, rows);
  }
}

void cmd_loss(const Options& o, Context& ctx) {
  const Sequence gold = ctx.column(o.gold_col, "gold");
  const Sequence pred = ctx.column(o.pred_col, "prediction");
  require_same_length(gold, pred);
  LossParams prm;
  prm.variant = parse_loss_variant(o.variant);
  prm.gamma = o.gamma;
  prm.alpha = o.alpha;
  prm.beta = o.beta;
  if (prm.variant == LossVariant::GeneralRatio || prm.variant == LossVariant::GeneralDiff) {
    prm.per_sample_eps = o.eps_col.empty() ? Sequence(gold.size(), 1.0) : ctx.column(o.eps_col, "eps");
    prm.per_sample_alpha =
        o.alpha_col.empty() ? Sequence(gold.size(), o.alpha) : ctx.column(o.alpha_col, "alpha");
    if (o.beta_col.empty()) {
      prm.per_sample_beta.assign(gold.size(), o.beta);
    } else {
      for (double b : ctx.column(o.beta_col, "beta")) {
        if (b != std::floor(b)) throw InvalidInput("per-sample beta must be integral");
        prm.per_sample_beta.push_back(static_cast<int>(b));
      }
    }
  }
  Json& r = ctx.results();
  r["variant"] = to_string(prm.variant);
  r["gamma"] = prm.gamma;
  r["alpha"] = prm.alpha;
  r["beta"] = prm.beta;
  r["loss"] = loss(prm, gold, pred);
  r["gradient"] = loss_gradient(prm, gold, pred);
  if (o.iters > 0) {
    const Trace t = training_trace(prm, gold, pred, o.step, o.iters);
    r["trace"] = {{"step", o.step},
                  {"iters", o.iters},
                  {"initial_loss", t.rows.front().loss},
                  {"final_loss", t.rows.back().loss},
                  {"initial_ccc", t.rows.front().ccc},
                  {"final_ccc", t.rows.back().ccc},
                  {"diverged", t.diverged}};
    if (!o.out_path.empty()) {
      auto f = open_output(o.out_path);
      std::vector<std::vector<double>> rows;
      for (const auto& row : t.rows) rows.push_back({static_cast<double>(row.iter), row.loss, row.mse, row.ccc, row.step});
      write_csv(f, {"iter", "loss", "mse", "ccc", "step"}, rows);
      r["trace"]["csv"] = o.out_path;
    }
  }
}

void region_csv(const Options& o, std::ostream& out) {
  if (o.kind == "mse") {
    std::vector<std::vector<double>> rows;
    for (const auto& row : region_data_mse(o.x_max, o.steps)) rows.push_back({row.x, row.upper, row.lower});
    write_csv(out, {"x", "psi_upper", "psi_lower"}, rows);
    return;
  }
  if (o.kind != "lk") throw InvalidInput("--kind must be 'mse' or 'lk'");
  const LkRegionTable t = region_data_lk(o.k, o.n, o.x_max, o.steps, o.theta_steps);
  std::vector<std::string> header{"x", "psi_upper", "psi_lower"};
  for (double th : t.thetas) header.push_back("theta_" + format_number(th));
  std::vector<std::vector<double>> rows;
  for (const auto& row : t.rows) {
    std::vector<double> v{row.x, row.upper, row.lower};
    v.insert(v.end(), row.at_theta.begin(), row.at_theta.end());
    rows.push_back(std::move(v));
  }
  write_csv(out, header, rows);
}

Sequence random_gold(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Sequence g(n);
  for (double& v : g) v = u(rng);
  return g;
}

void cmd_audit(const Options& o, Context& ctx) {
  ctx.set_seed(o.seed);
  if (o.n < 2) throw InvalidInput("--n must be >= 2");
  std::mt19937_64 rng(o.seed);
  const Sequence gold = random_gold(rng, o.n);
  const CenteredGold g(gold);
  Json& r = ctx.results();
  r["n"] = o.n;
  r["gold"] = gold;
  const bool all = o.oracle == "all";
  bool known = all;

  if (all || o.oracle == "permutation") {
    known = true;
    if (o.n > 8) throw InvalidInput("permutation audit needs --n <= 8");
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Sequence e(o.n);
    for (double& v : e) v = u(rng);
    const ErrorSet es(e);
    const auto best = optimal_permutations(gold, es);
    const OracleReport plus = permutation_oracle(gold, es, Convention::PredictionMinusGold);
    const OracleReport minus = permutation_oracle(gold, es, Convention::GoldMinusPrediction);
    const double gap = std::max({std::abs(plus.best_value - best.max1.ccc_value),
                                 std::abs(plus.worst_value - best.min1.ccc_value),
                                 std::abs(minus.best_value - best.max2.ccc_value),
                                 std::abs(minus.worst_value - best.min2.ccc_value)});
    r["permutation"] = {{"errors", es.values()},
                        {"orderings", plus.trials},
                        {"max1", best.max1.ccc_value},
                        {"max2", best.max2.ccc_value},
                        {"min1", best.min1.ccc_value},
                        {"min2", best.min2.ccc_value},
                        {"max_abs_gap", gap},
                        {"agrees", gap <= 1e-10}};
  }
  if (all || o.oracle == "mse-sphere") {
    known = true;
    const double m = o.mse > 0.0 ? o.mse : g.variance();
    const BoundsResult b = bounds_given_mse(g, m);
    const OracleReport rep = mse_sphere_oracle(gold, m, o.trials, o.seed);
    r["mse_sphere"] = {{"mse", m},
                       {"trials", rep.trials},
                       {"best", rep.best_value},
                       {"worst", rep.worst_value},
                       {"psi_upper", b.ccc_max},
                       {"psi_lower", b.ccc_min},
                       {"within_bounds", rep.best_value <= b.ccc_max + 1e-9 && rep.worst_value >= b.ccc_min - 1e-9}};
  }
  if (all || o.oracle == "lk-sphere") {
    known = true;
    const double k = o.k == 2.0 && all ? 4.0 : o.k;
    const LkEnvelope env = envelope_given_lk(k, o.n, o.lk, g.stddev(), 1.0);
    const double tmax = theta_max(k, o.n);
    std::uint64_t outside = 0, theta_bad = 0;
    for_each_lk_sample(o.n, k, o.lk, o.trials, o.seed, [&](const Sequence& d) {
      Sequence p(gold);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += d[i];
      const double c = ccc(gold, p);
      if (c > env.ccc_max_prime + 1e-9 || c < env.ccc_min_prime - 1e-9) ++outside;
      const double th = theta_of(d, k);
      if (th < 1.0 - 1e-12 || th > tmax * (1.0 + 1e-12)) ++theta_bad;
    });
    const OracleReport rep = lk_sphere_oracle(gold, k, o.lk, o.trials, o.seed);
    Json j = {{"k", k},
              {"lk", o.lk},
              {"trials", rep.trials},
              {"best", rep.best_value},
              {"worst", rep.worst_value},
              {"envelope_upper", env.ccc_max_prime},
              {"envelope_lower", env.ccc_min_prime},
              {"outside_envelope", outside},
              {"theta_out_of_range", theta_bad}};
    if (k == std::floor(k) && static_cast<int>(k) % 2 == 0) {
      const StationarityProblem prob{g, static_cast<int>(k), o.lk, Objective::Max};
      const SolverState s = solve(prob, o.seed);
      j["solver_max"] = s.ccc;
      j["solver_dominates"] = rep.best_value <= s.ccc + 1e-9;
    }
    r["lk_sphere"] = j;
  }
  if (!known) throw InvalidInput("--oracle must be permutation, mse-sphere, lk-sphere or all");
}

void add_input_options(CLI::App* cmd, Options& o, bool pred, bool errors) {
  cmd->add_option("--input", o.input, "input file, '-' for standard input")->capture_default_str();
  cmd->add_option("--format", o.format, "csv, tsv or plain")->capture_default_str();
  cmd->add_flag("--header", o.header, "first data line holds column names");
  cmd->add_option("--gold-col", o.gold_col, "gold column (name or 0-based index)")->capture_default_str();
  if (pred) cmd->add_option("--pred-col", o.pred_col, "prediction column")->capture_default_str();
  if (errors) cmd->add_option("--error-col", o.error_col, "error column")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Concordance correlation coefficient vs. MSE-family metrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* analyze = app.add_subcommand("analyze", "pairwise statistics and the MSE/covariance route to ccc");
  add_input_options(analyze, o, true, false);

  auto* bmse = app.add_subcommand("bounds-mse", "ccc extremes at a fixed MSE");
  add_input_options(bmse, o, false, false);
  bmse->add_option("--mse", o.mse, "mean squared error")->required();
  bmse->add_option("--out", o.out_path, "write the attaining error vectors as CSV");

  auto* blk = app.add_subcommand("bounds-lk", "ccc envelope at a fixed L_k norm");
  add_input_options(blk, o, false, false);
  blk->add_option("--k", o.k, "norm order")->required();
  blk->add_option("--lk", o.lk, "L_k norm of the errors")->required();
  blk->add_option("--theta-steps", o.theta_steps, "geometric theta grid size")->capture_default_str();

  auto* perm = app.add_subcommand("permute", "optimal orderings of a fixed error set");
  add_input_options(perm, o, false, true);
  perm->add_flag("--audit", o.audit, "compare against exhaustive enumeration (N <= 8)");
  perm->add_option("--out", o.out_path, "write the optimal predictions as CSV");

  auto* sol = app.add_subcommand("solve-even-p", "extremize ccc at a fixed even-k norm");
  add_input_options(sol, o, false, false);
  sol->add_option("--k", o.k, "even norm order")->required();
  sol->add_option("--lk", o.lk, "L_k norm of the errors")->required();
  sol->add_option("--objective", o.objective, "max or min")->capture_default_str();
  sol->add_option("--seed", o.seed, "restart seed")->capture_default_str();
  sol->add_option("--restarts", o.restarts)->capture_default_str();
  sol->add_option("--max-iters", o.max_iters)->capture_default_str();
  sol->add_option("--out", o.out_path, "write the optimal error vector as CSV");

  auto* lossc = app.add_subcommand("loss", "evaluate a loss variant, its gradient and a descent trace");
  add_input_options(lossc, o, true, false);
  lossc->add_option("--variant", o.variant, "ratio, ratio-pow, general-ratio, diff, diff-pow, general-diff, abs-mse-over-cov")
      ->capture_default_str();
  lossc->add_option("--gamma", o.gamma)->capture_default_str();
  lossc->add_option("--alpha", o.alpha)->capture_default_str();
  lossc->add_option("--beta", o.beta)->capture_default_str();
  lossc->add_option("--eps-col", o.eps_col, "per-sample epsilon column (general variants)");
  lossc->add_option("--alpha-col", o.alpha_col, "per-sample alpha column (general variants)");
  lossc->add_option("--beta-col", o.beta_col, "per-sample beta column (general variants)");
  lossc->add_option("--step", o.step, "descent step")->capture_default_str();
  lossc->add_option("--iters", o.iters, "descent iterations; 0 disables the trace")->capture_default_str();
  lossc->add_option("--out", o.out_path, "write the trace as CSV");

  auto* region = app.add_subcommand("region", "envelope plot data as CSV");
  region->add_option("--kind", o.kind, "mse or lk")->capture_default_str();
  region->add_option("--x-max", o.x_max)->capture_default_str();
  region->add_option("--steps", o.steps)->capture_default_str();
  region->add_option("--k", o.k)->capture_default_str();
  region->add_option("--n", o.n, "sequence length (lk only)")->capture_default_str();
  region->add_option("--theta-steps", o.theta_steps)->capture_default_str();
  region->add_option("--out", o.out_path, "output CSV path; standard output if omitted");
  region->add_flag("--json", o.json);

  auto* audit = app.add_subcommand("audit", "brute-force oracles on a seeded random instance");
  audit->add_option("--oracle", o.oracle, "permutation, mse-sphere, lk-sphere or all")->capture_default_str();
  audit->add_option("--n", o.n)->capture_default_str();
  audit->add_option("--trials", o.trials)->capture_default_str();
  audit->add_option("--seed", o.seed)->capture_default_str();
  audit->add_option("--mse", o.mse, "MSE for the sphere oracle (default: gold variance)");
  audit->add_option("--k", o.k)->capture_default_str();
  audit->add_option("--lk", o.lk)->capture_default_str();

  for (auto* cmd : {analyze, bmse, blk, perm, sol, lossc, audit}) {
    cmd->add_flag("--json", o.json, "machine-readable output");
  }
  audit->get_option("--n")->default_val(4);
  o.n = 4;

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("cccmap");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (region->parsed()) {
      if (o.kind == "lk" && app.get_subcommand("region")->count("--n") == 0) o.n = 64;
      if (o.out_path.empty()) {
        region_csv(o, out);
        return kExitOk;
      }
      auto f = open_output(o.out_path);
      region_csv(o, f);
      Context ctx(o, args, in);
      ctx.results()["csv"] = o.out_path;
      if (o.json) {
        write_json(out, ctx.report());
      } else {
        write_text(out, ctx.report());
      }
      return kExitOk;
    }

    Context ctx(o, args, in);
    if (analyze->parsed()) cmd_analyze(o, ctx);
    if (bmse->parsed()) cmd_bounds_mse(o, ctx);
    if (blk->parsed()) cmd_bounds_lk(o, ctx);
    if (perm->parsed()) cmd_permute(o, ctx);
    if (sol->parsed()) cmd_solve_even_p(o, ctx);
    if (lossc->parsed()) cmd_loss(o, ctx);
    if (audit->parsed()) cmd_audit(o, ctx);
    if (o.json) {
      write_json(out, ctx.report());
    } else {
      write_text(out, ctx.report());
    }
    return kExitOk;
  } catch (const NotConverged& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    const bool input = e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::TooLarge;
    return input ? kExitInput : kExitNumerical;
  }
}

}  // namespace cccmap::cli
