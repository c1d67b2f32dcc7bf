// dpart: exact counting, asymptotic estimates, Boltzmann sampling and
// numeric certificates for distinct-parts partitions with largest part
// at most t*sqrt(n).
//
// Subcommands: count, estimate, compare, sample, limit-shape, beta-table,
// verify. Output is CSV (default) or a single JSON object; diagnostics go
// to stderr only. Exit codes: 0 success, 2 usage error, 3 numeric or
// convergence failure, 4 work budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "dpart/dpart.hpp"

using json = nlohmann::json;

namespace {

struct OutputConfig {
  std::string format = "csv";  // csv | json
  int precision = 17;
};

std::string fmt_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

// One table: column names plus rows of preformatted cells (CSV) and typed
// values (JSON). Keeping both forms reproduces doubles exactly in JSON
// regardless of the CSV display precision.
class Table {
 public:
  explicit Table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

  void write(const OutputConfig& cfg, const std::string& subcommand,
             const json& params) const {
    if (cfg.format == "json") {
      json doc;
      doc["schema_version"] = 1;
      doc["subcommand"] = subcommand;
      doc["params"] = params;
      json rows = json::array();
      for (const auto& row : rows_) {
        json obj;
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
        rows.push_back(std::move(obj));
      }
      doc["rows"] = std::move(rows);
      std::cout << doc.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      std::cout << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    }
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        const json& cell = row[i];
        if (cell.is_number_float()) {
          std::cout << fmt_double(cell.get<double>(), cfg.precision);
        } else if (cell.is_string()) {
          std::cout << cell.get<std::string>();
        } else if (cell.is_boolean()) {
          std::cout << (cell.get<bool>() ? "true" : "false");
        } else {
          std::cout << cell.dump();
        }
        std::cout << (i + 1 < row.size() ? "," : "\n");
      }
    }
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
};

dpart::BoundRatio parse_t(const std::string& text) {
  try {
    return dpart::BoundRatio::parse(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--t", "cannot parse '" + text +
                                          "' as p/q or decimal");
  }
}

void require_analytic_t(const dpart::BoundRatio& t) {
  if (!(t.value() >= dpart::kMinT)) {
    throw CLI::ValidationError(
        "--t", "analytic subcommands need t >= sqrt(2)+1e-3 = " +
                   std::to_string(dpart::kMinT));
  }
}

double trapezoid_tilt(double beta, double t, std::int64_t panels) {
  auto f = [beta](double u) { return u / (1.0 + std::exp(beta * u)); };
  double h = t / double(panels);
  double sum = 0.5 * (f(0.0) + f(t));
  for (std::int64_t i = 1; i < panels; ++i) sum += f(h * double(i));
  return sum * h;
}

struct VerifyCheck {
  std::string suite, name;
  double value, threshold;
  bool pass;
};

void verify_lemmas(std::vector<VerifyCheck>& checks) {
  double max_ratio =
      dpart::lemma1_max_ratio(dpart::lemma1_x_grid(), dpart::lemma1_s_grid());
  checks.push_back(
      {"lemmas", "lemma1_grid_max_ratio", max_ratio, 134.0, max_ratio <= 134.0});

  double small_s_max = 0.0;
  for (double x : dpart::lemma1_x_grid()) {
    for (double scale : {1.0, 0.5, 0.1, 0.01}) {
      double s = scale * (1.0 - x) / 2.0;
      small_s_max = std::max(small_s_max, dpart::remainder_ratio(x, s));
    }
  }
  checks.push_back({"lemmas", "lemma1_small_s_max_ratio", small_s_max,
                    2.0 / 3.0, small_s_max <= 2.0 / 3.0});

  for (std::int64_t n : {10, 50, 100, 500}) {
    double normalized = dpart::lemma2_min(n, 0.5).value / double(n);
    checks.push_back({"lemmas", "lemma2_min_over_n_n" + std::to_string(n),
                      normalized, 1.0 / 768.0, normalized >= 1.0 / 768.0});
  }
}

void verify_beta(std::vector<VerifyCheck>& checks) {
  double worst = 0.0;
  double t_lo = std::numbers::sqrt2 + 0.01;
  for (int i = 0; i < 200; ++i) {
    double t = t_lo + (40.0 - t_lo) * double(i) / 199.0;
    auto sol = dpart::solve_beta(t);
    worst = std::max(worst,
                     std::fabs(trapezoid_tilt(sol.beta, t, 1'000'000) - 1.0));
  }
  checks.push_back(
      {"beta", "quadrature_residual_max", worst, 1e-9, worst <= 1e-9});

  double b2 = std::fabs(dpart::solve_beta(2.0).beta);
  checks.push_back({"beta", "beta_at_2", b2, 1e-12, b2 <= 1e-12});
  double bp2 = std::fabs(dpart::beta_prime(2.0) - 1.5);
  checks.push_back({"beta", "beta_prime_at_2", bp2, 1e-9, bp2 <= 1e-9});
  double b30 = std::fabs(dpart::solve_beta(30.0).beta -
                         dpart::kPi / (2.0 * std::sqrt(3.0)));
  checks.push_back({"beta", "beta_at_30_vs_limit", b30, 1e-8, b30 <= 1e-8});
  double B30 = std::fabs(dpart::big_B(30.0) - dpart::kPi / std::sqrt(3.0));
  checks.push_back({"beta", "B_at_30_vs_limit", B30, 1e-8, B30 <= 1e-8});
  double A30 =
      std::fabs(dpart::amplitude(30.0) - 1.0 / (4.0 * std::pow(3.0, 0.25)));
  checks.push_back({"beta", "A_at_30_vs_limit", A30, 1e-6, A30 <= 1e-6});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinct-parts partitions with bounded largest part"};
  app.require_subcommand(1);

  OutputConfig out;
  std::uint64_t work_budget = dpart::kDefaultWorkBudget;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--precision", out.precision, "printed digits for CSV floats")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  app.add_option("--work-budget", work_budget,
                 "max coefficient updates for exact counting")
      ->envname("DPART_WORK_BUDGET");

  std::string t_text;
  std::vector<std::int64_t> n_list;
  std::int64_t n_single = 0;
  std::int64_t sample_count = 1;
  std::uint64_t seed = 0;
  std::int64_t points = 101;
  double t_min = 1.5, t_max = 4.0;
  std::int64_t steps = 26;
  std::string suite = "all";

  auto* cmd_count = app.add_subcommand("count", "exact d_t(n)");
  cmd_count->add_option("--t", t_text, "bound ratio t, 'p/q' or decimal")
      ->required();
  cmd_count->add_option("--n", n_list, "partition sizes")->required();

  auto* cmd_estimate =
      app.add_subcommand("estimate", "asymptotic estimate of d_t(n)");
  cmd_estimate->add_option("--t", t_text)->required();
  cmd_estimate->add_option("--n", n_list)->required();

  auto* cmd_compare =
      app.add_subcommand("compare", "exact count vs asymptotic estimate");
  cmd_compare->add_option("--t", t_text)->required();
  cmd_compare->add_option("--n", n_list)->required();

  auto* cmd_sample =
      app.add_subcommand("sample", "Boltzmann-sample random partitions");
  cmd_sample->add_option("--t", t_text)->required();
  cmd_sample->add_option("--n", n_single, "target size parameter")->required();
  cmd_sample->add_option("--count", sample_count)->check(CLI::PositiveNumber);
  cmd_sample->add_option("--seed", seed);

  auto* cmd_shape =
      app.add_subcommand("limit-shape", "limit-shape curve of d_t partitions");
  cmd_shape->add_option("--t", t_text)->required();
  cmd_shape->add_option("--points", points)->check(CLI::Range(2, 100000));

  auto* cmd_beta = app.add_subcommand("beta-table", "beta(t) solver sweep");
  cmd_beta->add_option("--t-min", t_min);
  cmd_beta->add_option("--t-max", t_max);
  cmd_beta->add_option("--steps", steps)->check(CLI::Range(1, 100000));

  auto* cmd_verify =
      app.add_subcommand("verify", "run numeric certificates");
  cmd_verify->add_option("--suite", suite, "lemmas | beta | all")
      ->check(CLI::IsMember({"lemmas", "beta", "all"}));

  // global options (--format, --precision, --work-budget) may follow the
  // subcommand
  for (auto* sub : {cmd_count, cmd_estimate, cmd_compare, cmd_sample,
                    cmd_shape, cmd_beta, cmd_verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_count->parsed()) {
      auto t = parse_t(t_text);
      if (!(t.value() > 0.0)) throw CLI::ValidationError("--t", "t must be > 0");
      Table table({"t", "n", "L", "d_t"});
      for (auto n : n_list) {
        table.add_row({t.value(), n, t.floor_sqrt(n),
                       dpart::d_t(n, t, work_budget).get_str()});
      }
      table.write(out, "count", {{"t", t_text}});
    } else if (cmd_estimate->parsed()) {
      auto t = parse_t(t_text);
      require_analytic_t(t);
      Table table({"t", "n", "L", "frac", "log_estimate", "estimate"});
      for (auto n : n_list) {
        auto est = dpart::estimate_dt(n, t);
        table.add_row(
            {est.t_value, n, est.L, est.frac, est.log_estimate, est.estimate});
      }
      table.write(out, "estimate", {{"t", t_text}});
    } else if (cmd_compare->parsed()) {
      auto t = parse_t(t_text);
      require_analytic_t(t);
      Table table({"t", "n", "L", "frac", "d_t_exact_digits", "log_exact",
                   "log_estimate", "ratio"});
      for (const auto& est : dpart::compare_sweep(t, n_list, work_budget)) {
        if (!est.error.empty()) {
          std::cerr << "compare: n=" << est.n << ": " << est.error << "\n";
          throw dpart::ResourceError(est.error);
        }
        table.add_row({est.t_value, est.n, est.L, est.frac, est.exact_digits,
                       *est.log_exact, est.log_estimate, *est.ratio_to_exact});
      }
      table.write(out, "compare", {{"t", t_text}});
    } else if (cmd_sample->parsed()) {
      auto t = parse_t(t_text);
      require_analytic_t(t);
      auto model = dpart::build_model(t, n_single);
      Table table({"seed", "index", "size", "num_parts", "largest_part"});
      for (std::int64_t i = 0; i < sample_count; ++i) {
        std::uint64_t s = seed + std::uint64_t(i);
        auto part = dpart::sample(model, s);
        table.add_row({s, i, part.size, std::int64_t(part.parts.size()),
                       part.parts.empty() ? std::int64_t(0) : part.parts.front()});
      }
      table.write(out, "sample",
                  {{"t", t_text}, {"n", n_single}, {"seed", seed}});
    } else if (cmd_shape->parsed()) {
      auto t = parse_t(t_text);
      require_analytic_t(t);
      Table table({"x", "y"});
      for (std::int64_t i = 0; i < points; ++i) {
        double x = t.value() * double(i) / double(points - 1);
        table.add_row({x, dpart::limit_shape(t.value(), x)});
      }
      table.write(out, "limit-shape", {{"t", t_text}, {"points", points}});
    } else if (cmd_beta->parsed()) {
      if (!(t_min >= dpart::kMinT) || !(t_max >= t_min))
        throw CLI::ValidationError("--t-min",
                                   "need sqrt(2)+1e-3 <= t-min <= t-max");
      Table table(
          {"t", "beta", "beta_prime", "B", "A", "residual", "iterations"});
      for (std::int64_t i = 0; i < steps; ++i) {
        double t = steps == 1 ? t_min
                              : t_min + (t_max - t_min) * double(i) /
                                            double(steps - 1);
        auto sol = dpart::solve_beta(t);
        table.add_row({sol.t, sol.beta, sol.beta_prime, sol.big_b,
                       sol.amplitude, sol.residual, sol.iterations});
      }
      table.write(out, "beta-table",
                  {{"t_min", t_min}, {"t_max", t_max}, {"steps", steps}});
    } else if (cmd_verify->parsed()) {
      std::vector<VerifyCheck> checks;
      if (suite == "lemmas" || suite == "all") verify_lemmas(checks);
      if (suite == "beta" || suite == "all") verify_beta(checks);
      Table table({"suite", "check", "value", "threshold", "pass"});
      bool all_pass = true;
      for (const auto& c : checks) {
        table.add_row({c.suite, c.name, c.value, c.threshold, c.pass});
        all_pass = all_pass && c.pass;
      }
      table.write(out, "verify", {{"suite", suite}});
      if (!all_pass) {
        std::cerr << "verify: at least one certificate failed\n";
        return 3;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const dpart::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const dpart::ConvergenceError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}
