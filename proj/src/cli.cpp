#include "omegamod/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "omegamod/dirichlet.hpp"
#include "omegamod/error.hpp"
#include "omegamod/error_terms.hpp"
#include "omegamod/hall.hpp"
#include "omegamod/race.hpp"
#include "omegamod/report.hpp"
#include "omegamod/residue.hpp"
#include "omegamod/selftest.hpp"

namespace omegamod::cli {
namespace {

struct RunConfig {
  std::vector<unsigned> moduli;
  std::uint64_t x_max = 0;
  double ratio = kDefaultRatio;
  std::uint64_t segment_size = kDefaultSegmentSize;
  unsigned workers = 1;
  std::string format = "csv";
  std::string output;

  // dirichlet-check
  double s = 2.0;
  std::uint64_t n_max = 1000000;
  std::uint64_t p_max = 100000;
  std::uint64_t zeta_terms = kDefaultZetaTerms;
  double tolerance = 1e-3;

  // race
  std::optional<unsigned> j;
  std::optional<unsigned> jprime;

  // selftest
  bool inject_fault = false;

  bool json() const { return format == "json"; }
  StreamOptions stream() const { return {segment_size, workers}; }
};

// Thrown for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(unsigned v) { return std::to_string(v); }

Json envelope(const char* command, Json config) {
  Json doc;
  doc["command"] = command;
  doc["config"] = std::move(config);
  doc["rows"] = Json::array();
  return doc;
}

void write_json(std::ostream& sink, const Json& doc) {
  sink << doc.dump(2) << '\n';
}

void check_moduli(const RunConfig& cfg, unsigned min_m) {
  if (cfg.moduli.empty()) throw UsageError("at least one --m is required");
  for (unsigned m : cfg.moduli) {
    if (m < min_m) {
      throw UsageError("--m " + std::to_string(m) + " is below the minimum " +
                       std::to_string(min_m) + " for this command");
    }
    if (m > 4096) throw UsageError("--m above 4096 is not supported");
  }
}

void check_ratio(const RunConfig& cfg) {
  if (!(cfg.ratio > 1.0)) {
    throw UsageError("--ratio must be > 1, got " + format_real(cfg.ratio));
  }
}

Json predicted_json(unsigned m, std::uint64_t x) {
  if (m < 2 || x < 2) return nullptr;
  return json_real(predicted_bound(m, static_cast<double>(x)));
}

std::string predicted_csv(unsigned m, std::uint64_t x) {
  if (m < 2 || x < 2) return "";
  return format_real(predicted_bound(m, static_cast<double>(x)));
}

int cmd_density(const RunConfig& cfg, std::ostream& sink) {
  check_moduli(cfg, 1);
  check_ratio(cfg);
  if (cfg.x_max < 1) throw UsageError("--x-max must be >= 1");
  const std::vector<std::uint64_t> schedule =
      checkpoint_schedule(cfg.x_max, cfg.ratio);
  const auto all = record_checkpoints(cfg.moduli, schedule, cfg.stream());

  Json doc = envelope("density", {{"moduli", cfg.moduli},
                                  {"x_max", cfg.x_max},
                                  {"ratio", json_real(cfg.ratio)}});
  CsvWriter csv(sink);
  if (!cfg.json()) {
    csv.row({"m", "x", "j", "count", "ratio", "scaled_residual",
             "predicted_bound"});
  }
  for (const CheckpointSeries& series : all) {
    for (const ErrorCheckpoint& cp : series.checkpoints) {
      const ResidueTally t = cp.counts();
      for (unsigned j = 0; j < series.m; ++j) {
        const double ratio =
            static_cast<double>(t.counts[j]) / static_cast<double>(cp.x);
        if (cfg.json()) {
          doc["rows"].push_back({{"m", series.m},
                                 {"x", cp.x},
                                 {"j", j},
                                 {"count", t.counts[j]},
                                 {"ratio", json_real(ratio)},
                                 {"scaled_residual", cp.scaled_residuals[j]},
                                 {"predicted_bound", predicted_json(series.m, cp.x)}});
        } else {
          csv.row({str(series.m), str(cp.x), str(j), str(t.counts[j]),
                   format_real(ratio), str(cp.scaled_residuals[j]),
                   predicted_csv(series.m, cp.x)});
        }
      }
    }
  }
  if (cfg.json()) write_json(sink, doc);
  return kOk;
}

int cmd_hall(const RunConfig& cfg, std::ostream& sink) {
  check_moduli(cfg, 2);
  Json doc = envelope("hall", {{"moduli", cfg.moduli},
                               {"x_max", cfg.x_max},
                               {"ratio", json_real(cfg.ratio)}});
  CsvWriter csv(sink);
  if (!cfg.json()) csv.row({"m", "perimeter", "c", "a_exponent"});
  for (unsigned m : cfg.moduli) {
    const HallConstants h = hall_constants(m);
    if (cfg.json()) {
      doc["rows"].push_back({{"m", m},
                             {"perimeter", json_real(h.perimeter)},
                             {"c", json_real(h.c)},
                             {"a_exponent", json_real(h.a_exponent)}});
    } else {
      csv.row({str(m), format_real(h.perimeter), format_real(h.c),
               format_real(h.a_exponent)});
    }
  }
  if (cfg.x_max == 0) {
    if (cfg.json()) write_json(sink, doc);
    return kOk;
  }

  check_ratio(cfg);
  if (cfg.x_max < 10) throw UsageError("--x-max must be >= 10 for envelopes");
  const auto all = record_series(cfg.moduli, cfg.x_max, cfg.ratio, cfg.stream());
  const PrimeTable table = primes_up_to(cfg.x_max);
  const std::uint64_t x_lo = cfg.x_max >= 1000 ? 1000 : 2;

  Json env_rows = Json::array();
  Json fit_rows = Json::array();
  if (!cfg.json()) {
    csv.blank();
    csv.row({"m", "k", "x", "mertens_sum", "hall_rhs", "abs_s_over_x",
             "ratio_to_rhs"});
  }
  for (const CheckpointSeries& series : all) {
    const RootTable roots(series.m);
    for (unsigned k = 1; k < series.m; ++k) {
      for (const ErrorCheckpoint& cp : series.checkpoints) {
        const double ms = mertens_sum(cp.x, table);
        const double rhs = hall_rhs(series.m, k, cp.x, table);
        const double s_over_x =
            std::abs(sums_from_counts(cp.counts(), roots).sums[k]) /
            static_cast<double>(cp.x);
        if (cfg.json()) {
          env_rows.push_back({{"m", series.m},
                              {"k", k},
                              {"x", cp.x},
                              {"mertens_sum", json_real(ms)},
                              {"hall_rhs", json_real(rhs)},
                              {"abs_s_over_x", json_real(s_over_x)},
                              {"ratio_to_rhs", json_real(s_over_x / rhs)}});
        } else {
          csv.row({str(series.m), str(k), str(cp.x), format_real(ms),
                   format_real(rhs), format_real(s_over_x),
                   format_real(s_over_x / rhs)});
        }
      }
    }
  }
  if (!cfg.json()) {
    csv.blank();
    csv.row({"m", "k", "x_lo", "x_hi", "constant", "argmax_x", "points_used"});
  }
  for (const CheckpointSeries& series : all) {
    for (unsigned k = 1; k < series.m; ++k) {
      const EnvelopeFit fit = hall_envelope(series, k, table, x_lo, cfg.x_max);
      if (cfg.json()) {
        fit_rows.push_back({{"m", fit.m},
                            {"k", fit.k},
                            {"x_lo", x_lo},
                            {"x_hi", cfg.x_max},
                            {"constant", json_real(fit.constant)},
                            {"argmax_x", fit.argmax_x},
                            {"points_used", fit.points_used}});
      } else {
        csv.row({str(fit.m), str(fit.k), str(x_lo), str(cfg.x_max),
                 format_real(fit.constant), str(fit.argmax_x),
                 str(fit.points_used)});
      }
    }
  }
  if (cfg.json()) {
    doc["envelope"] = std::move(env_rows);
    doc["fits"] = std::move(fit_rows);
    write_json(sink, doc);
  }
  return kOk;
}

int cmd_error_growth(const RunConfig& cfg, std::ostream& sink,
                     std::ostream& err) {
  check_moduli(cfg, 1);
  check_ratio(cfg);
  if (cfg.x_max < 10) throw UsageError("--x-max must be >= 10");
  const auto all = record_series(cfg.moduli, cfg.x_max, cfg.ratio, cfg.stream());

  // Fit first so that a failed fit produces no partial table.
  struct FitRow {
    unsigned m;
    const char* kind;
    GrowthFit fit;
  };
  std::vector<FitRow> fits;
  for (const CheckpointSeries& series : all) {
    const RootTable roots(series.m);
    try {
      for (unsigned j = 0; j < series.m; ++j) {
        fits.push_back({series.m, "class", growth_exponent(series, j)});
      }
      for (unsigned k = 1; k < series.m; ++k) {
        fits.push_back({series.m, "character",
                        character_growth_exponent(series, k, roots)});
      }
    } catch (const Error& e) {
      err << "error-growth: m = " << series.m << ": " << to_string(e.kind())
          << ": " << e.what() << '\n';
      return kCheckFailed;
    }
  }

  Json doc = envelope("error-growth", {{"moduli", cfg.moduli},
                                       {"x_max", cfg.x_max},
                                       {"ratio", json_real(cfg.ratio)}});
  CsvWriter csv(sink);
  if (!cfg.json()) csv.row({"m", "x", "j", "scaled_residual"});
  for (const CheckpointSeries& series : all) {
    for (const ErrorCheckpoint& cp : series.checkpoints) {
      for (unsigned j = 0; j < series.m; ++j) {
        if (cfg.json()) {
          doc["rows"].push_back({{"m", series.m},
                                 {"x", cp.x},
                                 {"j", j},
                                 {"scaled_residual", cp.scaled_residuals[j]}});
        } else {
          csv.row({str(series.m), str(cp.x), str(j),
                   str(cp.scaled_residuals[j])});
        }
      }
    }
  }
  if (!cfg.json()) {
    csv.blank();
    csv.row({"m", "kind", "index", "alpha_hat", "points_used", "residual_rms"});
  }
  Json fit_rows = Json::array();
  for (const FitRow& f : fits) {
    if (cfg.json()) {
      fit_rows.push_back({{"m", f.m},
                          {"kind", f.kind},
                          {"index", f.fit.index},
                          {"alpha_hat", json_real(f.fit.alpha_hat)},
                          {"points_used", f.fit.points_used},
                          {"residual_rms", json_real(f.fit.residual_rms)}});
    } else {
      csv.row({str(f.m), f.kind, str(f.fit.index), format_real(f.fit.alpha_hat),
               str(f.fit.points_used), format_real(f.fit.residual_rms)});
    }
  }
  if (cfg.json()) {
    doc["fits"] = std::move(fit_rows);
    write_json(sink, doc);
  }
  return kOk;
}

int cmd_dirichlet_check(const RunConfig& cfg, std::ostream& sink,
                        std::ostream& err) {
  if (!(cfg.s > 1.0)) {
    fail(ErrorKind::kOutOfDomain,
         "dirichlet-check: s = " + format_real(cfg.s) +
             " is outside the half plane Re s > 1");
  }
  check_moduli(cfg, 1);
  if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
  if (cfg.p_max < 2) throw UsageError("--p-max must be >= 2");
  if (cfg.zeta_terms < 10) throw UsageError("--zeta-terms must be >= 10");

  const Complex s(cfg.s, 0.0);
  std::vector<IdentityReport> reports;
  const OmegaSegment omegas = omega_prefix(cfg.n_max, cfg.stream());
  reports.push_back(check_lquo(s, cfg.n_max, omegas, cfg.zeta_terms));
  if (cfg.s == 2.0) {
    const Complex lhs = truncated_L(2, 1, s, cfg.n_max, omegas).value;
    const Complex rhs(std::numbers::pi * std::numbers::pi / 15.0, 0.0);
    reports.push_back(
        {"liouville_pi2_over_15", 2, s, cfg.n_max, lhs, rhs, std::abs(lhs - rhs)});
  }
  const PrimeTable table = primes_up_to(cfg.p_max);
  for (unsigned m : cfg.moduli) {
    reports.push_back(check_identity_product(m, s, cfg.p_max, table, cfg.zeta_terms));
    if (m >= 2) {
      reports.push_back(check_g_product(m, s, cfg.p_max, table, cfg.zeta_terms));
    }
  }

  Json doc = envelope("dirichlet-check",
                      {{"moduli", cfg.moduli},
                       {"s", json_real(cfg.s)},
                       {"n_max", cfg.n_max},
                       {"p_max", cfg.p_max},
                       {"zeta_terms", cfg.zeta_terms},
                       {"tolerance", json_real(cfg.tolerance)}});
  CsvWriter csv(sink);
  if (!cfg.json()) {
    csv.row({"check", "m", "s", "cutoff", "lhs_re", "lhs_im", "rhs_re",
             "rhs_im", "deviation", "tolerance", "pass"});
  }
  bool all_pass = true;
  for (const IdentityReport& r : reports) {
    const bool pass = r.deviation < cfg.tolerance;
    all_pass = all_pass && pass;
    if (!pass) {
      err << "dirichlet-check: " << r.name << " (m = " << r.m
          << ") deviation " << format_real(r.deviation) << " >= tolerance "
          << format_real(cfg.tolerance) << '\n';
    }
    if (cfg.json()) {
      doc["rows"].push_back({{"check", r.name},
                             {"m", r.m},
                             {"s", json_real(r.s.real())},
                             {"cutoff", r.cutoff},
                             {"lhs_re", json_real(r.lhs.real())},
                             {"lhs_im", json_real(r.lhs.imag())},
                             {"rhs_re", json_real(r.rhs.real())},
                             {"rhs_im", json_real(r.rhs.imag())},
                             {"deviation", json_real(r.deviation)},
                             {"tolerance", json_real(cfg.tolerance)},
                             {"pass", pass}});
    } else {
      csv.row({r.name, str(r.m), format_real(r.s.real()), str(r.cutoff),
               format_real(r.lhs.real()), format_real(r.lhs.imag()),
               format_real(r.rhs.real()), format_real(r.rhs.imag()),
               format_real(r.deviation), format_real(cfg.tolerance),
               pass ? "true" : "false"});
    }
  }
  if (cfg.json()) write_json(sink, doc);
  return all_pass ? kOk : kCheckFailed;
}

int cmd_race(const RunConfig& cfg, std::ostream& sink) {
  check_moduli(cfg, 2);
  if (cfg.x_max < 1) throw UsageError("--x-max must be >= 1");
  if (cfg.j.has_value() != cfg.jprime.has_value()) {
    throw UsageError("--j and --jprime must be given together");
  }
  std::vector<RaceSummary> summaries;
  if (cfg.j) {
    if (*cfg.j == *cfg.jprime) throw UsageError("--j and --jprime must differ");
    for (unsigned m : cfg.moduli) {
      if (*cfg.j >= m || *cfg.jprime >= m) {
        throw UsageError("--j/--jprime must lie in 0..m-1");
      }
      summaries.push_back(race_scan(m, *cfg.j, *cfg.jprime, cfg.x_max, cfg.stream()));
    }
  } else {
    for (unsigned m : cfg.moduli) {
      for (RaceSummary& s : all_pairs(m, cfg.x_max, cfg.stream())) {
        summaries.push_back(std::move(s));
      }
    }
  }

  Json config = {{"moduli", cfg.moduli}, {"x_max", cfg.x_max}};
  if (cfg.j) {
    config["j"] = *cfg.j;
    config["jprime"] = *cfg.jprime;
  }
  Json doc = envelope("race", std::move(config));
  CsvWriter csv(sink);
  if (cfg.json()) {
    for (const RaceSummary& s : summaries) {
      Json events = Json::array();
      for (const RaceEvent& e : s.events) {
        events.push_back({{"x", e.x}, {"direction", to_string(e.direction)}});
      }
      doc["rows"].push_back({{"m", s.m},
                             {"j", s.j},
                             {"jprime", s.jprime},
                             {"x_max", s.x_max},
                             {"event_count", s.events.size()},
                             {"lead_pos", s.lead_pos},
                             {"lead_neg", s.lead_neg},
                             {"lead_tie", s.lead_tie},
                             {"final_delta", s.final_delta},
                             {"events", std::move(events)}});
    }
    write_json(sink, doc);
    return kOk;
  }
  csv.row({"m", "j", "jprime", "x", "direction"});
  for (const RaceSummary& s : summaries) {
    for (const RaceEvent& e : s.events) {
      csv.row({str(s.m), str(s.j), str(s.jprime), str(e.x),
               to_string(e.direction)});
    }
  }
  csv.blank();
  csv.row({"m", "j", "jprime", "x_max", "events", "lead_pos", "lead_neg",
           "lead_tie", "final_delta"});
  for (const RaceSummary& s : summaries) {
    csv.row({str(s.m), str(s.j), str(s.jprime), str(s.x_max),
             str(static_cast<std::uint64_t>(s.events.size())), str(s.lead_pos),
             str(s.lead_neg), str(s.lead_tie), str(s.final_delta)});
  }
  return kOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& sink, std::ostream& err) {
  SelftestOptions opts{cfg.stream(), cfg.inject_fault};
  const std::vector<SelftestCheck> checks = run_selftest(opts);
  const SelftestCheck* first_failure = nullptr;
  for (const auto& c : checks) {
    if (!c.passed && !first_failure) first_failure = &c;
  }
  if (cfg.json()) {
    Json doc = envelope("selftest", {{"inject_fault", cfg.inject_fault}});
    for (const auto& c : checks) {
      doc["rows"].push_back(
          {{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["passed"] = first_failure == nullptr;
    write_json(sink, doc);
  } else {
    CsvWriter csv(sink);
    csv.row({"check", "passed", "detail"});
    for (const auto& c : checks) {
      csv.row({c.name, c.passed ? "true" : "false", c.detail});
    }
  }
  if (first_failure) {
    err << "selftest: FAILED " << first_failure->name << ": "
        << first_failure->detail << '\n';
    return kCheckFailed;
  }
  return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool need_x_max) {
  cmd->add_option("--m", cfg.moduli, "Modulus (repeatable)");
  auto* x = cmd->add_option("--x-max", cfg.x_max, "Largest n to sieve");
  if (need_x_max) x->required();
  cmd->add_option("--ratio", cfg.ratio, "Geometric checkpoint ratio (> 1)")
      ->capture_default_str();
  cmd->add_option("--segment-size", cfg.segment_size, "Sieve segment length")
      ->check(CLI::Range(std::uint64_t{1024}, std::uint64_t{1} << 32))
      ->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Sieve threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", cfg.output, "Output file (default: stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Residue-class distribution of Omega(n) and related checks",
               "omegamod"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* density = app.add_subcommand(
      "density", "Class counts N_{m,j}(x) at geometric checkpoints");
  add_common(density, cfg, true);

  auto* hall = app.add_subcommand(
      "hall", "Hull perimeter, c and A; envelope table with --x-max");
  add_common(hall, cfg, false);

  auto* growth = app.add_subcommand(
      "error-growth", "Scaled residuals and fitted growth exponents");
  add_common(growth, cfg, true);

  auto* dirichlet = app.add_subcommand(
      "dirichlet-check", "Series and Euler-product identity checks");
  add_common(dirichlet, cfg, false);
  dirichlet->add_option("--s", cfg.s, "Real s > 1")->capture_default_str();
  dirichlet->add_option("--n-max", cfg.n_max, "Truncated-sum length")
      ->capture_default_str();
  dirichlet->add_option("--p-max", cfg.p_max, "Euler-product prime cutoff")
      ->capture_default_str();
  dirichlet->add_option("--zeta-terms", cfg.zeta_terms, "Terms for reference zeta")
      ->capture_default_str();
  dirichlet->add_option("--tol", cfg.tolerance, "Deviation tolerance")
      ->capture_default_str();

  auto* race = app.add_subcommand(
      "race", "Sign changes of N_{m,j}(x) - N_{m,j'}(x)");
  add_common(race, cfg, true);
  race->add_option("--j", cfg.j, "First class (default: all pairs)");
  race->add_option("--jprime", cfg.jprime, "Second class");

  auto* selftest = app.add_subcommand(
      "selftest", "Reduced-scale oracle and identity checks");
  add_common(selftest, cfg, false);
  selftest->add_flag("--inject-fault", cfg.inject_fault,
                     "Corrupt one sieve value (negative test)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (dirichlet->parsed() && cfg.moduli.empty()) cfg.moduli = {2};

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (density->parsed()) {
      code = cmd_density(cfg, buffer);
    } else if (hall->parsed()) {
      code = cmd_hall(cfg, buffer);
    } else if (growth->parsed()) {
      code = cmd_error_growth(cfg, buffer, err);
    } else if (dirichlet->parsed()) {
      code = cmd_dirichlet_check(cfg, buffer, err);
    } else if (race->parsed()) {
      code = cmd_race(cfg, buffer);
    } else if (selftest->parsed()) {
      code = cmd_selftest(cfg, buffer, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kInvalidArgument:
      case ErrorKind::kOutOfDomain:
      case ErrorKind::kUnsupported:
        return kUsage;
      default:
        return kCheckFailed;
    }
  }

  if (cfg.output.empty()) {
    out << buffer.str();
    out.flush();
    if (!out) {
      err << "io error: could not write to standard output\n";
      return kIoError;
    }
    return code;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "io error: cannot open " << cfg.output << " for writing\n";
    return kIoError;
  }
  file << buffer.str();
  file.close();
  if (!file) {
    err << "io error: failed writing " << cfg.output << '\n';
    return kIoError;
  }
  return code;
}

}  // namespace omegamod::cli
