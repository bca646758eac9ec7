#include "fatpoint/sweep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

std::uint64_t seed_from_env() {
  const char* s = std::getenv("FATPOINT_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw fatpoint::UsageError("FATPOINT_SEED must be a non-negative integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fat point ideals: symbolic powers, containments and resurgence checks"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  std::string mults, n_ambient = "2", format = "json";
  fatpoint::SweepConfig cfg;
  app.add_option("--mults", mults, "multiplicity ranges, e.g. 1,2,2 or 0..3,1,2");
  app.add_option("--n-ambient", n_ambient, "ambient dimension N or range lo..hi")->capture_default_str();
  app.add_option("--m-max", cfg.m_max, "largest symbolic power m")->capture_default_str();
  app.add_option("--r-max", cfg.r_max, "largest ordinary power r")->capture_default_str();
  app.add_option("--degree-bound", cfg.degree_bound, "degree bound for enumeration checks")->capture_default_str();
  app.add_option("--out", cfg.out_path, "output file (default: stdout)");
  app.add_option("--jobs", cfg.jobs, "number of worker threads")->capture_default_str();
  app.add_option("--format", format, "json or csv")->capture_default_str();
  app.add_flag("--timings", cfg.timings, "include wall-clock timings in the report");
  app.add_option("--form", cfg.form, "decompose: polynomial in x0..xN");
  app.add_option("--point", cfg.point, "decompose: line point c:d, the zero of c*x0 + d*x1");
  app.add_option("--point-m", cfg.point_m, "decompose: multiplicity at --point")->capture_default_str();

  const char* modes[] = {"classify", "table", "resurgence", "sdefect", "verify-collinear", "verify-splittings",
                         "decompose"};
  const char* blurbs[] = {"classify a three-point scheme and report the certified resurgence",
                          "containment table I^(m) in I^r",
                          "resurgence report with witnesses",
                          "check I^(m) = I^m up to --m-max against the classification",
                          "check collinear splittings and I^(m) = I^m for points on a line",
                          "check the splitting identities for three coordinate points",
                          "decompose a form into binary forms and test membership"};
  for (std::size_t i = 0; i < std::size(modes); ++i) app.add_subcommand(modes[i], blurbs[i])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kUsage;
  }

  fatpoint::RunReport report;
  try {
    cfg.mode = fatpoint::parse_mode(app.get_subcommands().front()->get_name());
    if (!mults.empty()) cfg.mults = fatpoint::parse_range_list(mults);
    cfg.n_ambient = fatpoint::parse_range(n_ambient);
    if (format == "json") {
      cfg.format = fatpoint::Format::json;
    } else if (format == "csv") {
      cfg.format = fatpoint::Format::csv;
    } else {
      throw fatpoint::UsageError("--format must be json or csv");
    }
    cfg.seed = seed_from_env();
    report = fatpoint::run(cfg);
    fatpoint::write_report(report, std::cout);
  } catch (const fatpoint::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const fatpoint::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  if (cfg.timings) std::cerr << "elapsed " << report.elapsed_ms << " ms\n";
  for (const auto& c : report.counterexamples) std::cerr << "counterexample: " << c << '\n';
  return report.ok() ? kOk : kCounterexample;
}
