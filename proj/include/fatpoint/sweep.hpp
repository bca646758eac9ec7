#ifndef FATPOINT_SWEEP_HPP
#define FATPOINT_SWEEP_HPP

// Sweep orchestration behind the fatpoint command-line tool: expands a
// configuration into parameter tuples, runs each tuple on a worker pool and
// assembles a report whose bytes depend only on the configuration.

#include "fatpoint/binary_forms.hpp"
#include "fatpoint/collinear.hpp"
#include "fatpoint/containment.hpp"
#include "fatpoint/invariants.hpp"
#include "fatpoint/scheme.hpp"
#include "fatpoint/splittings.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace fatpoint {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { classify, table, resurgence, verify_collinear, verify_splittings, sdefect, decompose };
enum class Format { json, csv };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::classify: return "classify";
    case Mode::table: return "table";
    case Mode::resurgence: return "resurgence";
    case Mode::verify_collinear: return "verify-collinear";
    case Mode::verify_splittings: return "verify-splittings";
    case Mode::sdefect: return "sdefect";
    case Mode::decompose: return "decompose";
  }
  return "unknown";
}

inline Mode parse_mode(std::string_view name) {
  for (Mode m : {Mode::classify, Mode::table, Mode::resurgence, Mode::verify_collinear,
                 Mode::verify_splittings, Mode::sdefect, Mode::decompose})
    if (to_string(m) == name) return m;
  throw UsageError("unknown mode '" + std::string(name) + "'");
}

struct Range {
  unsigned lo;
  unsigned hi;
  friend bool operator==(const Range&, const Range&) = default;
};

/// "3" or "1..4" (also "1-4").
inline Range parse_range(std::string_view text) {
  auto to_uint = [&](std::string_view s) -> unsigned {
    if (s.empty() || s.size() > 9) throw UsageError("bad value '" + std::string(text) + "'");
    unsigned v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw UsageError("bad value '" + std::string(text) + "'");
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
  };
  std::size_t sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string_view::npos) {
    sep = text.find('-');
    skip = 1;
  }
  if (sep == std::string_view::npos) {
    const unsigned v = to_uint(text);
    return {v, v};
  }
  const Range r{to_uint(text.substr(0, sep)), to_uint(text.substr(sep + skip))};
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

/// Comma separated list of ranges, e.g. "1,0..2,3".
inline std::vector<Range> parse_range_list(std::string_view text) {
  std::vector<Range> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_range(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

struct SweepConfig {
  Mode mode = Mode::classify;
  std::vector<Range> mults;
  Range n_ambient{2, 2};
  unsigned m_max = 12;
  unsigned r_max = 12;
  unsigned degree_bound = 12;
  std::string out_path;
  unsigned jobs = 1;
  Format format = Format::json;
  /// decompose: form text, optional point "c:d" and multiplicity.
  std::string form;
  std::string point;
  unsigned point_m = 1;
  /// verify-collinear: seed for the randomized specialization check.
  std::uint64_t seed = 0;
  bool timings = false;

  void validate() const {
    if (m_max < 1 || r_max < 1 || degree_bound < 1) throw UsageError("bounds must be positive");
    if (jobs < 1) throw UsageError("--jobs must be at least 1");
    if (n_ambient.lo < 2) throw UsageError("--n-ambient must be at least 2");
    if (mode == Mode::decompose) {
      if (form.empty()) throw UsageError("decompose needs --form");
      if (n_ambient.lo != n_ambient.hi) throw UsageError("decompose needs a single --n-ambient");
      if (format != Format::json) throw UsageError("decompose only emits json");
      return;
    }
    if (mults.empty()) throw UsageError("--mults is required");
    if (mode != Mode::verify_collinear && mults.size() != 3)
      throw UsageError(to_string(mode) + " needs exactly three multiplicities");
    if (mode == Mode::verify_collinear && mults.size() > 8) throw UsageError("at most 8 points on the line");
    if (format == Format::csv) {
      if (mode != Mode::table) throw UsageError("csv output is only available for table");
      if (n_ambient.lo != n_ambient.hi) throw UsageError("csv output needs a single case");
      for (const auto& r : mults)
        if (r.lo != r.hi) throw UsageError("csv output needs a single case");
    }
  }
};

inline nlohmann::ordered_json to_json(const SweepConfig& c) {
  nlohmann::ordered_json out;
  out["mode"] = to_string(c.mode);
  auto ranges = nlohmann::ordered_json::array();
  for (const auto& r : c.mults) ranges.push_back({r.lo, r.hi});
  out["mults"] = ranges;
  out["n_ambient"] = {c.n_ambient.lo, c.n_ambient.hi};
  out["m_max"] = c.m_max;
  out["r_max"] = c.r_max;
  out["degree_bound"] = c.degree_bound;
  if (c.mode == Mode::decompose) {
    out["form"] = c.form;
    out["point"] = c.point;
    out["point_m"] = c.point_m;
  }
  if (c.mode == Mode::verify_collinear) out["seed"] = c.seed;
  return out;
}

struct CaseResult {
  nlohmann::ordered_json body;
  std::vector<std::string> counterexamples;
  double elapsed_ms = 0;
};

struct RunReport {
  SweepConfig config;
  std::vector<CaseResult> cases;
  std::vector<std::string> counterexamples;
  double elapsed_ms = 0;
  /// Only filled for table mode with a single case; used for csv output.
  std::optional<ContainmentTable> table;

  bool ok() const { return counterexamples.empty(); }
};

/// Report JSON. Timings are left out unless requested so that a fixed
/// configuration always produces the same bytes.
inline nlohmann::ordered_json to_json(const RunReport& rep, bool with_timings = false) {
  nlohmann::ordered_json out;
  out["config"] = to_json(rep.config);
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : rep.cases) {
    auto body = c.body;
    if (with_timings) body["elapsed_ms"] = c.elapsed_ms;
    cases.push_back(std::move(body));
  }
  out["cases"] = cases;
  out["counterexamples"] = rep.counterexamples;
  out["verified"] = rep.ok();
  if (with_timings) out["elapsed_ms"] = rep.elapsed_ms;
  return out;
}

/// `m,r,contained,witness` with LF line endings; witness is blank for
/// containments.
inline void write_csv(const ContainmentTable& table, std::ostream& os) {
  os << "m,r,contained,witness\n";
  for (const auto& e : table.entries) {
    os << e.m << ',' << e.r << ',' << (e.contained ? "true" : "false") << ',';
    if (e.witness) os << '"' << e.witness->to_string() << '"';
    os << '\n';
  }
}

inline void emit_csv(const ContainmentTable& table, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  write_csv(table, os);
  os.flush();
  if (!os) throw IoError("write to " + path + " failed");
}

namespace detail {

using Tuple = std::vector<unsigned>;

/// Cartesian product in lexicographic order.
inline std::vector<Tuple> expand_ranges(const std::vector<Range>& ranges) {
  std::vector<Tuple> out{{}};
  for (const auto& r : ranges) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (unsigned v = r.lo; v <= r.hi; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

inline std::string tuple_string(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

inline nlohmann::ordered_json fraction_or_null(const std::optional<Rational>& q) {
  if (!q) return nullptr;
  return to_fraction_string(*q);
}

inline CaseResult run_classify(const SweepConfig&, unsigned n, const Tuple& t) {
  CaseResult res;
  const auto z = FatPointScheme::three_points(n, t[0], t[1], t[2]);
  const auto cls = classify(t[0], t[1], t[2], false);
  const auto& s = cls.sorted;
  const auto computed = alpha(ideal_of(z.in_ambient(2)));
  const auto closed = alpha_three_points(s[0], s[1], s[2]);
  auto& b = res.body;
  b["scheme"] = to_json(z);
  b["sorted"] = s;
  b["permutation"] = cls.permutation;
  b["classification"] = to_string(cls.kind);
  b["certified_rho"] = fraction_or_null(cls.certified_rho);
  b["alpha_p2"] = *computed;
  b["alpha_closed_form"] = closed;
  b["waldschmidt_p2"] = to_fraction_string(waldschmidt_three_points(s[0], s[1], s[2]));
  if (*computed != closed)
    res.counterexamples.push_back("alpha mismatch for " + z.to_string() + ": computed " +
                                  std::to_string(*computed) + ", closed form " + std::to_string(closed));
  return res;
}

inline CaseResult run_table(const SweepConfig& cfg, unsigned n, const Tuple& t, ContainmentTable* keep) {
  CaseResult res;
  const auto z = FatPointScheme::three_points(n, t[0], t[1], t[2]);
  auto table = containment_table(z, cfg.m_max, cfg.r_max);
  res.body["scheme"] = to_json(z);
  res.body["monotone"] = table.is_monotone();
  res.body["table"] = to_json(table);
  if (!table.is_monotone()) res.counterexamples.push_back("non-monotone table for " + z.to_string());
  if (keep) *keep = std::move(table);
  return res;
}

inline CaseResult run_resurgence(const SweepConfig& cfg, unsigned n, const Tuple& t) {
  CaseResult res;
  const auto z = FatPointScheme::three_points(n, t[0], t[1], t[2]);
  const auto rep = resurgence_report(z, cfg.m_max, cfg.r_max);
  res.body = to_json(rep);
  for (const auto& v : rep.violations)
    res.counterexamples.push_back("noncontainment above certified rho for " + z.to_string() + " at (m,r)=(" +
                                  std::to_string(v.m) + "," + std::to_string(v.r) + ")");
  if (!rep.table.is_monotone()) res.counterexamples.push_back("non-monotone table for " + z.to_string());
  return res;
}

inline CaseResult run_sdefect(const SweepConfig& cfg, unsigned n, const Tuple& t) {
  CaseResult res;
  const auto z = FatPointScheme::three_points(n, t[0], t[1], t[2]);
  const auto cls = classify(t[0], t[1], t[2], false);
  const auto sd = sdefect_zero_upto(z, cfg.m_max);
  auto& b = res.body;
  b["scheme"] = to_json(z);
  b["classification"] = to_string(cls.kind);
  b["zero_defect"] = sd.zero_defect;
  b["checked_upto"] = sd.checked_upto;
  b["first_failing_m"] = sd.first_failing_m ? nlohmann::ordered_json(*sd.first_failing_m) : nullptr;
  b["witness"] = sd.witness ? nlohmann::ordered_json(to_json(*sd.witness)) : nullptr;
  if (cls.kind == Classification::odd_sum) {
    if (cfg.m_max >= 2 && (sd.zero_defect || *sd.first_failing_m > 2))
      res.counterexamples.push_back("expected I^(m) != I^m for some m <= 2 for " + z.to_string());
  } else if (!sd.zero_defect) {
    res.counterexamples.push_back("symbolic defect at m=" + std::to_string(*sd.first_failing_m) + " for " +
                                  z.to_string());
  }
  return res;
}

/// Random pairwise distinct line points with small numerators/denominators.
inline std::vector<LinePoint> random_line_points(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<LinePoint> pts;
  while (pts.size() < count) {
    LinePoint p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (p.c == 0 && p.d == 0) continue;
    bool clash = false;
    for (const auto& q : pts) clash = clash || p.c * q.d == q.c * p.d;
    if (!clash) pts.push_back(p);
  }
  return pts;
}

/// gm_member and the polynomial criterion agree on every generator of I(mZ)
/// of degree <= bound and on each generator divided by a single prime.
inline std::vector<std::string> cross_check_line(const LineScheme& z, unsigned m, unsigned bound) {
  std::vector<std::string> bad;
  auto probe = [&](const GeneralizedMonomial& g) {
    if (g.degree() > bound) return;
    const bool a = gm_member(g, z, m);
    const bool b = multi_point_membership(expand(g, z), z, m).member;
    if (a != b) bad.push_back("membership routes disagree on " + g.to_string() + " at m=" + std::to_string(m));
  };
  for (const auto& g : canonical_generators(z, m)) {
    probe(g);
    for (std::size_t i = 0; i < g.exps().size(); ++i) {
      if (g.exps()[i] == 0) continue;
      ExponentVector smaller = g.exps();
      smaller[i] -= 1;
      probe(GeneralizedMonomial(g.n_forms(), smaller));
    }
  }
  return bad;
}

inline CaseResult run_verify_collinear(const SweepConfig& cfg, unsigned n, const Tuple& t, std::size_t index) {
  CaseResult res;
  const auto z = LineScheme::standard(n, t);
  auto& b = res.body;
  b["scheme"] = to_json(z);
  auto per_m = nlohmann::ordered_json::array();
  for (unsigned m = 1; m <= cfg.m_max; ++m) {
    const bool split = verify_line_splitting(z, m);
    const auto check = check_collinear_power(z, m);
    per_m.push_back({{"m", m},
                     {"splitting", split},
                     {"generator_sets_equal", check.generator_sets_equal},
                     {"symbolic_equals_ordinary", check.verified}});
    const std::string where = " for " + detail::tuple_string(t) + " in P^" + std::to_string(n) + " at m=" +
                              std::to_string(m);
    if (!split) res.counterexamples.push_back("line splitting fails" + where);
    if (!check.verified) res.counterexamples.push_back("I^(m) != I^m" + where);
    for (auto& s : cross_check_line(z, m, cfg.degree_bound)) res.counterexamples.push_back(s);
  }
  b["powers"] = per_m;
  std::mt19937_64 rng(cfg.seed + index);
  const LineScheme random_z(n, random_line_points(t.size(), rng), t);
  std::size_t disagreements = 0;
  for (unsigned m = 1; m <= cfg.m_max; ++m) {
    auto bad = cross_check_line(random_z, m, cfg.degree_bound);
    disagreements += bad.size();
    for (auto& s : bad) res.counterexamples.push_back(s + " (random specialization)");
  }
  b["random_specialization"] = to_json(random_z);
  b["cross_check_disagreements"] = disagreements;
  return res;
}

inline CaseResult run_verify_splittings(const SweepConfig& cfg, unsigned n, const Tuple& t) {
  CaseResult res;
  const unsigned m0 = t[0], m1 = t[1], m2 = t[2];
  const auto z = FatPointScheme::three_points(n, m0, m1, m2);
  auto& b = res.body;
  b["scheme"] = to_json(z);
  const std::string name = z.to_string();
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) res.counterexamples.push_back(what + " fails for " + name);
    return ok;
  };
  const auto cond_bad = cond_equivalence_counterexample(z, cfg.degree_bound);
  b["cond_equivalence"] = !cond_bad.has_value();
  if (cond_bad) res.counterexamples.push_back("Cond mismatch at " + cond_bad->to_string() + " for " + name);
  if (m2 < std::max(m0, m1)) {
    b["applicable"] = false;
    return res;
  }
  b["applicable"] = true;
  if (m0 + m1 <= m2) {
    b["split_leq"] = expect(verify_split_leq(z), "split (m0+m1 <= m2)");
    return res;
  }
  b["split_gt"] = expect(verify_split_gt(z), "split (m0+m1 > m2)");
  const unsigned t1 = m0 + m1 - m2;
  bool tp = true;
  for (unsigned q = 0; 2 * q <= t1; ++q)
    for (unsigned r = 0; r <= 1 && 2 * q + r <= t1; ++r) tp = expect(verify_triple_power(q, r, n), "triple power") && tp;
  b["triple_power"] = tp;
  const unsigned s = m0 + m1 + m2;
  if (s % 2 == 0) return res;

  bool fact = true, mult = true, sched = true;
  for (unsigned k = 1; k <= cfg.m_max; ++k) {
    fact = expect(verify_symbolic_factorization(z, k), "symbolic factorization k=" + std::to_string(k)) && fact;
    for (unsigned i = 1; i < k; ++i) {
      if (i % 2 == 1 && (k - i) % 2 == 1) continue;
      mult = expect(verify_symbolic_multiplicativity(z, k, i),
                    "multiplicativity k=" + std::to_string(k) + " i=" + std::to_string(i)) && mult;
    }
  }
  for (unsigned q = 0; q * (1 + s) <= cfg.m_max; ++q)
    for (unsigned r = 0; r < 1 + s && q * (1 + s) + r <= cfg.m_max; ++r) {
      if (q == 0 && r == 0) continue;
      sched = expect(verify_schedule(z, q, r), "schedule q=" + std::to_string(q) + " r=" + std::to_string(r)) && sched;
    }
  b["symbolic_factorization"] = fact;
  b["multiplicativity"] = mult;
  b["schedule"] = sched;
  bool w = expect(verify_w_claim(m0, m1, m2, n), "W claim");
  bool v = true;
  for (unsigned r = 2; r < 1 + s && r <= cfg.m_max; ++r)
    v = expect(verify_v_claim(m0, m1, m2, r, n), "V claim r=" + std::to_string(r)) && v;
  b["w_claim"] = w;
  b["v_claim"] = v;
  if (m0 == 1 && m1 == 1 && m2 == 1) {
    bool small = true;
    for (unsigned r = 1; r <= 4; ++r) small = expect(verify_small_containments(n, r), "small containment r=" + std::to_string(r)) && small;
    b["small_containments"] = small;
  }
  return res;
}

inline LinePoint parse_line_point(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--point expects c:d");
  try {
    return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline CaseResult run_decompose(const SweepConfig& cfg) {
  CaseResult res;
  const unsigned n = cfg.n_ambient.lo;
  SparsePoly f(n + 1);
  std::optional<LinePoint> pt;
  try {
    f = parse_poly(cfg.form, n + 1);
    if (!cfg.point.empty()) pt = parse_line_point(cfg.point);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!f.is_homogeneous()) throw UsageError("--form must be homogeneous");
  auto& b = res.body;
  b["form"] = to_string(f);
  b["zero_form"] = f.is_zero();
  const auto parts = decompose(f);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, form] : parts) {
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : form.coeffs()) coeffs.push_back(to_fraction_string(c));
    arr.push_back({{"key", to_json(key)}, {"degree", form.degree()}, {"coeffs", coeffs}});
  }
  b["decomposition"] = arr;
  const bool round_trip = recompose(parts, n + 1) == f && parse_poly(to_string(f), n + 1) == f;
  b["round_trip"] = round_trip;
  if (!round_trip) res.counterexamples.push_back("decompose/recompose or print/parse round trip failed");
  if (pt) {
    if (pt->c == 0 && pt->d == 0) throw UsageError("--point must not be 0:0");
    b["point"] = {to_short_string(pt->c), to_short_string(pt->d)};
    b["point_m"] = cfg.point_m;
    b["member"] = poly_membership(f, *pt, cfg.point_m);
  }
  return res;
}

}  // namespace detail

/// Runs every parameter tuple of the configuration. Counterexamples are
/// collected in tuple order, never thrown.
inline RunReport run(const SweepConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  RunReport rep{cfg, {}, {}, 0, std::nullopt};

  if (cfg.mode == Mode::decompose) {
    rep.cases.push_back(detail::run_decompose(cfg));
  } else {
    struct Job {
      unsigned n;
      detail::Tuple t;
    };
    std::vector<Job> jobs;
    for (unsigned n = cfg.n_ambient.lo; n <= cfg.n_ambient.hi; ++n)
      for (auto& t : detail::expand_ranges(cfg.mults)) jobs.push_back({n, std::move(t)});
    const bool keep_table = cfg.mode == Mode::table && jobs.size() == 1;
    ContainmentTable kept{FatPointScheme(2, {}), 0, 0, {}};

    rep.cases.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto& [n, t] = jobs[i];
        CaseResult res;
        try {
          switch (cfg.mode) {
            case Mode::classify: res = detail::run_classify(cfg, n, t); break;
            case Mode::table: res = detail::run_table(cfg, n, t, keep_table ? &kept : nullptr); break;
            case Mode::resurgence: res = detail::run_resurgence(cfg, n, t); break;
            case Mode::sdefect: res = detail::run_sdefect(cfg, n, t); break;
            case Mode::verify_collinear: res = detail::run_verify_collinear(cfg, n, t, i); break;
            case Mode::verify_splittings: res = detail::run_verify_splittings(cfg, n, t); break;
            case Mode::decompose: break;
          }
        } catch (const std::exception& e) {
          res.body["error"] = e.what();
          res.counterexamples.push_back("case " + detail::tuple_string(t) + " in P^" + std::to_string(n) +
                                        " raised: " + e.what());
        }
        nlohmann::ordered_json body{{"case", {{"n_ambient", n}, {"mults", t}}}};
        for (auto& [k, v] : res.body.items()) body[k] = std::move(v);
        res.body = std::move(body);
        res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rep.cases[i] = std::move(res);
      }
    };
    const unsigned width = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < width; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (keep_table) rep.table = std::move(kept);
  }

  for (const auto& c : rep.cases)
    rep.counterexamples.insert(rep.counterexamples.end(), c.counterexamples.begin(), c.counterexamples.end());
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Writes the report in the configured format to cfg.out_path, or to `fallback`
/// when no path is set.
inline void write_report(const RunReport& rep, std::ostream& fallback) {
  const auto& cfg = rep.config;
  std::ostringstream body;
  if (cfg.format == Format::csv) {
    write_csv(*rep.table, body);
  } else {
    body << to_json(rep, cfg.timings).dump(2) << '\n';
  }
  if (cfg.out_path.empty()) {
    fallback << body.str();
    return;
  }
  std::ofstream os(cfg.out_path, std::ios::binary);
  if (!os) throw IoError("cannot open " + cfg.out_path + " for writing");
  os << body.str();
  os.flush();
  if (!os) throw IoError("write to " + cfg.out_path + " failed");
}

}  // namespace fatpoint

#endif
