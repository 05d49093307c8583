#include "gbswitch/harness.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbswitch/bounds.hpp"
#include "gbswitch/lp_optimizer.hpp"
#include "gbswitch/parallel.hpp"
#include "gbswitch/rng.hpp"
#include "gbswitch/solvers.hpp"
#include "gbswitch/tensor_io.hpp"

namespace gbswitch::cli {

namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tabulated asymptotic Bohnenblust–Hille constants.
const std::map<int, double>& bh_table() {
  static const std::map<int, double> table = {
      {2, 1.2533}, {5, 1.9895}, {10, 3.0555}, {100, 15.2457}, {1000, 81.1974}};
  return table;
}
constexpr double kBhTableTolerance = 1e-3;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json json_scalar(const std::string& s) {
  if (s.empty()) return nullptr;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() + s.size() && std::isfinite(v)) {
    if (s.find_first_of(".eE") == std::string::npos) {
      return std::strtoll(s.c_str(), nullptr, 10);
    }
    return v;
  }
  return s;
}

std::string witness_json(const SwitchAssignment& w) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& v : w.vectors()) {
    auto& row = doc.emplace_back(nlohmann::ordered_json::array());
    for (std::int8_t e : v) row.push_back(static_cast<int>(e));
  }
  return doc.dump();
}

std::string witness_json(const std::vector<LpPoint>& w) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& point : w) doc.push_back(point.coords());
  return doc.dump();
}

// State shared by every subcommand.
struct Common {
  bool json = false;
  bool timing = false;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

std::uint64_t require_seed(const Common& common, const std::string& command) {
  if (!common.seed) throw UsageError(command + ": --seed is required for randomized runs");
  return *common.seed;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(Clock::now()) {}
  [[nodiscard]] std::int64_t elapsed_ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

 private:
  bool enabled_;
  Clock::time_point start_;
};

std::string seed_field(const std::optional<std::uint64_t>& seed) {
  return seed ? std::to_string(*seed) : std::string();
}

std::optional<double> lower_bound_reference(int m, std::size_t n, const Exponent& p) {
  try {
    return g_lower_bound_formula(m, n, p);
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct SolveOptions {
  std::string method = "exact";
  std::size_t restarts = 16;
  std::size_t starts = 8;
  std::size_t sweeps = 0;
  double tol = 1e-10;
  std::size_t max_bits = ExactBudget{}.max_free_bits;
};

struct SolveOutcome {
  double value;
  std::string witness;
};

// One tensor through the chosen method; every witness is re-evaluated.
SolveOutcome solve_one(const SignTensor& t, const Exponent& p, const SolveOptions& opt,
                       std::uint64_t seed) {
  if (opt.method == "alt") {
    AltMaxOptions alt;
    alt.starts = opt.starts;
    alt.sweeps_max = opt.sweeps == 0 ? 1000 : opt.sweeps;
    alt.tol = opt.tol;
    alt.seed = seed;
    const AltMaxResult r = alternating_max(t, p, alt);
    std::vector<std::vector<double>> coords;
    for (const auto& point : r.witness) coords.push_back(point.coords());
    const double check = evaluate(t, std::span<const std::vector<double>>(coords));
    if (std::abs(check - r.value) > 1e-9 * std::max(1.0, std::abs(r.value))) {
      throw std::logic_error("alternating witness does not reproduce its value");
    }
    return {r.value, witness_json(r.witness)};
  }
  if (p.is_finite()) throw UsageError("method '" + opt.method + "' only supports --p inf");
  if (opt.method == "exact") {
    const SolveResult r = exact_max(t, ExactBudget{opt.max_bits});
    return {static_cast<double>(r.value()), witness_json(r.witness())};
  }
  if (opt.method == "greedy") {
    const SolveResult r = random_restart_greedy(t, opt.restarts, seed);
    return {static_cast<double>(r.value()), witness_json(r.witness())};
  }
  if (opt.method == "local") {
    SignSource source(mix_seed(seed, {0}));
    std::vector<std::vector<std::int8_t>> start;
    for (std::size_t k = 0; k < t.dims().m(); ++k) start.push_back(source.vector(t.dims().n()));
    const auto r = local_search(t, SwitchAssignment(t.dims(), std::move(start)),
                                opt.sweeps == 0 ? 1'000'000 : opt.sweeps);
    return {static_cast<double>(r.result.value()), witness_json(r.result.witness())};
  }
  throw UsageError("unknown method '" + opt.method + "'");
}

bool randomized(const std::string& method) { return method != "exact"; }

ExperimentRecord base_record(const std::string& command, int m, std::size_t n, const Exponent& p,
                             const std::optional<std::uint64_t>& seed, const std::string& method) {
  ExperimentRecord rec;
  rec.command = command;
  rec.m = std::to_string(m);
  rec.n = std::to_string(n);
  rec.p = p.str();
  rec.seed = seed_field(seed);
  rec.method = method;
  return rec;
}

void judge_lower(ExperimentRecord& rec, double value, std::optional<double> reference, bool judged) {
  rec.value = format_number(value);
  if (reference) {
    rec.reference = format_number(*reference);
    if (judged) rec.verdict = value >= *reference ? Verdict::Pass : Verdict::Fail;
  }
}

std::vector<std::size_t> n_range(std::size_t lo, std::size_t hi) {
  if (lo < 1 || hi < lo) throw UsageError("need 1 <= --n-min <= --n-max");
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(Rational::parse(s));
  return out;
}

// Exhaustive or sampled checks of the ±1 lower bound and of the ℓr blow-up
// inequality at p = ∞.
std::vector<ExperimentRecord> verify_bound(int m, std::size_t n, const std::vector<Rational>& rs,
                                           std::optional<std::size_t> samples, const Common& common,
                                           std::size_t max_bits) {
  const DimSpec dims(static_cast<std::size_t>(m), n);
  const bool exhaustive = !samples;
  std::uint64_t count = 0;
  if (exhaustive) {
    if (dims.size() > 24) {
      throw UsageError("exhaustive verification needs n^m <= 24; pass --samples and --seed");
    }
    count = std::uint64_t{1} << dims.size();
  } else {
    count = *samples;
  }
  const std::uint64_t seed = exhaustive ? 0 : require_seed(common, "verify-bound");
  const ExactBudget budget{max_bits};
  if (!exact_within_budget(dims, budget)) {
    throw Error(ErrorKind::BudgetExceeded, "instance too large for exact verification");
  }

  constexpr std::size_t kChunks = 256;
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kChunks, count));
  std::vector<std::int64_t> chunk_min(chunks, std::numeric_limits<std::int64_t>::max());
  parallel_for(chunks, [&](std::size_t c) {
    for (std::uint64_t i = c; i < count; i += chunks) {
      const SignTensor t = exhaustive ? SignTensor::from_bits(dims, i)
                                      : ksz::sample_tensor(m, n, seed, static_cast<std::size_t>(i));
      chunk_min[c] = std::min(chunk_min[c], exact_max(t, budget).value());
    }
  });
  const std::int64_t worst = *std::min_element(chunk_min.begin(), chunk_min.end());

  const std::string method = exhaustive ? "exhaustive" : "sampled";
  std::vector<ExperimentRecord> rows;
  const std::optional<std::uint64_t> seed_col =
      exhaustive ? std::nullopt : std::optional<std::uint64_t>(seed);
  ExperimentRecord lower = base_record("verify-bound", m, n, Exponent::infinity(), seed_col,
                                       method + ":min_exact_max");
  judge_lower(lower, static_cast<double>(worst), g_lower_bound_formula(m, n, Exponent::infinity()), true);
  rows.push_back(lower);

  // Every ±1 tensor has (Σ|a|^r)^{1/r} = n^{m/r}, so the worst ratio
  // comes from the smallest exact maximum.
  for (const Rational& r : rs) {
    const double s = bounds::blowup_exponent(m, Exponent::infinity(), r).to_double();
    const double lhs = std::pow(static_cast<double>(n), static_cast<double>(m) / r.to_double());
    const double ratio = lhs / (std::pow(static_cast<double>(n), s) * static_cast<double>(worst));
    ExperimentRecord rec = base_record("verify-bound", m, n, Exponent::infinity(), seed_col,
                                       method + ":blowup_ratio");
    rec.r = r.str();
    rec.value = format_number(ratio);
    const double reference = bounds::km_constant(m);
    rec.reference = format_number(reference);
    rec.verdict = ratio <= reference ? Verdict::Pass : Verdict::Fail;
    rows.push_back(rec);
  }
  return rows;
}

std::vector<ExperimentRecord> verify_extremal() {
  const DimSpec dims(2, 2);
  std::int64_t minimum = std::numeric_limits<std::int64_t>::max();
  std::vector<std::uint64_t> attaining;
  bool classifier_agrees = true;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const SignTensor t = SignTensor::from_bits(dims, bits);
    const std::int64_t value = exact_max(t).value();
    if (value < minimum) {
      minimum = value;
      attaining.clear();
    }
    if (value == minimum) attaining.push_back(bits);
    // 2^{−1/2}·n^{3/2} = 2 for n = 2.
    classifier_agrees = classifier_agrees && (classify_extremal(t) == (value == 2));
  }
  const double bound = std::pow(2.0, -0.5) * std::pow(2.0, 1.5);

  ExperimentRecord min_row = base_record("verify-extremal", 2, 2, Exponent::infinity(), std::nullopt,
                                         "exhaustive:min_exact_max");
  min_row.value = std::to_string(minimum);
  min_row.reference = format_number(bound);
  min_row.verdict = static_cast<double>(minimum) >= bound - 1e-12 ? Verdict::Pass : Verdict::Fail;

  ExperimentRecord count_row = base_record("verify-extremal", 2, 2, Exponent::infinity(), std::nullopt,
                                           "exhaustive:equality_count");
  count_row.value = std::to_string(attaining.size());
  count_row.reference = "8";
  count_row.verdict =
      (classifier_agrees && attaining.size() == 8 && minimum == 2) ? Verdict::Pass : Verdict::Fail;
  return {min_row, count_row};
}

void emit(const std::vector<ExperimentRecord>& rows, const Common& common, std::ostream& out) {
  const std::string text = common.json ? format_json(rows) : format_csv(rows);
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write " + common.out_path);
  file << text;
}

int exit_code(const std::vector<ExperimentRecord>& rows) {
  for (const auto& r : rows) {
    if (r.verdict == Verdict::Fail) return 1;
  }
  return 0;
}

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

std::string format_csv(const std::vector<ExperimentRecord>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", csv_field(r.command), r.m, r.n,
                       csv_field(r.p), csv_field(r.r), r.seed, csv_field(r.method), csv_field(r.value),
                       csv_field(r.reference), to_string(r.verdict), r.runtime_ms);
  }
  return out;
}

std::string format_json(const std::vector<ExperimentRecord>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["command"] = r.command;
    row["m"] = json_scalar(r.m);
    row["n"] = json_scalar(r.n);
    row["p"] = r.p.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.p);
    row["r"] = r.r.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.r);
    row["seed"] = json_scalar(r.seed);
    row["method"] = r.method;
    row["value"] = json_scalar(r.value);
    row["reference"] = json_scalar(r.reference);
    row["verdict"] = std::string(to_string(r.verdict));
    row["runtime_ms"] = r.runtime_ms;
    if (!r.witness.empty()) row["witness"] = nlohmann::ordered_json::parse(r.witness);
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gale-Berlekamp switching game solvers and exponent experiments", "gbswitch"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub, bool with_seed) {
    sub->add_flag("--json", common.json, "Write JSON instead of CSV");
    sub->add_flag("--timing", common.timing, "Record wall-clock runtime_ms (otherwise 0)");
    sub->add_option("--out", common.out_path, "Write output to this file instead of stdout");
    if (with_seed) sub->add_option("--seed", common.seed, "Random seed (u64)");
  };

  // solve
  std::string solve_input;
  std::string solve_p = "inf";
  std::string witness_path;
  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Maximize the form of one tensor file");
  solve->add_option("--input", solve_input, "Tensor JSON file")->required();
  solve->add_option("--p", solve_p, "Exponent: inf, a/b or decimal");
  solve->add_option("--method", solve_opt.method, "exact|greedy|local|alt")
      ->check(CLI::IsMember({"exact", "greedy", "local", "alt"}));
  solve->add_option("--restarts", solve_opt.restarts, "Greedy restarts");
  solve->add_option("--starts", solve_opt.starts, "Alternating-maximization starts");
  solve->add_option("--sweeps", solve_opt.sweeps, "Sweep cap (0 = method default)");
  solve->add_option("--tol", solve_opt.tol, "Relative sweep tolerance for alt");
  solve->add_option("--max-bits", solve_opt.max_bits, "Exact search budget in enumerated bits");
  solve->add_option("--witness", witness_path, "Write the witness vectors as JSON");
  add_common(solve, true);

  // scan
  int scan_m = 2;
  std::size_t scan_lo = 2;
  std::size_t scan_hi = 6;
  std::size_t scan_samples = 10;
  std::string scan_p = "inf";
  SolveOptions scan_opt;
  auto* scan = app.add_subcommand("scan", "Solve random tensors over a range of n");
  scan->add_option("--m", scan_m)->check(CLI::PositiveNumber);
  scan->add_option("--n-min", scan_lo);
  scan->add_option("--n-max", scan_hi);
  scan->add_option("--samples", scan_samples)->check(CLI::PositiveNumber);
  scan->add_option("--p", scan_p);
  scan->add_option("--method", scan_opt.method)->check(CLI::IsMember({"exact", "greedy", "local", "alt"}));
  scan->add_option("--restarts", scan_opt.restarts);
  scan->add_option("--starts", scan_opt.starts);
  scan->add_option("--sweeps", scan_opt.sweeps);
  scan->add_option("--tol", scan_opt.tol);
  scan->add_option("--max-bits", scan_opt.max_bits);
  add_common(scan, true);

  // ksz
  int ksz_m = 2;
  std::size_t ksz_lo = 2;
  std::size_t ksz_hi = 6;
  std::size_t ksz_samples = 500;
  std::string ksz_p = "inf";
  ksz::SlopeWindow window;
  ksz::SamplingOptions sampling;
  auto* ksz_cmd = app.add_subcommand("ksz", "Minimum-norm sampling and log-log slope fit");
  ksz_cmd->add_option("--m", ksz_m)->check(CLI::PositiveNumber);
  ksz_cmd->add_option("--n-min", ksz_lo);
  ksz_cmd->add_option("--n-max", ksz_hi);
  ksz_cmd->add_option("--samples", ksz_samples)->check(CLI::PositiveNumber);
  ksz_cmd->add_option("--p", ksz_p);
  ksz_cmd->add_option("--below", window.below, "Allowed slope deficit below the reference");
  ksz_cmd->add_option("--above", window.above, "Allowed slope excess above the reference");
  ksz_cmd->add_option("--starts", sampling.alt_starts, "Starts per tensor for finite p");
  ksz_cmd->add_option("--max-bits", sampling.budget.max_free_bits);
  add_common(ksz_cmd, true);

  // verify-bound
  int vb_m = 2;
  std::size_t vb_n = 3;
  std::vector<std::string> vb_r;
  std::optional<std::size_t> vb_samples;
  std::size_t vb_bits = ExactBudget{}.max_free_bits;
  auto* vb = app.add_subcommand("verify-bound", "Check the ±1 lower bound and l_r blow-up inequality");
  vb->add_option("--m", vb_m)->check(CLI::PositiveNumber);
  vb->add_option("--n", vb_n)->check(CLI::PositiveNumber);
  vb->add_option("--r", vb_r, "Comma-separated r values")->delimiter(',');
  vb->add_option("--samples", vb_samples, "Sample instead of exhausting (needs --seed)");
  vb->add_option("--max-bits", vb_bits);
  add_common(vb, true);

  // verify-extremal
  auto* ve = app.add_subcommand("verify-extremal", "Exhaust all 2x2 sign matrices");
  add_common(ve, false);

  // constants
  std::vector<int> const_m = {2, 5, 10, 100, 1000};
  auto* constants = app.add_subcommand("constants", "Asymptotic Bohnenblust-Hille constants");
  constants->add_option("--m", const_m, "Comma-separated degrees")->delimiter(',')->check(CLI::PositiveNumber);
  add_common(constants, false);

  // region
  int region_m = 2;
  std::string region_p = "inf";
  std::optional<std::string> region_r;
  std::string polyline_path;
  std::string poly_lo = "1";
  std::string poly_hi = "12";
  std::size_t poly_steps = 110;
  auto* region = app.add_subcommand("region", "Classify exponents (admissible / unknown)");
  region->add_option("--m", region_m)->check(CLI::PositiveNumber);
  region->add_option("--p", region_p);
  region->add_option("--r", region_r, "Also classify this summability exponent");
  region->add_option("--polyline", polyline_path, "Write boundary curves as CSV (p,lower,upper)");
  region->add_option("--p-min", poly_lo);
  region->add_option("--p-max", poly_hi);
  region->add_option("--steps", poly_steps);
  add_common(region, false);

  // gen
  std::size_t gen_m = 2;
  std::size_t gen_n = 4;
  auto* gen = app.add_subcommand("gen", "Write a uniform random sign tensor as JSON");
  gen->add_option("--m", gen_m)->check(CLI::PositiveNumber);
  gen->add_option("--n", gen_n)->check(CLI::PositiveNumber);
  add_common(gen, true);

  std::vector<const char*> argv{"gbswitch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Stopwatch watch(common.timing);
  try {
    std::vector<ExperimentRecord> rows;

    if (*solve) {
      const SignTensor t = read_tensor_file(solve_input);
      const Exponent p = Exponent::parse(solve_p);
      const int m = static_cast<int>(t.dims().m());
      std::uint64_t seed = 0;
      if (randomized(solve_opt.method)) seed = require_seed(common, "solve");
      const SolveOutcome r = solve_one(t, p, solve_opt, seed);
      ExperimentRecord rec = base_record("solve", m, t.dims().n(), p,
                                         randomized(solve_opt.method) ? common.seed : std::nullopt,
                                         solve_opt.method);
      judge_lower(rec, r.value, lower_bound_reference(m, t.dims().n(), p), solve_opt.method == "exact");
      rec.witness = r.witness;
      rec.runtime_ms = watch.elapsed_ms();
      err << "witness: " << r.witness << '\n';
      if (!witness_path.empty()) {
        std::ofstream wf(witness_path);
        nlohmann::ordered_json doc;
        doc["p"] = p.str();
        doc["value"] = r.value;
        doc["vectors"] = nlohmann::ordered_json::parse(r.witness);
        wf << doc.dump() << '\n';
      }
      rows.push_back(rec);
    } else if (*scan) {
      const Exponent p = Exponent::parse(scan_p);
      // Tensors are always random, so the seed is mandatory for every method.
      const std::uint64_t seed = require_seed(common, "scan");
      for (std::size_t n : n_range(scan_lo, scan_hi)) {
        std::vector<SolveOutcome> outcomes(scan_samples);
        parallel_for(scan_samples, [&](std::size_t i) {
          const SignTensor t = ksz::sample_tensor(scan_m, n, seed, i);
          outcomes[i] = solve_one(t, p, scan_opt, mix_seed(seed, {n, i, 2}));
        });
        for (std::size_t i = 0; i < scan_samples; ++i) {
          ExperimentRecord rec = base_record("scan", scan_m, n, p, common.seed, scan_opt.method);
          judge_lower(rec, outcomes[i].value, lower_bound_reference(scan_m, n, p),
                      scan_opt.method == "exact");
          rows.push_back(rec);
        }
      }
      if (!rows.empty()) rows.back().runtime_ms = watch.elapsed_ms();
    } else if (*ksz_cmd) {
      const Exponent p = Exponent::parse(ksz_p);
      const std::uint64_t seed = require_seed(common, "ksz");
      const auto ns = n_range(ksz_lo, ksz_hi);
      const ksz::SharpnessResult result =
          ksz::sharpness_experiment(ksz_m, p, ns, ksz_samples, seed, window, sampling);
      for (const auto& s : result.per_n) {
        ExperimentRecord rec = base_record("ksz", ksz_m, s.n, p, seed, s.exact ? "min_norm:exact" : "min_norm:estimate");
        judge_lower(rec, s.min_norm, lower_bound_reference(ksz_m, s.n, p), s.exact);
        rows.push_back(rec);
      }
      ExperimentRecord fit = base_record("ksz", ksz_m, ns.back(), p, seed, "slope_fit");
      fit.n = fmt::format("{}-{}", ns.front(), ns.back());
      fit.value = format_number(result.fit.slope);
      fit.reference = format_number(result.reference.to_double());
      fit.verdict = result.verdict;
      fit.runtime_ms = watch.elapsed_ms();
      rows.push_back(fit);
    } else if (*vb) {
      rows = verify_bound(vb_m, vb_n, parse_rationals(vb_r), vb_samples, common, vb_bits);
      rows.back().runtime_ms = watch.elapsed_ms();
    } else if (*ve) {
      rows = verify_extremal();
      rows.back().runtime_ms = watch.elapsed_ms();
    } else if (*constants) {
      for (int m : const_m) {
        ExperimentRecord rec;
        rec.command = "constants";
        rec.m = std::to_string(m);
        rec.method = "bh_asymptotic";
        const double value = bounds::bh_asymptotic_constant(m);
        rec.value = format_number(value);
        if (const auto it = bh_table().find(m); it != bh_table().end()) {
          rec.reference = format_number(it->second);
          rec.verdict = std::abs(value - it->second) <= kBhTableTolerance ? Verdict::Pass : Verdict::Fail;
        }
        rows.push_back(rec);
      }
      rows.back().runtime_ms = watch.elapsed_ms();
    } else if (*region) {
      const Exponent p = Exponent::parse(region_p);
      const bounds::RegionVerdict v = bounds::unimodular_sharp_exponent(region_m, p);
      ExperimentRecord rec;
      rec.command = "region";
      rec.m = std::to_string(region_m);
      rec.p = p.str();
      rec.method = fmt::format("optimal_exponent:{}", bounds::to_string(v.kind));
      if (v.sharp_exponent) {
        rec.value = format_number(v.sharp_exponent->to_double());
        rec.reference = rec.value;
      } else {
        rec.value = format_number(v.lo->to_double());
        rec.reference = format_number(v.hi->to_double());
      }
      rows.push_back(rec);
      const auto conj = bounds::conjecture_exponent(region_m, p, bounds::Conjecture::SummabilityExponent);
      ExperimentRecord conj_row = rec;
      conj_row.method = fmt::format("conjectured_exponent:{}", bounds::ConjecturalValue::kTag);
      conj_row.value = format_number(conj.value.to_double());
      conj_row.reference.clear();
      rows.push_back(conj_row);
      if (region_r) {
        const Exponent r = Exponent::parse(*region_r);
        const bounds::RegionVerdict point = bounds::classify_point(region_m, p, r);
        ExperimentRecord cls = rec;
        cls.r = r.str();
        cls.method = fmt::format("classify:{}", bounds::to_string(point.kind));
        cls.value = format_number(r.to_double());
        if (point.sharp_exponent) {
          cls.reference = format_number(point.sharp_exponent->to_double());
        } else if (point.lo) {
          cls.reference = format_number(point.lo->to_double());
        }
        rows.push_back(cls);
        if (r.is_finite() && (p.is_infinite() || p.value() > Rational(1))) {
          const auto blow = bounds::conjecture_exponent(region_m, p, bounds::Conjecture::BlowupRate, r.value());
          ExperimentRecord blow_row = cls;
          blow_row.method = fmt::format("conjectured_blowup:{}", bounds::ConjecturalValue::kTag);
          blow_row.value = format_number(blow.value.to_double());
          blow_row.reference.clear();
          rows.push_back(blow_row);
        }
      }
      if (!polyline_path.empty()) {
        std::ofstream poly(polyline_path);
        if (!poly) throw Error(ErrorKind::ParseError, "cannot write " + polyline_path);
        poly << "p,lower,upper\n";
        for (const auto& pt : bounds::region_polyline(region_m, Rational::parse(poly_lo),
                                                      Rational::parse(poly_hi), poly_steps)) {
          poly << format_number(pt.p.to_double()) << ','
               << (pt.lower ? format_number(pt.lower->to_double()) : "") << ','
               << (pt.upper ? format_number(pt.upper->to_double()) : "") << '\n';
        }
      }
      rows.back().runtime_ms = watch.elapsed_ms();
    } else if (*gen) {
      const std::uint64_t seed = require_seed(common, "gen");
      const SignTensor t = random_sign_tensor(DimSpec(gen_m, gen_n), seed);
      if (common.out_path.empty()) {
        out << tensor_to_json(t) << '\n';
      } else {
        write_tensor_file(common.out_path, t);
      }
      return 0;
    }

    emit(rows, common, out);
    return exit_code(rows);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gbswitch::cli
