#include "alvero/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "alvero/basis_cache.hpp"
#include "alvero/conjecture.hpp"
#include "alvero/interlace_suite.hpp"
#include "alvero/poly_text.hpp"
#include "alvero/report.hpp"

namespace alvero::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  in >> out;
  if (!in || !(in >> std::ws).eof()) throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
}

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> perm;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) perm.push_back(parse_number<int>("perm", trim(item)));
  return perm;
}

Format parse_format(const std::string& value) {
  if (value == "text") return Format::text;
  if (value == "json") return Format::json;
  throw std::invalid_argument("format must be text or json, got '" + value + "'");
}

const char* verdict_word(bool ok) { return ok ? "pass" : "fail"; }
const char* verdict_banner(bool ok) { return ok ? "PASS" : "FAIL"; }

int require_degree(const RunConfig& cfg, int lowest, int highest) {
  if (!cfg.degree) throw std::invalid_argument("--degree is required");
  const int d = *cfg.degree;
  if (d < lowest || d > highest) {
    throw std::invalid_argument("degree " + std::to_string(d) + " outside " + std::to_string(lowest) + ".." +
                                std::to_string(highest));
  }
  return d;
}

json report_header(const std::string& command, const std::string& check, int degree) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"check", check}, {"degree", degree}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

ExactContext exact_context(const RunConfig& cfg, StepBudget& budget, std::optional<BasisCache>& cache) {
  if (cfg.use_cache) cache.emplace(cfg.cache_dir);
  ExactContext ctx;
  ctx.order = cfg.order;
  ctx.budget = &budget;
  ctx.cache = cache ? &*cache : nullptr;
  ctx.jobs = cfg.jobs;
  ctx.certificates = cfg.certificates;
  ctx.max_exponent = cfg.max_exponent;
  return ctx;
}

json timings_json(const Timings& t) {
  return {{"resultants_s", t.resultants_s}, {"basis_s", t.basis_s}, {"membership_s", t.membership_s}};
}

int cmd_resultants(const RunConfig& cfg, std::ostream& out) {
  const int d = require_degree(cfg, 1, kMaxSupportedDegree);
  StepBudget budget(cfg.budget);
  const auto start = Clock::now();
  ResultantFamily family{d, {}};
  if (d >= 2) family = casas_resultants(d, &budget, cfg.jobs);
  const double elapsed = seconds_since(start);

  if (cfg.format == Format::json) {
    json j = report_header("resultants", "resultant-family", d);
    j["verdict"] = "pass";
    j["exponents"] = json::array();
    j["timings"] = {{"resultants_s", elapsed}};
    j["budget_used"] = budget.used();
    json members = json::array();
    for (std::size_t i = 0; i < family.members.size(); ++i) {
      members.push_back({{"index", i + 1}, {"text", to_string(family.members[i])}, {"terms", terms_to_json(family.members[i])}});
    }
    j["family"] = members;
    print_json(out, j);
  } else {
    for (std::size_t i = 0; i < family.members.size(); ++i) out << 'R' << i + 1 << " = " << to_string(family.members[i]) << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const int d = require_degree(cfg, 2, kMaxSupportedDegree);
  StepBudget budget(cfg.budget);
  std::optional<BasisCache> cache;
  const ConjectureReport r = verify_conjecture(d, exact_context(cfg, budget, cache));
  const bool ok = r.verdict();

  if (cfg.format == Format::json) {
    json j = report_header("verify", "conjecture", d);
    j["order"] = r.order_tag;
    j["verdict"] = verdict_word(ok);
    json exps = json::array();
    for (std::size_t v = 0; v < r.radical_member.size(); ++v) {
      exps.push_back({{"variable", "a" + std::to_string(v + 1)},
                      {"radical_member", static_cast<bool>(r.radical_member[v])},
                      {"exponent", r.exponents[v] ? json(*r.exponents[v]) : json(nullptr)},
                      {"exponent_above_bound", static_cast<bool>(r.exponent_above_bound[v])},
                      {"pure_power", r.pure_power[v] ? json(*r.pure_power[v]) : json(nullptr)}});
    }
    j["exponents"] = exps;
    j["radical_ok"] = r.radical_ok();
    j["pure_power_ok"] = r.pure_power_ok();
    j["basis_size"] = r.basis_size;
    j["dimension"] = r.dimension;
    j["timings"] = timings_json(r.timings);
    j["budget_used"] = budget.used();
    print_json(out, j);
  } else {
    out << "conjecture check, degree " << d << ", order " << r.order_tag << '\n';
    for (std::size_t v = 0; v < r.radical_member.size(); ++v) {
      const std::string var = "a" + std::to_string(v + 1);
      out << "  " << var << ": " << (r.radical_member[v] ? "in the radical" : "NOT in the radical");
      if (r.exponents[v]) out << ", " << var << '^' << *r.exponents[v] << " in the ideal";
      if (r.exponent_above_bound[v]) out << ", exponent above " << cfg.max_exponent;
      if (r.pure_power[v]) {
        out << ", leading monomial " << var << '^' << *r.pure_power[v];
      } else {
        out << ", no pure-power leading monomial";
      }
      out << '\n';
    }
    out << "  radical membership: " << verdict_banner(r.radical_ok()) << '\n';
    out << "  pure-power leading monomials: " << verdict_banner(r.pure_power_ok()) << '\n';
    out << "  basis size " << r.basis_size << ", quotient dimension " << r.dimension << '\n';
    out << "verdict: " << verdict_banner(ok) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_theorem(const RunConfig& cfg, std::ostream& out) {
  const int d = require_degree(cfg, 2, kMaxSupportedDegree);
  StepBudget budget(cfg.budget);
  std::optional<BasisCache> cache;
  const TheoremReport r = verify_main_theorem(d, exact_context(cfg, budget, cache));
  const bool ok = r.verdict();

  if (cfg.format == Format::json) {
    json j = report_header("theorem", "main-theorem", d);
    j["order"] = r.order_tag;
    j["verdict"] = verdict_word(ok);
    j["exponents"] = json::array();
    json entries = json::array();
    json per_index = json::object();
    for (const auto& e : r.entries) {
      entries.push_back({{"index", e.index}, {"radical_member", e.member}});
      per_index[std::to_string(e.index)] = e.seconds;
    }
    j["entries"] = entries;
    j["skipped"] = r.skipped;
    j["timings"] = timings_json(r.timings);
    j["timings"]["per_index_s"] = per_index;
    j["budget_used"] = budget.used();
    print_json(out, j);
  } else {
    out << "main theorem check, degree " << d << ", order " << r.order_tag << '\n';
    for (int i : r.skipped) out << "  i=" << i << ": skipped (outside 1.." << d - 1 << ")\n";
    for (const auto& e : r.entries) {
      out << "  i=" << e.index << ": R" << e.index << (e.member ? " IS" : " is not")
          << " in the radical of the other resultants\n";
    }
    out << "verdict: " << verdict_banner(ok) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_regseq(const RunConfig& cfg, std::ostream& out) {
  const int d = require_degree(cfg, 2, kMaxSupportedDegree);
  StepBudget budget(cfg.budget);
  std::optional<BasisCache> cache;
  const ExactContext ctx = exact_context(cfg, budget, cache);

  std::vector<std::vector<int>> orderings;
  if (cfg.permutation.empty()) {
    std::vector<int> p(static_cast<std::size_t>(d - 1));
    std::iota(p.begin(), p.end(), 1);
    do orderings.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    orderings.push_back(cfg.permutation);
  }
  std::vector<RegularSequenceReport> reports;
  Timings total;
  for (const auto& p : orderings) {
    reports.push_back(check_regular_sequence(d, p, ctx));
    total.resultants_s += reports.back().timings.resultants_s;
    total.basis_s += reports.back().timings.basis_s;
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict(); });

  if (cfg.format == Format::json) {
    json j = report_header("regseq", "regular-sequence", d);
    j["order"] = reports.front().order_tag;
    j["verdict"] = verdict_word(ok);
    j["exponents"] = json::array();
    json runs = json::array();
    for (const auto& r : reports) {
      std::vector<int> expected;
      for (std::size_t k = 1; k <= r.dimensions.size(); ++k) expected.push_back(d - 1 - static_cast<int>(k));
      runs.push_back({{"permutation", r.permutation},
                      {"dimensions", r.dimensions},
                      {"expected", expected},
                      {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)}});
    }
    j["runs"] = runs;
    j["timings"] = timings_json(total);
    j["budget_used"] = budget.used();
    print_json(out, j);
  } else {
    out << "regular sequence check, degree " << d << ", order " << reports.front().order_tag << '\n';
    for (const auto& r : reports) {
      out << "  (";
      for (std::size_t k = 0; k < r.permutation.size(); ++k) out << (k ? ", " : "") << 'R' << r.permutation[k];
      out << "): dimensions (";
      for (std::size_t k = 0; k < r.dimensions.size(); ++k) out << (k ? ", " : "") << r.dimensions[k];
      out << ')';
      if (r.first_failure) out << ", first failure at prefix " << *r.first_failure;
      out << '\n';
    }
    out << "verdict: " << verdict_banner(ok) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

json chain_json(const ChainReport& c) {
  return {{"applicable", c.applicable},
          {"reason", c.reason},
          {"zero_multiplicity", c.zero_multiplicity},
          {"beta", c.beta},
          {"leading_alphas", c.leading_alphas},
          {"nested", c.nested},
          {"zero_alphas", c.zero_alphas},
          {"nested_chain", c.nested_chain},
          {"alpha_in_interval", c.alpha_in_interval},
          {"alpha_not_root", c.alpha_not_root},
          {"alpha_root_distance", c.alpha_root_distance},
          {"ok", c.ok()}};
}

int cmd_ace(const RunConfig& cfg, std::ostream& out) {
  AceSpec spec;
  AceCandidate cand;
  std::optional<AceSearchResult> search;
  SearchConfig sc;
  sc.seed = cfg.seed;
  sc.restarts = cfg.restarts;
  sc.jobs = cfg.jobs;
  sc.residual_target = cfg.residual_target;
  sc.gap_threshold = cfg.gap_threshold;
  sc.cluster_tol = cfg.cluster_tol;

  const auto start = Clock::now();
  if (cfg.input) {
    std::ifstream in(*cfg.input);
    if (!in) throw std::invalid_argument("cannot read " + cfg.input->string());
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("bad JSON input: ") + e.what());
    }
    std::tie(spec, cand) = candidate_from_json(j, cfg.cluster_tol);
  } else {
    const int d = require_degree(cfg, 4, kMaxSupportedDegree);
    if (!cfg.level) throw std::invalid_argument("--level is required");
    spec = AceSpec::with_unit_multiplicities(d, *cfg.level);
    search = find_almost_counterexample(spec, sc);
    cand = search->best;
  }
  const double elapsed = seconds_since(start);

  const bool converged = cand.residual < cfg.residual_target && cand.level_gap > cfg.gap_threshold;
  const LevelVerdict level = verify_level(cand, spec, cfg.verify_tol, cfg.gap_threshold);
  const bool chain_wanted = spec.unit_multiplicities() && spec.level >= spec.degree - 3;
  const ChainReport chain = verify_contradiction_chain(cand, spec, cfg.verify_tol, cfg.gap_threshold);
  const bool ok = converged && level.ok && (!chain_wanted || chain.ok());

  if (cfg.format.value_or(Format::json) == Format::json) {
    json j = report_header("ace", "almost-counterexample", spec.degree);
    j["level"] = spec.level;
    j["verdict"] = verdict_word(ok);
    j["exponents"] = json::array();
    j["candidate"] = candidate_to_json(cand, spec);
    j["converged"] = converged;
    j["tolerances"] = {{"residual_target", cfg.residual_target},
                       {"gap_threshold", cfg.gap_threshold},
                       {"verify_tol", cfg.verify_tol},
                       {"cluster_tol", cfg.cluster_tol}};
    if (search) j["search"] = {{"restarts", cfg.restarts}, {"restarts_run", search->restarts_run}};
    j["level_check"] = {{"ok", level.ok},
                        {"shared_root_gaps", level.shared_root_gaps},
                        {"level_gap", level.level_gap},
                        {"distinct_roots", level.distinct_roots}};
    j["chain"] = chain_json(chain);
    j["chain"]["required"] = chain_wanted;
    j["timings"] = {{"search_s", elapsed}};
    j["budget_used"] = 0;
    print_json(out, j);
  } else {
    out << "almost counterexample, degree " << spec.degree << ", level " << spec.level << '\n';
    out << std::setprecision(17);
    out << "  roots:";
    for (std::size_t k = 0; k < cand.profile.distinct(); ++k) {
      out << ' ' << cand.profile.roots()[k];
      if (cand.profile.multiplicities()[k] > 1) out << " (x" << cand.profile.multiplicities()[k] << ')';
    }
    out << std::setprecision(6) << '\n';
    out << "  residual " << cand.residual << ", level gap " << cand.level_gap << ", distinct roots "
        << level.distinct_roots << '\n';
    out << "  level check: " << verdict_banner(level.ok) << '\n';
    if (chain.applicable) {
      out << "  chain: m = " << chain.zero_multiplicity << ", beta = " << chain.beta << ", alpha_{m,1} = "
          << (chain.leading_alphas.empty() ? NAN : chain.leading_alphas.back()) << " (distance to roots "
          << chain.alpha_root_distance << "): " << verdict_banner(chain.ok()) << '\n';
    } else {
      out << "  chain: not applicable (" << chain.reason << ")\n";
    }
    out << "verdict: " << verdict_banner(ok) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_interlace(const RunConfig& cfg, std::ostream& out) {
  const int max_degree = cfg.degree.value_or(10);
  if (max_degree < 2 || max_degree > 16) throw std::invalid_argument("interlace degree bound must lie in 2..16");
  const auto start = Clock::now();
  const InterlaceSummary s = run_interlace_suite(cfg.count, cfg.seed, cfg.interlace_tol, kImagThreshold, max_degree);
  const double elapsed = seconds_since(start);
  const bool ok = s.ok();

  if (cfg.format == Format::json) {
    json j = report_header("interlace", "interlacing", max_degree);
    j["verdict"] = verdict_word(ok);
    j["exponents"] = json::array();
    j["count"] = cfg.count;
    j["seed"] = cfg.seed;
    j["tol"] = cfg.interlace_tol;
    j["passed"] = s.passed;
    j["with_repeats"] = s.with_repeats;
    j["worst_imag"] = s.worst_imag;
    json failing = json::array();
    for (std::size_t k = 0; k < s.cases.size(); ++k) {
      const auto& c = s.cases[k];
      if (c.interlacing_ok && c.max_imag < kImagThreshold) continue;
      failing.push_back({{"index", k}, {"roots", c.roots}, {"failures", c.failures}, {"max_imag", c.max_imag}});
    }
    j["failing"] = failing;
    j["timings"] = {{"suite_s", elapsed}};
    j["budget_used"] = 0;
    print_json(out, j);
  } else {
    out << "interlacing: " << s.passed << '/' << s.cases.size() << " pass (" << s.with_repeats
        << " with repeated roots), worst |Im| over Hasse derivatives " << s.worst_imag << '\n';
    for (std::size_t k = 0; k < s.cases.size(); ++k) {
      const auto& c = s.cases[k];
      if (c.interlacing_ok && c.max_imag < kImagThreshold) continue;
      out << "  case " << k << ": " << c.failures.size() << " interlacing failures, max |Im| " << c.max_imag << '\n';
    }
    out << "verdict: " << verdict_banner(ok) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// Raw flag values; unset means "fall through to env, file, default".
struct Flags {
  std::optional<int> degree, level;
  std::optional<std::string> order, cache_dir, format, config, input, perm, budget;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs, restarts, max_exponent;
  std::optional<std::size_t> count;
  std::optional<double> cluster_tol, residual_target, gap_threshold, tol;
  bool certificates = false;
  bool no_cache = false;
};

void add_shared_options(CLI::App& sub, Flags& f) {
  sub.add_option("--degree", f.degree, "Polynomial degree d");
  sub.add_option("--order", f.order, "Monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
  sub.add_option("--budget", f.budget, "Step budget (default 1e7)");
  sub.add_option("--jobs", f.jobs, "Parallel workers");
  sub.add_option("--cache-dir", f.cache_dir, "Basis cache directory");
  sub.add_flag("--no-cache", f.no_cache, "Disable the basis cache");
  sub.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub.add_flag("--certificates", f.certificates, "Track and verify explicit cofactor certificates");
  sub.add_option("--config", f.config, "Flat key = value configuration file");
  sub.add_option("--seed", f.seed, "Master seed");
  sub.add_option("--max-exponent", f.max_exponent, "Bound for the explicit radical exponent search");
}

RunConfig resolve(const Flags& f, const Environment& env) {
  RunConfig cfg;
  if (f.config) apply_config_file(cfg, *f.config);
  apply_environment(cfg, env);
  if (f.degree) cfg.degree = f.degree;
  if (f.level) cfg.level = f.level;
  if (f.order) cfg.order = parse_order_kind(*f.order);
  if (f.budget) cfg.budget = parse_budget(*f.budget);
  if (f.jobs) cfg.jobs = *f.jobs;
  if (f.cache_dir) cfg.cache_dir = *f.cache_dir;
  if (f.no_cache) cfg.use_cache = false;
  if (f.format) cfg.format = parse_format(*f.format);
  if (f.certificates) cfg.certificates = true;
  if (f.seed) cfg.seed = *f.seed;
  if (f.max_exponent) cfg.max_exponent = *f.max_exponent;
  if (f.restarts) cfg.restarts = *f.restarts;
  if (f.count) cfg.count = *f.count;
  if (f.perm) cfg.permutation = parse_permutation(*f.perm);
  if (f.input) cfg.input = *f.input;
  if (f.cluster_tol) cfg.cluster_tol = *f.cluster_tol;
  if (f.residual_target) cfg.residual_target = *f.residual_target;
  if (f.gap_threshold) cfg.gap_threshold = *f.gap_threshold;
  if (f.tol) {
    cfg.verify_tol = *f.tol;
    cfg.interlace_tol = *f.tol;
  }
  cfg.validate();
  return cfg;
}

}  // namespace

void RunConfig::validate() const {
  for (double t : {cluster_tol, residual_target, gap_threshold, verify_tol, interlace_tol}) {
    if (!(t >= 0) || !std::isfinite(t)) throw std::invalid_argument("tolerances must be finite and non-negative");
  }
  if (jobs == 0) throw std::invalid_argument("jobs must be at least 1");
  if (restarts == 0) throw std::invalid_argument("restarts must be at least 1");
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  if (max_exponent == 0) throw std::invalid_argument("max_exponent must be positive");
}

std::uint64_t parse_budget(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return parse_number<std::uint64_t>("budget", t);
  }
  const double v = parse_number<double>("budget", t);
  if (!(v >= 1) || v > 1.8e19 || std::floor(v) != v) throw std::invalid_argument("bad budget '" + text + "'");
  return static_cast<std::uint64_t>(v);
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "order") {
    cfg.order = parse_order_kind(value);
  } else if (key == "budget") {
    cfg.budget = parse_budget(value);
  } else if (key == "cache_dir") {
    cfg.cache_dir = value;
  } else if (key == "cache") {
    cfg.use_cache = parse_bool(key, value);
  } else if (key == "cluster_tol") {
    cfg.cluster_tol = parse_number<double>(key, value);
  } else if (key == "residual_target") {
    cfg.residual_target = parse_number<double>(key, value);
  } else if (key == "gap_threshold") {
    cfg.gap_threshold = parse_number<double>(key, value);
  } else if (key == "verify_tol") {
    cfg.verify_tol = parse_number<double>(key, value);
  } else if (key == "interlace_tol") {
    cfg.interlace_tol = parse_number<double>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "jobs") {
    cfg.jobs = parse_number<unsigned>(key, value);
  } else if (key == "restarts") {
    cfg.restarts = parse_number<unsigned>(key, value);
  } else if (key == "max_exponent") {
    cfg.max_exponent = parse_number<unsigned>(key, value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "certificates") {
    cfg.certificates = parse_bool(key, value);
  } else {
    throw std::invalid_argument("unknown setting '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot read config file " + file.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(file.string() + ":" + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_environment(RunConfig& cfg, const Environment& env) {
  if (auto it = env.find("ALVERO_CACHE_DIR"); it != env.end() && !it->second.empty()) cfg.cache_dir = it->second;
  if (auto it = env.find("ALVERO_BUDGET"); it != env.end() && !it->second.empty()) cfg.budget = parse_budget(it->second);
}

Environment process_environment() {
  Environment env;
  for (const char* name : {"ALVERO_CACHE_DIR", "ALVERO_BUDGET"}) {
    if (const char* v = std::getenv(name)) env[name] = v;
  }
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Casas-Alvero verification toolkit", "alvero"};
  app.require_subcommand(1);
  Flags flags;

  auto* resultants = app.add_subcommand("resultants", "Print R_i = Res(f, H_i(f)) for the generic degree-d f");
  auto* verify = app.add_subcommand("verify", "Check that every a_j lies in the radical of (R_1, ..., R_{d-1})");
  auto* theorem = app.add_subcommand("theorem", "Check R_i is outside the radical of the others, i in {d-3, d-2, d-1}");
  auto* ace = app.add_subcommand("ace", "Search for and verify an almost counterexample of a given level");
  auto* interlace = app.add_subcommand("interlace", "Interlacing property run over a seeded real-rooted corpus");
  auto* regseq = app.add_subcommand("regseq", "Quotient dimensions of prefixes of the resultant family");
  for (auto* sub : {resultants, verify, theorem, ace, interlace, regseq}) add_shared_options(*sub, flags);

  ace->add_option("--level", flags.level, "Level i of the almost counterexample");
  ace->add_option("--restarts", flags.restarts, "Search restarts");
  ace->add_option("--input", flags.input, "Re-verify a candidate saved as JSON instead of searching");
  ace->add_option("--cluster-tol", flags.cluster_tol, "Root clustering tolerance");
  ace->add_option("--residual-target", flags.residual_target, "Residual below which the search succeeds");
  ace->add_option("--gap-threshold", flags.gap_threshold, "Minimum level gap");
  ace->add_option("--tol", flags.tol, "Tolerance for shared roots in the level and chain checks");
  interlace->add_option("--count", flags.count, "Corpus size");
  interlace->add_option("--tol", flags.tol, "Interlacing tolerance");
  regseq->add_option("--perm", flags.perm, "Ordering of the resultants, e.g. 2,1 (default: every ordering)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    RunConfig cfg = resolve(flags, env);
    if (resultants->parsed()) return cmd_resultants(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (theorem->parsed()) return cmd_theorem(cfg, out);
    if (ace->parsed()) return cmd_ace(cfg, out);
    if (interlace->parsed()) return cmd_interlace(cfg, out);
    return cmd_regseq(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "alvero: " << e.what() << "; raise it with --budget or ALVERO_BUDGET\n";
    return kBudgetExhausted;
  } catch (const std::invalid_argument& e) {
    err << "alvero: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::out_of_range& e) {
    err << "alvero: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::exception& e) {
    err << "alvero: error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace alvero::cli
