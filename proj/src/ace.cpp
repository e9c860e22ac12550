#include "alvero/ace.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "alvero/nelder_mead.hpp"

namespace alvero {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::vector<double>> hasse_tower(const std::vector<double>& roots) {
  std::vector<std::vector<double>> tower{roots};
  for (std::size_t k = 1; k < roots.size(); ++k) tower.push_back(derivative_roots(tower.back()));
  return tower;
}

// Index of the root nearest x; the smallest index wins ties.
std::size_t nearest(const std::vector<double>& roots, double x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - x) < std::abs(roots[best] - x)) best = i;
  }
  return best;
}

double min_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : a) {
    for (double y : b) best = std::min(best, std::abs(x - y));
  }
  return best;
}

// Root vector with 0 and 1 pinned at the ends and interior coordinates
// clamped into [0, 1] and sorted.
std::vector<double> roots_from_interior(const std::vector<double>& u) {
  std::vector<double> r{0.0};
  for (double x : u) r.push_back(std::clamp(x, 0.0, 1.0));
  r.push_back(1.0);
  std::sort(r.begin() + 1, r.end() - 1);
  return r;
}

// Merges neighbours closer than tol; clusters holding an exact 0 or 1
// collapse onto it, the others onto their mean.
std::vector<double> snap_clusters(const std::vector<double>& roots, double tol) {
  std::vector<double> out(roots.size());
  std::size_t start = 0;
  for (std::size_t k = 1; k <= roots.size(); ++k) {
    if (k < roots.size() && roots[k] - roots[k - 1] <= tol) continue;
    double center = 0;
    for (std::size_t i = start; i < k; ++i) center += roots[i];
    center /= static_cast<double>(k - start);
    if (roots[start] == 0.0) center = 0.0;
    if (roots[k - 1] == 1.0) center = 1.0;
    for (std::size_t i = start; i < k; ++i) out[i] = center;
    start = k;
  }
  return out;
}

struct Scored {
  std::vector<double> roots;
  AceEvaluation eval;
};

bool better(const AceEvaluation& a, const AceEvaluation& b, double gap_threshold) {
  const bool ga = a.level_gap > gap_threshold, gb = b.level_gap > gap_threshold;
  if (ga != gb) return ga;
  return a.residual < b.residual;
}

// Damped fixed-point step: move the root nearest each prescribed alpha
// towards it. The pinned endpoints never move.
Scored polish(std::vector<double> roots, const AceSpec& spec, const SearchConfig& cfg) {
  Scored best{roots, evaluate_ace(roots, spec)};
  const std::size_t last = roots.size() - 1;
  for (unsigned it = 0; it < cfg.polish_iterations && best.eval.residual > 0; ++it) {
    const AceEvaluation ev = evaluate_ace(roots, spec);
    for (std::size_t j = 0; j < spec.pairs.size(); ++j) {
      const double a = ev.alphas[j];
      std::size_t n = nearest(roots, a);
      if (n == 0 || n == last) {
        // Prefer an interior root sitting at the same distance.
        const double dist = std::abs(roots[n] - a);
        std::size_t alt = n;
        for (std::size_t i = 1; i < last; ++i) {
          if (std::abs(roots[i] - a) == dist) {
            alt = i;
            break;
          }
        }
        if (alt == n) continue;
        n = alt;
      }
      roots[n] = (1 - cfg.polish_damping) * roots[n] + cfg.polish_damping * a;
    }
    std::sort(roots.begin() + 1, roots.end() - 1);
    AceEvaluation now = evaluate_ace(roots, spec);
    if (better(now, best.eval, cfg.gap_threshold)) best = {roots, std::move(now)};
  }
  return best;
}

struct RestartOutcome {
  Scored scored;
  std::uint64_t evaluations = 0;
};

RestartOutcome run_restart(const AceSpec& spec, const SearchConfig& cfg, std::uint64_t restart_seed) {
  std::mt19937_64 rng(restart_seed);
  const std::size_t n = static_cast<std::size_t>(spec.degree - 2);
  std::vector<double> start(n);
  for (auto& x : start) x = unit_draw(rng);
  std::sort(start.begin(), start.end());

  auto objective = [&](const std::vector<double>& u) {
    double penalty = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      penalty += std::pow(std::max(0.0, -u[j]), 2) + std::pow(std::max(0.0, u[j] - 1), 2);
      if (j + 1 < u.size()) penalty += std::pow(std::max(0.0, u[j] - u[j + 1]), 2);
    }
    return evaluate_ace(roots_from_interior(u), spec).residual + 10 * penalty;
  };
  NelderMeadOptions nm;
  nm.max_evaluations = cfg.max_evaluations;
  nm.initial_step = 0.15;
  nm.target = 1e-30;
  const NelderMeadResult found = nelder_mead(objective, start, nm);

  Scored best = polish(roots_from_interior(found.point), spec, cfg);
  const std::vector<double> base = best.roots;
  for (double tol = 1e-2; tol >= 1e-9; tol /= 10) {
    Scored snapped = polish(snap_clusters(base, tol), spec, cfg);
    if (better(snapped.eval, best.eval, cfg.gap_threshold)) best = std::move(snapped);
  }
  return {std::move(best), found.evaluations};
}

bool successful(const AceEvaluation& e, const SearchConfig& cfg) {
  return e.residual < cfg.residual_target && e.level_gap > cfg.gap_threshold;
}

}  // namespace

AceSpec AceSpec::with_unit_multiplicities(int degree, int level) {
  if (degree < 2 || level < 1 || level > degree - 1) {
    throw std::invalid_argument("level " + std::to_string(level) + " outside 1.." + std::to_string(degree - 1));
  }
  AceSpec spec{degree, level, {}};
  for (int k = 1; k <= degree - 1; ++k) {
    if (k != level) spec.pairs.emplace_back(k, 1);
  }
  return spec;
}

void AceSpec::validate() const {
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
  if (level < 1 || level > degree - 1) {
    throw std::invalid_argument("level " + std::to_string(level) + " outside 1.." + std::to_string(degree - 1));
  }
  if (pairs.size() != static_cast<std::size_t>(degree - 2)) throw std::invalid_argument("need exactly d-2 pairs");
  int expected = 1;
  for (const auto& [k, m] : pairs) {
    if (expected == level) ++expected;
    if (k != expected) throw std::invalid_argument("pairs must enumerate 1..d-1 without the level, increasingly");
    if (m < 1 || m > degree - k) throw std::invalid_argument("pair multiplicity outside 1..d-k");
    ++expected;
  }
}

bool AceSpec::unit_multiplicities() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.second == 1; });
}

AceEvaluation evaluate_ace(const std::vector<double>& roots, const AceSpec& spec) {
  if (roots.size() != static_cast<std::size_t>(spec.degree)) throw std::invalid_argument("root count differs from degree");
  const auto tower = hasse_tower(roots);
  AceEvaluation ev;
  for (const auto& [k, m] : spec.pairs) {
    const double a = tower[static_cast<std::size_t>(k)][static_cast<std::size_t>(m - 1)];
    const double gap = std::abs(a - roots[nearest(roots, a)]);
    ev.alphas.push_back(a);
    ev.per_pair_gaps.push_back(gap);
    ev.residual += gap * gap;
  }
  ev.level_gap = min_distance(tower[static_cast<std::size_t>(spec.level)], roots);
  return ev;
}

AceCandidate make_candidate(std::vector<double> roots, const AceSpec& spec, double cluster_tol) {
  std::sort(roots.begin(), roots.end());
  AceCandidate c;
  c.profile = RootProfile::from_roots(snap_clusters(roots, cluster_tol), cluster_tol);
  c.roots = c.profile.expanded();
  const AceEvaluation ev = evaluate_ace(c.roots, spec);
  c.residual = ev.residual;
  c.per_pair_gaps = ev.per_pair_gaps;
  c.level_gap = ev.level_gap;
  return c;
}

AceSearchResult find_almost_counterexample(const AceSpec& spec, const SearchConfig& config) {
  spec.validate();
  if (spec.degree <= 3) throw std::invalid_argument("almost-counterexample search needs degree at least 4");
  if (config.restarts == 0) throw std::invalid_argument("search needs at least one restart");
  const unsigned jobs = std::max(1u, config.jobs);

  std::vector<RestartOutcome> outcomes;
  std::optional<std::size_t> first_success;
  for (unsigned start = 0; start < config.restarts && !first_success; start += jobs) {
    const unsigned stop = std::min(config.restarts, start + jobs);
    std::vector<std::future<RestartOutcome>> batch;
    for (unsigned k = start; k < stop; ++k) {
      const std::uint64_t seed = splitmix64(config.seed ^ (0x632be59bd9b4e019ull * (k + 1)));
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_restart,
                                 std::cref(spec), std::cref(config), seed));
    }
    for (auto& f : batch) outcomes.push_back(f.get());
    for (std::size_t k = start; k < outcomes.size(); ++k) {
      if (successful(outcomes[k].scored.eval, config)) {
        first_success = k;
        break;
      }
    }
  }
  const std::size_t considered = first_success ? *first_success + 1 : outcomes.size();
  std::size_t best = 0;
  std::uint64_t evaluations = 0;
  for (std::size_t k = 0; k < considered; ++k) {
    evaluations += outcomes[k].evaluations;
    if (better(outcomes[k].scored.eval, outcomes[best].scored.eval, config.gap_threshold)) best = k;
  }

  AceSearchResult result;
  result.best = make_candidate(outcomes[best].scored.roots, spec, config.cluster_tol);
  result.best.seed = config.seed;
  result.best.iterations = evaluations;
  result.restarts_run = static_cast<unsigned>(considered);
  result.success = result.best.residual < config.residual_target && result.best.level_gap > config.gap_threshold;
  return result;
}

LevelVerdict verify_level(const AceCandidate& candidate, const AceSpec& spec, double tol, double gap_threshold) {
  spec.validate();
  LevelVerdict v;
  const auto& roots = candidate.roots;
  if (roots.size() != static_cast<std::size_t>(spec.degree)) return v;
  const auto tower = hasse_tower(roots);
  bool shared = true;
  for (int j = 1; j < spec.degree; ++j) {
    if (j == spec.level) continue;
    const double gap = min_distance(tower[static_cast<std::size_t>(j)], roots);
    v.shared_root_gaps.push_back(gap);
    shared = shared && gap <= tol;
  }
  v.level_gap = min_distance(tower[static_cast<std::size_t>(spec.level)], roots);
  v.distinct_roots = RootProfile::from_roots(roots, candidate.profile.cluster_tol()).distinct();
  v.ok = shared && v.level_gap > gap_threshold && v.distinct_roots >= 2;
  return v;
}

ChainReport verify_contradiction_chain(const AceCandidate& candidate, const AceSpec& spec, double tol,
                                       double gap_threshold) {
  ChainReport r;
  spec.validate();
  const int d = spec.degree;
  if (!spec.unit_multiplicities()) {
    r.reason = "pairs must all have m_j = 1";
    return r;
  }
  if (spec.level < d - 3) {
    r.reason = "level must be d-3, d-2 or d-1";
    return r;
  }
  if (!verify_level(candidate, spec, tol, gap_threshold).ok) {
    r.reason = "candidate is not an almost counterexample of this level";
    return r;
  }
  const RootProfile& p = candidate.profile;
  if (p.distinct() < 2 || std::abs(p.roots()[0]) > tol) {
    r.reason = "smallest root must be 0 with a positive root above it";
    return r;
  }
  r.applicable = true;
  const unsigned m = p.multiplicities()[0];
  r.zero_multiplicity = m;
  r.beta = p.roots()[1];

  const auto tower = hasse_tower(p.expanded());
  for (unsigned l = 1; l <= m && l < tower.size(); ++l) r.leading_alphas.push_back(tower[l].front());
  r.zero_alphas = true;
  for (unsigned l = 1; l + 1 <= m; ++l) r.zero_alphas = r.zero_alphas && std::abs(r.leading_alphas[l - 1]) <= tol;

  // beta^{(l)}: first root of H_l(f) above 0.
  r.nested_chain = r.beta > tol;
  double upper = r.beta;
  for (unsigned l = 1; l + 1 <= m; ++l) {
    const auto& hl = tower[l];
    auto it = std::find_if(hl.begin(), hl.end(), [&](double x) { return x > tol; });
    const double b = it == hl.end() ? std::numeric_limits<double>::quiet_NaN() : *it;
    r.nested.push_back(b);
    r.nested_chain = r.nested_chain && b > tol && b < upper;
    if (b == b) upper = b;
  }

  if (m < tower.size()) {
    const double a = tower[m].front();
    r.alpha_in_interval = a > tol && a < upper;
    r.alpha_root_distance = min_distance({a}, p.expanded());
    r.alpha_not_root = r.alpha_root_distance > tol;
  }
  return r;
}

}  // namespace alvero
