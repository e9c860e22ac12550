#include "alvero/conjecture.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace alvero {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_degree(int degree, int lowest) {
  if (degree < lowest || degree > kMaxSupportedDegree) {
    throw std::invalid_argument("degree " + std::to_string(degree) + " outside " + std::to_string(lowest) + ".." +
                                std::to_string(kMaxSupportedDegree));
  }
}

// Rabinowitsch test through the cache: is p in the radical of (gens)?
bool radical_member(int degree, const MultiPoly& p, const std::vector<MultiPoly>& gens, const ExactContext& ctx) {
  if (gens.empty()) return p.is_zero();  // zero ideal is radical
  GroebnerOptions opts;
  opts.budget = ctx.budget;
  const auto rab = rabinowitsch_generators(p, gens);
  const MonomialOrder order = rabinowitsch_order(MonomialOrder(ctx.order, p.nvars()));
  return compute_basis(ctx.cache, degree, rab, order, opts).is_unit();
}

template <typename Fn>
auto run_batched(std::size_t count, unsigned jobs, Fn fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out;
  out.reserve(count);
  if (jobs <= 1) {
    for (std::size_t k = 0; k < count; ++k) out.push_back(fn(k));
    return out;
  }
  for (std::size_t start = 0; start < count; start += jobs) {
    std::vector<std::future<R>> batch;
    for (std::size_t k = start; k < count && k < start + jobs; ++k) batch.push_back(std::async(std::launch::async, fn, k));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace

bool ConjectureReport::radical_ok() const {
  return !radical_member.empty() && std::all_of(radical_member.begin(), radical_member.end(), [](bool b) { return b; });
}

bool ConjectureReport::pure_power_ok() const {
  return !pure_power.empty() && std::all_of(pure_power.begin(), pure_power.end(), [](const auto& e) { return e.has_value(); });
}

ConjectureReport verify_conjecture(int degree, const ExactContext& ctx) {
  check_degree(degree, 2);
  ConjectureReport report;
  report.degree = degree;
  const auto nvars = static_cast<std::size_t>(degree - 1);
  const MonomialOrder order(ctx.order, nvars);
  report.order_tag = order.tag();

  auto start = Clock::now();
  const ResultantFamily family = casas_resultants(degree, ctx.budget, ctx.jobs);
  report.timings.resultants_s = seconds_since(start);

  start = Clock::now();
  GroebnerOptions opts;
  opts.budget = ctx.budget;
  opts.track_cofactors = ctx.certificates;
  const GroebnerBasis basis = ctx.certificates ? buchberger(family.members, order, opts)
                                               : compute_basis(ctx.cache, degree, family.members, order, opts);
  report.basis_size = basis.basis().size();
  report.dimension = krull_dimension(basis);
  report.pure_power.assign(nvars, std::nullopt);
  for (std::size_t k = 0; k < basis.basis().size(); ++k) {
    const Monomial& lm = basis.leading_monomial(k);
    const int v = lm.pure_power_variable();
    if (v < 0) continue;
    auto& slot = report.pure_power[static_cast<std::size_t>(v)];
    if (!slot || lm.total_degree() < *slot) slot = lm.total_degree();
  }
  report.timings.basis_s = seconds_since(start);

  start = Clock::now();
  const auto verdicts = run_batched(nvars, ctx.jobs, [&](std::size_t j) {
    return radical_member(degree, MultiPoly::variable(nvars, j), family.members, ctx);
  });
  report.radical_member.assign(verdicts.begin(), verdicts.end());
  for (std::size_t j = 0; j < nvars; ++j) {
    std::optional<unsigned> n;
    if (report.radical_member[j]) n = radical_exponent(MultiPoly::variable(nvars, j), basis, ctx.max_exponent, ctx.budget);
    if (n && ctx.certificates) {
      // Throws if the witness does not re-verify.
      ideal_membership(MultiPoly::variable(nvars, j).pow(*n), basis, true, ctx.budget);
    }
    report.exponents.push_back(n);
    report.exponent_above_bound.push_back(report.radical_member[j] && !n);
  }
  report.timings.membership_s = seconds_since(start);
  return report;
}

bool TheoremReport::verdict() const {
  return std::none_of(entries.begin(), entries.end(), [](const TheoremEntry& e) { return e.member; });
}

TheoremReport verify_main_theorem(int degree, const ExactContext& ctx) {
  check_degree(degree, 2);
  TheoremReport report;
  report.degree = degree;
  report.order_tag = MonomialOrder(ctx.order, static_cast<std::size_t>(degree)).tag();

  auto start = Clock::now();
  const ResultantFamily family = casas_resultants(degree, ctx.budget, ctx.jobs);
  report.timings.resultants_s = seconds_since(start);

  std::vector<int> indices;
  for (int i = degree - 3; i <= degree - 1; ++i) {
    if (i >= 1) {
      indices.push_back(i);
    } else {
      report.skipped.push_back(i);
    }
  }

  start = Clock::now();
  report.entries = run_batched(indices.size(), ctx.jobs, [&](std::size_t k) {
    const int i = indices[k];
    const auto t0 = Clock::now();
    std::vector<MultiPoly> others;
    for (int j = 1; j < degree; ++j) {
      if (j != i) others.push_back(family.members[static_cast<std::size_t>(j - 1)]);
    }
    TheoremEntry e;
    e.index = i;
    e.member = radical_member(degree, family.members[static_cast<std::size_t>(i - 1)], others, ctx);
    e.seconds = seconds_since(t0);
    return e;
  });
  report.timings.membership_s = seconds_since(start);
  return report;
}

RegularSequenceReport check_regular_sequence(int degree, std::vector<int> permutation, const ExactContext& ctx) {
  check_degree(degree, 2);
  const int n = degree - 1;
  if (permutation.empty()) {
    for (int i = 1; i <= n; ++i) permutation.push_back(i);
  }
  std::vector<int> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted.size() != static_cast<std::size_t>(n) || sorted[static_cast<std::size_t>(i)] != i + 1) {
      throw std::invalid_argument("permutation must list 1.." + std::to_string(n) + " exactly once");
    }
  }
  RegularSequenceReport report;
  report.degree = degree;
  report.permutation = permutation;
  const MonomialOrder order(ctx.order, static_cast<std::size_t>(n));
  report.order_tag = order.tag();

  auto start = Clock::now();
  const ResultantFamily family = casas_resultants(degree, ctx.budget, ctx.jobs);
  report.timings.resultants_s = seconds_since(start);

  start = Clock::now();
  GroebnerOptions opts;
  opts.budget = ctx.budget;
  std::vector<MultiPoly> prefix;
  for (std::size_t k = 0; k < permutation.size(); ++k) {
    prefix.push_back(family.members[static_cast<std::size_t>(permutation[k] - 1)]);
    const GroebnerBasis gb = compute_basis(ctx.cache, degree, prefix, order, opts);
    const int dim = krull_dimension(gb);
    report.dimensions.push_back(dim);
    if (dim != n - static_cast<int>(k + 1) && !report.first_failure) report.first_failure = k + 1;
  }
  report.timings.basis_s = seconds_since(start);
  return report;
}

}  // namespace alvero
