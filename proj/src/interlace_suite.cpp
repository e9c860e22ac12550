#include "alvero/interlace_suite.hpp"

#include <algorithm>
#include <random>

namespace alvero {

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<std::vector<double>> interlacing_corpus(std::size_t count, std::uint64_t seed, int max_degree) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> corpus;
  corpus.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const int span = std::max(1, max_degree - 1);
    const int degree = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
    std::vector<double> roots;
    for (int i = 0; i < degree; ++i) roots.push_back(unit_draw(rng));
    if (n % 3 == 2) {
      // Copy one root over a random other slot, sometimes twice, sometimes
      // onto an endpoint of [0, 1].
      const std::size_t repeats = 1 + rng() % 2;
      for (std::size_t r = 0; r < repeats; ++r) {
        const std::size_t src = rng() % roots.size();
        std::size_t dst = rng() % roots.size();
        if (dst == src) dst = (dst + 1) % roots.size();
        roots[dst] = roots[src];
      }
      const std::uint64_t pick = rng() % 4;
      if (pick == 0) roots[0] = roots[1] = 0.0;
      if (pick == 1) roots[0] = roots[1] = 1.0;
    }
    std::sort(roots.begin(), roots.end());
    corpus.push_back(std::move(roots));
  }
  return corpus;
}

InterlaceSummary run_interlace_suite(std::size_t count, std::uint64_t seed, double tol, double imag_threshold,
                                     int max_degree) {
  InterlaceSummary summary;
  for (auto& roots : interlacing_corpus(count, seed, max_degree)) {
    InterlaceCase c;
    c.roots = std::move(roots);
    c.has_repeat = std::adjacent_find(c.roots.begin(), c.roots.end()) != c.roots.end();
    const RootProfile profile = RootProfile::from_roots(c.roots, 0.0);
    const InterlacingReport report = check_interlacing(profile, tol);
    c.interlacing_ok = report.ok();
    c.failures = report.failures;
    c.max_imag = max_hasse_imaginary(profile);
    if (c.interlacing_ok && c.max_imag < imag_threshold) ++summary.passed;
    if (c.has_repeat) ++summary.with_repeats;
    summary.worst_imag = std::max(summary.worst_imag, c.max_imag);
    summary.cases.push_back(std::move(c));
  }
  return summary;
}

}  // namespace alvero
