#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "alvero/realroots.hpp"

namespace alvero {

/// Seeded corpus of real-rooted polynomials given by their roots in [0, 1].
/// Degrees run over 2..max_degree; every third entry carries forced
/// repeated roots, and some of those put a repeat at 0 or 1.
std::vector<std::vector<double>> interlacing_corpus(std::size_t count, std::uint64_t seed, int max_degree = 10);

struct InterlaceCase {
  std::vector<double> roots;
  bool has_repeat = false;
  bool interlacing_ok = false;
  std::vector<std::size_t> failures;
  double max_imag = 0;  // over H_1 .. H_{d-1}
};

struct InterlaceSummary {
  std::vector<InterlaceCase> cases;
  std::size_t passed = 0;
  std::size_t with_repeats = 0;
  double worst_imag = 0;
  bool ok() const { return passed == cases.size(); }
};

/// Interlacing at tol plus real-rootedness of every Hasse derivative
/// (largest relative imaginary part below imag_threshold) per corpus entry.
InterlaceSummary run_interlace_suite(std::size_t count, std::uint64_t seed, double tol = 1e-8,
                                     double imag_threshold = kImagThreshold, int max_degree = 10);

}  // namespace alvero
