#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "alvero/groebner.hpp"

namespace alvero {

/// Stable 64-bit FNV-1a hash of a polynomial's canonical text form.
std::uint64_t polynomial_hash(const MultiPoly& p);

/// On-disk store of reduced Gröbner bases keyed by (degree, generator set,
/// order). One text file per key:
///
///     alvero-basis-cache <version>
///     degree <d>
///     order <tag>
///     nvars <n>
///     generators <count>
///     <hex hash per line>
///     basis <count>
///     <polynomial per line, canonical text format>
///
/// Writers for one key are serialized inside the process and publish by
/// atomic rename, so concurrent readers see either nothing or a whole file.
class BasisCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit BasisCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const noexcept { return dir_; }

  std::filesystem::path path_for(int degree, const std::vector<MultiPoly>& gens, const MonomialOrder& order) const;

  /// Cached basis, or nullopt when absent, stale or unreadable. A loaded
  /// basis is checked to contain every generator in its ideal.
  std::optional<GroebnerBasis> load(int degree, const std::vector<MultiPoly>& gens, const MonomialOrder& order) const;

  void store(int degree, const GroebnerBasis& basis);

  /// load() or compute with buchberger() and store.
  GroebnerBasis get_or_compute(int degree, const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                               const GroebnerOptions& options);

  std::uint64_t hits() const noexcept { return hits_; }

 private:
  std::mutex& key_mutex(const std::string& key);

  std::filesystem::path dir_;
  std::mutex table_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> key_mutexes_;
  std::uint64_t hits_ = 0;
};

/// Computes a basis through the cache when one is given.
GroebnerBasis compute_basis(BasisCache* cache, int degree, const std::vector<MultiPoly>& gens,
                            const MonomialOrder& order, const GroebnerOptions& options);

}  // namespace alvero
