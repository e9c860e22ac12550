#include "alvero/basis_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "alvero/poly_text.hpp"

namespace alvero {

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t set_hash(const std::vector<MultiPoly>& gens) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& g : gens) {
    h ^= polynomial_hash(g);
    h *= 1099511628211ull;
  }
  return h;
}

std::string file_safe(std::string tag) {
  for (char& c : tag) {
    if (c == ':' || c == ',') c = '_';
  }
  return tag;
}

}  // namespace

std::uint64_t polynomial_hash(const MultiPoly& p) {
  std::uint64_t h = 1469598103934665603ull;
  const std::string text = std::to_string(p.nvars()) + "|" + to_string(p);
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path BasisCache::path_for(int degree, const std::vector<MultiPoly>& gens,
                                           const MonomialOrder& order) const {
  return dir_ / ("d" + std::to_string(degree) + "-" + file_safe(order.tag()) + "-" + hex(set_hash(gens)) + ".gb");
}

std::optional<GroebnerBasis> BasisCache::load(int degree, const std::vector<MultiPoly>& gens,
                                              const MonomialOrder& order) const {
  std::ifstream in(path_for(degree, gens, order));
  if (!in) return std::nullopt;
  try {
    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "alvero-basis-cache" || version != kFormatVersion) return std::nullopt;
    int d = 0;
    if (!(in >> word >> d) || word != "degree" || d != degree) return std::nullopt;
    std::string tag;
    if (!(in >> word >> tag) || word != "order" || tag != order.tag()) return std::nullopt;
    std::size_t nvars = 0;
    if (!(in >> word >> nvars) || word != "nvars" || nvars != order.nvars()) return std::nullopt;
    std::size_t count = 0;
    if (!(in >> word >> count) || word != "generators" || count != gens.size()) return std::nullopt;
    for (const auto& g : gens) {
      if (!(in >> word) || word != hex(polynomial_hash(g))) return std::nullopt;
    }
    if (!(in >> word >> count) || word != "basis" || count == 0) return std::nullopt;
    std::string line;
    std::getline(in, line);
    std::vector<MultiPoly> basis;
    for (std::size_t k = 0; k < count; ++k) {
      if (!std::getline(in, line)) return std::nullopt;
      basis.push_back(parse_multipoly(line, nvars));
    }
    GroebnerBasis gb(gens, std::move(basis), order);
    for (const auto& g : gens) {
      if (!normal_form(g, gb).is_zero()) return std::nullopt;
    }
    return gb;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void BasisCache::store(int degree, const GroebnerBasis& basis) {
  const auto target = path_for(degree, basis.generators(), basis.order());
  std::lock_guard lock(key_mutex(target.string()));
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::this_thread::get_id();
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "alvero-basis-cache " << kFormatVersion << "\n";
    out << "degree " << degree << "\n";
    out << "order " << basis.order().tag() << "\n";
    out << "nvars " << basis.nvars() << "\n";
    out << "generators " << basis.generators().size() << "\n";
    for (const auto& g : basis.generators()) out << hex(polynomial_hash(g)) << "\n";
    out << "basis " << basis.basis().size() << "\n";
    for (const auto& b : basis.basis()) out << to_string(b) << "\n";
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

GroebnerBasis BasisCache::get_or_compute(int degree, const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                                         const GroebnerOptions& options) {
  if (!options.track_cofactors) {
    if (auto hit = load(degree, gens, order)) {
      std::lock_guard lock(table_mutex_);
      ++hits_;
      return std::move(*hit);
    }
  }
  GroebnerBasis gb = buchberger(gens, order, options);
  store(degree, gb);
  return gb;
}

std::mutex& BasisCache::key_mutex(const std::string& key) {
  std::lock_guard lock(table_mutex_);
  auto& slot = key_mutexes_[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

GroebnerBasis compute_basis(BasisCache* cache, int degree, const std::vector<MultiPoly>& gens,
                            const MonomialOrder& order, const GroebnerOptions& options) {
  if (cache == nullptr) return buchberger(gens, order, options);
  return cache->get_or_compute(degree, gens, order, options);
}

}  // namespace alvero
