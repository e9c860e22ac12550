#include "alvero/membership.hpp"

#include <stdexcept>

namespace alvero {

namespace {

void verify_witness(const MultiPoly& p, const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& cofactors) {
  MultiPoly sum(p.nvars());
  for (std::size_t k = 0; k < gens.size(); ++k) sum += cofactors[k] * gens[k];
  if (sum != p) throw std::logic_error("membership witness failed exact re-verification");
}

}  // namespace

MembershipCertificate ideal_membership(const MultiPoly& p, const GroebnerBasis& basis, bool certificates,
                                       StepBudget* budget) {
  MembershipCertificate cert;
  if (!certificates) {
    cert.verdict = normal_form(p, basis, budget).is_zero();
    return cert;
  }
  if (!basis.cofactors()) throw std::invalid_argument("certificates need a basis with tracked cofactors");
  Division div = divide(p, basis, budget);
  cert.verdict = div.remainder.is_zero();
  if (!cert.verdict) return cert;
  const auto& gens = basis.generators();
  const auto& basis_cof = *basis.cofactors();
  cert.cofactors.assign(gens.size(), MultiPoly(p.nvars()));
  for (std::size_t k = 0; k < div.quotients.size(); ++k) {
    if (div.quotients[k].is_zero()) continue;
    for (std::size_t l = 0; l < gens.size(); ++l) cert.cofactors[l] += div.quotients[k] * basis_cof[k][l];
  }
  verify_witness(p, gens, cert.cofactors);
  return cert;
}

MembershipCertificate ideal_membership(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                                       const MonomialOrder& order, const MembershipOptions& options) {
  for (const auto& g : gens) {
    if (g.nvars() != p.nvars()) throw AmbientMismatch("polynomial and generators live in different rings");
  }
  GroebnerOptions gopts;
  gopts.budget = options.budget;
  gopts.track_cofactors = options.certificates;
  const GroebnerBasis basis = buchberger(gens, order, gopts);
  return ideal_membership(p, basis, options.certificates, options.budget);
}

std::vector<MultiPoly> rabinowitsch_generators(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
  const std::size_t n = p.nvars();
  std::vector<MultiPoly> out;
  out.reserve(gens.size() + 1);
  for (const auto& g : gens) {
    if (g.nvars() != n) throw AmbientMismatch("polynomial and generators live in different rings");
    out.push_back(g.extended(n + 1));
  }
  const MultiPoly t = MultiPoly::variable(n + 1, n);
  out.push_back(MultiPoly::constant(n + 1, 1) - t * p.extended(n + 1));
  return out;
}

MonomialOrder rabinowitsch_order(const MonomialOrder& order) {
  std::vector<std::size_t> ranking{order.nvars()};
  ranking.insert(ranking.end(), order.ranking().begin(), order.ranking().end());
  return {order.kind(), std::move(ranking)};
}

std::optional<unsigned> radical_exponent(const MultiPoly& p, const GroebnerBasis& basis, unsigned max_exponent,
                                         StepBudget* budget) {
  auto member = [&](unsigned n) { return normal_form(p.pow(n), basis, budget).is_zero(); };
  unsigned hi = 1;
  while (!member(hi)) {
    if (hi >= max_exponent) return std::nullopt;
    hi = std::min(hi * 2, max_exponent);
  }
  unsigned lo = hi / 2;  // p^lo not a member (or lo == 0)
  while (hi - lo > 1) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (member(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

MembershipCertificate radical_membership(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                                         const MonomialOrder& order, const RadicalOptions& options) {
  if (gens.empty()) throw std::invalid_argument("radical membership needs at least one generator");
  GroebnerOptions gopts;
  gopts.budget = options.budget;
  const GroebnerBasis rab =
      buchberger(rabinowitsch_generators(p, gens), rabinowitsch_order(order), gopts);
  MembershipCertificate cert;
  cert.verdict = rab.is_unit();
  if (!cert.verdict || !options.want_exponent) return cert;

  GroebnerOptions bopts;
  bopts.budget = options.budget;
  bopts.track_cofactors = options.certificates;
  const GroebnerBasis basis = buchberger(gens, order, bopts);
  cert.exponent = radical_exponent(p, basis, options.max_exponent, options.budget);
  if (!cert.exponent) {
    cert.exponent_above_bound = true;
    return cert;
  }
  if (options.certificates) {
    cert.cofactors = ideal_membership(p.pow(*cert.exponent), basis, true, options.budget).cofactors;
  }
  return cert;
}

}  // namespace alvero
