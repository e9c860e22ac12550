#include "alvero/report.hpp"

#include <stdexcept>

#include "alvero/rational.hpp"

namespace alvero {

nlohmann::json terms_to_json(const MultiPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (std::size_t v = 0; v < t.monomial.size(); ++v) exps.push_back(t.monomial[v]);
    out.push_back({{"coeff", to_string(t.coeff)}, {"exponents", exps}});
  }
  return out;
}

nlohmann::json candidate_to_json(const AceCandidate& c, const AceSpec& spec) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [k, m] : spec.pairs) pairs.push_back({k, m});
  const auto roots = c.profile.roots();
  const auto mult = c.profile.multiplicities();
  return {{"degree", spec.degree},
          {"level", spec.level},
          {"pairs", pairs},
          {"roots", std::vector<double>(roots.begin(), roots.end())},
          {"multiplicities", std::vector<unsigned>(mult.begin(), mult.end())},
          {"residual", c.residual},
          {"per_pair_gaps", c.per_pair_gaps},
          {"level_gap", c.level_gap},
          {"seed", c.seed},
          {"iterations", c.iterations}};
}

std::pair<AceSpec, AceCandidate> candidate_from_json(const nlohmann::json& j, double cluster_tol) {
  const nlohmann::json& c = j.contains("candidate") ? j.at("candidate") : j;
  try {
    AceSpec spec;
    spec.degree = c.at("degree").get<int>();
    spec.level = c.at("level").get<int>();
    for (const auto& p : c.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each pair must be [k, m]");
      spec.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    spec.validate();
    const RootProfile profile(c.at("roots").get<std::vector<double>>(), c.at("multiplicities").get<std::vector<unsigned>>(),
                              cluster_tol);
    if (profile.degree() != static_cast<std::size_t>(spec.degree)) {
      throw std::invalid_argument("multiplicities do not sum to the degree");
    }
    AceCandidate cand = make_candidate(profile.expanded(), spec, cluster_tol);
    cand.seed = c.value("seed", std::uint64_t{0});
    cand.iterations = c.value("iterations", std::uint64_t{0});
    return {std::move(spec), std::move(cand)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed candidate: ") + e.what());
  }
}

}  // namespace alvero
