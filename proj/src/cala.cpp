#include "sccrfmq/cala.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace sccrfmq {

CalaPolicy::CalaPolicy(const HyperParams& params, RandomSource rng)
    : p_(params), rng_(std::move(rng)), s_(params.sigma0) {
  p_.validate();
}

double CalaPolicy::sample() {
  const double phi = std::max(s_, p_.cala_sigma_lower);
  return project(rng_.normal(mu_, phi), kUnitInterval);
}

void CalaPolicy::note(double r) {
  if (!seen_reward_) {
    reward_min_ = reward_max_ = r;
    seen_reward_ = true;
  } else {
    reward_min_ = std::min(reward_min_, r);
    reward_max_ = std::max(reward_max_, r);
  }
}

double CalaPolicy::normalize(double r) const {
  const double span = reward_max_ - reward_min_;
  if (!(span > 0.0)) return 0.0;
  return (r - reward_min_) / span;
}

void CalaPolicy::update(double x, double reward_x, double reward_mu) {
  if (!std::isfinite(reward_x) || !std::isfinite(reward_mu)) {
    throw std::invalid_argument("cala: non-finite reward");
  }
  note(reward_x);
  note(reward_mu);
  const double phi = std::max(s_, p_.cala_sigma_lower);
  const double z = (x - mu_) / phi;
  const double gain = p_.cala_lambda * (normalize(reward_x) - normalize(reward_mu));
  mu_ = project(mu_ + gain * z, kUnitInterval);
  s_ = s_ + gain * (z * z - 1.0) -
       p_.cala_lambda * p_.cala_penalty * (s_ - p_.cala_sigma_lower);
  s_ = std::max(s_, p_.cala_sigma_lower);
}

std::string CalaPolicy::snapshot_json() const {
  nlohmann::json doc;
  doc["algo"] = "cala";
  doc["mu"] = mu_;
  doc["sigma"] = s_;
  if (seen_reward_) {
    doc["reward_min"] = reward_min_;
    doc["reward_max"] = reward_max_;
  }
  return doc.dump();
}

}  // namespace sccrfmq
