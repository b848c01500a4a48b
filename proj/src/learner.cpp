#include "sccrfmq/learner.hpp"

#include <cmath>
#include <stdexcept>

namespace sccrfmq {

void HyperParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in (0,1]");
  }
  if (!(alpha_f > 0.0 && alpha_f <= 1.0)) {
    throw std::invalid_argument("alpha_f must be in (0,1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must be in [0,1]");
  }
  if (resample_period < 1) {
    throw std::invalid_argument("resample period c must be >= 1");
  }
  if (!(sigma0 > 0.0)) throw std::invalid_argument("sigma0 must be positive");
  if (!(delta_d > 0.0 && delta_d < 1.0)) {
    throw std::invalid_argument("delta_d must be in (0,1)");
  }
  if (!(delta_l > 1.0)) throw std::invalid_argument("delta_l must exceed 1");
  if (!(delta_eps_re >= 0.0 && delta_eps_re < 1.0)) {
    throw std::invalid_argument("delta_eps_re must be in [0,1)");
  }
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be non-negative");
  if (!(smc_resample_threshold > 0.0 && smc_resample_threshold <= 1.0)) {
    throw std::invalid_argument("smc resample threshold must be in (0,1]");
  }
  if (!(tau0 > 0.0)) throw std::invalid_argument("tau0 must be positive");
  if (tau_period < 1) throw std::invalid_argument("tau_period must be >= 1");
  if (!(tau_factor > 0.0 && tau_factor <= 1.0)) {
    throw std::invalid_argument("tau_factor must be in (0,1]");
  }
  if (!(kernel_floor > 0.0)) {
    throw std::invalid_argument("kernel_floor must be positive");
  }
  if (!(cala_lambda > 0.0 && cala_lambda <= 1.0)) {
    throw std::invalid_argument("cala lambda must be in (0,1]");
  }
  if (!(cala_sigma_lower > 0.0)) {
    throw std::invalid_argument("cala sigma lower bound must be positive");
  }
  if (!(cala_penalty >= 0.0)) {
    throw std::invalid_argument("cala penalty must be non-negative");
  }
}

void fmq_update(SampleStats& s, double u, const HyperParams& p) {
  s.q = (1.0 - p.alpha) * s.q + p.alpha * u;
  if (u > s.q_max + p.eta) {
    s.q_max = u;
    s.freq = 1.0;
  } else if (u >= s.q_max - p.eta) {
    s.freq = (1.0 - p.alpha_f) * s.freq + p.alpha_f;
  } else {
    s.freq = (1.0 - p.alpha_f) * s.freq;
  }
  s.eval = (1.0 - s.freq) * s.q + s.freq * s.q_max;
}

std::vector<double> evenly_spaced_actions(int n) {
  if (n < 1) throw std::invalid_argument("evenly_spaced_actions: n < 1");
  std::vector<double> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    out.push_back(static_cast<double>(i) / (n + 1));
  }
  return out;
}

}  // namespace sccrfmq
