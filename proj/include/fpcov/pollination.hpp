#pragma once

#include <vector>

#include "fpcov/model.hpp"
#include "fpcov/rng.hpp"

namespace fpcov {

/// Lévy step sampling parameters (Mantegna's method).
struct LevyConfig {
  double beta = 1.5;    // stability index, 1 < beta <= 2
  double scale = 0.01;  // multiplier on every step component

  bool operator==(const LevyConfig&) const = default;
};

/// Throws ConfigError if beta or scale is out of range.
void validate(const LevyConfig& cfg);

/// sigma_u of Mantegna's method:
///   [Gamma(1+b) sin(pi b/2) / (Gamma((1+b)/2) b 2^((b-1)/2))]^(1/b)
double mantegna_sigma_u(double beta);

/// One independent Lévy draw per dimension:
///   step = scale * u / |v|^(1/beta),  u ~ N(0, sigma_u^2), v ~ N(0, 1).
std::vector<double> levy_step(const LevyConfig& cfg, int dims, Rng& rng);

/// position[i] + step[i] * (gbest[i] - position[i]), clamped into the box
/// prod [0, v_i). Pure: inputs untouched, result freshly discretized.
Pollen apply_global_step(const Pollen& x, const Pollen& gbest,
                         const std::vector<double>& step,
                         const SystemModel& model);

/// position[i] + rho * (xj[i] - xk[i]), clamped into the box. Pure.
Pollen apply_local_step(const Pollen& x, const Pollen& xj, const Pollen& xk,
                        double rho, const SystemModel& model);

/// Global pollination: Lévy-scaled move toward the best pollen.
Pollen global_pollinate(const Pollen& x, const Pollen& gbest,
                        const LevyConfig& cfg, const SystemModel& model,
                        Rng& rng);

/// Local pollination: move along the difference of two population members,
/// scaled by a single uniform rho in [0, 1) drawn per call.
Pollen local_pollinate(const Pollen& x, const Pollen& xj, const Pollen& xk,
                       const SystemModel& model, Rng& rng);

}  // namespace fpcov
