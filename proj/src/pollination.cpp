#include "fpcov/pollination.hpp"

#include <cmath>
#include <numbers>

#include "fpcov/errors.hpp"

namespace fpcov {

namespace {

// Largest representable coordinate below the open upper bound, so
// discretize never sees value == cardinality.
double clamp_coord(double p, int cardinality) {
  const double hi = std::nextafter(static_cast<double>(cardinality), 0.0);
  if (p < 0.0) return 0.0;
  if (p > hi) return hi;
  return p;
}

Pollen finish(std::vector<double> position, const SystemModel& model) {
  Pollen out;
  out.position = std::move(position);
  out.test = discretize(out.position, model);
  return out;
}

}  // namespace

void validate(const LevyConfig& cfg) {
  if (!(cfg.beta > 1.0) || !(cfg.beta <= 2.0))
    throw ConfigError("levy beta must be in (1, 2]");
  if (!(cfg.scale > 0.0)) throw ConfigError("levy scale must be > 0");
}

double mantegna_sigma_u(double beta) {
  const double num =
      std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta *
                     std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

std::vector<double> levy_step(const LevyConfig& cfg, int dims, Rng& rng) {
  const double sigma_u = mantegna_sigma_u(cfg.beta);
  std::vector<double> step(static_cast<std::size_t>(dims));
  for (double& s : step) {
    const double u = sigma_u * rng.gaussian();
    // Floor |v| away from zero so the step stays finite.
    const double v = std::max(std::fabs(rng.gaussian()), 1e-300);
    s = cfg.scale * u / std::pow(v, 1.0 / cfg.beta);
  }
  return step;
}

Pollen apply_global_step(const Pollen& x, const Pollen& gbest,
                         const std::vector<double>& step,
                         const SystemModel& model) {
  std::vector<double> pos(x.position.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    pos[i] = clamp_coord(
        x.position[i] + step[i] * (gbest.position[i] - x.position[i]),
        model.cardinalities[i]);
  return finish(std::move(pos), model);
}

Pollen apply_local_step(const Pollen& x, const Pollen& xj, const Pollen& xk,
                        double rho, const SystemModel& model) {
  std::vector<double> pos(x.position.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    pos[i] = clamp_coord(
        x.position[i] + rho * (xj.position[i] - xk.position[i]),
        model.cardinalities[i]);
  return finish(std::move(pos), model);
}

Pollen global_pollinate(const Pollen& x, const Pollen& gbest,
                        const LevyConfig& cfg, const SystemModel& model,
                        Rng& rng) {
  return apply_global_step(
      x, gbest, levy_step(cfg, static_cast<int>(x.position.size()), rng),
      model);
}

Pollen local_pollinate(const Pollen& x, const Pollen& xj, const Pollen& xk,
                       const SystemModel& model, Rng& rng) {
  return apply_local_step(x, xj, xk, rng.uniform(), model);
}

}  // namespace fpcov
