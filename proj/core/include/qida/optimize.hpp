#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qida {

enum class Layer0Init { Uniform0To2Pi };

/// Settings shared by the bare minimizer and the VQE drivers.
struct VqeConfig {
  double gradient_tolerance = 1e-6;  // max-norm stopping threshold
  int max_iterations = 2000;
  std::uint64_t rng_seed = 0;
  double layer_init_halfwidth = 0.1;  // new layers start uniform in [0, halfwidth)
  Layer0Init layer0_init = Layer0Init::Uniform0To2Pi;

  void validate() const;
};

struct OptResult {
  double final_energy = 0.0;
  std::vector<double> final_params;
  std::vector<double> energy_trace;  // value at x0 plus every accepted iterate
  int n_iterations = 0;
  bool converged = false;
};

/// Objective callback: returns f(x) and writes the gradient into grad_out.
using Objective = std::function<double(std::span<const double> x, std::span<double> grad_out)>;

/// BFGS with a strong-Wolfe line search (c1 = 1e-4, c2 = 0.9, unit initial
/// step). Stops when the gradient max-norm drops below gradient_tolerance or
/// max_iterations is hit; a failed line search returns the best point seen
/// with converged = false.
OptResult minimize(const Objective& objective, std::vector<double> x0,
                   const VqeConfig& config);

}  // namespace qida
