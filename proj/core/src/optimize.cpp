#include "qida/optimize.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qida {

void VqeConfig::validate() const {
  if (gradient_tolerance <= 0.0)
    throw std::invalid_argument("vqe config: gradient_tolerance must be positive");
  if (layer_init_halfwidth <= 0.0)
    throw std::invalid_argument("vqe config: layer_init_halfwidth must be positive");
  if (max_iterations < 1)
    throw std::invalid_argument("vqe config: max_iterations must be >= 1");
}

namespace {

using Vector = Eigen::VectorXd;

constexpr double kC1 = 1e-4;
constexpr double kC2 = 0.9;
constexpr int kMaxLineSearchSteps = 60;

double max_norm(const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

struct Probe {
  double f;
  double slope;  // d f(x + a p) / d a
};

class LineObjective {
 public:
  LineObjective(const Objective& objective, const Vector& x, const Vector& p)
      : objective_(objective), x_(x), p_(p), grad_(x.size()) {}

  Probe eval(double alpha) {
    point_ = x_ + alpha * p_;
    const double f = objective_({point_.data(), static_cast<std::size_t>(point_.size())},
                                {grad_.data(), static_cast<std::size_t>(grad_.size())});
    return {f, grad_.dot(p_)};
  }

  const Vector& last_point() const { return point_; }
  const Vector& last_gradient() const { return grad_; }

 private:
  const Objective& objective_;
  const Vector& x_;
  const Vector& p_;
  Vector point_;
  Vector grad_;
};

// cubic (falls back to bisection) minimizer of the interpolant on [lo, hi]
double interpolate_step(double a_lo, double f_lo, double g_lo, double a_hi, double f_hi,
                        double g_hi) {
  const double d1 = g_lo + g_hi - 3 * (f_lo - f_hi) / (a_lo - a_hi);
  const double disc = d1 * d1 - g_lo * g_hi;
  if (disc >= 0.0) {
    const double d2 = std::copysign(std::sqrt(disc), a_hi - a_lo);
    const double denom = g_hi - g_lo + 2 * d2;
    if (denom != 0.0) {
      const double cand = a_hi - (a_hi - a_lo) * (g_hi + d2 - d1) / denom;
      const double lo = std::min(a_lo, a_hi), hi = std::max(a_lo, a_hi);
      const double margin = 0.1 * (hi - lo);
      if (cand > lo + margin && cand < hi - margin) return cand;
    }
  }
  return 0.5 * (a_lo + a_hi);
}

struct LineSearchResult {
  bool ok = false;
  double alpha = 0.0;
  Probe probe{};
};

// strong Wolfe line search (sufficient decrease + curvature), Nocedal-style
// bracketing followed by interpolation inside the bracket
LineSearchResult wolfe_line_search(LineObjective& line, double f0, double slope0) {
  LineSearchResult out;
  if (slope0 >= 0.0) return out;  // not a descent direction

  auto zoom = [&](double a_lo, Probe p_lo, double a_hi, Probe p_hi) {
    for (int i = 0; i < kMaxLineSearchSteps; ++i) {
      const double a = interpolate_step(a_lo, p_lo.f, p_lo.slope, a_hi, p_hi.f, p_hi.slope);
      Probe p = line.eval(a);
      if (p.f > f0 + kC1 * a * slope0 || p.f >= p_lo.f) {
        a_hi = a;
        p_hi = p;
      } else {
        if (std::abs(p.slope) <= -kC2 * slope0) {
          out = {true, a, p};
          return;
        }
        if (p.slope * (a_hi - a_lo) >= 0.0) {
          a_hi = a_lo;
          p_hi = p_lo;
        }
        a_lo = a;
        p_lo = p;
      }
      if (std::abs(a_hi - a_lo) < 1e-16) break;
    }
    // bracket collapsed: accept the low point if it at least decreases
    if (p_lo.f < f0) out = {true, a_lo, line.eval(a_lo)};
  };

  double a_prev = 0.0;
  Probe p_prev{f0, slope0};
  double a = 1.0;
  for (int i = 0; i < kMaxLineSearchSteps; ++i) {
    Probe p = line.eval(a);
    if (p.f > f0 + kC1 * a * slope0 || (i > 0 && p.f >= p_prev.f)) {
      zoom(a_prev, p_prev, a, p);
      return out;
    }
    if (std::abs(p.slope) <= -kC2 * slope0) {
      out = {true, a, p};
      return out;
    }
    if (p.slope >= 0.0) {
      zoom(a, p, a_prev, p_prev);
      return out;
    }
    a_prev = a;
    p_prev = p;
    a *= 2.0;
    if (a > 1e10) break;
  }
  return out;
}

}  // namespace

OptResult minimize(const Objective& objective, std::vector<double> x0,
                   const VqeConfig& config) {
  config.validate();
  const auto n = static_cast<Eigen::Index>(x0.size());

  OptResult result;
  if (n == 0) {
    result.final_energy = objective({}, {});
    result.energy_trace.push_back(result.final_energy);
    result.converged = true;
    return result;
  }

  Vector x = Eigen::Map<const Vector>(x0.data(), n);
  Vector grad(n);
  double f = objective({x.data(), x0.size()}, {grad.data(), x0.size()});
  result.energy_trace.push_back(f);

  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
  bool converged = false;
  int iteration = 0;

  while (iteration < config.max_iterations) {
    if (max_norm(grad) < config.gradient_tolerance) {
      converged = true;
      break;
    }

    Vector direction = -(h_inv * grad);
    double slope = grad.dot(direction);
    if (slope >= 0.0) {  // numerical loss of positive-definiteness
      h_inv.setIdentity();
      direction = -grad;
      slope = grad.dot(direction);
    }

    LineObjective line(objective, x, direction);
    const LineSearchResult ls = wolfe_line_search(line, f, slope);
    if (!ls.ok) break;  // line-search failure: return best-so-far

    ++iteration;
    const Vector x_new = x + ls.alpha * direction;
    Probe p = ls.probe;
    // the probe's gradient belongs to the accepted point only if it was the
    // last evaluation; re-evaluate otherwise
    Vector grad_new;
    if ((line.last_point() - x_new).cwiseAbs().maxCoeff() == 0.0) {
      grad_new = line.last_gradient();
    } else {
      grad_new.resize(n);
      p.f = objective({x_new.data(), x0.size()}, {grad_new.data(), x0.size()});
    }

    const Vector s = x_new - x;
    const Vector y = grad_new - grad;
    const double ys = y.dot(s);
    if (ys > 1e-14 * y.norm() * s.norm()) {
      const double rho = 1.0 / ys;
      const Eigen::MatrixXd outer_sy = s * y.transpose();
      h_inv = h_inv - rho * (outer_sy * h_inv + h_inv * outer_sy.transpose()) +
              (rho * rho * (y.dot(h_inv * y)) + rho) * (s * s.transpose());
    } else {
      h_inv.setIdentity();
    }

    x = x_new;
    grad = grad_new;
    f = p.f;
    result.energy_trace.push_back(f);
  }

  result.final_energy = f;
  result.final_params.assign(x.data(), x.data() + n);
  result.n_iterations = iteration;
  result.converged = converged || max_norm(grad) < config.gradient_tolerance;
  return result;
}

}  // namespace qida
