#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab {

/// A value together with a (conservative) absolute error bound.
struct Estimate {
    double value = 0.0;
    double error = 0.0;

    Estimate() = default;
    Estimate(double v, double e = 0.0) : value(v), error(e) {}

    Estimate operator+(const Estimate& o) const { return {value + o.value, error + o.error}; }
    Estimate operator-(const Estimate& o) const { return {value - o.value, error + o.error}; }
    Estimate operator*(double c) const { return {value * c, error * std::abs(c)}; }
    Estimate& operator+=(const Estimate& o) {
        value += o.value;
        error += o.error;
        return *this;
    }
};

/// num/den with first-order error propagation.
Estimate divide(const Estimate& num, const Estimate& den);

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_subdivisions = 6000;
    bool endpoint_substitution = true; ///< allow the t = e^{-v} transform near singular endpoints
};

using Fn1D = std::function<double(double)>;

/// Adaptive Gauss quadrature of f over [a, b].  Throws NumericError when the
/// subdivision budget runs out before the tolerance is met.
Estimate integrate(const Fn1D& f, double a, double b, const QuadratureConfig& cfg = {});

/// As integrate(), but returns the partial sum with its achieved error instead
/// of throwing on non-convergence.
Estimate integrate_lenient(const Fn1D& f, double a, double b, const QuadratureConfig& cfg = {});

/// Integral over (0, b] of  t^alpha * X(t/D)^xpow * rest(t)  with rest bounded
/// near 0.  Uses the substitution t = e^{-v}; requires alpha > -1, or
/// alpha == -1 with xpow > 1 (then the slow tail is summed analytically).
/// X(t) = 1/(1 - log t).
Estimate integrate_power_log_zero(double alpha, double xpow, double D, const Fn1D& rest,
                                  double b, const QuadratureConfig& cfg = {});

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

/// Surface area of the unit sphere in R^n, i.e. n * unit_ball_volume(n).
double unit_sphere_area(int n);

/// C-infinity step: 0 for t <= 0, 1 for t >= 1, strictly increasing between.
double smooth_step(double t);
double smooth_step_deriv(double t);

/// The standard radial mollifier profile exp(1/(r^2-1)) on (-1,1), zero outside
/// (not normalised).
double bump_profile(double r);
double bump_profile_deriv(double r);

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1,1] (cached).
const std::vector<double>& gauss_nodes(int n);
const std::vector<double>& gauss_weights(int n);

} // namespace hardylab
