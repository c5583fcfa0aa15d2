#include "hardylab/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>

namespace hardylab {

Estimate divide(const Estimate& num, const Estimate& den) {
    if (den.value == 0.0) throw NumericError("quotient: zero denominator");
    double v = num.value / den.value;
    double e = num.error / std::abs(den.value) +
               std::abs(num.value) * den.error / (den.value * den.value);
    return {v, e};
}

namespace {

struct GaussRule {
    std::vector<double> nodes, weights;
};

GaussRule make_gauss_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root of P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
    return it->second;
}

double gauss_apply(const Fn1D& f, double a, double b, const GaussRule& r) {
    double c = 0.5 * (b - a), d = 0.5 * (a + b);
    double s = 0;
    for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(c * r.nodes[i] + d);
    return c * s;
}

struct Segment {
    double a, b, coarse;
};

Estimate integrate_impl(const Fn1D& f, double a, double b, const QuadratureConfig& cfg,
                        bool lenient) {
    if (!(b > a)) return {0.0, 0.0};
    const GaussRule& rule = gauss_rule(12);
    std::vector<Segment> work{{a, b, gauss_apply(f, a, b, rule)}};
    double total = work[0].coarse; // running estimate, refined as segments split
    Estimate out{0.0, 0.0};
    int splits = 0;
    double worst = 0.0;
    while (!work.empty()) {
        Segment s = work.back();
        work.pop_back();
        double m = 0.5 * (s.a + s.b);
        double left = gauss_apply(f, s.a, m, rule);
        double right = gauss_apply(f, m, s.b, rule);
        double fine = left + right;
        double err = std::abs(fine - s.coarse);
        double tol = std::max(cfg.abs_tol,
                              std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) *
                                  std::max(1e-3, (s.b - s.a) / (b - a)));
        total += fine - s.coarse;
        if (err <= tol || (s.b - s.a) < 1e-15 * (b - a) || m <= s.a || m >= s.b) {
            out += Estimate{fine, err};
        } else if (++splits > cfg.max_subdivisions) {
            if (lenient) {
                out += Estimate{fine, err};
                worst = std::max(worst, err);
                continue;
            }
            throw NumericError("quadrature: subdivision budget exhausted", err);
        } else {
            work.push_back({s.a, m, left});
            work.push_back({m, s.b, right});
        }
    }
    return out;
}

} // namespace

Estimate integrate(const Fn1D& f, double a, double b, const QuadratureConfig& cfg) {
    return integrate_impl(f, a, b, cfg, false);
}

Estimate integrate_lenient(const Fn1D& f, double a, double b, const QuadratureConfig& cfg) {
    return integrate_impl(f, a, b, cfg, true);
}

Estimate integrate_power_log_zero(double alpha, double xpow, double D, const Fn1D& rest,
                                  double b, const QuadratureConfig& cfg) {
    if (!(b > 0)) return {0.0, 0.0};
    if (!(D > 0)) throw ParameterError("integrate_power_log_zero: D must be positive");
    const double rate = alpha + 1.0;
    if (rate < 0 || (rate == 0 && xpow <= 1.0))
        throw DivergenceError("non-integrable endpoint: exponent " + std::to_string(alpha) +
                              " with log-weight power " + std::to_string(xpow));
    const double logD = std::log(D);
    // g(v) = exp(-rate*v) * (1 + v + logD)^{-xpow} * rest(e^{-v}),  v in [v0, inf)
    auto g = [&](double v) {
        double t = std::exp(-v);
        double xfac = (xpow == 0.0) ? 1.0 : std::pow(1.0 + v + logD, -xpow);
        return std::exp(-rate * v) * xfac * rest(t);
    };
    const double v0 = -std::log(b);
    double rest0 = rest(std::exp(-std::max(v0 + 50.0, 120.0))); // limit value of rest at t -> 0
    Estimate total{0.0, 0.0};
    if (rate == 0.0) {
        // Pure t^{-1} X^{xpow}: polynomial tail in v, summed in closed form
        // once rest has settled to its limit.
        double V = std::max(v0 + 60.0, 120.0);
        total += integrate(g, v0, V, cfg);
        double tail = rest0 * std::pow(1.0 + V + logD, 1.0 - xpow) / (xpow - 1.0);
        total += Estimate{tail, std::abs(tail) * 1e-12 + cfg.abs_tol};
        return total;
    }
    // Exponential tail; extend in blocks until the analytic remainder bound is negligible.
    double v_lo = v0;
    double block = std::max(20.0, 20.0 / rate);
    double budget = std::max(1.0, std::abs(total.value));
    for (int k = 0; k < 200; ++k) {
        double v_hi = v_lo + block;
        total += integrate(g, v_lo, v_hi, cfg);
        budget = std::max(budget, std::abs(total.value));
        // bound: |rest| near its limit, X factor monotone for large v
        double xfac = (xpow == 0.0) ? 1.0 : std::pow(1.0 + v_hi + logD, -xpow);
        double tail_bound = std::abs(rest0) * 2.0 * std::max(xfac, 1.0) * std::exp(-rate * v_hi) / rate;
        if (tail_bound <= std::max(cfg.abs_tol, 0.5 * cfg.rel_tol * budget)) {
            total.error += tail_bound;
            return total;
        }
        v_lo = v_hi;
    }
    throw NumericError("integrate_power_log_zero: tail did not converge", total.error);
}

double unit_ball_volume(int n) {
    if (n < 1) throw ParameterError("unit_ball_volume: n must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(1.0 + 0.5 * n);
}

double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

double smooth_step(double t) {
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    double fa = std::exp(-1.0 / t);
    double fb = std::exp(-1.0 / (1.0 - t));
    return fa / (fa + fb);
}

double smooth_step_deriv(double t) {
    if (t <= 0 || t >= 1) return 0.0;
    double fa = std::exp(-1.0 / t);
    double fb = std::exp(-1.0 / (1.0 - t));
    double da = fa / (t * t);
    double db = fb / ((1.0 - t) * (1.0 - t));
    double s = fa + fb;
    return (da * fb + fa * db) / (s * s);
}

double bump_profile(double r) {
    double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 / (r2 - 1.0));
}

double bump_profile_deriv(double r) {
    double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    double q = r2 - 1.0;
    return bump_profile(r) * (-2.0 * r / (q * q));
}

const std::vector<double>& gauss_nodes(int n) { return gauss_rule(n).nodes; }
const std::vector<double>& gauss_weights(int n) { return gauss_rule(n).weights; }

} // namespace hardylab
