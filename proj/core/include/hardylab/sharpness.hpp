#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/functionals.hpp"

namespace hardylab {

struct SweepPoint {
    double param = 0.0;   ///< grid value (or its log10 for deep sweeps)
    Estimate quotient;
    bool ok = true;
    std::string note;
};

struct SweepResult {
    std::string family;
    std::string quotient_id;
    std::vector<SweepPoint> points;
    std::optional<double> fitted_limit;
    std::optional<double> fit_residual;
    std::string fit_model;
    double target = 0.0;
    std::string target_anchor;
    bool monotone = true;
};

enum class FitModel { Algebraic, Logarithmic };

struct FitOutcome {
    double limit = 0.0;
    double residual = 0.0; ///< RMS misfit in the quotient units
    double rate = 0.0;     ///< fitted exponent (algebraic model)
};

/// Least-squares limit of q(t) = q_inf + a t^b (algebraic) or
/// q_inf + a / log(1/t) (logarithmic).  Needs >= 4 points with a monotone
/// tail; refuses otherwise.
FitOutcome extrapolate(const std::vector<SweepPoint>& pts, FitModel model);

/// Quotient of the annulus family on the punctured space (the extremal family
/// of the L1 bound with distance to the origin): closed form and quadrature.
struct PuncturedQuotient {
    double closed_form = 0.0;
    Estimate quadrature;
};
PuncturedQuotient punctured_annulus_quotient(int n, double s, double delta, double eta,
                                             const QuadratureConfig& cfg = {});
SweepResult punctured_quotient_sweep(int n, double s, double eta,
                                     const std::vector<double>& deltas,
                                     const QuadratureConfig& cfg = {});

/// Shell-family quotients on the unit ball certifying the finite series of
/// remainder constants: (n-1) * int (1-r)^{m+1-s} r^{n-2} / int (1-r)^{-beta} r^{n-1}.
Estimate ball_series_quotient(int n, double s, int m, double beta, double delta,
                              const QuadratureConfig& cfg = {});
SweepResult iterated_ball_series_sweep(int n, double s, int m, double beta,
                                       const std::vector<double>& deltas,
                                       const QuadratureConfig& cfg = {});

/// The logarithmic-denominator variant: quotient of the residual functional
/// against int (|u|/d) X(d/R); evaluated from log10(delta) so the divergence
/// can be followed arbitrarily deep.
double ball_series_x_quotient(int n, double s, double log10_delta,
                              const QuadratureConfig& cfg = {});

/// Quotient of the near-extremal power family for the weighted boundary Hardy
/// bound: exactly (((s-1)/q + eps)^q - ((s-1)/q)^q) / (eps q) in the limit of
/// exact quadrature.
struct Remark26Point {
    double eps = 0.0;
    Estimate numeric;
    double closed_form = 0.0;
};
Remark26Point remark26_ratio(int n, double R, double s, double q, double eps,
                             const QuadratureConfig& cfg = {});

/// Closed forms of the six-piece profile's Hardy difference per annulus
/// A_k = {delta^k < |x| < delta^{k-1}}.
struct SixpieceForms {
    double A1 = 0, A2 = 0, A3 = 0, A4 = 0, A5 = 0, A6 = 0;
    double total() const { return A1 + A2 + A3 + A4 + A5 + A6; }
    double leading = 0; ///< p n w_n H^{2(p-1)} delta^{p-n} log(1/delta)^{p-1}
};
SixpieceForms sixpiece_closed_forms(int n, double p, double delta);

/// Numeric Hardy difference of the six-piece profile over one annulus
/// (k = 1..6) or all of them (k = 0).
Estimate sixpiece_numeric(int n, double p, double delta, int k,
                          const QuadratureConfig& cfg = {});

/// The anchored quotient of the optimality computation:
/// (I[u_delta])^{1/p} / (|u(delta^3)| delta^{3(n/p-1)} X^{1/p-epsilon}(delta^3/D)).
double sixpiece_anchored_quotient(int n, double p, double delta, double epsilon,
                                  double D = 2.0, const QuadratureConfig& cfg = {});

struct SixpieceReport {
    std::vector<double> deltas;
    std::vector<double> ratio_to_leading; ///< numeric total / closed-form leading term
    std::vector<double> q0, q_eps;        ///< anchored quotients at epsilon = 0 and > 0
};

/// The strip quotient of the degenerate-remainder computation (no positive
/// power of the distance can weight the gradient side): closed form from the
/// tensor reduction.  For s > 2 the transverse scale is coupled as eps^{s-2}.
double strip_qtilde(int n, double s, double alpha, double eps, double eta, double K1,
                    double M1);

/// The strip quotient against the gamma = 1 logarithmic denominator with the
/// transverse coupling eta_t = eps^{s-2+0.1}; evaluated from log10(eps).
double strip_q1(int n, double s, double log10_eps, double eta_axial, double R, double K1,
                double M1);

/// Remark-4.6-type quotient (log remainder at gamma = 1 on a punctured
/// domain), from log10(delta).
double punctured_x_failure_quotient(int n, double s, double R, double eta,
                                    double log10_delta);
/// Reference value of the same family against the gamma > 1 denominator
/// (stays bounded away from zero).
double punctured_x_reference_quotient(int n, double s, double R, double eta,
                                      double log10_delta, double gamma);

/// Remark-4.8-type quotient (gradient remainder with a raised exponent).
double punctured_grad_failure_quotient(int n, double s, double eta, double eps_exponent,
                                       double delta);

struct FailureDemo {
    std::string id;
    std::vector<SweepPoint> modified;  ///< the broken variant, must decay
    std::vector<SweepPoint> reference; ///< the proved variant on the same grid
    bool decade = false;               ///< last value <= 0.1 x first value
    std::string note;
};

/// Optimality-failure demonstrations.  Only the catalogued cases are allowed:
///   gen-x-gamma1, gen-grad-exponent, strip-qtilde-alpha, strip-q1-gamma1,
///   ball-series-gamma1.
FailureDemo optimality_failure(const std::string& key,
                               const std::map<std::string, double>& params = {});

struct SharpTarget {
    std::string id;
    std::string anchor;
    std::string family;
    std::string model;
    std::string formula;
    double tolerance;
};
const std::vector<SharpTarget>& sharp_targets();

} // namespace hardylab
