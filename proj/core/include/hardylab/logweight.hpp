#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hardylab/numeric.hpp"

namespace hardylab {

/// The logarithmic remainder weight X(t) = (1 - log t)^{-1}, t in (0, 1],
/// rescaled by a positive length D.
struct LogWeight {
    double D = 1.0;

    explicit LogWeight(double scale = 1.0);

    /// X(t/D).  Requires 0 < t <= D.
    double operator()(double t) const;
};

/// X(t/D) = (1 - log(t/D))^{-1}.  Throws DomainError unless 0 < t <= D.
double eval_X(double t, double D);

/// X(t/D)^p, evaluated stably for t down to the denormal range.
double eval_X_pow(double t, double D, double p);

enum class LemmaA1Variant : std::uint8_t { I, II };

struct LemmaA1Params {
    double alpha; ///< > -1
    double beta;  ///< > 0
    double R;     ///< > 0
    double c;     ///< > 1/(alpha+1)
    double D;     ///< >= e^eta * R
    double r;     ///< in (0, R]
    LemmaA1Variant variant = LemmaA1Variant::I;
    std::optional<double> y; ///< variant II lower limit, 0 <= y <= r
};

/// Smallest admissible log-scale exponent eta for the given (alpha, beta, c).
double lemma_a1_eta(double alpha, double beta, double c);

struct LemmaA1Result {
    Estimate lhs;  ///< integral side
    double rhs;    ///< closed bound
    double margin; ///< rhs - lhs.value (>= 0 when the bound holds)
};

/// Check the integral bound  int t^alpha X^{-beta}(t/D) dt <= c r^{alpha+1} X^{-beta}(r/D)
/// (variant I over (0, r]; variant II over (y, r] against (r-y)).
LemmaA1Result check_lemma_A1(const LemmaA1Params& p, const QuadratureConfig& cfg = {});

struct LemmaA2Margins {
    /// margin of the 1 < p < 2 bound (set only in that range)
    std::optional<double> sub2;
    /// margins of the two p >= 2 bounds (set only for p >= 2)
    std::optional<double> super2_grad;  ///< |b|^p comparison term
    std::optional<double> super2_mixed; ///< |a|^{p-2}|b|^2 comparison term
};

/// Pointwise vector inequalities behind the change-of-variables estimates.
/// Requires p > 1 and a, b of equal dimension.
LemmaA2Margins check_lemma_A2(double p, const std::vector<double>& a,
                              const std::vector<double>& b);

} // namespace hardylab
