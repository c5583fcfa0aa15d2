#pragma once

#include <cstdint>
#include <string>

#include "hardylab/numeric.hpp"

namespace hardylab {

enum class FemProbe : std::uint8_t {
    IntervalHardy,       ///< min of int u'^2 / int u^2/d^2 on (0,1)
    IntervalBrezisMarcus, ///< min of (int u'^2 - 1/4 int u^2/d^2) / int u^2/d^2 X^2(d/D)
    BallRadialWeighted    ///< min of int |grad u|^2 / d^{s-2} / int u^2 / d^s, radial on B_1
};

struct FemOptions {
    int mesh = 1000;       ///< number of elements
    double D = 1.0;        ///< log-weight scale (Brezis-Marcus probe)
    double s = 3.0;        ///< weight exponent (ball probe)
    int n = 3;             ///< dimension (ball probe)
    double grading = 3.0;  ///< node grading exponent toward singular endpoints
};

struct FemResult {
    double value = 0.0; ///< smallest generalized Rayleigh quotient over the element space
    int mesh = 0;
    int iterations = 0;
};

/// Piecewise-linear discretization of the p = 2 quotients; the generalized
/// symmetric tridiagonal eigenproblem is solved by inertia bisection.
FemResult fem_min_p2(FemProbe probe, const FemOptions& opt);

} // namespace hardylab
