#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hardylab/domains.hpp"
#include "hardylab/profiles.hpp"

namespace hardylab {

/// Multiplicative weight w(t) = t^power * X(t/D)^xpow in the profile variable.
struct Weight {
    double power = 0.0;
    double xpow = 0.0;
    double D = 1.0;

    double operator()(double t) const;
};

enum class FunctionalKind : std::uint8_t {
    ValueWeighted, ///< integral of |u|^p w
    GradWeighted   ///< integral of |grad u|^p w (+ Dirac surface terms for p = 1)
};

struct FunctionalSpec {
    FunctionalKind kind = FunctionalKind::ValueWeighted;
    double p = 1.0;
    Weight weight;
};

/// surface(t) = sum of t^power * smooth(t); smooth bounded near t = 0.
struct SurfaceTerm {
    double power = 0.0;
    Fn1D smooth;
};

struct CoAreaMap {
    double lo = 0.0, hi = 0.0;
    std::vector<SurfaceTerm> terms;

    double surface(double t) const;
};

/// Co-area reduction of the volume integral to the profile variable.
CoAreaMap coarea_map(const Domain& dom, ProfileVariable var);

/// Weighted integral over the domain, reduced to one dimension; jump profiles
/// contribute exact Dirac surface terms (gradient kind, p = 1 only).
/// Throws DivergenceError on non-integrable exponent combinations.
Estimate weighted_integral(const Profile& u, const Domain& dom, const FunctionalSpec& spec,
                           const QuadratureConfig& cfg = {});

struct QuotientSpec {
    FunctionalSpec numerator;
    FunctionalSpec denominator;
};

/// numerator/denominator with propagated error bounds; throws NumericError
/// when the denominator falls below the absolute tolerance.
Estimate quotient(const QuotientSpec& spec, const Profile& u, const Domain& dom,
                  const QuadratureConfig& cfg = {});

/// Distributional pairing of -Laplacian(d) with g(d(x)) on a bounded
/// mean-convex catalog domain (ball, interval, square), computed as the
/// volume integral of g'(d) plus the boundary correction g(0+)|boundary|.
/// Singular ridge contributions are picked up exactly.
Estimate neg_laplacian_pairing(const Profile& g, const Domain& dom,
                               const QuadratureConfig& cfg = {});

/// tau(t) = t^power * X(t/D)^xpow multiplying |u| in weighted sup norms.
struct SupSpec {
    double power = 0.0;
    double xpow = 0.0;
    double D = 1.0;
};

struct SupResult {
    double value = 0.0;
    double arg = 0.0;
    bool converged = false; ///< false = still rising at max refinement
};

/// sup over a refining sample grid of |u(t)| * tau(t) for t in the support
/// intersected with [lo, hi].
SupResult sup_quotient(const Profile& u, const Domain& dom, const SupSpec& tau,
                       double lo = 0.0, double hi = -1.0);

/// Weighted point evaluation |u(x)| * x^power * X(x/D)^xpow (the anchored
/// variant of the Hoelder quotient).
double anchored_weighted_value(const Profile& u, double x, const SupSpec& tau);

struct HolderSpec {
    double exponent = 0.0; ///< modulus power on |x - y|
    double xpow = 0.0;     ///< X power multiplying the difference quotient
    double D = 1.0;
};

/// sup over sampled point pairs of |u(x)-u(y)| X^{xpow}(|x-y|/D) / |x-y|^{exponent}.
/// Pairs run along a ray and across the domain (antipodal), which exhausts the
/// geometry for radial profiles.
SupResult holder_quotient(const Profile& u, const Domain& dom, const HolderSpec& spec);

/// Reduced integrals of a tensor profile on the slab: the transverse bump
/// contributes the constants K_delta, M_delta.
Estimate slab_value_integral(const TensorProfile& tp, const Weight& w, double p = 1.0,
                             const QuadratureConfig& cfg = {});
Estimate slab_grad_integral(const TensorProfile& tp, const Weight& w,
                            const QuadratureConfig& cfg = {});

} // namespace hardylab
