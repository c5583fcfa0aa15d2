#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/numeric.hpp"

namespace hardylab {

/// Which scalar the profile depends on.
enum class ProfileVariable : std::uint8_t {
    RadialOrigin,   ///< rho = |x|
    RadialBoundary, ///< rho = dist(x, boundary)
    Axial           ///< rho = x_n
};

/// Local power form u(t) = t^power * smooth(t) near a piece endpoint at 0,
/// with smooth bounded; lets the quadrature engine peel off the singular
/// factor exactly.
struct ZeroForm {
    double value_power = 0;
    double deriv_power = 0;
    std::function<double(double)> value_smooth;
    std::function<double(double)> deriv_smooth;
};

struct ProfilePiece {
    double lo = 0, hi = 0; ///< hi may be +inf
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::optional<ZeroForm> zero_form; ///< set when lo == 0
    bool numeric = false; ///< evaluator is itself a quadrature (limited precision)
};

/// A jump discontinuity contributing a surface Dirac term to |grad u|.
struct ProfileJump {
    double location = 0;
    double magnitude = 0; ///< signed: u(loc+) - u(loc-)
};

/// A piecewise closed-form function of one radial/axial variable with
/// analytic derivatives and an explicit jump set.
class Profile {
public:
    Profile() = default;
    Profile(ProfileVariable var, std::vector<ProfilePiece> pieces,
            std::vector<ProfileJump> jumps = {}, std::string family = "custom");

    double value(double t) const; ///< 0 outside the pieces
    double deriv(double t) const;

    ProfileVariable variable() const { return variable_; }
    const std::vector<ProfilePiece>& pieces() const { return pieces_; }
    const std::vector<ProfileJump>& jumps() const { return jumps_; }
    const std::string& family() const { return family_; }
    bool has_jumps() const { return !jumps_.empty(); }

    double support_lo() const;
    double support_hi() const;
    /// All piece endpoints and jump locations, sorted (quadrature split points).
    std::vector<double> breakpoints() const;

    /// The profile  t -> c * t^e * u(t)  (used by change-of-variables checks).
    Profile multiplied_by_power(double e, double c = 1.0) const;
    /// Restriction to [lo, hi]; jumps outside are dropped.
    Profile restricted(double lo, double hi) const;
    /// The profile  t -> u(t / lambda)  living on the scaled variable.
    Profile rescaled(double lambda) const;
    /// Same shape, different variable tag.
    Profile with_variable(ProfileVariable v) const;

private:
    ProfileVariable variable_ = ProfileVariable::RadialOrigin;
    std::vector<ProfilePiece> pieces_;
    std::vector<ProfileJump> jumps_;
    std::string family_ = "custom";
};

struct CutoffSpec {
    enum class Kind : std::uint8_t {
        NearZero, ///< equals 1 for t <= width/2, vanishes for t >= width
        VanishAtHi ///< equals 1 for t <= hi - width, vanishes at t = hi
    };
    Kind kind = Kind::NearZero;
    double width = 0.5;
};

/// t^exponent on (0, hi), optionally damped by a smooth cutoff.
Profile power_profile(ProfileVariable var, double exponent, double hi,
                      std::optional<CutoffSpec> cutoff = std::nullopt);

/// d^{(s-1)/q + eps} in the boundary distance (the near-extremal family of
/// the weighted boundary Hardy inequalities).
Profile power_family(double s, double q, double eps,
                     std::optional<CutoffSpec> cutoff = std::nullopt);

/// Indicator of the annulus delta < rho < eta, jumps of unit size at both radii.
Profile annulus_indicator(double delta, double eta);

/// Indicator of the ball rho < R - delta (single jump at R - delta).
Profile shell_indicator(double delta, double R = 1.0);

/// chi_{d > d0} * d^{s-1}: the Cheeger-quotient test function.
Profile cheeger_profile(double s, double d0);

/// One-dimensional convolution with the standard mollifier of width eps.
/// Requires eps smaller than half the least gap between breakpoints and
/// smaller than the distance of the support to 0.
Profile mollify(const Profile& p, double eps);

/// The six-piece radial profile certifying the logarithmic correction of the
/// Hardy-Morrey inequality; defined on [delta^6, 1], p > n >= 1.
Profile sixpiece_hardy_morrey(double delta, double p, int n,
                              ProfileVariable var = ProfileVariable::RadialOrigin);

/// alpha [1 + beta rho^{1-1/p}]^{1-n/p}  (as printed; see docs).
Profile extremal_sobolev_U(double alpha, double beta, double p, int n);

/// alpha [beta^k - rho^k]_+ with k = (p-n)/(p-1); vanishes outside B_beta.
Profile extremal_morrey_V(double alpha, double beta, double p, int n);

/// Two-branch power profile rho^{base+eps} (rho <= 1), rho^{base-eps} (rho > 1).
Profile brv_profile(double base, double eps);
/// The (p, n) specialisation base = (p-n)/p.
Profile brv_family(double p, int n, double eps);

/// Smooth interior bump centred at c with half-width w.
Profile bump1d(double center, double halfwidth,
               ProfileVariable var = ProfileVariable::RadialOrigin);

/// Piecewise-linear tent of unit height.
Profile tent(double center, double halfwidth,
             ProfileVariable var = ProfileVariable::RadialBoundary);

/// Axial indicator times a scaled transverse bump on the slab.
struct TensorProfile {
    Profile axial; ///< indicator of (eps, eta) in x_n
    int n = 2;     ///< ambient dimension; transverse lives in R^{n-1}
    double scale = 1.0; ///< delta: phi_delta(x') = phi(delta x')
    double K1 = 0, M1 = 0; ///< transverse integrals of |grad phi| and |phi|

    double eps() const { return axial.support_lo(); }
    double eta() const { return axial.support_hi(); }
    double Kd() const { return std::pow(scale, 2.0 - n) * K1; }
    double Md() const { return std::pow(scale, 1.0 - n) * M1; }
};

TensorProfile strip_tensor(double eps, double eta, double delta_scale, int n);

/// The profile t -> |u(t)|^q * t^e with analytic derivative (chain rule on
/// the pieces); jump magnitudes map through the same function.
Profile abs_pow_times_power(const Profile& u, double q, double e);

/// Parse a family id with parameters (CLI surface).  Valid ids: power,
/// annulus, mollified-annulus, shell, sixpiece, sobolev-U, morrey-V, brv,
/// bump, tent, cheeger.  strip-tensor is handled separately.
Profile make_profile(const std::string& family,
                     const std::vector<std::pair<std::string, double>>& params);

} // namespace hardylab
