#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/numeric.hpp"

namespace hardylab {

using Point = std::vector<double>;

enum class DomainKind : std::uint8_t {
    Interval,       ///< (0, L) in R
    Ball,           ///< B_R(0) in R^n
    Slab,           ///< {0 < x_n < 2R} in R^n
    PuncturedSpace, ///< R^n \ {0}
    PuncturedBall,  ///< B_R(0) \ {0}
    Square          ///< (0, a)^2 in R^2
};

/// A canonical geometry with closed-form distance to the complement.
class Domain {
public:
    static Domain interval(double L);
    static Domain ball(int n, double R);
    static Domain slab(int n, double R);
    static Domain punctured_space(int n);
    static Domain punctured_ball(int n, double R);
    static Domain square(double a);

    /// Parse a catalog id ("interval", "ball", "slab", "punctured-space",
    /// "punctured-ball", "square") with its size parameter.
    static Domain from_id(const std::string& id, int n, double size);

    DomainKind kind() const { return kind_; }
    int dim() const { return n_; }
    /// L, R, or a depending on kind; meaningless for punctured space.
    double size() const { return size_; }
    std::string id() const;

    bool contains(const Point& x) const;

    /// Distance from x to R^n \ Omega.  Throws DomainError for x outside.
    double dist(const Point& x) const;

    /// Gradient of the distance, defined off the ridge set.
    Point grad_dist(const Point& x) const;

    /// Distance from x to the ridge set Sigma (where d is not differentiable).
    double ridge_distance(const Point& x) const;

    /// Absolutely continuous part of -Laplacian(d) at x; throws DomainError
    /// on the ridge set.
    double neg_laplacian_dist_ac(const Point& x) const;

    /// sup_x d(x); infinite for the punctured space.
    double inner_radius() const;

    /// Reach of the closure of Omega (catalog constant).
    double reach() const;

    /// Reach of R^n \ Omega (catalog constant; 0 for the square, whose
    /// complement loses positive reach at the corners).
    double complement_reach() const;

    /// Infimum of the boundary mean curvature, when the boundary is smooth
    /// enough for it to be defined (flat pieces count as zero).
    std::optional<double> mean_curvature_inf() const;
    /// Boundary average of the mean curvature (equals the infimum on the catalog).
    std::optional<double> mean_curvature_avg() const;
    /// Principal curvatures of the smooth boundary stratum.
    std::vector<double> principal_curvatures() const;

private:
    Domain(DomainKind k, int n, double size);
    void check_dim(const Point& x) const;

    DomainKind kind_;
    int n_;
    double size_;
};

/// A smooth nonnegative bump compactly supported in the ball of the given
/// radius around the centre.
struct Bump {
    Point center;
    double radius = 1.0;

    double value(const Point& x) const;
    Point gradient(const Point& x) const;
};

struct PairCheckReport {
    int samples = 0;
    int lipschitz_violations = 0;
    int gradient_checked = 0;
    int gradient_violations = 0;
    bool pass() const { return lipschitz_violations == 0 && gradient_violations == 0; }
};

/// Random-pair Lipschitz bound |d(x)-d(y)| <= |x-y| plus |grad d| = 1 by
/// central differences at points safely off the ridge set.
PairCheckReport lipschitz_and_gradient_check(const Domain& dom, int n_pairs,
                                             std::uint64_t seed = 1);

struct BumpPairing {
    Estimate value; ///< integral of grad d . grad phi
    bool nonnegative = false;
};

/// Distributional pairing of -Laplacian(d) with each bump, computed as the
/// integral of grad d . grad phi (never by differentiating d twice).
std::vector<BumpPairing> condition_C_check(const Domain& dom, const std::vector<Bump>& bumps,
                                           double tol = 1e-8, int cells_per_axis = 24,
                                           int gauss_order = 8);

struct SemiconcavityReport {
    int samples = 0;
    int violations = 0;
    double worst = 0.0; ///< most negative midpoint-convexity gap seen
    bool pass() const { return violations == 0; }
};

/// Midpoint convexity of C|x|^2/2 - d(x) on triples (x+z, x-z, x) inside the
/// ball B.  Requires C >= 1/dist(B, boundary).
SemiconcavityReport semiconcavity_check(const Domain& dom, const Point& ball_center,
                                        double ball_radius, double C, int n_samples,
                                        std::uint64_t seed = 1, bool enforce_admissible = true);

double reach_data(const Domain& dom);

enum class ReachBoundStatus : std::uint8_t { Pass, Fail, Vacuous };

struct ReachBoundReport {
    ReachBoundStatus status = ReachBoundStatus::Vacuous;
    int samples = 0;
    int violations = 0;
    double worst = 0.0;
};

/// Pointwise check of (d + h) * (-Laplacian d)_ac >= -(n-1) at random samples
/// off the ridge set; vacuous when h is infinite.
ReachBoundReport reach_bound_check(const Domain& dom, double h, int n_samples,
                                   std::uint64_t seed = 1);

/// Average of (-Laplacian d)_ac over the shell {d < delta}.
Estimate curvature_quotient(const Domain& dom, double delta,
                            const QuadratureConfig& cfg = {});

struct CheegerQuotient {
    double ratio = 0.0;   ///< exact |boundary(w)| / |w|
    double leading = 0.0; ///< leading term as the free dimension grows
};

/// Isoperimetric ratio of a concentric ball (in Ball) of radius r, or of a
/// truncated box of half-height t and side A (in Slab).
CheegerQuotient cheeger_quotient(const Domain& dom, double r_or_t, double slab_side = 0.0);

} // namespace hardylab
