#include "hardylab/domains.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hardylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm(const Point& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

} // namespace

Domain::Domain(DomainKind k, int n, double size) : kind_(k), n_(n), size_(size) {
    if (n_ < 1) throw ParameterError("domain: dimension must be >= 1");
    if (kind_ != DomainKind::PuncturedSpace && !(size_ > 0))
        throw ParameterError("domain: size parameter must be positive");
    if (kind_ == DomainKind::Interval && n_ != 1)
        throw ParameterError("interval: dimension is 1");
    if (kind_ == DomainKind::Square && n_ != 2)
        throw ParameterError("square: dimension is 2");
}

Domain Domain::interval(double L) { return Domain(DomainKind::Interval, 1, L); }
Domain Domain::ball(int n, double R) { return Domain(DomainKind::Ball, n, R); }
Domain Domain::slab(int n, double R) { return Domain(DomainKind::Slab, n, R); }
Domain Domain::punctured_space(int n) { return Domain(DomainKind::PuncturedSpace, n, 0.0); }
Domain Domain::punctured_ball(int n, double R) { return Domain(DomainKind::PuncturedBall, n, R); }
Domain Domain::square(double a) { return Domain(DomainKind::Square, 2, a); }

Domain Domain::from_id(const std::string& id, int n, double size) {
    if (id == "interval") return interval(size);
    if (id == "ball") return ball(n, size);
    if (id == "slab") return slab(n, size);
    if (id == "punctured-space") return punctured_space(n);
    if (id == "punctured-ball") return punctured_ball(n, size);
    if (id == "square") return square(size);
    throw ParameterError("unknown domain id '" + id +
                         "' (valid: interval, ball, slab, punctured-space, punctured-ball, square)");
}

std::string Domain::id() const {
    switch (kind_) {
        case DomainKind::Interval: return "interval";
        case DomainKind::Ball: return "ball";
        case DomainKind::Slab: return "slab";
        case DomainKind::PuncturedSpace: return "punctured-space";
        case DomainKind::PuncturedBall: return "punctured-ball";
        case DomainKind::Square: return "square";
    }
    return "?";
}

void Domain::check_dim(const Point& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw ParameterError("point dimension mismatch: expected " + std::to_string(n_));
}

bool Domain::contains(const Point& x) const {
    check_dim(x);
    switch (kind_) {
        case DomainKind::Interval: return x[0] > 0 && x[0] < size_;
        case DomainKind::Ball: return norm(x) < size_;
        case DomainKind::Slab: return x[n_ - 1] > 0 && x[n_ - 1] < 2 * size_;
        case DomainKind::PuncturedSpace: return norm(x) > 0;
        case DomainKind::PuncturedBall: {
            double r = norm(x);
            return r > 0 && r < size_;
        }
        case DomainKind::Square:
            return x[0] > 0 && x[0] < size_ && x[1] > 0 && x[1] < size_;
    }
    return false;
}

double Domain::dist(const Point& x) const {
    if (!contains(x)) throw DomainError("dist: point outside " + id());
    switch (kind_) {
        case DomainKind::Interval: return std::min(x[0], size_ - x[0]);
        case DomainKind::Ball: return size_ - norm(x);
        case DomainKind::Slab: return std::min(x[n_ - 1], 2 * size_ - x[n_ - 1]);
        case DomainKind::PuncturedSpace: return norm(x);
        case DomainKind::PuncturedBall: {
            double r = norm(x);
            return std::min(r, size_ - r);
        }
        case DomainKind::Square:
            return std::min(std::min(x[0], size_ - x[0]), std::min(x[1], size_ - x[1]));
    }
    return 0;
}

Point Domain::grad_dist(const Point& x) const {
    if (!contains(x)) throw DomainError("grad_dist: point outside " + id());
    Point g(n_, 0.0);
    switch (kind_) {
        case DomainKind::Interval:
            g[0] = (x[0] < size_ - x[0]) ? 1.0 : -1.0;
            break;
        case DomainKind::Ball: {
            double r = norm(x);
            for (int i = 0; i < n_; ++i) g[i] = -x[i] / r;
            break;
        }
        case DomainKind::Slab:
            g[n_ - 1] = (x[n_ - 1] < size_) ? 1.0 : -1.0;
            break;
        case DomainKind::PuncturedSpace: {
            double r = norm(x);
            for (int i = 0; i < n_; ++i) g[i] = x[i] / r;
            break;
        }
        case DomainKind::PuncturedBall: {
            double r = norm(x);
            double sign = (r < size_ - r) ? 1.0 : -1.0;
            for (int i = 0; i < n_; ++i) g[i] = sign * x[i] / r;
            break;
        }
        case DomainKind::Square: {
            double m = dist(x);
            if (m == x[0]) g = {1.0, 0.0};
            else if (m == size_ - x[0]) g = {-1.0, 0.0};
            else if (m == x[1]) g = {0.0, 1.0};
            else g = {0.0, -1.0};
            break;
        }
    }
    return g;
}

double Domain::ridge_distance(const Point& x) const {
    check_dim(x);
    switch (kind_) {
        case DomainKind::Interval: return std::abs(x[0] - 0.5 * size_);
        case DomainKind::Ball: return norm(x); // ridge = centre
        case DomainKind::Slab: return std::abs(x[n_ - 1] - size_);
        case DomainKind::PuncturedSpace: return kInf; // d = |x| smooth on the domain
        case DomainKind::PuncturedBall: return std::abs(norm(x) - 0.5 * size_);
        case DomainKind::Square: {
            // ridge = both diagonals
            double d1 = std::abs(x[1] - x[0]) / std::sqrt(2.0);
            double d2 = std::abs(x[0] + x[1] - size_) / std::sqrt(2.0);
            return std::min(d1, d2);
        }
    }
    return kInf;
}

double Domain::neg_laplacian_dist_ac(const Point& x) const {
    if (!contains(x)) throw DomainError("neg_laplacian_dist_ac: point outside " + id());
    if (ridge_distance(x) == 0.0)
        throw DomainError("neg_laplacian_dist_ac: point on the ridge set");
    switch (kind_) {
        case DomainKind::Interval:
        case DomainKind::Slab:
        case DomainKind::Square:
            return 0.0;
        case DomainKind::Ball: {
            double r = norm(x);
            return (n_ - 1) / r; // = (n-1)/(R - d)
        }
        case DomainKind::PuncturedSpace:
            return -(n_ - 1) / norm(x);
        case DomainKind::PuncturedBall: {
            double r = norm(x);
            return (r < size_ - r) ? -(n_ - 1) / r : (n_ - 1) / r;
        }
    }
    return 0;
}

double Domain::inner_radius() const {
    switch (kind_) {
        case DomainKind::Interval: return 0.5 * size_;
        case DomainKind::Ball: return size_;
        case DomainKind::Slab: return size_;
        case DomainKind::PuncturedSpace: return kInf;
        case DomainKind::PuncturedBall: return 0.5 * size_;
        case DomainKind::Square: return 0.5 * size_;
    }
    return 0;
}

double Domain::reach() const {
    switch (kind_) {
        case DomainKind::Interval:
        case DomainKind::Ball:
        case DomainKind::Slab:
        case DomainKind::Square:
            return kInf; // convex closures
        case DomainKind::PuncturedSpace:
        case DomainKind::PuncturedBall:
            return 0.0; // the closure fills the puncture back in
    }
    return 0;
}

double Domain::complement_reach() const {
    switch (kind_) {
        case DomainKind::Interval: return 0.5 * size_;
        case DomainKind::Ball: return size_;
        case DomainKind::Slab: return size_;
        case DomainKind::Square: return 0.0; // corners
        case DomainKind::PuncturedSpace: return kInf;
        case DomainKind::PuncturedBall: return 0.5 * size_;
    }
    return 0;
}

std::optional<double> Domain::mean_curvature_inf() const {
    switch (kind_) {
        case DomainKind::Interval:
        case DomainKind::Slab:
        case DomainKind::Square:
            return 0.0;
        case DomainKind::Ball:
            return 1.0 / size_;
        case DomainKind::PuncturedSpace:
        case DomainKind::PuncturedBall:
            return std::nullopt; // boundary contains the puncture point
    }
    return std::nullopt;
}

std::optional<double> Domain::mean_curvature_avg() const { return mean_curvature_inf(); }

std::vector<double> Domain::principal_curvatures() const {
    std::vector<double> k;
    if (n_ < 2) return k;
    switch (kind_) {
        case DomainKind::Ball:
            k.assign(n_ - 1, 1.0 / size_);
            break;
        case DomainKind::Slab:
        case DomainKind::Square:
            k.assign(n_ - 1, 0.0);
            break;
        default:
            break;
    }
    return k;
}

double Bump::value(const Point& x) const {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double d = (x[i] - center[i]) / radius;
        s += d * d;
    }
    return bump_profile(std::sqrt(s));
}

Point Bump::gradient(const Point& x) const {
    Point g(x.size(), 0.0);
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double d = (x[i] - center[i]) / radius;
        s += d * d;
    }
    double r = std::sqrt(s);
    if (r >= 1.0 || r == 0.0) return g;
    double dp = bump_profile_deriv(r);
    for (size_t i = 0; i < x.size(); ++i)
        g[i] = dp * (x[i] - center[i]) / (r * radius * radius);
    return g;
}

namespace {

Point random_interior_point(const Domain& dom, std::mt19937_64& rng) {
    const int n = dom.dim();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int tries = 0; tries < 10000; ++tries) {
        Point x(n);
        switch (dom.kind()) {
            case DomainKind::Interval:
                x[0] = unit(rng) * dom.size();
                break;
            case DomainKind::Ball:
            case DomainKind::PuncturedBall:
                for (int i = 0; i < n; ++i) x[i] = (2 * unit(rng) - 1) * dom.size();
                break;
            case DomainKind::Slab:
                for (int i = 0; i + 1 < n; ++i) x[i] = (2 * unit(rng) - 1) * dom.size();
                x[n - 1] = unit(rng) * 2 * dom.size();
                break;
            case DomainKind::PuncturedSpace:
                for (int i = 0; i < n; ++i) x[i] = 2 * unit(rng) - 1;
                break;
            case DomainKind::Square:
                x[0] = unit(rng) * dom.size();
                x[1] = unit(rng) * dom.size();
                break;
        }
        if (dom.contains(x)) return x;
    }
    throw NumericError("random_interior_point: rejection sampling failed");
}

} // namespace

PairCheckReport lipschitz_and_gradient_check(const Domain& dom, int n_pairs,
                                             std::uint64_t seed) {
    PairCheckReport rep;
    std::mt19937_64 rng(seed);
    const int n = dom.dim();
    const double h = 1e-6 * std::max(1.0, dom.kind() == DomainKind::PuncturedSpace
                                              ? 1.0
                                              : dom.size());
    for (int k = 0; k < n_pairs; ++k) {
        Point x = random_interior_point(dom, rng);
        Point y = random_interior_point(dom, rng);
        ++rep.samples;
        double lhs = std::abs(dom.dist(x) - dom.dist(y));
        double rhs = 0;
        for (int i = 0; i < n; ++i) rhs += (x[i] - y[i]) * (x[i] - y[i]);
        rhs = std::sqrt(rhs);
        if (lhs > rhs * (1.0 + 1e-12) + 1e-15) ++rep.lipschitz_violations;

        // central-difference |grad d| at x, skipped near the ridge set and
        // too close to the boundary for the stencil
        if (dom.ridge_distance(x) > 8 * h && dom.dist(x) > 8 * h) {
            double g2 = 0;
            for (int i = 0; i < n; ++i) {
                Point xp = x, xm = x;
                xp[i] += h;
                xm[i] -= h;
                double gi = (dom.dist(xp) - dom.dist(xm)) / (2 * h);
                g2 += gi * gi;
            }
            ++rep.gradient_checked;
            if (std::abs(std::sqrt(g2) - 1.0) > 1e-6) ++rep.gradient_violations;
        }
    }
    return rep;
}

namespace {

// Tensor-product Gauss quadrature of grad d . grad phi over the bump's
// bounding box.  The integrand is piecewise smooth (kinks across the ridge
// set only), so fixed subdivision converges fast enough for sign checks.
Estimate pairing_quadrature(const Domain& dom, const Bump& bump, int cells, int order) {
    const int n = dom.dim();
    const auto& gn = gauss_nodes(order);
    const auto& gw = gauss_weights(order);
    double lo[3], hi[3];
    for (int i = 0; i < n; ++i) {
        lo[i] = bump.center[i] - bump.radius;
        hi[i] = bump.center[i] + bump.radius;
    }
    double cell[3];
    for (int i = 0; i < n; ++i) cell[i] = (hi[i] - lo[i]) / cells;

    auto integrand = [&](const Point& x) -> double {
        if (!dom.contains(x)) return 0.0;
        Point gd = dom.grad_dist(x);
        Point gp = bump.gradient(x);
        double s = 0;
        for (int i = 0; i < n; ++i) s += gd[i] * gp[i];
        return s;
    };

    double coarse = 0.0, fine = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        int c = (pass == 0) ? cells : 2 * cells;
        double dcell[3];
        for (int i = 0; i < n; ++i) dcell[i] = (hi[i] - lo[i]) / c;
        double sum = 0.0;
        std::vector<int> idx(n, 0);
        bool done = false;
        while (!done) {
            double base[3];
            for (int i = 0; i < n; ++i) base[i] = lo[i] + idx[i] * dcell[i];
            // Gauss grid on this cell
            std::vector<int> q(n, 0);
            bool qdone = false;
            while (!qdone) {
                Point x(n);
                double w = 1.0;
                for (int i = 0; i < n; ++i) {
                    x[i] = base[i] + 0.5 * dcell[i] * (gn[q[i]] + 1.0);
                    w *= 0.5 * dcell[i] * gw[q[i]];
                }
                sum += w * integrand(x);
                int i = 0;
                while (i < n && ++q[i] == order) q[i++] = 0;
                qdone = (i == n);
            }
            int i = 0;
            while (i < n && ++idx[i] == c) idx[i++] = 0;
            done = (i == n);
        }
        (pass == 0 ? coarse : fine) = sum;
    }
    (void)cell;
    return {fine, std::abs(fine - coarse)};
}

} // namespace

std::vector<BumpPairing> condition_C_check(const Domain& dom, const std::vector<Bump>& bumps,
                                           double tol, int cells_per_axis, int gauss_order) {
    if (dom.dim() > 3)
        throw ParameterError("condition_C_check: tensor quadrature supports n <= 3");
    std::vector<BumpPairing> out;
    out.reserve(bumps.size());
    for (const Bump& b : bumps) {
        if (static_cast<int>(b.center.size()) != dom.dim())
            throw ParameterError("bump centre dimension mismatch");
        if (!dom.contains(b.center) || dom.dist(b.center) <= b.radius)
            throw ParameterError("bump support not compactly inside the domain");
        if ((dom.kind() == DomainKind::PuncturedSpace ||
             dom.kind() == DomainKind::PuncturedBall)) {
            double r0 = 0;
            for (double v : b.center) r0 += v * v;
            if (std::sqrt(r0) <= b.radius)
                throw ParameterError("bump support must avoid the puncture");
        }
        BumpPairing p;
        p.value = pairing_quadrature(dom, b, cells_per_axis, gauss_order);
        double scale = std::max(1.0, std::abs(p.value.value));
        p.nonnegative = p.value.value >= -tol * scale - p.value.error;
        out.push_back(p);
    }
    return out;
}

SemiconcavityReport semiconcavity_check(const Domain& dom, const Point& ball_center,
                                        double ball_radius, double C, int n_samples,
                                        std::uint64_t seed, bool enforce_admissible) {
    if (!dom.contains(ball_center))
        throw ParameterError("semiconcavity_check: ball centre outside domain");
    double gap = dom.dist(ball_center) - ball_radius;
    if (enforce_admissible) {
        if (gap <= 0) throw ParameterError("semiconcavity_check: ball touches the boundary");
        if (C < 1.0 / gap - 1e-12)
            throw ParameterError("semiconcavity_check: C below 1/dist(B, boundary)");
    }

    SemiconcavityReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const int n = dom.dim();
    auto alpha = [&](const Point& x) {
        double r2 = 0;
        for (double v : x) r2 += v * v;
        return 0.5 * C * r2 - dom.dist(x);
    };
    while (rep.samples < n_samples) {
        Point x(n), z(n);
        double rx = 0, rz = 0;
        for (int i = 0; i < n; ++i) {
            x[i] = unit(rng) * ball_radius;
            z[i] = unit(rng) * ball_radius;
            rx += x[i] * x[i];
            rz += z[i] * z[i];
        }
        if (std::sqrt(rx) + std::sqrt(rz) >= ball_radius) continue;
        Point xp(n), xm(n);
        for (int i = 0; i < n; ++i) {
            x[i] += ball_center[i];
            xp[i] = x[i] + z[i];
            xm[i] = x[i] - z[i];
        }
        ++rep.samples;
        double gapv = alpha(xp) + alpha(xm) - 2 * alpha(x);
        if (gapv < -1e-10) {
            ++rep.violations;
            rep.worst = std::min(rep.worst, gapv);
        }
    }
    return rep;
}

double reach_data(const Domain& dom) { return dom.reach(); }

ReachBoundReport reach_bound_check(const Domain& dom, double h, int n_samples,
                                   std::uint64_t seed) {
    ReachBoundReport rep;
    if (std::isinf(h)) {
        rep.status = ReachBoundStatus::Vacuous;
        return rep;
    }
    std::mt19937_64 rng(seed);
    const double bound = -(dom.dim() - 1);
    while (rep.samples < n_samples) {
        Point x = random_interior_point(dom, rng);
        if (dom.ridge_distance(x) < 1e-9) continue;
        ++rep.samples;
        double v = (dom.dist(x) + h) * dom.neg_laplacian_dist_ac(x);
        if (v < bound - 1e-9) {
            ++rep.violations;
            rep.worst = std::min(rep.worst, v - bound);
        }
    }
    rep.status = rep.violations == 0 ? ReachBoundStatus::Pass : ReachBoundStatus::Fail;
    return rep;
}

Estimate curvature_quotient(const Domain& dom, double delta, const QuadratureConfig& cfg) {
    if (!(delta > 0) || delta >= dom.inner_radius())
        throw ParameterError("curvature_quotient: need 0 < delta < inner radius");
    const int n = dom.dim();
    const double area = unit_sphere_area(n);
    Estimate num{0, 0}, den{0, 0};
    switch (dom.kind()) {
        case DomainKind::Ball: {
            double R = dom.size();
            num = integrate([&](double r) { return area * (n - 1) * std::pow(r, n - 2); },
                            R - delta, R, cfg);
            den = integrate([&](double r) { return area * std::pow(r, n - 1); }, R - delta, R,
                            cfg);
            break;
        }
        case DomainKind::Interval:
            return {0.0, 0.0};
        case DomainKind::Slab:
        case DomainKind::Square:
            return {0.0, 0.0};
        case DomainKind::PuncturedBall: {
            double R = dom.size();
            num = integrate([&](double r) { return -area * (n - 1) * std::pow(r, n - 2); }, 0.0,
                            delta, cfg) +
                  integrate([&](double r) { return area * (n - 1) * std::pow(r, n - 2); },
                            R - delta, R, cfg);
            den = integrate([&](double r) { return area * std::pow(r, n - 1); }, 0.0, delta,
                            cfg) +
                  integrate([&](double r) { return area * std::pow(r, n - 1); }, R - delta, R,
                            cfg);
            break;
        }
        case DomainKind::PuncturedSpace: {
            num = integrate([&](double r) { return -area * (n - 1) * std::pow(r, n - 2); }, 0.0,
                            delta, cfg);
            den = integrate([&](double r) { return area * std::pow(r, n - 1); }, 0.0, delta,
                            cfg);
            break;
        }
    }
    return divide(num, den);
}

CheegerQuotient cheeger_quotient(const Domain& dom, double r_or_t, double slab_side) {
    CheegerQuotient q;
    const int n = dom.dim();
    switch (dom.kind()) {
        case DomainKind::Ball: {
            if (!(r_or_t > 0) || r_or_t >= dom.size())
                throw ParameterError("cheeger_quotient: ball radius must be strictly inside");
            q.ratio = static_cast<double>(n) / r_or_t;
            q.leading = q.ratio;
            return q;
        }
        case DomainKind::Slab: {
            double t = r_or_t, A = slab_side;
            if (!(t > 0) || t > dom.size())
                throw ParameterError("cheeger_quotient: half-height must satisfy 0 < t <= R");
            if (!(A > 0)) throw ParameterError("cheeger_quotient: slab box needs a side length");
            double vol = std::pow(A, n - 1) * 2 * t;
            double surf = 2 * std::pow(A, n - 1) + 2.0 * (n - 1) * std::pow(A, n - 2) * 2 * t;
            q.ratio = surf / vol;
            q.leading = 1.0 / t;
            return q;
        }
        default:
            throw ParameterError(
                "cheeger_quotient: only concentric balls (ball) and boxes (slab) are supported");
    }
}

} // namespace hardylab
