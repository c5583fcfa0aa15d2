#include "hardylab/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "hardylab/logweight.hpp"

namespace hardylab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double Weight::operator()(double t) const {
    double v = std::pow(t, power);
    if (xpow != 0.0) v *= eval_X_pow(t, D, xpow);
    return v;
}

double CoAreaMap::surface(double t) const {
    double s = 0;
    for (const auto& term : terms) s += std::pow(t, term.power) * term.smooth(t);
    return s;
}

CoAreaMap coarea_map(const Domain& dom, ProfileVariable var) {
    const int n = dom.dim();
    const double area = unit_sphere_area(n);
    // The punctured space's boundary distance is the distance to the origin.
    if (dom.kind() == DomainKind::PuncturedSpace && var == ProfileVariable::RadialBoundary)
        var = ProfileVariable::RadialOrigin;
    CoAreaMap m;
    switch (dom.kind()) {
        case DomainKind::Interval:
            if (var == ProfileVariable::RadialBoundary) {
                m = {0.0, 0.5 * dom.size(), {{0.0, [](double) { return 2.0; }}}};
            } else {
                m = {0.0, dom.size(), {{0.0, [](double) { return 1.0; }}}};
            }
            return m;
        case DomainKind::Ball: {
            double R = dom.size();
            if (var == ProfileVariable::RadialOrigin) {
                m = {0.0, R, {{n - 1.0, [area](double) { return area; }}}};
            } else if (var == ProfileVariable::RadialBoundary) {
                int nn = n;
                m = {0.0, R, {{0.0, [area, R, nn](double t) {
                                   return area * std::pow(R - t, nn - 1.0);
                               }}}};
            } else {
                throw ParameterError("coarea_map: axial profiles are not defined on balls");
            }
            return m;
        }
        case DomainKind::PuncturedSpace:
            m = {0.0, kInf, {{n - 1.0, [area](double) { return area; }}}};
            return m;
        case DomainKind::PuncturedBall: {
            double R = dom.size();
            if (var == ProfileVariable::RadialOrigin) {
                m = {0.0, R, {{n - 1.0, [area](double) { return area; }}}};
            } else {
                int nn = n;
                m = {0.0, 0.5 * R,
                     {{n - 1.0, [area](double) { return area; }},
                      {0.0, [area, R, nn](double t) {
                           return area * std::pow(R - t, nn - 1.0);
                       }}}};
            }
            return m;
        }
        case DomainKind::Square: {
            if (var != ProfileVariable::RadialBoundary)
                throw ParameterError("coarea_map: the square supports boundary profiles only");
            double a = dom.size();
            m = {0.0, 0.5 * a, {{0.0, [a](double t) { return 4.0 * (a - 2.0 * t); }}}};
            return m;
        }
        case DomainKind::Slab:
            throw ParameterError(
                "coarea_map: slab integrals use the tensor reduction (slab_*_integral)");
    }
    throw ParameterError("coarea_map: unsupported domain");
}

namespace {

struct PieceIntegrand {
    const ProfilePiece* piece;
    bool grad;
    double p;
};

double piece_fn(const PieceIntegrand& pi, double t) {
    double g = pi.grad ? pi.piece->deriv(t) : pi.piece->value(t);
    return std::pow(std::abs(g), pi.p);
}

Estimate integrate_piece_term(const PieceIntegrand& pi, const SurfaceTerm& term,
                              const Weight& w, double a, double b,
                              const QuadratureConfig& cfg) {
    if (!(b > a)) return {0, 0};
    if (a == 0.0) {
        const ZeroForm* zf =
            pi.piece->zero_form ? &*pi.piece->zero_form : nullptr;
        double upow = 0.0;
        Fn1D usmooth;
        if (zf) {
            upow = pi.grad ? zf->deriv_power : zf->value_power;
            usmooth = pi.grad ? zf->deriv_smooth : zf->value_smooth;
        } else {
            usmooth = [pi](double t) { return pi.grad ? pi.piece->deriv(t) : pi.piece->value(t); };
        }
        double alpha = pi.p * upow + w.power + term.power;
        if (alpha < -1.0 || (alpha == -1.0 && w.xpow <= 1.0))
            throw DivergenceError(
                "weighted_integral: non-integrable endpoint exponent " +
                std::to_string(alpha) + " (profile " + std::to_string(pi.p * upow) +
                ", weight " + std::to_string(w.power) + ", surface " +
                std::to_string(term.power) + ")");
        bool need_subst = cfg.endpoint_substitution && (alpha < -0.125 || w.xpow != 0.0);
        if (need_subst && !zf && upow != 0.0)
            need_subst = false; // no factored form; fall through to direct quadrature
        if (need_subst) {
            double pp = pi.p;
            auto sm = term.smooth;
            Fn1D us = usmooth;
            auto rest = [pp, us, sm](double t) {
                return std::pow(std::abs(us(t)), pp) * sm(t);
            };
            return integrate_power_log_zero(alpha, w.xpow, w.D, rest, b, cfg);
        }
    }
    auto f = [&](double t) {
        return piece_fn(pi, t) * w(t) * std::pow(t, term.power) * term.smooth(t);
    };
    if (!std::isfinite(b)) {
        // near part directly, far tail through the inversion t = 1/tau
        double cut = std::max(8.0 * a, 8.0);
        Estimate total = integrate(f, a, cut, cfg);
        auto g = [&f](double tau) { return f(1.0 / tau) / (tau * tau); };
        total += integrate(g, 0.0, 1.0 / cut, cfg);
        return total;
    }
    return integrate(f, a, b, cfg);
}

} // namespace

Estimate weighted_integral(const Profile& u, const Domain& dom, const FunctionalSpec& spec,
                           const QuadratureConfig& cfg) {
    const bool grad = spec.kind == FunctionalKind::GradWeighted;
    if (grad && spec.p != 1.0 && u.has_jumps())
        throw ParameterError(
            "weighted_integral: jump profiles admit gradient functionals for p = 1 only");
    CoAreaMap map = coarea_map(dom, u.variable());
    Estimate total{0, 0};
    for (const auto& piece : u.pieces()) {
        double a = std::max(piece.lo, map.lo);
        double b = std::min(piece.hi, map.hi);
        if (!(b > a)) continue;
        QuadratureConfig piece_cfg = cfg;
        if (piece.numeric) {
            // the evaluator is a quadrature itself; asking for more than its
            // own noise floor would stall the refinement
            piece_cfg.rel_tol = std::max(cfg.rel_tol, 1e-7);
            piece_cfg.abs_tol = std::max(cfg.abs_tol, 1e-12);
        }
        PieceIntegrand pi{&piece, grad, spec.p};
        for (const auto& term : map.terms)
            total += integrate_piece_term(pi, term, spec.weight, a, b, piece_cfg);
    }
    if (grad) {
        for (const auto& j : u.jumps()) {
            if (j.location <= map.lo || j.location >= map.hi) continue;
            double surf = map.surface(j.location);
            double mag = std::pow(std::abs(j.magnitude), spec.p);
            total += Estimate{mag * spec.weight(j.location) * surf, 0.0};
        }
    }
    return total;
}

Estimate quotient(const QuotientSpec& spec, const Profile& u, const Domain& dom,
                  const QuadratureConfig& cfg) {
    Estimate num = weighted_integral(u, dom, spec.numerator, cfg);
    Estimate den = weighted_integral(u, dom, spec.denominator, cfg);
    if (std::abs(den.value) <= cfg.abs_tol)
        throw NumericError("quotient: degenerate denominator", den.error);
    return divide(num, den);
}

Estimate neg_laplacian_pairing(const Profile& g, const Domain& dom,
                               const QuadratureConfig& cfg) {
    if (g.variable() != ProfileVariable::RadialBoundary)
        throw ParameterError("neg_laplacian_pairing: profile must live in the boundary distance");
    double boundary_measure = 0;
    switch (dom.kind()) {
        case DomainKind::Ball:
            boundary_measure = unit_sphere_area(dom.dim()) * std::pow(dom.size(), dom.dim() - 1);
            break;
        case DomainKind::Interval:
            boundary_measure = 2.0;
            break;
        case DomainKind::Square:
            boundary_measure = 4.0 * dom.size();
            break;
        default:
            throw ParameterError(
                "neg_laplacian_pairing: supported on bounded mean-convex domains "
                "(ball, interval, square)");
    }
    // <-Laplacian d, g(d)> = integral of g'(d) over the domain + g(0+)|boundary|
    CoAreaMap map = coarea_map(dom, ProfileVariable::RadialBoundary);
    Estimate total{0, 0};
    for (const auto& piece : g.pieces()) {
        double a = std::max(piece.lo, map.lo);
        double b = std::min(piece.hi, map.hi);
        if (!(b > a)) continue;
        // signed derivative here, not |g'|
        for (const auto& term : map.terms) {
            if (a == 0.0 && piece.zero_form) {
                const ZeroForm& zf = *piece.zero_form;
                double alpha = zf.deriv_power + term.power;
                if (alpha <= -1.0)
                    throw DivergenceError("neg_laplacian_pairing: divergent derivative exponent");
                auto ds = zf.deriv_smooth;
                auto sm = term.smooth;
                auto rest = [ds, sm](double t) { return ds(t) * sm(t); };
                total += integrate_power_log_zero(alpha, 0.0, 1.0, rest, b, cfg);
            } else {
                auto f = [&](double t) {
                    return piece.deriv(t) * std::pow(t, term.power) * term.smooth(t);
                };
                total += integrate(f, a, b, cfg);
            }
        }
    }
    // g(0+) from the factored form when available
    double g0 = 0.0;
    if (!g.pieces().empty() && g.pieces().front().lo == 0.0) {
        const auto& p0 = g.pieces().front();
        if (p0.zero_form) {
            if (p0.zero_form->value_power > 0)
                g0 = 0.0;
            else if (p0.zero_form->value_power == 0.0)
                g0 = p0.zero_form->value_smooth(0.0);
            else
                throw ParameterError("neg_laplacian_pairing: g must stay bounded at the boundary");
        } else {
            g0 = p0.value(1e-12);
        }
    }
    total += Estimate{g0 * boundary_measure, 0.0};
    return total;
}

namespace {

std::vector<double> sample_grid(const Profile& u, double lo, double hi, int per_gap) {
    std::vector<double> cuts;
    for (double b : u.breakpoints())
        if (b > lo && b < hi && std::isfinite(b)) cuts.push_back(b);
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> grid;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        if (!(b > a)) continue;
        bool log_spaced = a > 0 && b / a > 4.0;
        for (int k = 0; k <= per_gap; ++k) {
            double t;
            if (log_spaced) {
                t = a * std::pow(b / a, static_cast<double>(k) / per_gap);
            } else {
                t = a + (b - a) * static_cast<double>(k) / per_gap;
            }
            grid.push_back(t);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace

double anchored_weighted_value(const Profile& u, double x, const SupSpec& tau) {
    double v = std::abs(u.value(x)) * std::pow(x, tau.power);
    if (tau.xpow != 0.0) v *= eval_X_pow(x, tau.D, tau.xpow);
    return v;
}

SupResult sup_quotient(const Profile& u, const Domain& dom, const SupSpec& tau, double lo,
                       double hi) {
    double a = std::max(lo, u.support_lo());
    double b = (hi > 0) ? hi : u.support_hi();
    if (u.variable() != ProfileVariable::Axial) {
        CoAreaMap map = coarea_map(dom, u.variable());
        a = std::max(a, map.lo);
        b = std::min(b, map.hi);
    }
    if (!std::isfinite(b)) {
        double last = 1.0;
        for (double bp : u.breakpoints())
            if (std::isfinite(bp)) last = std::max(last, bp);
        b = 8.0 * last;
    }
    if (a <= 0) a = std::max(a, 1e-300);
    SupResult res;
    double prev = -1.0;
    for (int per_gap = 64; per_gap <= 4096; per_gap *= 2) {
        auto grid = sample_grid(u, a, b, per_gap);
        double best = 0, arg = a;
        for (double t : grid) {
            double v = anchored_weighted_value(u, t, tau);
            if (v > best) {
                best = v;
                arg = t;
            }
        }
        res.value = best;
        res.arg = arg;
        if (prev >= 0 && std::abs(best - prev) <= 1e-6 * std::max(best, 1e-300)) {
            res.converged = true;
            break;
        }
        prev = best;
    }
    return res;
}

SupResult holder_quotient(const Profile& u, const Domain& dom, const HolderSpec& spec) {
    CoAreaMap map = coarea_map(dom, u.variable());
    // sample the whole domain range (the profile is zero outside its support,
    // and those differences count toward the seminorm)
    double a = map.lo;
    double b = map.hi;
    if (!std::isfinite(b)) b = 2.0 * u.support_hi();
    if (!std::isfinite(b)) b = 8.0;
    if (a <= 0) a = std::max(a, 1e-14);
    // Antipodal separation for a pair of radii/distances, when the geometry
    // provides one.
    auto antipodal = [&](double t1, double t2) -> double {
        switch (dom.kind()) {
            case DomainKind::Ball:
                return u.variable() == ProfileVariable::RadialOrigin
                           ? t1 + t2
                           : 2.0 * dom.size() - t1 - t2;
            case DomainKind::PuncturedSpace:
            case DomainKind::PuncturedBall:
                return t1 + t2;
            case DomainKind::Interval:
                return u.variable() == ProfileVariable::RadialBoundary
                           ? std::abs(dom.size() - t1 - t2)
                           : -1.0;
            default:
                return -1.0;
        }
    };
    SupResult res;
    double prev = -1.0;
    for (int per_gap = 24; per_gap <= 192; per_gap *= 2) {
        auto grid = sample_grid(u, a, b, per_gap);
        double best = 0, argh = 0;
        auto consider = [&](double v1, double v2, double h) {
            if (!(h > 0)) return;
            double den = std::pow(h, spec.exponent);
            double num = std::abs(v1 - v2);
            if (spec.xpow != 0.0) {
                if (h > spec.D) return; // outside the weight's range
                num *= eval_X_pow(h, spec.D, spec.xpow);
            }
            double q = num / den;
            if (q > best) {
                best = q;
                argh = h;
            }
        };
        for (size_t i = 0; i < grid.size(); ++i) {
            double vi = u.value(grid[i]);
            for (size_t j = i + 1; j < grid.size(); ++j) {
                double vj = u.value(grid[j]);
                consider(vi, vj, grid[j] - grid[i]);
                double h2 = antipodal(grid[i], grid[j]);
                if (h2 > 0) consider(vi, vj, h2);
            }
        }
        res.value = best;
        res.arg = argh;
        if (prev >= 0 && std::abs(best - prev) <= 1e-4 * std::max(best, 1e-300)) {
            res.converged = true;
            break;
        }
        prev = best;
    }
    return res;
}

Estimate slab_value_integral(const TensorProfile& tp, const Weight& w, double p,
                             const QuadratureConfig& cfg) {
    if (p != 1.0)
        throw ParameterError("slab_value_integral: the tensor reduction is an L1 computation");
    auto f = [&](double x) { return w(x); };
    Estimate base = integrate(f, tp.eps(), tp.eta(), cfg);
    return base * tp.Md();
}

Estimate slab_grad_integral(const TensorProfile& tp, const Weight& w,
                            const QuadratureConfig& cfg) {
    auto f = [&](double x) { return w(x); };
    Estimate base = integrate(f, tp.eps(), tp.eta(), cfg) * tp.Kd();
    base += Estimate{tp.Md() * (w(tp.eps()) + w(tp.eta())), 0.0};
    return base;
}

} // namespace hardylab
