#include "hardylab/registry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

#include "hardylab/logweight.hpp"

namespace hardylab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double MarginInputs::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw ParameterError("missing parameter '" + key + "'");
    return it->second;
}

double MarginInputs::param_or(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

namespace {

FunctionalSpec grad_spec(double p, double wpow, double xpow = 0.0, double D = 1.0) {
    return {FunctionalKind::GradWeighted, p, {wpow, xpow, D}};
}

FunctionalSpec val_spec(double p, double wpow, double xpow = 0.0, double D = 1.0) {
    return {FunctionalKind::ValueWeighted, p, {wpow, xpow, D}};
}

Estimate pow_est(const Estimate& e, double expo) {
    double v = std::max(e.value, 0.0);
    double val = std::pow(v, expo);
    double err = (v > 0) ? std::abs(expo) * std::pow(v, expo - 1.0) * e.error : e.error;
    return {val, err};
}

MarginResult finish(Estimate lhs, Estimate rhs, std::string note = {}) {
    MarginResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs.value - rhs.value;
    r.err = lhs.error + rhs.error;
    double scale = std::max({1.0, std::abs(lhs.value), std::abs(rhs.value)});
    r.pass = r.margin >= -(r.err + 1e-12 * scale);
    r.note = std::move(note);
    return r;
}

const Profile& need_profile(const MarginInputs& in) {
    if (!in.profile) throw ParameterError("this inequality needs a radial/axial profile");
    return *in.profile;
}

const TensorProfile& need_tensor(const MarginInputs& in) {
    if (!in.tensor) throw ParameterError("this inequality needs a strip-tensor profile");
    return *in.tensor;
}

void require_condition_C(const Domain& dom, const std::string& id) {
    switch (dom.kind()) {
        case DomainKind::Interval:
        case DomainKind::Ball:
        case DomainKind::Slab:
        case DomainKind::Square:
            return;
        default:
            throw RegistryError(id + ": hypothesis violated: the domain must satisfy the "
                                     "distributional mean-convexity condition");
    }
}

void require_ball(const Domain& dom, const std::string& id) {
    if (dom.kind() != DomainKind::Ball)
        throw RegistryError(id + ": hypothesis violated: stated on balls only");
}

double finite_inner_radius(const Domain& dom, const std::string& id) {
    double R = dom.inner_radius();
    if (!std::isfinite(R))
        throw RegistryError(id + ": hypothesis violated: finite inner radius required");
    return R;
}

double domain_volume(const Domain& dom, const std::string& id) {
    switch (dom.kind()) {
        case DomainKind::Interval: return dom.size();
        case DomainKind::Ball:
        case DomainKind::PuncturedBall:
            return unit_ball_volume(dom.dim()) * std::pow(dom.size(), dom.dim());
        case DomainKind::Square: return dom.size() * dom.size();
        default:
            throw RegistryError(id + ": hypothesis violated: finite volume required");
    }
}

// Hardy differences (the dominating side of every p > n entry).
Estimate hardy_diff_origin(const Profile& u, const Domain& dom, double p, double s,
                           const QuadratureConfig& cfg) {
    double A0 = std::abs(s - dom.dim()) / p;
    Estimate grad = weighted_integral(u, dom, grad_spec(p, p - s), cfg);
    Estimate val = weighted_integral(u, dom, val_spec(p, -s), cfg);
    return grad - val * std::pow(A0, p);
}

Estimate hardy_diff_boundary(const Profile& u, const Domain& dom, double p, double s,
                             const QuadratureConfig& cfg) {
    double A0 = (s - 1.0) / p;
    Estimate grad = weighted_integral(u, dom, grad_spec(p, p - s), cfg);
    Estimate val = weighted_integral(u, dom, val_spec(p, -s), cfg);
    return grad - val * std::pow(A0, p);
}

// integral of |v|^{p-2} v'^2 * t * surface(t) over the domain (the mixed
// second-order side of the change-of-variables bounds).
Estimate mixed_cov_integral(const Profile& v, const Domain& dom, double p,
                            const QuadratureConfig& cfg) {
    CoAreaMap map = coarea_map(dom, v.variable());
    Estimate total{0, 0};
    for (const auto& piece : v.pieces()) {
        double a = std::max(piece.lo, map.lo);
        double b = std::min(piece.hi, map.hi);
        if (!(b > a)) continue;
        for (const auto& term : map.terms) {
            if (a == 0.0 && piece.zero_form) {
                const ZeroForm& z = *piece.zero_form;
                double alpha = (p - 2.0) * z.value_power + 2.0 * z.deriv_power + 1.0 +
                               term.power;
                if (alpha <= -1.0)
                    throw DivergenceError("mixed integral: divergent exponent " +
                                          std::to_string(alpha));
                auto vs = z.value_smooth;
                auto ds = z.deriv_smooth;
                auto sm = term.smooth;
                auto rest = [vs, ds, sm, p](double t) {
                    return std::pow(std::abs(vs(t)), p - 2.0) * ds(t) * ds(t) * sm(t);
                };
                total += integrate_power_log_zero(alpha, 0.0, 1.0, rest, b, cfg);
            } else {
                auto f = [&](double t) {
                    double vv = std::abs(piece.value(t));
                    double dv = piece.deriv(t);
                    return std::pow(vv, p - 2.0) * dv * dv * t * std::pow(t, term.power) *
                           term.smooth(t);
                };
                total += integrate(f, a, b, cfg);
            }
        }
    }
    return total;
}

// integral of t |grad v|^2 / (t |grad v| + A0 |v|)^{2-p} * surface(t); used by
// the 1 < p < 2 change-of-variables bounds (interior-supported profiles).
Estimate sub2_cov_integral(const Profile& v, const Domain& dom, double p, double A0,
                           const QuadratureConfig& cfg) {
    CoAreaMap map = coarea_map(dom, v.variable());
    Estimate total{0, 0};
    for (const auto& piece : v.pieces()) {
        double a = std::max(piece.lo, map.lo);
        double b = std::min(piece.hi, map.hi);
        if (!(b > a)) continue;
        if (a == 0.0)
            throw ParameterError(
                "the 1 < p < 2 change-of-variables check needs interior-supported profiles");
        for (const auto& term : map.terms) {
            auto f = [&](double t) {
                double dv = std::abs(piece.deriv(t));
                double vv = std::abs(piece.value(t));
                double den = t * dv + A0 * vv;
                if (den == 0.0) return 0.0;
                return t * dv * dv * std::pow(den, p - 2.0) * std::pow(t, term.power) *
                       term.smooth(t);
            };
            total += integrate(f, a, b, cfg);
        }
    }
    return total;
}

double sup_d(const Domain& dom) { return dom.inner_radius(); }

double domain_diameter(const Domain& dom) {
    switch (dom.kind()) {
        case DomainKind::Interval: return dom.size();
        case DomainKind::Ball:
        case DomainKind::PuncturedBall:
            return 2.0 * dom.size();
        case DomainKind::Square: return dom.size() * std::sqrt(2.0);
        default: return kInf;
    }
}

// ---------------------------------------------------------------------------
// evaluators
// ---------------------------------------------------------------------------

MarginResult eval_hlp_1d(const MarginInputs& in) {
    double s = in.param("s"), q = in.param("q");
    if (!(s > 1)) throw RegistryError("HLP-1D: hypothesis violated: s > 1");
    if (!(q >= 1)) throw RegistryError("HLP-1D: hypothesis violated: q >= 1");
    const Profile& u = need_profile(in);
    double A0 = (s - 1.0) / q;
    Estimate lhs = weighted_integral(u, in.domain, grad_spec(q, q - s), in.cfg);
    Estimate rhs =
        weighted_integral(u, in.domain, val_spec(q, -s), in.cfg) * std::pow(A0, q);
    return finish(lhs, rhs);
}

MarginResult eval_trace_orig(const MarginInputs& in) {
    double s = in.param("s"), q = in.param("q"), rV = in.param("rV");
    int n = in.domain.dim();
    if (s == n) throw RegistryError("TRACE-ORIG: hypothesis violated: s != n");
    if (!(q >= 1)) throw RegistryError("TRACE-ORIG: hypothesis violated: q >= 1");
    const Profile& u = need_profile(in);
    Profile clipped = u.restricted(0.0, rV);
    double A0 = std::abs(s - n) / q;
    double sgn = (s > n) ? 1.0 : -1.0;
    Estimate grad = weighted_integral(clipped, in.domain, grad_spec(q, q - s), in.cfg);
    Estimate val = weighted_integral(clipped, in.domain, val_spec(q, -s), in.cfg);
    double trace = unit_sphere_area(n) * std::pow(std::abs(u.value(rV)), q) *
                   std::pow(rV, n - s);
    Estimate rhs = val * std::pow(A0, q) +
                   Estimate{sgn * std::pow(A0, q - 1.0) * trace, 1e-14 * std::abs(trace)};
    return finish(grad, rhs);
}

MarginResult eval_trace_bdry(const MarginInputs& in) {
    double s = in.param("s"), q = in.param("q"), rV = in.param("rV");
    require_ball(in.domain, "TRACE-BDRY");
    if (s == 1) throw RegistryError("TRACE-BDRY: hypothesis violated: s != 1");
    const Profile& u = need_profile(in);
    const int n = in.domain.dim();
    const double R = in.domain.size();
    if (!(rV > 0) || !(rV < R))
        throw RegistryError("TRACE-BDRY: the trace ball must sit strictly inside");
    const double dV = R - rV;
    double A0 = std::abs(s - 1) / q;
    double sgn = (s > 1) ? 1.0 : -1.0;
    Profile clipped = u.restricted(dV, kInf);
    Estimate grad = weighted_integral(clipped, in.domain, grad_spec(q, q - s), in.cfg);
    Estimate val = weighted_integral(clipped, in.domain, val_spec(q, -s), in.cfg);
    // a.c. pairing over V: |u|^q d^{1-s} (n-1)/(R-d) with co-area factor
    double area = unit_sphere_area(n);
    auto f = [&](double t) {
        double g = std::pow(std::abs(u.value(t)), q) * std::pow(t, 1.0 - s);
        return g * (n - 1.0) * area * std::pow(R - t, n - 2.0);
    };
    Estimate pairing = integrate(f, dV, R, in.cfg);
    double trace = -std::pow(std::abs(u.value(dV)), q) * std::pow(dV, 1.0 - s) * area *
                   std::pow(rV, n - 1.0);
    Estimate rhs = val * std::pow(A0, q) +
                   (pairing + Estimate{trace, 1e-14 * std::abs(trace)}) *
                       (sgn * std::pow(A0, q - 1.0));
    return finish(grad, rhs);
}

MarginResult eval_w_hardy_orig(const MarginInputs& in) {
    double s = in.param("s"), q = in.param("q");
    int n = in.domain.dim();
    if (s == n) throw RegistryError("W-HARDY-ORIG: hypothesis violated: s != n");
    const Profile& u = need_profile(in);
    double A0 = std::abs(s - n) / q;
    Estimate lhs = weighted_integral(u, in.domain, grad_spec(q, q - s), in.cfg);
    Estimate rhs =
        weighted_integral(u, in.domain, val_spec(q, -s), in.cfg) * std::pow(A0, q);
    return finish(lhs, rhs);
}

MarginResult eval_w_hardy_bdry_rem(const MarginInputs& in) {
    double s = in.param("s"), q = in.param("q");
    if (!(s > 1)) throw RegistryError("W-HARDY-BDRY-REM: hypothesis violated: s > 1");
    const Profile& u = need_profile(in);
    double A0 = (s - 1.0) / q;
    Estimate lhs = weighted_integral(u, in.domain, grad_spec(q, q - s), in.cfg);
    Estimate val = weighted_integral(u, in.domain, val_spec(q, -s), in.cfg);
    Profile g = abs_pow_times_power(u, q, 1.0 - s);
    Estimate pairing = neg_laplacian_pairing(g, in.domain, in.cfg);
    Estimate rhs = val * std::pow(A0, q) + pairing * std::pow(A0, q - 1.0);
    return finish(lhs, rhs);
}

MarginResult eval_w_hardy_bdry(const MarginInputs& in) {
    double s = in.param("s"), q = in.param("q");
    require_condition_C(in.domain, "W-HARDY-BDRY");
    if (!(s > 1)) throw RegistryError("W-HARDY-BDRY: hypothesis violated: s > 1");
    const Profile& u = need_profile(in);
    double A0 = (s - 1.0) / q;
    Estimate lhs = weighted_integral(u, in.domain, grad_spec(q, q - s), in.cfg);
    Estimate rhs =
        weighted_integral(u, in.domain, val_spec(q, -s), in.cfg) * std::pow(A0, q);
    return finish(lhs, rhs);
}

enum class CovForm { GradP, MixedSq, Sub2 };

MarginResult eval_cov(const MarginInputs& in, bool boundary, CovForm form,
                      const std::string& id) {
    double s = in.param("s"), p = in.param("p");
    if (form == CovForm::Sub2) {
        if (!(p > 1) || !(p < 2))
            throw RegistryError(id + ": hypothesis violated: 1 < p < 2");
    } else if (!(p >= 2)) {
        throw RegistryError(id + ": hypothesis violated: p >= 2");
    }
    const Profile& u = need_profile(in);
    const int n = in.domain.dim();
    const double k = boundary ? 1.0 : static_cast<double>(n);
    if (boundary && u.variable() != ProfileVariable::RadialBoundary)
        throw ParameterError(id + ": boundary form needs a boundary-distance profile");
    double A0 = std::abs(s - k) / p;
    Estimate lhs = boundary ? hardy_diff_boundary(u, in.domain, p, s, in.cfg)
                            : hardy_diff_origin(u, in.domain, p, s, in.cfg);
    Profile v = u.multiplied_by_power((k - s) / p);
    double c1 = 1.0 / (std::pow(2.0, p - 1.0) - 1.0);
    double c2 = 3.0 * p * (p - 1.0) / 16.0;
    Estimate first{0, 0};
    switch (form) {
        case CovForm::GradP:
            first = weighted_integral(v, in.domain, grad_spec(p, p - k), in.cfg) * c1;
            break;
        case CovForm::MixedSq:
            first = mixed_cov_integral(v, in.domain, p, in.cfg) *
                    (c1 / std::pow(2.0, p - 2.0) * std::pow(A0, p - 2.0));
            break;
        case CovForm::Sub2:
            first = sub2_cov_integral(v, in.domain, p, A0, in.cfg) * c2;
            break;
    }
    Estimate rhs = first;
    if (boundary) {
        double sgn = (s > 1) ? 1.0 : -1.0;
        Profile vp = abs_pow_times_power(v, p, 0.0);
        rhs += neg_laplacian_pairing(vp, in.domain, in.cfg) *
               (sgn * std::pow(A0, p - 2.0) * ((s - 1.0) / p));
    }
    return finish(lhs, rhs);
}

MarginResult eval_imp_x2(const MarginInputs& in, bool boundary) {
    double s = in.param("s"), p = in.param("p");
    double B = in.param_or("B", 1.0);
    const std::string id = boundary ? "IMP-X2-BDRY" : "IMP-X2-ORIG";
    if (!(p > 1)) throw RegistryError(id + ": hypothesis violated: p > 1");
    const Profile& u = need_profile(in);
    const int n = in.domain.dim();
    double A0, D;
    Estimate lhs;
    if (boundary) {
        require_condition_C(in.domain, id);
        if (!(s > 1)) throw RegistryError(id + ": hypothesis violated: s > 1");
        A0 = (s - 1.0) / p;
        D = B * finite_inner_radius(in.domain, id);
        lhs = hardy_diff_boundary(u, in.domain, p, s, in.cfg);
    } else {
        if (s == n) throw RegistryError(id + ": hypothesis violated: s != n");
        if (in.domain.kind() != DomainKind::Ball &&
            in.domain.kind() != DomainKind::PuncturedBall)
            throw RegistryError(id + ": needs a bounded domain containing the origin");
        A0 = std::abs(s - n) / p;
        D = B * in.domain.size(); // sup |x|
        lhs = hardy_diff_origin(u, in.domain, p, s, in.cfg);
    }
    double kappa = 0.5 * (p - 1.0) / p * std::pow(A0, p - 2.0);
    Estimate rem = weighted_integral(u, in.domain, val_spec(p, -s, 2.0, D), in.cfg) * kappa;
    MarginResult r = finish(lhs, rem);
    r.D_used = D;
    return r;
}

MarginResult eval_sob_sup(const MarginInputs& in) {
    double p = in.param("p");
    const int n = in.domain.dim();
    if (!(p > n)) throw RegistryError("SOB-SUP: hypothesis violated: p > n");
    const Profile& u = need_profile(in);
    double vol = domain_volume(in.domain, "SOB-SUP");
    double c = std::pow(n, -1.0 / p) * std::pow(unit_ball_volume(n), -1.0 / n) *
               std::pow((p - 1.0) / (p - n), 1.0 - 1.0 / p);
    Estimate grad = weighted_integral(u, in.domain, grad_spec(p, 0.0), in.cfg);
    Estimate lhs = pow_est(grad, 1.0 / p) *
                   (c * std::pow(vol, 1.0 / n - 1.0 / p));
    SupResult sup = sup_quotient(u, in.domain, SupSpec{});
    return finish(lhs, Estimate{sup.value, 0.0},
                  sup.converged ? "" : "sup grid still refining");
}

MarginResult eval_morrey(const MarginInputs& in) {
    double p = in.param("p");
    const int n = in.domain.dim();
    if (!(p > n) || n < 2) throw RegistryError("MORREY: hypothesis violated: p > n >= 2");
    const Profile& u = need_profile(in);
    double c = std::pow(2.0, n + 1.0) * std::pow(unit_sphere_area(n), -1.0 / p) *
               std::pow((p - 1.0) / (p - n), 1.0 - 1.0 / p);
    Estimate grad = weighted_integral(u, in.domain, grad_spec(p, 0.0), in.cfg);
    Estimate lhs = pow_est(grad, 1.0 / p) * c;
    SupResult h = holder_quotient(u, in.domain, HolderSpec{1.0 - n / p, 0.0, 1.0});
    return finish(lhs, Estimate{h.value, 0.0});
}

MarginResult eval_morrey_1d(const MarginInputs& in) {
    double p = in.param("p");
    if (in.domain.kind() != DomainKind::Interval)
        throw RegistryError("MORREY-1D: stated on an interval");
    const Profile& u = need_profile(in);
    double L = in.domain.size();
    Estimate grad = weighted_integral(u, in.domain, grad_spec(p, 0.0), in.cfg);
    Estimate lhs = pow_est(grad, 1.0 / p) * (0.5 * std::pow(L, 1.0 - 1.0 / p));
    SupResult sup = sup_quotient(u, in.domain, SupSpec{});
    return finish(lhs, Estimate{sup.value, 0.0});
}

MarginResult eval_meancurv_rem(const MarginInputs& in) {
    double s = in.param("s"), q = in.param("q");
    require_ball(in.domain, "MEANCURV-REM");
    if (!(s > 1)) throw RegistryError("MEANCURV-REM: hypothesis violated: s > 1");
    const Profile& u = need_profile(in);
    const int n = in.domain.dim();
    double H = 1.0 / in.domain.size();
    double A0 = (s - 1.0) / q;
    Estimate lhs = weighted_integral(u, in.domain, grad_spec(q, q - s), in.cfg);
    Estimate rhs =
        weighted_integral(u, in.domain, val_spec(q, -s), in.cfg) * std::pow(A0, q) +
        weighted_integral(u, in.domain, val_spec(q, 1.0 - s), in.cfg) *
            ((n - 1.0) * H * std::pow(A0, q - 1.0));
    return finish(lhs, rhs);
}

// ---- the L1 family -------------------------------------------------------

Estimate l1_grad(const MarginInputs& in, double wpow) {
    return weighted_integral(need_profile(in), in.domain, grad_spec(1.0, wpow), in.cfg);
}

Estimate l1_val(const MarginInputs& in, double wpow, double xpow = 0.0, double D = 1.0) {
    return weighted_integral(need_profile(in), in.domain, val_spec(1.0, wpow, xpow, D),
                             in.cfg);
}

MarginResult eval_l1_gen(const MarginInputs& in) {
    double s = in.param("s");
    const int n = in.domain.dim();
    if (!(s > n)) throw RegistryError("L1-GEN: hypothesis violated: s > n");
    return finish(l1_grad(in, 1.0 - s), l1_val(in, -s) * (s - n));
}

MarginResult eval_l1_gen_x(const MarginInputs& in) {
    double s = in.param("s"), gamma = in.param("gamma");
    const int n = in.domain.dim();
    if (!(s >= n)) throw RegistryError("L1-GEN-X: hypothesis violated: s >= n");
    if (!(gamma > 1)) throw RegistryError("L1-GEN-X: hypothesis violated: gamma > 1");
    double R = finite_inner_radius(in.domain, "L1-GEN-X");
    Estimate rhs = l1_val(in, -s) * (s - n) +
                   l1_val(in, -static_cast<double>(n), gamma, R) *
                       ((gamma - 1.0) / std::pow(R, s - n));
    return finish(l1_grad(in, 1.0 - s), rhs);
}

MarginResult eval_l1_gen_grad(const MarginInputs& in) {
    double s = in.param("s");
    const int n = in.domain.dim();
    if (!(s > n)) throw RegistryError("L1-GEN-GRAD: hypothesis violated: s > n");
    double R = finite_inner_radius(in.domain, "L1-GEN-GRAD");
    Estimate rhs = l1_val(in, -s) * (s - n) +
                   l1_grad(in, 1.0 - n) * (1.0 / std::pow(R, s - n));
    return finish(l1_grad(in, 1.0 - s), rhs);
}

MarginResult eval_l1_c(const MarginInputs& in) {
    double s = in.param("s");
    require_condition_C(in.domain, "L1-C");
    if (!(s > 1)) throw RegistryError("L1-C: hypothesis violated: s > 1");
    return finish(l1_grad(in, 1.0 - s), l1_val(in, -s) * (s - 1.0));
}

MarginResult eval_l1_c_x(const MarginInputs& in) {
    double s = in.param("s"), gamma = in.param("gamma");
    require_condition_C(in.domain, "L1-C-X");
    if (!(s >= 1)) throw RegistryError("L1-C-X: hypothesis violated: s >= 1");
    if (!(gamma > 1)) throw RegistryError("L1-C-X: hypothesis violated: gamma > 1");
    double R = finite_inner_radius(in.domain, "L1-C-X");
    Estimate rhs = l1_val(in, -s) * (s - 1.0) +
                   l1_val(in, -1.0, gamma, R) * ((gamma - 1.0) / std::pow(R, s - 1.0));
    return finish(l1_grad(in, 1.0 - s), rhs);
}

MarginResult eval_l1_c_grad(const MarginInputs& in) {
    double s = in.param("s");
    require_condition_C(in.domain, "L1-C-GRAD");
    if (!(s > 1)) throw RegistryError("L1-C-GRAD: hypothesis violated: s > 1");
    double R = finite_inner_radius(in.domain, "L1-C-GRAD");
    Estimate rhs = l1_val(in, -s) * (s - 1.0) +
                   l1_grad(in, 0.0) * (1.0 / std::pow(R, s - 1.0));
    return finish(l1_grad(in, 1.0 - s), rhs);
}

MarginResult eval_l1_reach(const MarginInputs& in) {
    double s = in.param("s");
    double h = in.domain.reach();
    double R = finite_inner_radius(in.domain, "L1-REACH");
    const int n = in.domain.dim();
    double constant, smin;
    if (std::isinf(h)) {
        constant = s - 1.0;
        smin = 1.0;
    } else {
        constant = ((s - 1.0) * h + (s - n) * R) / (h + R);
        smin = (h + n * R) / (h + R);
    }
    if (!(s > smin))
        throw RegistryError("L1-REACH: hypothesis violated: s > (h+nR)/(h+R)");
    MarginResult r = finish(l1_grad(in, 1.0 - s), l1_val(in, -s) * constant);
    r.constant_used = constant;
    return r;
}

MarginResult eval_l1_meancurv(const MarginInputs& in) {
    double s = in.param("s");
    require_ball(in.domain, "L1-MEANCURV");
    if (!(s >= 1)) throw RegistryError("L1-MEANCURV: hypothesis violated: s >= 1");
    const int n = in.domain.dim();
    double H = 1.0 / in.domain.size();
    Estimate rhs = l1_val(in, -s) * (s - 1.0) + l1_val(in, 1.0 - s) * ((n - 1.0) * H);
    return finish(l1_grad(in, 1.0 - s), rhs);
}

MarginResult eval_l1_ball_series(const MarginInputs& in) {
    double s = in.param("s"), gamma = in.param("gamma");
    require_ball(in.domain, "L1-BALL-SERIES");
    if (!(s >= 2)) throw RegistryError("L1-BALL-SERIES: hypothesis violated: s >= 2");
    if (!(gamma > 1)) throw RegistryError("L1-BALL-SERIES: hypothesis violated: gamma > 1");
    const int n = in.domain.dim();
    const double R = in.domain.size();
    Estimate rhs = l1_val(in, -s) * (s - 1.0);
    int terms = static_cast<int>(std::floor(s)) - 1;
    for (int k = 1; k <= terms; ++k)
        rhs += l1_val(in, k - s) * ((n - 1.0) / std::pow(R, k));
    rhs += l1_val(in, -1.0, gamma, R) * ((gamma - 1.0) / std::pow(R, s - 1.0));
    return finish(l1_grad(in, 1.0 - s), rhs);
}

MarginResult eval_l1_ball_low(const MarginInputs& in) {
    double s = in.param("s"), gamma = in.param("gamma");
    require_ball(in.domain, "L1-BALL-LOW");
    if (!(s >= 1) || !(s < 2))
        throw RegistryError("L1-BALL-LOW: hypothesis violated: 1 <= s < 2");
    if (!(gamma > 1)) throw RegistryError("L1-BALL-LOW: hypothesis violated: gamma > 1");
    const double R = in.domain.size();
    Estimate rhs = l1_val(in, -s) * (s - 1.0) +
                   l1_val(in, -1.0, gamma, R) * ((gamma - 1.0) / std::pow(R, s - 1.0));
    return finish(l1_grad(in, 1.0 - s), rhs);
}

MarginResult eval_l1_strip(const MarginInputs& in) {
    double s = in.param("s"), gamma = in.param("gamma");
    if (in.domain.kind() != DomainKind::Slab)
        throw RegistryError("L1-STRIP: stated on the slab");
    if (!(s >= 1)) throw RegistryError("L1-STRIP: hypothesis violated: s >= 1");
    if (!(gamma > 1)) throw RegistryError("L1-STRIP: hypothesis violated: gamma > 1");
    const TensorProfile& tp = need_tensor(in);
    const double R = in.domain.size();
    if (tp.eta() > R)
        throw ParameterError("L1-STRIP: the axial support must stay in the lower half");
    Estimate lhs = slab_grad_integral(tp, Weight{1.0 - s, 0.0, 1.0}, in.cfg);
    Estimate rhs = slab_value_integral(tp, Weight{-s, 0.0, 1.0}, 1.0, in.cfg) * (s - 1.0) +
                   slab_value_integral(tp, Weight{-1.0, gamma, R}, 1.0, in.cfg) *
                       ((gamma - 1.0) / std::pow(R, s - 1.0));
    return finish(lhs, rhs);
}

// ---- the p > n entries ----------------------------------------------------

MarginResult eval_hs_orig(const MarginInputs& in) {
    double p = in.param("p"), C = in.param_or("C", 1.0);
    const int n = in.domain.dim();
    if (!(p > n)) throw RegistryError("HS-ORIG: hypothesis violated: p > n");
    const Profile& u = need_profile(in);
    double vol = domain_volume(in.domain, "HS-ORIG");
    Estimate diff = hardy_diff_origin(u, in.domain, p, p, in.cfg);
    Estimate lhs = pow_est(diff, 1.0 / p) * (C * std::pow(vol, 1.0 / n - 1.0 / p));
    SupResult sup = sup_quotient(u, in.domain, SupSpec{});
    MarginResult r = finish(lhs, Estimate{sup.value, 0.0});
    r.constant_used = C;
    return r;
}

MarginResult eval_local_orig(const MarginInputs& in) {
    double p = in.param("p"), q = in.param("q"), r = in.param("r");
    double C = in.param_or("C", 1.0), Theta = in.param_or("Theta", 0.0);
    const int n = in.domain.dim();
    if (!(p > n) || !(q >= 1) || !(q < p))
        throw RegistryError("LOCAL-ORIG: hypothesis violated: p > n, 1 <= q < p");
    const Profile& u = need_profile(in);
    double diam = domain_diameter(in.domain);
    if (!(r > 0) || !(r < diam))
        throw RegistryError("LOCAL-ORIG: ball radius must lie in (0, diam)");
    double D = std::exp(Theta) * diam;
    Estimate diff = hardy_diff_origin(u, in.domain, p, p, in.cfg);
    Estimate lhs = pow_est(diff, 1.0 / p) * C;
    Profile clipped = u.restricted(0.0, r);
    Estimate avg = weighted_integral(clipped, in.domain, val_spec(q, -q), in.cfg) *
                   (1.0 / (unit_ball_volume(n) * std::pow(r, n)));
    Estimate rhs = pow_est(avg, 1.0 / q) *
                   (std::pow(r, n / p) * eval_X_pow(r, D, 1.0 / p));
    MarginResult res = finish(lhs, rhs);
    res.constant_used = C;
    res.D_used = D;
    return res;
}

MarginResult eval_supx(const MarginInputs& in, bool boundary, bool one_d,
                       const std::string& id) {
    double p = in.param("p"), C = in.param_or("C", 1.0);
    const int n = in.domain.dim();
    if (one_d && n != 1) throw RegistryError(id + ": one-dimensional statement");
    if (!one_d && !(p > n)) throw RegistryError(id + ": hypothesis violated: p > n");
    if (one_d && !(p > 1)) throw RegistryError(id + ": hypothesis violated: p > 1");
    const Profile& u = need_profile(in);
    double D, s_hardy;
    Estimate diff;
    if (boundary) {
        require_condition_C(in.domain, id);
        s_hardy = p;
        double B = in.param_or("B", 1.0);
        double R = finite_inner_radius(in.domain, id);
        double Theta = in.param_or("Theta", 0.0);
        D = std::max(B * std::exp(Theta) * (one_d ? 0.5 * in.domain.size() : R), R);
        diff = hardy_diff_boundary(u, in.domain, p, p, in.cfg);
    } else {
        double Theta = in.param_or("Theta", 0.0);
        double diam = domain_diameter(in.domain);
        D = one_d ? std::max(in.param_or("B", 1.0), 1.0) * in.domain.size()
                  : std::exp(Theta) * diam;
        diff = hardy_diff_origin(u, in.domain, p, p, in.cfg);
        s_hardy = p;
    }
    (void)s_hardy;
    Estimate lhs = pow_est(diff, 1.0 / p) * C;
    SupSpec tau{static_cast<double>(n) / p - 1.0, 1.0 / p, D};
    SupResult sup = sup_quotient(u, in.domain, tau);
    MarginResult r = finish(lhs, Estimate{sup.value, 0.0});
    r.constant_used = C;
    r.D_used = D;
    return r;
}

MarginResult eval_hm(const MarginInputs& in, bool boundary, bool one_d,
                     const std::string& id) {
    double p = in.param("p"), C = in.param_or("C", 1.0), B = in.param_or("B", 1.0);
    const int n = in.domain.dim();
    if (one_d && n != 1) throw RegistryError(id + ": one-dimensional statement");
    if (!(p > n)) throw RegistryError(id + ": hypothesis violated: p > n");
    const Profile& u = need_profile(in);
    double D;
    Estimate diff;
    if (boundary) {
        require_condition_C(in.domain, id);
        if (one_d) {
            D = B * in.domain.size(); // D = bR
        } else {
            require_ball(in.domain, id);
            D = 2.0 * B * in.domain.size(); // D = 2bR
        }
        diff = hardy_diff_boundary(u, in.domain, p, p, in.cfg);
    } else {
        D = B * domain_diameter(in.domain);
        diff = hardy_diff_origin(u, in.domain, p, p, in.cfg);
    }
    Estimate lhs = pow_est(diff, 1.0 / p) * C;
    SupResult h = holder_quotient(u, in.domain, HolderSpec{1.0 - n / p, 1.0 / p, D});
    MarginResult r = finish(lhs, Estimate{h.value, 0.0});
    r.constant_used = C;
    r.D_used = D;
    return r;
}

// ---------------------------------------------------------------------------
// defaults
// ---------------------------------------------------------------------------

using FP = std::vector<std::pair<std::string, double>>;
using PM = std::map<std::string, double>;

std::vector<MarginCase> hlp_defaults() {
    std::vector<MarginCase> v;
    for (double form : {0.0, 1.0})
        for (auto [s, q, e] : std::vector<std::array<double, 3>>{
                 {2, 2, 0.5}, {3, 2, 0.1}, {2, 1, 0.3}, {3.5, 3, 0.2}}) {
            MarginCase c;
            c.domain_id = "interval";
            c.n = 1;
            c.size = 1.0;
            c.family = form == 0.0 ? "power-origin" : "power";
            if (form == 0.0)
                c.family_params = {{"a", (s - 1) / q + e}};
            else
                c.family_params = {{"s", s}, {"q", q}, {"eps", e}};
            c.params = {{"s", s}, {"q", q}, {"form", form}};
            v.push_back(c);
        }
    return v;
}

std::vector<MarginCase> make_cases(
    const std::vector<std::tuple<std::string, int, double>>& doms,
    const std::vector<std::pair<std::string, FP>>& families,
    const std::vector<PM>& params) {
    std::vector<MarginCase> v;
    for (const auto& [id, n, size] : doms)
        for (const auto& [family, fp] : families)
            for (const auto& pm : params) {
                MarginCase c;
                c.domain_id = id;
                c.n = n;
                c.size = size;
                c.family = family;
                c.family_params = fp;
                c.params = pm;
                v.push_back(c);
            }
    return v;
}

} // namespace

// ---------------------------------------------------------------------------

const std::vector<InequalityRecord>& registry() {
    static const std::vector<InequalityRecord> table = [] {
        std::vector<InequalityRecord> t;

        t.push_back({"HLP-1D", "(2.1)/(2.2)",
                     "one-dimensional weighted Hardy bound, origin and two-sided forms",
                     "((s-1)/q)^q, sharp", false, "", eval_hlp_1d, hlp_defaults(), {}});

        t.push_back(
            {"TRACE-ORIG", "(2.3)",
             "trace-corrected weighted Hardy bound with distance to the origin, on a "
             "concentric ball",
             "|(s-n)/q|^q", false, "", eval_trace_orig,
             make_cases({{"punctured-space", 2, 1.0}, {"punctured-space", 3, 1.0}},
                        {{"brv-base", {{"eps", 0.25}}}},
                        {PM{{"q", 1}, {"s", 3.5}, {"rV", 0.7}},
                         PM{{"q", 2}, {"s", 4.0}, {"rV", 0.7}},
                         PM{{"q", 2}, {"s", 1.2}, {"rV", 0.7}}}),
             {}});

        t.push_back(
            {"TRACE-BDRY", "(2.6)",
             "trace-corrected weighted Hardy bound with boundary distance, on a "
             "concentric ball",
             "|(s-1)/q|^q", false, "", eval_trace_bdry,
             make_cases({{"ball", 2, 1.0}, {"ball", 3, 1.0}},
                        {{"power", {{"eps", 0.3}}}},
                        {PM{{"q", 2}, {"s", 2.0}, {"rV", 0.6}},
                         PM{{"q", 1}, {"s", 3.0}, {"rV", 0.5}},
                         PM{{"q", 3}, {"s", 2.5}, {"rV", 0.7}}}),
             {}});

        t.push_back({"W-HARDY-ORIG", "(2.5)",
                     "weighted Hardy bound with distance to the origin on the whole space",
                     "|(s-n)/q|^q, sharp", false, "", eval_w_hardy_orig,
                     make_cases({{"punctured-space", 2, 1.0}, {"punctured-space", 3, 1.0}},
                                {{"brv-base", {{"eps", 0.2}}}},
                                {PM{{"q", 2}, {"s", 4.5}},
                                 PM{{"q", 1}, {"s", 4.5}},
                                 PM{{"q", 3}, {"s", 1.5}}}),
                     {}});

        t.push_back(
            {"W-HARDY-BDRY-REM", "(2.8)",
             "weighted boundary Hardy bound keeping the curvature pairing term",
             "((s-1)/q)^q and ((s-1)/q)^{q-1}, all optimal", false, "",
             eval_w_hardy_bdry_rem,
             make_cases({{"ball", 2, 1.0}, {"ball", 3, 1.0}, {"interval", 1, 1.0}},
                        {{"power", {{"eps", 0.3}}}},
                        {PM{{"q", 2}, {"s", 2.0}}, PM{{"q", 2}, {"s", 3.0}},
                         PM{{"q", 1}, {"s", 2.5}}}),
             {}});

        t.push_back(
            {"W-HARDY-BDRY", "(2.9)",
             "weighted boundary Hardy bound on mean-convex domains",
             "((s-1)/q)^q, best possible", false, "", eval_w_hardy_bdry,
             make_cases({{"ball", 2, 1.0},
                         {"ball", 3, 1.0},
                         {"interval", 1, 1.0},
                         {"square", 2, 2.0}},
                        {{"power", {{"eps", 0.5}}}, {"power", {{"eps", 0.1}}}},
                        {PM{{"q", 2}, {"s", 2.0}}, PM{{"q", 1}, {"s", 3.0}},
                         PM{{"q", 3}, {"s", 2.0}}}),
             {}});

        auto cov_eval = [](bool bdry, CovForm f, std::string id) {
            return [bdry, f, id](const MarginInputs& in) { return eval_cov(in, bdry, f, id); };
        };
        t.push_back({"CoV-PGE2-GRAD", "(2.10)",
                     "change-of-variables lower bound by the full gradient term, p >= 2",
                     "c1 = (2^{p-1}-1)^{-1}", false, "",
                     cov_eval(false, CovForm::GradP, "CoV-PGE2-GRAD"),
                     make_cases({{"punctured-space", 2, 1.0}},
                                {{"brv-cov", {{"eps", 0.2}}}},
                                {PM{{"p", 2}, {"s", 4.0}}, PM{{"p", 3}, {"s", 0.5}}}),
                     {"CoV-P>=2-GRAD"}});
        t.push_back({"CoV-PGE2", "(2.11)",
                     "change-of-variables lower bound by the mixed second-order term, p >= 2",
                     "c1 2^{2-p} |(s-n)/p|^{p-2}", false, "",
                     cov_eval(false, CovForm::MixedSq, "CoV-PGE2"),
                     make_cases({{"punctured-space", 2, 1.0}, {"interval", 1, 1.0}},
                                {{"bump", {{"center", 0.5}, {"width", 0.3}}}},
                                {PM{{"p", 2}, {"s", 4.0}}, PM{{"p", 3}, {"s", 0.5}}}),
                     {"CoV-P>=2", "CoV-P≥2"}});
        t.push_back({"CoV-PLT2", "(2.12)",
                     "change-of-variables lower bound for 1 < p < 2",
                     "c2 = 3p(p-1)/16", false, "",
                     cov_eval(false, CovForm::Sub2, "CoV-PLT2"),
                     make_cases({{"punctured-space", 2, 1.0}, {"interval", 1, 1.0}},
                                {{"bump", {{"center", 0.5}, {"width", 0.3}}}},
                                {PM{{"p", 1.5}, {"s", 4.0}}, PM{{"p", 1.8}, {"s", 0.5}}}),
                     {"CoV-P<2"}});
        t.push_back({"CoV-BDRY-PGE2-GRAD", "(2.13)",
                     "boundary change-of-variables bound by the full gradient term, p >= 2",
                     "c1 plus the curvature pairing", false, "",
                     cov_eval(true, CovForm::GradP, "CoV-BDRY-PGE2-GRAD"),
                     make_cases({{"ball", 2, 1.0}, {"interval", 1, 1.0}},
                                {{"power", {{"eps", 0.4}}}},
                                {PM{{"p", 2}, {"s", 2.0}}, PM{{"p", 3}, {"s", 2.5}}}),
                     {"CoV-BDRY-P>=2-GRAD"}});
        t.push_back({"CoV-BDRY-PGE2", "(2.14)",
                     "boundary change-of-variables bound by the mixed term, p >= 2",
                     "c1 2^{2-p} ((s-1)/p)^{p-2} plus the curvature pairing", false, "",
                     cov_eval(true, CovForm::MixedSq, "CoV-BDRY-PGE2"),
                     make_cases({{"ball", 2, 1.0}, {"interval", 1, 1.0}},
                                {{"power", {{"eps", 0.4}}}},
                                {PM{{"p", 2}, {"s", 2.0}}, PM{{"p", 3}, {"s", 2.5}}}),
                     {"CoV-BDRY-P>=2"}});
        t.push_back(
            {"CoV-BDRY-PLT2", "(2.15)",
             "boundary change-of-variables bound for 1 < p < 2",
             "c2 plus the curvature pairing", false, "",
             cov_eval(true, CovForm::Sub2, "CoV-BDRY-PLT2"),
             make_cases({{"ball", 2, 1.0}, {"interval", 1, 1.0}},
                        {{"bump-boundary", {{"center", 0.25}, {"width", 0.15}}}},
                        {PM{{"p", 1.5}, {"s", 2.0}}, PM{{"p", 1.7}, {"s", 1.5}}}),
             {"CoV-BDRY-P<2"}});

        t.push_back(
            {"IMP-X2-ORIG", "(2.16)",
             "logarithmically improved weighted Hardy bound, distance to the origin",
             "(p-1)/(2p) |(s-n)/p|^{p-2}; X^2 optimal", false, "B",
             [](const MarginInputs& in) { return eval_imp_x2(in, false); },
             make_cases({{"ball", 2, 1.0}, {"ball", 3, 1.0}},
                        {{"power-origin-cut", {{"eps", 0.3}}}},
                        {PM{{"p", 2}, {"s", 4.5}}, PM{{"p", 3}, {"s", 4.5}},
                         PM{{"p", 1.5}, {"s", 1.5}}}),
             {}});
        t.push_back(
            {"IMP-X2-BDRY", "(2.17)",
             "logarithmically improved weighted Hardy bound, boundary distance",
             "(p-1)/(2p) ((s-1)/p)^{p-2}; X^2 optimal", false, "B",
             [](const MarginInputs& in) { return eval_imp_x2(in, true); },
             make_cases({{"ball", 2, 1.0}, {"interval", 1, 1.0}},
                        {{"power", {{"eps", 0.3}}}},
                        {PM{{"p", 2}, {"s", 2.0}}, PM{{"p", 3}, {"s", 2.5}},
                         PM{{"p", 1.5}, {"s", 1.8}}}),
             {}});

        t.push_back({"SOB-SUP", "Thm 2.17",
                     "sup-norm Sobolev bound for p > n with the explicit constant",
                     "n^{-1/p} w_n^{-1/n} ((p-1)/(p-n))^{1-1/p}, optimal", false, "",
                     eval_sob_sup,
                     make_cases({{"ball", 2, 1.0}},
                                {{"morrey-V", {{"beta", 1.0}}}},
                                {PM{{"p", 3}}, PM{{"p", 4}}}),
                     {}});

        t.push_back({"MORREY", "Thm 2.20",
                     "Hoelder seminorm bound for p > n >= 2",
                     "2^{n+1} (n w_n)^{-1/p} ((p-1)/(p-n))^{1-1/p}", false, "", eval_morrey,
                     make_cases({{"punctured-space", 2, 1.0}, {"punctured-space", 3, 1.0}},
                                {{"morrey-V", {{"beta", 0.8}}}},
                                {PM{{"p", 4}}, PM{{"p", 5}}}),
                     {}});

        t.push_back({"MORREY-1D", "(2.26)",
                     "one-dimensional sup bound with the sharp constant one half",
                     "1/2, optimal", false, "", eval_morrey_1d,
                     make_cases({{"interval", 1, 1.0}},
                                {{"tent-origin", {{"center", 0.5}, {"width", 0.5}}},
                                 {"bump", {{"center", 0.5}, {"width", 0.4}}}},
                                {PM{{"p", 1.5}}, PM{{"p", 2}}, PM{{"p", 4}}}),
                     {}});

        t.push_back({"MEANCURV-REM", "(3.4)",
                     "weighted boundary Hardy bound with the mean-curvature remainder",
                     "(n-1)H ((s-1)/q)^{q-1}", false, "", eval_meancurv_rem,
                     make_cases({{"ball", 2, 1.0}, {"ball", 3, 1.0}},
                                {{"power", {{"eps", 0.3}}}},
                                {PM{{"q", 1}, {"s", 2.0}}, PM{{"q", 2}, {"s", 2.0}},
                                 PM{{"q", 2}, {"s", 3.5}}}),
                     {}});

        t.push_back({"L1-GEN", "(4.3)",
                     "L1 weighted Hardy bound on arbitrary open sets, s > n",
                     "s-n; sharp on the punctured space", false, "", eval_l1_gen,
                     make_cases({{"punctured-space", 2, 1.0}},
                                {{"annulus", {{"delta", 0.1}, {"eta", 0.5}}},
                                 {"mollified-annulus",
                                  {{"delta", 0.1}, {"eta", 0.5}, {"width", 0.02}}}},
                                {PM{{"s", 3.0}}, PM{{"s", 4.0}}}),
                     {}});

        t.push_back({"L1-GEN-X", "(4.10)",
                     "L1 Hardy bound with logarithmic remainder on sets of finite inner radius",
                     "C >= gamma-1 (checked at gamma-1)", false, "", eval_l1_gen_x,
                     make_cases({{"punctured-ball", 2, 1.0}, {"punctured-ball", 3, 1.0}},
                                {{"annulus", {{"delta", 0.05}, {"eta", 0.2}}}},
                                {PM{{"s", 3.0}, {"gamma", 1.5}},
                                 PM{{"s", 3.5}, {"gamma", 2.0}}}),
                     {}});

        t.push_back({"L1-GEN-GRAD", "(4.11)",
                     "L1 Hardy bound improved by a gradient term, s > n",
                     "R^{n-s}", false, "", eval_l1_gen_grad,
                     make_cases({{"punctured-ball", 2, 1.0}, {"punctured-ball", 3, 1.0}},
                                {{"annulus", {{"delta", 0.05}, {"eta", 0.2}}}},
                                {PM{{"s", 3.5}}, PM{{"s", 4.5}}}),
                     {}});

        t.push_back(
            {"L1-C", "(4.12)",
             "L1 boundary Hardy bound on mean-convex domains",
             "s-1, sharp", false, "", eval_l1_c,
             make_cases({{"ball", 2, 1.0}, {"ball", 3, 1.0}, {"interval", 1, 1.0},
                         {"square", 2, 2.0}},
                        {{"power", {{"eps", 0.1}}}, {"shell-boundary", {{"delta", 0.2}}}},
                        {PM{{"s", 3.0}}, PM{{"s", 2.0}}}),
             {}});

        t.push_back(
            {"L1-C-X", "(4.13)",
             "L1 boundary Hardy bound with logarithmic remainder",
             "C >= gamma-1 (checked at gamma-1)", false, "", eval_l1_c_x,
             make_cases({{"ball", 2, 1.0}, {"interval", 1, 1.0}, {"square", 2, 2.0}},
                        {{"power", {{"eps", 0.2}}}},
                        {PM{{"s", 3.0}, {"gamma", 1.5}}, PM{{"s", 1.5}, {"gamma", 2.0}}}),
             {}});

        t.push_back(
            {"L1-C-GRAD", "(4.14)",
             "L1 boundary Hardy bound improved by the plain gradient term",
             "R^{1-s}", false, "", eval_l1_c_grad,
             make_cases({{"ball", 2, 1.0}, {"interval", 1, 1.0}, {"square", 2, 2.0}},
                        {{"power", {{"eps", 0.2}}}},
                        {PM{{"s", 3.0}}, PM{{"s", 2.0}}}),
             {}});

        t.push_back({"L1-REACH", "(4.15)",
                     "L1 Hardy bound interpolating through the reach of the closure",
                     "((s-1)h + (s-n)R)/(h+R)", false, "", eval_l1_reach,
                     make_cases({{"ball", 2, 1.0}},
                                {{"power", {{"eps", 0.2}}}},
                                {PM{{"s", 2.5}}, PM{{"s", 2.0}}}),
                     {}});

        t.push_back({"L1-MEANCURV", "(1.19)",
                     "L1 boundary Hardy bound with the mean-curvature remainder",
                     "(n-1)H lower bound for the remainder constant", false, "",
                     eval_l1_meancurv,
                     make_cases({{"ball", 2, 1.0}, {"ball", 3, 1.0}},
                                {{"shell-boundary", {{"delta", 0.1}}},
                                 {"power", {{"eps", 0.2}}}},
                                {PM{{"s", 2.0}}, PM{{"s", 3.0}}}),
                     {}});

        t.push_back(
            {"L1-BALL-SERIES", "(4.30)",
             "L1 Hardy bound on the ball with the finite series of sharp remainders",
             "s-1, (n-1)/R^k, gamma-1; all optimal", false, "", eval_l1_ball_series,
             make_cases({{"ball", 2, 1.0}, {"ball", 3, 1.0}},
                        {{"power", {{"eps", 0.15}}}, {"shell-boundary", {{"delta", 0.15}}},
                         {"sixpiece-boundary", {{"delta", 0.1}, {"p", 4.0}}}},
                        {PM{{"s", 2.5}, {"gamma", 1.5}}, PM{{"s", 3.5}, {"gamma", 2.0}},
                         PM{{"s", 2.0}, {"gamma", 1.2}}}),
             {}});

        t.push_back({"L1-BALL-LOW", "(4.31)",
                     "L1 Hardy bound on the ball for 1 <= s < 2",
                     "s-1 and gamma-1", false, "", eval_l1_ball_low,
                     make_cases({{"ball", 2, 1.0}},
                                {{"power", {{"eps", 0.3}}}, {"shell-boundary", {{"delta", 0.2}}}},
                                {PM{{"s", 1.5}, {"gamma", 1.5}},
                                 PM{{"s", 1.2}, {"gamma", 2.0}}}),
                     {}});

        t.push_back({"L1-STRIP", "(1.25)",
                     "L1 Hardy bound on the infinite strip; only the log remainder survives",
                     "s-1 and gamma-1; the inverse-distance series vanishes", false, "",
                     eval_l1_strip,
                     make_cases({{"slab", 2, 1.0}, {"slab", 3, 1.0}},
                                {{"strip-tensor",
                                  {{"eps", 0.05}, {"eta", 0.5}, {"delta", 1.0}}}},
                                {PM{{"s", 2.0}, {"gamma", 1.5}},
                                 PM{{"s", 3.0}, {"gamma", 2.0}}}),
                     {}});

        t.push_back({"HS-ORIG", "(1.26)",
                     "sup-norm bound by the sharp origin Hardy difference, p > n",
                     "existential C(n,p)", true, "C", eval_hs_orig,
                     [] {
                         auto v = make_cases({{"ball", 1, 1.0}},
                                             {{"sixpiece", {{"delta", 0.1}}},
                                              {"sixpiece", {{"delta", 0.05}}}},
                                             {PM{{"p", 2}}, PM{{"p", 3}}});
                         auto w = make_cases({{"ball", 2, 1.0}},
                                             {{"sixpiece", {{"delta", 0.1}}}},
                                             {PM{{"p", 3}}, PM{{"p", 4}}});
                         v.insert(v.end(), w.begin(), w.end());
                         return v;
                     }(),
                     {}});

        t.push_back({"LOCAL-ORIG", "(5.12)/(1.29)",
                     "local averaged bound with the X^{1/p} factor on concentric balls",
                     "existential C(n,p,q), D >= e^Theta diam", true, "C", eval_local_orig,
                     make_cases({{"ball", 2, 1.0}},
                                {{"sixpiece", {{"delta", 0.1}}}},
                                {PM{{"p", 4}, {"q", 1}, {"r", 0.3}},
                                 PM{{"p", 4}, {"q", 2}, {"r", 0.9}},
                                 PM{{"p", 3}, {"q", 1.5}, {"r", 0.5}}}),
                     {}});

        t.push_back({"SUPX-ORIG", "(5.18)",
                     "weighted sup bound |u| |x|^{n/p-1} X^{1/p} by the Hardy difference",
                     "existential C(n,p)", true, "C",
                     [](const MarginInputs& in) {
                         return eval_supx(in, false, false, "SUPX-ORIG");
                     },
                     [] {
                         auto v = make_cases({{"ball", 2, 1.0}},
                                             {{"sixpiece", {{"delta", 0.1}}}},
                                             {PM{{"p", 3}}, PM{{"p", 4}}});
                         auto w = make_cases({{"ball", 3, 1.0}},
                                             {{"sixpiece", {{"delta", 0.1}}}},
                                             {PM{{"p", 4}}, PM{{"p", 5}}});
                         v.insert(v.end(), w.begin(), w.end());
                         return v;
                     }(),
                     {}});

        t.push_back({"SUPX-1D", "(5.8)",
                     "one-dimensional weighted sup bound with X^{1/p}",
                     "existential c(p), D >= 1", true, "C",
                     [](const MarginInputs& in) {
                         return eval_supx(in, false, true, "SUPX-1D");
                     },
                     make_cases({{"ball", 1, 1.0}},
                                {{"sixpiece", {{"delta", 0.1}}}},
                                {PM{{"p", 1.5}}, PM{{"p", 2}}, PM{{"p", 3}}}),
                     {}});

        t.push_back({"HM-ORIG", "(1.28)",
                     "Hardy-Morrey bound: the X^{1/p}-weighted Hoelder seminorm, origin case",
                     "existential C, B >= 1; X^{1/p} optimal", true, "C",
                     [](const MarginInputs& in) {
                         return eval_hm(in, false, false, "HM-ORIG");
                     },
                     make_cases({{"ball", 2, 1.0}},
                                {{"sixpiece", {{"delta", 0.1}}}},
                                {PM{{"p", 3}}, PM{{"p", 4}}}),
                     {}});

        t.push_back({"HS-BDRY", "(1.30)",
                     "sup-norm bound by the sharp boundary Hardy difference, p > n",
                     "existential C(n,p)", true, "C",
                     [](const MarginInputs& in) {
                         double p = in.param("p");
                         const Profile& u = need_profile(in);
                         const int n = in.domain.dim();
                         if (!(p > n))
                             throw RegistryError("HS-BDRY: hypothesis violated: p > n");
                         require_condition_C(in.domain, "HS-BDRY");
                         double C = in.param_or("C", 1.0);
                         double vol = domain_volume(in.domain, "HS-BDRY");
                         Estimate diff = hardy_diff_boundary(u, in.domain, p, p, in.cfg);
                         Estimate lhs = pow_est(diff, 1.0 / p) *
                                        (C * std::pow(vol, 1.0 / n - 1.0 / p));
                         SupResult sup = sup_quotient(u, in.domain, SupSpec{});
                         MarginResult r = finish(lhs, Estimate{sup.value, 0.0});
                         r.constant_used = C;
                         return r;
                     },
                     make_cases({{"ball", 2, 1.0}, {"interval", 1, 1.0},
                                 {"square", 2, 2.0}},
                                {{"power-p", {{"eps", 0.2}}}},
                                {PM{{"p", 3}}, PM{{"p", 2.5}}}),
                     {}});

        t.push_back({"SUPX-BDRY-1D", "(6.6)",
                     "one-dimensional weighted sup bound with boundary distance",
                     "existential c(p), D >= 1/2", true, "C",
                     [](const MarginInputs& in) {
                         return eval_supx(in, true, true, "SUPX-BDRY-1D");
                     },
                     make_cases({{"interval", 1, 1.0}},
                                {{"power-p", {{"eps", 0.2}}},
                                 {"bump-boundary", {{"center", 0.25}, {"width", 0.2}}}},
                                {PM{{"p", 1.5}}, PM{{"p", 2}}, PM{{"p", 3}}}),
                     {}});

        t.push_back({"HM-1D", "(1.32)",
                     "one-dimensional Hardy-Morrey bound; X^{1/p} optimal",
                     "existential c(p), D = bR", true, "C",
                     [](const MarginInputs& in) { return eval_hm(in, true, true, "HM-1D"); },
                     make_cases({{"interval", 1, 1.0}},
                                {{"power-p", {{"eps", 0.2}}},
                                 {"tent", {{"center", 0.25}, {"width", 0.2}}}},
                                {PM{{"p", 2}}, PM{{"p", 3}}}),
                     {}});

        t.push_back({"SUPX-BALL", "(6.10)",
                     "weighted sup bound with boundary distance on the ball",
                     "existential C(n,p), D >= e^Theta R", true, "C",
                     [](const MarginInputs& in) {
                         return eval_supx(in, true, false, "SUPX-BALL");
                     },
                     [] {
                         auto v = make_cases({{"ball", 2, 1.0}},
                                             {{"power-p", {{"eps", 0.2}}}},
                                             {PM{{"p", 3}}, PM{{"p", 4}}});
                         auto w = make_cases({{"ball", 3, 1.0}},
                                             {{"power-p", {{"eps", 0.2}}}},
                                             {PM{{"p", 4}}, PM{{"p", 5}}});
                         v.insert(v.end(), w.begin(), w.end());
                         return v;
                     }(),
                     {}});

        t.push_back({"HM-BALL", "(1.31)",
                     "Hardy-Morrey bound with boundary distance on the ball, p > n >= 2",
                     "existential c(n,p), D = 2bR", true, "C",
                     [](const MarginInputs& in) {
                         return eval_hm(in, true, false, "HM-BALL");
                     },
                     [] {
                         auto v = make_cases({{"ball", 2, 1.0}},
                                             {{"power-p", {{"eps", 0.2}}}},
                                             {PM{{"p", 3}}, PM{{"p", 4}}});
                         auto w = make_cases({{"ball", 3, 1.0}},
                                             {{"power-p", {{"eps", 0.2}}}},
                                             {PM{{"p", 4}}, PM{{"p", 5}}});
                         v.insert(v.end(), w.begin(), w.end());
                         return v;
                     }(),
                     {}});

        return t;
    }();
    return table;
}

namespace {

std::string normalize_id(std::string s) {
    std::string out;
    for (size_t i = 0; i < s.size();) {
        // map the unicode >= sign to "GE"
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x89 &&
            static_cast<unsigned char>(s[i + 2]) == 0xA5) {
            out += "GE";
            i += 3;
            continue;
        }
        char c = s[i++];
        if (c == '>' ) { out += "G"; continue; }
        if (c == '=') { out += "E"; continue; }
        if (c == '<') { out += "L"; continue; }
        out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

} // namespace

const InequalityRecord* find_record(const std::string& id) {
    std::string key = normalize_id(id);
    for (const auto& rec : registry()) {
        if (normalize_id(rec.id) == key) return &rec;
        for (const auto& a : rec.aliases)
            if (normalize_id(a) == key) return &rec;
    }
    return nullptr;
}

const InequalityRecord& require_record(const std::string& id) {
    const InequalityRecord* rec = find_record(id);
    if (rec) return *rec;
    std::ostringstream os;
    os << "unknown inequality id '" << id << "'; valid ids:";
    for (const auto& r : registry()) os << ' ' << r.id;
    throw RegistryError(os.str());
}

MarginResult evaluate_margin(const InequalityRecord& rec, MarginInputs inputs) {
    if (rec.escalate_key.empty()) return rec.evaluate(inputs);
    double knob = inputs.params.count(rec.escalate_key)
                      ? inputs.params[rec.escalate_key]
                      : 1.0;
    MarginResult last;
    for (int k = 0; k < 80; ++k) {
        inputs.params[rec.escalate_key] = knob;
        last = rec.evaluate(inputs);
        last.escalations = k;
        if (rec.escalate_key == "C") last.constant_used = knob;
        if (last.pass) return last;
        knob *= std::exp(1.0);
    }
    last.note = "escalation budget exhausted for knob '" + rec.escalate_key + "'";
    return last;
}

MarginResult inequality_margin(const std::string& id, const MarginInputs& inputs) {
    return evaluate_margin(require_record(id), inputs);
}

MarginInputs build_case_inputs(const InequalityRecord& rec, const MarginCase& c,
                               const QuadratureConfig& cfg) {
    MarginInputs in;
    in.domain = Domain::from_id(c.domain_id, c.n, c.size);
    in.params = c.params;
    in.cfg = cfg;
    auto fp = c.family_params;
    auto get = [&](const std::string& k, double fb) {
        for (auto& [kk, vv] : fp)
            if (kk == k) return vv;
        return fb;
    };
    auto getp = [&](const std::string& k, double fb) {
        auto it = c.params.find(k);
        return it == c.params.end() ? fb : it->second;
    };

    const std::string& fam = c.family;
    if (fam == "strip-tensor") {
        in.tensor = strip_tensor(get("eps", 0.05), get("eta", 0.5), get("delta", 1.0), c.n);
        return in;
    }
    if (fam == "power") {
        // s, q from the margin parameters unless overridden
        double s = get("s", getp("s", 2.0));
        double q = get("q", getp("q", getp("p", 1.0)));
        std::optional<CutoffSpec> cut;
        double w = get("cutoff", 0.0);
        if (w > 0) cut = CutoffSpec{CutoffSpec::Kind::NearZero, w};
        in.profile = power_family(s, q, get("eps", 0.2), cut);
        return in;
    }
    if (fam == "power-p") {
        double p = getp("p", 2.0);
        in.profile = power_family(p, p, get("eps", 0.2));
        return in;
    }
    if (fam == "power-origin") {
        in.profile = power_profile(ProfileVariable::RadialOrigin, get("a", 1.0),
                                   get("hi", c.size));
        return in;
    }
    if (fam == "power-origin-cut") {
        double s = getp("s", 3.0), p = getp("p", 2.0);
        double a0 = std::abs(s - c.n) / p;
        in.profile = power_profile(ProfileVariable::RadialOrigin, a0 + get("eps", 0.3),
                                   c.size, CutoffSpec{CutoffSpec::Kind::VanishAtHi,
                                                      get("cutw", 0.25 * c.size)});
        return in;
    }
    if (fam == "brv-base") {
        double s = getp("s", 3.0), q = getp("q", 1.0);
        in.profile = brv_profile((s - c.n) / q, get("eps", 0.2));
        return in;
    }
    if (fam == "brv-cov") {
        double s = getp("s", 3.0), p = getp("p", 2.0);
        in.profile = brv_profile((s - c.n) / p, get("eps", 0.2));
        return in;
    }
    if (fam == "shell-boundary") {
        // chi_{B_{R-delta}} expressed in the boundary distance: 1 for d > delta
        double delta = get("delta", 0.1);
        ProfilePiece p;
        p.lo = delta;
        p.hi = c.size;
        p.value = [](double) { return 1.0; };
        p.deriv = [](double) { return 0.0; };
        in.profile = Profile(ProfileVariable::RadialBoundary, {p},
                             {{delta, +1.0}}, "shell");
        return in;
    }
    if (fam == "sixpiece") {
        in.profile = sixpiece_hardy_morrey(get("delta", 0.1), getp("p", get("p", 3.0)),
                                           c.n);
        return in;
    }
    if (fam == "sixpiece-boundary") {
        in.profile = sixpiece_hardy_morrey(get("delta", 0.1), get("p", 4.0), c.n,
                                           ProfileVariable::RadialBoundary);
        return in;
    }
    if (fam == "bump") {
        in.profile = bump1d(get("center", 0.5), get("width", 0.3));
        return in;
    }
    if (fam == "bump-boundary") {
        in.profile =
            bump1d(get("center", 0.25), get("width", 0.15), ProfileVariable::RadialBoundary);
        return in;
    }
    if (fam == "tent") {
        in.profile = tent(get("center", 0.25), get("width", 0.2));
        return in;
    }
    if (fam == "tent-origin") {
        in.profile =
            tent(get("center", 0.5), get("width", 0.5), ProfileVariable::RadialOrigin);
        return in;
    }
    if (fam == "morrey-V") {
        in.profile = extremal_morrey_V(get("alpha", 1.0), get("beta", 1.0),
                                       getp("p", 3.0), c.n);
        return in;
    }
    if (fam == "annulus") {
        in.profile = annulus_indicator(get("delta", 0.1), get("eta", 0.5));
        return in;
    }
    if (fam == "mollified-annulus") {
        in.profile = mollify(annulus_indicator(get("delta", 0.1), get("eta", 0.5)),
                             get("width", 0.02));
        return in;
    }
    (void)rec;
    in.profile = make_profile(fam, fp);
    return in;
}

} // namespace hardylab
