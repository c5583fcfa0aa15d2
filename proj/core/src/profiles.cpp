#include "hardylab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace hardylab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Profile::Profile(ProfileVariable var, std::vector<ProfilePiece> pieces,
                 std::vector<ProfileJump> jumps, std::string family)
    : variable_(var), pieces_(std::move(pieces)), jumps_(std::move(jumps)),
      family_(std::move(family)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const ProfilePiece& a, const ProfilePiece& b) { return a.lo < b.lo; });
    for (size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i].hi > pieces_[i + 1].lo + 1e-15)
            throw ParameterError("profile pieces overlap");
}

double Profile::value(double t) const {
    for (const auto& p : pieces_)
        if (t >= p.lo && t <= p.hi) return p.value(t);
    return 0.0;
}

double Profile::deriv(double t) const {
    for (const auto& p : pieces_)
        if (t >= p.lo && t <= p.hi) return p.deriv(t);
    return 0.0;
}

double Profile::support_lo() const {
    return pieces_.empty() ? 0.0 : pieces_.front().lo;
}

double Profile::support_hi() const {
    return pieces_.empty() ? 0.0 : pieces_.back().hi;
}

std::vector<double> Profile::breakpoints() const {
    std::vector<double> b;
    for (const auto& p : pieces_) {
        b.push_back(p.lo);
        if (std::isfinite(p.hi)) b.push_back(p.hi);
    }
    for (const auto& j : jumps_) b.push_back(j.location);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

Profile Profile::multiplied_by_power(double e, double c) const {
    std::vector<ProfilePiece> ps;
    for (const auto& p : pieces_) {
        ProfilePiece np;
        np.lo = p.lo;
        np.hi = p.hi;
        auto v = p.value;
        auto d = p.deriv;
        np.value = [v, e, c](double t) { return c * std::pow(t, e) * v(t); };
        np.deriv = [v, d, e, c](double t) {
            return c * std::pow(t, e - 1.0) * (e * v(t) + t * d(t));
        };
        if (p.zero_form) {
            ZeroForm z;
            const ZeroForm& oz = *p.zero_form;
            z.value_power = oz.value_power + e;
            auto vs = oz.value_smooth;
            z.value_smooth = [vs, c](double t) { return c * vs(t); };
            // derivative of c t^{e+a} s(t): exponent e+a-1, smooth (e+a)s + t s'
            z.deriv_power = oz.value_power + e - 1.0;
            double a = oz.value_power;
            auto ds = oz.deriv_smooth;
            double dp = oz.deriv_power;
            z.deriv_smooth = [vs, ds, dp, a, e, c](double t) {
                // t*u'(t) = t^{a}( (dp-a+1 adjust) ... ) -- assemble from the two forms
                double smooth_du = ds(t) * std::pow(t, dp - (a - 1.0)); // = t^{1-a} u'(t)/1
                return c * ((e + 0.0) * vs(t) + smooth_du);
            };
            np.zero_form = z;
        }
        ps.push_back(np);
    }
    std::vector<ProfileJump> js;
    for (const auto& j : jumps_)
        js.push_back({j.location, c * std::pow(j.location, e) * j.magnitude});
    return Profile(variable_, std::move(ps), std::move(js), family_ + "*t^e");
}

Profile Profile::restricted(double lo, double hi) const {
    std::vector<ProfilePiece> ps;
    for (const auto& p : pieces_) {
        double a = std::max(p.lo, lo), b = std::min(p.hi, hi);
        if (!(b > a)) continue;
        ProfilePiece np = p;
        np.lo = a;
        np.hi = b;
        if (a > 0.0) np.zero_form.reset();
        ps.push_back(np);
    }
    std::vector<ProfileJump> js;
    for (const auto& j : jumps_)
        if (j.location > lo && j.location < hi) js.push_back(j);
    return Profile(variable_, std::move(ps), std::move(js), family_);
}

Profile Profile::rescaled(double lambda) const {
    if (!(lambda > 0)) throw ParameterError("rescaled: lambda must be positive");
    std::vector<ProfilePiece> ps;
    for (const auto& p : pieces_) {
        ProfilePiece np;
        np.lo = p.lo * lambda;
        np.hi = p.hi * lambda;
        auto v = p.value;
        auto d = p.deriv;
        np.value = [v, lambda](double t) { return v(t / lambda); };
        np.deriv = [d, lambda](double t) { return d(t / lambda) / lambda; };
        if (p.zero_form) {
            const ZeroForm& oz = *p.zero_form;
            ZeroForm z;
            z.value_power = oz.value_power;
            z.deriv_power = oz.deriv_power;
            auto vs = oz.value_smooth;
            auto ds = oz.deriv_smooth;
            double ca = std::pow(lambda, -oz.value_power);
            double cb = std::pow(lambda, -oz.deriv_power - 1.0);
            z.value_smooth = [vs, lambda, ca](double t) { return ca * vs(t / lambda); };
            z.deriv_smooth = [ds, lambda, cb](double t) { return cb * ds(t / lambda); };
            np.zero_form = z;
        }
        ps.push_back(np);
    }
    std::vector<ProfileJump> js;
    for (const auto& j : jumps_) js.push_back({j.location * lambda, j.magnitude});
    return Profile(variable_, std::move(ps), std::move(js), family_);
}

Profile Profile::with_variable(ProfileVariable v) const {
    Profile p = *this;
    p.variable_ = v;
    return p;
}

namespace {

double cutoff_value(const CutoffSpec& c, double hi, double t) {
    switch (c.kind) {
        case CutoffSpec::Kind::NearZero:
            return smooth_step((c.width - t) / (0.5 * c.width));
        case CutoffSpec::Kind::VanishAtHi:
            return smooth_step((hi - t) / c.width);
    }
    return 1.0;
}

double cutoff_deriv(const CutoffSpec& c, double hi, double t) {
    switch (c.kind) {
        case CutoffSpec::Kind::NearZero:
            return -smooth_step_deriv((c.width - t) / (0.5 * c.width)) / (0.5 * c.width);
        case CutoffSpec::Kind::VanishAtHi:
            return -smooth_step_deriv((hi - t) / c.width) / c.width;
    }
    return 0.0;
}

} // namespace

Profile power_profile(ProfileVariable var, double exponent, double hi,
                      std::optional<CutoffSpec> cutoff) {
    if (cutoff && cutoff->kind == CutoffSpec::Kind::VanishAtHi && !std::isfinite(hi))
        throw ParameterError("power_profile: VanishAtHi cutoff needs a finite upper bound");
    ProfilePiece p;
    p.lo = 0.0;
    p.hi = hi;
    const double a = exponent;
    if (!cutoff) {
        p.value = [a](double t) { return std::pow(t, a); };
        p.deriv = [a](double t) { return a * std::pow(t, a - 1.0); };
        ZeroForm z;
        z.value_power = a;
        z.deriv_power = a - 1.0;
        z.value_smooth = [](double) { return 1.0; };
        z.deriv_smooth = [a](double) { return a; };
        p.zero_form = z;
    } else {
        CutoffSpec c = *cutoff;
        p.value = [a, c, hi](double t) { return std::pow(t, a) * cutoff_value(c, hi, t); };
        p.deriv = [a, c, hi](double t) {
            return std::pow(t, a - 1.0) *
                   (a * cutoff_value(c, hi, t) + t * cutoff_deriv(c, hi, t));
        };
        ZeroForm z;
        z.value_power = a;
        z.deriv_power = a - 1.0;
        z.value_smooth = [c, hi](double t) { return cutoff_value(c, hi, t); };
        z.deriv_smooth = [a, c, hi](double t) {
            return a * cutoff_value(c, hi, t) + t * cutoff_deriv(c, hi, t);
        };
        p.zero_form = z;
    }
    return Profile(var, {p}, {}, "power");
}

Profile power_family(double s, double q, double eps, std::optional<CutoffSpec> cutoff) {
    if (!(s > 1)) throw ParameterError("power family: need s > 1");
    if (!(q >= 1)) throw ParameterError("power family: need q >= 1");
    if (!(eps > 0)) throw ParameterError("power family: need eps > 0");
    return power_profile(ProfileVariable::RadialBoundary, (s - 1.0) / q + eps, kInf, cutoff);
}

Profile annulus_indicator(double delta, double eta) {
    if (!(delta > 0) || !(delta < eta))
        throw ParameterError("annulus: need 0 < delta < eta");
    ProfilePiece p;
    p.lo = delta;
    p.hi = eta;
    p.value = [](double) { return 1.0; };
    p.deriv = [](double) { return 0.0; };
    return Profile(ProfileVariable::RadialOrigin, {p},
                   {{delta, +1.0}, {eta, -1.0}}, "annulus");
}

Profile shell_indicator(double delta, double R) {
    if (!(delta > 0) || !(delta < R)) throw ParameterError("shell: need 0 < delta < R");
    ProfilePiece p;
    p.lo = 0.0;
    p.hi = R - delta;
    p.value = [](double) { return 1.0; };
    p.deriv = [](double) { return 0.0; };
    ZeroForm z;
    z.value_power = 0.0;
    z.deriv_power = 0.0;
    z.value_smooth = [](double) { return 1.0; };
    z.deriv_smooth = [](double) { return 0.0; };
    p.zero_form = z;
    return Profile(ProfileVariable::RadialOrigin, {p}, {{R - delta, -1.0}}, "shell");
}

Profile cheeger_profile(double s, double d0) {
    if (!(d0 > 0)) throw ParameterError("cheeger profile: need d0 > 0");
    ProfilePiece p;
    p.lo = d0;
    p.hi = kInf;
    const double a = s - 1.0;
    p.value = [a](double t) { return std::pow(t, a); };
    p.deriv = [a](double t) { return a * std::pow(t, a - 1.0); };
    return Profile(ProfileVariable::RadialBoundary, {p},
                   {{d0, std::pow(d0, a)}}, "cheeger");
}

namespace {

double mollifier_mass_1d() {
    static const double c = integrate([](double x) { return bump_profile(x); }, -1.0, 1.0,
                                      {1e-13, 1e-16, 8000})
                                .value;
    return c;
}

} // namespace

Profile mollify(const Profile& src, double eps) {
    if (!(eps > 0)) throw ParameterError("mollify: width must be positive");
    auto bps = src.breakpoints();
    for (size_t i = 0; i + 1 < bps.size(); ++i)
        if (std::isfinite(bps[i + 1]) && bps[i + 1] - bps[i] < 2 * eps)
            throw ParameterError("mollify: width exceeds half the least breakpoint gap");
    if (src.support_lo() < eps)
        throw ParameterError("mollify: support would cross 0");
    if (!std::isfinite(src.support_hi()))
        throw ParameterError("mollify: profile must have bounded support");

    const double c = 1.0 / mollifier_mass_1d();
    // Evaluation integrates the closed-form kernel against the source pieces;
    // splits at source breakpoints keep each panel smooth.
    auto conv = [src, eps, c, bps](double t, bool want_deriv) {
        double lo = t - eps, hi = t + eps;
        std::vector<double> cuts{lo, hi};
        for (double b : bps)
            if (b > lo && b < hi) cuts.push_back(b);
        std::sort(cuts.begin(), cuts.end());
        QuadratureConfig cfg;
        cfg.rel_tol = 1e-11;
        double sum = 0;
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            auto f = [&](double y) {
                double k = want_deriv ? bump_profile_deriv((t - y) / eps) / (eps * eps)
                                      : bump_profile((t - y) / eps) / eps;
                return c * k * src.value(y);
            };
            sum += integrate(f, cuts[i], cuts[i + 1], cfg).value;
        }
        return sum;
    };

    ProfilePiece p;
    p.lo = src.support_lo() - eps;
    p.hi = src.support_hi() + eps;
    p.value = [conv](double t) { return conv(t, false); };
    p.deriv = [conv](double t) { return conv(t, true); };
    p.numeric = true;
    return Profile(src.variable(), {p}, {}, "mollified-" + src.family());
}

Profile sixpiece_hardy_morrey(double delta, double p, int n, ProfileVariable var) {
    if (!(p > n) || n < 1) throw ParameterError("sixpiece: need p > n >= 1");
    if (!(delta > 0) || !(delta < 1)) throw ParameterError("sixpiece: need 0 < delta < 1");
    const double H = (p - n) / p;
    const double Ld = std::log(1.0 / delta);
    const double d2H = std::pow(delta, 2 * H);
    const double dH = std::pow(delta, H);
    const double dm3H = std::pow(delta, -3 * H);
    const double d3H = std::pow(delta, 3 * H);
    auto pw = [](double b, double e) { return std::pow(b, e); };

    std::vector<ProfilePiece> ps(6);
    double b6 = pw(delta, 6), b5 = pw(delta, 5), b4 = pw(delta, 4), b3 = pw(delta, 3),
           b2 = delta * delta;

    ps[0] = {b6, b5,
             [=](double t) { return d2H * pw(t, H) * (6.0 - std::log(1.0 / t) / Ld); },
             [=](double t) {
                 return d2H * pw(t, H - 1) * (H * (6.0 - std::log(1.0 / t) / Ld) + 1.0 / Ld);
             }};
    ps[1] = {b5, b4, [=](double t) { return dm3H * pw(t, 2 * H); },
             [=](double t) { return 2 * H * dm3H * pw(t, 2 * H - 1); }};
    ps[2] = {b4, b3,
             [=](double t) { return dH * pw(t, H) * (1.0 + H * std::log(t / b4)); },
             [=](double t) { return dH * H * pw(t, H - 1) * (2.0 + H * std::log(t / b4)); }};
    ps[3] = {b3, b2,
             [=](double t) { return dH * pw(t, H) * (1.0 - H * std::log(t / b2)); },
             [=](double t) { return -dH * H * H * pw(t, H - 1) * std::log(t / b2); }};
    ps[4] = {b2, delta, [=](double) { return d3H; }, [](double) { return 0.0; }};
    ps[5] = {delta, 1.0,
             [=](double t) { return d2H * pw(t, H) * std::log(1.0 / t) / Ld; },
             [=](double t) { return d2H * pw(t, H - 1) * (H * std::log(1.0 / t) - 1.0) / Ld; }};
    return Profile(var, std::move(ps), {}, "sixpiece");
}

Profile extremal_sobolev_U(double alpha, double beta, double p, int n) {
    if (!(beta > 0) || !(p > 1)) throw ParameterError("sobolev-U: need beta > 0, p > 1");
    const double e1 = 1.0 - 1.0 / p;
    const double e2 = 1.0 - static_cast<double>(n) / p;
    ProfilePiece pc;
    pc.lo = 0.0;
    pc.hi = kInf;
    pc.value = [=](double t) { return alpha * std::pow(1.0 + beta * std::pow(t, e1), e2); };
    pc.deriv = [=](double t) {
        return alpha * e2 * std::pow(1.0 + beta * std::pow(t, e1), e2 - 1.0) * beta * e1 *
               std::pow(t, e1 - 1.0);
    };
    ZeroForm z;
    z.value_power = 0.0;
    z.deriv_power = e1 - 1.0;
    z.value_smooth = [=](double t) { return alpha * std::pow(1.0 + beta * std::pow(t, e1), e2); };
    z.deriv_smooth = [=](double t) {
        return alpha * e2 * std::pow(1.0 + beta * std::pow(t, e1), e2 - 1.0) * beta * e1;
    };
    pc.zero_form = z;
    return Profile(ProfileVariable::RadialOrigin, {pc}, {}, "sobolev-U");
}

Profile extremal_morrey_V(double alpha, double beta, double p, int n) {
    if (!(beta > 0) || !(p > n)) throw ParameterError("morrey-V: need beta > 0, p > n");
    const double k = (p - n) / (p - 1.0);
    const double bk = std::pow(beta, k);
    ProfilePiece pc;
    pc.lo = 0.0;
    pc.hi = beta;
    pc.value = [=](double t) { return alpha * (bk - std::pow(t, k)); };
    pc.deriv = [=](double t) { return -alpha * k * std::pow(t, k - 1.0); };
    ZeroForm z;
    z.value_power = 0.0;
    z.deriv_power = k - 1.0;
    z.value_smooth = [=](double t) { return alpha * (bk - std::pow(t, k)); };
    z.deriv_smooth = [=](double) { return -alpha * k; };
    pc.zero_form = z;
    return Profile(ProfileVariable::RadialOrigin, {pc}, {}, "morrey-V");
}

Profile brv_profile(double base, double eps) {
    if (!(eps > 0)) throw ParameterError("brv: need eps > 0");
    ProfilePiece inner, outer;
    const double ai = base + eps, ao = base - eps;
    inner.lo = 0.0;
    inner.hi = 1.0;
    inner.value = [ai](double t) { return std::pow(t, ai); };
    inner.deriv = [ai](double t) { return ai * std::pow(t, ai - 1.0); };
    ZeroForm z;
    z.value_power = ai;
    z.deriv_power = ai - 1.0;
    z.value_smooth = [](double) { return 1.0; };
    z.deriv_smooth = [ai](double) { return ai; };
    inner.zero_form = z;
    outer.lo = 1.0;
    outer.hi = kInf;
    outer.value = [ao](double t) { return std::pow(t, ao); };
    outer.deriv = [ao](double t) { return ao * std::pow(t, ao - 1.0); };
    return Profile(ProfileVariable::RadialOrigin, {inner, outer}, {}, "brv");
}

Profile brv_family(double p, int n, double eps) {
    if (!(p > 1)) throw ParameterError("brv: need p > 1");
    return brv_profile((p - n) / p, eps);
}

Profile bump1d(double center, double halfwidth, ProfileVariable var) {
    if (!(halfwidth > 0) || center - halfwidth < 0)
        throw ParameterError("bump: support must stay positive");
    ProfilePiece p;
    p.lo = center - halfwidth;
    p.hi = center + halfwidth;
    p.value = [=](double t) { return bump_profile((t - center) / halfwidth); };
    p.deriv = [=](double t) { return bump_profile_deriv((t - center) / halfwidth) / halfwidth; };
    return Profile(var, {p}, {}, "bump");
}

Profile tent(double center, double halfwidth, ProfileVariable var) {
    if (!(halfwidth > 0) || center - halfwidth < 0)
        throw ParameterError("tent: support must stay positive");
    ProfilePiece up, down;
    up.lo = center - halfwidth;
    up.hi = center;
    up.value = [=](double t) { return (t - (center - halfwidth)) / halfwidth; };
    up.deriv = [=](double) { return 1.0 / halfwidth; };
    down.lo = center;
    down.hi = center + halfwidth;
    down.value = [=](double t) { return ((center + halfwidth) - t) / halfwidth; };
    down.deriv = [=](double) { return -1.0 / halfwidth; };
    return Profile(var, {up, down}, {}, "tent");
}

TensorProfile strip_tensor(double eps, double eta, double delta_scale, int n) {
    if (!(eps > 0) || !(eps < eta)) throw ParameterError("strip-tensor: need 0 < eps < eta");
    if (n < 2) throw ParameterError("strip-tensor: need n >= 2");
    if (!(delta_scale > 0)) throw ParameterError("strip-tensor: need delta > 0");
    TensorProfile tp;
    ProfilePiece p;
    p.lo = eps;
    p.hi = eta;
    p.value = [](double) { return 1.0; };
    p.deriv = [](double) { return 0.0; };
    tp.axial = Profile(ProfileVariable::Axial, {p}, {{eps, +1.0}, {eta, -1.0}}, "strip-tensor");
    tp.n = n;
    tp.scale = delta_scale;
    const int m = n - 1;
    const double area = unit_sphere_area(m);
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-12;
    tp.M1 = integrate([&](double r) { return area * bump_profile(r) * std::pow(r, m - 1); },
                      0.0, 1.0, cfg)
                .value;
    tp.K1 = integrate(
                [&](double r) {
                    return area * std::abs(bump_profile_deriv(r)) * std::pow(r, m - 1);
                },
                0.0, 1.0, cfg)
                .value;
    return tp;
}

Profile abs_pow_times_power(const Profile& u, double q, double e) {
    std::vector<ProfilePiece> ps;
    for (const auto& p : u.pieces()) {
        ProfilePiece np;
        np.lo = p.lo;
        np.hi = p.hi;
        auto v = p.value;
        auto d = p.deriv;
        np.value = [v, q, e](double t) { return std::pow(std::abs(v(t)), q) * std::pow(t, e); };
        np.deriv = [v, d, q, e](double t) {
            double vv = v(t);
            double av = std::abs(vv);
            double sgn = vv >= 0 ? 1.0 : -1.0;
            double chain = (q == 1.0) ? sgn * d(t)
                                      : q * std::pow(av, q - 1.0) * sgn * d(t);
            return chain * std::pow(t, e) + e * std::pow(t, e - 1.0) * std::pow(av, q);
        };
        if (p.zero_form) {
            const ZeroForm& oz = *p.zero_form;
            ZeroForm z;
            double a = oz.value_power, dp = oz.deriv_power;
            auto vs = oz.value_smooth;
            auto ds = oz.deriv_smooth;
            z.value_power = q * a + e;
            z.value_smooth = [vs, q](double t) { return std::pow(std::abs(vs(t)), q); };
            z.deriv_power = q * a + e - 1.0;
            // d/dt [ |u|^q t^e ] = t^{qa+e-1} ( q |s|^{q-1} sgn(s) t^{1+dp-a} ds + e |s|^q )
            z.deriv_smooth = [vs, ds, q, e, a, dp](double t) {
                double sv = vs(t);
                double asv = std::abs(sv);
                double sgn = sv >= 0 ? 1.0 : -1.0;
                double lead = (q == 1.0) ? sgn : q * std::pow(asv, q - 1.0) * sgn;
                return lead * std::pow(t, 1.0 + dp - a) * ds(t) + e * std::pow(asv, q);
            };
            np.zero_form = z;
        }
        ps.push_back(np);
    }
    std::vector<ProfileJump> js;
    for (const auto& j : u.jumps()) {
        // jump of |u|^q t^e at the location: map both one-sided values
        double lo_val = u.value(j.location) - 0.0; // value() returns the piece value; use limits
        // one-sided limits: left = value just below, right = just above
        double hp = std::max(1e-12 * std::max(1.0, j.location), 1e-300);
        double left = u.value(j.location - hp);
        double right = u.value(j.location + hp);
        (void)lo_val;
        double mag = (std::pow(std::abs(right), q) - std::pow(std::abs(left), q)) *
                     std::pow(j.location, e);
        js.push_back({j.location, mag});
    }
    return Profile(u.variable(), std::move(ps), std::move(js), u.family() + "^q*t^e");
}

namespace {

double get_param(const std::vector<std::pair<std::string, double>>& params,
                 const std::string& key, std::optional<double> fallback = std::nullopt) {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    if (fallback) return *fallback;
    throw ParameterError("family parameter '" + key + "' is required");
}

bool has_param(const std::vector<std::pair<std::string, double>>& params,
               const std::string& key) {
    for (const auto& [k, v] : params)
        if (k == key) return true;
    return false;
}

} // namespace

Profile make_profile(const std::string& family,
                     const std::vector<std::pair<std::string, double>>& params) {
    if (family == "power") {
        std::optional<CutoffSpec> cut;
        if (has_param(params, "cutoff"))
            cut = CutoffSpec{CutoffSpec::Kind::NearZero, get_param(params, "cutoff")};
        return power_family(get_param(params, "s"), get_param(params, "q", 1.0),
                            get_param(params, "eps"), cut);
    }
    if (family == "annulus")
        return annulus_indicator(get_param(params, "delta"), get_param(params, "eta"));
    if (family == "mollified-annulus")
        return mollify(annulus_indicator(get_param(params, "delta"), get_param(params, "eta")),
                       get_param(params, "width"));
    if (family == "shell")
        return shell_indicator(get_param(params, "delta"), get_param(params, "R", 1.0));
    if (family == "sixpiece")
        return sixpiece_hardy_morrey(get_param(params, "delta"), get_param(params, "p"),
                                     static_cast<int>(get_param(params, "n")));
    if (family == "sobolev-U")
        return extremal_sobolev_U(get_param(params, "alpha", 1.0), get_param(params, "beta"),
                                  get_param(params, "p"),
                                  static_cast<int>(get_param(params, "n")));
    if (family == "morrey-V")
        return extremal_morrey_V(get_param(params, "alpha", 1.0), get_param(params, "beta"),
                                 get_param(params, "p"),
                                 static_cast<int>(get_param(params, "n")));
    if (family == "brv")
        return brv_family(get_param(params, "p"), static_cast<int>(get_param(params, "n")),
                          get_param(params, "eps"));
    if (family == "bump")
        return bump1d(get_param(params, "center"), get_param(params, "width"));
    if (family == "tent") return tent(get_param(params, "center"), get_param(params, "width"));
    if (family == "cheeger")
        return cheeger_profile(get_param(params, "s"), get_param(params, "d0"));
    throw ParameterError("unknown family '" + family +
                         "' (valid: power, annulus, mollified-annulus, shell, sixpiece, "
                         "sobolev-U, morrey-V, brv, bump, tent, cheeger, strip-tensor)");
}

} // namespace hardylab
