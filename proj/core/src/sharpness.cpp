#include "hardylab/sharpness.hpp"

#include <algorithm>
#include <cmath>

#include "hardylab/logweight.hpp"

namespace hardylab {

namespace {

double regression_rms(const std::vector<double>& x, const std::vector<double>& y,
                      double* slope = nullptr, double* intercept = nullptr) {
    const size_t m = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = m * sxx - sx * sx;
    double b = (m * sxy - sx * sy) / denom;
    double a = (sy - b * sx) / m;
    double rms = 0;
    for (size_t i = 0; i < m; ++i) {
        double r = y[i] - (a + b * x[i]);
        rms += r * r;
    }
    if (slope) *slope = b;
    if (intercept) *intercept = a;
    return std::sqrt(rms / m);
}

} // namespace

FitOutcome extrapolate(const std::vector<SweepPoint>& pts, FitModel model) {
    if (pts.size() < 4) throw ParameterError("extrapolate: need at least 4 grid points");
    std::vector<SweepPoint> s = pts;
    std::sort(s.begin(), s.end(),
              [](const SweepPoint& a, const SweepPoint& b) { return a.param > b.param; });
    // tail toward the smallest parameters must be monotone
    size_t tail = std::min<size_t>(s.size(), 4);
    bool inc = true, dec = true;
    for (size_t i = s.size() - tail; i + 1 < s.size(); ++i) {
        if (s[i + 1].quotient.value > s[i].quotient.value) dec = false;
        if (s[i + 1].quotient.value < s[i].quotient.value) inc = false;
    }
    // numerically constant tail: the limit is the data
    {
        double lo = s.back().quotient.value, hi = lo;
        for (const auto& p : s) {
            lo = std::min(lo, p.quotient.value);
            hi = std::max(hi, p.quotient.value);
        }
        if (hi - lo <= 1e-9 * std::max(1.0, std::abs(hi)))
            return {0.5 * (lo + hi), hi - lo, 0.0};
    }
    if (!inc && !dec) throw ParameterError("extrapolate: fit refused, non-monotone tail");

    if (model == FitModel::Logarithmic) {
        std::vector<double> x, y;
        for (const auto& p : s) {
            x.push_back(1.0 / std::log(1.0 / p.param));
            y.push_back(p.quotient.value);
        }
        double slope, inter;
        double rms = regression_rms(x, y, &slope, &inter);
        return {inter, rms, 1.0};
    }

    // algebraic: golden-section over the limit, regressing log|q - q_inf| on log t
    auto sse_for = [&](double qinf, double* rate) {
        std::vector<double> x, y;
        for (const auto& p : s) {
            double d = std::abs(p.quotient.value - qinf);
            if (d <= 0) d = 1e-300;
            x.push_back(std::log(p.param));
            y.push_back(std::log(d));
        }
        double slope, inter;
        double rms = regression_rms(x, y, &slope, &inter);
        if (rate) *rate = slope;
        // rebuild residual in original units
        double sgn = (s.back().quotient.value > qinf) ? 1.0 : -1.0;
        double out = 0;
        for (const auto& p : s) {
            double fit = qinf + sgn * std::exp(inter) * std::pow(p.param, slope);
            double r = p.quotient.value - fit;
            out += r * r;
        }
        (void)rms;
        return std::sqrt(out / s.size());
    };
    // Seed with the Aitken delta-squared estimate from the last three points
    // (exact for a clean power law on a geometric grid), then refine the
    // least-squares limit in a local bracket around it.
    const double q1 = s[s.size() - 3].quotient.value;
    const double q2 = s[s.size() - 2].quotient.value;
    const double q3 = s.back().quotient.value;
    double denom = (q3 - q2) - (q2 - q1);
    double seed = (std::abs(denom) > 1e-300)
                      ? q3 - (q3 - q2) * (q3 - q2) / denom
                      : q3;
    double width = std::max({std::abs(q3 - seed) * 4.0, std::abs(q3 - q2),
                             1e-9 * std::max(1.0, std::abs(q3))});
    double a = seed - width, b = seed + width;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = sse_for(c, nullptr), fd = sse_for(d, nullptr);
    for (int it = 0; it < 200; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = sse_for(c, nullptr);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = sse_for(d, nullptr);
        }
    }
    double qinf = 0.5 * (a + b);
    if (sse_for(seed, nullptr) < sse_for(qinf, nullptr)) qinf = seed;
    double rate = 0;
    double rms = sse_for(qinf, &rate);
    return {qinf, rms, rate};
}

namespace {

// drop failed points, flag non-monotone tails, fit what is left
void finalize_sweep(SweepResult& r, FitModel model) {
    std::vector<SweepPoint> good;
    for (const auto& p : r.points)
        if (p.ok) good.push_back(p);
    for (size_t i = 0; i + 1 < good.size(); ++i) {
        double a = good[i].quotient.value - r.target;
        double b = good[i + 1].quotient.value - r.target;
        if (a * b < 0) r.monotone = false;
    }
    try {
        FitOutcome f = extrapolate(good, model);
        r.fitted_limit = f.limit;
        r.fit_residual = f.residual;
    } catch (const Error&) {
    }
}

} // namespace

PuncturedQuotient punctured_annulus_quotient(int n, double s, double delta, double eta,
                                             const QuadratureConfig& cfg) {
    if (!(s > n)) throw ParameterError("punctured quotient: need s > n");
    PuncturedQuotient out;
    double dn = std::pow(delta, n - s), en = std::pow(eta, n - s);
    out.closed_form = (s - n) * (dn + en) / (dn - en);
    Domain dom = Domain::punctured_space(n);
    Profile u = annulus_indicator(delta, eta);
    QuotientSpec qs{{FunctionalKind::GradWeighted, 1.0, {1.0 - s, 0, 1}},
                    {FunctionalKind::ValueWeighted, 1.0, {-s, 0, 1}}};
    out.quadrature = quotient(qs, u, dom, cfg);
    return out;
}

SweepResult punctured_quotient_sweep(int n, double s, double eta,
                                     const std::vector<double>& deltas,
                                     const QuadratureConfig& cfg) {
    SweepResult r;
    r.family = "annulus";
    r.quotient_id = "L1 origin quotient";
    r.target = s - n;
    r.target_anchor = "(4.4)";
    r.fit_model = "algebraic";
    for (double d : deltas) {
        try {
            PuncturedQuotient q = punctured_annulus_quotient(n, s, d, eta, cfg);
            r.points.push_back({d, q.quadrature});
        } catch (const Error& e) {
            r.points.push_back({d, Estimate{}, false, e.what()});
        }
    }
    finalize_sweep(r, FitModel::Algebraic);
    return r;
}

Estimate ball_series_quotient(int n, double s, int m, double beta, double delta,
                              const QuadratureConfig& cfg) {
    if (!(delta > 0) || !(delta < 1))
        throw ParameterError("ball series quotient: need 0 < delta < 1");
    if (m < 0) throw ParameterError("ball series quotient: need m >= 0");
    auto num = integrate(
        [&](double r) { return std::pow(1.0 - r, m + 1.0 - s) * std::pow(r, n - 2.0); }, 0.0,
        1.0 - delta, cfg);
    auto den = integrate(
        [&](double r) { return std::pow(1.0 - r, -beta) * std::pow(r, n - 1.0); }, 0.0,
        1.0 - delta, cfg);
    return divide(num * (n - 1.0), den);
}

SweepResult iterated_ball_series_sweep(int n, double s, int m, double beta,
                                       const std::vector<double>& deltas,
                                       const QuadratureConfig& cfg) {
    if (!(s >= 2)) throw ParameterError("ball series sweep: need s >= 2");
    if (m > static_cast<int>(std::floor(s)) - 2)
        throw ParameterError("ball series sweep: need m <= floor(s) - 2");
    SweepResult r;
    r.family = "shell";
    r.quotient_id = "ball series quotient (m=" + std::to_string(m) + ")";
    r.target = (beta == s - m - 1.0) ? (n - 1.0) : 0.0;
    r.target_anchor = "(4.32)";
    r.fit_model = "algebraic";
    for (double d : deltas) {
        try {
            r.points.push_back({d, ball_series_quotient(n, s, m, beta, d, cfg)});
        } catch (const Error& e) {
            r.points.push_back({d, Estimate{}, false, e.what()});
        }
    }
    finalize_sweep(r, FitModel::Algebraic);
    return r;
}

double ball_series_x_quotient(int n, double s, double log10_delta,
                              const QuadratureConfig& cfg) {
    if (!(s >= 1)) throw ParameterError("ball series X quotient: need s >= 1");
    double frac = s - std::floor(s); // [s] - s = -frac
    double delta = std::pow(10.0, log10_delta);
    // N = int_delta^1 u^{-frac} (1-u)^{n-2} du, with the power endpoint at u = 0
    auto rest = [n](double u) { return std::pow(1.0 - u, n - 2.0); };
    Estimate num = integrate_power_log_zero(-frac, 0.0, 1.0, rest, 1.0, cfg);
    if (delta > 0)
        num = num - integrate_power_log_zero(-frac, 0.0, 1.0, rest, delta, cfg);
    // denominator: int_1^{1-log delta} t^{-1} (1 - e^{1-t})^{n-1} dt, summed
    // exactly past t = 50 where the algebraic tail takes over
    double T = 1.0 - log10_delta * std::log(10.0);
    double Tcut = std::min(T, 50.0);
    Estimate den = integrate(
        [&](double t) { return std::pow(1.0 - std::exp(1.0 - t), n - 1.0) / t; }, 1.0, Tcut,
        cfg);
    if (T > Tcut) den += Estimate{std::log(T / Tcut), 1e-14};
    return (n - 1.0) * num.value / den.value;
}

Remark26Point remark26_ratio(int n, double R, double s, double q, double eps,
                             const QuadratureConfig& cfg) {
    Remark26Point out;
    out.eps = eps;
    double A0 = (s - 1.0) / q, A = A0 + eps;
    out.closed_form = (std::pow(A, q) - std::pow(A0, q)) / (eps * q);
    Domain dom = Domain::ball(n, R);
    Profile u = power_family(s, q, eps);
    Estimate grad = weighted_integral(u, dom, {FunctionalKind::GradWeighted, q, {q - s, 0, 1}},
                                      cfg);
    Estimate val =
        weighted_integral(u, dom, {FunctionalKind::ValueWeighted, q, {-s, 0, 1}}, cfg);
    Estimate num = grad - val * std::pow(A0, q);
    // pairing denominator: <-Delta d, |u|^q d^{1-s}>
    Profile g = abs_pow_times_power(u, q, 1.0 - s);
    Estimate den = neg_laplacian_pairing(g, dom, cfg);
    out.numeric = divide(num, den);
    return out;
}

SixpieceForms sixpiececlosed_impl(int n, double p, double delta) {
    SixpieceForms f;
    const double H = (p - n) / p;
    const double W = std::log(1.0 / delta);
    const double L = 1.0 / W;
    const double area = unit_sphere_area(n);
    const double dpH = std::pow(delta, p * H);
    const double d2pH = std::pow(delta, 2.0 * p * H);

    auto abs_pow_int = [&](double Lv, double Hv) {
        // int_0^1 |Hv y - Lv|^p dy
        if (Lv <= Hv)
            return (std::pow(Lv, p + 1.0) + std::pow(Hv - Lv, p + 1.0)) / (Hv * (p + 1.0));
        return (std::pow(Lv, p + 1.0) - std::pow(Lv - Hv, p + 1.0)) / (Hv * (p + 1.0));
    };
    f.A1 = area * d2pH * W * (abs_pow_int(L, H) - std::pow(H, p) / (p + 1.0));
    f.A6 = area / ((p + 1.0) * H) * d2pH * W *
           (std::pow(H + L, p + 1.0) - std::pow(L, p + 1.0) - std::pow(H, p + 1.0));
    f.A2 = -area / p * std::pow(H, p - 1.0) * dpH * (1.0 - dpH);
    f.A5 = area / p * std::pow(H, p - 1.0) * (std::pow(2.0, p) - 1.0) * dpH * (1.0 - dpH);
    const double HW = H * W;
    f.A3 = area / (p + 1.0) * dpH *
           (std::pow(H, 2.0 * p) * std::pow(W, p + 1.0) -
            std::pow(H, p - 1.0) * (std::pow(1.0 + HW, p + 1.0) - 1.0));
    f.A4 = area / (p + 1.0) * dpH * std::pow(H, p - 1.0) *
           (std::pow(2.0 + HW, p + 1.0) - std::pow(2.0, p + 1.0) - std::pow(1.0 + HW, p + 1.0) +
            1.0);
    f.leading = p * area * std::pow(H, 2.0 * (p - 1.0)) * dpH * std::pow(W, p - 1.0);
    return f;
}

SixpieceForms sixpiece_closed_forms(int n, double p, double delta) {
    if (!(p > n)) throw ParameterError("sixpiece closed forms: need p > n");
    return sixpiececlosed_impl(n, p, delta);
}

Estimate sixpiece_numeric(int n, double p, double delta, int k,
                          const QuadratureConfig& cfg) {
    Profile u = sixpiece_hardy_morrey(delta, p, n);
    const double H = (p - n) / p;
    Domain dom = Domain::ball(n, 1.0);
    Profile probe = u;
    if (k > 0) {
        double lo = std::pow(delta, k), hi = std::pow(delta, k - 1);
        probe = u.restricted(lo, hi);
    }
    // split the gradient quadrature at the derivative's zero inside the
    // outermost annulus
    Estimate grad{0, 0};
    {
        CoAreaMap map = coarea_map(dom, probe.variable());
        for (const auto& piece : probe.pieces()) {
            double a = std::max(piece.lo, map.lo), b = std::min(piece.hi, map.hi);
            if (!(b > a)) continue;
            std::vector<double> cuts{a, b};
            double kink = std::exp(-1.0 / H);
            if (kink > a && kink < b) cuts.push_back(kink);
            std::sort(cuts.begin(), cuts.end());
            for (size_t i = 0; i + 1 < cuts.size(); ++i) {
                auto f = [&](double t) {
                    double g = std::abs(piece.deriv(t));
                    return std::pow(g, p) * map.surface(t);
                };
                grad += integrate(f, cuts[i], cuts[i + 1], cfg);
            }
        }
    }
    Estimate val = weighted_integral(probe, dom, {FunctionalKind::ValueWeighted, p, {-p, 0, 1}},
                                     cfg);
    return grad - val * std::pow(H, p);
}

double sixpiece_anchored_quotient(int n, double p, double delta, double epsilon, double D,
                                  const QuadratureConfig& cfg) {
    Profile u = sixpiece_hardy_morrey(delta, p, n);
    Estimate I = sixpiece_numeric(n, p, delta, 0, cfg);
    double x = std::pow(delta, 3);
    double den = std::abs(u.value(x)) * std::pow(x, static_cast<double>(n) / p - 1.0) *
                 eval_X_pow(x, D, 1.0 / p - epsilon);
    if (den <= 0) throw NumericError("anchored quotient: vanishing denominator");
    return std::pow(std::max(I.value, 0.0), 1.0 / p) / den;
}

double strip_qtilde(int n, double s, double alpha, double eps, double eta, double K1,
                    double M1) {
    if (!(alpha > 0) || !(alpha < 1))
        throw ParameterError("strip quotient: need 0 < alpha < 1");
    if (!(eps > 0) || !(eps < eta)) throw ParameterError("strip quotient: need 0 < eps < eta");
    double delta_t = (s > 2) ? std::pow(eps, s - 2.0) : 1.0;
    double Kd = std::pow(delta_t, 2.0 - n) * K1;
    double Md = std::pow(delta_t, 1.0 - n) * M1;
    double Is1 = (s == 2.0) ? std::log(eta / eps)
                            : (std::pow(eta, 2.0 - s) - std::pow(eps, 2.0 - s)) / (2.0 - s);
    double Ia = (std::pow(eta, 1.0 - alpha) - std::pow(eps, 1.0 - alpha)) / (1.0 - alpha);
    double num = Kd * Is1 + 2.0 * Md * std::pow(eta, 1.0 - s);
    double den = Kd * Ia + Md * (std::pow(eps, -alpha) + std::pow(eta, -alpha));
    return num / den;
}

double strip_q1(int n, double s, double log10_eps, double eta_axial, double R, double K1,
                double M1) {
    (void)n; // the transverse dimension cancels in K_eta/M_eta = (K1/M1) eta_t
    double ln10 = std::log(10.0);
    double log_eps = log10_eps * ln10;
    double coupling = s - 2.0 + 0.1;
    // eta_t * int_eps^{eta} x^{1-s} dx, with eta_t = eps^{coupling}
    double first;
    if (s == 2.0) {
        first = std::exp(coupling * log_eps) * (std::log(eta_axial) - log_eps);
    } else {
        // eps^{coupling} (eta^{2-s} - eps^{2-s})/(2-s)
        double t1 = std::exp(coupling * log_eps) * std::pow(eta_axial, 2.0 - s);
        double t2 = std::exp((coupling + 2.0 - s) * log_eps);
        first = (t1 - t2) / (2.0 - s);
    }
    double num = (K1 / M1) * first + 2.0 * std::pow(eta_axial, 1.0 - s);
    double den = std::log((1.0 - (log_eps - std::log(R))) / (1.0 - std::log(eta_axial / R)));
    return num / den;
}

double punctured_x_failure_quotient(int n, double s, double R, double eta,
                                    double log10_delta) {
    double log_delta = log10_delta * std::log(10.0);
    double num = 2.0 * std::pow(eta, n - s);
    double den = std::log((1.0 - (log_delta - std::log(R))) / (1.0 - std::log(eta / R)));
    return num / den;
}

double punctured_x_reference_quotient(int n, double s, double R, double eta,
                                      double log10_delta, double gamma) {
    if (!(gamma > 1)) throw ParameterError("reference quotient: need gamma > 1");
    double log_delta = log10_delta * std::log(10.0);
    double num = 2.0 * std::pow(eta, n - s);
    double a = std::pow(1.0 - (log_delta - std::log(R)), 1.0 - gamma);
    double b = std::pow(1.0 - std::log(eta / R), 1.0 - gamma);
    double den = (b - a) / (gamma - 1.0);
    return num / den;
}

double punctured_grad_failure_quotient(int n, double s, double eta, double eps_exponent,
                                       double delta) {
    double num = 2.0 * std::pow(eta, n - s);
    double den = std::pow(delta, -eps_exponent) + std::pow(eta, -eps_exponent);
    return num / den;
}

FailureDemo optimality_failure(const std::string& key,
                               const std::map<std::string, double>& params) {
    auto get = [&](const std::string& k, double fb) {
        auto it = params.find(k);
        return it == params.end() ? fb : it->second;
    };
    FailureDemo demo;
    demo.id = key;
    auto check_decade = [&](const std::vector<SweepPoint>& pts) {
        return !pts.empty() &&
               pts.back().quotient.value <= 0.1 * pts.front().quotient.value;
    };
    if (key == "gen-x-gamma1") {
        int n = static_cast<int>(get("n", 2));
        double s = get("s", 3.0), R = get("R", 1.0), eta = get("eta", 0.5);
        // deep log grid: the decay is doubly logarithmic, so the grid is taken
        // in log10(delta) down to astronomically small delta
        for (double lg : {-2.0, -8.0, -32.0, -1e3, -1e5, -3e5}) {
            demo.modified.push_back(
                {lg, Estimate{punctured_x_failure_quotient(n, s, R, eta, lg), 0}});
            demo.reference.push_back(
                {lg, Estimate{punctured_x_reference_quotient(n, s, R, eta, lg, 1.5), 0}});
        }
        demo.decade = check_decade(demo.modified);
        demo.note = "log-remainder exponent gamma = 1 admits no constant";
        return demo;
    }
    if (key == "gen-grad-exponent") {
        int n = static_cast<int>(get("n", 2));
        double s = get("s", 3.0), eta = get("eta", 0.5), epse = get("eps_exponent", 0.5);
        for (double lg : {-2.0, -3.0, -4.0, -5.0, -6.0}) {
            double d = std::pow(10.0, lg);
            demo.modified.push_back(
                {d, Estimate{punctured_grad_failure_quotient(n, s, eta, epse, d), 0}});
            demo.reference.push_back(
                {d, Estimate{punctured_grad_failure_quotient(n, s, eta, 0.0, d), 0}});
        }
        demo.decade = check_decade(demo.modified);
        demo.note = "raising the gradient-weight exponent kills the constant";
        return demo;
    }
    if (key == "strip-qtilde-alpha") {
        int n = static_cast<int>(get("n", 2));
        double s = get("s", 3.0), alpha = get("alpha", 0.5), eta = get("eta", 0.5);
        TensorProfile tp = strip_tensor(0.01, eta, 1.0, n);
        for (double lg : {-2.0, -3.0, -4.0, -5.0, -6.0}) {
            double e = std::pow(10.0, lg);
            demo.modified.push_back(
                {e, Estimate{strip_qtilde(n, s, alpha, e, eta, tp.K1, tp.M1), 0}});
        }
        demo.decade = check_decade(demo.modified);
        demo.note = "no positive alpha admits a gradient-side remainder on the strip";
        return demo;
    }
    if (key == "strip-q1-gamma1") {
        int n = static_cast<int>(get("n", 2));
        double s = get("s", 3.0), eta = get("eta", 0.5), R = get("R", 1.0);
        TensorProfile tp = strip_tensor(0.01, eta, 1.0, n);
        std::vector<double> lgs = {-2.0, -8.0, -32.0, -1e3, -1e5, -3e5};
        if (get("shallow", 0.0) > 0) lgs = {-2.0, -3.0, -4.0, -5.0, -6.0};
        for (double lg : lgs)
            demo.modified.push_back(
                {lg, Estimate{strip_q1(n, s, lg, eta, R, tp.K1, tp.M1), 0}});
        demo.decade = check_decade(demo.modified);
        demo.note = "gamma = 1 fails on the strip; the strip remainder constant is zero";
        return demo;
    }
    if (key == "ball-series-gamma1") {
        int n = static_cast<int>(get("n", 2));
        double s = get("s", 2.5);
        std::vector<double> lgs = {-2.0, -8.0, -32.0, -1e3, -1e5, -3e5};
        if (get("shallow", 0.0) > 0) lgs = {-2.0, -3.0, -4.0, -5.0, -6.0};
        QuadratureConfig cfg;
        for (double lg : lgs)
            demo.modified.push_back({lg, Estimate{ball_series_x_quotient(n, s, lg, cfg), 0}});
        demo.decade = check_decade(demo.modified);
        demo.note = "the series on the ball cannot continue past the log remainder";
        return demo;
    }
    throw RegistryError("optimality_failure: '" + key +
                        "' is not a catalogued failure case (valid: gen-x-gamma1, "
                        "gen-grad-exponent, strip-qtilde-alpha, strip-q1-gamma1, "
                        "ball-series-gamma1)");
}

const std::vector<SharpTarget>& sharp_targets() {
    static const std::vector<SharpTarget> t = {
        {"bdry-hardy", "(2.9)", "power", "linear-in-eps", "((s-1)/q)^q", 0.01},
        {"bdry-hardy-remainder", "(2.8)", "power", "linear-in-eps", "((s-1)/q)^{q-1}", 0.01},
        {"origin-l1", "(4.4)", "annulus", "algebraic", "s-n", 0.005},
        {"ball-series", "(4.32)", "shell", "algebraic", "(n-1)/R^{m+1}", 0.01},
        {"ball-remainder-constant", "Ex 4.24", "shell", "algebraic", "(n-1)/R", 0.01},
        {"strip-remainder-constant", "Ex 4.25", "strip-tensor", "logarithmic", "0", 0.0},
        {"interval-quarter", "Thm 2.2 (s=q=2)", "fem", "mesh-refinement", "1/4", 0.02},
    };
    return t;
}

} // namespace hardylab
