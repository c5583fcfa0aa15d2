#include "hardylab/logweight.hpp"

#include <algorithm>
#include <cmath>

namespace hardylab {

LogWeight::LogWeight(double scale) : D(scale) {
    if (!(D > 0)) throw ParameterError("LogWeight: scale must be positive");
}

double LogWeight::operator()(double t) const { return eval_X(t, D); }

double eval_X(double t, double D) {
    if (!(D > 0)) throw ParameterError("eval_X: D must be positive");
    if (!(t > 0) || t > D * (1.0 + 1e-15)) throw DomainError("eval_X: need 0 < t <= D");
    return 1.0 / (1.0 - std::log(std::min(t / D, 1.0)));
}

double eval_X_pow(double t, double D, double p) {
    if (p == 0.0) return 1.0;
    // (1 - log(t/D))^{-p} via logs; t/D may underflow, so split the logarithm.
    double base = 1.0 - (std::log(t) - std::log(D));
    return std::pow(base, -p);
}

double lemma_a1_eta(double alpha, double beta, double c) {
    double denom = (alpha + 1.0) * c - 1.0;
    if (!(denom > 0)) throw ParameterError("lemma A.1: need c > 1/(alpha+1)");
    return std::max(0.0, ((beta - alpha - 1.0) * c + 1.0) / denom);
}

LemmaA1Result check_lemma_A1(const LemmaA1Params& p, const QuadratureConfig& cfg) {
    if (!(p.alpha > -1.0)) throw ParameterError("lemma A.1: need alpha > -1");
    if (!(p.beta > 0.0)) throw ParameterError("lemma A.1: need beta > 0");
    if (!(p.R > 0.0)) throw ParameterError("lemma A.1: need R > 0");
    double eta = lemma_a1_eta(p.alpha, p.beta, p.c);
    if (p.D < std::exp(eta) * p.R * (1.0 - 1e-12))
        throw ParameterError("lemma A.1: need D >= e^eta R, eta = " + std::to_string(eta));
    if (!(p.r > 0.0) || p.r > p.R * (1.0 + 1e-12))
        throw ParameterError("lemma A.1: need 0 < r <= R");

    double y = 0.0;
    double span = p.r;
    if (p.variant == LemmaA1Variant::II) {
        if (!(p.alpha <= 0.0))
            throw ParameterError("lemma A.1 (ii): need -1 < alpha <= 0");
        if (!p.y) throw ParameterError("lemma A.1 (ii): lower limit y required");
        y = *p.y;
        if (y < 0.0 || y > p.r) throw ParameterError("lemma A.1 (ii): need 0 <= y <= r");
        span = p.r - y;
    }

    LemmaA1Result out;
    // LHS: integrand t^alpha X^{-beta}(t/D); the X factor is smooth, the power
    // carries the endpoint singularity.
    if (y == 0.0) {
        auto rest = [&](double t) { return eval_X_pow(t, p.D, -p.beta); };
        out.lhs = integrate_power_log_zero(p.alpha, 0.0, 1.0, rest, p.r, cfg);
    } else {
        auto f = [&](double t) { return std::pow(t, p.alpha) * eval_X_pow(t, p.D, -p.beta); };
        out.lhs = integrate(f, y, p.r, cfg);
    }
    if (span <= 0.0) {
        out.rhs = 0.0;
        out.margin = -out.lhs.value;
        return out;
    }
    out.rhs = p.c * std::pow(span, p.alpha + 1.0) * eval_X_pow(span, p.D, -p.beta);
    out.margin = out.rhs - out.lhs.value;
    return out;
}

namespace {

double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// p |a|^{p-2} a.b, finite for all a when p > 1 (tends to 0 with a).
double cross_term(double p, double na, double ab) {
    if (na == 0.0) return 0.0;
    return p * std::pow(na, p - 2.0) * ab;
}

} // namespace

LemmaA2Margins check_lemma_A2(double p, const std::vector<double>& a,
                              const std::vector<double>& b) {
    if (!(p > 1.0)) throw ParameterError("lemma A.2: need p > 1");
    if (a.size() != b.size() || a.empty())
        throw ParameterError("lemma A.2: vectors must share a positive dimension");

    std::vector<double> amb(a.size());
    for (size_t i = 0; i < a.size(); ++i) amb[i] = a[i] - b[i];
    const double na = norm(a), nb = norm(b), namb = norm(amb);
    const double ab = dot(a, b);
    const double lhs = std::pow(namb, p) - std::pow(na, p);
    const double cross = cross_term(p, na, ab);

    LemmaA2Margins out;
    if (p < 2.0) {
        // |b|^2 / (|a-b|+|a|)^{2-p} degenerates to |b|^p when a = b = 0;
        // continuity gives the same limit along every path.
        double denom = namb + na;
        double frac = (denom == 0.0) ? std::pow(nb, p)
                                     : nb * nb * std::pow(denom, p - 2.0);
        double rhs = (3.0 * p * (p - 1.0) / 16.0) * frac - cross;
        out.sub2 = lhs - rhs;
    } else {
        double c1 = 1.0 / (std::pow(2.0, p - 1.0) - 1.0);
        out.super2_grad = lhs - (c1 * std::pow(nb, p) - cross);
        double apb2;
        if (p == 2.0) {
            apb2 = nb * nb; // |a|^0 = 1 by convention, the quadratic identity
        } else {
            apb2 = std::pow(na, p - 2.0) * nb * nb;
        }
        double c2 = 1.0 / (std::pow(2.0, p - 2.0) * (std::pow(2.0, p - 1.0) - 1.0));
        out.super2_mixed = lhs - (c2 * apb2 - cross);
    }
    return out;
}

} // namespace hardylab
