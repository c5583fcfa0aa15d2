#include "hardylab/fem.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hardylab/logweight.hpp"

namespace hardylab {

namespace {

struct Tridiag {
    std::vector<double> diag; // size m
    std::vector<double> off;  // size m-1
};

// Number of eigenvalues of (A, B) below lam, from the signs of the LDL^T
// pivots of A - lam B.
int inertia(const Tridiag& A, const Tridiag& B, double lam) {
    const size_t m = A.diag.size();
    int count = 0;
    double d_prev = 0.0;
    for (size_t i = 0; i < m; ++i) {
        double d = A.diag[i] - lam * B.diag[i];
        if (i > 0) {
            double e = A.off[i - 1] - lam * B.off[i - 1];
            d -= e * e / d_prev;
        }
        if (d == 0.0) d = -1e-300;
        if (d < 0) ++count;
        d_prev = d;
    }
    return count;
}

double smallest_eig(const Tridiag& A, const Tridiag& B, double hi_guess, int* iters) {
    double lo = 0.0, hi = std::max(hi_guess, 1e-8);
    for (int k = 0; k < 200 && inertia(A, B, hi) == 0; ++k) hi *= 2.0;
    int it = 0;
    while (hi - lo > 1e-13 * std::max(1.0, hi) && it < 400) {
        double mid = 0.5 * (lo + hi);
        if (inertia(A, B, mid) >= 1)
            hi = mid;
        else
            lo = mid;
        ++it;
    }
    if (iters) *iters = it;
    return 0.5 * (lo + hi);
}

double element_integral(const Fn1D& w, double a, double b) {
    const auto& gn = gauss_nodes(16);
    const auto& gw = gauss_weights(16);
    double h = b - a, s = 0;
    for (size_t k = 0; k < gn.size(); ++k) s += gw[k] * w(a + 0.5 * h * (gn[k] + 1.0));
    return 0.5 * h * s;
}

struct ElementMass {
    double ii = 0, ij = 0, jj = 0;
};

ElementMass element_mass(const Fn1D& w, double a, double b) {
    const auto& gn = gauss_nodes(16);
    const auto& gw = gauss_weights(16);
    double h = b - a;
    ElementMass m;
    for (size_t k = 0; k < gn.size(); ++k) {
        double x = a + 0.5 * h * (gn[k] + 1.0);
        double wl = 0.5 * h * gw[k] * w(x);
        double tl = (b - x) / h, tr = (x - a) / h;
        m.ii += wl * tl * tl;
        m.ij += wl * tl * tr;
        m.jj += wl * tr * tr;
    }
    return m;
}

std::vector<double> graded_mesh_both_ends(int N, double L, double grading) {
    if (N % 2) ++N;
    int M = N / 2;
    std::vector<double> x(N + 1);
    for (int i = 0; i <= M; ++i) x[i] = 0.5 * L * std::pow(static_cast<double>(i) / M, grading);
    for (int i = 0; i < M; ++i) x[N - i] = L - x[i];
    return x;
}

std::vector<double> graded_mesh_right_end(int N, double L, double grading) {
    std::vector<double> x(N + 1);
    for (int i = 0; i <= N; ++i)
        x[i] = L * (1.0 - std::pow(1.0 - static_cast<double>(i) / N, grading));
    return x;
}

struct Forms {
    Tridiag A, B;
};

// Forms int wA u'v' and int wB u v over the P1 space spanned by the interior
// nodes first..last (global indices).
Forms assemble(const std::vector<double>& x, const Fn1D& wA, const Fn1D& wB, int first,
               int last) {
    int m = last - first + 1;
    if (m < 2) throw ParameterError("fem: mesh too coarse");
    Forms f;
    f.A.diag.assign(m, 0.0);
    f.A.off.assign(m - 1, 0.0);
    f.B.diag.assign(m, 0.0);
    f.B.off.assign(m - 1, 0.0);
    const int N = static_cast<int>(x.size()) - 1;
    for (int e = 0; e < N; ++e) {
        const int i = e, j = e + 1;
        const bool iin = i >= first && i <= last;
        const bool jin = j >= first && j <= last;
        if (!iin && !jin) continue;
        const double a = x[e], b = x[e + 1], h = b - a;
        const double stiff = element_integral(wA, a, b) / (h * h);
        const ElementMass mb = element_mass(wB, a, b);
        if (iin) {
            f.A.diag[i - first] += stiff;
            f.B.diag[i - first] += mb.ii;
        }
        if (jin) {
            f.A.diag[j - first] += stiff;
            f.B.diag[j - first] += mb.jj;
        }
        if (iin && jin) {
            f.A.off[i - first] += -stiff;
            f.B.off[i - first] += mb.ij;
        }
    }
    return f;
}

double rayleigh_guess(const Forms& f) {
    // quotient of the all-ones interior vector brackets the minimum from above
    double num = 0, den = 0;
    for (size_t i = 0; i < f.A.diag.size(); ++i) {
        num += f.A.diag[i];
        den += f.B.diag[i];
    }
    for (size_t i = 0; i < f.A.off.size(); ++i) {
        num += 2 * f.A.off[i];
        den += 2 * f.B.off[i];
    }
    if (den <= 0) throw NumericError("fem: indefinite mass form");
    return std::max(num / den, 1e-10);
}

} // namespace

FemResult fem_min_p2(FemProbe probe, const FemOptions& opt) {
    if (opt.mesh < 8) throw ParameterError("fem: mesh must have at least 8 elements");
    FemResult res;
    switch (probe) {
        case FemProbe::IntervalHardy: {
            auto x = graded_mesh_both_ends(opt.mesh, 1.0, opt.grading);
            int N = static_cast<int>(x.size()) - 1;
            auto d = [](double t) { return std::min(t, 1.0 - t); };
            auto one = [](double) { return 1.0; };
            auto mass = [d](double t) {
                double dd = d(t);
                return 1.0 / (dd * dd);
            };
            Forms f = assemble(x, one, mass, 1, N - 1);
            res.mesh = N;
            res.value = smallest_eig(f.A, f.B, rayleigh_guess(f), &res.iterations);
            return res;
        }
        case FemProbe::IntervalBrezisMarcus: {
            auto x = graded_mesh_both_ends(opt.mesh, 1.0, opt.grading);
            int N = static_cast<int>(x.size()) - 1;
            auto d = [](double t) { return std::min(t, 1.0 - t); };
            auto one = [](double) { return 1.0; };
            auto hardy_mass = [d](double t) {
                double dd = d(t);
                return 1.0 / (dd * dd);
            };
            double D = opt.D;
            auto log_mass = [d, D](double t) {
                double dd = d(t);
                double X = eval_X(dd, D);
                return X * X / (dd * dd);
            };
            Forms stiff = assemble(x, one, hardy_mass, 1, N - 1);
            Forms logf = assemble(x, one, log_mass, 1, N - 1);
            // A' = stiffness - 1/4 hardy-mass; positive semidefinite by the
            // one-dimensional Hardy inequality
            Tridiag A = stiff.A;
            for (size_t i = 0; i < A.diag.size(); ++i) A.diag[i] -= 0.25 * stiff.B.diag[i];
            for (size_t i = 0; i < A.off.size(); ++i) A.off[i] -= 0.25 * stiff.B.off[i];
            Forms probe_forms{A, logf.B};
            res.mesh = N;
            res.value =
                smallest_eig(probe_forms.A, probe_forms.B, rayleigh_guess(probe_forms),
                             &res.iterations);
            return res;
        }
        case FemProbe::BallRadialWeighted: {
            // radial quotient int_0^1 |u'|^2 (1-r)^{q-s} r^{n-1} / int u^2 (1-r)^{-s} r^{n-1},
            // q = 2.  Trial functions vanish on the last element: the buffer keeps
            // the boundary-singular mass finite while the distance is still taken
            // to the true boundary.
            auto x = graded_mesh_right_end(opt.mesh, 1.0, opt.grading);
            int N = static_cast<int>(x.size()) - 1;
            const double s = opt.s;
            const int n = opt.n;
            auto wA = [s, n](double r) {
                return std::pow(1.0 - r, 2.0 - s) * std::pow(r, n - 1.0);
            };
            auto wB = [s, n](double r) {
                return std::pow(1.0 - r, -s) * std::pow(r, n - 1.0);
            };
            // interior nodes 1..N-2: Dirichlet at r=1 and at the buffer node N-1;
            // natural (free) would be node 0 but radial symmetry plus the weight
            // keeps the quotient correct with u(0) free -- include node 0.
            Forms f = assemble(x, wA, wB, 0, N - 2);
            res.mesh = N;
            res.value = smallest_eig(f.A, f.B, rayleigh_guess(f), &res.iterations);
            return res;
        }
    }
    throw ParameterError("fem_min_p2: unknown probe");
}

} // namespace hardylab
