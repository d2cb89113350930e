#include "davenport/quad.hpp"

#include <algorithm>
#include <cmath>

namespace davenport {
namespace {

/*
 * Order-16 Gauss-Legendre nodes and weights on [-1, 1], generated once by
 * Newton iteration on P_16 in extended precision (the three-term recurrence
 * gives P and P'; roots are separated and the cosine initial guesses converge
 * in a handful of steps). Exactness through degree 31 is pinned by tests.
 */
struct Gauss16 {
    double node[16];
    double weight[16];

    Gauss16() {
        constexpr int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            long double x = std::cos(M_PI * (static_cast<long double>(i) + 0.75L) /
                                     (static_cast<long double>(n) + 0.5L));
            long double p0 = 0, p1 = 0, dp = 0;
            for (int iter = 0; iter < 100; ++iter) {
                p0 = 1.0L;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0L);
                const long double dx = p1 / dp;
                x -= dx;
                if (std::fabs(static_cast<double>(dx)) < 1e-19) break;
            }
            const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
            // i walks the roots from largest to smallest positive, so this
            // fills node[] in ascending order with weights kept paired.
            node[i] = static_cast<double>(-x);
            node[n - 1 - i] = static_cast<double>(x);
            weight[i] = weight[n - 1 - i] = static_cast<double>(w);
        }
    }
};

const Gauss16& gauss16() {
    static const Gauss16 g;
    return g;
}

double panel(const std::function<double(double)>& g, double a, double b) {
    const Gauss16& G = gauss16();
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    double s = 0.0;
    for (int i = 0; i < 16; ++i) {
        const double v = g(c + h * G.node[i]);
        if (!std::isfinite(v)) throw numeric_error("non-finite integrand sample");
        s += G.weight[i] * v;
    }
    return h * s;
}

} // namespace

double integrate(const std::function<double(double)>& g, double a, double b,
                 const std::vector<double>& breakpoints, double /*tol*/) {
    if (!(a < b)) throw domain_error("integrate requires a < b");
    std::vector<double> cuts;
    cuts.push_back(a);
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (!(hi > lo)) continue;
        const auto panels = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((hi - lo) * 64.0)));
        const double h = (hi - lo) / static_cast<double>(panels);
        for (std::int64_t k = 0; k < panels; ++k)
            total += panel(g, lo + h * static_cast<double>(k), lo + h * static_cast<double>(k + 1));
    }
    return total;
}

std::function<double(double)> orthogonality_integrand(int n, int m) {
    if (n < 1 || m < 1) throw domain_error("orthogonality integrand requires n, m >= 1");
    return [n, m](double y) {
        return std::sin(M_PI * n * y) * std::cos(M_PI * n * y) * std::sin(M_PI * m * y) *
               std::cos(M_PI * m * y);
    };
}

double orthogonality_integral(int n, int m) {
    return integrate(orthogonality_integrand(n, m), 0.0, 1.0, {});
}

std::function<double(double)> frac_sincos_integrand(int N, int m) {
    if (N < 1 || m < 1) throw domain_error("frac_sincos integrand requires N, m >= 1");
    return [N, m](double y) {
        const double t = y * static_cast<double>(N);
        const double frac = t - std::floor(t);
        return (frac - 0.5) * std::sin(M_PI * m * y) * std::cos(M_PI * m * y);
    };
}

double frac_sincos_integral(int N, int m) {
    std::vector<double> cuts;
    for (int k = 1; k < N; ++k) cuts.push_back(static_cast<double>(k) / static_cast<double>(N));
    return integrate(frac_sincos_integrand(N, m), 0.0, 1.0, cuts);
}

double phi_value(const PhiSpec& phi, double y) {
    switch (phi.kind) {
        case PhiSpec::Kind::square: return y * y;
        case PhiSpec::Kind::sine: return std::sin(y);
        case PhiSpec::Kind::cubic: return ((phi.c3 * y + phi.c2) * y + phi.c1) * y + phi.c0;
    }
    return 0.0;
}

double phi_deriv(const PhiSpec& phi, double y) {
    switch (phi.kind) {
        case PhiSpec::Kind::square: return 2.0 * y;
        case PhiSpec::Kind::sine: return std::cos(y);
        case PhiSpec::Kind::cubic: return (3.0 * phi.c3 * y + 2.0 * phi.c2) * y + phi.c1;
    }
    return 0.0;
}

double euler_maclaurin_residual(const PhiSpec& phi, double a, double b) {
    if (!(a < b)) throw domain_error("euler_maclaurin_residual requires a < b");
    double lhs = 0.0;
    for (std::int64_t n = static_cast<std::int64_t>(std::floor(a)) + 1;
         n <= static_cast<std::int64_t>(std::floor(b)); ++n)
        if (static_cast<double>(n) > a) lhs += phi_value(phi, static_cast<double>(n));

    std::vector<double> cuts;
    for (std::int64_t k = static_cast<std::int64_t>(std::floor(a));
         k <= static_cast<std::int64_t>(std::ceil(b)); ++k)
        cuts.push_back(static_cast<double>(k));

    const double smooth = integrate([&](double y) { return phi_value(phi, y); }, a, b, cuts);
    const double sawtooth = integrate(
        [&](double y) { return (y - std::floor(y) - 0.5) * phi_deriv(phi, y); }, a, b, cuts);
    const double frac_a = a - std::floor(a), frac_b = b - std::floor(b);
    const double boundary = (frac_a - 0.5) * phi_value(phi, a) - (frac_b - 0.5) * phi_value(phi, b);
    return lhs - (smooth + sawtooth + boundary);
}

} // namespace davenport
