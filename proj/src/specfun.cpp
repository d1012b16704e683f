#include "sp4/specfun.hpp"

#include <cmath>
#include <numbers>

namespace sp4 {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

bool half_integer_order_ok(double nu) {
    double two_nu = 2.0 * nu;
    return two_nu >= 1.0 && std::abs(two_nu - std::llround(two_nu)) < 1e-12 &&
           (std::llround(two_nu) % 2 == 1);
}

// ascending series sum_{j} (-1)^j (x/2)^{nu+2j} / (j! Gamma(nu+j+1));
// leading factor via exp/lgamma, then the term recurrence
double j_series(double nu, double x) {
    double lead = std::exp(nu * std::log(x / 2.0) - std::lgamma(nu + 1.0));
    double term = 1.0, sum = 1.0;
    double q = x * x / 4.0;
    for (int j = 0; j < 400; ++j) {
        term *= -q / ((j + 1.0) * (nu + j + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-320) break;
    }
    return lead * sum;
}
}  // namespace

double bessel_j_half(double nu, double x, bool* underflow) {
    if (x <= 0.0) throw std::invalid_argument("bessel_j_half: x must be > 0");
    if (!half_integer_order_ok(nu)) throw std::invalid_argument("bessel_j_half: bad order");
    if (underflow) *underflow = false;

    double env_log = nu * std::log(x / 2.0) - std::lgamma(nu + 1.0);
    if (env_log < -690.0) {  // below 1e-300
        if (underflow) *underflow = true;
        return 0.0;
    }
    if (x < nu) return j_series(nu, x);

    // upward recurrence from the closed forms
    double s = std::sqrt(2.0 / (pi * x));
    double jm = s * std::sin(x);                            // J_{1/2}
    if (nu == 0.5) return jm;
    double j = s * (std::sin(x) / x - std::cos(x));         // J_{3/2}
    for (double v = 1.5; v < nu - 0.25; v += 1.0) {
        double jn = (2.0 * v / x) * j - jm;
        jm = j;
        j = jn;
    }
    return j;
}

double bessel_j_int(int n, double x) {
    if (x <= 0.0) throw std::invalid_argument("bessel_j_int: x must be > 0");
    if (n < 0) throw std::invalid_argument("bessel_j_int: order must be >= 0");
    if (n == 0) return j0(x);
    if (n == 1) return j1(x);
    if (double(n) > x) {
        double env_log = n * std::log(x / 2.0) - std::lgamma(n + 1.0);
        if (env_log < -690.0) return 0.0;
        return j_series(double(n), x);
    }
    double jm = j0(x), j = j1(x);
    for (int v = 1; v < n; ++v) {
        double jn = (2.0 * v / x) * j - jm;
        jm = j;
        j = jn;
    }
    return j;
}

// --- quadrature -----------------------------------------------------------------

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("gauss_legendre: need n >= 2");
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton on P_n over [-1,1]
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one more polish step
                double q0 = 1.0, q1 = x;
                for (int k = 2; k <= n; ++k) {
                    double q2 = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                pp = n * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / pp;
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        r.nodes[i] = mid - half * x;
        r.nodes[n - 1 - i] = mid + half * x;
        r.weights[i] = r.weights[n - 1 - i] = w * half;
    }
    return r;
}

namespace {

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    QuadratureRule r = gauss_legendre(n, a, b);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}

// node doubling on a fixed interval until |change| < tol
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int n0, int ncap, double* err_out) {
    double prev = integrate_gl(f, a, b, n0);
    for (int n = 2 * n0; n <= ncap; n *= 2) {
        double cur = integrate_gl(f, a, b, n);
        double change = std::abs(cur - prev);
        if (change < tol) {
            if (err_out) *err_out = change;
            return cur;
        }
        prev = cur;
    }
    double last = integrate_gl(f, a, b, ncap);
    throw NumericError("quadrature did not converge; last iterates " + std::to_string(prev) +
                       " and " + std::to_string(last));
}

}  // namespace

ScriptJResult script_j(double lambda1, double lambda2, double ell) {
    if (lambda1 <= 0 || lambda2 <= 0) throw std::invalid_argument("script_j: eigenvalues must be > 0");
    double a1 = 4.0 * pi * std::sqrt(lambda1);
    double a2 = 4.0 * pi * std::sqrt(lambda2);
    auto f = [&](double th) {
        double st = std::sin(th);
        if (st <= 0.0) return 0.0;
        return bessel_j_half(ell, a1 * st) * bessel_j_half(ell, a2 * st) * st;
    };
    double err = 0.0;
    double v = integrate_adaptive(f, 0.0, pi / 2.0, 1e-12, 16, 8192, &err);
    return {v, err};
}

double bessel_product_rhs(double v, double z, double zeta) {
    if (z <= 0 || zeta <= 0) throw std::invalid_argument("bessel_product_rhs: need z, zeta > 0");
    int n2v = (int)std::llround(2.0 * v);
    double w = 2.0 * std::sqrt(z * zeta);
    auto f = [&](double al) {
        double sa = std::sin(al);
        double jv = (sa > 0.0) ? bessel_j_int(n2v, w * sa) : 0.0;
        return std::cos((z - zeta) * std::cos(al)) * jv;
    };
    double err = 0.0;
    double val = integrate_adaptive(f, 0.0, pi / 2.0, 1e-13, 16, 16384, &err);
    return (2.0 / pi) * val;
}

// --- Neumann machinery -------------------------------------------------------------

double bump_omega(double x) {
    if (x <= 0.5 || x >= 2.5) return 0.0;
    return std::exp(-1.0 / ((x - 0.5) * (2.5 - x)));
}

double neumann_sum(const NeumannWeight& g1, double xi) {
    if (xi <= 0.0) throw std::invalid_argument("neumann_sum: xi must be > 0");
    double s = 0.0;
    i64 lo = (i64)std::floor(g1.support_lo());
    i64 hi = (i64)std::ceil(g1.support_hi());
    for (i64 r = lo; r <= hi; ++r) {
        if (r < 1) continue;
        if (((r % 4) + 4) % 4 != 1) continue;
        double w = g1(double(r));
        if (w == 0.0) continue;
        s += w * bessel_j_int((int)r, xi);
    }
    return 4.0 * s;
}

double h_transform(const NeumannWeight& g1, double xi) {
    if (xi <= 0.0) throw std::invalid_argument("h_transform: xi must be > 0");
    // y = u^2: h = (2/sqrt(pi)) int g1(sqrt(2 xi) u) sin(xi + u^2 - pi/4) du
    double a = std::sqrt(2.0 * xi);
    double ulo = g1.support_lo() / a;
    double uhi = g1.support_hi() / a;
    if (uhi <= ulo) return 0.0;
    auto f = [&](double u) { return g1(a * u) * std::sin(xi + u * u - pi / 4.0); };
    // panel width tied to the local oscillation wavelength pi/(2 u_max)
    double panel = std::min(0.5, pi / (4.0 * uhi));
    int npanels = (int)std::ceil((uhi - ulo) / panel);
    double s = 0.0;
    for (int i = 0; i < npanels; ++i) {
        double x0 = ulo + (uhi - ulo) * i / npanels;
        double x1 = ulo + (uhi - ulo) * (i + 1) / npanels;
        s += integrate_gl(f, x0, x1, 16);
    }
    return (2.0 / std::sqrt(pi)) * s;
}

double c3_of(const NeumannWeight& g1) {
    // g1hat(t) = int g1(x) e(-xt) dx over the compact support
    double lo = g1.support_lo(), hi = g1.support_hi();
    auto ghat_abs = [&](double t) {
        auto fr = [&](double x) { return g1(x) * std::cos(two_pi * x * t); };
        auto fi = [&](double x) { return g1(x) * std::sin(two_pi * x * t); };
        // oscillation frequency |t| across a support of length ~ 4K
        int n = std::min(8192, std::max(64, (int)(8.0 * std::abs(t) * (hi - lo)) + 64));
        double re = integrate_gl(fr, lo, hi, n);
        double im = integrate_gl(fi, lo, hi, n);
        return std::hypot(re, im);
    };
    // |g1hat| decays superpolynomially; integrate |g1hat(t) t^3| over |t| <= 1
    // in geometric bands, then verify the remainder is negligible
    auto band = [&](double t0, double t1) {
        auto f = [&](double t) { return ghat_abs(t) * t * t * t; };
        return integrate_gl(f, t0, t1, 32);
    };
    double s = 0.0;
    double t0 = 1.0 / (hi - lo) * 1e-3;
    s += band(0.0, t0);
    while (t0 < 1.0) {
        double t1 = std::min(1.0, 2.0 * t0);
        s += band(t0, t1);
        t0 = t1;
    }
    double rem = ghat_abs(1.0);
    if (rem > 1e-14) {
        // extend until the integrand is dead
        while (t0 < 64.0 && ghat_abs(t0) * t0 * t0 * t0 > 1e-18) {
            double t1 = 2.0 * t0;
            s += band(t0, t1);
            t0 = t1;
        }
    }
    return 2.0 * s;  // even in t
}

// --- digamma -------------------------------------------------------------------------

std::complex<double> digamma(std::complex<double> z) {
    if (z.real() <= 0.0) throw std::invalid_argument("digamma: need Re z > 0");
    std::complex<double> acc{0.0, 0.0};
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    std::complex<double> w = 1.0 / z, w2 = w * w;
    // psi(z) ~ log z - 1/(2z) - sum B_{2n}/(2n z^{2n})
    std::complex<double> series =
        w2 * (1.0 / 12.0 +
              w2 * (-1.0 / 120.0 +
                    w2 * (1.0 / 252.0 +
                          w2 * (-1.0 / 240.0 +
                                w2 * (1.0 / 132.0 +
                                      w2 * (-691.0 / 32760.0 + w2 * (1.0 / 12.0)))))));
    return acc + std::log(z) - 0.5 * w - series;
}

double digamma(double x) { return digamma(std::complex<double>(x, 0.0)).real(); }

}  // namespace sp4
