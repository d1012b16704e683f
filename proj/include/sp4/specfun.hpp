// Analytic kernels: J-Bessel of half-integral and integral order, the
// two-Bessel theta integral, the Bessel product integral representation,
// Neumann-type weighted sums with their h-transform, digamma, and
// Gauss-Legendre quadrature.
//
// Half-integer J strategy: closed elementary forms by upward recurrence from
// J_{1/2}, J_{3/2} for x >= nu (stable there), ascending power series for
// x < nu. Crossover exactly at x = nu.
#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sp4/intlat.hpp"

namespace sp4 {

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k even >= 6, order ell = k - 3/2
struct BesselOrder {
    int k;
    explicit BesselOrder(int k_) : k(k_) {
        if (k < 6 || k % 2 != 0) throw std::invalid_argument("BesselOrder: k must be even >= 6");
    }
    double ell() const { return k - 1.5; }
};

// J_nu(x) for half-integer nu >= 1/2, x > 0. Values whose envelope
// (x/2)^nu / Gamma(nu+1) falls below 1e-300 are returned as exact 0 with
// *underflow set (when given).
double bessel_j_half(double nu, double x, bool* underflow = nullptr);

// J_n(x) for integer n >= 0, x > 0. Same series/recurrence split seeded with
// the libm j0, j1.
double bessel_j_int(int n, double x);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n, double a, double b);

// script-J kernel: int_0^{pi/2} J_ell(4 pi sqrt(l1) sin t) J_ell(4 pi sqrt(l2) sin t) sin t dt
// Adaptive node doubling until |change| < 1e-12; throws NumericError with the
// last two iterates on non-convergence.
struct ScriptJResult {
    double value;
    double err_estimate;
};
ScriptJResult script_j(double lambda1, double lambda2, double ell);

// right side of the product representation
//   J_v(z) J_v(zeta) = (2/pi) int_0^{pi/2} cos((z - zeta) cos a) J_{2v}(2 sqrt(z zeta) sin a) da
double bessel_product_rhs(double v, double z, double zeta);

// smooth compact bump on (1/2, 5/2); Omega(x) = exp(-1/((x-1/2)(5/2-x)))
double bump_omega(double x);

// g1(x) = Omega((x+3)/(2K)): the shifted weight entering the Neumann sum
struct NeumannWeight {
    double big_k;
    double operator()(double x) const { return bump_omega((x + 3.0) / (2.0 * big_k)); }
    double support_lo() const { return big_k - 3.0; }
    double support_hi() const { return 5.0 * big_k - 3.0; }
};

// 4 sum_{r = 1 mod 4} g1(r) J_r(xi)
double neumann_sum(const NeumannWeight& g1, double xi);

// h(xi) = int_0^inf g1(sqrt(2 xi y)) sin(xi + y - pi/4) (pi y)^{-1/2} dy,
// computed after the substitution y = u^2 with oscillation-sized panels
double h_transform(const NeumannWeight& g1, double xi);

// c3(g1) = int |g1hat(t) t^3| dt with g1hat(t) = int g1(x) e(-xt) dx
double c3_of(const NeumannWeight& g1);

// digamma for Re z > 0 (recurrence lift to Re z >= 10, then asymptotic series)
std::complex<double> digamma(std::complex<double> z);
double digamma(double x);

}  // namespace sp4
