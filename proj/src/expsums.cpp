#include "sp4/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sp4 {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

std::complex<double> e_of(double x) { return {std::cos(two_pi * x), std::sin(two_pi * x)}; }
std::complex<double> e_of(const Frac& f) { return e_of(f.value()); }
}  // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit
    auto mulmod = [](i64 a, i64 b, i64 m) { return (i64)((i128)a * b % m); };
    auto powmod = [&](i64 a, i64 e, i64 m) {
        i64 r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

CharValues char_values(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("char_values: composite input");
    int chi = (p == 2) ? 0 : ((p % 4 == 1) ? 1 : -1);
    return CharValues{p, chi, 1 + chi, chi};
}

// --- symplectic Kloosterman sum ----------------------------------------------

KloostermanDetail sym_kloosterman_detail(const QuadForm2& q, const QuadForm2& t, const Mat2& c) {
    i64 det = c.det();
    if (det == 0) throw std::invalid_argument("sym_kloosterman: singular matrix");
    Mat2 adjc = c.adj();
    Mat2 q2 = q.twice(), t2 = t.twice();

    KloostermanDetail out;
    auto lat = compatible_d_lattice(c);
    for (const Mat2& d : lat.representatives()) {
        auto comp = symplectic_complete(c, d);
        if (!comp) continue;
        const Mat2& a = comp->first;
        // phase = Tr(A C^{-1} Q) + Tr(C^{-1} D T)
        //       = [Tr(A adjC 2Q) + Tr(adjC D 2T)] / (2 det C)
        i64 num = trace_prod(a * adjc, q2) + trace_prod(adjc * d, t2);
        Frac ph(num, 2 * det);
        out.phases.push_back(ph);
        out.sum.value += e_of(ph);
        out.sum.terms += 1;
        out.sum.phase_denominator = out.sum.phase_denominator / gcd_ll(out.sum.phase_denominator, ph.den) * ph.den;
    }
    std::sort(out.phases.begin(), out.phases.end(),
              [](const Frac& a, const Frac& b) { return a < b || (a == b && a.den < b.den); });
    return out;
}

ExpSumValue sym_kloosterman(const QuadForm2& q, const QuadForm2& t, const Mat2& c) {
    return sym_kloosterman_detail(q, t, c).sum;
}

// --- H sums --------------------------------------------------------------------

ExpSumValue h_sum(const QuadForm2& p, const QuadForm2& s, i64 c, HSign sign) {
    if (c < 1) throw std::invalid_argument("h_sum: c must be >= 1");
    ExpSumValue out;
    if (p.c != s.c) return out;  // delta_{s4 = p4}
    const i64 p1 = p.a, p2 = p.b, p4 = p.c;
    const i64 s1 = s.a, s2 = s.b, s4 = s.c;
    (void)p4;
    const i64 sg = (sign == HSign::plus) ? 1 : -1;

    std::complex<double> acc{0.0, 0.0};
    for (i64 d1 = 0; d1 < c; ++d1) {
        if (gcd_ll(d1, c) != 1 && c > 1) continue;
        i64 x, y;
        ext_gcd(d1 == 0 ? 1 : d1, c, x, y);  // c = 1: inverse is 0 anyway
        i64 d1bar = (c == 1) ? 0 : ((x % c) + c) % c;
        for (i64 d2 = 0; d2 < c; ++d2) {
            // (d1bar s4 d2^2 -+sg d1bar p2 d2 + s2 d2 + d1bar p1 + d1 s1) / c
            i64 n = 0;
            i64 d2sq = (i64)((i128)d2 * d2 % c);
            n = (n + (i64)((i128)d1bar * s4 % c * d2sq % c)) % c;
            n = (n - sg * (i64)((i128)d1bar * (((p2 % c) + c) % c) % c * d2 % c)) % c;
            n = (n + (i64)((i128)(((s2 % c) + c) % c) * d2 % c)) % c;
            n = (n + (i64)((i128)d1bar * (((p1 % c) + c) % c) % c)) % c;
            n = (n + (i64)((i128)d1 * (((s1 % c) + c) % c) % c)) % c;
            n = ((n % c) + c) % c;
            acc += e_of(Frac(n, c));
            out.terms += 1;
        }
    }
    // global irrational shift -+ p2 s2 / (2 c s4), independent of d1, d2
    double shift = -double(sg) * double(p2) * double(s2) / (2.0 * double(c) * double(s4));
    out.value = acc * e_of(shift);
    out.phase_denominator = c;
    return out;
}

// --- circle solutions and rank-1 pairs -------------------------------------------

std::vector<std::pair<i64, i64>> primitive_circle_solutions(i64 s) {
    std::vector<std::pair<i64, i64>> out;
    if (s < 1) return out;
    i64 r = (i64)std::sqrt(double(s));
    while (r * r > s) --r;
    while ((r + 1) * (r + 1) <= s) ++r;
    for (i64 x = -r; x <= r; ++x) {
        i64 y2 = s - x * x;
        i64 y = (i64)std::sqrt(double(y2));
        while (y * y > y2) --y;
        while ((y + 1) * (y + 1) <= y2) ++y;
        if (y * y != y2) continue;
        if (gcd_ll(x, y) == 1) {
            out.push_back({x, y});
            if (y != 0) out.push_back({x, -y});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// det +1 completion of bottom row (r0, r1): top row (a, b) with a r1 - b r0 = 1,
// reduced so the free unipotent parameter is canonical (minimal non-negative).
Mat2 complete_bottom_row(i64 r0, i64 r1) {
    i64 x, y;
    ext_gcd(r1, r0, x, y);  // x r1 + y r0 = 1
    i64 a = x, b = -y;      // a r1 - b r0 = 1
    // top row defined mod t*(r0, r1); reduce first nonzero coordinate
    if (r0 != 0) {
        i64 t = a / r0;
        if ((a % r0 != 0) && ((a < 0) != (r0 < 0))) --t;
        a -= t * r0;
        b -= t * r1;
    } else {
        i64 t = b / r1;
        if ((b % r1 != 0) && ((b < 0) != (r1 < 0))) --t;
        b -= t * r1;
    }
    return Mat2(a, b, r0, r1);
}

// det +1 completion with (v11, v21) as the first column; second column reduced
Mat2 complete_first_column(i64 v11, i64 v21) {
    i64 x, y;
    ext_gcd(v11, v21, x, y);  // x v11 + y v21 = 1
    // v11 v22 - v12 v21 = 1 with v22 = x, v12 = -y
    i64 v22 = x, v12 = -y;
    // second column defined mod t*(first column)
    if (v11 != 0) {
        i64 t = v12 / v11;
        if ((v12 % v11 != 0) && ((v12 < 0) != (v11 < 0))) --t;
        v12 -= t * v11;
        v22 -= t * v21;
    } else {
        i64 t = v22 / v21;
        if ((v22 % v21 != 0) && ((v22 < 0) != (v21 < 0))) --t;
        v22 -= t * v21;
    }
    return Mat2(v11, v12, v21, v22);
}

}  // namespace

QuadForm2 rank1_p_form(const Mat2& u, i64 n) {
    // P = n U U^T
    i64 p1 = n * (u.m[0] * u.m[0] + u.m[1] * u.m[1]);
    i64 p2 = 2 * n * (u.m[0] * u.m[2] + u.m[1] * u.m[3]);
    i64 p4 = n * (u.m[2] * u.m[2] + u.m[3] * u.m[3]);
    return QuadForm2(p1, p2, p4);
}

QuadForm2 rank1_s_form(const Mat2& v, i64 m) {
    // S = m (V^T V)^{-1} = m adj(V^T V) since det V = +-1
    Mat2 g = v.transpose() * v;
    Mat2 a = g.adj();
    return QuadForm2(m * a.m[0], 2 * m * a.m[1], m * a.m[3]);
}

std::vector<Rank1Pair> rank1_pairs(i64 s, i64 m, i64 n) {
    std::vector<Rank1Pair> out;
    if (s < 1 || s % n != 0 || s % m != 0) return out;
    auto usol = primitive_circle_solutions(s / n);
    auto vsol = primitive_circle_solutions(s / m);
    if (usol.empty() || vsol.empty()) return out;

    // U modulo {+-I}: keep bottom rows with positive leading coordinate
    std::vector<std::pair<i64, i64>> urows;
    for (auto [x, y] : usol)
        if (x > 0 || (x == 0 && y > 0)) urows.push_back({x, y});

    for (auto [u21, u22] : urows) {
        Mat2 u = complete_bottom_row(u21, u22);
        for (auto [v11, v21] : vsol) {
            Mat2 v = complete_first_column(v11, v21);
            out.push_back({u, v});
        }
    }
    return out;
}

}  // namespace sp4
