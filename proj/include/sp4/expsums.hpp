// Exact evaluation of the two exponential-sum families on the geometric side:
// the symplectic Kloosterman sum K(Q,T;C) over completable lower blocks
// D mod C*Lambda, and the rank-1 sums H^{+-}(P,S;c); plus the chi_{-4}
// character helpers.
//
// Every phase with a rational value is reduced mod 1 in exact integer
// arithmetic before any trigonometric call; the single irrational shift of
// H^{+-} is applied once as a global factor.
#pragma once

#include <complex>
#include <vector>

#include "sp4/intlat.hpp"

namespace sp4 {

struct CharValues {
    i64 p;
    int chi;       // chi_{-4}(p) in {-1, 0, 1}
    int lambda_p;  // 1 + chi
    int mu_p;      // chi
};

CharValues char_values(i64 p);  // throws on composite input
bool is_prime(i64 n);

struct ExpSumValue {
    std::complex<double> value{0.0, 0.0};
    i64 terms = 0;              // number of summands
    i64 phase_denominator = 1;  // lcm of the reduced exact-phase denominators
};

// K(Q,T;C) = sum_D e(Tr(A C^{-1} Q + C^{-1} D T)), D over representatives of
// L_C / C*Lambda admitting a symplectic completion (A,*;C,D).
ExpSumValue sym_kloosterman(const QuadForm2& q, const QuadForm2& t, const Mat2& c);

// as above, also returning the multiset of exact phases (for oracle tests)
struct KloostermanDetail {
    ExpSumValue sum;
    std::vector<Frac> phases;  // sorted
};
KloostermanDetail sym_kloosterman_detail(const QuadForm2& q, const QuadForm2& t, const Mat2& c);

enum class HSign { plus, minus };

// H^{+-}(P,S;c): zero unless s4 = p4; otherwise the double sum over
// d1 mod c (coprime, inverse dbar1) and d2 mod c with exact phase
//   (dbar1 s4 d2^2 -+ dbar1 p2 d2 + s2 d2 + dbar1 p1 + d1 s1)/c
// times the global factor e(-+ p2 s2 / (2 c s4)).
ExpSumValue h_sum(const QuadForm2& p, const QuadForm2& s, i64 c, HSign sign);

// all (x,y) with x^2 + y^2 = s and gcd(x,y) = 1
std::vector<std::pair<i64, i64>> primitive_circle_solutions(i64 s);

// Canonical (U, V) pairs for the rank-1 sum with scalar arguments Q = nI,
// T = mI and n(u21^2+u22^2) = m(v11^2+v21^2) = s. U is counted modulo {+-I}
// (canonical sign of the bottom row), V is not; both completions are the
// canonical det +1 extension with unipotent-reduced free row/column.
struct Rank1Pair {
    Mat2 u, v;
};
std::vector<Rank1Pair> rank1_pairs(i64 s, i64 m, i64 n);

// P = n U U^T and S = m (V^T V)^{-1} as elements of the Fourier index set.
QuadForm2 rank1_p_form(const Mat2& u, i64 n);
QuadForm2 rank1_s_form(const Mat2& v, i64 m);

}  // namespace sp4
