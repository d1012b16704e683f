// Exact integer and rational 2x2 matrix algebra: quadratic forms, unimodular
// groups, lattice quotients and symplectic completions.
//
// All arithmetic in this module is exact (int64 with __int128 intermediates);
// floating point appears only in eigen_pair, where one square root is taken
// after the trace and determinant have been computed as exact rationals.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sp4 {

using i64 = long long;
using i128 = __int128;

i64 gcd_ll(i64 a, i64 b);
// g = a*x + b*y
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

// Reduced fraction modulo 1: den >= 1, 0 <= num < den, gcd(num,den) = 1.
// Used for the exact phases of the exponential sums.
struct Frac {
    i64 num = 0;
    i64 den = 1;

    Frac() = default;
    Frac(i64 n, i64 d);  // reduces n/d mod 1

    Frac operator+(const Frac& o) const;
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator<(const Frac& o) const { return (i128)num * o.den < (i128)o.num * den; }
    double value() const { return double(num) / double(den); }
};

// Row-major 2x2 integer matrix.
struct Mat2 {
    std::array<i64, 4> m{0, 0, 0, 0};  // [ m[0] m[1] ; m[2] m[3] ]

    Mat2() = default;
    Mat2(i64 a, i64 b, i64 c, i64 d) : m{a, b, c, d} {}
    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 zero() { return {0, 0, 0, 0}; }
    static Mat2 scalar(i64 s) { return {s, 0, 0, s}; }

    i64 det() const { return m[0] * m[3] - m[1] * m[2]; }
    Mat2 adj() const { return {m[3], -m[1], -m[2], m[0]}; }  // adj*M = det*I
    Mat2 transpose() const { return {m[0], m[2], m[1], m[3]}; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator-() const { return {-m[0], -m[1], -m[2], -m[3]}; }
    bool operator==(const Mat2& o) const { return m == o.m; }
    bool operator<(const Mat2& o) const { return m < o.m; }
    i64 norm2() const { return m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3]; }
    bool is_symmetric() const { return m[1] == m[2]; }
};

i64 trace_prod(const Mat2& a, const Mat2& b);  // Tr(a*b), exact

// Positive definite half-integral symmetric matrix T = [[a, b/2],[b/2, c]],
// element of the Fourier index set: a, c >= 1 and 4ac - b^2 > 0.
struct QuadForm2 {
    i64 a = 1, b = 0, c = 1;

    QuadForm2() = default;
    QuadForm2(i64 a_, i64 b_, i64 c_);  // throws std::invalid_argument if not pos. def.
    static QuadForm2 scalar(i64 m) { return {m, 0, m}; }

    i64 disc() const { return 4 * a * c - b * b; }     // 4 det(T) > 0
    Mat2 twice() const { return {2 * a, b, b, 2 * c}; }  // 2T, integral
    bool operator==(const QuadForm2& o) const { return a == o.a && b == o.b && c == o.c; }
};

// det T as an exact rational pair (num, den=4)
inline std::pair<i64, i64> det4(const QuadForm2& t) { return {t.disc(), 4}; }

// --- operations ------------------------------------------------------------

// All U in GL2(Z) with U^T T U = T. Exhaustive search inside the column-norm
// box |U_ij| <= ceil(sqrt(max(a,c)/lambda_min(T))).
std::vector<Mat2> aut_group(const QuadForm2& t);

// GL2(Z)-reduced representative with 0 <= b <= a <= c (unique per class).
QuadForm2 gl2_reduce(const QuadForm2& t);

bool is_equivalent(const QuadForm2& t, const QuadForm2& q);

struct SmithResult {
    Mat2 u, v;   // u*c*v = diag(d1, d2)
    i64 d1, d2;  // d1 | d2, d1 >= 1, d2 >= 1
};
SmithResult smith_normal_form(const Mat2& c);  // throws on det = 0

// Completion of a coprime symmetric pair (C, D) to [[A,B],[C,D]] in Sp4(Z).
// Returns nothing when (C,D) is not a coprime symmetric pair.
std::optional<std::pair<Mat2, Mat2>> symplectic_complete(const Mat2& c, const Mat2& d);

// true iff C D^T = D C^T and the six 2x2 minors of (C D) have gcd 1
bool is_coprime_symmetric_pair(const Mat2& c, const Mat2& d);

// The rank-3 lattice L_C = { D : C D^T = D C^T } together with its sublattice
// C*Lambda (Lambda = symmetric integral matrices) and the finite quotient.
struct SymLatticeBasis {
    std::array<Mat2, 3> gens;      // basis of L_C
    std::array<Mat2, 3> sub_gens;  // basis of C*Lambda
    std::array<Mat2, 3> rep_gens;  // adapted basis: quotient = sum y_i rep_gens[i]
    std::array<i64, 3> elem_div;   // elementary divisors e1 | e2 | e3
    i64 index() const { return elem_div[0] * elem_div[1] * elem_div[2]; }
    // representatives of L_C / C*Lambda, lexicographic in Smith coordinates
    std::vector<Mat2> representatives() const;
};
SymLatticeBasis compatible_d_lattice(const Mat2& c);  // throws on det = 0

// Eigenvalues of T C^{-1} Q C^{-T}: exact rational trace and determinant,
// then one square root. Returns (lambda_min, lambda_max), both > 0.
std::pair<double, double> eigen_pair(const QuadForm2& t, const QuadForm2& q, const Mat2& c);

// --- small exact linear algebra helpers ------------------------------------

// Solve G x = t over the integers; G is m x n (m, n <= 12). Returns any
// solution or nothing. Smith-based, exact.
std::optional<std::vector<i64>> solve_integer_linear(int m, int n,
                                                     const std::vector<i64>& g,
                                                     const std::vector<i64>& t);

}  // namespace sp4
